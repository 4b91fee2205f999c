#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <vector>

#include "pegdraw/rational.hpp"

namespace pegdraw {

/// Planar multigraph: n vertices, edges as endpoint pairs (loops and parallel
/// edges allowed).  Each edge e owns two darts 2e and 2e+1; dart 2e+s has tail
/// ev[e][s] and head ev[e][1-s]; rev(d) = d^1.
struct graph {
  int n = 0;
  std::vector<std::array<int, 2>> ev;

  graph() = default;
  explicit graph(int vertices) : n(vertices) {}

  int m() const { return static_cast<int>(ev.size()); }
  int darts() const { return 2 * m(); }
  int add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) fail(errc::invalid_instance, "edge endpoint out of range");
    ev.push_back({u, v});
    return m() - 1;
  }
  static int edge_of(int d) { return d >> 1; }
  static int rev(int d) { return d ^ 1; }
  int tail(int d) const { return ev[d >> 1][d & 1]; }
  int head(int d) const { return ev[d >> 1][1 - (d & 1)]; }
  bool is_loop(int e) const { return ev[e][0] == ev[e][1]; }
};

/// rot[v] = counterclockwise cyclic sequence of darts with tail v.
using rotation_system = std::vector<std::vector<int>>;

/// Throws unless rot is a valid rotation system of g.
inline void validate_rotation(const graph& g, const rotation_system& rot) {
  if (static_cast<int>(rot.size()) != g.n) fail(errc::invalid_instance, "rotation size mismatch");
  std::vector<char> seen(g.darts(), 0);
  for (int v = 0; v < g.n; ++v)
    for (int d : rot[v]) {
      if (d < 0 || d >= g.darts()) fail(errc::invalid_instance, "rotation dart out of range");
      if (seen[d]) fail(errc::invalid_instance, "dart repeated in rotation");
      seen[d] = 1;
      if (g.tail(d) != v) fail(errc::invalid_instance, "dart listed at wrong vertex");
    }
  for (int d = 0; d < g.darts(); ++d)
    if (!seen[d]) fail(errc::invalid_instance, "dart missing from rotation");
}

/// Connected components over vertices (edges connect their endpoints).
struct components {
  std::vector<int> comp;  // per vertex
  int count = 0;
};

inline components graph_components(const graph& g) {
  components c;
  c.comp.assign(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (int e = 0; e < g.m(); ++e) {
    adj[g.ev[e][0]].push_back(g.ev[e][1]);
    adj[g.ev[e][1]].push_back(g.ev[e][0]);
  }
  for (int s = 0; s < g.n; ++s) {
    if (c.comp[s] != -1) continue;
    int id = c.count++;
    std::deque<int> q{s};
    c.comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (c.comp[w] == -1) {
          c.comp[w] = id;
          q.push_back(w);
        }
    }
  }
  return c;
}

/// One facial walk: either a cyclic dart sequence (face to the LEFT of each
/// dart) or a single isolated vertex.  size() counts vertex occurrences.
struct facial_walk {
  std::vector<int> darts;
  int isolated_vertex = -1;
  int component = -1;
  size_t size() const { return darts.empty() ? 1 : darts.size(); }
};

/// All facial walks of (g, rot): dart-orbit walks ordered by minimum dart,
/// then isolated-vertex walks ordered by vertex id.
struct walk_set {
  std::vector<facial_walk> walks;
  std::vector<int> walk_of_dart;      // dart -> walk id
  std::vector<int> walk_of_isolated;  // vertex -> walk id (or -1)
  std::vector<std::vector<int>> walks_of_component;
};

inline walk_set facial_walks(const graph& g, const rotation_system& rot) {
  validate_rotation(g, rot);
  components comps = graph_components(g);
  walk_set ws;
  ws.walk_of_dart.assign(g.darts(), -1);
  ws.walk_of_isolated.assign(g.n, -1);
  // Position of each dart within its tail's rotation.
  std::vector<int> pos(g.darts(), -1);
  for (int v = 0; v < g.n; ++v)
    for (size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
  // face_next(d): previous dart in rotation at head(d), starting from rev(d).
  auto face_next = [&](int d) {
    int r = graph::rev(d);
    int v = g.tail(r);
    const auto& rv = rot[v];
    int i = pos[r];
    return rv[(i + rv.size() - 1) % rv.size()];
  };
  for (int d0 = 0; d0 < g.darts(); ++d0) {
    if (ws.walk_of_dart[d0] != -1) continue;
    facial_walk w;
    w.component = comps.comp[g.tail(d0)];
    int d = d0;
    do {
      ws.walk_of_dart[d] = static_cast<int>(ws.walks.size());
      w.darts.push_back(d);
      d = face_next(d);
    } while (d != d0);
    ws.walks.push_back(std::move(w));
  }
  for (int v = 0; v < g.n; ++v)
    if (rot[v].empty()) {
      facial_walk w;
      w.isolated_vertex = v;
      w.component = comps.comp[v];
      ws.walk_of_isolated[v] = static_cast<int>(ws.walks.size());
      ws.walks.push_back(std::move(w));
    }
  ws.walks_of_component.assign(comps.count, {});
  for (size_t i = 0; i < ws.walks.size(); ++i)
    ws.walks_of_component[ws.walks[i].component].push_back(static_cast<int>(i));
  return ws;
}

/// True iff Euler's formula n - m + f = 2 holds within every component.
inline bool is_planar_rotation(const graph& g, const rotation_system& rot) {
  walk_set ws = facial_walks(g, rot);
  components comps = graph_components(g);
  std::vector<int> nv(comps.count, 0), me(comps.count, 0), fw(comps.count, 0);
  for (int v = 0; v < g.n; ++v) nv[comps.comp[v]]++;
  for (int e = 0; e < g.m(); ++e) me[comps.comp[g.ev[e][0]]]++;
  for (const auto& w : ws.walks) fw[w.component]++;
  for (int c = 0; c < comps.count; ++c)
    if (nv[c] - me[c] + fw[c] != 2) return false;
  return true;
}

/// Topological embedding: rotations plus, per component, its outer facial walk
/// and the facial walk of another component it nests inside (-1 = top level,
/// i.e. the unbounded face).  Walk ids refer to facial_walks(g, rot).
struct topo_embedding {
  rotation_system rot;
  std::vector<int> outer_walk;
  std::vector<int> parent_walk;
};

/// Structural validation; throws error(errc::invalid_instance|not_planar) on failure.
inline void validate_embedding(const graph& g, const topo_embedding& emb) {
  validate_rotation(g, emb.rot);
  if (!is_planar_rotation(g, emb.rot)) fail(errc::not_planar, "rotation system is not planar");
  walk_set ws = facial_walks(g, emb.rot);
  components comps = graph_components(g);
  if (static_cast<int>(emb.outer_walk.size()) != comps.count ||
      static_cast<int>(emb.parent_walk.size()) != comps.count)
    fail(errc::invalid_instance, "embedding containment arrays sized wrong");
  for (int c = 0; c < comps.count; ++c) {
    int ow = emb.outer_walk[c];
    if (ow < 0 || ow >= static_cast<int>(ws.walks.size()) || ws.walks[ow].component != c)
      fail(errc::invalid_instance, "outer walk is not a walk of its component");
    int pw = emb.parent_walk[c];
    if (pw == -1) continue;
    if (pw < 0 || pw >= static_cast<int>(ws.walks.size()))
      fail(errc::invalid_instance, "parent walk out of range");
    const facial_walk& p = ws.walks[pw];
    if (p.component == c) fail(errc::invalid_instance, "component nested inside itself");
    if (p.isolated_vertex != -1)
      fail(errc::invalid_instance, "isolated-vertex walk cannot contain a component");
    if (emb.outer_walk[p.component] == pw)
      fail(errc::invalid_instance, "parent walk must be an inner walk of its component");
  }
  // Containment must be acyclic at the component level.
  std::vector<int> state(comps.count, 0);
  for (int c0 = 0; c0 < comps.count; ++c0) {
    int c = c0;
    std::vector<int> chain;
    while (c != -1 && state[c] == 0) {
      state[c] = 1;
      chain.push_back(c);
      int pw = emb.parent_walk[c];
      c = (pw == -1) ? -1 : ws.walks[pw].component;
      if (c != -1 && state[c] == 1) fail(errc::invalid_instance, "cyclic containment");
    }
    for (int x : chain) state[x] = 2;
  }
}

/// Faces of an embedded (possibly disconnected) graph.  Region 0 is the
/// unbounded face; bounded regions are anchored at inner walks, ordered by
/// anchor walk id.  region_of_walk[w] = the region walk w faces.
struct region_structure {
  std::vector<std::vector<int>> region_walks;
  std::vector<int> region_of_walk;
  std::vector<int> anchor_walk;  // per region; -1 for the unbounded region
};

inline region_structure build_regions(const graph& g, const topo_embedding& emb,
                                      const walk_set& ws) {
  (void)g;
  region_structure rs;
  size_t W = ws.walks.size();
  rs.region_of_walk.assign(W, -1);
  rs.anchor_walk.push_back(-1);
  rs.region_walks.emplace_back();
  std::vector<int> region_of_anchor(W, -1);
  for (size_t w = 0; w < W; ++w) {
    int c = ws.walks[w].component;
    if (emb.outer_walk[c] == static_cast<int>(w)) continue;  // outer walks anchor nothing
    region_of_anchor[w] = static_cast<int>(rs.anchor_walk.size());
    rs.anchor_walk.push_back(static_cast<int>(w));
    rs.region_walks.emplace_back();
    rs.region_of_walk[w] = region_of_anchor[w];
    rs.region_walks.back().push_back(static_cast<int>(w));
  }
  for (size_t w = 0; w < W; ++w) {
    int c = ws.walks[w].component;
    if (emb.outer_walk[c] != static_cast<int>(w)) continue;
    int pw = emb.parent_walk[c];
    int r = (pw == -1) ? 0 : region_of_anchor[pw];
    if (r < 0) fail(errc::invalid_instance, "parent walk does not anchor a region");
    rs.region_of_walk[w] = r;
    rs.region_walks[r].push_back(static_cast<int>(w));
  }
  return rs;
}

/// Disjoint-set union (used for face merging and elsewhere).
struct union_find {
  std::vector<int> p;
  explicit union_find(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : (p[x] = find(p[x])); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

namespace detail {

/// Orient and nest the components of a derived embedding.  Inputs: the walk
/// set of the new graph, for every new walk the id of the (merged) face class
/// it borders, and the class of the unbounded face.  BFS from the unbounded
/// class assigns each component its outer walk and parent walk.
inline void derive_containment(const walk_set& ws, const std::vector<int>& class_of_walk,
                               int unbounded_class, int component_count,
                               std::vector<int>& outer, std::vector<int>& parent) {
  size_t W = ws.walks.size();
  outer.assign(component_count, -1);
  parent.assign(component_count, -1);
  std::vector<std::vector<int>> walks_of_class;
  {
    int mx = -1;
    for (int c : class_of_walk) mx = std::max(mx, c);
    walks_of_class.assign(mx + 1, {});
    for (size_t w = 0; w < W; ++w) walks_of_class[class_of_walk[w]].push_back(static_cast<int>(w));
  }
  std::deque<int> queue;  // components whose outer walk is known
  for (int w : walks_of_class[unbounded_class]) {
    int c = ws.walks[w].component;
    if (outer[c] != -1) fail(errc::internal, "two walks of one component face the unbounded class");
    outer[c] = w;
    parent[c] = -1;
    queue.push_back(c);
  }
  std::vector<char> class_done(walks_of_class.size(), 0);
  class_done[unbounded_class] = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int w : ws.walks_of_component[c]) {
      if (w == outer[c]) continue;
      int cls = class_of_walk[w];
      if (class_done[cls]) fail(errc::internal, "face class anchored twice");
      class_done[cls] = 1;
      for (int w2 : walks_of_class[cls]) {
        if (w2 == w) continue;
        int c2 = ws.walks[w2].component;
        if (outer[c2] != -1) fail(errc::internal, "component oriented twice");
        outer[c2] = w2;
        parent[c2] = w;
        queue.push_back(c2);
      }
    }
  }
  for (int c = 0; c < component_count; ++c)
    if (outer[c] == -1) fail(errc::internal, "component unreachable from unbounded face");
}

}  // namespace detail

/// Subset of a graph: which vertices and edges to keep.  Every kept edge's
/// endpoints must be kept.
struct subgraph_selection {
  std::vector<char> keep_vertex;
  std::vector<char> keep_edge;
};

/// An embedded subgraph together with the relabelling used to compact ids.
struct sub_embedding {
  graph g;
  topo_embedding emb;
  std::vector<int> vmap, emap;            // old id -> new id, -1 if dropped
  std::vector<int> old_vertex, old_edge;  // new id -> old id
};

/// Embedding a subgraph inherits: rotations restrict; faces on the two sides
/// of each removed edge merge; components that come loose keep the merged face
/// they lie in as their containing face.
inline sub_embedding inherited_embedding(const graph& g, const topo_embedding& emb,
                                         const subgraph_selection& sel) {
  if (static_cast<int>(sel.keep_vertex.size()) != g.n ||
      static_cast<int>(sel.keep_edge.size()) != g.m())
    fail(errc::invalid_instance, "selection masks sized wrong");
  for (int e = 0; e < g.m(); ++e)
    if (sel.keep_edge[e] && (!sel.keep_vertex[g.ev[e][0]] || !sel.keep_vertex[g.ev[e][1]]))
      fail(errc::invalid_instance, "kept edge with dropped endpoint");
  walk_set ws = facial_walks(g, emb.rot);
  region_structure rs = build_regions(g, emb, ws);
  auto region_of_dart = [&](int d) { return rs.region_of_walk[ws.walk_of_dart[d]]; };

  // Merge the regions on the two sides of every removed edge.
  union_find uf(static_cast<int>(rs.anchor_walk.size()));
  for (int e = 0; e < g.m(); ++e)
    if (!sel.keep_edge[e]) uf.unite(region_of_dart(2 * e), region_of_dart(2 * e + 1));

  sub_embedding out;
  out.vmap.assign(g.n, -1);
  out.emap.assign(g.m(), -1);
  for (int v = 0; v < g.n; ++v)
    if (sel.keep_vertex[v]) {
      out.vmap[v] = out.g.n++;
      out.old_vertex.push_back(v);
    }
  for (int e = 0; e < g.m(); ++e)
    if (sel.keep_edge[e]) {
      out.emap[e] = out.g.add_edge(out.vmap[g.ev[e][0]], out.vmap[g.ev[e][1]]);
      out.old_edge.push_back(e);
    }
  out.emb.rot.assign(out.g.n, {});
  for (int v = 0; v < g.n; ++v) {
    if (out.vmap[v] == -1) continue;
    for (int d : emb.rot[v])
      if (sel.keep_edge[graph::edge_of(d)])
        out.emb.rot[out.vmap[v]].push_back(2 * out.emap[graph::edge_of(d)] + (d & 1));
  }

  walk_set ws2 = facial_walks(out.g, out.emb.rot);
  components comps2 = graph_components(out.g);
  std::vector<int> cls(ws2.walks.size(), -1);
  for (size_t w = 0; w < ws2.walks.size(); ++w) {
    const facial_walk& fw = ws2.walks[w];
    if (!fw.darts.empty()) {
      int nd = fw.darts[0];
      int old_d = 2 * out.old_edge[graph::edge_of(nd)] + (nd & 1);
      cls[w] = uf.find(region_of_dart(old_d));
    } else {
      int ov = out.old_vertex[fw.isolated_vertex];
      if (!emb.rot[ov].empty()) {
        cls[w] = uf.find(region_of_dart(emb.rot[ov][0]));
      } else {
        cls[w] = uf.find(rs.region_of_walk[ws.walk_of_isolated[ov]]);
      }
    }
  }
  detail::derive_containment(ws2, cls, uf.find(0), comps2.count, out.emb.outer_walk,
                             out.emb.parent_walk);
  return out;
}

/// Result of contracting a facial walk to a single vertex.
struct contract_result {
  graph g;
  topo_embedding emb;
  int merged_vertex = -1;                 // new id of the contraction vertex
  std::vector<int> vmap, emap;            // old -> new (-1 = removed / merged away)
  std::vector<int> old_vertex, old_edge;  // new -> old (merged vertex maps to -1)
};

/// Contract all edges of facial walk `walk_id` (its vertices become one new
/// vertex).  Non-walk edges survive; those with both endpoints on the walk
/// become loops.  The rotation at the contraction vertex lists surviving darts
/// in their order of occurrence along the walk (rotation splice).
inline contract_result contract_walk(const graph& g, const topo_embedding& emb, int walk_id) {
  walk_set ws = facial_walks(g, emb.rot);
  if (walk_id < 0 || walk_id >= static_cast<int>(ws.walks.size()))
    fail(errc::invalid_instance, "walk id out of range");
  const facial_walk& w = ws.walks[walk_id];

  contract_result out;
  out.vmap.assign(g.n, -1);
  out.emap.assign(g.m(), -1);

  if (w.isolated_vertex != -1) {  // size-1 walk: nothing to contract
    out.g = g;
    out.emb = emb;
    out.merged_vertex = w.isolated_vertex;
    for (int v = 0; v < g.n; ++v) {
      out.vmap[v] = v;
      out.old_vertex.push_back(v);
    }
    for (int e = 0; e < g.m(); ++e) {
      out.emap[e] = e;
      out.old_edge.push_back(e);
    }
    return out;
  }

  region_structure rs = build_regions(g, emb, ws);
  auto region_of_dart = [&](int d) { return rs.region_of_walk[ws.walk_of_dart[d]]; };

  // Mutable doubly-linked rotation (next/prev per dart) plus UF on vertices.
  int D = g.darts();
  std::vector<int> nxt(D, -1), prv(D, -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& rv = emb.rot[v];
    for (size_t i = 0; i < rv.size(); ++i) {
      nxt[rv[i]] = rv[(i + 1) % rv.size()];
      prv[rv[i]] = rv[(i + rv.size() - 1) % rv.size()];
    }
  }
  union_find vuf(g.n);
  std::vector<char> edge_gone(g.m(), 0);
  std::vector<char> edge_deleted(g.m(), 0);  // cycle-closing walk edges
  std::vector<char> dart_detached(D, 0);
  auto detach = [&](int d) {  // remove dart d from its rotation ring
    dart_detached[d] = 1;
    if (nxt[d] == d) return;  // singleton ring vanishes
    nxt[prv[d]] = nxt[d];
    prv[nxt[d]] = prv[d];
  };
  std::vector<char> walk_edge(g.m(), 0);
  for (int d : w.darts) walk_edge[graph::edge_of(d)] = 1;
  for (int d0 : w.darts) {
    int e = graph::edge_of(d0);
    if (edge_gone[e]) continue;  // bridge traversed twice
    int u = vuf.find(g.ev[e][0]), v = vuf.find(g.ev[e][1]);
    int du = 2 * e, dv = 2 * e + 1;  // tails ev[e][0] / ev[e][1]
    edge_gone[e] = 1;
    if (u == v) {  // already merged: the walk edge is a loop now; drop it
      edge_deleted[e] = 1;
      detach(du);
      detach(dv);
      continue;
    }
    // Merge v's ring into u's at the position of du: replace du by the
    // sequence after dv (exclusive), then drop both darts.
    int first = nxt[dv], last = prv[dv];
    bool v_has_rest = (first != dv);
    int before = prv[du], after = nxt[du];
    bool u_has_rest = (after != du);
    if (v_has_rest && u_has_rest) {
      nxt[before] = first;
      prv[first] = before;
      nxt[last] = after;
      prv[after] = last;
      dart_detached[du] = dart_detached[dv] = 1;
    } else if (v_has_rest) {  // u's ring was just du
      // v's remainder becomes the whole ring (already circular once dv cut).
      nxt[last] = first;
      prv[first] = last;
      dart_detached[du] = dart_detached[dv] = 1;
    } else {  // v's ring was just dv
      detach(du);
      dart_detached[dv] = 1;
    }
    vuf.unite(v, u);
  }
  // Contracting a tree edge keeps every face intact; only DELETING a
  // cycle-closing walk edge glues the two faces beside it together.  Merge
  // those classes for containment rederivation.
  union_find fuf(static_cast<int>(rs.anchor_walk.size()));
  for (int e = 0; e < g.m(); ++e)
    if (edge_deleted[e]) fuf.unite(region_of_dart(2 * e), region_of_dart(2 * e + 1));

  // Rebuild compact labels: surviving non-walk vertices in old order, merged
  // vertex last.
  std::vector<char> on_walk(g.n, 0);
  for (int d : w.darts) {
    on_walk[g.tail(d)] = 1;
    on_walk[g.head(d)] = 1;
  }
  for (int v = 0; v < g.n; ++v)
    if (!on_walk[v]) {
      out.vmap[v] = out.g.n++;
      out.old_vertex.push_back(v);
    }
  out.merged_vertex = out.g.n++;
  out.old_vertex.push_back(-1);
  auto new_vertex = [&](int oldv) {
    return on_walk[vuf.find(oldv)] || on_walk[oldv] ? out.merged_vertex : out.vmap[oldv];
  };
  for (int e = 0; e < g.m(); ++e) {
    if (edge_gone[e]) continue;
    out.emap[e] = out.g.add_edge(new_vertex(g.ev[e][0]), new_vertex(g.ev[e][1]));
    out.old_edge.push_back(e);
  }
  for (int v = 0; v < g.n; ++v)
    if (on_walk[v]) out.vmap[v] = out.merged_vertex;

  // Emit rotations by walking the surviving rings.
  out.emb.rot.assign(out.g.n, {});
  std::vector<char> emitted(D, 0);
  auto emit_ring = [&](int d0, int newv) {
    int d = d0;
    do {
      if (emitted[d]) fail(errc::internal, "rotation ring shared");
      emitted[d] = 1;
      out.emb.rot[newv].push_back(2 * out.emap[graph::edge_of(d)] + (d & 1));
      d = nxt[d];
    } while (d != d0);
  };
  // Start each surviving vertex's ring from its lowest surviving dart to keep
  // the output deterministic.
  for (int d = 0; d < D; ++d) {
    if (dart_detached[d] || emitted[d]) continue;
    int tv = new_vertex(g.tail(d));
    if (out.emb.rot[tv].empty()) emit_ring(d, tv);
  }

  walk_set ws2 = facial_walks(out.g, out.emb.rot);
  components comps2 = graph_components(out.g);
  std::vector<int> cls(ws2.walks.size(), -1);
  for (size_t wi = 0; wi < ws2.walks.size(); ++wi) {
    const facial_walk& fw = ws2.walks[wi];
    if (!fw.darts.empty()) {
      int nd = fw.darts[0];
      int old_d = 2 * out.old_edge[graph::edge_of(nd)] + (nd & 1);
      cls[wi] = fuf.find(region_of_dart(old_d));
    } else {
      int ov = out.old_vertex[fw.isolated_vertex];
      if (ov == -1) {
        // The merged vertex ended isolated: it faces the class of the
        // contracted walk's own face.
        cls[wi] = fuf.find(rs.region_of_walk[walk_id]);
      } else if (!emb.rot[ov].empty()) {
        cls[wi] = fuf.find(region_of_dart(emb.rot[ov][0]));
      } else {
        cls[wi] = fuf.find(rs.region_of_walk[ws.walk_of_isolated[ov]]);
      }
    }
  }
  detail::derive_containment(ws2, cls, fuf.find(0), comps2.count, out.emb.outer_walk,
                             out.emb.parent_walk);
  return out;
}

/// Canonical form of a rotation system: each cyclic list rotated to start at
/// its smallest dart (equal embeddings compare equal componentwise).
inline rotation_system canonical_rotation(const rotation_system& rot) {
  rotation_system out = rot;
  for (auto& ring : out) {
    if (ring.empty()) continue;
    auto it = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), it, ring.end());
  }
  return out;
}

/// Compatibility of two embeddings over a shared prefix subgraph: vertices
/// 0..shared_n-1 and edges 0..shared_m-1 are identified across g1 and g2.
/// True iff both inherited embeddings of the shared graph coincide (labelled
/// rotations, outer walks and containment; reflections are distinct).
inline bool check_compatible(const graph& g1, const topo_embedding& e1, const graph& g2,
                             const topo_embedding& e2, int shared_n, int shared_m) {
  if (shared_n < 0 || shared_n > std::min(g1.n, g2.n) || shared_m < 0 ||
      shared_m > std::min(g1.m(), g2.m()))
    fail(errc::inconsistent_sharing, "shared prefix exceeds a graph");
  for (int e = 0; e < shared_m; ++e)
    if (g1.ev[e] != g2.ev[e])
      fail(errc::inconsistent_sharing, "shared edge has different endpoints");
  for (int e = 0; e < shared_m; ++e)
    if (g1.ev[e][0] >= shared_n || g1.ev[e][1] >= shared_n)
      fail(errc::inconsistent_sharing, "shared edge touches unshared vertex");
  auto restrict_to_shared = [&](const graph& g, const topo_embedding& emb) {
    subgraph_selection sel;
    sel.keep_vertex.assign(g.n, 0);
    sel.keep_edge.assign(g.m(), 0);
    for (int v = 0; v < shared_n; ++v) sel.keep_vertex[v] = 1;
    for (int e = 0; e < shared_m; ++e) sel.keep_edge[e] = 1;
    return inherited_embedding(g, emb, sel);
  };
  sub_embedding s1 = restrict_to_shared(g1, e1);
  sub_embedding s2 = restrict_to_shared(g2, e2);
  if (canonical_rotation(s1.emb.rot) != canonical_rotation(s2.emb.rot)) return false;
  // With equal rotations the walk enumerations coincide; compare containment.
  return s1.emb.outer_walk == s2.emb.outer_walk && s1.emb.parent_walk == s2.emb.parent_walk;
}

}  // namespace pegdraw
