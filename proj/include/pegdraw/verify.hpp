#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pegdraw/geom.hpp"
#include "pegdraw/graph.hpp"

namespace pegdraw {

/// A drawn edge: point sequence from the tail vertex's position to the head
/// vertex's position.  Interior points are potential bends.
struct polyline {
  std::vector<pt> pts;
};

/// A poly-line drawing of a graph.
struct drawing {
  graph g;
  std::vector<pt> vpos;
  std::vector<polyline> edges;  // one per edge, tail first
};

/// Drop exact duplicate consecutive points and interior points the polyline
/// passes straight through.  Reversal spikes are kept (they are defects the
/// planarity check must see).
inline std::vector<pt> normalize_polyline(const std::vector<pt>& in) {
  std::vector<pt> out;
  for (const pt& p : in)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  if (out.size() < 3) return out;
  std::vector<pt> res;
  res.push_back(out[0]);
  for (size_t i = 1; i + 1 < out.size(); ++i) {
    const pt& a = res.back();
    const pt& b = out[i];
    const pt& c = out[i + 1];
    if (orient(a, b, c) == 0 && dot(b - a, c - b) > 0) continue;  // straight through
    res.push_back(b);
  }
  res.push_back(out.back());
  return res;
}

/// Number of bends of a drawn edge: interior points with a direction change.
inline int count_bends(const polyline& e) {
  std::vector<pt> n = normalize_polyline(e.pts);
  return n.size() < 2 ? 0 : static_cast<int>(n.size()) - 2;
}

struct drawing_defect {
  std::string what;
  int edge_a = -1, edge_b = -1;  // offending edges (or -1)
  int vertex = -1;               // offending vertex (or -1)
  pt where;
};

struct planarity_report {
  bool ok = true;
  std::vector<drawing_defect> defects;
};

namespace detail {

struct seg_ref {
  int edge;
  int index;  // segment index within the edge's normalized polyline
  pt a, b;
  rat xmin, xmax, ymin, ymax;
};

inline void bounds(seg_ref& s) {
  s.xmin = std::min(s.a.x, s.b.x);
  s.xmax = std::max(s.a.x, s.b.x);
  s.ymin = std::min(s.a.y, s.b.y);
  s.ymax = std::max(s.a.y, s.b.y);
}

}  // namespace detail

/// Exact planarity check of a poly-line drawing.  Allowed contacts: segments
/// of one edge meeting at their shared joint; edges meeting at the drawn
/// position of a common endpoint.  Everything else (crossing, touching,
/// overlap, an edge passing through a vertex, coincident vertices) is a
/// defect.
inline planarity_report check_planar_polyline(const drawing& d) {
  planarity_report rep;
  auto defect = [&](std::string what, int ea, int eb, int v, pt where) {
    rep.ok = false;
    rep.defects.push_back({std::move(what), ea, eb, v, std::move(where)});
  };
  // Structural sanity and vertex distinctness.
  for (int v = 0; v < d.g.n; ++v)
    for (int w = v + 1; w < d.g.n; ++w)
      if (d.vpos[v] == d.vpos[w]) defect("coincident vertices", -1, -1, v, d.vpos[v]);
  std::vector<std::vector<pt>> norm(d.g.m());
  for (int e = 0; e < d.g.m(); ++e) {
    norm[e] = normalize_polyline(d.edges[e].pts);
    if (norm[e].size() < 2) {
      defect("degenerate polyline", e, -1, -1, d.vpos[d.g.ev[e][0]]);
      continue;
    }
    if (!(norm[e].front() == d.vpos[d.g.ev[e][0]]) || !(norm[e].back() == d.vpos[d.g.ev[e][1]]))
      defect("polyline endpoints disagree with vertex positions", e, -1, -1, norm[e].front());
  }
  if (!rep.ok) return rep;

  // No vertex position may lie on a segment except as that edge's own
  // terminal point; no interior polyline point may coincide with any vertex.
  for (int e = 0; e < d.g.m(); ++e) {
    const auto& p = norm[e];
    for (size_t i = 1; i + 1 < p.size(); ++i)
      for (int v = 0; v < d.g.n; ++v)
        if (p[i] == d.vpos[v]) defect("bend at a vertex position", e, -1, v, p[i]);
    for (size_t i = 0; i + 1 < p.size(); ++i)
      for (int v = 0; v < d.g.n; ++v) {
        if (!on_segment(d.vpos[v], p[i], p[i + 1])) continue;
        bool at_tail = i == 0 && d.vpos[v] == p.front() && d.g.ev[e][0] == v;
        bool at_head = i + 2 == p.size() && d.vpos[v] == p.back() && d.g.ev[e][1] == v;
        if (!at_tail && !at_head) defect("edge passes through a vertex", e, -1, v, d.vpos[v]);
      }
  }
  if (!rep.ok) return rep;

  // Pairwise segment tests with an x-interval sweep.
  std::vector<detail::seg_ref> segs;
  for (int e = 0; e < d.g.m(); ++e)
    for (size_t i = 0; i + 1 < norm[e].size(); ++i) {
      detail::seg_ref s{e, static_cast<int>(i), norm[e][i], norm[e][i + 1], 0, 0, 0, 0};
      detail::bounds(s);
      segs.push_back(std::move(s));
    }
  std::sort(segs.begin(), segs.end(),
            [](const detail::seg_ref& a, const detail::seg_ref& b) { return a.xmin < b.xmin; });
  auto shared_vertex_point = [&](int ea, int eb, const pt& p) {
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        if (d.g.ev[ea][s] == d.g.ev[eb][t] && d.vpos[d.g.ev[ea][s]] == p) return true;
    return false;
  };
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size() && segs[j].xmin <= segs[i].xmax; ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      if (t.ymin > s.ymax || t.ymax < s.ymin) continue;
      seg_relation rel = segments_intersect(s.a, s.b, t.a, t.b);
      if (rel == seg_relation::disjoint) continue;
      if (s.edge == t.edge) {
        int len = static_cast<int>(norm[s.edge].size()) - 1;
        bool consecutive = std::abs(s.index - t.index) == 1;
        bool loop_ends = d.g.is_loop(s.edge) &&
                         std::abs(s.index - t.index) == len - 1;  // first & last of a loop
        // Two segments sharing an endpoint meet only there unless collinear,
        // and the collinear case reports as overlapping.
        if ((consecutive || loop_ends) && rel == seg_relation::touching) continue;
        defect("edge self-intersection", s.edge, t.edge, -1, s.a);
      } else {
        if (rel == seg_relation::touching) {
          // Allowed only at a drawn shared endpoint of the two edges.
          bool sa = shared_vertex_point(s.edge, t.edge, s.a) &&
                    segments_intersect(s.a, s.a, t.a, t.b) != seg_relation::disjoint;
          bool sb = shared_vertex_point(s.edge, t.edge, s.b) &&
                    segments_intersect(s.b, s.b, t.a, t.b) != seg_relation::disjoint;
          bool ta = shared_vertex_point(s.edge, t.edge, t.a) &&
                    segments_intersect(t.a, t.a, s.a, s.b) != seg_relation::disjoint;
          bool tb = shared_vertex_point(s.edge, t.edge, t.b) &&
                    segments_intersect(t.b, t.b, s.a, s.b) != seg_relation::disjoint;
          if ((sa || sb) && (ta || tb)) continue;
          defect("edges touch outside a shared endpoint", s.edge, t.edge, -1, s.a);
        } else if (rel == seg_relation::overlapping) {
          defect("edges overlap", s.edge, t.edge, -1, s.a);
        } else {
          pt x = segment_intersection_point(s.a, s.b, t.a, t.b);
          defect("edges cross", s.edge, t.edge, -1, x);
        }
      }
    }
  }
  return rep;
}

/// Check that drawing d extends the fixed drawing: vertices 0..h_n-1 at the
/// exact given positions, edges 0..h_m-1 drawn as the exact straight segments.
inline bool check_extends(const drawing& d, const std::vector<pt>& h_pos, int h_n, int h_m) {
  if (h_n > d.g.n || h_m > d.g.m() || static_cast<int>(h_pos.size()) < h_n) return false;
  for (int v = 0; v < h_n; ++v)
    if (!(d.vpos[v] == h_pos[v])) return false;
  for (int e = 0; e < h_m; ++e) {
    std::vector<pt> n = normalize_polyline(d.edges[e].pts);
    if (n.size() != 2) return false;
    if (!(n[0] == d.vpos[d.g.ev[e][0]]) || !(n[1] == d.vpos[d.g.ev[e][1]])) return false;
  }
  return true;
}

namespace detail {

/// Exact counterclockwise angular comparison of direction vectors (nonzero).
inline bool angle_less(const pt& u, const pt& v) {
  auto half = [](const pt& p) {  // 0: upper (incl +x axis), 1: lower (incl -x axis)
    if (p.y != 0) return p.y > 0 ? 0 : 1;
    return p.x > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  int s = sign(cross(u, v));
  return s > 0;
}

/// First direction of a normalized polyline, from whichever end the dart uses.
inline pt dart_direction(const std::vector<pt>& line, bool from_tail) {
  if (from_tail) return line[1] - line[0];
  return line[line.size() - 2] - line.back();
}

/// The closed curve traced by a facial walk in the drawing (each dart's
/// polyline concatenated, joints deduplicated).
inline std::vector<pt> walk_curve(const drawing& d, const std::vector<std::vector<pt>>& norm,
                                  const facial_walk& w) {
  std::vector<pt> curve;
  for (int dart : w.darts) {
    const auto& line = norm[graph::edge_of(dart)];
    if ((dart & 1) == 0) {
      for (size_t i = 0; i + 1 < line.size(); ++i) curve.push_back(line[i]);
    } else {
      for (size_t i = line.size() - 1; i > 0; --i) curve.push_back(line[i]);
    }
  }
  return curve;
}

/// Twice the signed area of a closed (possibly non-simple) curve.
inline rat curve_area2(const std::vector<pt>& c) {
  rat a = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    const pt& p = c[i];
    const pt& q = c[(i + 1) % c.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

/// Horizontal-ray crossing parity of a point against a closed curve (which
/// may be non-simple).  The point must not lie on the curve; returns -1 if it
/// does.
inline int curve_parity(const std::vector<pt>& c, const pt& p) {
  int par = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    pt a = c[i];
    pt b = c[(i + 1) % c.size()];
    if (on_segment(p, a, b)) return -1;
    if (a.y > b.y) std::swap(a, b);
    if (!(a.y <= p.y && p.y < b.y)) continue;  // half-open rule
    if (orient(a, b, p) > 0) par ^= 1;         // edge crosses the ray right of p
  }
  return par;
}

}  // namespace detail

/// Check that the drawing realizes the given topological embedding: the
/// geometric rotation at every vertex equals emb's, each component's outer
/// walk is the geometrically outermost one, and nesting matches parent_walk.
/// Reflections do not pass.  Assumes the drawing already passed the planarity
/// check.
inline bool check_realizes_embedding(const drawing& d, const topo_embedding& emb) {
  if (static_cast<int>(emb.rot.size()) != d.g.n) return false;
  std::vector<std::vector<pt>> norm(d.g.m());
  for (int e = 0; e < d.g.m(); ++e) {
    norm[e] = normalize_polyline(d.edges[e].pts);
    if (norm[e].size() < 2) return false;
  }
  // Recover the geometric rotation at each vertex.
  for (int v = 0; v < d.g.n; ++v) {
    std::vector<int> darts;
    for (int e = 0; e < d.g.m(); ++e) {
      if (d.g.ev[e][0] == v) darts.push_back(2 * e);
      if (d.g.ev[e][1] == v) darts.push_back(2 * e + 1);
    }
    if (darts.size() != emb.rot[v].size()) return false;
    std::vector<pt> dir(darts.size());
    for (size_t i = 0; i < darts.size(); ++i)
      dir[i] = detail::dart_direction(norm[graph::edge_of(darts[i])], (darts[i] & 1) == 0);
    std::vector<size_t> idx(darts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return detail::angle_less(dir[a], dir[b]); });
    for (size_t i = 0; i + 1 < idx.size(); ++i)  // ties = coincident directions: invalid
      if (!detail::angle_less(dir[idx[i]], dir[idx[i + 1]]) &&
          !detail::angle_less(dir[idx[i + 1]], dir[idx[i]]))
        return false;
    std::vector<int> geo(darts.size());
    for (size_t i = 0; i < idx.size(); ++i) geo[i] = darts[idx[i]];
    // Compare cyclically with emb.rot[v].
    if (geo.empty()) continue;
    auto mn = std::min_element(geo.begin(), geo.end());
    std::rotate(geo.begin(), mn, geo.end());
    std::vector<int> want = emb.rot[v];
    auto mn2 = std::min_element(want.begin(), want.end());
    std::rotate(want.begin(), mn2, want.end());
    if (geo != want) return false;
  }
  // Walk-level checks.
  walk_set ws = facial_walks(d.g, emb.rot);
  components comps = graph_components(d.g);
  if (static_cast<int>(emb.outer_walk.size()) != comps.count ||
      static_cast<int>(emb.parent_walk.size()) != comps.count)
    return false;
  std::vector<std::vector<pt>> curves(ws.walks.size());
  for (size_t w = 0; w < ws.walks.size(); ++w)
    if (!ws.walks[w].darts.empty()) curves[w] = detail::walk_curve(d, norm, ws.walks[w]);
  // Outer walk of each component: unique walk with clockwise (negative) area,
  // or the single walk of the component.
  for (int c = 0; c < comps.count; ++c) {
    const auto& wl = ws.walks_of_component[c];
    int outer = -1;
    if (wl.size() == 1) {
      outer = wl[0];
    } else {
      for (int w : wl) {
        if (curves[w].empty()) continue;  // isolated-vertex walk can't be one of >=2? guard
        if (detail::curve_area2(curves[w]) < 0) {
          if (outer != -1) return false;  // two clockwise walks: not a plane drawing
          outer = w;
        }
      }
    }
    if (outer == -1 || emb.outer_walk[c] != outer) return false;
  }
  // Containment: innermost enclosing walk curve of a reference point of each
  // component must be the declared parent (or none).
  for (int c = 0; c < comps.count; ++c) {
    pt ref;
    bool have = false;
    for (int v = 0; v < d.g.n && !have; ++v)
      if (comps.comp[v] == c) {
        ref = d.vpos[v];
        have = true;
      }
    if (!have) return false;
    std::vector<int> enclosing;
    for (size_t w = 0; w < ws.walks.size(); ++w) {
      if (curves[w].empty() || ws.walks[w].component == c) continue;
      if (static_cast<int>(w) == emb.outer_walk[ws.walks[w].component]) continue;
      int par = detail::curve_parity(curves[w], ref);
      if (par == -1) return false;
      if (par == 1) enclosing.push_back(static_cast<int>(w));
    }
    int innermost = -1;
    for (int w : enclosing) {
      bool inside_all = true;
      for (int w2 : enclosing) {
        if (w2 == w) continue;
        int par = detail::curve_parity(curves[w2], d.vpos[d.g.tail(ws.walks[w].darts[0])]);
        if (par != 1) inside_all = false;
      }
      if (inside_all) {
        innermost = w;
        break;
      }
    }
    if (emb.parent_walk[c] != innermost) return false;
  }
  return true;
}

/// Count, per edge and per query point, the connected stretches of the drawn
/// edge inside the closed Euclidean ball of radius eps around the point.
/// Exact: a segment meets the ball iff its squared distance is <= eps^2, and
/// two consecutive segments' stretches join iff their shared joint is in the
/// ball.
inline std::vector<std::vector<int>> count_close_approaches(const drawing& d,
                                                            const std::vector<pt>& points,
                                                            const rat& eps) {
  if (eps <= 0) fail(errc::invalid_instance, "close-approach radius must be positive");
  rat eps2 = eps * eps;
  std::vector<std::vector<int>> out(d.g.m(), std::vector<int>(points.size(), 0));
  for (int e = 0; e < d.g.m(); ++e) {
    std::vector<pt> n = normalize_polyline(d.edges[e].pts);
    for (size_t q = 0; q < points.size(); ++q) {
      const pt& u = points[q];
      int runs = 0;
      bool prev_hit = false, prev_joint_in = false;
      for (size_t i = 0; i + 1 < n.size(); ++i) {
        bool hit = point_segment_dist2(u, n[i], n[i + 1]) <= eps2;
        if (hit && !(prev_hit && prev_joint_in)) ++runs;
        prev_hit = hit;
        prev_joint_in = dist2(n[i + 1], u) <= eps2;
      }
      out[e][q] = runs;
    }
  }
  return out;
}

}  // namespace pegdraw
