#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "pegdraw/rational.hpp"

namespace pegdraw {

/// Exact rational point in the plane.
struct pt {
  rat x, y;
  pt() : x(0), y(0) {}
  pt(rat px, rat py) : x(std::move(px)), y(std::move(py)) {}
  friend pt operator+(const pt& a, const pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend pt operator-(const pt& a, const pt& b) { return {a.x - b.x, a.y - b.y}; }
  friend pt operator*(const rat& s, const pt& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const pt& a, const pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const pt& a, const pt& b) { return !(a == b); }
  friend bool operator<(const pt& a, const pt& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

inline rat cross(const pt& a, const pt& b) { return a.x * b.y - a.y * b.x; }
inline rat dot(const pt& a, const pt& b) { return a.x * b.x + a.y * b.y; }

/// Sign of the signed area of triangle (a,b,c): >0 ccw, <0 cw, 0 collinear.
inline int orient(const pt& a, const pt& b, const pt& c) { return sign(cross(b - a, c - a)); }

/// Squared euclidean distance.
inline rat dist2(const pt& a, const pt& b) { return dot(a - b, a - b); }

/// L1 norm.
inline rat l1(const pt& a) { return rat_abs(a.x) + rat_abs(a.y); }

/// v scaled to unit L1 norm; rejects the zero vector.
inline pt l1_dir(const pt& v) {
  rat n = l1(v);
  if (sign(n) == 0) fail(errc::degenerate_input, "zero-length direction");
  return {v.x / n, v.y / n};
}

inline pt rot90ccw(const pt& v) { return {-v.y, v.x}; }

/// True if q lies on the closed segment [a,b] (a==b allowed: point test).
inline bool on_segment(const pt& a, const pt& b, const pt& q) {
  if (orient(a, b, q) != 0) return false;
  return sign(dot(q - a, q - b)) <= 0;
}

/// Classification of how two closed segments meet.
enum class seg_relation {
  disjoint,     ///< no common point
  crossing,     ///< single common point interior to both
  touching,     ///< single common point, endpoint of at least one
  overlapping,  ///< collinear with a shared subsegment of positive length
};

/// Exact relation of segments [a,b] and [c,d]; degenerate (point) segments allowed.
inline seg_relation segments_intersect(const pt& a, const pt& b, const pt& c, const pt& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // All collinear (or a degenerate segment collinear with the other).
    auto proj = [&](const pt& p) -> rat {
      pt dir = b - a;
      if (sign(dir.x) == 0 && sign(dir.y) == 0) dir = d - c;
      if (sign(dir.x) == 0 && sign(dir.y) == 0) return rat(0);  // both degenerate
      return dot(p - a, dir);
    };
    rat lo1 = std::min(proj(a), proj(b)), hi1 = std::max(proj(a), proj(b));
    rat lo2 = std::min(proj(c), proj(d)), hi2 = std::max(proj(c), proj(d));
    rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    int c0 = cmp(lo, hi);
    if (c0 > 0) return seg_relation::disjoint;
    if (c0 == 0) return seg_relation::touching;
    return seg_relation::overlapping;
  }
  bool meet12 = (o1 * o2 <= 0), meet34 = (o3 * o4 <= 0);
  if (!(meet12 && meet34)) return seg_relation::disjoint;
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
    // An endpoint of one lies on the other; still need real incidence.
    if ((o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
        (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b)))
      return seg_relation::touching;
    return seg_relation::disjoint;
  }
  return seg_relation::crossing;
}

/// Exact intersection point of two properly crossing (or touching at a unique
/// point, non-collinear) segments.
inline pt segment_intersection_point(const pt& a, const pt& b, const pt& c, const pt& d) {
  rat denom = cross(b - a, d - c);
  if (sign(denom) == 0) fail(errc::internal, "intersection of parallel segments");
  rat t = cross(c - a, d - c) / denom;
  return a + t * (b - a);
}

/// Squared distance from point q to closed segment [a,b].
inline rat point_segment_dist2(const pt& q, const pt& a, const pt& b) {
  pt ab = b - a;
  rat len2 = dot(ab, ab);
  if (sign(len2) == 0) return dist2(q, a);
  rat t = dot(q - a, ab) / len2;
  if (sign(t) < 0) t = 0;
  if (cmp(t, rat(1)) > 0) t = 1;
  pt proj = a + t * ab;
  return dist2(q, proj);
}

/// Squared distance between two closed segments.
inline rat segment_segment_dist2(const pt& a, const pt& b, const pt& c, const pt& d) {
  if (segments_intersect(a, b, c, d) != seg_relation::disjoint) return rat(0);
  rat m = point_segment_dist2(a, c, d);
  m = std::min(m, point_segment_dist2(b, c, d));
  m = std::min(m, point_segment_dist2(c, a, b));
  m = std::min(m, point_segment_dist2(d, a, b));
  return m;
}

/// Simple polygon as a vertex loop (consecutive vertices joined, last to first).
using polygon = std::vector<pt>;

/// Twice the signed area; >0 for counterclockwise loops.
inline rat polygon_area2(const polygon& p) {
  rat s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
  return s;
}

/// True if the closed loop has no self-intersections beyond shared endpoints of
/// consecutive edges (O(k^2) exact test).
inline bool polygon_simple(const polygon& p) {
  size_t k = p.size();
  if (k < 3) return false;
  for (size_t i = 0; i < k; ++i)
    if (p[i] == p[(i + 1) % k]) return false;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      seg_relation r =
          segments_intersect(p[i], p[(i + 1) % k], p[j], p[(j + 1) % k]);
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) {
        if (r == seg_relation::overlapping || r == seg_relation::crossing) return false;
      } else if (r != seg_relation::disjoint) {
        return false;
      }
    }
  }
  return true;
}

enum class point_location { inside, outside, boundary };

/// Exact point-in-simple-polygon via crossing parity (boundary reported apart).
inline point_location point_in_polygon(const pt& q, const polygon& p) {
  size_t k = p.size();
  bool in = false;
  for (size_t i = 0; i < k; ++i) {
    const pt& a = p[i];
    const pt& b = p[(i + 1) % k];
    if (on_segment(a, b, q)) return point_location::boundary;
    // Count upward crossings of the leftward ray from q.
    bool a_below = cmp(a.y, q.y) <= 0, b_below = cmp(b.y, q.y) <= 0;
    if (a_below != b_below) {
      int o = orient(a, b, q);
      if (b_below ? (o < 0) : (o > 0)) in = !in;
    }
  }
  return in ? point_location::inside : point_location::outside;
}

/// A polygonal region: one outer boundary, polygonal holes, and isolated point
/// holes.  All polygon loops are stored counterclockwise.
struct region {
  polygon outer;
  std::vector<polygon> holes;
  std::vector<pt> point_holes;
};

/// Exact location of a point relative to a region (point holes count as boundary).
inline point_location point_in_region(const pt& q, const region& r) {
  for (const pt& h : r.point_holes)
    if (q == h) return point_location::boundary;
  point_location lo = point_in_polygon(q, r.outer);
  if (lo != point_location::inside) return lo;
  for (const polygon& h : r.holes) {
    point_location lh = point_in_polygon(q, h);
    if (lh == point_location::boundary) return point_location::boundary;
    if (lh == point_location::inside) return point_location::outside;
  }
  return point_location::inside;
}

/// Offset point for the corner at v between two incident edges, at L1-distance
/// eps from v along the (L1-normalized) interior bisector.  The interior
/// sector spans counterclockwise from direction v->toward_out to direction
/// v->toward_in.  With wrap=true the corner is a full turn around a pendant
/// edge (both directions must coincide) and the offset points away from it.
inline pt bisector_offset(const pt& v, const pt& toward_out, const pt& toward_in,
                          const rat& eps, bool wrap = false) {
  pt a = l1_dir(toward_out - v);
  pt b = l1_dir(toward_in - v);
  if (wrap) {
    if (a != b) fail(errc::internal, "wrap corner with distinct directions");
    return v + eps * pt(-a.x, -a.y);
  }
  int c = sign(cross(a, b));
  if (c == 0) {
    if (a == b) fail(errc::degenerate_corner, "zero interior angle at corner");
    return v + eps * rot90ccw(a);  // straight corner: interior is to the left
  }
  pt m = l1_dir(a + b);
  if (c < 0) m = pt(-m.x, -m.y);  // reflex corner: bisector on the reflex side
  return v + eps * m;
}

/// A feature set for separation bounds: points and segments with an adjacency
/// rule (features sharing an endpoint are not compared).
struct feature_set {
  std::vector<pt> points;
  std::vector<std::array<pt, 2>> segments;
};

/// Rational positive lower bound on the smallest distance between two
/// non-adjacent features (two segments not sharing an endpoint, a point and a
/// segment not having it as endpoint, or two distinct points).  Touching or
/// crossing non-adjacent features make the separation zero, reported as an
/// error since downstream offsets would be impossible.
inline rat min_feature_separation(const feature_set& f) {
  std::optional<rat> best2;  // min squared distance
  auto consider = [&](const rat& d2) {
    if (sign(d2) == 0) fail(errc::degenerate_input, "features touch: zero separation");
    if (!best2 || cmp(d2, *best2) < 0) best2 = d2;
  };
  const auto& P = f.points;
  const auto& S = f.segments;
  for (size_t i = 0; i < P.size(); ++i)
    for (size_t j = i + 1; j < P.size(); ++j) consider(dist2(P[i], P[j]));
  for (size_t i = 0; i < P.size(); ++i)
    for (const auto& s : S) {
      if (P[i] == s[0] || P[i] == s[1]) continue;
      consider(point_segment_dist2(P[i], s[0], s[1]));
    }
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j) {
      const auto &a = S[i], &b = S[j];
      if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) {
        // Shared endpoint: compare only the non-shared endpoints against the
        // other segment to still catch near-degenerate corners.
        continue;
      }
      consider(segment_segment_dist2(a[0], a[1], b[0], b[1]));
    }
  if (!best2) fail(errc::degenerate_input, "no feature pairs to separate");
  return sqrt_lower_bound(*best2);
}

}  // namespace pegdraw
