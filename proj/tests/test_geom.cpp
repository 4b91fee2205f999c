#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pegdraw/geom.hpp"

using namespace pegdraw;

namespace {

// Small deterministic PRNG (splitmix64) for property tests.
struct rng64 {
  uint64_t s;
  explicit rng64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int irange(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Independent oracle: classify segment intersection by solving the parametric
// 2x2 system exactly (instead of the orientation-predicate route).
seg_relation oracle_segments(const pt& a, const pt& b, const pt& c, const pt& d) {
  pt r = b - a, s = d - c;
  rat denom = cross(r, s);
  auto within01 = [](const rat& t) { return sign(t) >= 0 && cmp(t, rat(1)) <= 0; };
  auto strict01 = [](const rat& t) { return sign(t) > 0 && cmp(t, rat(1)) < 0; };
  if (sign(denom) != 0) {
    rat t = cross(c - a, s) / denom;
    rat u = cross(c - a, r) / denom;
    if (!within01(t) || !within01(u)) return seg_relation::disjoint;
    if (strict01(t) && strict01(u)) return seg_relation::crossing;
    return seg_relation::touching;
  }
  if (sign(cross(c - a, r)) != 0) return seg_relation::disjoint;  // parallel, offset
  // Collinear: compare parameter intervals along r (or s if r degenerate).
  pt dir = (sign(r.x) != 0 || sign(r.y) != 0) ? r : s;
  rat pa = dot(a - a, dir), pb = dot(b - a, dir);
  rat pc = dot(c - a, dir), pd = dot(d - a, dir);
  rat lo1 = std::min(pa, pb), hi1 = std::max(pa, pb);
  rat lo2 = std::min(pc, pd), hi2 = std::max(pc, pd);
  rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
  int cres = cmp(lo, hi);
  if (cres > 0) return seg_relation::disjoint;
  if (cres == 0) return seg_relation::touching;
  return seg_relation::overlapping;
}

}  // namespace

TEST_CASE("orient basic cases") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) > 0);   // left
  CHECK(orient({0, 0}, {2, 2}, {1, 1}) == 0);  // collinear
  // Tiny perturbation resolved exactly.
  rat tiny = rat(1) / rat(bigint("10000000000000000000000000000000000000000"));
  CHECK(orient({0, 0}, {1, 0}, {1, -tiny}) < 0);  // right
}

TEST_CASE("orient properties on random points") {
  rng64 rng(12345);
  for (int it = 0; it < 200; ++it) {
    pt a{rat(rng.irange(-8, 8), rng.irange(1, 4)), rat(rng.irange(-8, 8), rng.irange(1, 4))};
    pt b{rat(rng.irange(-8, 8), rng.irange(1, 4)), rat(rng.irange(-8, 8), rng.irange(1, 4))};
    pt c{rat(rng.irange(-8, 8), rng.irange(1, 4)), rat(rng.irange(-8, 8), rng.irange(1, 4))};
    int o = orient(a, b, c);
    CHECK(orient(b, c, a) == o);
    CHECK(orient(c, a, b) == o);
    CHECK(orient(b, a, c) == -o);
    pt t{rat(3, 7), rat(-2, 5)};
    CHECK(orient(a + t, b + t, c + t) == o);
  }
}

TEST_CASE("segments_intersect spec cases") {
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, -1}, {1, 1}) == seg_relation::crossing);
  CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}) == seg_relation::touching);
  CHECK(segments_intersect({0, 0}, {2, 0}, {3, 0}, {4, 0}) == seg_relation::disjoint);
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}) == seg_relation::overlapping);
  // Endpoint resting on interior.
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 5}) == seg_relation::touching);
}

TEST_CASE("segments_intersect agrees with parametric oracle on a grid") {
  // All non-degenerate segments with endpoints in a 3x3 grid.
  std::vector<std::array<pt, 2>> segs;
  for (int x1 = 0; x1 < 3; ++x1)
    for (int y1 = 0; y1 < 3; ++y1)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int y2 = 0; y2 < 3; ++y2) {
          if (x1 == x2 && y1 == y2) continue;
          if (std::make_pair(x1, y1) > std::make_pair(x2, y2)) continue;
          segs.push_back({pt{x1, y1}, pt{x2, y2}});
        }
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i; j < segs.size(); ++j) {
      seg_relation got = segments_intersect(segs[i][0], segs[i][1], segs[j][0], segs[j][1]);
      seg_relation want = oracle_segments(segs[i][0], segs[i][1], segs[j][0], segs[j][1]);
      REQUIRE(got == want);
      // Symmetry.
      REQUIRE(segments_intersect(segs[j][0], segs[j][1], segs[i][0], segs[i][1]) == got);
    }
}

TEST_CASE("segment intersection point is exact") {
  pt p = segment_intersection_point({0, 0}, {2, 2}, {0, 2}, {2, 0});
  CHECK(p == pt{1, 1});
  pt q = segment_intersection_point({0, 0}, {1, 3}, {0, 1}, {1, 0});
  CHECK(q == pt{rat(1, 4), rat(3, 4)});
}

TEST_CASE("point to segment distance") {
  CHECK(point_segment_dist2({0, 1}, {-1, 0}, {1, 0}) == rat(1));
  CHECK(point_segment_dist2({5, 0}, {-1, 0}, {1, 0}) == rat(16));  // clamps to endpoint
  CHECK(point_segment_dist2({3, 4}, {0, 0}, {0, 0}) == rat(25));   // degenerate
}

TEST_CASE("polygon area sign and simplicity") {
  polygon sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(sign(polygon_area2(sq)) > 0);
  std::reverse(sq.begin(), sq.end());
  CHECK(sign(polygon_area2(sq)) < 0);
  CHECK(polygon_simple(polygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_FALSE(polygon_simple(polygon{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));  // bowtie
  CHECK_FALSE(polygon_simple(polygon{{0, 0}, {2, 0}, {4, 0}}));          // flat
}

TEST_CASE("point_in_polygon matches exhaustive classification") {
  polygon hexagon{{0, 0}, {4, 0}, {6, 2}, {4, 4}, {0, 4}, {-2, 2}};
  // Brute-force oracle: walk a fine half-integer grid; classify by summing
  // crossing parity along a vertical ray instead (independent direction).
  for (int ix = -6; ix <= 14; ++ix)
    for (int iy = -2; iy <= 10; ++iy) {
      pt q{rat(ix, 2), rat(iy, 2)};
      bool on_b = false;
      for (size_t i = 0; i < hexagon.size(); ++i)
        if (on_segment(hexagon[i], hexagon[(i + 1) % hexagon.size()], q)) on_b = true;
      point_location got = point_in_polygon(q, hexagon);
      if (on_b) {
        REQUIRE(got == point_location::boundary);
        continue;
      }
      bool in = false;  // vertical-ray parity (downward ray)
      for (size_t i = 0; i < hexagon.size(); ++i) {
        pt a = hexagon[i], b = hexagon[(i + 1) % hexagon.size()];
        bool a_leftx = cmp(a.x, q.x) <= 0, b_leftx = cmp(b.x, q.x) <= 0;
        if (a_leftx != b_leftx) {
          int o = orient(a, b, q);
          if (b_leftx ? (o < 0) : (o > 0)) in = !in;
        }
      }
      REQUIRE(got == (in ? point_location::inside : point_location::outside));
    }
}

TEST_CASE("point_in_region spec cases") {
  region r;
  r.outer = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  r.holes.push_back(polygon{{4, 4}, {6, 4}, {6, 6}, {4, 6}});
  r.point_holes.push_back({2, 2});
  CHECK(point_in_region({1, 1}, r) == point_location::inside);
  CHECK(point_in_region({5, 5}, r) == point_location::outside);   // inside the hole
  CHECK(point_in_region({0, 0}, r) == point_location::boundary);  // polygon vertex
  CHECK(point_in_region({2, 2}, r) == point_location::boundary);  // point hole
  CHECK(point_in_region({-1, 5}, r) == point_location::outside);
  CHECK(point_in_region({4, 5}, r) == point_location::boundary);  // hole boundary
}

TEST_CASE("bisector_offset right angle gives the spec diagonal") {
  pt v{0, 0};
  pt out{1, 0}, in{0, 1};
  pt got = bisector_offset(v, out, in, rat(1));
  CHECK(got == pt{rat(1, 2), rat(1, 2)});
  // Monotone in eps: smaller eps lies strictly between v and the larger offset.
  pt small = bisector_offset(v, out, in, rat(1, 3));
  CHECK(on_segment(v, got, small));
  CHECK(small != v);
  CHECK(small != got);
}

TEST_CASE("bisector_offset reflex and straight corners") {
  pt v{0, 0};
  // Reflex: sector ccw from +x to -y spans 270 degrees; offset on reflex side.
  pt refl = bisector_offset(v, {1, 0}, {0, -1}, rat(1));
  CHECK(refl == pt{rat(-1, 2), rat(1, 2)});
  // Straight corner: interior to the left of travel.
  pt straight = bisector_offset(v, {1, 0}, {-1, 0}, rat(1));
  CHECK(straight == pt{0, 1});
  // Pendant wrap: points away from the edge.
  pt wrap = bisector_offset(v, {2, 0}, {2, 0}, rat(1), true);
  CHECK(wrap == pt{-1, 0});
  // Zero-angle spike between distinct parallel edges is rejected.
  CHECK_THROWS_AS(bisector_offset(v, {1, 0}, {2, 0}, rat(1)), error);
}

TEST_CASE("min_feature_separation on the unit square is 1") {
  feature_set f;
  f.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  f.segments = {{pt{0, 0}, pt{1, 0}},
                {pt{1, 0}, pt{1, 1}},
                {pt{1, 1}, pt{0, 1}},
                {pt{0, 1}, pt{0, 0}}};
  rat L = min_feature_separation(f);
  CHECK(cmp(L, rat(1)) <= 0);
  CHECK(cmp(L, rat(99, 100)) > 0);
}

TEST_CASE("min_feature_separation detects touching features") {
  feature_set f;
  f.points = {{0, 0}, {0, 0}};  // coincident vertices
  CHECK_THROWS_AS(min_feature_separation(f), error);
}

TEST_CASE("min_feature_separation lower-bounds an irrational distance") {
  feature_set f;  // two points at distance sqrt(2)
  f.points = {{0, 0}, {1, 1}};
  rat L = min_feature_separation(f);
  CHECK(cmp(L * L, rat(2)) <= 0);
  CHECK(cmp(L, rat(14, 10)) > 0);
}
