#include <catch2/catch_amalgamated.hpp>

#include "lct/direction.hpp"

using namespace lct;

TEST_CASE("primitive reduction") {
  CHECK(primitive(4, -6) == Dir{2, -3});
  CHECK(primitive(0, 5) == Dir{0, 1});
  CHECK(primitive(-7, 0) == Dir{-1, 0});
  CHECK(primitive_of(make_rational(1, 2), make_rational(-3, 4)) == Dir{2, -3});
}

TEST_CASE("ccw order is total on distinct directions") {
  std::vector<Dir> expected = {{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}, {-1, 2}, {-1, 1},
                               {-1, 0}, {-2, -1}, {-1, -1}, {0, -1}, {1, -2}, {1, -1}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      CAPTURE(i, j);
      CHECK(ccw_less(expected[i], expected[j]) == (i < j));
    }
  }
}

TEST_CASE("rotations and antipodes") {
  Dir d{3, 1};
  CHECK(rot_ccw(d) == Dir{-1, 3});
  CHECK(rot_cw(d) == Dir{1, -3});
  CHECK(antipodal(d, d.negated()));
  CHECK(same_direction(d, d));
  CHECK(cross(d, rot_ccw(d)) > 0);
  CHECK(dot(d, rot_ccw(d)) == 0);
}

TEST_CASE("arc midpoint lies strictly inside the arc") {
  // width < pi: mediant
  Dir lo{1, 0}, hi{0, 1};
  Dir mid = arc_midpoint(lo, hi);
  CHECK(mid == Dir{1, 1});
  CHECK(cross(lo, mid) > 0);
  CHECK(cross(mid, hi) > 0);
  // antipodal: quarter turn
  CHECK(arc_midpoint({1, 0}, {-1, 0}) == Dir{0, 1});
}

TEST_CASE("direction grids are nested and start with the compass") {
  auto g1 = direction_grid(1);
  CHECK(g1.size() == 8);
  auto g3 = direction_grid(3);
  // every order-1 direction appears, in the same prefix order
  for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g3[i] == g1[i]);
  for (const auto& d : g3) {
    CHECK(gcd(d.x, d.y) == 1);
    CHECK((d.x != 0 || d.y != 0));
  }
  // no duplicates
  for (std::size_t i = 0; i < g3.size(); ++i)
    for (std::size_t j = i + 1; j < g3.size(); ++j) CHECK(!(g3[i] == g3[j]));
}
