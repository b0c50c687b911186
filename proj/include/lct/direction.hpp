#pragma once

#include <algorithm>
#include <vector>

#include "lct/rational.hpp"

namespace lct {

// A nonzero integer direction on the circle. Constructed via primitive() so
// gcd(|x|, |y|) = 1, which makes equality of directions structural.
struct Dir {
  Int x;
  Int y;

  friend bool operator==(const Dir& a, const Dir& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Dir& a, const Dir& b) { return !(a == b); }

  Dir negated() const { return {-x, -y}; }
};

inline Int cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const Dir& a, const Dir& b) { return a.x * b.x + a.y * b.y; }

inline Dir rot_ccw(const Dir& d) { return {-d.y, d.x}; }
inline Dir rot_cw(const Dir& d) { return {d.y, -d.x}; }

inline bool same_direction(const Dir& a, const Dir& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}
inline bool antipodal(const Dir& a, const Dir& b) {
  return cross(a, b) == 0 && dot(a, b) < 0;
}

inline Dir primitive(Int x, Int y) {
  require(x != 0 || y != 0, Errc::internal, "zero vector has no direction");
  Int g = gcd(x, y);
  return {x / g, y / g};
}

// Direction of an exact rational vector (clears denominators first).
inline Dir primitive_of(const Rational& nx, const Rational& ny) {
  Int scale = lcm(denominator(nx), denominator(ny));
  return primitive(numerator(nx) * (scale / denominator(nx)),
                   numerator(ny) * (scale / denominator(ny)));
}

// Octant index walking counterclockwise from the positive x axis:
// (+,0)=0, (+,+)=1, (0,+)=2, (-,+)=3, (-,0)=4, (-,-)=5, (0,-)=6, (+,-)=7.
inline int octant(const Dir& d) {
  int sx = d.x.sign(), sy = d.y.sign();
  if (sy == 0) return sx > 0 ? 0 : 4;
  if (sy > 0) {
    if (sx > 0) return 1;
    return sx == 0 ? 2 : 3;
  }
  if (sx < 0) return 5;
  return sx == 0 ? 6 : 7;
}

// Strict counterclockwise order from angle 0; a total order on distinct
// primitive directions.
inline bool ccw_less(const Dir& a, const Dir& b) {
  int qa = octant(a), qb = octant(b);
  if (qa != qb) return qa < qb;
  return cross(a, b) > 0;
}

// Interior direction of the open CCW arc from lo to hi (arc width <= pi;
// the antipodal case is the width-pi arc).
inline Dir arc_midpoint(const Dir& lo, const Dir& hi) {
  if (antipodal(lo, hi)) return rot_ccw(lo);
  return primitive(lo.x + hi.x, lo.y + hi.y);
}

// All primitive directions with |x|, |y| <= order, simplest first. Grids are
// nested in the order parameter, which gives resolution monotonicity.
inline std::vector<Dir> direction_grid(int order) {
  std::vector<Dir> out;
  for (int level = 1; level <= order; ++level) {
    for (int x = -level; x <= level; ++x) {
      for (int y = -level; y <= level; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != level) continue;
        if (x == 0 && y == 0) continue;
        if (gcd(Int(x), Int(y)) != 1) continue;
        out.push_back({Int(x), Int(y)});
      }
    }
  }
  return out;
}

}  // namespace lct
