#pragma once

#include <vector>

#include "lct/direction.hpp"

namespace lct {

// Open convex cone in the 2D imaginary-part plane (y_u, y_v) of one
// difference. Normal forms: the full plane, the open sector swept CCW from
// lo to hi (width in (0, pi]), or a single ray. Sectors wider than pi are
// not convex and never arise.
struct ConeBase {
  enum class Kind { full, sector, ray };

  Kind kind = Kind::sector;
  Dir lo{1, 0};
  Dir hi{0, 1};

  static ConeBase full_plane() { return {Kind::full, {1, 0}, {0, 1}}; }
  static ConeBase ray(Dir d) { return {Kind::ray, d, d}; }
  static ConeBase sector(Dir lo, Dir hi) { return {Kind::sector, lo, hi}; }

  // Base of the forward cone: the open quadrant y_u > 0, y_v > 0.
  static ConeBase forward() { return sector({1, 0}, {0, 1}); }

  bool is_full() const { return kind == Kind::full; }

  ConeBase negated() const {
    if (kind == Kind::full) return *this;
    return {kind, lo.negated(), hi.negated()};
  }

  // Open membership. For a sector of width <= pi both conditions coincide
  // with "strictly inside"; for the half-plane case (hi = -lo) they agree.
  bool contains(const Rational& yu, const Rational& yv) const {
    if (kind == Kind::full) return true;
    if (yu == 0 && yv == 0) return false;
    Int scale = lcm(denominator(yu), denominator(yv));
    Dir p = primitive(numerator(yu) * (scale / denominator(yu)),
                      numerator(yv) * (scale / denominator(yv)));
    if (kind == Kind::ray) return same_direction(p, lo);
    return cross(lo, p) > 0 && cross(p, hi) > 0;
  }

  // Inward normals of the boundary rays; the sector is the intersection of
  // their open half-planes. Full plane: none. Half-plane: one.
  std::vector<Dir> boundary_normals() const {
    require(kind != Kind::ray, Errc::degenerate_base, "ray base bounds no open tube");
    if (kind == Kind::full) return {};
    Dir n_lo = rot_ccw(lo);
    Dir n_hi = rot_cw(hi);
    if (n_lo == n_hi) return {n_lo};
    return {n_lo, n_hi};
  }

  friend bool operator==(const ConeBase& a, const ConeBase& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::full) return true;
    return a.lo == b.lo && a.hi == b.hi;
  }

  // A representative interior direction (used when the cone contributes its
  // bulk, not just its edges, to a hull).
  Dir interior_sample() const {
    if (kind == Kind::ray) return lo;
    if (kind == Kind::full) return {1, 0};
    return arc_midpoint(lo, hi);
  }
};

inline std::string to_string(const ConeBase& b) {
  switch (b.kind) {
    case ConeBase::Kind::full: return "full";
    case ConeBase::Kind::ray:
      return "ray(" + b.lo.x.str() + "," + b.lo.y.str() + ")";
    case ConeBase::Kind::sector:
      return "sector(" + b.lo.x.str() + "," + b.lo.y.str() + ")..(" + b.hi.x.str() + "," +
             b.hi.y.str() + ")";
  }
  return "?";
}

// Interior of the conic hull of a set of generator directions: the full
// plane if no closed half-plane contains them all, otherwise the open
// minimal sector (a ray if they are all parallel).
inline ConeBase cone_from_generators(const std::vector<Dir>& gens) {
  require(!gens.empty(), Errc::empty_base, "no generators");
  std::vector<Dir> dirs;
  for (const auto& g : gens) {
    Dir d = primitive(g.x, g.y);
    bool seen = false;
    for (const auto& e : dirs)
      if (e == d) {
        seen = true;
        break;
      }
    if (!seen) dirs.push_back(d);
  }
  if (dirs.size() == 1) return ConeBase::ray(dirs[0]);
  std::sort(dirs.begin(), dirs.end(), ccw_less);
  const int k = static_cast<int>(dirs.size());

  // The minimal containing sector closes the largest CCW gap; a gap of
  // exactly pi still leaves a half-plane. No gap >= pi means the generators
  // positively span the plane.
  for (int i = 0; i < k; ++i) {
    const Dir& a = dirs[i];
    const Dir& b = dirs[(i + 1) % k];
    if (cross(a, b) < 0 || antipodal(a, b)) {
      if (antipodal(a, b)) {
        // Two antipodal rays alone span a line, which is not a cone here.
        require(k > 2, Errc::degenerate_base, "generators span a line");
      }
      return ConeBase::sector(b, a);
    }
  }
  return ConeBase::full_plane();
}

// Conic hull of a union of cone bases.
inline ConeBase conic_hull(const std::vector<ConeBase>& bases) {
  require(!bases.empty(), Errc::empty_base, "no bases");
  std::vector<Dir> gens;
  for (const auto& b : bases) {
    if (b.is_full()) return ConeBase::full_plane();
    gens.push_back(b.lo);
    if (b.kind == ConeBase::Kind::sector) {
      gens.push_back(b.hi);
      gens.push_back(b.interior_sample());
    }
  }
  return cone_from_generators(gens);
}

}  // namespace lct
