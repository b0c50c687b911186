#pragma once

#include <string>
#include <vector>

#include "lct/polynomial.hpp"
#include "lct/tube.hpp"

namespace lct {

// Real coordinates of a difference configuration, in the fixed order
// Re u_j, Im u_j, Re v_j, Im v_j per difference. All membership polynomials
// are written over these.
inline int cell_nvars(int m) { return 4 * (m - 1); }

inline std::vector<Rational> cell_coords(const DiffConfig& cfg) {
  std::vector<Rational> out;
  out.reserve(4 * cfg.diffs.size());
  for (const auto& d : cfg.diffs) {
    out.push_back(d.u.re);
    out.push_back(d.u.im);
    out.push_back(d.v.re);
    out.push_back(d.v.im);
  }
  return out;
}

// Integer coordinates under one common positive rescaling. Sign evaluation
// of homogeneous polynomials is unchanged and much cheaper.
inline std::vector<Int> cell_coords_scaled(const DiffConfig& cfg) {
  auto coords = cell_coords(cfg);
  Int scale = 1;
  for (const auto& c : coords) scale = lcm(scale, denominator(c));
  std::vector<Int> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(numerator(c) * (scale / denominator(c)));
  return out;
}

enum class Rel { gt, eq, lt };

inline const char* rel_name(Rel r) {
  switch (r) {
    case Rel::gt: return ">0";
    case Rel::eq: return "=0";
    case Rel::lt: return "<0";
  }
  return "?";
}

struct SignCondition {
  Polynomial poly;
  Rel rel = Rel::gt;

  bool holds_at(std::span<const Int> scaled_coords) const {
    int s = poly.evaluate_int(scaled_coords).sign();
    switch (rel) {
      case Rel::gt: return s > 0;
      case Rel::eq: return s == 0;
      case Rel::lt: return s < 0;
    }
    return false;
  }
  friend bool operator==(const SignCondition& a, const SignCondition& b) {
    return a.rel == b.rel && a.poly == b.poly;
  }
};

// Conjunction of sign conditions with a stratum label.
struct CellFormula {
  std::string label;
  std::vector<SignCondition> conditions;

  bool satisfied_by(const DiffConfig& cfg) const {
    auto coords = cell_coords_scaled(cfg);
    for (const auto& c : conditions)
      if (!c.holds_at(coords)) return false;
    return true;
  }
};

// Quantifier-free membership description: a disjunction of conjunctions.
struct InteriorFormula {
  int m = 2;
  std::vector<CellFormula> cells;

  bool satisfied_by(const DiffConfig& cfg) const {
    require(cfg.size() == m - 1, Errc::bad_arity,
            "formula is for m = " + std::to_string(m));
    auto coords = cell_coords_scaled(cfg);
    for (const auto& cell : cells) {
      bool ok = true;
      for (const auto& c : cell.conditions)
        if (!c.holds_at(coords)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }
};

namespace detail {

// A 2-vector of polynomials: a symbolic condition normal or direction.
struct PolyVec {
  Polynomial x, y;
};

inline Polynomial poly_dot(const PolyVec& a, const PolyVec& b) {
  return a.x * b.x + a.y * b.y;
}
inline Polynomial poly_cross(const PolyVec& a, const PolyVec& b) {
  return a.x * b.y - a.y * b.x;
}

inline PolyVec symbolic_normal(int nvars, const SourceTag& tag) {
  int base = 4 * tag.index;
  if (tag.kind == CondKind::u_cond)
    return {Polynomial::variable(nvars, base + 1), Polynomial::variable(nvars, base + 0)};
  return {Polynomial::variable(nvars, base + 3), -Polynomial::variable(nvars, base + 2)};
}

inline void push_unique(std::vector<SignCondition>& conds, SignCondition c) {
  for (const auto& existing : conds)
    if (existing == c) return;
  conds.push_back(std::move(c));
}

}  // namespace detail

// Eliminates the direction variable from the membership conditions: w can be
// chosen iff one of finitely many candidate directions works, namely a
// condition normal itself or the mediant of the admissible-arc endpoints
// spanned by an ordered pair of normals. Each candidate yields one
// conjunction of quadratic sign conditions; membership is their disjunction.
inline InteriorFormula interior_cell_formula(int m) {
  require(m >= 2, Errc::bad_arity, "need m >= 2, got " + std::to_string(m));
  const int nvars = cell_nvars(m);
  const int ncond = 2 * (m - 1);

  std::vector<detail::PolyVec> normals;
  normals.reserve(ncond);
  for (int j = 0; j < m - 1; ++j) {
    normals.push_back(detail::symbolic_normal(nvars, {CondKind::u_cond, j}));
    normals.push_back(detail::symbolic_normal(nvars, {CondKind::v_cond, j}));
  }

  InteriorFormula out;
  out.m = m;
  auto add_candidate = [&](const detail::PolyVec& w) {
    CellFormula cell;
    cell.label = "interior";
    for (const auto& n : normals)
      detail::push_unique(cell.conditions, {detail::poly_dot(n, w), Rel::gt});
    out.cells.push_back(std::move(cell));
  };

  for (const auto& n : normals) add_candidate(n);
  for (int a = 0; a < ncond; ++a) {
    for (int b = 0; b < ncond; ++b) {
      if (a == b) continue;
      // Mediant of rot_cw(N_a) and rot_ccw(N_b).
      detail::PolyVec w{normals[a].y - normals[b].y, normals[b].x - normals[a].x};
      add_candidate(w);
    }
  }
  return out;
}

// One direction group of the arrangement: a distinct condition-normal
// direction and the conditions pointing along it.
struct DirGroup {
  Dir dir;
  std::vector<SourceTag> sources;
};

// Open arc between consecutive boundary directions; the set of satisfied
// conditions is constant on it.
struct Arc {
  Dir lo, hi;
  Dir sample;
  std::vector<bool> satisfied;  // indexed like membership_normals
  bool all_satisfied = false;
};

struct Arrangement {
  std::vector<HalfPlaneNormal> normals;
  std::vector<DirGroup> groups;       // merged directions, CCW order
  std::vector<Dir> boundary;          // arc endpoints, CCW order
  std::vector<Arc> arcs;

  bool has_admissible_arc() const {
    for (const auto& a : arcs)
      if (a.all_satisfied) return true;
    return false;
  }
};

// Exact arrangement of the condition normals on the direction circle. Arc
// endpoints are the directions where some condition changes sign, i.e. the
// two rotations of each normal by a quarter turn.
inline Arrangement build_arrangement(const DiffConfig& cfg) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  for (int j = 0; j < cfg.size(); ++j) {
    require(!cfg.diffs[j].u.is_zero(), Errc::degenerate_coordinate,
            "u_" + std::to_string(j) + " = 0");
    require(!cfg.diffs[j].v.is_zero(), Errc::degenerate_coordinate,
            "v_" + std::to_string(j) + " = 0");
  }

  Arrangement arr;
  arr.normals = membership_normals(cfg);

  for (const auto& n : arr.normals) {
    Dir d = n.direction();
    bool merged = false;
    for (auto& g : arr.groups)
      if (g.dir == d) {
        g.sources.push_back(n.source);
        merged = true;
        break;
      }
    if (!merged) arr.groups.push_back({d, {n.source}});
  }
  std::sort(arr.groups.begin(), arr.groups.end(),
            [](const DirGroup& a, const DirGroup& b) { return ccw_less(a.dir, b.dir); });

  for (const auto& g : arr.groups) {
    for (Dir d : {rot_ccw(g.dir), rot_cw(g.dir)}) {
      bool seen = false;
      for (const auto& e : arr.boundary)
        if (e == d) {
          seen = true;
          break;
        }
      if (!seen) arr.boundary.push_back(d);
    }
  }
  std::sort(arr.boundary.begin(), arr.boundary.end(), ccw_less);

  const int nb = static_cast<int>(arr.boundary.size());
  for (int i = 0; i < nb; ++i) {
    Arc arc;
    arc.lo = arr.boundary[i];
    arc.hi = arr.boundary[(i + 1) % nb];
    arc.sample = arc_midpoint(arc.lo, arc.hi);
    arc.satisfied.reserve(arr.normals.size());
    bool all = true;
    for (const auto& n : arr.normals) {
      bool sat = n.nx * arc.sample.x + n.ny * arc.sample.y > 0;
      arc.satisfied.push_back(sat);
      all = all && sat;
    }
    arc.all_satisfied = all;
    arr.arcs.push_back(std::move(arc));
  }
  return arr;
}

// Boundary stratum label: C(j) for a single-difference cut degeneracy,
// JOINT(j, k) for a degeneracy across two difference indices.
struct BoundaryStratum {
  enum class Kind { cut, joint };
  Kind kind = Kind::cut;
  int j = 0;
  int k = -1;
  std::vector<SignCondition> active;

  std::string tag() const {
    if (kind == Kind::cut) return "C(" + std::to_string(j) + ")";
    return "JOINT(" + std::to_string(j) + "," + std::to_string(k) + ")";
  }
};

// Labels the active degeneracies of a non-member configuration. Strata
// require an equality to be active: a cut invariant (u_j v_j real >= 0,
// including null coordinates) or an antipodal condition pair across two
// differences. Strictly-signed non-members lie in the open complement and
// are rejected, as are members.
inline std::vector<BoundaryStratum> classify_boundary(const DiffConfig& cfg) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  MembershipCertificate cert = in_extended_tube(cfg);
  require(!cert.member(), Errc::not_on_boundary, "configuration is an interior member");

  const int nvars = cell_nvars(cfg.size() + 1);
  std::vector<BoundaryStratum> strata;

  for (int j = 0; j < cfg.size(); ++j) {
    const auto& d = cfg.diffs[j];
    GaussianRational inv = minkowski_square(d);
    if (!on_cut(inv)) continue;
    BoundaryStratum s;
    s.kind = BoundaryStratum::Kind::cut;
    s.j = j;
    const int base = 4 * j;
    auto var = [&](int i) { return Polynomial::variable(nvars, base + i); };
    if (d.u.is_zero()) {
      s.active.push_back({var(0), Rel::eq});
      s.active.push_back({var(1), Rel::eq});
    } else if (d.v.is_zero()) {
      s.active.push_back({var(2), Rel::eq});
      s.active.push_back({var(3), Rel::eq});
    } else {
      // Im(u v) = 0 and Re(u v) > 0.
      s.active.push_back({var(0) * var(3) + var(1) * var(2), Rel::eq});
      s.active.push_back({var(0) * var(2) - var(1) * var(3), Rel::gt});
    }
    strata.push_back(std::move(s));
  }

  if (cert.infeasible_core.size() == 2) {
    const SourceTag& a = cert.infeasible_core[0].source;
    const SourceTag& b = cert.infeasible_core[1].source;
    if (a.index != b.index) {
      BoundaryStratum s;
      s.kind = BoundaryStratum::Kind::joint;
      s.j = std::min(a.index, b.index);
      s.k = std::max(a.index, b.index);
      auto na = detail::symbolic_normal(nvars, a);
      auto nb = detail::symbolic_normal(nvars, b);
      s.active.push_back({detail::poly_cross(na, nb), Rel::eq});
      s.active.push_back({detail::poly_dot(na, nb), Rel::lt});
      strata.push_back(std::move(s));
    }
  }

  require(!strata.empty(), Errc::not_on_boundary,
          "non-member in the open sense: no active equality");
  return strata;
}

}  // namespace lct
