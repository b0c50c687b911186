#pragma once

#include <algorithm>
#include <vector>

#include "lct/direction.hpp"
#include "lct/geometry.hpp"

namespace lct {

// Membership in the extended tube reduces to finding a direction w on the
// circle with n . w > 0 for every condition normal n: writing lambda with
// direction w, Im(lambda*u_j) > 0 iff (Im u_j, Re u_j) . w > 0 and
// Im(v_j/lambda) > 0 iff (Im v_j, -Re v_j) . w > 0, independent of |lambda|.

enum class CondKind { u_cond, v_cond };

struct SourceTag {
  CondKind kind;
  int index;

  friend bool operator==(const SourceTag& a, const SourceTag& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator<(const SourceTag& a, const SourceTag& b) {
    if (a.index != b.index) return a.index < b.index;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  }
};

inline std::string to_string(const SourceTag& t) {
  return std::string(t.kind == CondKind::u_cond ? "U" : "V") + std::to_string(t.index);
}

struct HalfPlaneNormal {
  Rational nx;
  Rational ny;
  SourceTag source;

  bool is_zero() const { return nx == 0 && ny == 0; }
  Dir direction() const { return primitive_of(nx, ny); }
};

// Condition normals of a difference configuration, in the fixed scan order
// U0, V0, U1, V1, ...
inline std::vector<HalfPlaneNormal> membership_normals(const DiffConfig& cfg) {
  std::vector<HalfPlaneNormal> out;
  out.reserve(2 * cfg.diffs.size());
  for (int j = 0; j < cfg.size(); ++j) {
    const auto& d = cfg.diffs[j];
    out.push_back({d.u.im, d.u.re, {CondKind::u_cond, j}});
    out.push_back({d.v.im, -d.v.re, {CondKind::v_cond, j}});
  }
  return out;
}

struct SolveResult {
  enum class Kind { feasible, infeasible, degenerate };

  Kind kind = Kind::feasible;
  Dir witness{1, 0};                  // valid when feasible
  std::vector<HalfPlaneNormal> core;  // 2 or 3 normals when infeasible
  SourceTag degenerate_source{CondKind::u_cond, 0};
};

namespace detail {

struct DistinctDir {
  Dir dir;
  int rep;  // index of the first normal with this direction
};

inline std::vector<HalfPlaneNormal> pick_core(const std::vector<HalfPlaneNormal>& normals,
                                              std::vector<int> reps) {
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    return normals[a].source < normals[b].source;
  });
  std::vector<HalfPlaneNormal> core;
  for (int r : reps) core.push_back(normals[r]);
  return core;
}

}  // namespace detail

// Decides whether some direction w satisfies n . w > 0 for all normals.
// Feasible instances get a canonical primitive integer witness (the mediant
// of the admissible arc's endpoints); infeasible ones get a zero-normal
// source or a core of at most 3 normals that is unsatisfiable on its own.
inline SolveResult solve_common_direction(const std::vector<HalfPlaneNormal>& normals) {
  SolveResult res;
  for (const auto& n : normals) {
    if (n.is_zero()) {
      res.kind = SolveResult::Kind::degenerate;
      res.degenerate_source = n.source;
      return res;
    }
  }
  if (normals.empty()) return res;  // no conditions: every direction works

  // Distinct directions in CCW order, each with its first representative.
  std::vector<detail::DistinctDir> dirs;
  for (int i = 0; i < static_cast<int>(normals.size()); ++i) {
    Dir d = normals[i].direction();
    bool seen = false;
    for (const auto& e : dirs)
      if (e.dir == d) {
        seen = true;
        break;
      }
    if (!seen) dirs.push_back({d, i});
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const detail::DistinctDir& a, const detail::DistinctDir& b) {
              return ccw_less(a.dir, b.dir);
            });
  const int k = static_cast<int>(dirs.size());

  if (k == 1) {
    res.witness = dirs[0].dir;
    return res;
  }

  // A CCW gap between consecutive directions exceeds pi iff their cross
  // product is negative; at most one gap can, and its presence is exactly
  // feasibility. The admissible arc then runs from rot_cw(gap start) to
  // rot_ccw(gap end) and the witness is the mediant of those endpoints.
  for (int i = 0; i < k; ++i) {
    const Dir& a = dirs[i].dir;
    const Dir& b = dirs[(i + 1) % k].dir;
    if (cross(a, b) < 0) {
      res.witness = primitive(a.y - b.y, b.x - a.x);
      return res;
    }
  }

  res.kind = SolveResult::Kind::infeasible;

  // Antipodal pair: two conditions demanding opposite half-planes.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (antipodal(dirs[i].dir, dirs[j].dir)) {
        res.core = detail::pick_core(normals, {dirs[i].rep, dirs[j].rep});
        return res;
      }
    }
  }

  // Otherwise three directions positively span the plane: walk from the
  // first sorted direction to where the CCW distance passes pi.
  int t = 0;
  while (t + 1 < k && cross(dirs[0].dir, dirs[t + 1].dir) > 0) ++t;
  res.core = detail::pick_core(normals, {dirs[0].rep, dirs[t].rep, dirs[t + 1].rep});
  return res;
}

// Independent feasibility probe used to re-verify certificates. If the
// system is feasible, one of these candidate directions must witness it:
// a normal's own direction, or the mediant of the admissible-arc endpoints
// induced by an ordered pair of normals. Everything is checked by direct
// sign evaluation, with no shared code path with the solver above.
inline bool feasible_by_candidates(const std::vector<HalfPlaneNormal>& normals) {
  if (normals.empty()) return true;
  std::vector<Dir> prim;
  prim.reserve(normals.size());
  for (const auto& n : normals) {
    if (n.is_zero()) return false;
    prim.push_back(n.direction());
  }
  auto satisfies_all = [&](const Dir& w) {
    for (const auto& d : prim)
      if (dot(d, w) <= 0) return false;
    return true;
  };
  for (const auto& d : prim)
    if (satisfies_all(d)) return true;
  for (const auto& a : prim) {
    for (const auto& b : prim) {
      Int wx = a.y - b.y, wy = b.x - a.x;
      if (wx == 0 && wy == 0) continue;
      if (satisfies_all({wx, wy})) return true;
    }
  }
  return false;
}

// Exhaustive sign analysis of a claimed infeasible core (size <= 3).
inline bool core_unsatisfiable(const std::vector<HalfPlaneNormal>& core) {
  return !core.empty() && !feasible_by_candidates(core);
}

}  // namespace lct
