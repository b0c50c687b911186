#pragma once

#include <optional>
#include <vector>

#include "lct/cone.hpp"
#include "lct/permutation.hpp"
#include "lct/sampling.hpp"
#include "lct/tube.hpp"

namespace lct {

// Per-difference cone bases of an extended (hulled) tube.
struct ExtensionBases {
  std::vector<ConeBase> per_diff;

  bool any_full() const {
    for (const auto& b : per_diff)
      if (b.is_full()) return true;
    return false;
  }
};

// Tube-theorem step: per difference index, the convex (conic) hull of the
// bases contributed by every permuted copy. A copy sigma constrains the
// original difference z_j - z_{j+1} through the segment of sigma-differences
// it telescopes into, with a sign flip when sigma reverses j and j+1; the
// segment's bases enter as their hull, negated on reversal.
inline ExtensionBases convex_tube_extension(const std::vector<std::vector<ConeBase>>& bases,
                                            const std::vector<Permutation>& copies) {
  require(!bases.empty(), Errc::empty_base, "no difference indices");
  const int m = static_cast<int>(bases.size()) + 1;

  std::vector<ConeBase> base_at;  // one hull per position
  base_at.reserve(bases.size());
  for (const auto& list : bases) {
    require(!list.empty(), Errc::empty_base, "empty base list for a difference index");
    base_at.push_back(conic_hull(list));
  }

  std::vector<std::vector<ConeBase>> collected(bases.size());
  for (std::size_t j = 0; j < bases.size(); ++j)
    collected[j] = bases[j];

  for (const auto& sigma : copies) {
    require(sigma.m() == m, Errc::bad_arity,
            "permutation order " + std::to_string(sigma.m()) + ", expected " + std::to_string(m));
    std::vector<int> pos_of(m);
    for (int i = 0; i < m; ++i) pos_of[sigma.map[i]] = i;
    for (int j = 0; j + 1 < m; ++j) {
      int a = pos_of[j], b = pos_of[j + 1];
      bool forward = a < b;
      int lo = std::min(a, b), hi = std::max(a, b);
      std::vector<ConeBase> segment(base_at.begin() + lo, base_at.begin() + hi);
      ConeBase contribution = conic_hull(segment);
      collected[j].push_back(forward ? contribution : contribution.negated());
    }
  }

  ExtensionBases out;
  out.per_diff.reserve(collected.size());
  for (const auto& list : collected) out.per_diff.push_back(conic_hull(list));
  return out;
}

struct ExtensionVerdict {
  MembershipCertificate certificate;  // kind = extension
  bool over_extension = false;        // some hull base is the full plane
  bool cut_back_applied = true;
};

namespace detail {

// Condition normals on the direction circle for base-constrained membership:
// with lambda restricted to its direction, (Im(lambda u_j), Im(v_j/lambda))
// points along (U_j . w, V_j . w), so the base's inward normal p turns into
// the half-plane normal p_x U_j + p_y V_j on w.
struct ExtensionConditions {
  std::vector<HalfPlaneNormal> normals;
  std::optional<SourceTag> degenerate;
};

inline ExtensionConditions extension_conditions(const DiffConfig& diffs,
                                                const ExtensionBases& bases) {
  ExtensionConditions out;
  for (int j = 0; j < diffs.size(); ++j) {
    const auto& d = diffs.diffs[j];
    const Rational ux = d.u.im, uy = d.u.re;    // U_j
    const Rational vx = d.v.im, vy = -d.v.re;   // V_j
    auto boundary = bases.per_diff[j].boundary_normals();
    for (std::size_t slot = 0; slot < boundary.size(); ++slot) {
      const Dir& p = boundary[slot];
      // slot 0 is the lo-side normal, slot 1 the hi-side normal.
      SourceTag tag{slot == 0 ? CondKind::v_cond : CondKind::u_cond, j};
      Rational nx = Rational(p.x) * ux + Rational(p.y) * vx;
      Rational ny = Rational(p.x) * uy + Rational(p.y) * vy;
      if (nx == 0 && ny == 0) {
        if (!out.degenerate) out.degenerate = tag;
        continue;
      }
      out.normals.push_back({nx, ny, tag});
    }
  }
  return out;
}

}  // namespace detail

// Deterministic verification of an extension guess: some lambda direction
// must map every difference's imaginary parts into its hull base, and no
// difference invariant may sit on the cut [0, infinity). The second
// constraint is the cut-back that reins in over-extended (full-plane) bases.
inline ExtensionVerdict verify_extension(const PointConfig& candidate,
                                         const ExtensionBases& bases) {
  DiffConfig diffs = to_diffs(candidate);
  require(static_cast<std::size_t>(diffs.size()) == bases.per_diff.size(), Errc::wrong_arity,
          "candidate has " + std::to_string(diffs.size()) + " differences, bases have " +
              std::to_string(bases.per_diff.size()));

  ExtensionVerdict out;
  out.over_extension = bases.any_full();
  out.certificate.kind = QueryKind::extension;

  auto conds = detail::extension_conditions(diffs, bases);
  if (conds.degenerate) {
    out.certificate.degenerate_condition = conds.degenerate;
    return out;
  }

  SolveResult sol = solve_common_direction(conds.normals);
  if (sol.kind == SolveResult::Kind::infeasible) {
    out.certificate.infeasible_core = sol.core;
    return out;
  }
  if (sol.kind == SolveResult::Kind::degenerate) {
    out.certificate.degenerate_condition = sol.degenerate_source;
    return out;
  }

  for (int j = 0; j < diffs.size(); ++j) {
    if (on_cut(minkowski_square(diffs.diffs[j]))) {
      out.certificate.cut_back_index = j;
      return out;
    }
  }

  out.certificate.verdict = Verdict::member;
  out.certificate.witness = sol.witness;
  return out;
}

// Independent recheck of an extension certificate against its bases.
inline bool verify_extension_certificate(const PointConfig& candidate,
                                         const ExtensionBases& bases,
                                         const MembershipCertificate& cert) {
  if (cert.kind != QueryKind::extension) return false;
  DiffConfig diffs = to_diffs(candidate);
  if (static_cast<std::size_t>(diffs.size()) != bases.per_diff.size()) return false;
  auto conds = detail::extension_conditions(diffs, bases);

  if (cert.member()) {
    if (!cert.witness || conds.degenerate) return false;
    const Dir& w = *cert.witness;
    for (const auto& n : conds.normals)
      if (n.nx * w.x + n.ny * w.y <= 0) return false;
    for (const auto& d : diffs.diffs)
      if (on_cut(minkowski_square(d))) return false;
    return true;
  }
  if (cert.cut_back_index) {
    int j = *cert.cut_back_index;
    return j >= 0 && j < diffs.size() && on_cut(minkowski_square(diffs.diffs[j]));
  }
  if (cert.degenerate_condition) {
    return conds.degenerate && *conds.degenerate == *cert.degenerate_condition;
  }
  if (!cert.infeasible_core.empty()) {
    for (const auto& n : cert.infeasible_core) {
      bool found = false;
      for (const auto& own : conds.normals)
        if (own.source == n.source && own.nx == n.nx && own.ny == n.ny) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return cert.infeasible_core.size() <= 3 && core_unsatisfiable(cert.infeasible_core);
  }
  return false;
}

// Domain descriptor for the proposal stage: the union of permuted forward
// tubes over this permutation set is the "current" domain an extension guess
// must leave.
struct DomainDescriptor {
  int m = 2;
  std::vector<Permutation> perms;

  static DomainDescriptor identity_and_reversal(int m) {
    return {m, {Permutation::identity(m), Permutation::reversal(m)}};
  }
};

struct Proposal {
  enum class Status { emitted, rejected_member, rejected_cut };

  Status status = Status::emitted;
  PointConfig candidate;
  std::optional<Permutation> member_via;  // rejected_member: admitting copy
  std::optional<int> cut_index;           // rejected_cut: C-stratum difference
};

// Seed-deterministic guess stream. Draws mix real space-like patterns,
// half-real configurations, and generic complex ones; a draw is emitted only
// if it lies outside every permuted forward tube and off every cut.
inline std::vector<Proposal> propose_extension_points(const DomainDescriptor& descriptor,
                                                      std::uint64_t seed, int draws) {
  require(descriptor.m >= 2, Errc::too_few_points, "need m >= 2");
  require(!descriptor.perms.empty(), Errc::bad_arity, "empty permutation set");
  for (const auto& sigma : descriptor.perms)
    require(sigma.m() == descriptor.m, Errc::bad_arity, "permutation order mismatch");
  std::mt19937_64 rng(seed);
  std::vector<Proposal> out;
  out.reserve(draws);

  for (int draw = 0; draw < draws; ++draw) {
    const int k = descriptor.m - 1;
    DiffConfig diffs;
    switch (draw % 3) {
      case 0: {
        // Jost-patterned real differences: u > 0, v < 0.
        for (int j = 0; j < k; ++j)
          diffs.diffs.push_back({{random_positive_rational(rng), Rational(0)},
                                 {-random_positive_rational(rng), Rational(0)}});
        break;
      }
      case 1: {
        // Real u, complex v: imaginary parts sit on a coordinate axis.
        for (int j = 0; j < k; ++j)
          diffs.diffs.push_back({{random_nonzero_rational(rng), Rational(0)},
                                 random_nonzero_gaussian(rng)});
        break;
      }
      default: {
        diffs = random_diff_config(k, rng);
        break;
      }
    }

    Proposal p;
    p.candidate = from_diffs(diffs);
    for (const auto& sigma : descriptor.perms) {
      if (in_forward_tube(to_diffs(sigma.apply(p.candidate))).member()) {
        p.status = Proposal::Status::rejected_member;
        p.member_via = sigma;
        break;
      }
    }
    if (p.status == Proposal::Status::emitted) {
      for (int j = 0; j < diffs.size(); ++j) {
        if (on_cut(minkowski_square(diffs.diffs[j]))) {
          p.status = Proposal::Status::rejected_cut;
          p.cut_index = j;
          break;
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lct
