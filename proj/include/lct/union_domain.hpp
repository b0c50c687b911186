#pragma once

#include <random>
#include <utility>
#include <vector>

#include "lct/cells.hpp"
#include "lct/permutation.hpp"
#include "lct/sampling.hpp"
#include "lct/tube.hpp"

namespace lct {

inline constexpr int kDefaultMaxM = 8;

enum class UnionMode { first, all };

// Verdict for the union of permuted primitive extended tubes.
struct UnionVerdict {
  Verdict verdict = Verdict::non_member;
  std::vector<Permutation> admitting;
  std::vector<std::pair<Permutation, MembershipCertificate>> certificates;

  bool member() const { return verdict == Verdict::member; }
};

inline void check_union_arity(int m, int max_m) {
  require(m >= 2, Errc::too_few_points, "need at least 2 points, got " + std::to_string(m));
  require(m <= max_m, Errc::arity_guard,
          "m = " + std::to_string(m) + " exceeds the factorial guard " + std::to_string(max_m));
}

// Membership in U_sigma sigma(extended tube): enumerate P_m in lexicographic
// order, permute the point labels, recompute differences, and decide each
// primitive membership exactly.
inline UnionVerdict union_membership(const PointConfig& cfg, UnionMode mode = UnionMode::first,
                                     int max_m = kDefaultMaxM) {
  check_union_arity(cfg.m(), max_m);
  UnionVerdict out;
  for (const auto& sigma : all_permutations(cfg.m())) {
    MembershipCertificate cert = in_extended_tube(to_diffs(sigma.apply(cfg)));
    bool admits = cert.member();
    if (admits) {
      out.verdict = Verdict::member;
      out.admitting.push_back(sigma);
    }
    out.certificates.emplace_back(sigma, std::move(cert));
    if (admits && mode == UnionMode::first) break;
  }
  return out;
}

// Pairwise difference z_i - z_j of a point configuration.
inline LightConeVector pairwise_difference(const PointConfig& cfg, int i, int j) {
  return cfg.points[i] - cfg.points[j];
}

inline bool totally_spacelike(const PointConfig& cfg, std::pair<int, int>* offending = nullptr) {
  for (int i = 0; i < cfg.m(); ++i) {
    for (int j = i + 1; j < cfg.m(); ++j) {
      GaussianRational sq = minkowski_square(pairwise_difference(cfg, i, j));
      if (!(sq.im == 0 && sq.re < 0)) {
        if (offending) *offending = {i, j};
        return false;
      }
    }
  }
  return true;
}

struct LocalityCheck {
  UnionVerdict verdict;          // for the supplied configuration
  int random_samples = 0;        // extra seeded random space-like configs checked
  int random_failures = 0;       // must stay 0
};

// Microcausality surface: a real, totally space-like configuration must be a
// member of the permuted union. Checks the given configuration and, when
// samples > 0, that many seeded random totally space-like configurations of
// the same order.
inline LocalityCheck spacelike_locality_check(const PointConfig& cfg, int samples = 0,
                                              std::uint64_t seed = 0,
                                              int max_m = kDefaultMaxM) {
  check_union_arity(cfg.m(), max_m);
  for (const auto& p : cfg.points)
    require(p.is_real(), Errc::not_real_config, "configuration must be real");
  std::pair<int, int> bad;
  if (!totally_spacelike(cfg, &bad))
    fail(Errc::not_totally_spacelike,
         "pair (" + std::to_string(bad.first) + ", " + std::to_string(bad.second) +
             ") is not space-like");

  LocalityCheck out;
  out.verdict = union_membership(cfg, UnionMode::all, max_m);
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      PointConfig random_cfg = random_spacelike_config(cfg.m(), rng);
      ++out.random_samples;
      if (!union_membership(random_cfg, UnionMode::first, max_m).member())
        ++out.random_failures;
    }
  }
  return out;
}

struct ProbeCoverage {
  std::vector<Permutation> satisfying;  // permutations whose interior formula holds
  bool covered = false;
};

struct CoverageReport {
  std::vector<ProbeCoverage> probes;
  bool all_covered = true;
};

// Desk-scale satisfiability query: is the formula region inside the permuted
// union? Every probe must satisfy the formula; the report then exhibits, per
// probe, which permuted interior-formula disjuncts are true.
inline CoverageReport union_coverage_query(const CellFormula& formula, int m,
                                           const std::vector<PointConfig>& probes,
                                           int max_m = kDefaultMaxM) {
  check_union_arity(m, max_m);
  InteriorFormula interior = interior_cell_formula(m);
  auto perms = all_permutations(m);

  CoverageReport out;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    require(probes[i].m() == m, Errc::bad_arity,
            "probe " + std::to_string(i) + " has m = " + std::to_string(probes[i].m()));
    DiffConfig diffs = to_diffs(probes[i]);
    require(formula.satisfied_by(diffs), Errc::probe_outside_formula,
            "probe " + std::to_string(i) + " does not satisfy the formula");
    ProbeCoverage pc;
    for (const auto& sigma : perms) {
      if (interior.satisfied_by(to_diffs(sigma.apply(probes[i]))))
        pc.satisfying.push_back(sigma);
    }
    pc.covered = !pc.satisfying.empty();
    out.all_covered = out.all_covered && pc.covered;
    out.probes.push_back(std::move(pc));
  }
  return out;
}

}  // namespace lct
