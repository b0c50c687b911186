#pragma once

#include <string>
#include <vector>

#include "lct/union_domain.hpp"

namespace lct {

// Order classes of m-point functions over space-time dimension s:
//   A (lower):        m <= s + 1
//   C (high):         m >  s(s-1)/2 + 2
//   B (intermediate): everything between.
// The two threshold curves never cross for s >= 2, so the classes partition
// the (s, m) table; for s = 2 they touch and class B is empty.
enum class OrderClass { lower, intermediate, high };

inline char order_class_letter(OrderClass c) {
  switch (c) {
    case OrderClass::lower: return 'A';
    case OrderClass::intermediate: return 'B';
    case OrderClass::high: return 'C';
  }
  return '?';
}

inline OrderClass classify_order(long long s, long long m) {
  require(s >= 2, Errc::bad_dimension, "need s >= 2, got " + std::to_string(s));
  require(m >= 2, Errc::bad_order, "need m >= 2, got " + std::to_string(m));
  if (m <= s + 1) return OrderClass::lower;
  if (m > s * (s - 1) / 2 + 2) return OrderClass::high;
  return OrderClass::intermediate;
}

struct SubConfigViolation {
  std::vector<int> kept;  // point indices of the failing sub-configuration
};

struct ProjectionReport {
  int m = 0;
  int r = 0;
  bool vacuous = false;          // m - r < 2 leaves nothing to check
  int subsets_checked = 0;
  std::vector<SubConfigViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Restriction consequence of the envelope inclusion, on the computable union
// domains: every order-preserving selection of m - r points from a union
// member must itself be a union member. Selections are enumerated once as
// index subsets; the union over P_{m-r} absorbs the per-sigma reorderings.
inline ProjectionReport projection_inclusion_check(const PointConfig& cfg, int r,
                                                   int max_m = kDefaultMaxM) {
  const int m = cfg.m();
  check_union_arity(m, max_m);
  require(r > 0 && r < m, Errc::bad_r,
          "need 0 < r < m, got r = " + std::to_string(r));
  require(union_membership(cfg, UnionMode::first, max_m).member(), Errc::not_member,
          "configuration is not a union member");

  ProjectionReport report;
  report.m = m;
  report.r = r;
  const int keep = m - r;
  if (keep < 2) {
    report.vacuous = true;
    return report;
  }

  std::vector<int> idx(keep);
  for (int i = 0; i < keep; ++i) idx[i] = i;
  for (;;) {
    PointConfig sub;
    sub.points.reserve(keep);
    for (int i : idx) sub.points.push_back(cfg.points[i]);
    ++report.subsets_checked;
    if (!union_membership(sub, UnionMode::first, max_m).member())
      report.violations.push_back({idx});

    // next combination in lexicographic order
    int pos = keep - 1;
    while (pos >= 0 && idx[pos] == m - keep + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < keep; ++i) idx[i] = idx[i - 1] + 1;
  }
  return report;
}

struct PairwiseCutReport {
  int pairs_checked = 0;
  std::vector<std::pair<int, int>> cut_hits;  // pairs with (z_i - z_j)^2 on [0, inf)

  bool ok() const { return cut_hits.empty(); }
};

// Cut-avoidance corollary: every pairwise invariant of a union member stays
// off [0, infinity).
inline PairwiseCutReport pairwise_cut_avoidance(const PointConfig& cfg,
                                                int max_m = kDefaultMaxM) {
  check_union_arity(cfg.m(), max_m);
  require(union_membership(cfg, UnionMode::first, max_m).member(), Errc::not_member,
          "configuration is not a union member");
  PairwiseCutReport report;
  for (int i = 0; i < cfg.m(); ++i) {
    for (int j = i + 1; j < cfg.m(); ++j) {
      ++report.pairs_checked;
      if (on_cut(minkowski_square(pairwise_difference(cfg, i, j))))
        report.cut_hits.emplace_back(i, j);
    }
  }
  return report;
}

}  // namespace lct
