#pragma once

#include <optional>
#include <vector>

#include "lct/sampling.hpp"
#include "lct/tube.hpp"

namespace lct {

// Brute-force cross-checker. The grid directions are exact primitive integer
// vectors, so a positive answer is unconditionally trustworthy; a negative
// answer only means "not found at this resolution".
struct OracleConfig {
  int theta_steps = 64;     // grid resolution; box order is theta_steps / 8
  int modulus_samples = 4;  // r values per r-independence recheck
};

inline int oracle_box_order(const OracleConfig& oc) {
  require(oc.theta_steps >= 8, Errc::bad_arity,
          "theta_steps must be at least 8, got " + std::to_string(oc.theta_steps));
  return oc.theta_steps / 8;
}

struct OracleVerdict {
  bool found = false;
  std::optional<Dir> direction;
  int directions_tried = 0;
};

inline OracleVerdict oracle_extended_membership(const DiffConfig& cfg, const OracleConfig& oc) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  auto normals = membership_normals(cfg);

  // Integer rescaling of each normal keeps the conditions' signs and makes
  // the scan integer-only.
  std::vector<Dir> prim;
  prim.reserve(normals.size());
  for (const auto& n : normals) {
    if (n.is_zero()) return {};  // unsatisfiable condition: nothing to scan for
    prim.push_back(n.direction());
  }

  OracleVerdict out;
  for (const Dir& w : direction_grid(oracle_box_order(oc))) {
    ++out.directions_tried;
    bool ok = true;
    for (const auto& d : prim)
      if (dot(d, w) <= 0) {
        ok = false;
        break;
      }
    if (ok) {
      out.found = true;
      out.direction = w;
      return out;
    }
  }
  return out;
}

struct CutScanReport {
  int member_samples = 0;
  int cut_hits = 0;               // must stay 0
  int targets = 0;
  int constructions_ok = 0;
  int construction_failures = 0;  // must stay 0
  int exact_matches = 0;          // constructed invariant equals the target

  bool ok() const { return cut_hits == 0 && construction_failures == 0; }
};

namespace detail {

inline Rational round_rational(const Rational& x, const Int& max_den) {
  return limit_denominator(x, max_den);
}

// Rational approximation of the upper-half-plane square root of c, good
// enough that v = c/u also has positive imaginary part. Heron iteration from
// i stays in the basin of the Im > 0 root for every c off [0, infinity);
// denominators are clamped each step to keep the arithmetic small.
inline std::optional<GaussianRational> upper_sqrt_approx(const GaussianRational& c) {
  if (on_cut(c)) return std::nullopt;
  const Int max_den = Int(1) << 48;
  GaussianRational x{Rational(0), Rational(1)};
  for (int iter = 0; iter < 64; ++iter) {
    GaussianRational v = c / x;
    if (x.im > 0 && v.im > 0) return x;
    GaussianRational next = (x + v) * GaussianRational{make_rational(1, 2), Rational(0)};
    next.re = round_rational(next.re, max_den);
    next.im = round_rational(next.im, max_den);
    if (next.im <= 0) next.im = make_rational(1, 1000000);
    if (next.is_zero()) next = {Rational(0), Rational(1)};
    x = next;
  }
  return std::nullopt;
}

}  // namespace detail

// Constructs an exact extended-tube member with invariant exactly c, for any
// c off the cut: u approximates sqrt(c) in the upper half-plane and
// v = c / u restores the product exactly.
inline std::optional<DiffConfig> member_with_invariant(const GaussianRational& c) {
  auto u = detail::upper_sqrt_approx(c);
  if (!u) return std::nullopt;
  GaussianRational v = c / *u;
  DiffConfig cfg{{LightConeVector{*u, v}}};
  if (!in_forward_tube(cfg).member()) return std::nullopt;
  return cfg;
}

inline GaussianRational random_offcut_target(std::mt19937_64& rng) {
  for (;;) {
    GaussianRational c = random_gaussian(rng, 8, 6);
    if (!on_cut(c) && !c.is_zero()) return c;
  }
}

// Two-sided cut harness: random extended-tube members must have invariants
// off [0, infinity), and random off-cut targets must be reachable as exact
// invariants of constructed members.
inline CutScanReport oracle_cut_scan(int samples, std::uint64_t seed) {
  CutScanReport report;
  std::mt19937_64 rng(seed);

  for (int i = 0; i < samples; ++i) {
    DiffConfig cfg = random_extended_member(1, rng);
    ++report.member_samples;
    if (on_cut(minkowski_square(cfg.diffs[0]))) ++report.cut_hits;
  }

  const int targets = std::max(1, samples / 10);
  for (int i = 0; i < targets; ++i) {
    GaussianRational c = random_offcut_target(rng);
    ++report.targets;
    auto cfg = member_with_invariant(c);
    if (!cfg) {
      ++report.construction_failures;
      continue;
    }
    ++report.constructions_ok;
    if (minkowski_square(cfg->diffs[0]) == c) ++report.exact_matches;
  }
  return report;
}

}  // namespace lct
