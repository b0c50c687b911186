#pragma once

#include <algorithm>
#include <random>

#include "lct/geometry.hpp"

namespace lct {

// Seeded generators for exact rational test data. mt19937_64 output is
// pinned by the standard, so streams are reproducible across platforms.

inline Rational random_rational(std::mt19937_64& rng, int num_abs = 6, int den_max = 6) {
  std::uniform_int_distribution<int> num(-num_abs, num_abs);
  std::uniform_int_distribution<int> den(1, den_max);
  return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int num_abs = 6, int den_max = 6) {
  for (;;) {
    Rational q = random_rational(rng, num_abs, den_max);
    if (q != 0) return q;
  }
}

inline Rational random_positive_rational(std::mt19937_64& rng, int num_abs = 6, int den_max = 6) {
  std::uniform_int_distribution<int> num(1, num_abs);
  std::uniform_int_distribution<int> den(1, den_max);
  return make_rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, int num_abs = 6, int den_max = 6) {
  Rational re = random_rational(rng, num_abs, den_max);
  Rational im = random_rational(rng, num_abs, den_max);
  return {re, im};
}

inline GaussianRational random_nonzero_gaussian(std::mt19937_64& rng, int num_abs = 6,
                                                int den_max = 6) {
  for (;;) {
    GaussianRational z = random_gaussian(rng, num_abs, den_max);
    if (!z.is_zero()) return z;
  }
}

inline DiffConfig random_diff_config(int k, std::mt19937_64& rng, int num_abs = 6,
                                     int den_max = 6) {
  DiffConfig cfg;
  cfg.diffs.reserve(k);
  for (int j = 0; j < k; ++j)
    cfg.diffs.push_back({random_gaussian(rng, num_abs, den_max),
                         random_gaussian(rng, num_abs, den_max)});
  return cfg;
}

inline DiffConfig random_real_diff_config(int k, std::mt19937_64& rng, int num_abs = 6,
                                          int den_max = 6) {
  DiffConfig cfg;
  cfg.diffs.reserve(k);
  for (int j = 0; j < k; ++j)
    cfg.diffs.push_back({{random_rational(rng, num_abs, den_max), Rational(0)},
                         {random_rational(rng, num_abs, den_max), Rational(0)}});
  return cfg;
}

// Forward-tube member: every coordinate in the open upper half-plane.
inline DiffConfig random_forward_member(int k, std::mt19937_64& rng, int num_abs = 6,
                                        int den_max = 6) {
  DiffConfig cfg;
  cfg.diffs.reserve(k);
  for (int j = 0; j < k; ++j) {
    GaussianRational u{random_rational(rng, num_abs, den_max),
                       random_positive_rational(rng, num_abs, den_max)};
    GaussianRational v{random_rational(rng, num_abs, den_max),
                       random_positive_rational(rng, num_abs, den_max)};
    cfg.diffs.push_back({u, v});
  }
  return cfg;
}

// Extended-tube member: a forward member pushed along a random Lorentz orbit.
inline DiffConfig random_extended_member(int k, std::mt19937_64& rng, int num_abs = 6,
                                         int den_max = 6) {
  DiffConfig cfg = random_forward_member(k, rng, num_abs, den_max);
  return lorentz_scale(cfg, random_nonzero_gaussian(rng, num_abs, den_max));
}

// Real points with pairwise space-like separations: spread the space
// coordinate so every gap dominates the time spread, then shuffle labels.
inline PointConfig random_spacelike_config(int m, std::mt19937_64& rng) {
  PointConfig cfg;
  cfg.points.reserve(m);
  std::uniform_int_distribution<int> time_num(-2, 2);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> jitter(0, 3);
  Rational space = 0;
  for (int i = 0; i < m; ++i) {
    Rational z0 = make_rational(time_num(rng), den(rng));
    space += Rational(5) + make_rational(jitter(rng), den(rng));
    cfg.points.push_back(from_cartesian({z0, Rational(0)}, {space, Rational(0)}));
  }
  std::shuffle(cfg.points.begin(), cfg.points.end(), rng);
  return cfg;
}

// Point configuration whose identity ordering is a union member.
inline PointConfig random_union_member(int m, std::mt19937_64& rng, int num_abs = 4,
                                       int den_max = 4) {
  DiffConfig diffs = random_extended_member(m - 1, rng, num_abs, den_max);
  PointConfig cfg = from_diffs(diffs);
  return cfg;
}

}  // namespace lct
