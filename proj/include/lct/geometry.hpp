#pragma once

#include <utility>
#include <vector>

#include "lct/rational.hpp"

namespace lct {

// One complexified 2D space-time vector in light-cone coordinates
// u = z0 + z1, v = z0 - z1. The Minkowski square is the product u*v.
struct LightConeVector {
  GaussianRational u;
  GaussianRational v;

  friend LightConeVector operator+(const LightConeVector& a, const LightConeVector& b) {
    return {a.u + b.u, a.v + b.v};
  }
  friend LightConeVector operator-(const LightConeVector& a, const LightConeVector& b) {
    return {a.u - b.u, a.v - b.v};
  }
  friend LightConeVector operator-(const LightConeVector& a) { return {-a.u, -a.v}; }
  friend bool operator==(const LightConeVector& a, const LightConeVector& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const LightConeVector& a, const LightConeVector& b) {
    return !(a == b);
  }

  bool is_real() const { return u.is_real() && v.is_real(); }
};

inline GaussianRational minkowski_square(const LightConeVector& w) { return w.u * w.v; }

inline std::pair<GaussianRational, GaussianRational> to_cartesian(const LightConeVector& w) {
  GaussianRational half{make_rational(1, 2), Rational(0)};
  return {(w.u + w.v) * half, (w.u - w.v) * half};
}

inline LightConeVector from_cartesian(const GaussianRational& z0, const GaussianRational& z1) {
  return {z0 + z1, z0 - z1};
}

// Ordered list of m field points.
struct PointConfig {
  std::vector<LightConeVector> points;

  int m() const { return static_cast<int>(points.size()); }
};

// Ordered list of the m-1 consecutive differences z_j - z_{j+1}.
struct DiffConfig {
  std::vector<LightConeVector> diffs;

  int size() const { return static_cast<int>(diffs.size()); }
  bool is_real() const {
    for (const auto& d : diffs)
      if (!d.is_real()) return false;
    return true;
  }
};

inline DiffConfig to_diffs(const PointConfig& cfg) {
  require(cfg.m() >= 2, Errc::too_few_points,
          "need at least 2 points, got " + std::to_string(cfg.m()));
  DiffConfig out;
  out.diffs.reserve(cfg.points.size() - 1);
  for (std::size_t j = 0; j + 1 < cfg.points.size(); ++j)
    out.diffs.push_back(cfg.points[j] - cfg.points[j + 1]);
  return out;
}

// Reconstructs points from differences; the last point is the anchor.
inline PointConfig from_diffs(const DiffConfig& cfg, LightConeVector anchor = {}) {
  PointConfig out;
  out.points.assign(cfg.diffs.size() + 1, anchor);
  for (int j = static_cast<int>(cfg.diffs.size()) - 1; j >= 0; --j)
    out.points[j] = out.points[j + 1] + cfg.diffs[j];
  return out;
}

inline PointConfig translate(const PointConfig& cfg, const LightConeVector& shift) {
  PointConfig out = cfg;
  for (auto& p : out.points) p = p + shift;
  return out;
}

// The proper complex Lorentz group for s = 2 acts on light-cone coordinates
// by (u, v) -> (lambda*u, v/lambda); Minkowski squares are preserved.
inline LightConeVector lorentz_scale(const LightConeVector& w, const GaussianRational& lambda) {
  require(!lambda.is_zero(), Errc::zero_lambda, "lambda must be nonzero");
  return {lambda * w.u, w.v * lambda.inverse()};
}

inline DiffConfig lorentz_scale(const DiffConfig& cfg, const GaussianRational& lambda) {
  require(!lambda.is_zero(), Errc::zero_lambda, "lambda must be nonzero");
  GaussianRational inv = lambda.inverse();
  DiffConfig out;
  out.diffs.reserve(cfg.diffs.size());
  for (const auto& d : cfg.diffs) out.diffs.push_back({lambda * d.u, inv * d.v});
  return out;
}

}  // namespace lct
