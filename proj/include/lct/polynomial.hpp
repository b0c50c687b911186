#pragma once

#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "lct/rational.hpp"

namespace lct {

namespace detail {

// Canonical term order: higher total degree first, then lexicographically
// larger exponent vector first. Map iteration order is serialization order.
struct MonomialLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

}  // namespace detail

// Sparse multivariate polynomial with integer coefficients over a fixed
// variable count.
class Polynomial {
 public:
  using Terms = std::map<std::vector<int>, Int, detail::MonomialLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, Int c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
    return p;
  }

  static Polynomial variable(int nvars, int var) {
    Polynomial p(nvars);
    std::vector<int> mono(nvars, 0);
    mono[var] = 1;
    p.terms_[std::move(mono)] = 1;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.add_term(mono, coeff);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [mono, coeff] : b.terms_) out.add_term(mono, -coeff);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [mono, coeff] : a.terms_) out.terms_[mono] = -coeff;
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    std::vector<int> mono(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) mono[i] = ma[i] + mb[i];
        out.add_term(mono, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(std::span<const Rational> coords) const {
    Rational acc = 0;
    for (const auto& [mono, coeff] : terms_) {
      Rational term = coeff;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < mono[i]; ++e) term *= coords[i];
      acc += term;
    }
    return acc;
  }

  Int evaluate_int(std::span<const Int> coords) const {
    Int acc = 0;
    for (const auto& [mono, coeff] : terms_) {
      Int term = coeff;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < mono[i]; ++e) term *= coords[i];
      acc += term;
    }
    return acc;
  }

  int total_degree() const {
    int deg = 0;
    for (const auto& [mono, coeff] : terms_)
      deg = std::max(deg, std::accumulate(mono.begin(), mono.end(), 0));
    return deg;
  }

  // All terms share one total degree; evaluation signs are then invariant
  // under a common positive rescaling of the coordinates.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int deg = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
    for (const auto& [mono, coeff] : terms_)
      if (std::accumulate(mono.begin(), mono.end(), 0) != deg) return false;
    return true;
  }

 private:
  void add_term(const std::vector<int>& mono, const Int& coeff) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      if (coeff != 0) terms_[mono] = coeff;
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  int nvars_;
  Terms terms_;
};

}  // namespace lct
