#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "lct/error.hpp"

namespace lct {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational keeps lowest terms with a positive denominator, so value
// equality is structural equality. The two-arg constructor rejects negative
// denominators; normalize the sign here.
inline Rational make_rational(Int num, Int den) {
  require(den != 0, Errc::parse_error, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

// Canonical integer string: optional '-', no leading zeros, no "-0".
inline bool canonical_int_string(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  return true;
}

}  // namespace detail

// Parses "p/q" with p canonical, q a positive canonical integer and
// gcd(|p|, q) = 1. Anything else is rejected: exactness is only preserved
// if files carry one unambiguous spelling per value.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  require(slash != std::string_view::npos, Errc::non_canonical_rational,
          "expected \"p/q\", got \"" + std::string(text) + "\"");
  std::string_view num_s = text.substr(0, slash);
  std::string_view den_s = text.substr(slash + 1);
  require(detail::canonical_int_string(num_s) && num_s != "-0",
          Errc::non_canonical_rational,
          "non-canonical numerator in \"" + std::string(text) + "\"");
  require(detail::canonical_int_string(den_s) && den_s.front() != '-',
          Errc::non_canonical_rational,
          "non-canonical denominator in \"" + std::string(text) + "\"");
  Int num{std::string(num_s)};
  Int den{std::string(den_s)};
  require(den > 0, Errc::non_canonical_rational,
          "denominator must be positive in \"" + std::string(text) + "\"");
  require(gcd(num, den) == 1, Errc::non_canonical_rational,
          "not in lowest terms: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

// Best rational approximation with denominator bound, by mediant descent.
inline Rational limit_denominator(const Rational& x, const Int& max_den) {
  if (denominator(x) <= max_den) return x;
  Int p = numerator(x), q = denominator(x);
  bool neg = p < 0;
  if (neg) p = -p;
  Int whole = p / q;
  p -= whole * q;
  // Stern-Brocot walk toward p/q in [0, 1).
  Int a = 0, b = 1, c = 1, d = 1;
  Rational target = make_rational(p, q);
  Rational best = Rational(0);
  while (b + d <= max_den) {
    Int mn = a + c, md = b + d;
    Rational mediant = make_rational(mn, md);
    if (mediant == target) {
      best = mediant;
      break;
    }
    if (target > mediant) {
      a = mn;
      b = md;
    } else {
      c = mn;
      d = md;
    }
    best = mediant;
  }
  Rational out = Rational(whole) + best;
  return neg ? -out : out;
}

// Exact complex scalar with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(int r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational inverse() const {
    require(!is_zero(), Errc::zero_lambda, "inverse of zero");
    Rational n = norm();
    return {re / n, -im / n};
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
};

inline GaussianRational gauss(long re_num, long re_den, long im_num, long im_den) {
  return {make_rational(re_num, re_den), make_rational(im_num, im_den)};
}

inline GaussianRational gauss(long re, long im) {
  return {Rational(re), Rational(im)};
}

inline std::string to_string(const GaussianRational& z) {
  return "[" + to_string(z.re) + ", " + to_string(z.im) + "]";
}

}  // namespace lct
