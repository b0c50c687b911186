#pragma once

#include <stdexcept>
#include <string>

namespace lct {

// Error codes mirror the failure names surfaced by the CLI reports.
enum class Errc {
  zero_lambda,
  too_few_points,
  empty_config,
  not_real_config,
  wrong_arity,
  degenerate_coordinate,
  bad_arity,
  not_on_boundary,
  arity_guard,
  not_totally_spacelike,
  bad_dimension,
  bad_order,
  not_member,
  bad_r,
  empty_base,
  degenerate_base,
  parse_error,
  non_canonical_rational,
  float_literal_rejected,
  probe_outside_formula,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::empty_config: return "EmptyConfig";
    case Errc::not_real_config: return "NotRealConfig";
    case Errc::wrong_arity: return "WrongArity";
    case Errc::degenerate_coordinate: return "DegenerateCoordinate";
    case Errc::bad_arity: return "BadArity";
    case Errc::not_on_boundary: return "NotOnBoundary";
    case Errc::arity_guard: return "ArityGuard";
    case Errc::not_totally_spacelike: return "NotTotallySpacelike";
    case Errc::bad_dimension: return "BadDimension";
    case Errc::bad_order: return "BadOrder";
    case Errc::not_member: return "NotMember";
    case Errc::bad_r: return "BadR";
    case Errc::empty_base: return "EmptyBase";
    case Errc::degenerate_base: return "DegenerateBase";
    case Errc::parse_error: return "ParseError";
    case Errc::non_canonical_rational: return "NonCanonicalRational";
    case Errc::float_literal_rejected: return "FloatLiteralRejected";
    case Errc::probe_outside_formula: return "ProbeOutsideFormula";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, Errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace lct
