#pragma once

#include <optional>
#include <vector>

#include "lct/halfplane.hpp"

namespace lct {

enum class Verdict { member, non_member };

// The kind of query a certificate answers. Forward-tube certificates are
// relative to the fixed direction (1, 0); extended-tube and extension
// certificates quantify over the direction circle.
enum class QueryKind { forward_tube, extended_tube, extension };

struct MembershipCertificate {
  QueryKind kind = QueryKind::extended_tube;
  Verdict verdict = Verdict::non_member;
  std::optional<Dir> witness;                    // member: every condition > 0 there
  std::vector<HalfPlaneNormal> infeasible_core;  // non-member: jointly unsatisfiable
  std::optional<SourceTag> degenerate_condition; // non-member: u_j = 0 or v_j = 0
  std::optional<int> cut_back_index;             // extension only: invariant on the cut

  bool member() const { return verdict == Verdict::member; }
};

// Forward tube: Im u_j > 0 and Im v_j > 0 for every difference. This is the
// lambda = 1 instance of the half-plane system, so the witness is (1, 0) and
// a violation is reported as the first failing condition.
inline MembershipCertificate in_forward_tube(const DiffConfig& cfg) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  MembershipCertificate cert;
  cert.kind = QueryKind::forward_tube;
  for (const auto& n : membership_normals(cfg)) {
    if (n.nx <= 0) {
      cert.verdict = Verdict::non_member;
      cert.infeasible_core = {n};
      return cert;
    }
  }
  cert.verdict = Verdict::member;
  cert.witness = Dir{1, 0};
  return cert;
}

// Primitive extended tube: some nonzero lambda maps the configuration into
// the forward tube. Membership depends only on the direction of lambda.
inline MembershipCertificate in_extended_tube(const DiffConfig& cfg) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  MembershipCertificate cert;
  cert.kind = QueryKind::extended_tube;
  for (int j = 0; j < cfg.size(); ++j) {
    if (cfg.diffs[j].u.is_zero()) {
      cert.degenerate_condition = SourceTag{CondKind::u_cond, j};
      return cert;
    }
    if (cfg.diffs[j].v.is_zero()) {
      cert.degenerate_condition = SourceTag{CondKind::v_cond, j};
      return cert;
    }
  }
  SolveResult sol = solve_common_direction(membership_normals(cfg));
  switch (sol.kind) {
    case SolveResult::Kind::feasible:
      cert.verdict = Verdict::member;
      cert.witness = sol.witness;
      break;
    case SolveResult::Kind::infeasible:
      cert.infeasible_core = sol.core;
      break;
    case SolveResult::Kind::degenerate:
      cert.degenerate_condition = sol.degenerate_source;
      break;
  }
  return cert;
}

struct JostResult {
  bool is_jost = false;
  MembershipCertificate certificate;
};

// A real configuration is a Jost point iff all u_j carry one strict sign and
// all v_j the opposite strict sign. Decided by the sign criterion directly;
// agreement with in_extended_tube on real input is a tested property, not a
// shared code path.
inline JostResult is_jost_point(const DiffConfig& cfg) {
  require(cfg.size() >= 1, Errc::empty_config, "empty difference configuration");
  require(cfg.is_real(), Errc::not_real_config,
          "Jost test needs a real configuration");
  JostResult out;
  out.certificate.kind = QueryKind::extended_tube;

  auto normals = membership_normals(cfg);
  for (int j = 0; j < cfg.size(); ++j) {
    if (cfg.diffs[j].u.is_zero()) {
      out.certificate.degenerate_condition = SourceTag{CondKind::u_cond, j};
      return out;
    }
    if (cfg.diffs[j].v.is_zero()) {
      out.certificate.degenerate_condition = SourceTag{CondKind::v_cond, j};
      return out;
    }
  }

  // All condition normals of a real configuration lie on the y axis with
  // y component u_j (for U_j) and -v_j (for V_j); a Jost point is exactly
  // the case where those y components share one strict sign.
  int sign = normals[0].ny.sign();
  for (std::size_t i = 1; i < normals.size(); ++i) {
    if (normals[i].ny.sign() != sign) {
      out.certificate.infeasible_core = {normals[0], normals[i]};
      return out;
    }
  }
  out.is_jost = true;
  out.certificate.verdict = Verdict::member;
  out.certificate.witness = Dir{0, sign > 0 ? 1 : -1};
  return out;
}

struct TwoPointImage {
  GaussianRational invariant;
  bool cut_flag = false;  // invariant real and >= 0
};

inline bool on_cut(const GaussianRational& z) { return z.im == 0 && z.re >= 0; }

inline TwoPointImage two_point_invariant_image(const DiffConfig& cfg) {
  require(cfg.size() == 1, Errc::wrong_arity,
          "two-point image needs exactly one difference, got " + std::to_string(cfg.size()));
  TwoPointImage out;
  out.invariant = minkowski_square(cfg.diffs[0]);
  out.cut_flag = on_cut(out.invariant);
  return out;
}

// Re-verifies a certificate against its configuration by direct evaluation:
// witnesses by substitution, degeneracies by testing the named coordinate,
// cores by exhaustive sign analysis. Independent of the solver's path.
inline bool verify_certificate(const DiffConfig& cfg, const MembershipCertificate& cert) {
  auto normals = membership_normals(cfg);
  auto find_normal = [&](const SourceTag& tag) -> const HalfPlaneNormal* {
    for (const auto& n : normals)
      if (n.source == tag) return &n;
    return nullptr;
  };

  if (cert.member()) {
    if (!cert.witness) return false;
    const Dir& w = *cert.witness;
    if (gcd(w.x, w.y) != 1) return false;
    if (cert.kind == QueryKind::forward_tube && !(w == Dir{1, 0})) return false;
    for (const auto& n : normals)
      if (n.nx * w.x + n.ny * w.y <= 0) return false;
    return true;
  }

  if (cert.degenerate_condition) {
    const auto& tag = *cert.degenerate_condition;
    if (tag.index < 0 || tag.index >= cfg.size()) return false;
    const auto& d = cfg.diffs[tag.index];
    return tag.kind == CondKind::u_cond ? d.u.is_zero() : d.v.is_zero();
  }

  if (!cert.infeasible_core.empty()) {
    // Core normals must be the configuration's own conditions.
    for (const auto& n : cert.infeasible_core) {
      const HalfPlaneNormal* own = find_normal(n.source);
      if (own == nullptr || own->nx != n.nx || own->ny != n.ny) return false;
    }
    if (cert.kind == QueryKind::forward_tube)
      return cert.infeasible_core.size() == 1 && cert.infeasible_core[0].nx <= 0;
    return cert.infeasible_core.size() <= 3 && core_unsatisfiable(cert.infeasible_core);
  }

  return false;
}

}  // namespace lct
