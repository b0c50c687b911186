#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lct/cells.hpp"
#include "lct/cone.hpp"
#include "lct/extend.hpp"
#include "lct/order_class.hpp"
#include "lct/oracle.hpp"
#include "lct/union_domain.hpp"
#include "lct/version.hpp"

namespace lct {

using Json = nlohmann::json;

// ---- canonical serialization ----------------------------------------------
// Objects sort keys (nlohmann default), arrays keep order, every number that
// must stay exact travels as a decimal string. dump(2) of these values is
// byte-stable across runs.

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const GaussianRational& z) {
  return Json::array({to_string(z.re), to_string(z.im)});
}

inline Json to_json(const LightConeVector& w) {
  return Json{{"u", to_json(w.u)}, {"v", to_json(w.v)}};
}

inline Json to_json(const PointConfig& cfg) {
  Json arr = Json::array();
  for (const auto& p : cfg.points) arr.push_back(to_json(p));
  return Json{{"points", arr}};
}

inline Json to_json(const DiffConfig& cfg) {
  Json arr = Json::array();
  for (const auto& d : cfg.diffs) arr.push_back(to_json(d));
  return Json{{"diffs", arr}};
}

inline Json to_json(const Dir& d) { return Json::array({d.x.str(), d.y.str()}); }

inline Json to_json(const SourceTag& t) {
  return Json{{"index", t.index}, {"kind", t.kind == CondKind::u_cond ? "U" : "V"}};
}

inline Json to_json(const HalfPlaneNormal& n) {
  return Json{{"normal", Json::array({to_string(n.nx), to_string(n.ny)})},
              {"source", to_json(n.source)}};
}

inline const char* query_kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::forward_tube: return "forward-tube";
    case QueryKind::extended_tube: return "extended-tube";
    case QueryKind::extension: return "extension";
  }
  return "?";
}

inline Json to_json(const MembershipCertificate& cert) {
  Json j{{"kind", query_kind_name(cert.kind)},
         {"verdict", cert.member() ? "member" : "non-member"}};
  if (cert.witness) j["witness"] = to_json(*cert.witness);
  if (!cert.infeasible_core.empty()) {
    Json core = Json::array();
    for (const auto& n : cert.infeasible_core) core.push_back(to_json(n));
    j["infeasible_core"] = core;
  }
  if (cert.degenerate_condition) j["degenerate_condition"] = to_json(*cert.degenerate_condition);
  if (cert.cut_back_index) j["cut_back_index"] = *cert.cut_back_index;
  return j;
}

inline Json to_json(const Permutation& p) {
  Json arr = Json::array();
  for (int i : p.map) arr.push_back(i);
  return arr;
}

inline Json to_json(const UnionVerdict& v) {
  Json admitting = Json::array();
  for (const auto& p : v.admitting) admitting.push_back(to_json(p));
  Json certs = Json::object();
  for (const auto& [perm, cert] : v.certificates) certs[to_string(perm)] = to_json(cert);
  return Json{{"verdict", v.member() ? "member" : "non-member"},
              {"admitting_permutations", admitting},
              {"certificates", certs}};
}

inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json vars = Json::array();
    for (int i = 0; i < p.nvars(); ++i)
      if (mono[i] > 0) vars.push_back(Json::array({i, mono[i]}));
    terms.push_back(Json{{"coeff", coeff.str()}, {"monomial", vars}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline Json to_json(const SignCondition& c) {
  return Json{{"poly", to_json(c.poly)}, {"rel", rel_name(c.rel)}};
}

inline Json to_json(const CellFormula& f) {
  Json conds = Json::array();
  for (const auto& c : f.conditions) conds.push_back(to_json(c));
  return Json{{"label", f.label}, {"conditions", conds}};
}

inline Json to_json(const InteriorFormula& f) {
  Json cells = Json::array();
  for (const auto& c : f.cells) cells.push_back(to_json(c));
  return Json{{"m", f.m}, {"nvars", cell_nvars(f.m)}, {"any_of", cells}};
}

inline Json to_json(const BoundaryStratum& s) {
  Json conds = Json::array();
  for (const auto& c : s.active) conds.push_back(to_json(c));
  return Json{{"tag", s.tag()}, {"active_conditions", conds}};
}

inline Json to_json(const Arrangement& arr) {
  Json normals = Json::array();
  for (const auto& n : arr.normals) normals.push_back(to_json(n));
  Json groups = Json::array();
  for (const auto& g : arr.groups) {
    Json sources = Json::array();
    for (const auto& s : g.sources) sources.push_back(to_json(s));
    groups.push_back(Json{{"direction", to_json(g.dir)}, {"sources", sources}});
  }
  Json arcs = Json::array();
  for (const auto& a : arr.arcs) {
    Json sat = Json::array();
    for (bool b : a.satisfied) sat.push_back(b);
    arcs.push_back(Json{{"from", to_json(a.lo)},
                        {"to", to_json(a.hi)},
                        {"sample", to_json(a.sample)},
                        {"satisfied", sat},
                        {"all_satisfied", a.all_satisfied}});
  }
  return Json{{"normals", normals}, {"merged_directions", groups}, {"arcs", arcs}};
}

inline Json to_json(const ConeBase& b) {
  switch (b.kind) {
    case ConeBase::Kind::full: return Json{{"kind", "full"}};
    case ConeBase::Kind::ray: return Json{{"kind", "ray"}, {"dir", to_json(b.lo)}};
    case ConeBase::Kind::sector:
      return Json{{"kind", "sector"}, {"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}};
  }
  return Json{};
}

inline Json to_json(const ExtensionBases& b) {
  Json arr = Json::array();
  for (const auto& base : b.per_diff) arr.push_back(to_json(base));
  return Json{{"per_diff", arr}, {"over_extension", b.any_full()}};
}

// ---- strict parsing --------------------------------------------------------

namespace detail {

inline void reject_numbers(const Json& j) {
  if (j.is_number_float())
    fail(Errc::float_literal_rejected, "floating-point literal in configuration");
  if (j.is_number())
    fail(Errc::parse_error, "exact values must be strings, got a bare number");
}

inline Rational parse_rational_json(const Json& j) {
  reject_numbers(j);
  require(j.is_string(), Errc::parse_error, "expected rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

inline GaussianRational parse_complex(const Json& j) {
  require(j.is_array() && j.size() == 2, Errc::parse_error,
          "complex value must be a [re, im] pair");
  return {parse_rational_json(j[0]), parse_rational_json(j[1])};
}

inline LightConeVector parse_vector(const Json& j) {
  require(j.is_object() && j.contains("u") && j.contains("v") && j.size() == 2,
          Errc::parse_error, "vector must be an object with exactly \"u\" and \"v\"");
  return {parse_complex(j["u"]), parse_complex(j["v"])};
}

}  // namespace detail

struct ParsedConfig {
  bool is_points = false;
  PointConfig points;
  DiffConfig diffs;

  // Consecutive differences regardless of input form.
  DiffConfig as_diffs() const { return is_points ? to_diffs(points) : diffs; }
};

inline ParsedConfig parse_config_json(const Json& j) {
  require(j.is_object(), Errc::parse_error, "top level must be an object");
  bool has_points = j.contains("points");
  bool has_diffs = j.contains("diffs");
  require(has_points != has_diffs, Errc::parse_error,
          "top level must have exactly one of \"points\" or \"diffs\"");
  require(j.size() == 1, Errc::parse_error, "unexpected extra top-level keys");

  ParsedConfig out;
  const Json& arr = has_points ? j["points"] : j["diffs"];
  require(arr.is_array() && !arr.empty(), Errc::parse_error,
          "configuration must be a nonempty array");
  out.is_points = has_points;
  for (const auto& v : arr) {
    LightConeVector w = detail::parse_vector(v);
    if (has_points)
      out.points.points.push_back(w);
    else
      out.diffs.diffs.push_back(w);
  }
  return out;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recover a line number from the byte offset for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    fail(Errc::parse_error,
         "invalid JSON at line " + std::to_string(line) + " (byte " + std::to_string(e.byte) +
             "): " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ParsedConfig parse_config_file(const std::string& path) {
  return parse_config_json(parse_json_text(read_file(path)));
}

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- run reports -----------------------------------------------------------

inline std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json run_report(const std::string& command, const std::string& input_digest) {
  return Json{{"command", command},
              {"engine", Json{{"name", kEngineName}, {"version", kEngineVersion}}},
              {"input_digest", input_digest}};
}

}  // namespace lct
