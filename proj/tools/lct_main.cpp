// Command-line front end: exact membership, certificates, cells, unions,
// order classification, projections, extensions, and oracle cross-checks
// over light-cone tube domains. All reports are canonical JSON on stdout;
// exit code 0 answers member/true, 1 answers non-member/false, 2 signals a
// usage or input error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lct/json_io.hpp"

namespace {

using lct::Json;

struct Output {
  Json report;
  int exit_code = 0;
};

std::string file_digest(const std::string& path) {
  return lct::fnv1a64_hex(lct::read_file(path));
}

lct::Permutation parse_perm_word(const std::string& word, int m) {
  lct::Permutation p;
  std::string token;
  std::istringstream ss(word);
  while (std::getline(ss, token, ','))
    p.map.push_back(std::stoi(token));
  lct::require(p.m() == m, lct::Errc::bad_arity,
               "permutation \"" + word + "\" has order " + std::to_string(p.m()) +
                   ", expected " + std::to_string(m));
  std::vector<bool> seen(m, false);
  for (int i : p.map) {
    lct::require(i >= 0 && i < m && !seen[i], lct::Errc::bad_arity,
                 "\"" + word + "\" is not a permutation of 0.." + std::to_string(m - 1));
    seen[i] = true;
  }
  return p;
}

std::vector<lct::Permutation> parse_perm_set(const std::string& spec, int m) {
  if (spec == "all") return lct::all_permutations(m);
  if (spec == "id") return {lct::Permutation::identity(m)};
  if (spec == "idrev")
    return {lct::Permutation::identity(m), lct::Permutation::reversal(m)};
  std::vector<lct::Permutation> out;
  std::string word;
  std::istringstream ss(spec);
  while (std::getline(ss, word, ';'))
    if (!word.empty()) out.push_back(parse_perm_word(word, m));
  lct::require(!out.empty(), lct::Errc::bad_arity, "empty permutation set");
  return out;
}

Output cmd_membership(const std::string& file, bool forward) {
  lct::ParsedConfig cfg = lct::parse_config_file(file);
  lct::DiffConfig diffs = cfg.as_diffs();
  lct::MembershipCertificate cert =
      forward ? lct::in_forward_tube(diffs) : lct::in_extended_tube(diffs);

  Json report = lct::run_report("membership", file_digest(file));
  report["config"] = lct::to_json(diffs);
  report["certificate"] = lct::to_json(cert);
  if (diffs.size() == 1) {
    auto img = lct::two_point_invariant_image(diffs);
    report["two_point"] =
        Json{{"invariant", lct::to_json(img.invariant)}, {"cut_flag", img.cut_flag}};
  }
  return {report, cert.member() ? 0 : 1};
}

Output cmd_witness(const std::string& file) {
  lct::ParsedConfig cfg = lct::parse_config_file(file);
  lct::DiffConfig diffs = cfg.as_diffs();
  lct::MembershipCertificate cert = lct::in_extended_tube(diffs);

  Json report = lct::run_report("witness", file_digest(file));
  report["certificate"] = lct::to_json(cert);
  report["verified"] = lct::verify_certificate(diffs, cert);
  if (cert.witness) {
    Json values = Json::array();
    for (const auto& n : lct::membership_normals(diffs)) {
      lct::Rational value = n.nx * cert.witness->x + n.ny * cert.witness->y;
      values.push_back(Json{{"source", lct::to_json(n.source)},
                            {"value", lct::to_string(value)},
                            {"positive", value > 0}});
    }
    report["substitution"] = values;
  }
  return {report, cert.member() ? 0 : 1};
}

Output cmd_jost(const std::string& file) {
  lct::ParsedConfig cfg = lct::parse_config_file(file);
  lct::DiffConfig diffs = cfg.as_diffs();
  lct::JostResult res = lct::is_jost_point(diffs);

  Json report = lct::run_report("jost", file_digest(file));
  report["is_jost_point"] = res.is_jost;
  report["certificate"] = lct::to_json(res.certificate);
  return {report, res.is_jost ? 0 : 1};
}

Output cmd_classify(long long s, long long m) {
  lct::OrderClass cls = lct::classify_order(s, m);
  Json report = lct::run_report(
      "classify", lct::fnv1a64_hex("s=" + std::to_string(s) + ";m=" + std::to_string(m)));
  report["s"] = s;
  report["m"] = m;
  report["class"] = std::string(1, lct::order_class_letter(cls));
  report["thresholds"] = Json{{"lower_max_m", s + 1}, {"high_min_m", s * (s - 1) / 2 + 3}};
  return {report, 0};
}

Output cmd_union(const std::string& file, const std::string& mode, int max_m) {
  lct::ParsedConfig cfg = lct::parse_config_file(file);
  lct::require(cfg.is_points, lct::Errc::parse_error,
               "union membership needs a {\"points\": ...} configuration");
  lct::UnionMode m = mode == "all" ? lct::UnionMode::all : lct::UnionMode::first;
  lct::UnionVerdict verdict = lct::union_membership(cfg.points, m, max_m);

  Json report = lct::run_report("union", file_digest(file));
  report["mode"] = mode;
  report["union"] = lct::to_json(verdict);
  return {report, verdict.member() ? 0 : 1};
}

Output cmd_project(const std::string& file, int r, int max_m) {
  lct::ParsedConfig cfg = lct::parse_config_file(file);
  lct::require(cfg.is_points, lct::Errc::parse_error,
               "projection check needs a {\"points\": ...} configuration");
  lct::ProjectionReport proj = lct::projection_inclusion_check(cfg.points, r, max_m);
  lct::PairwiseCutReport cuts = lct::pairwise_cut_avoidance(cfg.points, max_m);

  Json report = lct::run_report("project", file_digest(file));
  Json violations = Json::array();
  for (const auto& v : proj.violations) {
    Json kept = Json::array();
    for (int i : v.kept) kept.push_back(i);
    violations.push_back(kept);
  }
  report["projection"] = Json{{"m", proj.m},
                              {"r", proj.r},
                              {"vacuous", proj.vacuous},
                              {"subsets_checked", proj.subsets_checked},
                              {"violations", violations}};
  Json hits = Json::array();
  for (const auto& [i, j] : cuts.cut_hits) hits.push_back(Json::array({i, j}));
  report["pairwise_cut_avoidance"] =
      Json{{"pairs_checked", cuts.pairs_checked}, {"cut_hits", hits}};
  bool ok = proj.ok() && cuts.ok();
  return {report, ok ? 0 : 1};
}

Output cmd_cells(const std::string& file, int m) {
  if (!file.empty()) {
    lct::ParsedConfig cfg = lct::parse_config_file(file);
    lct::DiffConfig diffs = cfg.as_diffs();
    Json report = lct::run_report("cells", file_digest(file));
    report["arrangement"] = lct::to_json(lct::build_arrangement(diffs));
    lct::MembershipCertificate cert = lct::in_extended_tube(diffs);
    report["certificate"] = lct::to_json(cert);
    if (!cert.member()) {
      try {
        Json strata = Json::array();
        for (const auto& s : lct::classify_boundary(diffs)) strata.push_back(lct::to_json(s));
        report["boundary_strata"] = strata;
      } catch (const lct::Error& e) {
        if (e.code() != lct::Errc::not_on_boundary) throw;
        report["boundary_strata"] = "open-complement";
      }
    }
    return {report, 0};
  }
  Json report = lct::run_report("cells", lct::fnv1a64_hex("m=" + std::to_string(m)));
  report["interior_formula"] = lct::to_json(lct::interior_cell_formula(m));
  return {report, 0};
}

Output cmd_extend(const std::string& file, int m, const std::string& perms_spec,
                  std::uint64_t seed, int draws) {
  auto perms = parse_perm_set(perms_spec, m);
  std::vector<std::vector<lct::ConeBase>> forward_bases(
      m - 1, std::vector<lct::ConeBase>{lct::ConeBase::forward()});
  lct::ExtensionBases bases = lct::convex_tube_extension(forward_bases, perms);

  if (!file.empty()) {
    lct::ParsedConfig cfg = lct::parse_config_file(file);
    lct::require(cfg.is_points, lct::Errc::parse_error,
                 "extension verification needs a {\"points\": ...} configuration");
    lct::ExtensionVerdict v = lct::verify_extension(cfg.points, bases);
    Json report = lct::run_report("extend", file_digest(file));
    report["bases"] = lct::to_json(bases);
    report["certificate"] = lct::to_json(v.certificate);
    report["over_extension"] = v.over_extension;
    report["cut_back_applied"] = v.cut_back_applied;
    return {report, v.certificate.member() ? 0 : 1};
  }

  // Proposal mode: one JSON line per draw, then a summary line.
  lct::DomainDescriptor descriptor{m, perms};
  int emitted = 0;
  for (int i = 0; i < draws; ++i) {
    // Draws are generated one at a time to keep the stream incremental, but
    // determinism comes from the seed: regenerate the full prefix each time.
    auto all = lct::propose_extension_points(descriptor, seed, i + 1);
    const lct::Proposal& p = all.back();
    Json line{{"draw", i}};
    switch (p.status) {
      case lct::Proposal::Status::emitted: {
        ++emitted;
        line["status"] = "emitted";
        line["candidate"] = lct::to_json(p.candidate);
        lct::ExtensionVerdict v = lct::verify_extension(p.candidate, bases);
        line["verify"] = lct::to_json(v.certificate);
        line["over_extension"] = v.over_extension;
        break;
      }
      case lct::Proposal::Status::rejected_member:
        line["status"] = "rejected-member";
        line["via"] = lct::to_json(*p.member_via);
        break;
      case lct::Proposal::Status::rejected_cut:
        line["status"] = "rejected-cut";
        line["cut_index"] = *p.cut_index;
        break;
    }
    std::cout << line.dump() << "\n";
  }
  Json summary = lct::run_report(
      "extend", lct::fnv1a64_hex("m=" + std::to_string(m) + ";perms=" + perms_spec +
                                 ";seed=" + std::to_string(seed) +
                                 ";draws=" + std::to_string(draws)));
  summary["bases"] = lct::to_json(bases);
  summary["draws"] = draws;
  summary["emitted"] = emitted;
  return {summary, 0};
}

Output cmd_oracle_check(const std::string& file, int theta_steps, int samples,
                        std::uint64_t seed) {
  if (!file.empty()) {
    lct::ParsedConfig cfg = lct::parse_config_file(file);
    lct::DiffConfig diffs = cfg.as_diffs();
    lct::OracleConfig oc;
    oc.theta_steps = theta_steps;
    lct::OracleVerdict oracle = lct::oracle_extended_membership(diffs, oc);
    lct::MembershipCertificate cert = lct::in_extended_tube(diffs);

    bool consistent = true;
    if (oracle.found && !cert.member()) consistent = false;  // oracle is sound
    if (cert.member() && !lct::verify_certificate(diffs, cert)) consistent = false;

    Json report = lct::run_report("oracle-check", file_digest(file));
    report["theta_steps"] = theta_steps;
    report["oracle"] = Json{{"found", oracle.found},
                            {"directions_tried", oracle.directions_tried}};
    if (oracle.direction) report["oracle"]["direction"] = lct::to_json(*oracle.direction);
    report["engine"] = lct::to_json(cert);
    report["consistent"] = consistent;
    return {report, consistent ? 0 : 1};
  }

  lct::CutScanReport scan = lct::oracle_cut_scan(samples, seed);
  Json report = lct::run_report(
      "oracle-check", lct::fnv1a64_hex("samples=" + std::to_string(samples) +
                                       ";seed=" + std::to_string(seed)));
  report["cut_scan"] = Json{{"member_samples", scan.member_samples},
                            {"cut_hits", scan.cut_hits},
                            {"targets", scan.targets},
                            {"constructions_ok", scan.constructions_ok},
                            {"construction_failures", scan.construction_failures},
                            {"exact_matches", scan.exact_matches}};
  return {report, scan.ok() ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact light-cone tube domain engine"};
  app.require_subcommand(1);

  std::string file;
  std::string mode = "first";
  std::string perms_spec = "idrev";
  long long s = 2;
  int m = 2;
  int r = 1;
  std::uint64_t seed = 0;
  int draws = 16;
  int theta_steps = 64;
  int samples = 1000;
  int max_m = lct::kDefaultMaxM;
  bool forward = false;
  bool timing = false;

  app.add_flag("--timing", timing, "include wall-clock timing in the report");

  auto* c_membership = app.add_subcommand("membership", "exact extended-tube membership");
  c_membership->add_option("--file", file)->required();
  c_membership->add_flag("--forward", forward, "query the forward tube instead");

  auto* c_witness = app.add_subcommand("witness", "membership with witness substitution detail");
  c_witness->add_option("--file", file)->required();

  auto* c_jost = app.add_subcommand("jost", "Jost point test for a real configuration");
  c_jost->add_option("--file", file)->required();

  auto* c_classify = app.add_subcommand("classify", "order class over (s, m)");
  c_classify->add_option("--s", s)->required();
  c_classify->add_option("--m", m)->required();

  auto* c_union = app.add_subcommand("union", "membership in the permuted union");
  c_union->add_option("--file", file)->required();
  c_union->add_option("--mode", mode)->check(CLI::IsMember({"first", "all"}));
  c_union->add_option("--max-m-override", max_m);

  auto* c_project = app.add_subcommand("project", "sub-configuration projection check");
  c_project->add_option("--file", file)->required();
  c_project->add_option("--r", r)->required();
  c_project->add_option("--max-m-override", max_m);

  auto* c_cells = app.add_subcommand("cells", "arrangement / symbolic interior formula");
  c_cells->add_option("--file", file);
  c_cells->add_option("--m", m);

  auto* c_extend = app.add_subcommand("extend", "convex tube extension: propose and verify");
  c_extend->add_option("--file", file, "candidate to verify (omit to propose)");
  c_extend->add_option("--m", m);
  c_extend->add_option("--perms", perms_spec, "all | id | idrev | \"0,1;1,0\"");
  c_extend->add_option("--seed", seed);
  c_extend->add_option("--draws", draws);

  auto* c_oracle = app.add_subcommand("oracle-check", "brute-force grid cross-check");
  c_oracle->add_option("--file", file, "config to cross-check (omit for a cut scan)");
  c_oracle->add_option("--theta-steps", theta_steps);
  c_oracle->add_option("--samples", samples);
  c_oracle->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    Output out;
    if (c_membership->parsed()) out = cmd_membership(file, forward);
    else if (c_witness->parsed()) out = cmd_witness(file);
    else if (c_jost->parsed()) out = cmd_jost(file);
    else if (c_classify->parsed()) out = cmd_classify(s, m);
    else if (c_union->parsed()) out = cmd_union(file, mode, max_m);
    else if (c_project->parsed()) out = cmd_project(file, r, max_m);
    else if (c_cells->parsed()) out = cmd_cells(file, m);
    else if (c_extend->parsed()) out = cmd_extend(file, m, perms_spec, seed, draws);
    else if (c_oracle->parsed()) out = cmd_oracle_check(file, theta_steps, samples, seed);

    if (timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      out.report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::cout << lct::canonical_dump(out.report);
    return out.exit_code;
  } catch (const lct::Error& e) {
    Json err{{"error", Json{{"code", lct::errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", Json{{"code", "InternalError"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 2;
  }
}
