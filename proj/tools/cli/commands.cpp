#include "cli/commands.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include <CLI11.hpp>

#include "cli/polytope_file.hpp"
#include "ehrhart/catalog.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/tables.hpp"

namespace ehrhart::cli {
using nlohmann::json;

namespace {

struct FileOutcome {
  std::optional<AnalysisReport> report;
  std::string error;
};

FileOutcome analyze_file(const std::string& path, const AnalyzeOptions& options) {
  FileOutcome outcome;
  try {
    PolytopeFile file = load_polytope_file(path);
    outcome.report = analyze(build_polytope(file.rows), path, options);
  } catch (const std::exception& e) {
    outcome.error = path + ": " + e.what();
  }
  return outcome;
}

}  // namespace

int run_analyze(const std::vector<std::string>& files, const AnalyzeOptions& options, bool as_json,
                unsigned jobs, std::ostream& out, std::ostream& err) {
  std::vector<FileOutcome> outcomes(files.size());
  const std::size_t batch = std::max(1u, jobs);
  for (std::size_t start = 0; start < files.size(); start += batch) {
    std::vector<std::future<FileOutcome>> running;
    const std::size_t stop = std::min(files.size(), start + batch);
    for (std::size_t i = start; i < stop; ++i) {
      running.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                   analyze_file, files[i], options));
    }
    for (std::size_t i = start; i < stop; ++i) outcomes[i] = running[i - start].get();
  }

  int code = kExitOk;
  json all = json::array();
  for (const auto& o : outcomes) {
    if (!o.report) {
      err << "error: " << o.error << "\n";
      code = std::max<int>(code, kExitInputError);
      if (as_json) all.push_back({{"error", o.error}});
      continue;
    }
    if (!o.report->violations.empty()) code = kExitInvariantViolation;
    if (as_json) all.push_back(to_json(*o.report));
    else out << render_text(*o.report) << "\n";
  }
  if (as_json) out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return code;
}

int run_poly(const std::string& coeffs, double tol, bool as_json, std::ostream& out, std::ostream& err) {
  RationalPolynomial poly;
  try {
    poly = RationalPolynomial(parse_coefficient_list(coeffs));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (poly.degree() < 1) {
    err << "error: polynomial must have degree >= 1\n";
    return kExitInputError;
  }
  const RootReport report = classify(poly, poly.degree(), tol);
  if (as_json) {
    json j = to_json(report);
    j["polynomial"] = poly.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << "L(m) = " << poly.to_string() << "\n" << render_text(report);
  }
  return kExitOk;
}

int run_tables(int dim, bool as_json, std::ostream& out, std::ostream& err) {
  if (dim != 4 && dim != 5) {
    err << "error: --dim must be 4 or 5\n";
    return kExitInputError;
  }
  int code = kExitOk;
  std::size_t passed = 0;
  json rows = json::array();
  for (const auto& pair : smooth_invariant_pairs(dim)) {
    const BoundsReport bounds = check_bounds(dim, pair.f0, pair.b2);
    std::vector<std::string> betas;
    std::string problem;
    try {
      for (const auto& b : root_betas(dim, pair.f0, Integer(pair.b2)).beta_squared) {
        betas.push_back(b.to_string());
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    const bool ok = bounds.all_pass() && problem.empty();
    if (ok) ++passed;
    else code = kExitInvariantViolation;
    if (as_json) {
      rows.push_back({{"f0", pair.f0},
                      {"b2", pair.b2},
                      {"vertex_lower", bounds.vertex_lower},
                      {"vertex_upper", bounds.vertex_upper},
                      {"b2_range", bounds.b2_range},
                      {"discriminant", bounds.discriminant},
                      {"beta_squared", betas},
                      {"ok", ok}});
    } else {
      out << "f0=" << pair.f0 << " b2=" << pair.b2 << " bounds=" << (bounds.all_pass() ? "pass" : "FAIL")
          << " beta^2:";
      for (const auto& b : betas) out << " [" << b << "]";
      if (!problem.empty()) out << " ERROR " << problem;
      out << "\n";
    }
  }
  if (as_json) out << json{{"dim", dim}, {"rows", rows}}.dump(2) << "\n";
  else out << passed << "/" << smooth_invariant_pairs(dim).size() << " pairs pass\n";
  return code;
}

int run_fixtures(double tol, bool as_json, std::ostream& out, std::ostream&) {
  int code = kExitOk;
  json all = json::array();
  for (const auto& fx : dim6_offline_fixtures()) {
    const RootReport report = classify(fx.poly, 6, tol);
    const bool reciprocity = verify_reciprocity(fx.poly, 6);
    const bool right_of_strip = report.max_real_part > 0;
    const bool left_of_strip = report.min_real_part < -1;
    bool ok = reciprocity && report.exact_canonical_line == false && report.in_braun_disc;
    const bool is_1930 = std::find(fx.ids.begin(), fx.ids.end(), 1930) != fx.ids.end();
    if (is_1930) ok = ok && right_of_strip && left_of_strip;
    if (!ok) code = kExitInvariantViolation;
    if (as_json) {
      json j = to_json(report);
      j["ids"] = fx.ids;
      j["polynomial"] = fx.poly.to_string();
      j["reciprocity"] = reciprocity;
      j["root_right_of_strip"] = right_of_strip;
      j["root_left_of_strip"] = left_of_strip;
      all.push_back(std::move(j));
    } else {
      out << "fixture " << fx.label() << ": L(m) = " << fx.poly.to_string() << "\n";
      out << "reciprocity=" << (reciprocity ? "true" : "false")
          << " root_with_re_gt_0=" << (right_of_strip ? "true" : "false")
          << " root_with_re_lt_-1=" << (left_of_strip ? "true" : "false") << "\n";
      out << render_text(report) << "\n";
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart polynomials of lattice polytopes and certified root locations"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  AnalyzeOptions options;
  bool as_json = false;
  unsigned jobs = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze polytopes given as vertex files");
  analyze_cmd->add_option("files", files, "Vertex files (one vertex per line)")->required();
  analyze_cmd->add_option("--dilations,-M", options.dilations,
                          "Check identities for m = 1..M (default 2d)");
  analyze_cmd->add_option("--tol", options.tol, "Numeric tolerance")->default_val(1e-9);
  analyze_cmd->add_option("--threads", options.threads, "Threads per lattice-point count")
      ->default_val(1);
  analyze_cmd->add_option("--jobs,-j", jobs, "Files analyzed concurrently")->default_val(1);
  analyze_cmd->add_flag("--json", as_json, "Emit JSON");

  std::string coeffs;
  double tol = 1e-9;
  auto* poly_cmd = app.add_subcommand("poly", "Classify the roots of a given polynomial");
  poly_cmd->add_option("--coeffs", coeffs, "Comma-separated coefficients c0,c1,...")->required();
  poly_cmd->add_option("--tol", tol, "Numeric tolerance")->default_val(1e-9);
  poly_cmd->add_flag("--json", as_json, "Emit JSON");

  int dim = 0;
  auto* tables_cmd = app.add_subcommand("tables", "Check the tabulated (f0, b2) pairs");
  tables_cmd->add_option("--dim", dim, "4 or 5")->required();
  tables_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Classify the dimension-6 off-line fixtures");
  fixtures_cmd->add_option("--tol", tol, "Numeric tolerance")->default_val(1e-9);
  fixtures_cmd->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(files, options, as_json, jobs, out, err);
    if (*poly_cmd) return run_poly(coeffs, tol, as_json, out, err);
    if (*tables_cmd) return run_tables(dim, as_json, out, err);
    return run_fixtures(tol, as_json, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ehrhart::cli
