#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/formulas.hpp"
#include "ehrhart/geometry.hpp"
#include "ehrhart/rootcert.hpp"

namespace ehrhart::cli {

struct AnalyzeOptions {
  std::uint64_t dilations = 0;  // 0 means 2d
  double tol = 1e-9;
  unsigned threads = 1;
};

/// Everything `ehrhart analyze` computes for one polytope.
struct AnalysisReport {
  std::string input;
  int dim = 0;
  std::size_t num_vertices = 0;
  std::vector<Integer> f_vector;
  Integer f0;
  Integer b2;
  Rational volume;
  bool reflexive = false;
  bool smooth = false;
  std::vector<Rational> ehrhart;
  std::uint64_t dilations_checked = 0;
  bool polynomiality = false;     // counts agree with L beyond the nodes
  bool reciprocity = false;
  std::optional<bool> layers;     // reflexive only
  std::optional<bool> closed_form_match;  // smooth, d = 2..5
  std::optional<std::vector<QuadraticSurd>> beta_squared;
  RootReport roots;
  std::optional<BoundsReport> bounds;     // d = 4, 5
  std::optional<bool> table_pair_listed;  // smooth, d = 4, 5
  std::optional<BhwConditions> bhw;       // reflexive, d = 4
  std::vector<std::string> violations;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Polytope& p, std::string input, const AnalyzeOptions& options = {});

// Working-precision-aware decimal rendering of a root coordinate; parsing
// it back at the same precision recovers the value exactly.
std::string format_high_precision(const HighPrecision& x, unsigned digits);
HighPrecision parse_high_precision(const std::string& text, unsigned digits);

nlohmann::json to_json(const RootReport& report);
RootReport root_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const nlohmann::json& j);

std::string render_text(const RootReport& report);
std::string render_text(const AnalysisReport& report);

}  // namespace ehrhart::cli
