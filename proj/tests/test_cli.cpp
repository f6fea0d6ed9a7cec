#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/polytope_file.hpp"
#include "cli/report.hpp"
#include "ehrhart/catalog.hpp"
#include "ehrhart/counting.hpp"

using namespace ehrhart;
using namespace ehrhart::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ehrhart");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("ehrhart_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string vertex_text(const Polytope& p) {
  std::string s;
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? " " : "") + v[i].str();
    s += "\n";
  }
  return s;
}

}  // namespace

TEST(PolytopeFile, Examples) {
  auto t = parse_polytope_file("1 0\n0 1\n-1 -1\n");
  EXPECT_EQ(t.vertices().size(), 3u);
  EXPECT_TRUE(is_reflexive(t));
  auto c = parse_polytope_file("# cross\n1 0\n-1 0\n0 1\n0 -1\n");
  EXPECT_EQ(facets(c), facets(cross_polytope(2)));
  EXPECT_THROW(parse_polytope_file("1 0\n0 1.5\n"), ParseError);
}

TEST(PolytopeFile, RejectsMalformedRows) {
  EXPECT_THROW(read_polytope_text("1 0\n0 1 2\n"), ParseError);
  EXPECT_THROW(read_polytope_text("1 x\n"), ParseError);
  EXPECT_THROW(read_polytope_text("1e3 0\n"), ParseError);
  auto f = read_polytope_text("# a comment\n\n  1 0 \n\t0 1\n# trailing\n");
  EXPECT_EQ(f.rows.size(), 2u);
  EXPECT_EQ(f.comments.size(), 2u);
  EXPECT_THROW(parse_polytope_file("1 0\n2 0\n"), NotFullDimensional);
  EXPECT_THROW(load_polytope_file("/nonexistent/polytope.txt"), std::runtime_error);
}

TEST(PolytopeFile, CoefficientList) {
  EXPECT_EQ(parse_coefficient_list("1,7/2,-3"), (std::vector<Rational>{1, Rational(7, 2), -3}));
  EXPECT_EQ(parse_coefficient_list(" 1 , 2 ,2"), (std::vector<Rational>{1, 2, 2}));
  EXPECT_THROW(parse_coefficient_list("1,,2"), ParseError);
  EXPECT_THROW(parse_coefficient_list("1,0.5"), ParseError);
  EXPECT_THROW(parse_coefficient_list(""), ParseError);
}

TEST(Analyze, CrossPolytope4) {
  const auto r = analyze(cross_polytope(4), "C4");
  EXPECT_EQ(r.f0, 8);
  EXPECT_EQ(r.b2, 32);
  EXPECT_EQ(r.ehrhart, (std::vector<Rational>{1, Rational(8, 3), Rational(10, 3), Rational(4, 3), Rational(2, 3)}));
  EXPECT_EQ(r.roots.exact_canonical_line, true);
  EXPECT_EQ(r.table_pair_listed, true);
  EXPECT_EQ(r.closed_form_match, true);
  EXPECT_EQ(r.volume, Rational(2, 3));
  EXPECT_TRUE(r.violations.empty());
}

TEST(Analyze, Triangle) {
  const auto r = analyze(parse_polytope_file("1 0\n0 1\n-1 -1\n"), "S2");
  EXPECT_TRUE(r.smooth);
  EXPECT_TRUE(r.roots.line_certified());
  ASSERT_TRUE(r.beta_squared.has_value());
  EXPECT_EQ(r.beta_squared->at(0).rational, Rational(5, 12));
  for (const auto& z : r.roots.roots) EXPECT_NEAR(std::abs(z.approx().imag()), std::sqrt(5.0 / 12), 1e-12);
}

TEST(Analyze, UnitSquareIsNotApplicable) {
  const auto r = analyze(parse_polytope_file("0 0\n1 0\n0 1\n1 1\n"), "square");
  EXPECT_FALSE(r.reflexive);
  EXPECT_FALSE(r.roots.exact_canonical_line.has_value());
  EXPECT_FALSE(r.layers.has_value());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_NE(render_text(r).find("not symmetric"), std::string::npos);
}

TEST(Analyze, WholeCatalogCertifies) {
  for (const auto& [name, p] : extended_smooth_catalog()) {
    if (p.dim() > 5) continue;
    const auto r = analyze(p, name);
    EXPECT_EQ(r.roots.exact_canonical_line, true) << name;
    EXPECT_EQ(r.closed_form_match, true) << name;
    EXPECT_TRUE(r.violations.empty()) << name;
  }
}

TEST(Json, AnalysisReportRoundTrips) {
  for (const auto& [name, p] : smooth_catalog()) {
    if (p.dim() > 4) continue;
    const auto r = analyze(p, name);
    const auto text = to_json(r).dump();
    EXPECT_EQ(analysis_report_from_json(nlohmann::json::parse(text)), r) << name;
  }
  const auto sq = analyze(parse_polytope_file("0 0\n1 0\n0 1\n1 1\n"), "square");
  EXPECT_EQ(analysis_report_from_json(nlohmann::json::parse(to_json(sq).dump())), sq);
}

TEST(Json, RootReportRoundTripsAtEveryPrecision) {
  for (const auto& f : dim6_offline_fixtures()) {
    const auto r = classify(f.poly, 6);
    EXPECT_EQ(root_report_from_json(nlohmann::json::parse(to_json(r).dump())), r) << f.label();
  }
  for (unsigned digits : kPrecisionLadder) {
    const HighPrecision x = HighPrecision(1) / 3;
    const auto text = format_high_precision(x, digits);
    EXPECT_EQ(format_high_precision(parse_high_precision(text, digits), digits), text);
  }
}

TEST(Json, RationalsAreStrings) {
  const auto j = to_json(analyze(cross_polytope(2), "C2"));
  EXPECT_EQ(j.at("volume"), "2");
  EXPECT_TRUE(j.at("ehrhart").at(1).is_string());
}

TEST(Commands, Poly) {
  auto pc = run({"poly", "--coeffs", "1,7/2,21/4,15/4,5/2,3/4,1/4"});
  EXPECT_EQ(pc.code, 0);
  EXPECT_NE(pc.out.find("line=false"), std::string::npos) << pc.out;
  auto on = run({"poly", "--coeffs", "1,2,2"});
  EXPECT_NE(on.out.find("line=true"), std::string::npos) << on.out;
  auto off = run({"poly", "--coeffs", "1,3,2", "--json"});
  const auto j = nlohmann::json::parse(off.out);
  EXPECT_EQ(j.at("in_canonical_strip"), true);
  EXPECT_EQ(run({"poly", "--coeffs", "1,0.5"}).code, 1);
  EXPECT_EQ(run({"poly", "--coeffs", "4"}).code, 1);
}

TEST(Commands, Tables) {
  auto four = run({"tables", "--dim", "4"});
  EXPECT_EQ(four.code, 0);
  EXPECT_NE(four.out.find("20/20 pairs pass"), std::string::npos);
  auto five = run({"tables", "--dim", "5", "--json"});
  EXPECT_EQ(five.code, 0);
  EXPECT_EQ(nlohmann::json::parse(five.out).at("rows").size(), 29u);
  EXPECT_EQ(run({"tables", "--dim", "3"}).code, 1);
}

TEST(Commands, Fixtures) {
  auto r = run({"fixtures", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
  auto text = run({"fixtures"});
  EXPECT_NE(text.out.find("1930"), std::string::npos);
}

TEST(Commands, AnalyzeExitCodes) {
  TempFile cross(vertex_text(cross_polytope(4)));
  TempFile square("0 0\n1 0\n0 1\n1 1\n");
  TempFile bad("1 0\n0 1.5\n");
  TempFile flat("0 0\n1 0\n2 0\n");
  EXPECT_EQ(run({"analyze", cross.path()}).code, 0);
  EXPECT_EQ(run({"analyze", square.path()}).code, 0);
  EXPECT_EQ(run({"analyze", bad.path()}).code, 1);
  EXPECT_EQ(run({"analyze", flat.path()}).code, 1);
  EXPECT_EQ(run({"analyze", "/nonexistent/file.txt"}).code, 1);
  EXPECT_EQ(run({"analyze", cross.path(), bad.path()}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  // Stable across runs.
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run({"analyze", bad.path(), square.path()}).code, 1);
}

TEST(Commands, BatchPreservesInputOrder) {
  TempFile a(vertex_text(cross_polytope(2)));
  TempFile b("1 0\n0 1\n-1 -1\n");
  TempFile c(vertex_text(smooth_hexagon()));
  auto r = run({"analyze", a.path(), b.path(), c.path(), "--jobs", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("input"), a.path());
  EXPECT_EQ(j[1].at("input"), b.path());
  EXPECT_EQ(j[2].at("input"), c.path());
  auto serial = run({"analyze", a.path(), b.path(), c.path(), "--json"});
  EXPECT_EQ(serial.out, r.out);
}
