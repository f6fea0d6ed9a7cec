#include "cli/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include "ehrhart/counting.hpp"
#include "ehrhart/tables.hpp"

namespace ehrhart::cli {
namespace mp = boost::multiprecision;
using nlohmann::json;

namespace {

template <unsigned Digits>
using Working = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

template <unsigned Digits>
std::string format_at(const HighPrecision& x) {
  const Working<Digits> narrow(x);
  return narrow.str(std::numeric_limits<Working<Digits>>::max_digits10, std::ios_base::scientific);
}

template <unsigned Digits>
HighPrecision parse_at(const std::string& text) {
  return HighPrecision(Working<Digits>(text));
}

json strings(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json strings(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <class T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json surd_json(const QuadraticSurd& s) {
  return {{"rational", to_string(s.rational)},
          {"coefficient", to_string(s.coefficient)},
          {"radicand", to_string(s.radicand)},
          {"text", s.to_string()}};
}

QuadraticSurd surd_from(const json& j) {
  return QuadraticSurd{parse_rational(j.at("rational").get<std::string>()),
                       parse_rational(j.at("coefficient").get<std::string>()),
                       parse_rational(j.at("radicand").get<std::string>())};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string short_decimal(const HighPrecision& x, int digits = 15) {
  return x.str(digits, std::ios_base::fixed);
}

std::string short_sci(const HighPrecision& x) { return x.str(3, std::ios_base::scientific); }

}  // namespace

std::string format_high_precision(const HighPrecision& x, unsigned digits) {
  switch (digits) {
    case 50: return format_at<50>(x);
    case 100: return format_at<100>(x);
    case 200: return format_at<200>(x);
    case 400: return format_at<400>(x);
    default: throw std::invalid_argument("unsupported working precision " + std::to_string(digits));
  }
}

HighPrecision parse_high_precision(const std::string& text, unsigned digits) {
  switch (digits) {
    case 50: return parse_at<50>(text);
    case 100: return parse_at<100>(text);
    case 200: return parse_at<200>(text);
    case 400: return parse_at<400>(text);
    default: throw std::invalid_argument("unsupported working precision " + std::to_string(digits));
  }
}

AnalysisReport analyze(const Polytope& p, std::string input, const AnalyzeOptions& options) {
  const CountOptions counting{options.threads};
  AnalysisReport r;
  r.input = std::move(input);
  r.dim = static_cast<int>(p.dim());
  r.num_vertices = p.vertices().size();
  r.reflexive = is_reflexive(p);
  r.smooth = is_smooth(p);

  const FVector fvec = f_vector(p);
  r.f_vector.assign(fvec.entries().begin(), fvec.entries().end());
  r.f0 = fvec[0];
  r.b2 = count_boundary(p, 2, counting);

  const RationalPolynomial poly = ehrhart(p, counting);
  r.ehrhart = poly.coefficients();
  r.volume = poly.leading_coefficient();

  const int d = r.dim;
  r.dilations_checked = options.dilations ? options.dilations : 2 * static_cast<std::uint64_t>(d);
  r.polynomiality = true;
  for (std::uint64_t m = static_cast<std::uint64_t>(d) + 1; m <= r.dilations_checked; ++m) {
    if (Rational(count_points(p, m, counting)) != poly(Rational(static_cast<long>(m)))) {
      r.polynomiality = false;
    }
  }
  if (!r.polynomiality) r.violations.push_back("lattice-point counts are not polynomial in m");

  r.reciprocity = verify_reciprocity(poly, d);
  if (r.reflexive) {
    r.layers = verify_layers(p, r.dilations_checked, counting);
    if (!r.reciprocity) r.violations.push_back("reflexive polytope fails L(-m-1) = (-1)^d L(m)");
    if (!*r.layers) r.violations.push_back("reflexive polytope fails L(m) = L_boundary(m) + L(m-1)");
  }

  std::optional<Integer> b2_arg;
  if (d >= 4) b2_arg = r.b2;
  if (r.smooth && d >= 2 && d <= 5) {
    const RationalPolynomial closed = ehrhart_closed(d, r.f0, b2_arg);
    r.closed_form_match = closed == poly && ehrhart_from_fvector(fvec) == poly;
    if (!*r.closed_form_match) r.violations.push_back("closed-form Ehrhart polynomial mismatch");
    try {
      r.beta_squared = root_betas(d, r.f0, b2_arg).beta_squared;
    } catch (const Error& e) {
      r.violations.push_back(std::string("root formula: ") + e.what());
    }
    if (r.b2 != r.f0 + fvec[1]) r.violations.push_back("b2 != f0 + f1");
  }

  r.roots = classify(poly, d, options.tol);
  if (r.smooth && d <= 5 && !r.roots.line_certified()) {
    r.violations.push_back("smooth polytope of dimension <= 5 has roots off Re z = -1/2");
  }
  if (r.roots.line_certified() && !r.roots.on_line_numeric) {
    r.violations.push_back("exact certificate and numeric roots disagree");
  }

  if (d == 4 || d == 5) {
    r.bounds = check_bounds(d, r.f0, r.b2);
    if (r.smooth) {
      if (!r.bounds->all_pass()) r.violations.push_back("smooth polytope violates the (f0, b2) bounds");
      r.table_pair_listed = r.f0 <= 1000 && r.b2 <= 100000 &&
                            is_listed_pair(d, r.f0.convert_to<int>(), r.b2.convert_to<int>());
      if (!*r.table_pair_listed) r.violations.push_back("(f0, b2) is not a tabulated smooth pair");
    }
  }
  if (d == 4 && r.reflexive) {
    r.bhw = bhw_conditions(count_boundary(p, 1, counting), r.volume);
    if (r.smooth) {
      if (!(r.bhw->boundary_bound && r.bhw->discriminant)) {
        r.violations.push_back("smooth 4-polytope fails the BHW root conditions");
      }
      const Integer f3 = fvec[3];
      if (f3 != r.b2 - 2 * r.f0) r.violations.push_back("f3 != b2 - 2 f0");
      if (Rational(f3) != 24 * r.volume) r.violations.push_back("f3 != 24 vol");
    }
  }
  return r;
}

json to_json(const RootReport& r) {
  json roots = json::array();
  for (const auto& z : r.roots) {
    roots.push_back({{"re", format_high_precision(z.re, r.working_digits)},
                     {"im", format_high_precision(z.im, r.working_digits)},
                     {"residual", format_high_precision(z.residual, r.working_digits)}});
  }
  return {{"degree", r.degree},
          {"symmetric", r.symmetric},
          {"exact_canonical_line", optional_value(r.exact_canonical_line)},
          {"tolerance", r.tolerance},
          {"working_digits", r.working_digits},
          {"roots", roots},
          {"max_residual", format_high_precision(r.max_residual, r.working_digits)},
          {"min_real_part", format_high_precision(r.min_real_part, r.working_digits)},
          {"max_real_part", format_high_precision(r.max_real_part, r.working_digits)},
          {"on_line_numeric", r.on_line_numeric},
          {"in_canonical_strip", r.in_canonical_strip},
          {"in_bldps_strip", r.in_bldps_strip},
          {"in_braun_disc", r.in_braun_disc}};
}

RootReport root_report_from_json(const json& j) {
  RootReport r;
  r.degree = j.at("degree").get<int>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.exact_canonical_line = optional_from<bool>(j.at("exact_canonical_line"));
  r.tolerance = j.at("tolerance").get<double>();
  r.working_digits = j.at("working_digits").get<unsigned>();
  const unsigned digits = r.working_digits;
  for (const auto& z : j.at("roots")) {
    r.roots.push_back(ComplexRoot{parse_high_precision(z.at("re").get<std::string>(), digits),
                                  parse_high_precision(z.at("im").get<std::string>(), digits),
                                  parse_high_precision(z.at("residual").get<std::string>(), digits)});
  }
  r.max_residual = parse_high_precision(j.at("max_residual").get<std::string>(), digits);
  r.min_real_part = parse_high_precision(j.at("min_real_part").get<std::string>(), digits);
  r.max_real_part = parse_high_precision(j.at("max_real_part").get<std::string>(), digits);
  r.on_line_numeric = j.at("on_line_numeric").get<bool>();
  r.in_canonical_strip = j.at("in_canonical_strip").get<bool>();
  r.in_bldps_strip = j.at("in_bldps_strip").get<bool>();
  r.in_braun_disc = j.at("in_braun_disc").get<bool>();
  return r;
}

json to_json(const AnalysisReport& r) {
  json betas = nullptr;
  if (r.beta_squared) {
    betas = json::array();
    for (const auto& s : *r.beta_squared) betas.push_back(surd_json(s));
  }
  json bounds = nullptr;
  if (r.bounds) {
    bounds = {{"dim", r.bounds->dim},
              {"vertex_lower", r.bounds->vertex_lower},
              {"vertex_upper", r.bounds->vertex_upper},
              {"b2_range", r.bounds->b2_range},
              {"discriminant", r.bounds->discriminant}};
  }
  json bhw = nullptr;
  if (r.bhw) bhw = {{"boundary_bound", r.bhw->boundary_bound}, {"discriminant", r.bhw->discriminant}};
  return {{"input", r.input},
          {"dim", r.dim},
          {"num_vertices", r.num_vertices},
          {"f_vector", strings(r.f_vector)},
          {"f0", to_string(r.f0)},
          {"b2", to_string(r.b2)},
          {"volume", to_string(r.volume)},
          {"reflexive", r.reflexive},
          {"smooth", r.smooth},
          {"ehrhart", strings(r.ehrhart)},
          {"dilations_checked", r.dilations_checked},
          {"polynomiality", r.polynomiality},
          {"reciprocity", r.reciprocity},
          {"layers", optional_value(r.layers)},
          {"closed_form_match", optional_value(r.closed_form_match)},
          {"beta_squared", betas},
          {"roots", to_json(r.roots)},
          {"bounds", bounds},
          {"table_pair_listed", optional_value(r.table_pair_listed)},
          {"bhw", bhw},
          {"violations", r.violations}};
}

AnalysisReport analysis_report_from_json(const json& j) {
  AnalysisReport r;
  r.input = j.at("input").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.num_vertices = j.at("num_vertices").get<std::size_t>();
  for (const auto& s : j.at("f_vector")) r.f_vector.push_back(parse_integer(s.get<std::string>()));
  r.f0 = parse_integer(j.at("f0").get<std::string>());
  r.b2 = parse_integer(j.at("b2").get<std::string>());
  r.volume = parse_rational(j.at("volume").get<std::string>());
  r.reflexive = j.at("reflexive").get<bool>();
  r.smooth = j.at("smooth").get<bool>();
  for (const auto& s : j.at("ehrhart")) r.ehrhart.push_back(parse_rational(s.get<std::string>()));
  r.dilations_checked = j.at("dilations_checked").get<std::uint64_t>();
  r.polynomiality = j.at("polynomiality").get<bool>();
  r.reciprocity = j.at("reciprocity").get<bool>();
  r.layers = optional_from<bool>(j.at("layers"));
  r.closed_form_match = optional_from<bool>(j.at("closed_form_match"));
  if (!j.at("beta_squared").is_null()) {
    r.beta_squared.emplace();
    for (const auto& s : j.at("beta_squared")) r.beta_squared->push_back(surd_from(s));
  }
  r.roots = root_report_from_json(j.at("roots"));
  if (const auto& b = j.at("bounds"); !b.is_null()) {
    r.bounds = BoundsReport{b.at("dim").get<int>(), b.at("vertex_lower").get<bool>(),
                            b.at("vertex_upper").get<bool>(), b.at("b2_range").get<bool>(),
                            b.at("discriminant").get<bool>()};
  }
  r.table_pair_listed = optional_from<bool>(j.at("table_pair_listed"));
  if (const auto& b = j.at("bhw"); !b.is_null()) {
    r.bhw = BhwConditions{b.at("boundary_bound").get<bool>(), b.at("discriminant").get<bool>()};
  }
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

std::string render_text(const RootReport& r) {
  std::ostringstream out;
  const std::string line =
      r.exact_canonical_line ? yes_no(*r.exact_canonical_line) : std::string("n/a (not symmetric)");
  out << "summary: symmetric=" << yes_no(r.symmetric) << " line=" << yes_no(r.line_certified())
      << " line_numeric=" << yes_no(r.on_line_numeric) << " strip=" << yes_no(r.in_canonical_strip)
      << " bldps_strip=" << yes_no(r.in_bldps_strip) << " disc=" << yes_no(r.in_braun_disc) << "\n";
  out << "degree: " << r.degree << "\n";
  out << "reciprocity L(-m-1) = (-1)^d L(m): " << yes_no(r.symmetric) << "\n";
  out << "canonical line Re z = -1/2 (exact): " << line << "\n";
  out << "canonical line (numeric, tol " << r.tolerance << "): " << yes_no(r.on_line_numeric) << "\n";
  out << "canonical strip -1 <= Re z <= 0: " << yes_no(r.in_canonical_strip) << "\n";
  out << "strip -d <= Re z <= d-1: " << yes_no(r.in_bldps_strip) << "\n";
  out << "Braun disc |z + 1/2| <= " << to_string(Rational(r.degree * (2 * r.degree - 1), 2)) << ": " << yes_no(r.in_braun_disc)
      << "\n";
  out << "real parts: min " << short_decimal(r.min_real_part) << ", max "
      << short_decimal(r.max_real_part) << "\n";
  out << "roots (" << r.working_digits << " digits, max residual " << short_sci(r.max_residual)
      << "):\n";
  for (const auto& z : r.roots) {
    out << "  " << short_decimal(z.re) << (z.im.sign() < 0 ? " - " : " + ")
        << short_decimal(abs(z.im)) << "i\n";
  }
  return out.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << "\n";
  out << "dimension: " << r.dim << ", vertices: " << r.num_vertices << "\n";
  out << "f-vector: (";
  for (std::size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? ", " : "") << r.f_vector[i];
  out << ")\n";
  out << "f0 = " << r.f0 << ", b2 = " << r.b2 << ", volume = " << to_string(r.volume) << "\n";
  out << "reflexive: " << yes_no(r.reflexive) << ", smooth: " << yes_no(r.smooth) << "\n";
  out << "Ehrhart polynomial: " << RationalPolynomial(r.ehrhart).to_string() << "\n";
  out << "counts polynomial up to m = " << r.dilations_checked << ": " << yes_no(r.polynomiality) << "\n";
  out << "reciprocity: " << yes_no(r.reciprocity) << "\n";
  if (r.layers) out << "layer identity up to m = " << r.dilations_checked << ": " << yes_no(*r.layers) << "\n";
  if (r.closed_form_match) out << "closed form matches: " << yes_no(*r.closed_form_match) << "\n";
  if (r.beta_squared) {
    out << "beta^2:";
    for (const auto& s : *r.beta_squared) out << " [" << s.to_string() << "]";
    out << "\n";
  }
  if (r.bounds) {
    out << "bounds (d=" << r.bounds->dim << "): vertex_lower=" << yes_no(r.bounds->vertex_lower)
        << " vertex_upper=" << yes_no(r.bounds->vertex_upper) << " b2_range=" << yes_no(r.bounds->b2_range)
        << " discriminant=" << yes_no(r.bounds->discriminant) << "\n";
  }
  if (r.table_pair_listed) out << "(f0, b2) tabulated: " << yes_no(*r.table_pair_listed) << "\n";
  if (r.bhw) {
    out << "BHW conditions: (i) " << yes_no(r.bhw->boundary_bound) << ", (ii) "
        << yes_no(r.bhw->discriminant) << "\n";
  }
  out << render_text(r.roots);
  for (const auto& v : r.violations) out << "VIOLATION: " << v << "\n";
  return out.str();
}

}  // namespace ehrhart::cli
