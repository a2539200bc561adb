#include "commands.hpp"

#include <algorithm>
#include <fstream>

#include "figures.hpp"
#include "popuc/errors.hpp"
#include "popuc/opuc.hpp"
#include "popuc/paraorthogonal.hpp"
#include "popuc/trajectory.hpp"
#include "svg.hpp"
#include "verify.hpp"

namespace popuc::cli {

namespace {

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << text;
}

WeightFamily family_of(const RunConfig& c) {
  if (c.family.empty()) throw ConfigError("--family is required for '" + c.command + "'");
  return WeightFamily::from_json(c.family);
}

int degree_of(const RunConfig& c) {
  if (c.degree < 1) throw ConfigError("--degree must be at least 1");
  return c.degree;
}

double t_of(const RunConfig& c, const WeightFamily& f) { return c.t ? *c.t : f.sweep_value(); }

nlohmann::json complex_array(const std::vector<Complex>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

int run_opuc(const RunConfig& c, std::ostream& os) {
  const auto f = family_of(c);
  const int n = c.degree;
  if (n < 0) throw ConfigError("--degree must be nonnegative");
  const double t = t_of(c, f);
  const auto basis = szego_levinson(moments(f, t, n, c.quad_tol), n);
  nlohmann::json j;
  j["family"] = nlohmann::json::parse(f.to_json());
  j["t"] = t;
  j["degree"] = n;
  j["monic"] = nlohmann::json::parse(basis.monic.back().to_json());
  j["verblunsky"] = complex_array(basis.verblunsky);
  j["norm2"] = basis.norm2;
  write_text(c.out, j.dump(2) + "\n", os);
  return 0;
}

int run_popuc_zeros(const RunConfig& c, std::ostream& os) {
  const auto f = family_of(c);
  const double t = t_of(c, f);
  const auto p = popuc_at(f, t, degree_of(c), parse_b_spec(c.b_spec));
  const auto zs = zeros(p, c.zero_options(f.theta0()));
  const std::string csv = zs.to_csv();
  write_text(c.out, csv, os);
  if (!c.svg.empty()) {
    // The SVG reads the CSV's re/im columns; give it a series column.
    std::string tagged = "series," + csv.substr(0, csv.find('\n') + 1);
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
      const std::size_t end = csv.find('\n', pos);
      tagged += "P," + csv.substr(pos, end - pos + 1);
      pos = end + 1;
    }
    write_text(c.svg, svg_from_csv(tagged, "popuc zeros"), os);
  }
  return 0;
}

int run_sweep(const RunConfig& c, std::ostream& os) {
  const auto f = family_of(c);
  if (!c.t_range) throw ConfigError("--t-range is required for sweep");
  SweepOptions opts;
  opts.zeros = c.zero_options(f.theta0());
  opts.match_gap = c.match_gap;
  const auto tab = sweep(f, c.t_range->grid(), degree_of(c), parse_b_spec(c.b_spec), opts);
  const std::string csv = tab.to_csv();
  write_text(c.out, csv, os);
  if (!c.out.empty()) write_text(c.out + ".verdicts.json", verdicts_to_json(monotonicity_verdict(tab)), os);
  if (!c.svg.empty()) write_text(c.svg, svg_from_csv(csv, "sweep " + tab.b_rule), os);
  return 0;
}

ComparisonAnchor parse_anchor(const std::string& text) {
  if (text.rfind("shared-zero:", 0) == 0) {
    const BRule r = parse_b_spec("fixed-zero:" + text.substr(12));
    return SharedZeroAt{std::get<FixedZero>(r).xi};
  }
  if (text == "symmetric:+1" || text == "symmetric:1") return SymmetricB{1.0};
  if (text == "symmetric:-1") return SymmetricB{-1.0};
  throw ConfigError("anchor must be shared-zero:<re>,<im> or symmetric:+1|-1");
}

int run_compare(const RunConfig& c, std::ostream& os) {
  const auto f1 = family_of(c);
  if (c.family2.empty()) throw ConfigError("--family2 is required for compare");
  const auto f2 = WeightFamily::from_json(c.family2);
  const auto cmp = comparison(f1, f2, degree_of(c), parse_anchor(c.anchor), c.zero_options());
  std::string csv = "index,arg1,arg2,first_below\n";
  char line[128];
  for (std::size_t j = 0; j < cmp.args1.size(); ++j) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%d\n", j, cmp.args1[j], cmp.args2[j],
                  cmp.first_below[j] ? 1 : 0);
    csv += line;
  }
  write_text(c.out, csv, os);
  return 0;
}

int run_verify(const RunConfig& c, std::ostream& os) {
  const auto results = run_suite(c.suite);
  write_text(c.out, format_report(results), os);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  return ok ? 0 : 4;
}

int run_figure(const RunConfig& c, std::ostream& os) {
  if (c.figure.empty()) throw ConfigError("figure id required (one of fig3-left ... fig6-right)");
  const std::string csv = figure_csv(c.figure, c.zero_options());
  write_text(c.out, csv, os);
  if (!c.svg.empty()) write_text(c.svg, svg_from_csv(csv, c.figure), os);
  return 0;
}

}  // namespace

int run(const RunConfig& c, std::ostream& os) {
  if (c.command == "opuc") return run_opuc(c, os);
  if (c.command == "popuc-zeros") return run_popuc_zeros(c, os);
  if (c.command == "sweep") return run_sweep(c, os);
  if (c.command == "compare") return run_compare(c, os);
  if (c.command == "verify") return run_verify(c, os);
  if (c.command == "figure") return run_figure(c, os);
  throw ConfigError("unknown command '" + c.command + "'");
}

}  // namespace popuc::cli
