// popuc_lab: OPUC/POPUC zeros, sweeps, figures and verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "figures.hpp"
#include "popuc/errors.hpp"
#include "verify.hpp"

namespace {

struct Flags {
  std::string family;
  std::string family2;
  int degree = 0;
  std::string b_spec;
  double t = 0.0;
  std::string t_range;
  std::string anchor;
  std::string suite;
  std::string figure;
  double circle_tol = 1e-8;
  double sep_tol = 1e-9;
  double match_gap = 0.5;
  double quad_tol = 1e-13;
  std::string out;
  std::string svg;
  std::string config;
  bool echo = false;
};

int report(const std::string& name, const std::string& category, const std::string& message, int code) {
  nlohmann::json j{{"error", name}, {"category", category}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--family", f.family, "weight family: JSON descriptor, JSON file, or kind name");
  sub->add_option("--degree", f.degree, "polynomial degree n");
  sub->add_option("--t", f.t, "sweep-parameter value (default: the family's stored value)");
  sub->add_option("--circle-tol", f.circle_tol, "max ||zeta| - 1| accepted for a zero")->capture_default_str();
  sub->add_option("--sep-tol", f.sep_tol, "min argument gap between zeros")->capture_default_str();
  sub->add_option("--quad-tol", f.quad_tol, "absolute quadrature tolerance")->capture_default_str();
  sub->add_option("--out", f.out, "output path (stdout when omitted)");
  sub->add_option("--config", f.config, "JSON run config; explicit flags override it");
  sub->add_flag("--echo-config", f.echo, "print the canonical config JSON and exit");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace popuc::cli;
  CLI::App app{"OPUC/POPUC zeros, trajectories and verification"};
  app.require_subcommand(1);
  Flags f;

  auto* opuc = app.add_subcommand("opuc", "monic OPUC by the Szego recursion (polynomial JSON)");
  add_common(opuc, f);

  auto* zeros = app.add_subcommand("popuc-zeros", "zeros of a POPUC (CSV)");
  add_common(zeros, f);
  zeros->add_option("--b", f.b_spec, "const:<re>,<im> | fixed-zero:<re>,<im> | unimodular-path:exp(i*t)");
  zeros->add_option("--svg", f.svg, "also write an SVG scatter");

  auto* sweep = app.add_subcommand("sweep", "track zeros over a t grid (CSV + verdict JSON)");
  add_common(sweep, f);
  sweep->add_option("--b", f.b_spec, "b rule, as for popuc-zeros");
  sweep->add_option("--t-range", f.t_range, "start:end:steps");
  sweep->add_option("--match-gap", f.match_gap, "max matching step in radians")->capture_default_str();
  sweep->add_option("--svg", f.svg, "also write an SVG scatter");

  auto* compare = app.add_subcommand("compare", "pair zeros of two families");
  add_common(compare, f);
  compare->add_option("--family2", f.family2, "second weight family");
  compare->add_option("--anchor", f.anchor, "shared-zero:<re>,<im> | symmetric:+1 | symmetric:-1");

  auto* verify = app.add_subcommand("verify", "run property suites (exit 4 on failure)");
  add_common(verify, f);
  verify->add_option("--suite", f.suite, "suite name")->check(CLI::IsMember(suite_names()));

  auto* figure = app.add_subcommand("figure", "reproduce a named dataset");
  add_common(figure, f);
  figure->add_option("id", f.figure, "figure id")->check(CLI::IsMember(figure_ids()));
  figure->add_option("--svg", f.svg, "also write an SVG scatter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("ConfigError", "config", e.what(), 2);
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig config;
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw popuc::ConfigError("cannot read config '" + f.config + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw popuc::ConfigError(std::string("invalid config JSON: ") + e.what());
      }
      config = RunConfig::from_json(j);
    }
    config.command = sub->get_name();
    auto given = [&](const char* name) {
      try {
        return sub->get_option(name)->count() > 0;
      } catch (const CLI::OptionNotFound&) {
        return false;
      }
    };
    if (given("--family")) config.family = resolve_family(f.family).to_json();
    if (given("--family2")) config.family2 = resolve_family(f.family2).to_json();
    if (given("--degree")) config.degree = f.degree;
    if (given("--b")) config.b_spec = f.b_spec;
    if (given("--t")) config.t = f.t;
    if (given("--t-range")) config.t_range = parse_t_range(f.t_range);
    if (given("--anchor")) config.anchor = f.anchor;
    if (given("--suite")) config.suite = f.suite;
    if (given("id")) config.figure = f.figure;
    if (given("--circle-tol")) config.circle_tol = f.circle_tol;
    if (given("--sep-tol")) config.sep_tol = f.sep_tol;
    if (given("--match-gap")) config.match_gap = f.match_gap;
    if (given("--quad-tol")) config.quad_tol = f.quad_tol;
    if (given("--out")) config.out = f.out;
    if (given("--svg")) config.svg = f.svg;

    if (f.echo) {
      std::cout << config.canonical();
      return 0;
    }
    return run(config, std::cout);
  } catch (const popuc::Error& e) {
    const int code = e.category() == popuc::ErrorCategory::Config      ? 2
                     : e.category() == popuc::ErrorCategory::Numerical ? 3
                                                                       : 4;
    return report(e.name(), std::string(popuc::to_string(e.category())), e.what(), code);
  } catch (const std::exception& e) {
    return report("InternalError", "numerical", e.what(), 3);
  }
}
