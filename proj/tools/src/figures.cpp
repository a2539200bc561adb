#include "figures.hpp"

#include <cstdio>
#include <functional>

#include "popuc/errors.hpp"
#include "popuc/opuc.hpp"
#include "popuc/trajectory.hpp"

namespace popuc::cli {

namespace {

struct Series {
  std::string name;
  double param;
  ComplexPolynomial poly;
  Complex fixed;  // zero to flag as "fixed"; 0 when none
};

std::string zeros_csv(const std::vector<Series>& series, ZeroOptions options, double theta0) {
  options.theta0 = theta0;
  std::string out = "series,param,index,arg,re,im,role\n";
  char line[256];
  for (const auto& s : series) {
    const ZeroSet zs = zeros(s.poly, options);
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const bool fixed = s.fixed != Complex{} && std::abs(zs.zeros[k] - s.fixed) < 1e-8;
      std::snprintf(line, sizeof line, "%s,%.17g,%zu,%.17g,%.17g,%.17g,%s\n", s.name.c_str(), s.param, k, zs.args[k],
                    zs.zeros[k].real(), zs.zeros[k].imag(), fixed ? "fixed" : "zero");
      out += line;
    }
  }
  return out;
}

std::vector<Series> kernel_series(Complex xi) {
  std::vector<Series> out;
  for (double r : {0.1, 0.5, 0.9}) {
    const auto f = WeightFamily::bernstein_szego(r, 0.0);
    char name[32];
    std::snprintf(name, sizeof name, "r=%g", r);
    out.push_back({name, r, popuc_at(f, r, 15, FixedZero{xi}), xi});
  }
  return out;
}

std::vector<Series> comparison_series(const BRule& rule, Complex fixed) {
  const auto bs = WeightFamily::bernstein_szego(0.8, 0.0);
  const auto sm = WeightFamily::single_moment(0.8);
  return {{"bernstein-szego", 0.8, popuc_at(bs, 0.8, 15, rule), fixed},
          {"single-moment", 0.8, popuc_at(sm, 0.8, 15, rule), fixed}};
}

std::vector<Series> fh_series(double s) {
  std::vector<Series> out;
  for (double r : {0.1, 1.0, 17.0}) {
    char name[32];
    std::snprintf(name, sizeof name, "r=%g", r);
    out.push_back({name, r, fisher_hartwig_f(10, r, s).monic(), Complex{}});
  }
  return out;
}

std::string profile_csv(const std::function<double(const WeightFamily&, double)>& value) {
  struct Case {
    const char* name;
    double r;
    double phi;
  };
  const Case cases[] = {{"r=0.1 phi=0", 0.1, 0.0},
                        {"r=0.5 phi=0", 0.5, 0.0},
                        {"r=0.5 phi=pi", 0.5, kPi},
                        {"r=0.1 phi=3pi/2", 0.1, 1.5 * kPi}};
  constexpr int kPoints = 720;
  std::string out = "series,theta,value\n";
  char line[160];
  for (const auto& c : cases) {
    const auto f = WeightFamily::bernstein_szego(c.r, c.phi);
    for (int k = 0; k < kPoints; ++k) {
      const double theta = kTwoPi * (k + 0.5) / kPoints;
      std::snprintf(line, sizeof line, "%s,%.17g,%.17g\n", c.name, theta, value(f, theta));
      out += line;
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig3-left", "fig3-right", "fig4-left", "fig4-right",
                                            "fig5-left", "fig5-right", "fig6-left", "fig6-right"};
  return ids;
}

std::string figure_csv(const std::string& id, const ZeroOptions& options) {
  if (id == "fig3-left") return zeros_csv(kernel_series(Complex{1.0, 0.0}), options, 0.0);
  if (id == "fig3-right") return zeros_csv(kernel_series(Complex{0.0, 1.0}), options, 0.0);
  if (id == "fig4-left") {
    return profile_csv([](const WeightFamily& f, double theta) {
      return weight_log_derivative(f.with_sweep_param("r"), theta, f.param("r"));
    });
  }
  if (id == "fig4-right") {
    return profile_csv([](const WeightFamily& f, double theta) {
      return weight_log_derivative(f.with_sweep_param("phi"), theta, f.param("phi"));
    });
  }
  if (id == "fig5-left") return zeros_csv(comparison_series(FixedZero{1.0}, Complex{1.0, 0.0}), options, 0.0);
  if (id == "fig5-right") return zeros_csv(comparison_series(ConstantB{Complex{0.0, 1.0}}, Complex{}), options, 0.0);
  if (id == "fig6-left") return zeros_csv(fh_series(1.0), options, -kPi);
  if (id == "fig6-right") return zeros_csv(fh_series(-2.0), options, -kPi);
  throw ConfigError("unknown figure id '" + id + "'");
}

}  // namespace popuc::cli
