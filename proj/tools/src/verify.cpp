#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "popuc/angles.hpp"
#include "popuc/errors.hpp"
#include "popuc/opuc.hpp"
#include "popuc/paraorthogonal.hpp"
#include "popuc/trajectory.hpp"
#include "scenarios.hpp"

namespace popuc::cli {

namespace {

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_coeff_diff(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  double m = 0.0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

void moments_suite(std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (double r : {0.3, 0.8}) {
    const auto m = moments(WeightFamily::single_moment(r), r, 6);
    worst = std::max(worst, std::abs(m(0) - 1.0));
    worst = std::max(worst, std::abs(m(1) + r / 2.0));
    worst = std::max(worst, std::abs(m(-1) + r / 2.0));
    for (int j = 2; j <= 6; ++j) worst = std::max(worst, std::abs(m(j)));
  }
  out.push_back({"moments", "single-moment analytic", worst <= 1e-10, "max err " + sci(worst)});
}

void closed_form_suite(std::vector<CheckResult>& out) {
  const std::vector<std::pair<WeightFamily, double>> cases{
      {WeightFamily::bernstein_szego(0.6, 0.0), 1e-7},     {WeightFamily::single_moment(0.7), 1e-7},
      {WeightFamily::fisher_hartwig(1.5, 0.7, "s"), 1e-7}, {WeightFamily::fisher_hartwig(0.0, -1.0, "s"), 1e-7},
      {WeightFamily::fisher_hartwig(-0.3, 0.5, "s"), 1e-6}};
  for (const auto& [f, tol] : cases) {
    const double t = f.sweep_value();
    const auto basis = szego_levinson(moments(f, t, 6), 6);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) worst = std::max(worst, max_coeff_diff(basis.monic[n], closed_form_opuc(f, t, n)));
    out.push_back({"closed-form", f.to_json(), worst <= tol, "max err " + sci(worst)});
  }
}

void spectrum_suite(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> radius(0.0, 0.95);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> degree(1, 25);
  double circle = 0.0;
  double gap = kTwoPi;
  double poly = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = degree(rng);
    std::vector<Complex> a(n - 1);
    for (auto& v : a) v = std::polar(radius(rng), angle(rng));
    const Complex b = std::polar(1.0, angle(rng));
    const auto p = make_popuc(szego_from_verblunsky(a).monic.back(), b);
    const auto g = ggt(a, b);
    poly = std::max(poly, max_coeff_diff(char_poly(g), p) / std::max(1.0, p.max_abs_coeff()));
    const auto zs = zeros(p);
    for (double r : zs.abs_residual) circle = std::max(circle, r);
    if (n > 1) gap = std::min(gap, zs.min_gap());
  }
  out.push_back({"spectrum", "unit circle", circle <= 1e-8, "max ||z|-1| " + sci(circle)});
  out.push_back({"spectrum", "simple zeros", gap > 1e-9, "min gap " + sci(gap)});
  out.push_back({"spectrum", "GGT char poly", poly <= 1e-10, "max rel err " + sci(poly)});
}

void structural_suite(std::vector<CheckResult>& out) {
  const std::vector<WeightFamily> families{WeightFamily::bernstein_szego(0.5, 0.0), WeightFamily::single_moment(0.5),
                                           WeightFamily::fisher_hartwig(1.0, 0.5, "s")};
  for (const auto& f : families) {
    const double t = f.sweep_value();
    const int n = 6;
    const auto basis = szego_levinson(moments(f, t, n), n);
    const auto p = make_popuc(basis.monic[n - 1], Complex{1.0, 0.0});
    const double exp_res = quasi_orthogonality_residual(p, f, t);
    double riesz = 0.0;
    double cmin = INFINITY;
    const ComplexPolynomial h(std::vector<Complex>{{0.3, -0.2}, {1.0, 0.5}, {0.0, 0.0}, {-0.4, 0.1}});
    for (const Complex& z : zeros(p).zeros) {
      const auto rc = riesz_property_check(p, f, t, z, h);
      riesz = std::max(riesz, std::abs(rc.lhs - rc.rhs));
      cmin = std::min(cmin, std::abs(rc.c));
    }
    const ComplexPolynomial g(std::vector<Complex>{{1.0, 0.0}, {0.0, -2.0}, {0.5, 0.5}});
    const double cd = reproducing_residual(basis, f, t, std::polar(0.7, 0.4), g, n);
    std::vector<Complex> sample;
    for (int k = 0; k < 20; ++k) sample.push_back(std::polar(0.3 + 0.05 * k, 0.9 + 0.27 * k));
    const double kf = kernel_factorization_check(basis, std::polar(1.0, 0.8), n, sample);
    const std::string name = std::string(to_string(f.kind()));
    out.push_back({"structural", name + " quasi-orthogonality", exp_res <= 1e-8, sci(exp_res)});
    out.push_back({"structural", name + " Riesz property", riesz <= 1e-7 && cmin > 1e-6,
                   sci(riesz) + ", min |C| " + sci(cmin)});
    out.push_back({"structural", name + " reproducing kernel", cd <= 1e-8, sci(cd)});
    out.push_back({"structural", name + " kernel factorization", kf <= 1e-8, sci(kf)});
  }
}

void lidskii_suite(std::vector<CheckResult>& out) {
  const double beta_prime = 0.7;
  const Complex b = std::polar(1.0, 0.3);
  const double one = lidskii_velocity({}, b, Complex{0.0, beta_prime} * b, std::conj(b));
  out.push_back({"lidskii", "n=1", std::abs(one + beta_prime) <= 1e-8, sci(one)});
  const Complex b5 = std::polar(1.0, 0.4);
  const auto zs = zeros(make_popuc(ComplexPolynomial::monomial(4), b5));
  double worst = 0.0;
  for (const Complex& z : zs.zeros) {
    worst = std::max(worst, std::abs(lidskii_velocity(std::vector<Complex>(4), b5, Complex{0.0, 1.0} * b5, z) + 0.2));
  }
  out.push_back({"lidskii", "lebesgue n=5", worst <= 1e-8, "max err " + sci(worst)});
}

void s_function_suite(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  int evaluated = 0;
  bool ok = true;
  while (evaluated < 100) {
    const double th = angle(rng), phi = angle(rng), th0 = angle(rng);
    try {
      s_fixed(th, phi, th0);
      s_conjugate(th - kPi, phi);
      ++evaluated;
    } catch (const PoleError&) {
      continue;
    } catch (const VerificationFailure&) {
      ok = false;
      ++evaluated;
    }
  }
  out.push_back({"s-function", "dual forms", ok, std::to_string(evaluated) + " points"});
  // Sign pattern as computed: positive on (theta0, phi), negative on (phi, theta0 + 2pi).
  bool fixed_pattern = true;
  for (int k = 1; k < 64; ++k) {
    const double th = kTwoPi * k / 64.0;
    if (std::abs(th - 2.0) < 1e-6) continue;
    const double v = s_fixed(th, 2.0, 0.0);
    if ((th < 2.0) != (v > 0.0)) fixed_pattern = false;
  }
  out.push_back({"s-function", "fixed-zero sign pattern", fixed_pattern, "positive on (theta0, phi)"});
  bool conj_pattern = true;
  for (int k = 1; k < 64; ++k) {
    const double th = -kPi + kTwoPi * k / 64.0;
    if (std::abs(std::abs(th) - 1.0) < 1e-6) continue;
    const double v = s_conjugate(th, 1.0);
    if ((std::abs(th) < 1.0) != (v > 0.0)) conj_pattern = false;
  }
  out.push_back({"s-function", "conjugate sign pattern", conj_pattern, "positive on (-phi, phi)"});
}

void directions_suite(std::vector<CheckResult>& out) {
  const auto k1 = bernstein_szego_kernel(Complex{1.0, 0.0});
  out.push_back({"directions", "bernstein-szego K14(1,.) upper decreasing", k1.all(Direction::Decreasing),
                 k1.summary()});
  for (double b : {1.0, -1.0}) {
    const auto run = single_moment_symmetric(b);
    out.push_back({"directions", std::string("single-moment P15(") + (b > 0 ? "+1" : "-1") + ") upper increasing",
                   run.all(Direction::Increasing), run.summary()});
  }
  const auto up = fisher_hartwig_r(1.0, true);
  out.push_back({"directions", "f10(r,1) upper increasing", up.all(Direction::Increasing), up.summary()});
  const auto low = fisher_hartwig_r(-2.0, false);
  out.push_back({"directions", "f10(r,-2) lower decreasing", low.all(Direction::Decreasing), low.summary()});
  for (double r : {0.75, 2.0}) {
    const auto run = fisher_hartwig_s(r);
    out.push_back({"directions", "f10(" + sci(r) + ",s) clockwise in s", run.all(Direction::Decreasing),
                   run.summary()});
  }
  const auto aux = auxx_comparison(FixedZero{Complex{1.0, 0.0}});
  std::string detail = "sm vs bs upper:";
  for (std::size_t j = 0; j < aux.sm_upper.size(); ++j) detail += " " + sci(aux.sm_upper[j]) + "/" + sci(aux.bs_upper[j]);
  out.push_back({"directions", "single-moment below bernstein-szego on (0,pi)", aux.upper_holds, detail});
}

void interlacing_suite(std::vector<CheckResult>& out) {
  bool ok = true;
  std::string detail;
  for (double r : {0.75, 2.0}) {
    for (double s : {0.0, 1.0}) {
      for (unsigned n = 0; n <= 8; ++n) {
        const auto za = zeros(fisher_hartwig_f(n + 1, r, s).monic());
        const auto zb = zeros(fisher_hartwig_f(n + 2, r, s).monic());
        if (!interlacing_check(za, zb)) {
          ok = false;
          detail += " (r=" + sci(r) + ",s=" + sci(s) + ",n=" + std::to_string(n) + ")";
        }
      }
    }
  }
  out.push_back({"interlacing", "f_{n+1} vs f_{n+2}", ok, ok ? "36 pairs" : detail});
}

using SuiteFn = void (*)(std::vector<CheckResult>&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"moments", moments_suite},       {"closed-form", closed_form_suite}, {"spectrum", spectrum_suite},
      {"structural", structural_suite}, {"lidskii", lidskii_suite},         {"s-function", s_function_suite},
      {"interlacing", interlacing_suite}, {"directions", directions_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      found = true;
      try {
        fn(out);
      } catch (const Error& e) {
        out.push_back({name, "suite aborted", false, e.name() + ": " + e.what()});
      }
    }
  }
  if (!found) throw ConfigError("unknown verify suite '" + suite + "'");
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += (r.passed ? "PASS " : "FAIL ") + r.suite + "/" + r.name + ": " + r.detail + "\n";
  }
  return out;
}

}  // namespace popuc::cli
