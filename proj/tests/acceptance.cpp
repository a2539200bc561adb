// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails. Tolerances are fixed here and nowhere else.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "oracles.hpp"
#include "popuc/angles.hpp"
#include "popuc/errors.hpp"
#include "popuc/measures.hpp"
#include "popuc/opuc.hpp"
#include "popuc/paraorthogonal.hpp"
#include "popuc/trajectory.hpp"
#include "scenarios.hpp"

#ifndef POPUC_LAB_PATH
#error "POPUC_LAB_PATH must name the CLI executable"
#endif

using namespace popuc;
using namespace popuc::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // extra indented lines
};

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) {
  const double d = std::max(std::abs(a), std::abs(b));
  return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

double coeff_rel(const ComplexPolynomial& p, const std::vector<Complex>& want) {
  double e = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    e = std::max(e, std::abs(p[static_cast<int>(k)] - want[k]));
    scale = std::max(scale, std::abs(want[k]));
  }
  return e / scale;
}

double coeff_abs(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  double e = 0.0;
  for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k) e = std::max(e, std::abs(p[k] - q[k]));
  return e;
}

std::vector<Complex> as_vector(const MomentSequence& m) { return {m.nonnegative().begin(), m.nonnegative().end()}; }

WeightFamily random_builtin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (static_cast<int>(u(rng) * 4.0)) {
    case 0:
      return WeightFamily::bernstein_szego(0.05 + 0.85 * u(rng), kTwoPi * u(rng));
    case 1:
      return WeightFamily::single_moment(0.05 + 0.9 * u(rng));
    case 2:
      return WeightFamily::fisher_hartwig(2.5 * u(rng), 3.0 * u(rng) - 1.5);
    default:
      return WeightFamily::lebesgue();
  }
}

// 1 ------------------------------------------------------------------
Outcome criterion1() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  double worst_oracle = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto f = WeightFamily::mixture(random_builtin(rng), random_builtin(rng), 0.1 + 0.8 * u(rng));
    if (trial % 3 == 0) f = WeightFamily::mixture(f, random_builtin(rng), 0.1 + 0.8 * u(rng));
    const auto m = moments(f, f.sweep_value(), 6);
    const auto basis = szego_levinson(m, 6);
    const auto c = as_vector(m);
    for (int n = 0; n <= 6; ++n) {
      const auto want = oracle::monic_opuc(c, n);
      worst = std::max(worst, coeff_rel(heine_determinant(m, n), basis.monic[n].coeffs()));
      worst_oracle = std::max(worst_oracle, coeff_rel(basis.monic[n], want));
    }
  }
  Outcome o;
  o.pass = worst <= 1e-9 && worst_oracle <= 1e-9;
  o.detail = "heine vs levinson max rel " + sci(worst) + " (<= 1e-9), levinson vs linear solve " + sci(worst_oracle) +
             ", 20 mixtures, n <= 6";
  return o;
}

// 2 ------------------------------------------------------------------
Outcome criterion2() {
  struct Case {
    WeightFamily f;
    double tol;
  };
  const std::vector<Case> cases{{WeightFamily::bernstein_szego(0.3, 0.0), 1e-7},
                                {WeightFamily::bernstein_szego(0.8, 2.1), 1e-7},
                                {WeightFamily::single_moment(0.2), 1e-7},
                                {WeightFamily::single_moment(0.9), 1e-7},
                                {WeightFamily::fisher_hartwig(0.75, 1.0), 1e-7},
                                {WeightFamily::fisher_hartwig(2.0, -2.0), 1e-7},
                                {WeightFamily::fisher_hartwig(0.0, 0.5), 1e-7},
                                {WeightFamily::fisher_hartwig(-0.2, 0.3), 1e-6},
                                {WeightFamily::fisher_hartwig(-0.4, -1.0), 1e-6}};
  Outcome o;
  double worst_regular = 0.0;
  double worst_negative = 0.0;
  for (const auto& c : cases) {
    const double t = c.f.sweep_value();
    const auto basis = szego_levinson(moments(c.f, t, 6), 6);
    double e = 0.0;
    for (int n = 0; n <= 6; ++n) e = std::max(e, coeff_abs(closed_form_opuc(c.f, t, n), basis.monic[n]));
    (c.tol > 1e-7 ? worst_negative : worst_regular) = std::max(c.tol > 1e-7 ? worst_negative : worst_regular, e);
    if (e > c.tol) o.pass = false;
  }
  o.detail = "max coeff err " + sci(worst_regular) + " (<= 1e-7), Fisher-Hartwig r<0 " + sci(worst_negative) +
             " (<= 1e-6), n <= 6";
  return o;
}

// 3 ------------------------------------------------------------------
Outcome criterion3() {
  double worst = 0.0;
  for (double r : {0.3, 0.8}) {
    const auto m = moments(WeightFamily::single_moment(r), r, 6);
    for (int j = -6; j <= 6; ++j) worst = std::max(worst, std::abs(m(j) - oracle::single_moment_moment(r, j)));
  }
  Outcome o;
  o.pass = worst <= 1e-10;
  o.detail = "max |c_j - analytic| " + sci(worst) + " (<= 1e-10), r in {0.3, 0.8}, |j| <= 6";
  return o;
}

// 4 ------------------------------------------------------------------
Outcome criterion4() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> rad(0.0, 0.99), ang(0.0, kTwoPi);
  std::uniform_int_distribution<int> deg(1, 25);
  double circle = 0.0;
  double gap = kTwoPi;
  double cp = 0.0;
  double oracle_dist = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    std::vector<Complex> a(n - 1);
    for (auto& v : a) v = std::polar(rad(rng), ang(rng));
    const Complex b = std::polar(1.0, ang(rng));
    const auto p = make_popuc(szego_from_verblunsky(a).monic.back(), b);
    cp = std::max(cp, coeff_abs(char_poly(ggt(a, b)), p) / std::max(1.0, p.max_abs_coeff()));
    const auto zs = zeros(p);
    for (const Complex& z : zs.zeros) circle = std::max(circle, std::abs(std::abs(z) - 1.0));
    if (n > 1) gap = std::min(gap, zs.min_gap());
    oracle_dist = std::max(oracle_dist, oracle::set_distance(zs.zeros, oracle::roots(p.coeffs())));
  }
  Outcome o;
  o.pass = circle <= 1e-8 && gap > 1e-9 && cp <= 1e-10;
  o.detail = "max ||z|-1| " + sci(circle) + " (<= 1e-8), min gap " + sci(gap) + " (> 1e-9), char poly rel " +
             sci(cp) + " (<= 1e-10), 200 instances n <= 25";
  o.notes.push_back("zeros vs companion eigenvalues: max distance " + sci(oracle_dist));
  return o;
}

// 5 ------------------------------------------------------------------
Outcome criterion5() {
  const std::vector<WeightFamily> families{WeightFamily::bernstein_szego(0.6, 0.7), WeightFamily::single_moment(0.7),
                                           WeightFamily::fisher_hartwig(0.8, 0.6)};
  double qo = 0.0, riesz = 0.0, cmin = INFINITY, cd = 0.0, kf = 0.0;
  const ComplexPolynomial h(std::vector<Complex>{{0.5, 0.1}, {-1.0, 0.3}, {0.2, 0.2}});
  const ComplexPolynomial g(std::vector<Complex>{{0.3, 0.0}, {0.0, 1.0}, {1.0, -0.4}, {0.0, 0.0}, {0.2, 0.1}});
  std::vector<Complex> sample;
  for (int k = 0; k < 20; ++k) sample.push_back(std::polar(0.15 + 0.04 * k, 0.2 + 0.61 * k));
  for (const auto& f : families) {
    const double t = f.sweep_value();
    const auto basis = szego_levinson(moments(f, t, 8), 8);
    for (int n : {2, 4, 6, 8}) {
      // h of degree below n
      std::vector<Complex> hc(h.coeffs().begin(), h.coeffs().begin() + std::min(h.degree() + 1, n));
      const ComplexPolynomial hn(hc);
      for (const Complex b : {Complex{1.0, 0.0}, std::polar(1.0, 2.3)}) {
        const auto p = make_popuc(basis.monic[n - 1], b);
        qo = std::max(qo, quasi_orthogonality_residual(p, f, t));
        for (const Complex& z : zeros(p).zeros) {
          const auto rc = riesz_property_check(p, f, t, z, hn);
          riesz = std::max(riesz, std::abs(rc.lhs - rc.rhs));
          cmin = std::min(cmin, std::abs(rc.c));
        }
      }
      // g of degree at most n
      std::vector<Complex> gc(g.coeffs().begin(), g.coeffs().begin() + std::min(g.degree() + 1, n + 1));
      cd = std::max(cd, reproducing_residual(basis, f, t, std::polar(0.6, -0.8), ComplexPolynomial(gc), n));
      kf = std::max(kf, kernel_factorization_check(basis, std::polar(1.0, 1.7), n, sample));
    }
  }
  Outcome o;
  o.pass = qo <= 1e-8 && riesz <= 1e-7 && cmin > 1e-6 && cd <= 1e-8 && kf <= 1e-8;
  o.detail = "quasi-orth " + sci(qo) + " (<= 1e-8), Riesz " + sci(riesz) + " (<= 1e-7) min|C| " + sci(cmin) +
             " (> 1e-6), reproducing " + sci(cd) + " (<= 1e-8), kernel factorization " + sci(kf) + " (<= 1e-8)";
  return o;
}

// 6 ------------------------------------------------------------------
Outcome criterion6() {
  double vi_fd = 0.0;
  double vi_li = 0.0;
  double pinned = 0.0;
  double id_fixed = 0.0;
  double id_conj = 0.0;
  int count = 0;

  struct Sweep {
    WeightFamily f;
    BRule rule;
  };
  const std::vector<Sweep> sweeps{
      {WeightFamily::bernstein_szego(0.45, 0.4, "r"), ConstantB{std::polar(1.0, 0.9)}},
      {WeightFamily::bernstein_szego(0.45, 0.4, "r"), FixedZero{1.0}},
      {WeightFamily::bernstein_szego(0.6, 0.4, "phi"), ConstantB{Complex{-1.0, 0.0}}},
      {WeightFamily::fisher_hartwig(0.8, 0.3, "s"), ConstantB{std::polar(1.0, -1.2)}},
      {WeightFamily::fisher_hartwig(0.8, 0.3, "s"), FixedZero{1.0}},
      {WeightFamily::fisher_hartwig(1.3, -0.5, "r"), ConstantB{Complex{0.0, 1.0}}}};
  for (const auto& sw : sweeps) {
    const double t = sw.f.sweep_value();
    for (int n : {3, 5, 8}) {
      const auto p = popuc_at(sw.f, t, n, sw.rule);
      const auto dp = popuc_dt(sw.f, t, n, sw.rule);
      for (const Complex& z : zeros(p).zeros) {
        const double vi = (velocity_integral(sw.f, t, p, z, dp) / z).imag();
        const double fd = tracked_phi_prime(sw.f, t, n, sw.rule, z);
        const auto* fz = std::get_if<FixedZero>(&sw.rule);
        if (fz && std::abs(z - fz->xi) < 1e-8) {
          pinned = std::max({pinned, std::abs(vi), std::abs(fd)});
          continue;
        }
        vi_fd = std::max(vi_fd, rel(vi, fd));
        ++count;
      }
    }
  }

  // Fixed measure, b(t) = e^{it}: the Lidskii formula applies.
  const BRule moving = BOfT{"exp(it)", [](double t) { return std::polar(1.0, t); },
                            [](double t) { return Complex{0.0, 1.0} * std::polar(1.0, t); }};
  for (const auto& f : {WeightFamily::bernstein_szego(0.7, 1.1, "none"), WeightFamily::fisher_hartwig(0.9, 0.6, "none")}) {
    const double t = 0.35;
    for (int n : {2, 5, 8}) {
      const auto p = popuc_at(f, t, n, moving);
      const auto dp = popuc_dt(f, t, n, moving);
      const auto basis = szego_levinson(moments(f, t, n), n);
      const std::vector<Complex> a(basis.verblunsky.begin(), basis.verblunsky.begin() + (n - 1));
      const Complex b = std::polar(1.0, t);
      for (const Complex& z : zeros(p).zeros) {
        const double vi = (velocity_integral(f, t, p, z, dp) / z).imag();
        const double fd = tracked_phi_prime(f, t, n, moving, z);
        const double li = lidskii_velocity(a, b, Complex{0.0, 1.0} * b, z);
        vi_fd = std::max(vi_fd, rel(vi, fd));
        vi_li = std::max({vi_li, rel(vi, li), rel(fd, li)});
        ++count;
      }
    }
  }

  // Integral identity, zero fixed at e^{i theta0}.
  for (const auto& [f, theta0] :
       std::vector<std::pair<WeightFamily, double>>{{WeightFamily::bernstein_szego(0.45, 0.4, "r"), 0.0},
                                                    {WeightFamily::bernstein_szego(0.45, 0.4, "r"), 2.0},
                                                    {WeightFamily::fisher_hartwig(0.8, 0.3, "s"), 0.0},
                                                    {WeightFamily::single_moment(0.5), -1.0}}) {
    const double t = f.sweep_value();
    const BRule rule = FixedZero{std::polar(1.0, theta0)};
    for (int n : {4, 7}) {
      for (const Complex& z : zeros(popuc_at(f, t, n, rule)).zeros) {
        if (std::abs(z - std::polar(1.0, theta0)) < 1e-8) continue;
        const auto id = angular_velocity_identity(f, t, n, rule, z, FixedAnchor{theta0});
        id_fixed = std::max(id_fixed, rel(id.lhs, id.rhs));
      }
    }
  }
  // Conjugate pairs: symmetric weights with b = +-1.
  for (const auto& [f, b] : std::vector<std::pair<WeightFamily, double>>{
           {WeightFamily::single_moment(0.5), 1.0},
           {WeightFamily::single_moment(0.5), -1.0},
           {WeightFamily::fisher_hartwig(1.2, 0.0, "r"), 1.0},
           {WeightFamily::bernstein_szego(0.4, 0.0, "r"), -1.0}}) {
    const double t = f.sweep_value();
    for (int n : {5, 8}) {
      for (const Complex& z : zeros(popuc_at(f, t, n, ConstantB{b})).zeros) {
        if (std::abs(z.imag()) < 1e-8) continue;
        const auto id = angular_velocity_identity(f, t, n, ConstantB{b}, z, ConjugateAnchor{});
        id_conj = std::max(id_conj, rel(id.lhs, id.rhs));
      }
    }
  }

  Outcome o;
  o.pass = vi_fd <= 1e-4 && vi_li <= 1e-4 && pinned <= 1e-6 && id_fixed <= 1e-4 && id_conj <= 1e-4;
  o.detail = "integral vs fd " + sci(vi_fd) + ", vs Lidskii " + sci(vi_li) + ", identity fixed " + sci(id_fixed) +
             " conjugate " + sci(id_conj) + " (all <= 1e-4), " + std::to_string(count) + " zeros, n <= 8";
  o.notes.push_back("pinned zeros: max |phi'| " + sci(pinned));
  return o;
}

// 7 ------------------------------------------------------------------
Outcome criterion7() {
  double e1 = 0.0;
  for (double beta : {0.0, 1.0, 2.5}) {
    for (double dbeta : {-0.7, 1.0, 3.0}) {
      const Complex b = std::polar(1.0, beta);
      e1 = std::max(e1, std::abs(lidskii_velocity({}, b, Complex{0.0, dbeta} * b, std::conj(b)) + dbeta));
    }
  }
  // z^5 = e^{-it}: phi_k = (2 pi k - t) / 5, so phi' = -1/5.
  double e5 = 0.0;
  for (double t : {0.0, 0.9, 4.0}) {
    const Complex b = std::polar(1.0, t);
    for (int k = 0; k < 5; ++k) {
      const Complex z = std::polar(1.0, (kTwoPi * k - t) / 5.0);
      e5 = std::max(e5, std::abs(lidskii_velocity(std::vector<Complex>(4), b, Complex{0.0, 1.0} * b, z) + 0.2));
    }
  }
  Outcome o;
  o.pass = e1 <= 1e-8 && e5 <= 1e-8;
  o.detail = "n=1 max |phi' + beta'| " + sci(e1) + ", Lebesgue n=5 max |phi' + 1/5| " + sci(e5) + " (<= 1e-8)";
  return o;
}

std::string column_line(const DirectionRun& run) { return run.summary(); }

// 8 ------------------------------------------------------------------
Outcome criterion8() {
  const auto k1 = bernstein_szego_kernel(Complex{1.0, 0.0});
  Outcome o;
  o.pass = k1.all(Direction::Decreasing);
  // Companion run at i: must complete, no direction asserted.
  std::string companion;
  try {
    const auto ki = bernstein_szego_kernel(Complex{0.0, 1.0});
    companion = "K14(i,.) completed: " + column_line(ki);
  } catch (const Error& e) {
    o.pass = false;
    companion = std::string("K14(i,.) failed: ") + e.what();
  }
  o.detail = "K14(1,.) upper args strictly decreasing over r in [0.1, 0.9]: " + column_line(k1);
  o.notes.push_back(companion);
  return o;
}

// Upper-semicircle arguments of P_15 with a zero at 1, computed without
// the library: analytic moments, linear-solve OPUC, companion roots.
std::vector<double> oracle_upper_args(const std::function<Complex(int)>& moment) {
  std::vector<Complex> c;
  for (int j = 0; j <= 14; ++j) c.push_back(moment(j));
  const auto q = oracle::monic_opuc(c, 14);
  std::vector<Complex> qstar(q.rbegin(), q.rend());
  for (auto& v : qstar) v = std::conj(v);
  const Complex q1 = oracle::horner(q, 1.0);
  const Complex b = std::conj(q1) / q1;  // conj(xi) conj(Q(xi)) / conj(Q*(xi)) at xi = 1
  std::vector<Complex> p(16, 0.0);
  for (int k = 0; k <= 14; ++k) {
    p[k + 1] += q[k];
    p[k] -= std::conj(b) * qstar[k];
  }
  std::vector<double> out;
  for (const Complex& z : oracle::roots(p)) {
    if (z.imag() > 1e-9) out.push_back(std::arg(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// 9 ------------------------------------------------------------------
Outcome criterion9() {
  Outcome o;
  const auto plus = single_moment_symmetric(1.0);
  const auto minus = single_moment_symmetric(-1.0);
  const bool dirs = plus.all(Direction::Increasing) && minus.all(Direction::Increasing);
  const auto aux = auxx_comparison(FixedZero{1.0});
  const auto aux_i = auxx_comparison(ConstantB{Complex{0.0, 1.0}});
  o.pass = dirs && aux.upper_holds;
  o.detail = std::string("P15(+-1) upper args increasing: ") + (dirs ? "yes" : "no") +
             "; single-moment below Bernstein-Szego on (0,pi) at r=0.8, zero at 1: " +
             (aux.upper_holds ? "yes" : "no");
  o.notes.push_back("P15(+1): " + plus.summary());
  o.notes.push_back("P15(-1): " + minus.summary());
  std::string cmp = "zero at 1, upper args (single-moment / Bernstein-Szego):";
  for (std::size_t j = 0; j < aux.sm_upper.size(); ++j) cmp += " " + sci(aux.sm_upper[j]) + "/" + sci(aux.bs_upper[j]);
  o.notes.push_back(cmp);
  const auto osm = oracle_upper_args([](int j) { return oracle::single_moment_moment(0.8, j); });
  const auto obs = oracle_upper_args([](int j) { return oracle::bernstein_szego_moment(0.8, 0.0, j); });
  std::string ocmp = "independent oracle, upper args:";
  for (std::size_t j = 0; j < std::min(osm.size(), obs.size()); ++j) ocmp += " " + sci(osm[j]) + "/" + sci(obs[j]);
  o.notes.push_back(ocmp);
  o.notes.push_back(std::string("zero at 1, same inequality on the lower semicircle (pi, 2pi): ") +
                    (aux.lower_holds ? "holds" : "fails"));
  std::string cmpi = "b=i (not asserted), upper args:";
  for (std::size_t j = 0; j < aux_i.sm_upper.size(); ++j)
    cmpi += " " + sci(aux_i.sm_upper[j]) + "/" + sci(aux_i.bs_upper[j]);
  o.notes.push_back(cmpi);
  return o;
}

// 10 -----------------------------------------------------------------
Outcome criterion10() {
  Outcome o;
  const auto up = fisher_hartwig_r(1.0, true);
  const auto low = fisher_hartwig_r(-2.0, false);
  const auto s1 = fisher_hartwig_s(0.75);
  const auto s2 = fisher_hartwig_s(2.0);
  const bool dirs = up.all(Direction::Increasing) && low.all(Direction::Decreasing) &&
                    s1.all(Direction::Decreasing) && s2.all(Direction::Decreasing);
  // P_{n+1}(z; b(1)) = {1} U zeros of 2F1(-n, r+is+1; 2r+2; 1-z).
  double zero_err = 0.0;
  double b_err = 0.0;
  for (double r : {0.75, 2.0}) {
    for (double s : {-2.0, 1.0}) {
      for (int n = 1; n <= 9; ++n) {
        const auto q = closed_form_opuc(WeightFamily::fisher_hartwig(r, s), s, n);
        const Complex b = fixed_zero_parameter(q, 1.0);
        const Complex want_b = oracle::rising({r + 1.0, s}, n) / oracle::rising({r + 1.0, -s}, n);
        b_err = std::max(b_err, std::abs(b - want_b));
        const auto zs = zeros(make_popuc(q, b));
        // 2F1(-n, r+is+1; 2r+2; 1-z) in powers of z, expanding each (1-z)^k.
        std::vector<Complex> factor(n + 1);
        for (int k = 0; k <= n; ++k) {
          double kf = 1.0;
          for (int i = 2; i <= k; ++i) kf *= i;
          const Complex tk = oracle::rising(static_cast<double>(-n), k) * oracle::rising({r + 1.0, s}, k) /
                             (oracle::rising(2.0 * r + 2.0, k) * kf);
          double binom = 1.0;
          for (int m = 0; m <= k; ++m) {
            factor[m] += tk * binom * ((m % 2 == 0) ? 1.0 : -1.0);
            binom = binom * (k - m) / (m + 1);
          }
        }
        auto want = oracle::roots(factor);
        want.push_back(1.0);
        zero_err = std::max(zero_err, oracle::set_distance(zs.zeros, want));
        zero_err = std::max(zero_err, oracle::set_distance(want, zs.zeros));
      }
    }
  }
  o.pass = dirs && zero_err <= 1e-8 && b_err <= 1e-10;
  o.detail = std::string("f10 directions: ") + (dirs ? "as stated" : "violated") + "; P_{n+1}(b(1)) zeros vs {1} U 2F1 " +
             sci(zero_err) + " (<= 1e-8), b(1) vs (r+is+1)_n/(r-is+1)_n " + sci(b_err);
  o.notes.push_back("f10(r,1) upper: " + up.summary());
  o.notes.push_back("f10(r,-2) lower: " + low.summary());
  o.notes.push_back("f10(0.75,s): " + s1.summary());
  o.notes.push_back("f10(2,s): " + s2.summary());
  return o;
}

// 11 -----------------------------------------------------------------
Outcome criterion11() {
  Outcome o;
  int pairs = 0;
  int failed = 0;
  ZeroOptions opts;
  for (double s : {0.0, 1.0}) {
    for (unsigned n = 0; n <= 8; ++n) {
      for (double r : {0.75, 2.0}) {
        const auto za = zeros(fisher_hartwig_f(n + 1, r, s).monic(), opts);
        const auto zb = zeros(fisher_hartwig_f(n + 2, r, s).monic(), opts);
        const bool lib = interlacing_check(za, zb);
        const bool brute = oracle::arcs_interlace(za.args, zb.args);
        ++pairs;
        if (!lib || !brute) ++failed;
      }
      const auto ga = zeros(fisher_hartwig_g(n + 1, s).monic(), opts);
      const auto gb = zeros(fisher_hartwig_g(n + 2, s).monic(), opts);
      ++pairs;
      if (!interlacing_check(ga, gb) || !oracle::arcs_interlace(ga.args, gb.args)) ++failed;
    }
  }
  // s = 0: zeros of f_n(.; r, 0) sit at theta = 2 arccos(x), x a zero of C_n^{(r)}.
  double geg = 0.0;
  for (double r : {0.75, 1.0, 2.0}) {
    for (int n = 1; n <= 10; ++n) {
      const auto zs = zeros(fisher_hartwig_f(n, r, 0.0).monic(), opts);
      std::vector<Complex> want;
      for (double x : oracle::gegenbauer_zeros(n, r)) want.push_back(std::polar(1.0, 2.0 * std::acos(x)));
      if (want.size() != zs.size()) {
        geg = INFINITY;
        continue;
      }
      geg = std::max({geg, oracle::set_distance(zs.zeros, want), oracle::set_distance(want, zs.zeros)});
    }
  }
  o.pass = failed == 0 && geg <= 1e-8;
  o.detail = std::to_string(pairs - failed) + "/" + std::to_string(pairs) +
             " pairs interlace (f and g, n <= 8); Gegenbauer zero match " + sci(geg) + " (<= 1e-8)";
  return o;
}

// 12 -----------------------------------------------------------------
Outcome criterion12() {
  std::mt19937_64 rng(1212);
  std::uniform_real_distribution<double> ang(-kTwoPi, kTwoPi);
  const Complex i{0.0, 1.0};
  double dual = 0.0;
  int points = 0;
  bool library_ok = true;
  while (points < 100) {
    const double th = ang(rng), phi = ang(rng), th0 = ang(rng);
    if (std::abs(std::sin((phi - th) / 2)) < 1e-6 || std::abs(std::sin((th0 - th) / 2)) < 1e-6 ||
        std::abs(std::cos(th) - std::cos(phi)) < 1e-6)
      continue;
    ++points;
    const Complex x = std::polar(1.0, th), xi = std::polar(1.0, th0), z = std::polar(1.0, phi);
    const Complex sf = i * (xi - z) * x / ((x - xi) * (x - z));
    const Complex sc = x / ((x - z) * (x - std::conj(z)));
    try {
      const double a = s_fixed(th, phi, th0);
      const double b = s_conjugate(th, phi);
      dual = std::max({dual, std::abs(a - sf) / std::abs(a), std::abs(b - sc) / std::abs(b)});
    } catch (const Error&) {
      library_ok = false;
    }
  }
  // Signs: s_fixed > 0 on (theta0, phi) and < 0 on (phi, theta0 + 2pi);
  // s_conjugate > 0 for |theta| < phi and < 0 for phi < |theta| < pi.
  int sign_points = 0;
  int sign_bad = 0;
  for (double th0 : {0.0, 1.0, -2.0}) {
    for (double gap : {0.4, 2.0, 5.5}) {
      const double phi = th0 + gap;
      for (int k = 1; k < 200; ++k) {
        const double th = th0 + kTwoPi * k / 200.0;
        if (std::abs(th - phi) < 1e-6) continue;
        ++sign_points;
        if ((s_fixed(th, phi, th0) > 0.0) != (th < phi)) ++sign_bad;
      }
    }
  }
  for (double phi : {0.3, 1.5, 3.0}) {
    for (int k = 1; k < 200; ++k) {
      const double th = -kPi + kTwoPi * k / 200.0;
      if (std::abs(std::abs(th) - phi) < 1e-6) continue;
      ++sign_points;
      if ((s_conjugate(th, phi) > 0.0) != (std::abs(th) < phi)) ++sign_bad;
    }
  }
  Outcome o;
  o.pass = library_ok && dual <= 1e-12 && sign_bad == 0;
  o.detail = "dual forms max rel " + sci(dual) + " (<= 1e-12) at " + std::to_string(points) + " points; sign pattern " +
             std::to_string(sign_points - sign_bad) + "/" + std::to_string(sign_points);
  return o;
}

// 13 -----------------------------------------------------------------
std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + POPUC_LAB_PATH + "\" " + args;
  return std::system(cmd.c_str());
}

Outcome criterion13() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("popuc_accept_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  Outcome o;
  int identical = 0;
  const std::vector<std::string> ids{"fig3-left", "fig5-right", "fig6-right"};
  for (const auto& id : ids) {
    const auto a = dir / (id + "-a.csv");
    const auto b = dir / (id + "-b.csv");
    if (run_cli("figure " + id + " --out \"" + a.string() + "\"") != 0 ||
        run_cli("figure " + id + " --out \"" + b.string() + "\"") != 0) {
      o.pass = false;
      continue;
    }
    const auto ta = slurp(a);
    if (!ta.empty() && ta == slurp(b)) ++identical;
  }
  // Config round trip through the CLI: echo, reload, echo again.
  const auto c1 = dir / "c1.json";
  const auto c2 = dir / "c2.json";
  const bool echo_ok =
      run_cli("sweep --family single-moment --degree 7 --b fixed-zero:0,1 --t-range 0.1:0.9:5 --sep-tol 1e-10 "
              "--echo-config > \"" + c1.string() + "\"") == 0 &&
      run_cli("sweep --config \"" + c1.string() + "\" --echo-config > \"" + c2.string() + "\"") == 0;
  const std::string j1 = slurp(c1);
  const bool cli_round_trip = echo_ok && !j1.empty() && j1 == slurp(c2);
  const auto parsed = RunConfig::from_json(nlohmann::json::parse(j1.empty() ? "{}" : j1));
  const bool lib_round_trip = RunConfig::from_json(parsed.to_json()).canonical() == parsed.canonical();
  fs::remove_all(dir);
  o.pass = o.pass && identical == static_cast<int>(ids.size()) && cli_round_trip && lib_round_trip;
  o.detail = std::to_string(identical) + "/" + std::to_string(ids.size()) +
             " figures byte-identical across runs; config round trip " +
             (cli_round_trip && lib_round_trip ? "stable" : "unstable");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion1},     {"closed-form OPUC", criterion2},
      {"single-moment moments", criterion3},  {"unit-circle spectrum", criterion4},
      {"structural identities", criterion5},  {"velocity triangulation", criterion6},
      {"Lidskii exact cases", criterion7},    {"Bernstein-Szego kernel sweep", criterion8},
      {"single-moment sweep and comparison", criterion9},
      {"Fisher-Hartwig directions and b(1)", criterion10},
      {"interlacing and Gegenbauer", criterion11},
      {"s-function forms and signs", criterion12},
      {"determinism and round trip", criterion13}};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("aborted: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %zu (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str(), secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
