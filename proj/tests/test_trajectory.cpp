#include <atomic>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "popuc/angles.hpp"
#include "popuc/errors.hpp"
#include "popuc/opuc.hpp"
#include "popuc/parallel.hpp"
#include "popuc/paraorthogonal.hpp"
#include "popuc/trajectory.hpp"

using namespace popuc;

namespace {

BRule exp_it() {
  return BOfT{"exp(it)", [](double t) { return std::polar(1.0, t); },
              [](double t) { return Complex{0.0, 1.0} * std::polar(1.0, t); }};
}

double phi_from(Complex zeta, Complex dzeta) { return (dzeta / zeta).imag(); }

}  // namespace

TEST_SUITE("trajectory") {
  TEST_CASE("Lebesgue sweep is constant") {
    const auto tab = sweep(WeightFamily::lebesgue(), {0.0, 0.5, 1.0, 1.5}, 6, ConstantB{std::polar(1.0, 0.2)});
    CHECK(tab.n_zeros == 6);
    for (int k = 0; k < 6; ++k) {
      const auto col = tab.column(k);
      for (double a : col) CHECK(a == doctest::Approx(col.front()));
    }
    for (const auto& v : monotonicity_verdict(tab)) CHECK(v.direction == Direction::NonMonotone);
    CHECK(tab.to_csv().rfind("t,zero_index,arg_unwrapped,re,im\n", 0) == 0);
  }

  TEST_CASE("Bernstein-Szego kernel zeros move clockwise") {
    const auto tab = sweep(WeightFamily::bernstein_szego(0.1, 0.0), {0.1, 0.3, 0.5, 0.7, 0.9}, 15, FixedZero{1.0});
    std::vector<int> upper;
    for (int k = 0; k < tab.n_zeros; ++k) {
      const double a = tab.args.front()[k];
      if (a > 1e-9 && a < kPi) upper.push_back(k);
    }
    CHECK(upper.size() == 7);
    for (const auto& v : monotonicity_verdict(tab, upper)) CHECK(v.direction == Direction::Decreasing);
    // the pinned zero never moves
    for (const auto& row : tab.zeros) {
      double best = 1.0;
      for (const auto& z : row) best = std::min(best, std::abs(z - 1.0));
      CHECK(best < 1e-10);
    }
  }

  TEST_CASE("tracking rejects coarse grids and mismatched sets") {
    const auto f = WeightFamily::lebesgue();
    std::vector<ZeroSet> sets{zeros(make_popuc(ComplexPolynomial::monomial(3), 1.0)),
                              zeros(make_popuc(ComplexPolynomial::monomial(3), std::polar(1.0, 2.0)))};
    CHECK_THROWS_AS(track({0.0, 1.0}, sets, 0.3), MatchingError);
    CHECK_THROWS_AS(track({0.0}, sets), IndexMismatch);
    CHECK_THROWS_AS(track({1.0, 0.0}, sets), DomainError);
  }

  TEST_CASE("popuc derivative vanishes for a fixed weight and b") {
    const auto d = popuc_dt(WeightFamily::lebesgue(), 0.3, 5, ConstantB{1.0});
    CHECK(d.max_abs_coeff() == 0.0);
  }

  TEST_CASE("Lidskii exact cases") {
    const double beta_prime = -1.3;
    const Complex b = std::polar(1.0, 0.6);
    CHECK(lidskii_velocity({}, b, Complex{0.0, beta_prime} * b, std::conj(b)) == doctest::Approx(-beta_prime));
    const Complex b5 = std::polar(1.0, 0.25);
    for (const Complex& z : zeros(make_popuc(ComplexPolynomial::monomial(4), b5)).zeros) {
      CHECK(std::abs(lidskii_velocity(std::vector<Complex>(4), b5, Complex{0.0, 1.0} * b5, z) + 0.2) < 1e-8);
    }
  }

  TEST_CASE("velocity integral against finite differences") {
    const auto f = WeightFamily::bernstein_szego(0.4, 0.9, "r");
    const double t = 0.4;
    const int n = 6;
    const BRule rule = ConstantB{std::polar(1.0, 0.7)};
    const auto p = popuc_at(f, t, n, rule);
    const auto dp = popuc_dt(f, t, n, rule);
    for (const Complex& z : zeros(p).zeros) {
      const Complex dz = velocity_integral(f, t, p, z, dp);
      // tangent to the circle
      CHECK(std::abs((std::conj(z) * dz).real()) < 1e-7);
      const double fd = tracked_phi_prime(f, t, n, rule, z);
      CHECK(phi_from(z, dz) == doctest::Approx(fd).epsilon(1e-4));
    }
  }

  TEST_CASE("velocity integral, Lidskii and finite differences agree for moving b") {
    const auto f = WeightFamily::bernstein_szego(0.5, 0.3, "none");
    const double t = 0.8;
    const int n = 5;
    const BRule rule = exp_it();
    const auto p = popuc_at(f, t, n, rule);
    const auto dp = popuc_dt(f, t, n, rule);
    const auto basis = szego_levinson(moments(f, t, n), n);
    std::vector<Complex> a(basis.verblunsky.begin(), basis.verblunsky.begin() + (n - 1));
    const Complex b = std::polar(1.0, t);
    for (const Complex& z : zeros(p).zeros) {
      const double vi = phi_from(z, velocity_integral(f, t, p, z, dp));
      const double li = lidskii_velocity(a, b, Complex{0.0, 1.0} * b, z);
      const double fd = tracked_phi_prime(f, t, n, rule, z);
      CHECK(vi == doctest::Approx(li).epsilon(1e-6));
      CHECK(vi == doctest::Approx(fd).epsilon(1e-4));
      CHECK(li < 0.0);
    }
  }

  TEST_CASE("s-functions") {
    CHECK(s_fixed(kPi / 2, kPi, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(s_fixed(1.0, 1.0, 0.0), PoleError);
    CHECK_THROWS_AS(s_fixed(0.0, 1.0, 0.0), PoleError);
    CHECK(varpi(WeightFamily::single_moment(0.5), 0.5, 1.0, 1.0) == 0.0);
    CHECK(varpi(WeightFamily::fisher_hartwig(1.0, 0.2, "s"), 0.2, 2.0, 0.5) == doctest::Approx(0.5 - 2.0));
    CHECK(s_conjugate(0.0, kPi / 2) == doctest::Approx(0.5));
    CHECK_THROWS_AS(s_conjugate(-1.0, 1.0), PoleError);
    CHECK(s_conjugate(-0.4, 1.2) == s_conjugate(0.4, 1.2));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int i = 0; i < 50; ++i) {
      const double th = ang(rng), phi = ang(rng);
      // the conjugate kernel has a closed form in cosines
      if (std::abs(std::cos(th) - std::cos(phi)) > 1e-3) {
        CHECK(s_conjugate(th, phi) == doctest::Approx(0.5 / (std::cos(th) - std::cos(phi))).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("angular velocity identity") {
    const auto leb = WeightFamily::lebesgue();
    const auto zl = zeros(make_popuc(ComplexPolynomial::monomial(3), 1.0));
    const auto trivial = angular_velocity_identity(leb, 0.0, 4, ConstantB{1.0}, zl.zeros[1], FixedAnchor{0.0});
    CHECK(std::abs(trivial.lhs) < 1e-12);
    CHECK(std::abs(trivial.rhs) < 1e-12);

    const auto f = WeightFamily::fisher_hartwig(1.0, 0.4, "s");
    const auto p = popuc_at(f, 0.4, 5, FixedZero{1.0});
    const auto zs = zeros(p);
    for (std::size_t k = 1; k < zs.size(); ++k) {
      const auto id = angular_velocity_identity(f, 0.4, 5, FixedZero{1.0}, zs.zeros[k], FixedAnchor{0.0});
      CHECK(id.lhs == doctest::Approx(id.rhs).epsilon(1e-4));
    }
    const auto sm = WeightFamily::single_moment(0.5);
    const auto ps = popuc_at(sm, 0.5, 6, ConstantB{1.0});
    for (const Complex& z : zeros(ps).zeros) {
      if (std::abs(z.imag()) < 1e-6) continue;
      const auto id = angular_velocity_identity(sm, 0.5, 6, ConstantB{1.0}, z, ConjugateAnchor{});
      CHECK(id.lhs == doctest::Approx(id.rhs).epsilon(1e-4));
    }
  }

  TEST_CASE("monotonicity verdicts") {
    TrajectoryTable tab;
    tab.t_grid = {0, 1, 2, 3};
    tab.n_zeros = 3;
    tab.args = {{0.1, 1.0, 2.0}, {0.2, 0.9, 2.0}, {0.3, 0.8, 2.1}, {0.4, 0.7, 2.0}};
    tab.zeros.assign(4, std::vector<Complex>(3));
    const auto v = monotonicity_verdict(tab);
    CHECK(v[0].direction == Direction::Increasing);
    CHECK(v[1].direction == Direction::Decreasing);
    CHECK(v[2].direction == Direction::NonMonotone);
    REQUIRE(v[2].witness_t.has_value());
    CHECK(*v[2].witness_t == 1.0);
    const auto arc = monotonicity_verdict_on_arc(tab, {2}, 0.0, 2.05);
    CHECK(arc[0].direction == Direction::NonMonotone);
    const auto json = verdicts_to_json(v);
    CHECK(json.find("non-monotone") != std::string::npos);
    tab.t_grid = {0, 1};
    tab.args.resize(2);
    CHECK_THROWS_AS(monotonicity_verdict(tab), DomainError);
  }

  TEST_CASE("interlacing arc rule") {
    std::vector<double> a3, b4;
    for (int k = 0; k < 3; ++k) a3.push_back(kTwoPi * k / 3);
    for (int k = 0; k < 4; ++k) b4.push_back(kTwoPi * k / 4 + kPi / 7);
    auto set_of = [](const std::vector<double>& args) {
      ZeroSet zs;
      for (double a : args) {
        zs.zeros.push_back(std::polar(1.0, a));
        zs.args.push_back(reduce_angle(a));
      }
      std::sort(zs.args.begin(), zs.args.end());
      return zs;
    };
    CHECK(interlacing_check(set_of(a3), set_of(b4)) == oracle::arcs_interlace(a3, b4));
    // f_2 and f_3 at r = 1, s = 0 (Chebyshev U)
    const auto z2 = zeros(fisher_hartwig_f(2, 1.0, 0.0).monic());
    const auto z3 = zeros(fisher_hartwig_f(3, 1.0, 0.0).monic());
    CHECK(z2.args[0] == doctest::Approx(2 * kPi / 3));
    CHECK(z2.args[1] == doctest::Approx(4 * kPi / 3));
    CHECK(z3.args[1] == doctest::Approx(kPi));
    CHECK(interlacing_check(z2, z3));
    CHECK_FALSE(interlacing_check(z3, z2));
    CHECK_THROWS_AS(interlacing_check(z2, z2), CollisionError);
    // random point sets against brute force
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(2 + trial % 4), y(3 + trial % 3);
      for (auto& v : x) v = ang(rng);
      for (auto& v : y) v = ang(rng);
      CHECK(interlacing_check(set_of(x), set_of(y)) == oracle::arcs_interlace(x, y));
    }
  }

  TEST_CASE("comparison") {
    const auto f = WeightFamily::single_moment(0.6);
    const auto same = comparison(f, f, 8, SharedZeroAt{1.0});
    for (bool b : same.first_below) CHECK_FALSE(b);
    for (std::size_t j = 0; j < same.args1.size(); ++j) CHECK(same.args1[j] == doctest::Approx(same.args2[j]));
    for (std::size_t j = 1; j < same.args1.size(); ++j) CHECK(same.args1[j] < same.args1[j - 1]);
    CHECK_THROWS_AS(comparison(f, f, 8, 9, SymmetricB{1.0}), IndexMismatch);
  }

  TEST_CASE("parallel_for is deterministic under failure") {
    std::vector<int> out(64, 0);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
    try {
      parallel_for(32, [](std::size_t i) {
        if (i % 5 == 3) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "3");
    }
  }
}
