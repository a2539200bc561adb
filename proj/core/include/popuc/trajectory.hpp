#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "popuc/measures.hpp"
#include "popuc/opuc.hpp"
#include "popuc/paraorthogonal.hpp"

namespace popuc {

struct ConstantB {
  Complex b;
};
struct FixedZero {
  Complex xi;
};
/// b as a function of the sweep parameter, with its derivative (needed by
/// the Lidskii formula).
struct BOfT {
  std::string name;
  std::function<Complex(double)> b;
  std::function<Complex(double)> db;
};
using BRule = std::variant<ConstantB, FixedZero, BOfT>;

/// "const:re,im", "fixed-zero:re,im" or the BOfT name.
std::string describe(const BRule& rule);

/// Monic Q_degree at t: closed form when the family has one, else the
/// Szego recursion on quadrature moments.
ComplexPolynomial opuc_polynomial(const WeightFamily& f, double t, int degree);
Complex resolve_b(const BRule& rule, const ComplexPolynomial& q_prev, double t);
ComplexPolynomial popuc_at(const WeightFamily& f, double t, int n, const BRule& rule);

struct SweepOptions {
  ZeroOptions zeros;
  double match_gap = 0.5;
};

struct TrajectoryTable {
  std::vector<double> t_grid;
  int n_zeros = 0;
  std::vector<std::vector<double>> args;    // [t index][zero index], unwrapped
  std::vector<std::vector<Complex>> zeros;  // same layout
  std::vector<double> residuals;            // largest matching step per t (0 at the first)
  std::string b_rule;
  double theta0 = 0.0;

  std::vector<double> column(int k) const;
  /// Header t,zero_index,arg_unwrapped,re,im.
  std::string to_csv() const;
};

/// Greedy nearest-argument matching and minimal-shift unwrapping of
/// precomputed zero sets. MatchingError on a step of at least match_gap,
/// a contested zero, or an exact half-turn tie.
TrajectoryTable track(const std::vector<double>& t_grid, const std::vector<ZeroSet>& sets, double match_gap = 0.5);

TrajectoryTable sweep(const WeightFamily& f, const std::vector<double>& t_grid, int n, const BRule& rule,
                      const SweepOptions& options = {});

/// Coefficientwise central difference of popuc_at, step 1e-5 max(1, |t|).
ComplexPolynomial popuc_dt(const WeightFamily& f, double t, int n, const BRule& rule);

/// Central difference of the argument of the zero nearest zeta.
double tracked_phi_prime(const WeightFamily& f, double t, int n, const BRule& rule, Complex zeta,
                         const ZeroOptions& options = {});

/// zeta'(t) = -int conj(P/(z-zeta)) dP/dt dmu / int |P/(z-zeta)|^2 dmu.
Complex velocity_integral(const WeightFamily& f, double t, const ComplexPolynomial& p, Complex zeta,
                          const ComplexPolynomial& dp_dt, double tol = 1e-13);

/// phi' = i conj(b) b' |v_{n-1}|^2 with v the unit eigenvector of ggt(a, b).
double lidskii_velocity(const std::vector<Complex>& a, Complex b, Complex b_prime, Complex zeta);

/// (1/w) dw/dt at theta minus the same at phi.
double varpi(const WeightFamily& f, double t, double theta, double phi);

/// Fixed-zero kernel; both closed forms are evaluated and cross-checked.
double s_fixed(double theta, double phi, double theta0);
/// Conjugate-zeros kernel (1/2) / (cos theta - cos phi), cross-checked likewise.
double s_conjugate(double theta, double phi);

struct FixedAnchor {
  double theta0;
};
struct ConjugateAnchor {};
using Anchor = std::variant<FixedAnchor, ConjugateAnchor>;

struct IdentityCheck {
  double lhs;        // C(t) phi'(t), phi' by finite differences
  double rhs;        // weighted kernel integral
  double phi_prime;
  double c;
};

/// Fixed anchor: C phi' = -int s |P|^2 varpi dmu (sign as found numerically).
/// Conjugate anchor: C phi' = -2 Im(zeta) int z R conj(P) varpi dmu,
/// R = P / ((z - zeta)(z - conj zeta)).
IdentityCheck angular_velocity_identity(const WeightFamily& f, double t, int n, const BRule& rule, Complex zeta,
                                        const Anchor& anchor, double tol = 1e-13);

enum class Direction { Increasing, Decreasing, NonMonotone };
std::string_view to_string(Direction d) noexcept;

struct Verdict {
  int zero_index = 0;
  Direction direction = Direction::NonMonotone;
  std::optional<double> witness_t;
};

inline constexpr double kMonoTol = 1e-10;

/// Classifies each requested column (all when empty); needs >= 3 grid points.
std::vector<Verdict> monotonicity_verdict(const TrajectoryTable& tab, const std::vector<int>& columns = {});
/// Like monotonicity_verdict, but only steps whose endpoints both lie in the
/// open arc (lo, hi) (arguments taken mod 2pi) count; a column with no such
/// step is NonMonotone. Direction claims about "zeros on the upper
/// semicircle" hold only while a zero stays there.
std::vector<Verdict> monotonicity_verdict_on_arc(const TrajectoryTable& tab, const std::vector<int>& columns,
                                                 double lo, double hi);
std::string verdicts_to_json(const std::vector<Verdict>& verdicts);

/// Cyclic arc rule: arcs of zb hold at most one za, arcs of za hold at
/// least one zb. CollisionError if the sets share a zero within sep_tol.
bool interlacing_check(const ZeroSet& za, const ZeroSet& zb, double sep_tol = 1e-9);

struct SharedZeroAt {
  Complex xi;
};
struct SymmetricB {
  double b;  // +1 or -1
};
using ComparisonAnchor = std::variant<SharedZeroAt, SymmetricB>;

struct Comparison {
  std::vector<double> args1;  // descending
  std::vector<double> args2;
  std::vector<bool> first_below;  // args1[j] < args2[j] - kMonoTol
};

Comparison comparison(const WeightFamily& f1, const WeightFamily& f2, int n, int n2, const ComparisonAnchor& anchor,
                      const ZeroOptions& options = {});
inline Comparison comparison(const WeightFamily& f1, const WeightFamily& f2, int n, const ComparisonAnchor& anchor,
                             const ZeroOptions& options = {}) {
  return comparison(f1, f2, n, n, anchor, options);
}

}  // namespace popuc
