#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popuc/quadrature.hpp"
#include "popuc/specfun.hpp"

namespace popuc {

enum class FamilyKind { BernsteinSzego, SingleMoment, FisherHartwig, Mixture, Lebesgue, Custom };

std::string_view to_string(FamilyKind kind) noexcept;

/// A parametric weight w(theta; t) against the normalized Lebesgue measure
/// d theta / 2 pi on [theta0, theta0 + 2 pi). One scalar parameter, named by
/// sweep_param(), plays the role of t; every operation taking a `t`
/// substitutes it for that parameter. With sweep_param "none" the weight is
/// independent of t.
///
/// Built-in kinds and their parameters:
///   bernstein-szego  r in (0,1), phi     (1-r^2)/(1+r^2-2r cos(theta-phi))
///   single-moment    r in (0,1)          1 - r cos(theta)
///   fisher-hartwig   r > -1/2, s         e^{(pi-theta)s} (2-2cos theta)^r, theta in [0,2pi)
///   mixture          t in [0,1]          (1-t) w1 + t w2
///   lebesgue                             1
///
/// The Fisher-Hartwig Gamma-function normalization is omitted: monic OPUC
/// and POPUC zeros do not change under positive scaling of the measure.
class WeightFamily {
 public:
  using Evaluator = std::function<double(double theta, double t)>;

  static WeightFamily lebesgue(double theta0 = 0.0);
  static WeightFamily bernstein_szego(double r, double phi, std::string sweep_param = "r",
                                      double theta0 = 0.0);
  static WeightFamily single_moment(double r, std::string sweep_param = "r", double theta0 = 0.0);
  static WeightFamily fisher_hartwig(double r, double s, std::string sweep_param = "s",
                                     double theta0 = 0.0);
  static WeightFamily mixture(WeightFamily w1, WeightFamily w2, double t = 0.5,
                              std::string sweep_param = "t", double theta0 = 0.0);
  /// User-supplied weight. Without `dt` the t-derivative falls back to
  /// central differences.
  static WeightFamily custom(Evaluator weight, Evaluator dt, double t, double theta0 = 0.0,
                             std::vector<double> singular_points = {});

  FamilyKind kind() const noexcept { return kind_; }
  double theta0() const noexcept { return theta0_; }
  const std::string& sweep_param() const noexcept { return sweep_; }
  bool depends_on_t() const noexcept { return sweep_ != "none"; }

  /// Stored value of a named parameter ("r", "phi", "s", "t").
  double param(std::string_view name) const;
  /// Stored value of the sweep parameter (0 when sweep_param is "none").
  double sweep_value() const;

  WeightFamily with_theta0(double theta0) const;
  WeightFamily with_sweep_param(std::string name) const;
  /// Copy with the sweep parameter fixed to t.
  WeightFamily at(double t) const;

  const WeightFamily& component(int index) const;

  /// True when w(-theta) = w(theta) for every parameter value.
  bool is_symmetric() const;

  /// Points in [0, 2pi) where the weight is not smooth.
  std::vector<double> singular_points() const;
  /// Grading exponent for quadrature segments touching a singular point.
  double singular_grading() const;

  /// JSON descriptor {"kind","params","theta0","sweep_param"}. Unknown
  /// fields are rejected with ConfigError. Custom weights cannot be
  /// serialized.
  static WeightFamily from_json(std::string_view text);
  std::string to_json() const;

 private:
  friend struct WeightAccess;

  void validate() const;

  FamilyKind kind_ = FamilyKind::Lebesgue;
  double r_ = 0.0;
  double phi_ = 0.0;
  double s_ = 0.0;
  double t_ = 0.0;
  double theta0_ = 0.0;
  std::string sweep_ = "none";
  std::shared_ptr<const WeightFamily> w1_;
  std::shared_ptr<const WeightFamily> w2_;
  Evaluator custom_weight_;
  Evaluator custom_dt_;
  std::vector<double> custom_singular_;
};

/// w(theta; t). Theta may be any real; the weight is 2pi-periodic.
double eval_weight(const WeightFamily& f, double theta, double t);

/// dw/dt, analytic for the built-in kinds.
double weight_dt(const WeightFamily& f, double theta, double t);

/// Central-difference dw/dt with step max(1e-6, 1e-8 |t|).
double weight_dt_fd(const WeightFamily& f, double theta, double t);

/// (1/w) dw/dt. DomainError where w vanishes or is singular.
double weight_log_derivative(const WeightFamily& f, double theta, double t);

/// Trigonometric moments c_j = int e^{-ij theta} dmu, j = 0..jmax, with the
/// Hermitian extension c_{-j} = conj(c_j).
class MomentSequence {
 public:
  MomentSequence() = default;
  explicit MomentSequence(std::vector<Complex> nonnegative);

  int jmax() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Complex operator()(int j) const;
  std::span<const Complex> nonnegative() const noexcept { return c_; }

  /// D_k = det(c_{i-j})_{i,j=0..k}.
  double toeplitz_det(int k) const;
  /// D_k > 0 for every k <= kmax.
  bool positive_definite(int kmax) const;

  MomentSequence scaled(double factor) const;

 private:
  std::vector<Complex> c_;
};

/// Integration segments covering [theta0, theta0+2pi) split at the
/// family's singular points. Graded segments may be shifted by a multiple
/// of 2pi, so integrands passed to integrate_against must be 2pi-periodic.
std::vector<Segment> integration_segments(const WeightFamily& f);

/// int F(theta) w(theta; t) dtheta/2pi for a dim-valued F.
std::vector<Complex> integrate_against(const WeightFamily& f, double t, const VectorIntegrand& integrand,
                                       std::size_t dim, double tol);
Complex integrate_against(const WeightFamily& f, double t, const std::function<Complex(double)>& integrand,
                          double tol);

/// Moments by adaptive Gauss-Legendre; QuadratureError when tol is not
/// reached within the panel budget.
MomentSequence moments(const WeightFamily& f, double t, int jmax, double tol = 1e-13);

enum class ProfileShape { StrictlyIncreasing, StrictlyDecreasing, VShaped, CapShaped, Other };

std::string_view to_string(ProfileShape shape) noexcept;

struct MarkovProfile {
  std::vector<double> values;
  ProfileShape shape = ProfileShape::Other;
  /// Location of the extremum for VShaped/CapShaped profiles.
  double turn_theta = 0.0;
};

/// Samples (1/w) dw/dt on a strictly increasing grid (at least 8 points)
/// and classifies the sign pattern of consecutive differences with a tie
/// tolerance of 1e-12.
MarkovProfile markov_profile(const WeightFamily& f, double t, std::span<const double> grid);

}  // namespace popuc
