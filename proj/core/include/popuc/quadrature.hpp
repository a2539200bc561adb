#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "popuc/specfun.hpp"

namespace popuc {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached m-point rule (Newton iteration on P_m).
const GaussLegendreRule& gauss_legendre(int m);

/// One integration interval. A positive `grading` at an endpoint applies
/// the substitution theta = endpoint +/- L*u^grading, which clusters nodes
/// next to an algebraic endpoint singularity. 1.0 means no substitution;
/// at most one endpoint may be graded.
struct Segment {
  double a = 0.0;
  double b = 0.0;
  double grading_at_a = 1.0;
  double grading_at_b = 1.0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  int max_panels = 20000;
  int order = 16;
};

/// Writes dim values of the integrand at theta into out.
using VectorIntegrand = std::function<void(double theta, std::span<Complex> out)>;

/// Globally adaptive composite Gauss-Legendre over a list of segments.
/// The panel with the largest error estimate (coarse rule vs. the two
/// halves, max over components) is bisected until the summed estimate
/// drops below abs_tol. Throws QuadratureError when the panel budget runs
/// out first.
std::vector<Complex> integrate(const VectorIntegrand& f, std::size_t dim,
                               std::span<const Segment> segments,
                               const QuadratureOptions& options = {});

/// Scalar convenience wrapper over a single plain interval.
Complex integrate_scalar(const std::function<Complex(double)>& f, double a, double b,
                         const QuadratureOptions& options = {});

}  // namespace popuc
