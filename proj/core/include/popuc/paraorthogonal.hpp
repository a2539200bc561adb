#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "popuc/measures.hpp"
#include "popuc/opuc.hpp"
#include "popuc/polynomial.hpp"

namespace popuc {

/// P_n = z Q_{n-1} - conj(b) Q_{n-1}^*. NotUnimodular if ||b| - 1| > 1e-12.
ComplexPolynomial make_popuc(const ComplexPolynomial& q_prev, Complex b);

/// The unimodular b that makes xi a zero of P_n built from Q_{n-1}.
/// DegenerateEvaluation if |Q_{n-1}^*(xi)| < 1e-14.
Complex fixed_zero_parameter(const ComplexPolynomial& q_prev, Complex xi);
Complex fixed_zero_parameter(const OpucBasis& basis, Complex xi, int n);

struct GGTMatrix {
  Eigen::MatrixXcd entries;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
  /// max |G^*G - I|.
  double unitarity_defect() const;
  /// Upper Hessenberg with positive subdiagonal (tolerance on the zero part).
  bool is_unreduced_hessenberg(double tol = 1e-14) const;
};

/// G_0 ... G_{n-2} diag(I_{n-1}, conj b) for a = a_0..a_{n-2}.
GGTMatrix ggt(const std::vector<Complex>& a, Complex b);

/// det(zI - G) by the Hessenberg recurrence.
ComplexPolynomial char_poly(const GGTMatrix& g);

struct ZeroOptions {
  double theta0 = 0.0;
  double circle_tol = 1e-8;
  double sep_tol = 1e-9;
  int max_iter = 200;
};

struct ZeroSet {
  std::vector<Complex> zeros;
  std::vector<double> args;            // ascending in [theta0, theta0 + 2pi)
  std::vector<double> abs_residual;    // ||zeta| - 1|
  std::vector<double> poly_residual;   // |P(zeta)|
  double theta0 = 0.0;

  std::size_t size() const noexcept { return zeros.size(); }
  /// Smallest cyclic gap between consecutive arguments.
  double min_gap() const;
  std::string to_csv() const;
};

/// All zeros of a POPUC by Aberth-Ehrlich with Newton polish.
ZeroSet zeros(const ComplexPolynomial& p, const ZeroOptions& options = {});

/// One-step inverse iteration on (G - zeta I), unit-normalized.
/// EigenpairError when the residual |Gv - zeta v| exceeds tol.
Eigen::VectorXcd eigenvector(const GGTMatrix& g, Complex zeta, double tol = 1e-8);

/// max_{1 <= k < n} |int P conj(z^k) dmu|.
double quasi_orthogonality_residual(const ComplexPolynomial& p, const WeightFamily& f, double t,
                                    double tol = 1e-13);

struct RieszCheck {
  Complex lhs;
  Complex rhs;
  Complex c;  // int P/(z - zeta) dmu
};

/// Both sides of int P/(z-zeta) conj(h) dmu = conj(h(zeta)) int P/(z-zeta) dmu.
RieszCheck riesz_property_check(const ComplexPolynomial& p, const WeightFamily& f, double t, Complex zeta,
                                const ComplexPolynomial& h, double tol = 1e-13);

/// Relative spread of P_n(z; b(xi)) / ((1 - z conj xi) K_{n-1}(xi, z)) over the sample.
double kernel_factorization_check(const OpucBasis& basis, Complex xi, int n, const std::vector<Complex>& sample);

}  // namespace popuc
