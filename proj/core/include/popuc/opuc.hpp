#pragma once

#include <vector>

#include "popuc/measures.hpp"
#include "popuc/polynomial.hpp"

namespace popuc {

/// Monic OPUC Q_0..Q_n with norms and Verblunsky coefficients.
struct OpucBasis {
  std::vector<ComplexPolynomial> monic;
  std::vector<double> norm2;
  std::vector<double> kappa;
  std::vector<Complex> verblunsky;  // a_0..a_{n-1}

  int degree() const noexcept { return static_cast<int>(monic.size()) - 1; }
  /// Orthonormal q_j = kappa_j Q_j evaluated at z.
  Complex orthonormal(int j, Complex z) const { return kappa.at(j) * monic.at(j)(z); }
};

/// Szego recursion Q_{j+1} = z Q_j - conj(a_j) Q_j^*, with conj(a_j) taken
/// from the moment functional. NotPositiveDefinite when 1 - |a_j|^2 <= tol_pd.
OpucBasis szego_levinson(const MomentSequence& m, int n, double tol_pd = 1e-12);

/// Same recursion driven directly by given Verblunsky coefficients
/// (norm2_0 = 1). DiskViolation when some |a_j| >= 1.
OpucBasis szego_from_verblunsky(const std::vector<Complex>& a);

/// Determinant-ratio oracle for Q_n (n <= 12). SingularGram when D_{n-1}
/// is not positive.
ComplexPolynomial heine_determinant(const MomentSequence& m, int n);

/// K_n(w, z) = sum_j conj(q_j(w)) q_j(z).
Complex cd_kernel(const OpucBasis& basis, Complex w, Complex z, int n);

/// |int g(e^{i theta}) K_n(e^{i theta}, w) dmu - g(w)| by quadrature.
double reproducing_residual(const OpucBasis& basis, const WeightFamily& f, double t, Complex w,
                            const ComplexPolynomial& g, int n, double tol = 1e-13);

/// Closed-form monic Q_n for the Bernstein-Szego, single-moment and
/// Fisher-Hartwig families at sweep value t. UnsupportedFamily otherwise.
ComplexPolynomial closed_form_opuc(const WeightFamily& f, double t, int n);

/// 2F1(-n, b; c; 1 - z) expanded in powers of z.
ComplexPolynomial hyp2f1_polynomial(unsigned n, Complex b, Complex c);

/// f_n(z; r, s) = 2F1(-n, r+is; 2r; 1-z). PoleError at r = 0 (use g_n).
ComplexPolynomial fisher_hartwig_f(unsigned n, double r, double s);
/// g_n(z; s) = 2F1(-n, is+1; 2; 1-z).
ComplexPolynomial fisher_hartwig_g(unsigned n, double s);

}  // namespace popuc
