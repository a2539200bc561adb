#include "popuc/opuc.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "popuc/errors.hpp"

namespace popuc {

OpucBasis szego_levinson(const MomentSequence& m, int n, double tol_pd) {
  if (n < 0) throw DegreeError("szego_levinson: negative degree");
  if (m.jmax() < n) throw DomainError("szego_levinson needs moments c_0..c_n");
  const double c0 = m(0).real();
  if (!(c0 > 0.0)) throw NotPositiveDefinite("c_0 must be positive");

  OpucBasis basis;
  basis.monic.push_back(ComplexPolynomial::monomial(0));
  basis.norm2.push_back(c0);
  for (int j = 0; j < n; ++j) {
    const ComplexPolynomial& q = basis.monic.back();
    // <z Q_j, 1> = sum_m q_m c_{-(m+1)}
    Complex acc{};
    for (int k = 0; k <= j; ++k) acc += q[k] * m(-(k + 1));
    const Complex conj_a = acc / basis.norm2.back();
    const Complex a = std::conj(conj_a);
    const double defect = 1.0 - std::norm(a);
    if (!(defect > tol_pd)) {
      throw NotPositiveDefinite("1 - |a_" + std::to_string(j) + "|^2 = " + std::to_string(defect) +
                                " below tolerance");
    }
    std::vector<Complex> next = q.shift().coeffs();
    const ComplexPolynomial qs = star(q, j);
    for (int k = 0; k <= j; ++k) next[k] -= conj_a * qs[k];
    next.back() = Complex{1.0, 0.0};
    basis.monic.emplace_back(std::move(next));
    basis.verblunsky.push_back(a);
    basis.norm2.push_back(basis.norm2.back() * defect);
  }
  for (double v : basis.norm2) basis.kappa.push_back(1.0 / std::sqrt(v));
  return basis;
}

OpucBasis szego_from_verblunsky(const std::vector<Complex>& a) {
  OpucBasis basis;
  basis.monic.push_back(ComplexPolynomial::monomial(0));
  basis.norm2.push_back(1.0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double defect = 1.0 - std::norm(a[j]);
    if (!(defect > 0.0)) throw DiskViolation("|a_" + std::to_string(j) + "| >= 1");
    const ComplexPolynomial& q = basis.monic.back();
    std::vector<Complex> next = q.shift().coeffs();
    const ComplexPolynomial qs = star(q, static_cast<int>(j));
    for (std::size_t k = 0; k <= j; ++k) next[k] -= std::conj(a[j]) * qs[static_cast<int>(k)];
    next.back() = Complex{1.0, 0.0};
    basis.monic.emplace_back(std::move(next));
    basis.verblunsky.push_back(a[j]);
    basis.norm2.push_back(basis.norm2.back() * defect);
  }
  for (double v : basis.norm2) basis.kappa.push_back(1.0 / std::sqrt(v));
  return basis;
}

ComplexPolynomial heine_determinant(const MomentSequence& m, int n) {
  if (n < 0) throw DegreeError("heine_determinant: negative degree");
  if (n > 12) throw DegreeError("heine_determinant is an oracle for n <= 12");
  if (n == 0) return ComplexPolynomial::monomial(0);
  if (m.jmax() < n) throw DomainError("heine_determinant needs moments c_0..c_n");

  // Rows i = 0..n-1 hold <z^k, z^i> = c_{i-k}; the last row is 1, z, ..., z^n.
  Eigen::MatrixXcd rows(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= n; ++k) rows(i, k) = m(i - k);
  }
  const Complex gram = rows.leftCols(n).partialPivLu().determinant();
  const double scale = std::pow(std::abs(m(0)), n);
  if (!(gram.real() > 1e-14 * scale)) throw SingularGram("Toeplitz determinant D_{n-1} is not positive");

  std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd minor(n, n);
    for (int col = 0, dst = 0; col <= n; ++col) {
      if (col == k) continue;
      minor.col(dst++) = rows.col(col);
    }
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    coeffs[k] = sign * minor.partialPivLu().determinant() / gram;
  }
  coeffs[n] = Complex{1.0, 0.0};
  return ComplexPolynomial(std::move(coeffs));
}

Complex cd_kernel(const OpucBasis& basis, Complex w, Complex z, int n) {
  if (n < 0 || n > basis.degree()) throw DegreeError("cd_kernel: n outside the basis");
  Complex sum{};
  for (int j = 0; j <= n; ++j) sum += std::conj(basis.orthonormal(j, w)) * basis.orthonormal(j, z);
  return sum;
}

double reproducing_residual(const OpucBasis& basis, const WeightFamily& f, double t, Complex w,
                            const ComplexPolynomial& g, int n, double tol) {
  const Complex value = integrate_against(
      f, t,
      [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        return g(z) * cd_kernel(basis, z, w, n);
      },
      tol);
  return std::abs(value - g(w));
}

ComplexPolynomial hyp2f1_polynomial(unsigned n, Complex b, Complex c) {
  const std::vector<Complex> terms = hyp2f1_terminating_terms(n, b, c);
  // Horner in w = 1 - z.
  const ComplexPolynomial one_minus_z(std::vector<Complex>{Complex{1.0}, Complex{-1.0}});
  ComplexPolynomial acc(std::vector<Complex>{terms[n]});
  for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
    acc = acc * one_minus_z;
    std::vector<Complex> c0 = acc.coeffs();
    c0[0] += terms[k];
    acc = ComplexPolynomial(std::move(c0));
  }
  return acc;
}

ComplexPolynomial fisher_hartwig_f(unsigned n, double r, double s) {
  return hyp2f1_polynomial(n, Complex{r, s}, Complex{2.0 * r, 0.0});
}

ComplexPolynomial fisher_hartwig_g(unsigned n, double s) {
  return hyp2f1_polynomial(n, Complex{1.0, s}, Complex{2.0, 0.0});
}

ComplexPolynomial closed_form_opuc(const WeightFamily& f, double t, int n) {
  if (n < 0) throw DegreeError("closed_form_opuc: negative degree");
  const WeightFamily g = f.depends_on_t() ? f.at(t) : f;
  switch (g.kind()) {
    case FamilyKind::BernsteinSzego: {
      if (n == 0) return ComplexPolynomial::monomial(0);
      std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
      c[n] = 1.0;
      c[n - 1] = -std::polar(g.param("r"), g.param("phi"));
      return ComplexPolynomial(std::move(c));
    }
    case FamilyKind::SingleMoment: {
      const double r = g.param("r");
      std::vector<double> d{1.0, 2.0 / r};
      for (int j = 2; j <= n; ++j) d.push_back((2.0 / r) * d[j - 1] - d[j - 2]);
      std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
      for (int j = 0; j < n; ++j) c[j] = d[j] / d[n];
      c[n] = 1.0;
      return ComplexPolynomial(std::move(c));
    }
    case FamilyKind::FisherHartwig: {
      const double r = g.param("r");
      const double s = g.param("s");
      const auto un = static_cast<unsigned>(n);
      const Complex b{r + 1.0, s};
      const Complex c{2.0 * r + 1.0, 0.0};
      const Complex prefactor = pochhammer(c, un) / pochhammer(b, un);
      std::vector<Complex> coeffs = (hyp2f1_polynomial(un, b, c) * prefactor).coeffs();
      coeffs[n] = Complex{1.0, 0.0};
      return ComplexPolynomial(std::move(coeffs));
    }
    default:
      throw UnsupportedFamily("no closed form for " + std::string(to_string(g.kind())) +
                              "; use szego_levinson");
  }
}

}  // namespace popuc
