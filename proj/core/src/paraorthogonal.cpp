#include "popuc/paraorthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "popuc/angles.hpp"
#include "popuc/errors.hpp"

namespace popuc {

namespace {

void require_unimodular(Complex b) {
  if (std::abs(std::abs(b) - 1.0) > 1e-12) {
    throw NotUnimodular("|b| = " + std::to_string(std::abs(b)) + " is not 1");
  }
}

}  // namespace

ComplexPolynomial make_popuc(const ComplexPolynomial& q_prev, Complex b) {
  require_unimodular(b);
  if (!q_prev.is_monic(1e-12)) throw DegreeError("popuc expects a monic Q_{n-1}");
  const int m = q_prev.degree();
  std::vector<Complex> c = q_prev.shift().coeffs();
  const ComplexPolynomial qs = star(q_prev, m);
  for (int k = 0; k <= m; ++k) c[k] -= std::conj(b) * qs[k];
  c.back() = Complex{1.0, 0.0};
  return ComplexPolynomial(std::move(c));
}

Complex fixed_zero_parameter(const ComplexPolynomial& q_prev, Complex xi) {
  require_unimodular(xi);
  const Complex q = q_prev(xi);
  const Complex qs = star(q_prev, q_prev.degree())(xi);
  if (std::abs(qs) < 1e-14) throw DegenerateEvaluation("Q^*_{n-1}(xi) vanishes");
  const Complex b = std::conj(xi) * std::conj(q) / std::conj(qs);
  // |Q(xi)| = |Q^*(xi)| on the circle; renormalize the rounding away.
  return b / std::abs(b);
}

Complex fixed_zero_parameter(const OpucBasis& basis, Complex xi, int n) {
  if (n < 1 || n - 1 > basis.degree()) throw DegreeError("fixed_zero_parameter: n outside the basis");
  return fixed_zero_parameter(basis.monic[n - 1], xi);
}

double GGTMatrix::unitarity_defect() const {
  const Eigen::MatrixXcd d = entries.adjoint() * entries - Eigen::MatrixXcd::Identity(dim(), dim());
  return d.cwiseAbs().maxCoeff();
}

bool GGTMatrix::is_unreduced_hessenberg(double tol) const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j + 1 < i; ++j) {
      if (std::abs(entries(i, j)) > tol) return false;
    }
    if (i > 0) {
      const Complex sub = entries(i, i - 1);
      if (!(sub.real() > 0.0) || std::abs(sub.imag()) > tol) return false;
    }
  }
  return true;
}

GGTMatrix ggt(const std::vector<Complex>& a, Complex b) {
  require_unimodular(b);
  const int n = static_cast<int>(a.size()) + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    const Complex aj = a[j];
    if (!(std::abs(aj) < 1.0)) throw DiskViolation("|a_" + std::to_string(j) + "| >= 1");
    const double rho = std::sqrt(1.0 - std::norm(aj));
    // Right-multiplication by Theta(a_j) touches columns j and j+1 only.
    const Eigen::VectorXcd left = m.col(j);
    const Eigen::VectorXcd right = m.col(j + 1);
    m.col(j) = left * std::conj(aj) + right * rho;
    m.col(j + 1) = left * rho - right * aj;
  }
  m.col(n - 1) *= std::conj(b);
  return GGTMatrix{std::move(m)};
}

ComplexPolynomial char_poly(const GGTMatrix& g) {
  const int n = g.dim();
  const Eigen::MatrixXcd& h = g.entries;
  std::vector<ComplexPolynomial> p{ComplexPolynomial::monomial(0)};
  for (int k = 1; k <= n; ++k) {
    ComplexPolynomial next = p[k - 1].shift() - p[k - 1] * h(k - 1, k - 1);
    Complex prod{1.0, 0.0};
    for (int i = k - 2; i >= 0; --i) {
      prod *= h(i + 1, i);
      next = next - p[i] * (h(i, k - 1) * prod);
    }
    std::vector<Complex> c = next.coeffs();
    c.resize(static_cast<std::size_t>(k) + 1);
    c[k] = Complex{1.0, 0.0};
    p.emplace_back(std::move(c));
  }
  return p.back();
}

double ZeroSet::min_gap() const {
  if (args.size() < 2) return kTwoPi;
  double gap = args.front() + kTwoPi - args.back();
  for (std::size_t k = 1; k < args.size(); ++k) gap = std::min(gap, args[k] - args[k - 1]);
  return gap;
}

std::string ZeroSet::to_csv() const {
  std::string out = "index,arg,re,im,abs_residual,poly_residual\n";
  char line[256];
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", k, args[k], zeros[k].real(),
                  zeros[k].imag(), abs_residual[k], poly_residual[k]);
    out += line;
  }
  return out;
}

ZeroSet zeros(const ComplexPolynomial& p, const ZeroOptions& options) {
  const int n = p.degree();
  if (n < 1) throw DegreeError("zeros: degree must be at least 1");
  if (!p.is_monic(1e-12)) throw DegreeError("zeros: polynomial must be monic");

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(1.0, kTwoPi * k / n + 0.37);

  double scale = 0.0;
  for (const auto& c : p.coeffs()) scale += std::abs(c);

  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex pv, dpv;
      p.eval_with_derivative(z[k], pv, dpv);
      if (pv == Complex{}) continue;
      const Complex ratio = pv / dpv;
      Complex repulse{};
      for (int j = 0; j < n; ++j) {
        if (j != k) repulse += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step <= 1e-15) break;
  }

  for (auto& root : z) {
    for (int polish = 0; polish < 2; ++polish) {
      Complex pv, dpv;
      p.eval_with_derivative(root, pv, dpv);
      if (std::abs(dpv) > 0.0) {
        const Complex next = root - pv / dpv;
        if (std::abs(p(next)) <= std::abs(pv)) root = next;
      }
    }
  }

  ZeroSet out;
  out.theta0 = options.theta0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> args(n);
  for (int k = 0; k < n; ++k) args[k] = canonical_arg(z[k], options.theta0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return args[x] < args[y]; });
  for (std::size_t idx : order) {
    const Complex root = z[idx];
    const double pres = std::abs(p(root));
    if (!(pres <= 1e-10 * scale)) {
      throw ConvergenceError("root residual " + std::to_string(pres) + " after " + std::to_string(iter) +
                             " Aberth iterations");
    }
    const double cres = std::abs(std::abs(root) - 1.0);
    if (cres > options.circle_tol) {
      throw OffCircle("zero at modulus " + std::to_string(std::abs(root)) + " is off the unit circle");
    }
    out.zeros.push_back(root);
    out.args.push_back(args[idx]);
    out.abs_residual.push_back(cres);
    out.poly_residual.push_back(pres);
  }
  if (n > 1 && out.min_gap() <= options.sep_tol) {
    throw CollisionError("two zeros closer than sep_tol in argument");
  }
  return out;
}

Eigen::VectorXcd eigenvector(const GGTMatrix& g, Complex zeta, double tol) {
  const int n = g.dim();
  // Radial offset keeps the shifted matrix invertible while staying far
  // from the other (unimodular) eigenvalues.
  const Complex shift = zeta * (1.0 + 1e-10);
  const Eigen::MatrixXcd a = g.entries - shift * Eigen::MatrixXcd::Identity(n, n);
  const auto lu = a.partialPivLu();
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n) / std::sqrt(static_cast<double>(n));
  double residual = 0.0;
  for (int step = 0; step < 3; ++step) {
    v = lu.solve(v);
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw EigenpairError("inverse iteration broke down");
    v /= norm;
    residual = (g.entries * v - zeta * v).norm();
    if (residual <= tol) return v;
  }
  throw EigenpairError("eigenvector residual " + std::to_string(residual) + " above tolerance");
}

double quasi_orthogonality_residual(const ComplexPolynomial& p, const WeightFamily& f, double t, double tol) {
  const int n = p.degree();
  if (n < 2) return 0.0;
  const auto dim = static_cast<std::size_t>(n - 1);
  const VectorIntegrand integrand = [&](double theta, std::span<Complex> out) {
    const Complex z = std::polar(1.0, theta);
    const Complex pv = p(z);
    const Complex step = std::conj(z);
    Complex zk = step;
    for (std::size_t k = 0; k < dim; ++k) {
      out[k] = pv * zk;
      zk *= step;
    }
  };
  const auto values = integrate_against(f, t, integrand, dim, tol);
  double worst = 0.0;
  for (const auto& v : values) worst = std::max(worst, std::abs(v));
  return worst;
}

RieszCheck riesz_property_check(const ComplexPolynomial& p, const WeightFamily& f, double t, Complex zeta,
                                const ComplexPolynomial& h, double tol) {
  if (std::abs(p(zeta)) > 1e-8) throw NotAZero("|P(zeta)| = " + std::to_string(std::abs(p(zeta))));
  if (h.degree() > p.degree() - 1) throw DegreeError("riesz_property_check: deg h must be below deg P");
  const ComplexPolynomial q = p.deflate(zeta);
  const VectorIntegrand integrand = [&](double theta, std::span<Complex> out) {
    const Complex z = std::polar(1.0, theta);
    const Complex qv = q(z);
    out[0] = qv * std::conj(h(z));
    out[1] = qv;
  };
  const auto v = integrate_against(f, t, integrand, 2, tol);
  return RieszCheck{v[0], std::conj(h(zeta)) * v[1], v[1]};
}

double kernel_factorization_check(const OpucBasis& basis, Complex xi, int n, const std::vector<Complex>& sample) {
  if (sample.empty()) throw DomainError("kernel_factorization_check needs sample points");
  const Complex b = fixed_zero_parameter(basis, xi, n);
  const ComplexPolynomial p = make_popuc(basis.monic.at(n - 1), b);
  auto ratio = [&](Complex z) {
    const Complex den = (1.0 - z * std::conj(xi)) * cd_kernel(basis, xi, z, n - 1);
    if (std::abs(den) < 1e-13) throw DegenerateEvaluation("kernel factorization denominator vanishes");
    return p(z) / den;
  };
  const Complex ref = ratio(sample.front());
  double worst = 0.0;
  for (const Complex& z : sample) worst = std::max(worst, std::abs(ratio(z) - ref) / std::abs(ref));
  return worst;
}

}  // namespace popuc
