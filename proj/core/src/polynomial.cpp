#include "popuc/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "popuc/errors.hpp"

namespace popuc {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Complex{});
}

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex coeff) {
  if (degree < 0) throw DegreeError("negative degree");
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex{1.0, 0.0}};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc = c_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * z + c_[k];
  return acc;
}

void ComplexPolynomial::eval_with_derivative(Complex z, Complex& p, Complex& dp) const {
  p = c_.back();
  dp = Complex{};
  for (int k = degree() - 1; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c_[k];
  }
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (degree() == 0) return ComplexPolynomial();
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::deflate(Complex root, Complex* remainder) const {
  if (degree() == 0) {
    if (remainder) *remainder = c_[0];
    return ComplexPolynomial();
  }
  std::vector<Complex> q(c_.size() - 1);
  Complex acc = c_.back();
  for (int k = degree() - 1; k >= 0; --k) {
    q[k] = acc;
    acc = acc * root + c_[k];
  }
  if (remainder) *remainder = acc;
  return ComplexPolynomial(std::move(q));
}

ComplexPolynomial ComplexPolynomial::monic() const {
  const Complex lead = c_.back();
  if (lead == Complex{}) throw DegreeError("cannot normalize a polynomial with zero leading coefficient");
  std::vector<Complex> c = c_;
  for (auto& v : c) v /= lead;
  c.back() = Complex{1.0, 0.0};
  return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& o) const {
  std::vector<Complex> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (*this)[static_cast<int>(k)] + o[static_cast<int>(k)];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& o) const { return *this + o * Complex{-1.0}; }

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& o) const {
  std::vector<Complex> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator*(Complex s) const {
  std::vector<Complex> c = c_;
  for (auto& v : c) v *= s;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::shift() const {
  std::vector<Complex> c(c_.size() + 1);
  std::copy(c_.begin(), c_.end(), c.begin() + 1);
  return ComplexPolynomial(std::move(c));
}

std::string ComplexPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : c_) arr.push_back({v.real(), v.imag()});
  return arr.dump();
}

ComplexPolynomial star(const ComplexPolynomial& p, int n) {
  if (p.degree() > n) {
    throw DegreeError("star: declared degree " + std::to_string(p.degree()) + " exceeds " + std::to_string(n));
  }
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = std::conj(p[n - k]);
  return ComplexPolynomial(std::move(c));
}

}  // namespace popuc
