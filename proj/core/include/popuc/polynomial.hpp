#pragma once

#include <string>
#include <vector>

#include "popuc/specfun.hpp"

namespace popuc {

/// Dense complex polynomial, coefficients in ascending degree. The declared
/// degree is coeffs().size() - 1 even when the leading entry is zero, which
/// is what the *-reversal needs.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : c_{Complex{0.0, 0.0}} {}
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  static ComplexPolynomial monomial(int degree, Complex coeff = 1.0);
  /// Monic polynomial prod (z - r_k).
  static ComplexPolynomial from_roots(const std::vector<Complex>& roots);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return c_; }
  Complex operator[](int k) const { return k >= 0 && k <= degree() ? c_[k] : Complex{}; }
  Complex leading() const noexcept { return c_.back(); }
  bool is_monic(double tol = 0.0) const { return std::abs(c_.back() - Complex{1.0, 0.0}) <= tol; }

  Complex operator()(Complex z) const;
  /// Value and first derivative in one Horner pass.
  void eval_with_derivative(Complex z, Complex& p, Complex& dp) const;

  ComplexPolynomial derivative() const;
  /// Synthetic division by (z - root); the remainder is returned through
  /// `remainder` when given.
  ComplexPolynomial deflate(Complex root, Complex* remainder = nullptr) const;
  ComplexPolynomial monic() const;
  double max_abs_coeff() const;

  ComplexPolynomial operator+(const ComplexPolynomial& o) const;
  ComplexPolynomial operator-(const ComplexPolynomial& o) const;
  ComplexPolynomial operator*(const ComplexPolynomial& o) const;
  ComplexPolynomial operator*(Complex s) const;
  /// Multiplication by z.
  ComplexPolynomial shift() const;

  /// [[re, im], ...] ascending.
  std::string to_json() const;

 private:
  std::vector<Complex> c_;
};

/// z^n conj(p(1/conj z)). DegreeError when p's declared degree exceeds n.
ComplexPolynomial star(const ComplexPolynomial& p, int n);

}  // namespace popuc
