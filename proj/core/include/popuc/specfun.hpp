#pragma once

#include <complex>
#include <vector>

namespace popuc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Rising factorial x(x+1)...(x+n-1); 1 for n == 0.
Complex pochhammer(Complex x, unsigned n);

/// Terminating Gauss series 2F1(-n, b; c; x) as an exact finite sum.
/// Throws PoleError when (c)_k vanishes for some k < n.
Complex hyp2f1_terminating(unsigned n, Complex b, Complex c, Complex x);

/// Series coefficients t_0..t_n of 2F1(-n, b; c; x) = sum_k t_k x^k.
/// Built by forward recurrence on the term ratio, so no Pochhammer
/// factor is ever formed on its own.
std::vector<Complex> hyp2f1_terminating_terms(unsigned n, Complex b, Complex c);

/// Ultraspherical polynomial C_n^{(lambda)}(x) by the three-term
/// recurrence. Requires lambda > -1/2 and lambda != 0 (DomainError).
double gegenbauer(unsigned n, double lambda, double x);

}  // namespace popuc
