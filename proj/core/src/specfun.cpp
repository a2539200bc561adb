#include "popuc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "popuc/errors.hpp"

namespace popuc {

Complex pochhammer(Complex x, unsigned n) {
  Complex result{1.0, 0.0};
  for (unsigned k = 0; k < n; ++k) {
    result *= x + static_cast<double>(k);
  }
  return result;
}

std::vector<Complex> hyp2f1_terminating_terms(unsigned n, Complex b, Complex c) {
  for (unsigned k = 0; k < n; ++k) {
    const Complex ck = c + static_cast<double>(k);
    if (std::abs(ck) <= 1e-14 * std::max(1.0, std::abs(c))) {
      throw PoleError("2F1 denominator (c)_k vanishes at k=" + std::to_string(k + 1));
    }
  }
  std::vector<Complex> terms(n + 1);
  terms[0] = 1.0;
  const double nn = static_cast<double>(n);
  for (unsigned k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    terms[k + 1] = terms[k] * (kk - nn) * (b + kk) / ((c + kk) * (kk + 1.0));
  }
  return terms;
}

Complex hyp2f1_terminating(unsigned n, Complex b, Complex c, Complex x) {
  const auto terms = hyp2f1_terminating_terms(n, b, c);
  // Horner in x over the precomputed terms.
  Complex sum = terms[n];
  for (unsigned k = n; k-- > 0;) {
    sum = sum * x + terms[k];
  }
  return sum;
}

double gegenbauer(unsigned n, double lambda, double x) {
  if (!(lambda > -0.5) || lambda == 0.0) {
    throw DomainError("gegenbauer requires lambda > -1/2 and lambda != 0");
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * x;
  for (unsigned k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double next = (2.0 * x * (kk + lambda - 1.0) * curr - (kk + 2.0 * lambda - 2.0) * prev) / kk;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace popuc
