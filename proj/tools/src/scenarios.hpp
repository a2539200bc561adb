#pragma once

#include <string>
#include <vector>

#include "popuc/trajectory.hpp"

namespace popuc::cli {

/// A tracked family of zero sets with the columns a direction claim is
/// about and the verdicts for those columns.
struct DirectionRun {
  TrajectoryTable table;
  std::vector<int> columns;
  std::vector<Verdict> verdicts;

  /// Every designated column has the given direction (and there is at least one).
  bool all(Direction d) const;
  std::string summary() const;
};

/// Columns whose argument at the first grid point lies strictly inside (lo, hi).
std::vector<int> columns_in(const TrajectoryTable& tab, double lo, double hi, double margin = 1e-9);

std::vector<double> linear_grid(double a, double b, int points);
std::vector<double> geometric_grid(double a, double b, int points);

/// Bernstein-Szego r-sweep of P_15 with a zero fixed at xi (K_14(xi, .) plus xi),
/// upper-semicircle columns.
DirectionRun bernstein_szego_kernel(Complex xi);
/// Single-moment r-sweep of P_15(.; b), b = +1 or -1, upper nonreal columns.
DirectionRun single_moment_symmetric(double b);
/// f_10(.; r, s) swept in r from 0.6 to 17. Upper columns when upper, else lower.
DirectionRun fisher_hartwig_r(double s, bool upper);
/// f_10(.; r, s) swept in s over [-2, 2], all columns.
DirectionRun fisher_hartwig_s(double r);

struct AuxxComparison {
  Comparison raw;                 // single-moment first, Bernstein-Szego second, descending args
  std::vector<double> sm_upper;   // args in (0, pi), ascending
  std::vector<double> bs_upper;
  bool upper_holds = false;       // theta_j(sm) < theta_j(bs) on (0, pi)
  bool lower_holds = false;       // theta_j(sm) < theta_j(bs) on (pi, 2pi)
};

/// Zeros of P_15 for single-moment and Bernstein-Szego at r = 0.8 with the
/// given b rule (fixed zero at 1, or a constant b).
AuxxComparison auxx_comparison(const BRule& rule);

}  // namespace popuc::cli
