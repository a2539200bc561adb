#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <sstream>

#include "popuc/angles.hpp"
#include "popuc/opuc.hpp"
#include "popuc/parallel.hpp"

namespace popuc::cli {

bool DirectionRun::all(Direction d) const {
  if (verdicts.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [d](const Verdict& v) { return v.direction == d; });
}

std::string DirectionRun::summary() const {
  std::ostringstream out;
  out << verdicts.size() << " columns:";
  for (const auto& v : verdicts) out << ' ' << v.zero_index << '=' << to_string(v.direction);
  return out.str();
}

std::vector<int> columns_in(const TrajectoryTable& tab, double lo, double hi, double margin) {
  std::vector<int> out;
  for (int k = 0; k < tab.n_zeros; ++k) {
    const double a = tab.args.front()[k];
    if (a > lo + margin && a < hi - margin) out.push_back(k);
  }
  return out;
}

std::vector<double> linear_grid(double a, double b, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = a + (b - a) * i / (points - 1);
  g.back() = b;
  return g;
}

std::vector<double> geometric_grid(double a, double b, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = a * std::pow(b / a, static_cast<double>(i) / (points - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

namespace {

DirectionRun finish(TrajectoryTable tab, std::vector<int> columns, std::optional<std::pair<double, double>> arc = {}) {
  DirectionRun run;
  run.verdicts = arc ? monotonicity_verdict_on_arc(tab, columns, arc->first, arc->second)
                     : monotonicity_verdict(tab, columns);
  run.table = std::move(tab);
  run.columns = std::move(columns);
  return run;
}

TrajectoryTable track_polys(const std::vector<double>& grid, const std::function<ComplexPolynomial(double)>& make,
                            double theta0) {
  std::vector<ZeroSet> sets(grid.size());
  ZeroOptions opts;
  opts.theta0 = theta0;
  parallel_for(grid.size(), [&](std::size_t i) { sets[i] = zeros(make(grid[i]), opts); });
  return track(grid, sets);
}

}  // namespace

DirectionRun bernstein_szego_kernel(Complex xi) {
  const auto f = WeightFamily::bernstein_szego(0.1, 0.0);
  auto tab = sweep(f, linear_grid(0.1, 0.9, 81), 15, FixedZero{xi});
  auto cols = columns_in(tab, 0.0, kPi);
  // Drop the pinned zero itself.
  cols.erase(std::remove_if(cols.begin(), cols.end(),
                            [&](int k) { return std::abs(tab.zeros.front()[k] - xi) < 1e-8; }),
             cols.end());
  return finish(std::move(tab), std::move(cols));
}

DirectionRun single_moment_symmetric(double b) {
  const auto f = WeightFamily::single_moment(0.05);
  auto tab = sweep(f, linear_grid(0.05, 0.95, 91), 15, ConstantB{Complex{b, 0.0}});
  return finish(tab, columns_in(tab, 0.0, kPi, 1e-6));
}

DirectionRun fisher_hartwig_r(double s, bool upper) {
  auto tab = track_polys(
      geometric_grid(0.6, 17.0, 241), [s](double r) { return fisher_hartwig_f(10, r, s).monic(); }, -kPi);
  // Zeros may leave the half-plane (one crosses +-pi inside the range);
  // the claim covers the part of each path that stays there.
  if (upper) return finish(tab, columns_in(tab, 0.0, kPi), std::make_pair(0.0, kPi));
  return finish(tab, columns_in(tab, -kPi, 0.0), std::make_pair(-kPi, 0.0));
}

DirectionRun fisher_hartwig_s(double r) {
  auto tab = track_polys(
      linear_grid(-2.0, 2.0, 161), [r](double s) { return fisher_hartwig_f(10, r, s).monic(); }, -kPi);
  return finish(tab, {});
}

AuxxComparison auxx_comparison(const BRule& rule) {
  const auto sm = WeightFamily::single_moment(0.8);
  const auto bs = WeightFamily::bernstein_szego(0.8, 0.0);
  AuxxComparison out;
  ZeroSet zs = zeros(popuc_at(sm, 0.8, 15, rule));
  ZeroSet zb = zeros(popuc_at(bs, 0.8, 15, rule));
  out.raw.args1 = zs.args;
  out.raw.args2 = zb.args;
  std::sort(out.raw.args1.rbegin(), out.raw.args1.rend());
  std::sort(out.raw.args2.rbegin(), out.raw.args2.rend());
  for (std::size_t j = 0; j < out.raw.args1.size(); ++j) {
    out.raw.first_below.push_back(out.raw.args1[j] < out.raw.args2[j] - kMonoTol);
  }
  out.upper_holds = true;
  out.lower_holds = true;
  bool any_upper = false;
  for (std::size_t j = 0; j < out.raw.args1.size(); ++j) {
    const double a = out.raw.args1[j];
    const double b = out.raw.args2[j];
    if (a > 1e-9 && a < kPi - 1e-9) {
      any_upper = true;
      out.sm_upper.push_back(a);
      out.bs_upper.push_back(b);
      if (!(a < b - kMonoTol)) out.upper_holds = false;
    } else if (a > kPi + 1e-9) {
      if (!(a < b - kMonoTol)) out.lower_holds = false;
    }
  }
  if (!any_upper) out.upper_holds = false;
  std::reverse(out.sm_upper.begin(), out.sm_upper.end());
  std::reverse(out.bs_upper.begin(), out.bs_upper.end());
  return out;
}

}  // namespace popuc::cli
