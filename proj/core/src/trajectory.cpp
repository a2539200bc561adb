#include "popuc/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "popuc/angles.hpp"
#include "popuc/errors.hpp"
#include "popuc/parallel.hpp"

namespace popuc {

namespace {

std::string fmt_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

double fd_step(double t) { return 1e-5 * std::max(1.0, std::abs(t)); }

void require_zero(const ComplexPolynomial& p, Complex zeta) {
  const double res = std::abs(p(zeta));
  if (res > 1e-8 * std::max(1.0, p.max_abs_coeff())) {
    throw NotAZero("|P(zeta)| = " + std::to_string(res));
  }
}

}  // namespace

std::string describe(const BRule& rule) {
  if (const auto* c = std::get_if<ConstantB>(&rule)) return "const:" + fmt_complex(c->b);
  if (const auto* x = std::get_if<FixedZero>(&rule)) return "fixed-zero:" + fmt_complex(x->xi);
  return std::get<BOfT>(rule).name;
}

ComplexPolynomial opuc_polynomial(const WeightFamily& f, double t, int degree) {
  switch (f.kind()) {
    case FamilyKind::BernsteinSzego:
    case FamilyKind::SingleMoment:
    case FamilyKind::FisherHartwig:
      return closed_form_opuc(f, t, degree);
    default:
      return szego_levinson(moments(f, t, degree), degree).monic.back();
  }
}

Complex resolve_b(const BRule& rule, const ComplexPolynomial& q_prev, double t) {
  if (const auto* c = std::get_if<ConstantB>(&rule)) return c->b;
  if (const auto* x = std::get_if<FixedZero>(&rule)) return fixed_zero_parameter(q_prev, x->xi);
  return std::get<BOfT>(rule).b(t);
}

ComplexPolynomial popuc_at(const WeightFamily& f, double t, int n, const BRule& rule) {
  if (n < 1) throw DegreeError("POPUC degree must be at least 1");
  const ComplexPolynomial q = opuc_polynomial(f, t, n - 1);
  return make_popuc(q, resolve_b(rule, q, t));
}

std::vector<double> TrajectoryTable::column(int k) const {
  std::vector<double> out;
  out.reserve(args.size());
  for (const auto& row : args) out.push_back(row.at(k));
  return out;
}

std::string TrajectoryTable::to_csv() const {
  std::string out = "t,zero_index,arg_unwrapped,re,im\n";
  char line[160];
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    for (int k = 0; k < n_zeros; ++k) {
      std::snprintf(line, sizeof line, "%.17g,%d,%.17g,%.17g,%.17g\n", t_grid[i], k, args[i][k], zeros[i][k].real(),
                    zeros[i][k].imag());
      out += line;
    }
  }
  return out;
}

TrajectoryTable track(const std::vector<double>& t_grid, const std::vector<ZeroSet>& sets, double match_gap) {
  if (t_grid.size() != sets.size()) throw IndexMismatch("one zero set per grid point is required");
  if (t_grid.empty()) throw DomainError("empty t grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("t grid must be strictly increasing");
  }
  TrajectoryTable tab;
  tab.t_grid = t_grid;
  tab.n_zeros = static_cast<int>(sets.front().size());
  tab.theta0 = sets.front().theta0;
  tab.args.push_back(sets.front().args);
  tab.zeros.push_back(sets.front().zeros);
  tab.residuals.push_back(0.0);

  for (std::size_t i = 1; i < sets.size(); ++i) {
    const ZeroSet& next = sets[i];
    if (static_cast<int>(next.size()) != tab.n_zeros) throw IndexMismatch("zero count changed along the sweep");
    const auto& prev = tab.args.back();
    std::vector<double> row(tab.n_zeros);
    std::vector<Complex> zrow(tab.n_zeros);
    std::vector<int> owner(tab.n_zeros, -1);
    double worst = 0.0;
    for (int k = 0; k < tab.n_zeros; ++k) {
      int best = -1;
      double best_step = 0.0;
      for (int j = 0; j < tab.n_zeros; ++j) {
        const double step = wrap_pi(next.args[j] - prev[k]);
        if (best < 0 || std::abs(step) < std::abs(best_step)) {
          best = j;
          best_step = step;
        }
      }
      if (std::abs(best_step) >= kPi) throw MatchingError("half-turn tie while unwrapping; refine the grid");
      if (std::abs(best_step) >= match_gap) {
        throw MatchingError("matching step " + std::to_string(std::abs(best_step)) + " at t = " +
                            std::to_string(t_grid[i]) + " exceeds match_gap; refine the grid");
      }
      if (owner[best] >= 0) {
        throw MatchingError("two trajectories claim one zero at t = " + std::to_string(t_grid[i]));
      }
      owner[best] = k;
      row[k] = prev[k] + best_step;
      zrow[k] = next.zeros[best];
      worst = std::max(worst, std::abs(best_step));
    }
    tab.args.push_back(std::move(row));
    tab.zeros.push_back(std::move(zrow));
    tab.residuals.push_back(worst);
  }
  return tab;
}

TrajectoryTable sweep(const WeightFamily& f, const std::vector<double>& t_grid, int n, const BRule& rule,
                      const SweepOptions& options) {
  if (n < 2) throw DegreeError("sweep needs n >= 2");
  std::vector<ZeroSet> sets(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) { sets[i] = zeros(popuc_at(f, t_grid[i], n, rule), options.zeros); });
  TrajectoryTable tab = track(t_grid, sets, options.match_gap);
  tab.b_rule = describe(rule);
  return tab;
}

ComplexPolynomial popuc_dt(const WeightFamily& f, double t, int n, const BRule& rule) {
  const double h = fd_step(t);
  const ComplexPolynomial plus = popuc_at(f, t + h, n, rule);
  const ComplexPolynomial minus = popuc_at(f, t - h, n, rule);
  return (plus - minus) * Complex{1.0 / (2.0 * h), 0.0};
}

double tracked_phi_prime(const WeightFamily& f, double t, int n, const BRule& rule, Complex zeta,
                         const ZeroOptions& options) {
  const double h = fd_step(t);
  auto offset = [&](double tt) {
    const ZeroSet zs = zeros(popuc_at(f, tt, n, rule), options);
    double best = kTwoPi;
    for (const Complex& z : zs.zeros) {
      const double d = wrap_pi(std::arg(z / zeta));
      if (std::abs(d) < std::abs(best)) best = d;
    }
    return best;
  };
  return (offset(t + h) - offset(t - h)) / (2.0 * h);
}

Complex velocity_integral(const WeightFamily& f, double t, const ComplexPolynomial& p, Complex zeta,
                          const ComplexPolynomial& dp_dt, double tol) {
  require_zero(p, zeta);
  const ComplexPolynomial q = p.deflate(zeta);
  const VectorIntegrand integrand = [&](double theta, std::span<Complex> out) {
    const Complex z = std::polar(1.0, theta);
    const Complex qv = q(z);
    out[0] = std::conj(qv) * dp_dt(z);
    out[1] = std::norm(qv);
  };
  const auto v = integrate_against(f, t, integrand, 2, tol);
  return -v[0] / v[1].real();
}

double lidskii_velocity(const std::vector<Complex>& a, Complex b, Complex b_prime, Complex zeta) {
  const GGTMatrix g = ggt(a, b);
  const Eigen::VectorXcd v = eigenvector(g, zeta);
  const double last = std::norm(v(v.size() - 1));
  return (Complex{0.0, 1.0} * std::conj(b) * b_prime * last).real();
}

double varpi(const WeightFamily& f, double t, double theta, double phi) {
  if (theta == phi) return 0.0;
  return weight_log_derivative(f, theta, t) - weight_log_derivative(f, phi, t);
}

double s_fixed(double theta, double phi, double theta0) {
  const double s1 = std::sin((phi - theta) / 2.0);
  const double s2 = std::sin((theta0 - theta) / 2.0);
  const double s3 = std::sin((phi - theta0) / 2.0);
  if (std::abs(s1) < 1e-10 || std::abs(s2) < 1e-10) throw PoleError("s_fixed evaluated at a pole");
  const double trig = -0.5 * s3 / (s1 * s2);

  const Complex x = std::polar(1.0, theta);
  const Complex xi = std::polar(1.0, theta0);
  const Complex zeta = std::polar(1.0, phi);
  const Complex cplx = Complex{0.0, 1.0} * (xi - zeta) * x / ((x - xi) * (x - zeta));
  // Rounding in e^{i theta} - e^{i phi} grows like eps / |sin|.
  const double tol = std::max(std::abs(trig), 1e-300) *
                     (1e-12 + 4e-16 * (1.0 / std::abs(s1) + 1.0 / std::abs(s2) + 1.0 / std::max(std::abs(s3), 1e-300)));
  if (std::abs(cplx.real() - trig) > tol || std::abs(cplx.imag()) > tol) {
    throw VerificationFailure("s_fixed closed forms disagree");
  }
  return trig;
}

double s_conjugate(double theta, double phi) {
  const double d = std::cos(theta) - std::cos(phi);
  if (std::abs(d) < 1e-10) throw PoleError("s_conjugate evaluated at a pole");
  const double trig = 0.5 / d;
  const Complex x = std::polar(1.0, theta);
  const Complex zeta = std::polar(1.0, phi);
  const Complex cplx = x / ((x - zeta) * (x - std::conj(zeta)));
  const double tol = std::abs(trig) * (1e-12 + 8e-16 / std::abs(d));
  if (std::abs(cplx.real() - trig) > tol || std::abs(cplx.imag()) > tol) {
    throw VerificationFailure("s_conjugate closed forms disagree");
  }
  return trig;
}

IdentityCheck angular_velocity_identity(const WeightFamily& f, double t, int n, const BRule& rule, Complex zeta,
                                        const Anchor& anchor, double tol) {
  const ComplexPolynomial p = popuc_at(f, t, n, rule);
  require_zero(p, zeta);
  const double phi = std::arg(zeta);
  const double phi_prime = tracked_phi_prime(f, t, n, rule, zeta);
  const Complex i{0.0, 1.0};

  // With ϖ ≡ 0 both sides vanish; skip the log-derivative (it may be
  // undefined for t-independent weights with zeros).
  const bool flat = !f.depends_on_t();
  auto profile = [&](double theta) { return flat ? 0.0 : varpi(f, t, theta, phi); };

  if (const auto* fixed = std::get_if<FixedAnchor>(&anchor)) {
    const Complex xi = std::polar(1.0, fixed->theta0);
    require_zero(p, xi);
    const ComplexPolynomial q = p.deflate(zeta);
    const ComplexPolynomial r = q.deflate(xi);
    const VectorIntegrand integrand = [&](double theta, std::span<Complex> out) {
      const Complex z = std::polar(1.0, theta);
      const Complex qv = q(z);
      out[0] = std::norm(qv);
      out[1] = i * (xi - zeta) * z * r(z) * std::conj(p(z)) * profile(theta);
    };
    const auto v = integrate_against(f, t, integrand, 2, tol);
    const double c = v[0].real();
    return IdentityCheck{c * phi_prime, -v[1].real(), phi_prime, c};
  }

  const Complex zc = std::conj(zeta);
  require_zero(p, zc);
  const ComplexPolynomial q1 = p.deflate(zeta);
  const ComplexPolynomial q2 = p.deflate(zc);
  const ComplexPolynomial r = q1.deflate(zc);
  const VectorIntegrand integrand = [&](double theta, std::span<Complex> out) {
    const Complex z = std::polar(1.0, theta);
    out[0] = std::norm(q1(z)) + std::norm(q2(z));
    out[1] = z * r(z) * std::conj(p(z)) * profile(theta);
  };
  const auto v = integrate_against(f, t, integrand, 2, tol);
  const double c = v[0].real();
  return IdentityCheck{c * phi_prime, -2.0 * zeta.imag() * v[1].real(), phi_prime, c};
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::Increasing:
      return "increasing";
    case Direction::Decreasing:
      return "decreasing";
    case Direction::NonMonotone:
      return "non-monotone";
  }
  return "non-monotone";
}

std::vector<Verdict> monotonicity_verdict(const TrajectoryTable& tab, const std::vector<int>& columns) {
  if (tab.t_grid.size() < 3) throw DomainError("monotonicity_verdict needs at least 3 grid points");
  std::vector<int> cols = columns;
  if (cols.empty()) {
    for (int k = 0; k < tab.n_zeros; ++k) cols.push_back(k);
  }
  std::vector<Verdict> out;
  for (int k : cols) {
    if (k < 0 || k >= tab.n_zeros) throw IndexMismatch("zero index out of range");
    const auto col = tab.column(k);
    Verdict v;
    v.zero_index = k;
    const double first = col[1] - col[0];
    const Direction candidate = first > kMonoTol    ? Direction::Increasing
                                : first < -kMonoTol ? Direction::Decreasing
                                                    : Direction::NonMonotone;
    if (candidate == Direction::NonMonotone) {
      v.witness_t = tab.t_grid[1];
    } else {
      v.direction = candidate;
      for (std::size_t i = 1; i < col.size(); ++i) {
        const double d = col[i] - col[i - 1];
        const bool ok = candidate == Direction::Increasing ? d > kMonoTol : d < -kMonoTol;
        if (!ok) {
          v.direction = Direction::NonMonotone;
          v.witness_t = tab.t_grid[i];
          break;
        }
      }
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Verdict> monotonicity_verdict_on_arc(const TrajectoryTable& tab, const std::vector<int>& columns,
                                                 double lo, double hi) {
  if (tab.t_grid.size() < 3) throw DomainError("monotonicity_verdict needs at least 3 grid points");
  if (!(hi > lo) || hi - lo > kTwoPi) throw DomainError("arc must satisfy lo < hi <= lo + 2pi");
  auto inside = [&](double a) {
    const double x = reduce_angle(a, lo);
    return x > lo && x < hi;
  };
  std::vector<Verdict> out;
  for (int k : columns) {
    if (k < 0 || k >= tab.n_zeros) throw IndexMismatch("zero index out of range");
    const auto col = tab.column(k);
    Verdict v;
    v.zero_index = k;
    int ups = 0;
    int downs = 0;
    std::optional<double> first_flat;
    std::optional<double> first_up;
    std::optional<double> first_down;
    for (std::size_t i = 1; i < col.size(); ++i) {
      if (!inside(col[i - 1]) || !inside(col[i])) continue;
      const double d = col[i] - col[i - 1];
      if (d > kMonoTol) {
        ++ups;
        if (!first_up) first_up = tab.t_grid[i];
      } else if (d < -kMonoTol) {
        ++downs;
        if (!first_down) first_down = tab.t_grid[i];
      } else if (!first_flat) {
        first_flat = tab.t_grid[i];
      }
    }
    if (first_flat || (ups == 0 && downs == 0)) {
      v.witness_t = first_flat;
    } else if (downs == 0) {
      v.direction = Direction::Increasing;
    } else if (ups == 0) {
      v.direction = Direction::Decreasing;
    } else {
      v.witness_t = std::max(*first_up, *first_down);
    }
    out.push_back(v);
  }
  return out;
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json item{{"zero_index", v.zero_index}, {"verdict", std::string(to_string(v.direction))}};
    item["witness_t"] = v.witness_t ? nlohmann::json(*v.witness_t) : nlohmann::json(nullptr);
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

bool interlacing_check(const ZeroSet& za, const ZeroSet& zb, double sep_tol) {
  for (double a : za.args) {
    for (double b : zb.args) {
      if (std::abs(wrap_pi(a - b)) <= sep_tol) throw CollisionError("zero sets share a point within sep_tol");
    }
  }
  // Number of points strictly inside the counterclockwise arc from start to end.
  auto count_inside = [](const std::vector<double>& pts, double start, double end) {
    double len = reduce_angle(end - start, 0.0);
    if (len == 0.0) len = kTwoPi;
    int count = 0;
    for (double p : pts) {
      const double rel = reduce_angle(p - start, 0.0);
      if (rel > 0.0 && rel < len) ++count;
    }
    return count;
  };
  auto arcs_ok = [&](const std::vector<double>& ring, const std::vector<double>& pts, bool at_most_one) {
    const std::size_t m = ring.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int c = count_inside(pts, ring[k], ring[(k + 1) % m]);
      if (at_most_one ? c > 1 : c < 1) return false;
    }
    return true;
  };
  return arcs_ok(zb.args, za.args, true) && arcs_ok(za.args, zb.args, false);
}

Comparison comparison(const WeightFamily& f1, const WeightFamily& f2, int n, int n2, const ComparisonAnchor& anchor,
                      const ZeroOptions& options) {
  if (n != n2) throw IndexMismatch("comparison needs equal degrees");
  ZeroOptions opts = options;
  BRule rule;
  if (const auto* shared = std::get_if<SharedZeroAt>(&anchor)) {
    opts.theta0 = std::arg(shared->xi);
    rule = FixedZero{shared->xi};
  } else {
    const double b = std::get<SymmetricB>(anchor).b;
    if (b != 1.0 && b != -1.0) throw ConfigError("symmetric comparison needs b = +1 or -1");
    if (!f1.is_symmetric() || !f2.is_symmetric()) throw ConfigError("symmetric comparison needs symmetric weights");
    opts.theta0 = -kPi;
    rule = ConstantB{Complex{b, 0.0}};
  }
  auto sorted_args = [&](const WeightFamily& f) {
    const ZeroSet zs = zeros(popuc_at(f, f.sweep_value(), n, rule), opts);
    std::vector<double> a = zs.args;
    std::sort(a.rbegin(), a.rend());
    return a;
  };
  Comparison out;
  out.args1 = sorted_args(f1);
  out.args2 = sorted_args(f2);
  for (int j = 0; j < n; ++j) out.first_below.push_back(out.args1[j] < out.args2[j] - kMonoTol);
  return out;
}

}  // namespace popuc
