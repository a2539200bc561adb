#include "popuc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "popuc/angles.hpp"
#include "popuc/errors.hpp"

namespace popuc {

namespace {

struct Params {
  double r;
  double phi;
  double s;
  double t;
};

bool is_known_sweep(FamilyKind kind, std::string_view name) {
  if (name == "none") return true;
  switch (kind) {
    case FamilyKind::BernsteinSzego:
      return name == "r" || name == "phi";
    case FamilyKind::SingleMoment:
      return name == "r";
    case FamilyKind::FisherHartwig:
      return name == "r" || name == "s";
    case FamilyKind::Mixture:
    case FamilyKind::Custom:
      return name == "t";
    case FamilyKind::Lebesgue:
      return false;
  }
  return false;
}

// pi - theta' and 2 - 2cos(theta) for theta' the [0, 2pi) representative.
// Both come from fmod(theta, 2pi) without re-adding 2pi, so a node at -1e-20
// keeps its distance to the singularity and lands on the correct side of
// the jump.
struct FhAngle {
  double jump;
  double base;
};

FhAngle fh_angle(double theta) {
  const double th = std::fmod(theta, kTwoPi);
  const double jump = th < 0.0 ? -kPi - th : kPi - th;
  const double half = std::sin(0.5 * th);
  return {jump, 4.0 * half * half};
}

}  // namespace

struct WeightAccess {
  static Params params_at(const WeightFamily& f, double t) {
    Params p{f.r_, f.phi_, f.s_, f.t_};
    const std::string& name = f.sweep_;
    if (name == "r") {
      p.r = t;
    } else if (name == "phi") {
      p.phi = t;
    } else if (name == "s") {
      p.s = t;
    } else if (name == "t") {
      p.t = t;
    }
    switch (f.kind_) {
      case FamilyKind::BernsteinSzego:
      case FamilyKind::SingleMoment:
        if (!(p.r > 0.0 && p.r < 1.0)) throw DomainError("parameter r must lie in (0,1)");
        break;
      case FamilyKind::FisherHartwig:
        if (!(p.r > -0.5)) throw DomainError("Fisher-Hartwig parameter r must exceed -1/2");
        if (!std::isfinite(p.s)) throw DomainError("Fisher-Hartwig parameter s must be finite");
        break;
      case FamilyKind::Mixture:
        if (!(p.t >= 0.0 && p.t <= 1.0)) throw DomainError("mixture parameter t must lie in [0,1]");
        break;
      default:
        break;
    }
    return p;
  }

  static double weight(const WeightFamily& f, double theta, double t) {
    const Params p = params_at(f, t);
    switch (f.kind_) {
      case FamilyKind::Lebesgue:
        return 1.0;
      case FamilyKind::BernsteinSzego:
        return (1.0 - p.r * p.r) / (1.0 + p.r * p.r - 2.0 * p.r * std::cos(theta - p.phi));
      case FamilyKind::SingleMoment:
        return 1.0 - p.r * std::cos(theta);
      case FamilyKind::FisherHartwig: {
        const FhAngle a = fh_angle(theta);
        if (a.base == 0.0 && p.r < 0.0) throw DomainError("Fisher-Hartwig weight is singular at theta = 0");
        return std::exp(a.jump * p.s) * (p.r == 0.0 ? 1.0 : std::pow(a.base, p.r));
      }
      case FamilyKind::Mixture:
        return (1.0 - p.t) * weight(*f.w1_, theta, f.w1_->sweep_value()) +
               p.t * weight(*f.w2_, theta, f.w2_->sweep_value());
      case FamilyKind::Custom:
        return f.custom_weight_(theta, p.t);
    }
    return 0.0;
  }

  static double dt(const WeightFamily& f, double theta, double t) {
    if (!f.depends_on_t()) return 0.0;
    const Params p = params_at(f, t);
    switch (f.kind_) {
      case FamilyKind::Lebesgue:
        return 0.0;
      case FamilyKind::BernsteinSzego: {
        const double c = std::cos(theta - p.phi);
        const double den = 1.0 + p.r * p.r - 2.0 * p.r * c;
        if (f.sweep_ == "r") {
          return (-2.0 * p.r * den - (1.0 - p.r * p.r) * (2.0 * p.r - 2.0 * c)) / (den * den);
        }
        return 2.0 * p.r * (1.0 - p.r * p.r) * std::sin(theta - p.phi) / (den * den);
      }
      case FamilyKind::SingleMoment:
        return -std::cos(theta);
      case FamilyKind::FisherHartwig:
        return log_derivative(f, theta, t) * weight(f, theta, t);
      case FamilyKind::Mixture:
        return weight(*f.w2_, theta, f.w2_->sweep_value()) - weight(*f.w1_, theta, f.w1_->sweep_value());
      case FamilyKind::Custom:
        if (f.custom_dt_) return f.custom_dt_(theta, p.t);
        return weight_dt_fd(f, theta, t);
    }
    return 0.0;
  }

  static double log_derivative(const WeightFamily& f, double theta, double t) {
    if (!f.depends_on_t()) return 0.0;
    if (f.kind_ == FamilyKind::FisherHartwig) {
      params_at(f, t);
      const FhAngle a = fh_angle(theta);
      if (f.sweep_ == "s") return a.jump;
      if (a.base == 0.0) throw DomainError("log-derivative in r undefined at theta = 0");
      return std::log(a.base);
    }
    if (f.kind_ == FamilyKind::SingleMoment) {
      const Params p = params_at(f, t);
      return -std::cos(theta) / (1.0 - p.r * std::cos(theta));
    }
    const double w = weight(f, theta, t);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("weight vanishes or is singular at theta = " + std::to_string(theta));
    }
    return dt(f, theta, t) / w;
  }
};

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::BernsteinSzego:
      return "bernstein-szego";
    case FamilyKind::SingleMoment:
      return "single-moment";
    case FamilyKind::FisherHartwig:
      return "fisher-hartwig";
    case FamilyKind::Mixture:
      return "mixture";
    case FamilyKind::Lebesgue:
      return "lebesgue";
    case FamilyKind::Custom:
      return "custom";
  }
  return "unknown";
}

WeightFamily WeightFamily::lebesgue(double theta0) {
  WeightFamily f;
  f.kind_ = FamilyKind::Lebesgue;
  f.theta0_ = theta0;
  f.sweep_ = "none";
  return f;
}

WeightFamily WeightFamily::bernstein_szego(double r, double phi, std::string sweep_param, double theta0) {
  WeightFamily f;
  f.kind_ = FamilyKind::BernsteinSzego;
  f.r_ = r;
  f.phi_ = phi;
  f.sweep_ = std::move(sweep_param);
  f.theta0_ = theta0;
  f.validate();
  return f;
}

WeightFamily WeightFamily::single_moment(double r, std::string sweep_param, double theta0) {
  WeightFamily f;
  f.kind_ = FamilyKind::SingleMoment;
  f.r_ = r;
  f.sweep_ = std::move(sweep_param);
  f.theta0_ = theta0;
  f.validate();
  return f;
}

WeightFamily WeightFamily::fisher_hartwig(double r, double s, std::string sweep_param, double theta0) {
  WeightFamily f;
  f.kind_ = FamilyKind::FisherHartwig;
  f.r_ = r;
  f.s_ = s;
  f.sweep_ = std::move(sweep_param);
  f.theta0_ = theta0;
  f.validate();
  return f;
}

WeightFamily WeightFamily::mixture(WeightFamily w1, WeightFamily w2, double t, std::string sweep_param,
                                   double theta0) {
  WeightFamily f;
  f.kind_ = FamilyKind::Mixture;
  f.w1_ = std::make_shared<const WeightFamily>(std::move(w1));
  f.w2_ = std::make_shared<const WeightFamily>(std::move(w2));
  f.t_ = t;
  f.sweep_ = std::move(sweep_param);
  f.theta0_ = theta0;
  f.validate();
  return f;
}

WeightFamily WeightFamily::custom(Evaluator weight, Evaluator dt, double t, double theta0,
                                  std::vector<double> singular_points) {
  if (!weight) throw ConfigError("custom weight requires an evaluator");
  WeightFamily f;
  f.kind_ = FamilyKind::Custom;
  f.custom_weight_ = std::move(weight);
  f.custom_dt_ = std::move(dt);
  f.t_ = t;
  f.sweep_ = "t";
  f.theta0_ = theta0;
  f.custom_singular_ = std::move(singular_points);
  return f;
}

void WeightFamily::validate() const {
  if (!is_known_sweep(kind_, sweep_)) {
    throw ConfigError("sweep parameter '" + sweep_ + "' is not valid for " + std::string(to_string(kind_)));
  }
  if (!std::isfinite(theta0_)) throw DomainError("theta0 must be finite");
  WeightAccess::params_at(*this, sweep_value());
}

double WeightFamily::param(std::string_view name) const {
  if (name == "r") return r_;
  if (name == "phi") return phi_;
  if (name == "s") return s_;
  if (name == "t") return t_;
  throw ConfigError("unknown parameter '" + std::string(name) + "'");
}

double WeightFamily::sweep_value() const { return sweep_ == "none" ? 0.0 : param(sweep_); }

WeightFamily WeightFamily::with_theta0(double theta0) const {
  WeightFamily f = *this;
  f.theta0_ = theta0;
  return f;
}

WeightFamily WeightFamily::with_sweep_param(std::string name) const {
  WeightFamily f = *this;
  f.sweep_ = std::move(name);
  f.validate();
  return f;
}

WeightFamily WeightFamily::at(double t) const {
  WeightFamily f = *this;
  if (sweep_ == "r") f.r_ = t;
  if (sweep_ == "phi") f.phi_ = t;
  if (sweep_ == "s") f.s_ = t;
  if (sweep_ == "t") f.t_ = t;
  WeightAccess::params_at(f, t);
  return f;
}

const WeightFamily& WeightFamily::component(int index) const {
  if (kind_ != FamilyKind::Mixture) throw UnsupportedFamily("only mixtures have components");
  if (index == 0) return *w1_;
  if (index == 1) return *w2_;
  throw DomainError("mixture component index must be 0 or 1");
}

bool WeightFamily::is_symmetric() const {
  switch (kind_) {
    case FamilyKind::Lebesgue:
    case FamilyKind::SingleMoment:
      return true;
    case FamilyKind::BernsteinSzego: {
      const double p = reduce_angle(phi_, 0.0);
      return p == 0.0 || p == kPi;
    }
    case FamilyKind::FisherHartwig:
      return s_ == 0.0;
    case FamilyKind::Mixture:
      return w1_->is_symmetric() && w2_->is_symmetric();
    case FamilyKind::Custom:
      return false;
  }
  return false;
}

std::vector<double> WeightFamily::singular_points() const {
  switch (kind_) {
    case FamilyKind::FisherHartwig:
      return {0.0};
    case FamilyKind::Mixture: {
      std::set<double> pts;
      for (double p : w1_->singular_points()) pts.insert(p);
      for (double p : w2_->singular_points()) pts.insert(p);
      return {pts.begin(), pts.end()};
    }
    case FamilyKind::Custom: {
      std::vector<double> pts;
      for (double p : custom_singular_) pts.push_back(reduce_angle(p, 0.0));
      std::sort(pts.begin(), pts.end());
      return pts;
    }
    default:
      return {};
  }
}

double WeightFamily::singular_grading() const {
  switch (kind_) {
    case FamilyKind::FisherHartwig:
      if (r_ < 0.0) return 1.0 / (1.0 + 2.0 * r_);
      if (r_ != std::floor(r_)) return 2.0;
      return 1.0;
    case FamilyKind::Mixture:
      return std::max(w1_->singular_grading(), w2_->singular_grading());
    default:
      return 1.0;
  }
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw ConfigError("unknown field '" + it.key() + "' in " + std::string(where));
    }
  }
}

double number_field(const json& obj, const char* key, std::string_view where, std::optional<double> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError("missing field '" + std::string(key) + "' in " + std::string(where));
  }
  if (!obj.at(key).is_number()) throw ConfigError("field '" + std::string(key) + "' must be a number");
  return obj.at(key).get<double>();
}

WeightFamily family_from_json(const json& j) {
  reject_unknown(j, {"kind", "params", "theta0", "sweep_param"}, "weight family");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError("weight family needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  const double theta0 = number_field(j, "theta0", "weight family", 0.0);
  auto sweep = [&](const char* fallback) -> std::string {
    if (!j.contains("sweep_param")) return fallback;
    if (!j.at("sweep_param").is_string()) throw ConfigError("'sweep_param' must be a string");
    return j.at("sweep_param").get<std::string>();
  };
  if (kind == "lebesgue") {
    reject_unknown(params, {}, "lebesgue params");
    const std::string sp = sweep("none");
    if (sp != "none") throw ConfigError("lebesgue has no sweep parameter");
    return WeightFamily::lebesgue(theta0);
  }
  if (kind == "bernstein-szego") {
    reject_unknown(params, {"r", "phi"}, "bernstein-szego params");
    return WeightFamily::bernstein_szego(number_field(params, "r", "params"),
                                         number_field(params, "phi", "params", 0.0), sweep("r"), theta0);
  }
  if (kind == "single-moment") {
    reject_unknown(params, {"r"}, "single-moment params");
    return WeightFamily::single_moment(number_field(params, "r", "params"), sweep("r"), theta0);
  }
  if (kind == "fisher-hartwig") {
    reject_unknown(params, {"r", "s"}, "fisher-hartwig params");
    return WeightFamily::fisher_hartwig(number_field(params, "r", "params"),
                                        number_field(params, "s", "params", 0.0), sweep("s"), theta0);
  }
  if (kind == "mixture") {
    reject_unknown(params, {"w1", "w2", "t"}, "mixture params");
    if (!params.contains("w1") || !params.contains("w2")) throw ConfigError("mixture needs 'w1' and 'w2'");
    return WeightFamily::mixture(family_from_json(params.at("w1")), family_from_json(params.at("w2")),
                                 number_field(params, "t", "params", 0.5), sweep("t"), theta0);
  }
  throw ConfigError("unknown weight family kind '" + kind + "'");
}

json family_to_json(const WeightFamily& f) {
  json params = json::object();
  switch (f.kind()) {
    case FamilyKind::Lebesgue:
      break;
    case FamilyKind::BernsteinSzego:
      params["r"] = f.param("r");
      params["phi"] = f.param("phi");
      break;
    case FamilyKind::SingleMoment:
      params["r"] = f.param("r");
      break;
    case FamilyKind::FisherHartwig:
      params["r"] = f.param("r");
      params["s"] = f.param("s");
      break;
    case FamilyKind::Mixture:
      params["w1"] = family_to_json(f.component(0));
      params["w2"] = family_to_json(f.component(1));
      params["t"] = f.param("t");
      break;
    case FamilyKind::Custom:
      throw ConfigError("custom weights have no JSON form");
  }
  return json{{"kind", std::string(to_string(f.kind()))},
              {"params", params},
              {"theta0", f.theta0()},
              {"sweep_param", f.sweep_param()}};
}

}  // namespace

WeightFamily WeightFamily::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid weight family JSON: ") + e.what());
  }
  return family_from_json(j);
}

std::string WeightFamily::to_json() const { return family_to_json(*this).dump(); }

// ------------------------------------------------------------ evaluation

double eval_weight(const WeightFamily& f, double theta, double t) { return WeightAccess::weight(f, theta, t); }

double weight_dt(const WeightFamily& f, double theta, double t) { return WeightAccess::dt(f, theta, t); }

double weight_dt_fd(const WeightFamily& f, double theta, double t) {
  if (!f.depends_on_t()) return 0.0;
  const double h = std::max(1e-6, 1e-8 * std::abs(t));
  return (WeightAccess::weight(f, theta, t + h) - WeightAccess::weight(f, theta, t - h)) / (2.0 * h);
}

double weight_log_derivative(const WeightFamily& f, double theta, double t) {
  return WeightAccess::log_derivative(f, theta, t);
}

// --------------------------------------------------------------- moments

MomentSequence::MomentSequence(std::vector<Complex> nonnegative) : c_(std::move(nonnegative)) {
  if (c_.empty()) throw DomainError("a moment sequence needs at least c_0");
}

Complex MomentSequence::operator()(int j) const {
  const int a = j < 0 ? -j : j;
  if (a > jmax()) throw DomainError("moment index " + std::to_string(j) + " beyond jmax");
  return j < 0 ? std::conj(c_[a]) : c_[a];
}

double MomentSequence::toeplitz_det(int k) const {
  if (k < 0 || k > jmax()) throw DomainError("Toeplitz order out of range");
  Eigen::MatrixXcd m(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) m(i, j) = (*this)(i - j);
  }
  return m.partialPivLu().determinant().real();
}

bool MomentSequence::positive_definite(int kmax) const {
  for (int k = 0; k <= kmax; ++k) {
    if (!(toeplitz_det(k) > 0.0)) return false;
  }
  return true;
}

MomentSequence MomentSequence::scaled(double factor) const {
  std::vector<Complex> c = c_;
  for (auto& v : c) v *= factor;
  return MomentSequence(std::move(c));
}

std::vector<Segment> integration_segments(const WeightFamily& f) {
  const double lo = f.theta0();
  const double hi = lo + kTwoPi;
  std::vector<double> singular;
  for (double p : f.singular_points()) singular.push_back(reduce_angle(p, lo));
  std::sort(singular.begin(), singular.end());
  singular.erase(std::unique(singular.begin(), singular.end()), singular.end());
  const bool wraps = !singular.empty() && singular.front() == lo;

  std::vector<double> cuts{lo};
  for (double p : singular) {
    if (p > lo) cuts.push_back(p);
  }
  cuts.push_back(hi);

  const double grading = f.singular_grading();
  auto is_singular = [&](double x) {
    if (x == hi) return wraps;
    return std::find(singular.begin(), singular.end(), x) != singular.end();
  };
  // Integrands are 2pi-periodic, so a graded segment may be shifted to put
  // its singular end at the representative nearest 0 (exactly 0 for a
  // singularity at theta = 0 mod 2pi); the substitution then resolves
  // distances far below the spacing of doubles near 2pi.
  auto shifted = [](Segment seg) {
    const double anchor = seg.grading_at_a != 1.0 ? seg.a : seg.b;
    const double k = std::round(anchor / kTwoPi);
    if (k != 0.0 && (seg.grading_at_a != 1.0 || seg.grading_at_b != 1.0)) {
      seg.a -= k * kTwoPi;
      seg.b -= k * kTwoPi;
    }
    return seg;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const bool sa = is_singular(a) && grading != 1.0;
    const bool sb = is_singular(b) && grading != 1.0;
    if (sa && sb) {
      const double mid = 0.5 * (a + b);
      segments.push_back(shifted({a, mid, grading, 1.0}));
      segments.push_back(shifted({mid, b, 1.0, grading}));
    } else {
      segments.push_back(shifted({a, b, sa ? grading : 1.0, sb ? grading : 1.0}));
    }
  }
  return segments;
}

std::vector<Complex> integrate_against(const WeightFamily& f, double t, const VectorIntegrand& integrand,
                                       std::size_t dim, double tol) {
  const WeightFamily resolved = f.depends_on_t() ? f.at(t) : f;
  const auto segments = integration_segments(resolved);
  const VectorIntegrand weighted = [&](double theta, std::span<Complex> out) {
    integrand(theta, out);
    const double w = eval_weight(f, theta, t) / kTwoPi;
    for (auto& v : out) v *= w;
  };
  QuadratureOptions options;
  options.abs_tol = tol;
  return integrate(weighted, dim, segments, options);
}

Complex integrate_against(const WeightFamily& f, double t, const std::function<Complex(double)>& integrand,
                          double tol) {
  const VectorIntegrand wrapped = [&integrand](double theta, std::span<Complex> out) { out[0] = integrand(theta); };
  return integrate_against(f, t, wrapped, 1, tol)[0];
}

MomentSequence moments(const WeightFamily& f, double t, int jmax, double tol) {
  if (jmax < 0) throw DomainError("jmax must be nonnegative");
  if (!(tol > 0.0)) throw DomainError("moment tolerance must be positive");
  const auto dim = static_cast<std::size_t>(jmax + 1);
  const VectorIntegrand exps = [dim](double theta, std::span<Complex> out) {
    // e^{-ij theta} by repeated multiplication keeps the cost at one sincos.
    const Complex step = std::polar(1.0, -theta);
    Complex v{1.0, 0.0};
    for (std::size_t j = 0; j < dim; ++j) {
      out[j] = v;
      v *= step;
    }
  };
  auto c = integrate_against(f, t, exps, dim, tol);
  c[0] = Complex(c[0].real(), 0.0);
  return MomentSequence(std::move(c));
}

// --------------------------------------------------------------- profile

std::string_view to_string(ProfileShape shape) noexcept {
  switch (shape) {
    case ProfileShape::StrictlyIncreasing:
      return "strictly-increasing";
    case ProfileShape::StrictlyDecreasing:
      return "strictly-decreasing";
    case ProfileShape::VShaped:
      return "v-shaped";
    case ProfileShape::CapShaped:
      return "cap-shaped";
    case ProfileShape::Other:
      return "other";
  }
  return "other";
}

MarkovProfile markov_profile(const WeightFamily& f, double t, std::span<const double> grid) {
  if (grid.size() < 8) throw DomainError("markov_profile needs at least 8 grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("profile grid must be strictly increasing");
    if (!(grid[i] > f.theta0() && grid[i] < f.theta0() + kTwoPi)) {
      throw DomainError("profile grid must lie inside (theta0, theta0 + 2pi)");
    }
  }
  MarkovProfile profile;
  profile.values.reserve(grid.size());
  for (double theta : grid) {
    const double w = eval_weight(f, theta, t);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("weight vanishes at grid point theta = " + std::to_string(theta));
    }
    profile.values.push_back(weight_log_derivative(f, theta, t));
  }

  constexpr double kTie = 1e-12;
  std::vector<int> signs;
  for (std::size_t i = 0; i + 1 < profile.values.size(); ++i) {
    const double d = profile.values[i + 1] - profile.values[i];
    signs.push_back(d > kTie ? 1 : (d < -kTie ? -1 : 0));
  }
  const bool all_up = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
  const bool all_down = std::all_of(signs.begin(), signs.end(), [](int s) { return s == -1; });
  if (all_up) {
    profile.shape = ProfileShape::StrictlyIncreasing;
    return profile;
  }
  if (all_down) {
    profile.shape = ProfileShape::StrictlyDecreasing;
    return profile;
  }
  // One monotone run, an optional single tie at the turn, then the opposite run.
  auto turn_shape = [&](int first, int second) -> std::optional<double> {
    std::size_t i = 0;
    while (i < signs.size() && signs[i] == first) ++i;
    if (i == 0) return std::nullopt;
    const std::size_t turn = i;
    bool tie = false;
    if (i < signs.size() && signs[i] == 0) {
      tie = true;
      ++i;
    }
    const std::size_t second_start = i;
    while (i < signs.size() && signs[i] == second) ++i;
    if (i != signs.size() || second_start == signs.size()) return std::nullopt;
    return tie ? 0.5 * (grid[turn] + grid[turn + 1]) : grid[turn];
  };
  if (auto at = turn_shape(-1, 1)) {
    profile.shape = ProfileShape::VShaped;
    profile.turn_theta = *at;
  } else if (auto cap = turn_shape(1, -1)) {
    profile.shape = ProfileShape::CapShaped;
    profile.turn_theta = *cap;
  }
  return profile;
}

}  // namespace popuc
