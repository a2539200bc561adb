#include "popuc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "popuc/errors.hpp"

namespace popuc {

namespace {

GaussLegendreRule build_rule(int m) {
  GaussLegendreRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = m * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= m; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    dp = m * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[m - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

struct Panel {
  std::size_t segment;
  double u0;
  double u1;
  std::vector<Complex> estimate;  // fine (two-halves) estimate
  std::vector<Complex> left;      // coarse estimates of the two halves
  std::vector<Complex> right;
  double error;
};

struct PanelOrder {
  bool operator()(const std::unique_ptr<Panel>& x, const std::unique_ptr<Panel>& y) const {
    return x->error < y->error;
  }
};

class Integrator {
 public:
  Integrator(const VectorIntegrand& f, std::size_t dim, std::span<const Segment> segments,
             const QuadratureOptions& options)
      : f_(f), dim_(dim), segments_(segments), rule_(gauss_legendre(options.order)),
        value_(dim), scratch_(dim) {}

  // Integral over u in [u0,u1] of the (substituted) integrand of segment s.
  std::vector<Complex> rule_on(std::size_t s, double u0, double u1) {
    const Segment& seg = segments_[s];
    std::vector<Complex> acc(dim_, Complex{0.0, 0.0});
    const double mid = 0.5 * (u0 + u1);
    const double half = 0.5 * (u1 - u0);
    const double length = seg.b - seg.a;
    for (std::size_t k = 0; k < rule_.nodes.size(); ++k) {
      const double u = mid + half * rule_.nodes[k];
      double theta;
      double jac;
      if (seg.grading_at_a != 1.0) {
        const double q = seg.grading_at_a;
        theta = seg.a + length * std::pow(u, q);
        jac = length * q * std::pow(u, q - 1.0);
      } else if (seg.grading_at_b != 1.0) {
        const double q = seg.grading_at_b;
        theta = seg.b - length * std::pow(u, q);
        jac = length * q * std::pow(u, q - 1.0);
      } else {
        theta = seg.a + length * u;
        jac = length;
      }
      std::fill(scratch_.begin(), scratch_.end(), Complex{0.0, 0.0});
      f_(theta, scratch_);
      const double w = half * rule_.weights[k] * jac;
      for (std::size_t d = 0; d < dim_; ++d) acc[d] += w * scratch_[d];
    }
    return acc;
  }

  std::unique_ptr<Panel> make_panel(std::size_t s, double u0, double u1, std::vector<Complex> coarse) {
    auto panel = std::make_unique<Panel>();
    panel->segment = s;
    panel->u0 = u0;
    panel->u1 = u1;
    const double mid = 0.5 * (u0 + u1);
    panel->left = rule_on(s, u0, mid);
    panel->right = rule_on(s, mid, u1);
    panel->estimate.resize(dim_);
    double err = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      panel->estimate[d] = panel->left[d] + panel->right[d];
      err = std::max(err, std::abs(panel->estimate[d] - coarse[d]));
    }
    panel->error = err;
    return panel;
  }

  std::vector<Complex> run(const QuadratureOptions& options) {
    std::vector<std::unique_ptr<Panel>> heap;
    const PanelOrder order;
    constexpr int kInitialPanels = 4;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!(segments_[s].b > segments_[s].a)) continue;
      for (int i = 0; i < kInitialPanels; ++i) {
        const double u0 = static_cast<double>(i) / kInitialPanels;
        const double u1 = static_cast<double>(i + 1) / kInitialPanels;
        heap.push_back(make_panel(s, u0, u1, rule_on(s, u0, u1)));
      }
    }
    std::make_heap(heap.begin(), heap.end(), order);
    auto exact_total = [&heap] {
      double total = 0.0;
      for (const auto& p : heap) total += p->error;
      return total;
    };
    double total_error = exact_total();
    while (!heap.empty()) {
      if (total_error <= options.abs_tol) {
        total_error = exact_total();  // drop accumulated rounding before accepting
        if (total_error <= options.abs_tol) break;
      }
      if (static_cast<int>(heap.size()) + 1 > options.max_panels) {
        throw QuadratureError("adaptive quadrature exhausted " + std::to_string(options.max_panels) +
                              " panels with error estimate " + std::to_string(total_error));
      }
      std::pop_heap(heap.begin(), heap.end(), order);
      auto worst = std::move(heap.back());
      heap.pop_back();
      total_error -= worst->error;
      const double mid = 0.5 * (worst->u0 + worst->u1);
      auto left = make_panel(worst->segment, worst->u0, mid, std::move(worst->left));
      auto right = make_panel(worst->segment, mid, worst->u1, std::move(worst->right));
      total_error += left->error + right->error;
      heap.push_back(std::move(left));
      std::push_heap(heap.begin(), heap.end(), order);
      heap.push_back(std::move(right));
      std::push_heap(heap.begin(), heap.end(), order);
    }
    for (const auto& p : heap) {
      for (std::size_t d = 0; d < dim_; ++d) value_[d] += p->estimate[d];
    }
    return value_;
  }

 private:
  const VectorIntegrand& f_;
  std::size_t dim_;
  std::span<const Segment> segments_;
  const GaussLegendreRule& rule_;
  std::vector<Complex> value_;
  std::vector<Complex> scratch_;
};

}  // namespace

const GaussLegendreRule& gauss_legendre(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(m));
  return *slot;
}

std::vector<Complex> integrate(const VectorIntegrand& f, std::size_t dim,
                               std::span<const Segment> segments, const QuadratureOptions& options) {
  if (!(options.abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  Integrator integrator(f, dim, segments, options);
  return integrator.run(options);
}

Complex integrate_scalar(const std::function<Complex(double)>& f, double a, double b,
                         const QuadratureOptions& options) {
  const Segment seg{a, b};
  const VectorIntegrand wrapped = [&f](double theta, std::span<Complex> out) { out[0] = f(theta); };
  return integrate(wrapped, 1, std::span<const Segment>(&seg, 1), options)[0];
}

}  // namespace popuc
