#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "popuc/measures.hpp"
#include "popuc/trajectory.hpp"

namespace popuc::cli {

struct TRange {
  double start = 0.0;
  double end = 1.0;
  int steps = 11;

  std::vector<double> grid() const;
};

struct RunConfig {
  std::string command;
  std::string family;   // canonical descriptor JSON
  std::string family2;  // second family for `compare`
  int degree = 0;
  std::string b_spec = "const:1,0";
  std::optional<double> t;
  std::optional<TRange> t_range;
  std::string anchor = "shared-zero:1,0";
  std::string figure;
  std::string suite = "all";
  double circle_tol = 1e-8;
  double sep_tol = 1e-9;
  double match_gap = 0.5;
  double quad_tol = 1e-13;
  std::string out;
  std::string svg;

  nlohmann::json to_json() const;
  /// Sorted-key, two-space JSON with a trailing newline.
  std::string canonical() const;
  static RunConfig from_json(const nlohmann::json& j);

  ZeroOptions zero_options(double theta0 = 0.0) const;
};

/// Accepts descriptor JSON, a path to a JSON file, or a bare kind name
/// (defaults: bernstein-szego r=0.5, single-moment r=0.5,
/// fisher-hartwig r=1 s=0, lebesgue).
WeightFamily resolve_family(const std::string& spec);

/// const:<re>,<im> | fixed-zero:<re>,<im> | unimodular-path:exp(i*t)
BRule parse_b_spec(const std::string& spec);

/// t-range "start:end:steps".
TRange parse_t_range(const std::string& text);

}  // namespace popuc::cli
