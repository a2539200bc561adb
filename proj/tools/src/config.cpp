#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "popuc/errors.hpp"

namespace popuc::cli {

using nlohmann::json;

std::vector<double> TRange::grid() const {
  if (steps < 2) throw ConfigError("t-range needs at least 2 steps");
  if (!(end > start)) throw ConfigError("t-range end must exceed start");
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = start + (end - start) * i / (steps - 1);
  g.back() = end;
  return g;
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  j["family"] = family.empty() ? json(nullptr) : json::parse(family);
  j["family2"] = family2.empty() ? json(nullptr) : json::parse(family2);
  j["degree"] = degree;
  j["b_spec"] = b_spec;
  j["t"] = t ? json(*t) : json(nullptr);
  j["t_range"] = t_range ? json{{"start", t_range->start}, {"end", t_range->end}, {"steps", t_range->steps}}
                         : json(nullptr);
  j["anchor"] = anchor;
  j["figure"] = figure;
  j["suite"] = suite;
  j["tolerances"] = {{"circle_tol", circle_tol}, {"sep_tol", sep_tol}, {"match_gap", match_gap}, {"quad_tol", quad_tol}};
  j["out"] = out;
  j["svg"] = svg;
  return j;
}

std::string RunConfig::canonical() const { return to_json().dump(2) + "\n"; }

namespace {

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"command", "family", "family2", "degree", "b_spec", "t",
                                              "t_range", "anchor",  "figure", "suite",  "tolerances",
                                              "out",     "svg"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw ConfigError("unknown config field '" + it.key() + "'");
    }
  }
  RunConfig c;
  c.command = get_or<std::string>(j, "command", "");
  if (j.contains("family") && !j.at("family").is_null()) {
    c.family = resolve_family(j.at("family").is_string() ? j.at("family").get<std::string>() : j.at("family").dump())
                   .to_json();
  }
  if (j.contains("family2") && !j.at("family2").is_null()) {
    c.family2 =
        resolve_family(j.at("family2").is_string() ? j.at("family2").get<std::string>() : j.at("family2").dump())
            .to_json();
  }
  c.degree = get_or<int>(j, "degree", 0);
  c.b_spec = get_or<std::string>(j, "b_spec", c.b_spec);
  if (j.contains("t") && !j.at("t").is_null()) c.t = get_or<double>(j, "t", 0.0);
  if (j.contains("t_range") && !j.at("t_range").is_null()) {
    const json& r = j.at("t_range");
    c.t_range = TRange{get_or<double>(r, "start", 0.0), get_or<double>(r, "end", 1.0), get_or<int>(r, "steps", 11)};
  }
  c.anchor = get_or<std::string>(j, "anchor", c.anchor);
  c.figure = get_or<std::string>(j, "figure", "");
  c.suite = get_or<std::string>(j, "suite", c.suite);
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    c.circle_tol = get_or<double>(t, "circle_tol", c.circle_tol);
    c.sep_tol = get_or<double>(t, "sep_tol", c.sep_tol);
    c.match_gap = get_or<double>(t, "match_gap", c.match_gap);
    c.quad_tol = get_or<double>(t, "quad_tol", c.quad_tol);
  }
  c.out = get_or<std::string>(j, "out", "");
  c.svg = get_or<std::string>(j, "svg", "");
  return c;
}

ZeroOptions RunConfig::zero_options(double theta0) const {
  ZeroOptions o;
  o.theta0 = theta0;
  o.circle_tol = circle_tol;
  o.sep_tol = sep_tol;
  return o;
}

WeightFamily resolve_family(const std::string& spec) {
  if (spec == "lebesgue") return WeightFamily::lebesgue();
  if (spec == "bernstein-szego") return WeightFamily::bernstein_szego(0.5, 0.0);
  if (spec == "single-moment") return WeightFamily::single_moment(0.5);
  if (spec == "fisher-hartwig") return WeightFamily::fisher_hartwig(1.0, 0.0);
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return WeightFamily::from_json(spec);
  std::ifstream in(spec);
  if (!in) throw ConfigError("family '" + spec + "' is neither a kind name, JSON, nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return WeightFamily::from_json(buf.str());
}

namespace {

Complex parse_pair(const std::string& text, const std::string& spec) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string re = text.substr(0, comma);
    const std::string im = text.substr(comma + 1);
    const double x = std::stod(re, &used1);
    const double y = std::stod(im, &used2);
    if (used1 != re.size() || used2 != im.size()) throw std::invalid_argument("trailing characters");
    return {x, y};
  } catch (const std::exception&) {
    throw ConfigError("cannot parse complex number in b spec '" + spec + "'");
  }
}

}  // namespace

BRule parse_b_spec(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) return ConstantB{parse_pair(spec.substr(6), spec)};
  if (spec.rfind("fixed-zero:", 0) == 0) return FixedZero{parse_pair(spec.substr(11), spec)};
  if (spec == "unimodular-path:exp(i*t)") {
    return BOfT{spec, [](double t) { return std::polar(1.0, t); },
                [](double t) { return Complex{0.0, 1.0} * std::polar(1.0, t); }};
  }
  throw ConfigError("unrecognized b spec '" + spec + "'");
}

TRange parse_t_range(const std::string& text) {
  TRange r;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.start >> c1 >> r.end >> c2 >> r.steps) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw ConfigError("t-range must look like start:end:steps, got '" + text + "'");
  }
  r.grid();
  return r;
}

}  // namespace popuc::cli
