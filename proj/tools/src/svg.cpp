#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "popuc/errors.hpp"

namespace popuc::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::string svg_from_csv(const std::string& csv, const std::string& title) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  const auto header = split(line);
  auto col = [&](const std::string& name) -> int {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  int group = col("series");
  if (group < 0) group = col("t");
  int xc = col("re");
  int yc = col("im");
  const bool circle = xc >= 0 && yc >= 0;
  if (!circle) {
    xc = col("theta");
    yc = col("value");
  }
  if (xc < 0 || yc < 0) throw ConfigError("CSV has no plottable columns");

  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    const std::string key = group >= 0 ? cells.at(group) : "data";
    if (!points.count(key)) order.push_back(key);
    points[key].emplace_back(std::stod(cells.at(xc)), std::stod(cells.at(yc)));
  }

  double xmin = -1.1, xmax = 1.1, ymin = -1.1, ymax = 1.1;
  if (!circle) {
    xmin = ymin = INFINITY;
    xmax = ymax = -INFINITY;
    for (const auto& [key, pts] : points) {
      for (const auto& [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    if (!(xmax > xmin)) xmax = xmin + 1.0;
  }
  constexpr double kSize = 480.0;
  constexpr double kMargin = 40.0;
  auto px = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * (kSize - 2 * kMargin); };
  auto py = [&](double y) { return kSize - kMargin - (y - ymin) / (ymax - ymin) * (kSize - 2 * kMargin); };

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                static_cast<int>(kSize + 160), static_cast<int>(kSize), static_cast<int>(kSize + 160),
                static_cast<int>(kSize));
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + std::to_string(static_cast<int>(kMargin)) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  if (circle) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n",
                  px(0.0), py(0.0), px(1.0) - px(0.0));
    out += buf;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#ccc\"/>\n", px(-1.1),
                  py(0.0), px(1.1), py(0.0));
    out += buf;
  } else {
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" fill=\"none\" stroke=\"#888\"/>\n",
                  kMargin, kMargin, kSize - 2 * kMargin, kSize - 2 * kMargin);
    out += buf;
  }
  for (std::size_t g = 0; g < order.size(); ++g) {
    const char* color = kPalette[g % (sizeof kPalette / sizeof kPalette[0])];
    for (const auto& [x, y] : points[order[g]]) {
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.1f\" fill=\"%s\"/>\n", px(x), py(y),
                    circle ? 4.0 : 1.5, color);
      out += buf;
    }
    const double ly = kMargin + 20.0 * static_cast<double>(g);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"4\" fill=\"%s\"/>\n", kSize + 10.0, ly, color);
    out += buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"12\">",
                  kSize + 20.0, ly + 4.0);
    out += buf;
    out += escape(order[g]) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace popuc::cli
