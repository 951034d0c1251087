#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace monoconv::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 40.0;

std::string fixed(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

}  // namespace

std::string render_density_svg(const transforms::DensityCurve& curve, std::uint64_t seed) {
  double x_min = 0.0, x_max = 1.0, g_max = 0.0;
  if (!curve.samples.empty()) {
    x_min = curve.samples.front().x;
    x_max = curve.samples.back().x;
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  for (const auto& s : curve.samples) g_max = std::max(g_max, s.estimate.value);
  if (g_max <= 0.0) g_max = 1.0;
  g_max *= 1.1;

  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double g) { return kHeight - kMargin - g / g_max * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<!-- m=" << curve.m << " samples=" << curve.samples.size() << " seed=" << seed
      << " -->\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double axis_y = py(0.0);
  svg << "<line x1=\"" << fixed(kMargin) << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
      << fixed(kWidth - kMargin) << "\" y2=\"" << fixed(axis_y)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (x_min <= 0.0 && 0.0 <= x_max) {
    svg << "<line x1=\"" << fixed(px(0.0)) << "\" y1=\"" << fixed(kMargin) << "\" x2=\""
        << fixed(px(0.0)) << "\" y2=\"" << fixed(axis_y)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (double t = std::ceil(x_min); t <= x_max; t += 1.0) {
    svg << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
        << fixed(px(t)) << "\" y2=\"" << fixed(axis_y + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(axis_y + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << static_cast<long>(t) << "</text>\n";
  }

  svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    if (i > 0) svg << ' ';
    svg << fixed(px(curve.samples[i].x)) << ',' << fixed(py(curve.samples[i].estimate.value));
  }
  svg << "\"/>\n"
      << "<text x=\"" << fixed(kWidth - kMargin) << "\" y=\"" << fixed(kMargin - 12)
      << "\" font-size=\"13\" text-anchor=\"end\">m = " << curve.m << "</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace monoconv::cli
