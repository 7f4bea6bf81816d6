#include "pmx/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pmx {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 48.0;
constexpr double kPlot = kSize - 2 * kMargin;
constexpr double kEps = 1e-12;

// a1 p1 + a2 p2 + c (>= 0 or == 0).
struct Linear {
  double a1, a2, c;
};

Linear indifference(const Bid<Rational>& bid, std::size_t i, std::size_t j) {
  // b_i p_j - b_j p_i with p_0 = 1.
  std::array<double, 3> coeff{0, 0, 0};
  coeff[j] += to_double(bid.value(i));
  coeff[i] -= to_double(bid.value(j));
  return {coeff[1], coeff[2], coeff[0]};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<PlotSegment> hyperplane_segments(const AuctionInstance<Rational>& instance,
                                             double extent) {
  std::vector<PlotSegment> segments;
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t b = 0; b < instance.bids.size(); ++b) {
    const auto& bid = instance.bids[b];
    for (auto [i, j] : pairs) {
      const Linear line = indifference(bid, i, j);
      const double norm2 = line.a1 * line.a1 + line.a2 * line.a2;
      if (norm2 < kEps) continue;
      const double px = -line.c * line.a1 / norm2;
      const double py = -line.c * line.a2 / norm2;
      const double dx = -line.a2;
      const double dy = line.a1;

      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      auto clip = [&](const Linear& h) {
        const double slope = h.a1 * dx + h.a2 * dy;
        const double offset = h.a1 * px + h.a2 * py + h.c;
        if (std::fabs(slope) < kEps) {
          if (offset < -kEps) hi = lo - 1;  // empty
          return;
        }
        const double t = -offset / slope;
        if (slope > 0) lo = std::max(lo, t);
        else hi = std::min(hi, t);
      };
      for (std::size_t k = 0; k <= 2; ++k) {
        if (k == i) continue;
        clip(indifference(bid, i, k));  // b_i p_k - b_k p_i >= 0
      }
      const bool ray = std::isinf(lo) || std::isinf(hi);
      clip({1, 0, 0});
      clip({0, 1, 0});
      clip({-1, 0, extent});
      clip({0, -1, extent});
      if (!(hi - lo > 1e-9)) continue;
      PlotSegment s{b, i, j, px + lo * dx, py + lo * dy, px + hi * dx, py + hi * dy, ray};
      const bool on_p1_axis = std::fabs(s.y1) < 1e-9 && std::fabs(s.y2) < 1e-9;
      const bool on_p2_axis = std::fabs(s.x1) < 1e-9 && std::fabs(s.x2) < 1e-9;
      if (on_p1_axis || on_p2_axis) continue;
      // Orient from the point nearer the origin.
      if (s.x1 + s.y1 > s.x2 + s.y2) {
        std::swap(s.x1, s.x2);
        std::swap(s.y1, s.y2);
      }
      segments.push_back(s);
    }
  }
  return segments;
}

std::string render_price_space_svg(const AuctionInstance<Rational>& instance,
                                   const std::vector<PriceVector<Rational>>& candidates) {
  if (instance.goods != 2) throw std::invalid_argument("price-space plots need exactly 2 goods");
  double max_value = 0;
  for (const auto& bid : instance.bids) {
    for (const auto& v : bid.values()) max_value = std::max(max_value, to_double(v));
  }
  const double extent = max_value > 0 ? 1.2 * max_value : 1.0;
  auto sx = [&](double p1) { return kMargin + p1 / extent * kPlot; };
  auto sy = [&](double p2) { return kMargin + kPlot - p2 / extent * kPlot; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"white\"/>\n";

  // Axes with five ticks each.
  svg << "  <g stroke=\"black\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << fixed(sx(0)) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
      << fixed(sx(extent)) << "\" y2=\"" << fixed(sy(0)) << "\"/>\n"
      << "    <line x1=\"" << fixed(sx(0)) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
      << fixed(sx(0)) << "\" y2=\"" << fixed(sy(extent)) << "\"/>\n"
      << "  </g>\n";
  svg << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int t = 0; t <= 5; ++t) {
    const double v = extent * t / 5;
    svg << "    <text x=\"" << fixed(sx(v)) << "\" y=\"" << fixed(sy(0) + 16)
        << "\" text-anchor=\"middle\">" << fixed(v) << "</text>\n";
    if (t > 0)
      svg << "    <text x=\"" << fixed(sx(0) - 6) << "\" y=\"" << fixed(sy(v) + 4)
          << "\" text-anchor=\"end\">" << fixed(v) << "</text>\n";
  }
  svg << "    <text x=\"" << fixed(sx(extent)) << "\" y=\"" << fixed(sy(0) + 32)
      << "\" text-anchor=\"end\">p1</text>\n"
      << "    <text x=\"" << fixed(sx(0) - 32) << "\" y=\"" << fixed(sy(extent))
      << "\">p2</text>\n"
      << "  </g>\n";

  for (const auto& s : hyperplane_segments(instance, extent)) {
    svg << "  <line class=\"hyperplane\" data-bid=\"" << escape(instance.bids[s.bid].id())
        << "\" data-goods=\"" << s.first << ',' << s.second << "\" data-kind=\""
        << (s.ray ? "ray" : "segment") << "\" x1=\"" << fixed(sx(s.x1)) << "\" y1=\""
        << fixed(sy(s.y1)) << "\" x2=\"" << fixed(sx(s.x2)) << "\" y2=\"" << fixed(sy(s.y2))
        << "\" stroke=\"#999999\" stroke-width=\"2\"/>\n";
  }
  for (const auto& bid : instance.bids) {
    const double x = sx(to_double(bid.value(1)));
    const double y = sy(to_double(bid.value(2)));
    svg << "  <rect class=\"bid\" x=\"" << fixed(x - 4) << "\" y=\"" << fixed(y - 4)
        << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.5\"/>\n"
        << "  <text class=\"bid-label\" x=\"" << fixed(x + 7) << "\" y=\"" << fixed(y - 7)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#1f4e99\">"
        << escape(bid.id()) << " (" << format_fraction(bid.value(1)) << ", "
        << format_fraction(bid.value(2)) << ")</text>\n";
  }
  for (const auto& price : candidates) {
    svg << "  <circle class=\"candidate\" cx=\"" << fixed(sx(to_double(price.at(1))))
        << "\" cy=\"" << fixed(sy(to_double(price.at(2)))) << "\" r=\"4\" fill=\"black\"><title>"
        << format_fraction(price.at(1)) << ", " << format_fraction(price.at(2))
        << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pmx
