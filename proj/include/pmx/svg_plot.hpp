#ifndef PMX_SVG_PLOT_HPP_
#define PMX_SVG_PLOT_HPP_

#include <string>
#include <vector>

#include "pmx/model.hpp"

namespace pmx {

// A clipped piece of an indifference hyperplane in the (p1, p2) plane.
struct PlotSegment {
  std::size_t bid = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  bool ray = false;  // unbounded before clipping to the plot box
};

// Hyperplane pieces of every bid within [0, extent]^2; empty pieces and pieces
// lying on an axis (outside the positive orthant) are dropped.
std::vector<PlotSegment> hyperplane_segments(const AuctionInstance<Rational>& instance,
                                             double extent);

// SVG 1.1 drawing of the price plane for n = 2 over [0, 1.2 max b]^2: gray
// hyperplane pieces (class "hyperplane"), labeled bid markers (class "bid")
// and black candidate dots (class "candidate"). Output depends only on the
// arguments. Throws std::invalid_argument unless n = 2.
std::string render_price_space_svg(const AuctionInstance<Rational>& instance,
                                   const std::vector<PriceVector<Rational>>& candidates);

}  // namespace pmx

#endif  // PMX_SVG_PLOT_HPP_
