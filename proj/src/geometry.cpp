#include "kast/geometry.hpp"

#include <algorithm>

namespace kast {

int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

int winding_contribution(const Point& a, const Point& b, const Point& p) {
  if (a.y <= p.y) {
    if (b.y > p.y && orientation(a, b, p) > 0) return 1;
  } else if (b.y <= p.y && orientation(a, b, p) < 0) {
    return -1;
  }
  return 0;
}

int winding_number(std::span<const Point> poly, const Point& p) {
  int w = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    w += winding_contribution(poly[i], poly[(i + 1) % poly.size()], p);
  }
  return w;
}

bool on_polygon(std::span<const Point> poly, const Point& p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (on_segment(p, poly[i], poly[(i + 1) % poly.size()])) return true;
  }
  return false;
}

bool is_simple_polygon(std::span<const Point> poly) {
  const std::size_t k = poly.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (poly[i] == poly[j]) return false;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % k];
    for (std::size_t j = i + 1; j < k; ++j) {
      const Point& c = poly[j];
      const Point& d = poly[(j + 1) % k];
      const bool adjacent = j == i + 1 || (i == 0 && j == k - 1);
      if (adjacent) {
        // Consecutive sides may only share their common vertex; with distinct
        // vertices they overlap only when one folds back onto the other.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& p = (j == i + 1) ? a : b;
        const Point& r = (j == i + 1) ? d : c;
        if (on_segment(r, p, shared) || on_segment(p, shared, r)) return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace kast
