#pragma once

#include <span>
#include <utility>

#include "kast/numbers.hpp"

namespace kast {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (b - a) x (c - a): +1 for a left turn.
int orientation(const Point& a, const Point& b, const Point& c);

// True when p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

// True when the closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Signed crossing contribution of the directed segment a -> b to the winding
// number around p. Summing over a closed chain gives its winding number,
// provided p lies on none of the segments.
int winding_contribution(const Point& a, const Point& b, const Point& p);

// Winding number of the closed polygon through `poly` (last vertex joins the
// first) around p. p must not lie on the polygon.
int winding_number(std::span<const Point> poly, const Point& p);

bool on_polygon(std::span<const Point> poly, const Point& p);

// Vertices pairwise distinct and non-adjacent sides disjoint.
bool is_simple_polygon(std::span<const Point> poly);

}  // namespace kast
