#pragma once

#include <optional>
#include <vector>

namespace zdown {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

struct Size {
    double width = 0.0;
    double height = 0.0;

    bool operator==(const Size&) const = default;
};

// Axis-aligned box, origin top-left, y grows downwards.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;

    double right() const { return x + width; }
    double bottom() const { return y + height; }
    Point center() const { return {x + width / 2.0, y + height / 2.0}; }
    Size size() const { return {width, height}; }

    bool operator==(const Rect&) const = default;
};

using Polyline = std::vector<Point>;

/// True when the open interiors of the two rects intersect.
bool interiors_overlap(const Rect& a, const Rect& b, double tolerance = 0.0);

/// True when `inner` lies inside `outer`, allowing `tolerance` overflow per side.
bool contains(const Rect& outer, const Rect& inner, double tolerance = 0.0);

/// Smallest rect covering all rects and points; nullopt when both are empty.
std::optional<Rect> bounding_box(const std::vector<Rect>& rects,
                                 const std::vector<Polyline>& lines = {});

/// Parameter t in (0, 1] where the ray from a point inside `r` towards `to`
/// leaves `r`. Returns 1 when `to` is still inside.
double exit_parameter(const Rect& r, Point from, Point to);

/// Straight segment between the centers of two rects, clipped to their borders.
/// Returns nullopt when the rects overlap so that no clipped segment exists.
std::optional<Polyline> clipped_center_segment(const Rect& source, const Rect& target);

}  // namespace zdown
