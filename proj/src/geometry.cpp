#include "zdown/geometry.hpp"

#include <algorithm>
#include <limits>

namespace zdown {

bool interiors_overlap(const Rect& a, const Rect& b, double tolerance)
{
    return a.x < b.right() - tolerance && b.x < a.right() - tolerance &&
           a.y < b.bottom() - tolerance && b.y < a.bottom() - tolerance;
}

bool contains(const Rect& outer, const Rect& inner, double tolerance)
{
    return inner.x >= outer.x - tolerance && inner.y >= outer.y - tolerance &&
           inner.right() <= outer.right() + tolerance &&
           inner.bottom() <= outer.bottom() + tolerance;
}

std::optional<Rect> bounding_box(const std::vector<Rect>& rects, const std::vector<Polyline>& lines)
{
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    bool any = false;
    for (const Rect& r : rects) {
        min_x = std::min(min_x, r.x);
        min_y = std::min(min_y, r.y);
        max_x = std::max(max_x, r.right());
        max_y = std::max(max_y, r.bottom());
        any = true;
    }
    for (const Polyline& line : lines) {
        for (const Point& p : line) {
            min_x = std::min(min_x, p.x);
            min_y = std::min(min_y, p.y);
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
            any = true;
        }
    }
    if (!any) {
        return std::nullopt;
    }
    return Rect{min_x, min_y, max_x - min_x, max_y - min_y};
}

double exit_parameter(const Rect& r, Point from, Point to)
{
    double t = 1.0;
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    if (dx > 0.0) {
        t = std::min(t, (r.right() - from.x) / dx);
    } else if (dx < 0.0) {
        t = std::min(t, (r.x - from.x) / dx);
    }
    if (dy > 0.0) {
        t = std::min(t, (r.bottom() - from.y) / dy);
    } else if (dy < 0.0) {
        t = std::min(t, (r.y - from.y) / dy);
    }
    return std::max(t, 0.0);
}

std::optional<Polyline> clipped_center_segment(const Rect& source, const Rect& target)
{
    const Point a = source.center();
    const Point b = target.center();
    const double t_exit = exit_parameter(source, a, b);
    // Walking backwards from the target center gives the entry point.
    const double t_entry = 1.0 - exit_parameter(target, b, a);
    if (t_exit > t_entry || (a.x == b.x && a.y == b.y)) {
        return std::nullopt;
    }
    const auto at = [&](double t) { return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; };
    return Polyline{at(t_exit), at(t_entry)};
}

}  // namespace zdown
