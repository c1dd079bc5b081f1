#pragma once

#include <vector>

#include "jamloc/errors.hpp"

namespace jamloc {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point2D& p, const Point2D& q) {
    return p.x == q.x && p.y == q.y;
}
inline bool operator!=(const Point2D& p, const Point2D& q) { return !(p == q); }

double distance(const Point2D& p, const Point2D& q);

// Directed segment; zero-length segments are rejected at construction.
struct Segment {
    Point2D a;
    Point2D b;

    Segment(const Point2D& a_, const Point2D& b_) : a(a_), b(b_) {
        if (a == b) throw DegenerateSegment();
    }

    Point2D midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
    double length() const { return distance(a, b); }
};

// Implicit line a*x + b*y + c = 0, stored normalized so a^2 + b^2 = 1.
struct Line {
    double a;
    double b;
    double c;

    Line(double a_, double b_, double c_);

    double signed_distance(const Point2D& p) const { return a * p.x + b * p.y + c; }
};

struct Circle {
    Point2D center;
    double radius = 0.0;

    bool contains(const Point2D& p, double tol = 1e-9) const {
        return distance(center, p) <= radius + tol;
    }
};

// Convex hull in counter-clockwise order with no collinear interior vertices.
// Duplicates are removed; a singleton input yields a one-point hull and a
// collinear set degenerates to its two extreme points.
std::vector<Point2D> convex_hull(std::vector<Point2D> points);

// Smallest circle containing all points (Welzl-style randomized incremental
// construction). The internal shuffle is seeded from the sorted input, so the
// result is invariant under input permutation.
Circle min_enclosing_circle(const std::vector<Point2D>& points);

Line perpendicular_bisector(const Segment& s);

// Line orthogonal to s through the point a + t * (b - a).
Line perpendicular_at(const Segment& s, double t);

// Unique intersection point; throws NearParallelLines when the sine of the
// angle between the lines is below 1e-9.
Point2D line_intersection(const Line& l1, const Line& l2);

}  // namespace jamloc
