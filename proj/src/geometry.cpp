#include "jamloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "jamloc/random.hpp"

namespace jamloc {

double distance(const Point2D& p, const Point2D& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

Line::Line(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    const double norm = std::sqrt(a * a + b * b);
    if (norm == 0.0) throw std::invalid_argument("line requires a nonzero normal");
    a /= norm;
    b /= norm;
    c /= norm;
}

namespace {

double cross(const Point2D& o, const Point2D& p, const Point2D& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

bool lex_less(const Point2D& p, const Point2D& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
}

std::vector<Point2D> sorted_unique(std::vector<Point2D> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::uint64_t hash_points(const std::vector<Point2D>& pts) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&h](double v) {
        v += 0.0;  // collapse -0.0 onto +0.0
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int s = 0; s < 64; s += 8) {
            h ^= (bits >> s) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& p : pts) {
        mix(p.x);
        mix(p.y);
    }
    return h;
}

// Working circle with squared radius; containment uses a relative slack so
// support points re-test as inside despite round-off.
struct WorkCircle {
    Point2D center;
    double r2 = 0.0;
};

constexpr double kContainEps = 1e-12;

bool in_work_circle(const WorkCircle& c, const Point2D& p) {
    const double dx = p.x - c.center.x;
    const double dy = p.y - c.center.y;
    return dx * dx + dy * dy <= c.r2 + kContainEps * (1.0 + c.r2);
}

WorkCircle circle_from_2(const Point2D& p, const Point2D& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return {{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}, 0.25 * (dx * dx + dy * dy)};
}

WorkCircle widest_pair_circle(const Point2D& a, const Point2D& b, const Point2D& c) {
    WorkCircle best = circle_from_2(a, b);
    const WorkCircle ac = circle_from_2(a, c);
    if (ac.r2 > best.r2) best = ac;
    const WorkCircle bc = circle_from_2(b, c);
    if (bc.r2 > best.r2) best = bc;
    return best;
}

WorkCircle circle_from_3(const Point2D& a, const Point2D& b, const Point2D& c) {
    // Circumcenter relative to a for conditioning.
    const double bx = b.x - a.x;
    const double by = b.y - a.y;
    const double cx = c.x - a.x;
    const double cy = c.y - a.y;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double det = 2.0 * (bx * cy - by * cx);
    if (std::abs(det) <= 1e-12 * (b2 + c2)) {
        // Nearly collinear support: the diameter circle of the widest pair.
        return widest_pair_circle(a, b, c);
    }
    const double ux = (cy * b2 - by * c2) / det;
    const double uy = (bx * c2 - cx * b2) / det;
    return {{a.x + ux, a.y + uy}, ux * ux + uy * uy};
}

}  // namespace

std::vector<Point2D> convex_hull(std::vector<Point2D> points) {
    if (points.empty()) throw EmptyPointSet();
    const std::vector<Point2D> pts = sorted_unique(std::move(points));
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<Point2D> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

Circle min_enclosing_circle(const std::vector<Point2D>& points) {
    if (points.empty()) throw EmptyPointSet();
    std::vector<Point2D> pts = sorted_unique(points);

    // Shuffle keyed by the sorted contents: expected linear time, and the
    // result does not depend on the caller's ordering.
    std::mt19937_64 rng(hash_points(pts));
    fisher_yates_shuffle(pts, rng);

    const std::size_t n = pts.size();
    WorkCircle c{pts[0], 0.0};
    for (std::size_t i = 1; i < n; ++i) {
        if (in_work_circle(c, pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (in_work_circle(c, pts[j])) continue;
            c = circle_from_2(pts[i], pts[j]);
            for (std::size_t q = 0; q < j; ++q) {
                if (in_work_circle(c, pts[q])) continue;
                c = circle_from_3(pts[i], pts[j], pts[q]);
            }
        }
    }
    return {c.center, std::sqrt(c.r2)};
}

Line perpendicular_at(const Segment& s, double t) {
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const double len = std::sqrt(dx * dx + dy * dy);
    const double nx = dx / len;
    const double ny = dy / len;
    const Point2D foot{s.a.x + t * dx, s.a.y + t * dy};
    return {nx, ny, -(nx * foot.x + ny * foot.y)};
}

Line perpendicular_bisector(const Segment& s) { return perpendicular_at(s, 0.5); }

Point2D line_intersection(const Line& l1, const Line& l2) {
    // For unit normals the determinant is the sine of the angle between the
    // lines, so the parallelism test is scale-free.
    const double det = l1.a * l2.b - l2.a * l1.b;
    if (std::abs(det) < 1e-9) throw NearParallelLines();
    return {(l2.c * l1.b - l1.c * l2.b) / det, (l1.c * l2.a - l2.c * l1.a) / det};
}

}  // namespace jamloc
