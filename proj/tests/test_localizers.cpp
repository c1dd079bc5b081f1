#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "jamloc/experiment.hpp"
#include "jamloc/localizers.hpp"
#include "jamloc/propagation.hpp"
#include "jamloc/random.hpp"
#include "oracles.hpp"

using namespace jamloc;

namespace {

std::vector<BoundaryObservation> random_observations(std::mt19937_64& rng, std::size_t n) {
    std::vector<BoundaryObservation> obs;
    obs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        obs.push_back({static_cast<int>(i),
                       {uniform_range(rng, 0, 100), uniform_range(rng, 0, 100)},
                       uniform_range(rng, -60, -20)});
    }
    return obs;
}

// Observations exactly on a circle, powers derived from the true distances
// (all equal here since the points sit exactly on the circle).
std::vector<BoundaryObservation> concyclic_observations(const Point2D& center, double radius,
                                                        const std::vector<double>& angles) {
    RadioParams radio;
    std::vector<BoundaryObservation> obs;
    std::mt19937_64 rng(0);
    int id = 0;
    for (const double a : angles) {
        const Point2D p{center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
        const double d = distance(p, center);
        obs.push_back({id++, p, received_power(radio, d, rng).received_dbm});
    }
    return obs;
}

// Powers on a coarse dyadic grid in a range where adding -50, +13.7 or +100
// is exact in double precision, so shifted inputs carry identical pairwise
// differences.
double grid_power(std::mt19937_64& rng) {
    return std::round(uniform_range(rng, -28.0, 0.0) * 1024.0) / 1024.0;
}

Point2D rotate_translate(const Point2D& p, double angle, double tx, double ty) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
}

}  // namespace

TEST_CASE("centroid localization") {
    const std::vector<BoundaryObservation> square = {
        {0, {0, 0}, -30}, {1, {2, 0}, -30}, {2, {0, 2}, -30}, {3, {2, 2}, -30}};
    const auto est = centroid_localize(square);
    CHECK(est.method == Method::CL);
    CHECK(est.position.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.position.y == doctest::Approx(1.0).epsilon(1e-12));

    const auto single = centroid_localize({{7, {5, 7}, -31}});
    CHECK(single.position == Point2D{5, 7});

    CHECK_THROWS_AS(centroid_localize({}), NoBoundaryNodes);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const auto obs = random_observations(rng, 1 + bounded_uint(rng, 40));
        std::vector<Point2D> positions;
        for (const auto& o : obs) positions.push_back(o.position);
        const Point2D want = oracle::mean_position(positions);
        const auto got = centroid_localize(obs);
        CHECK(std::abs(got.position.x - want.x) < 1e-12);
        CHECK(std::abs(got.position.y - want.y) < 1e-12);
    }
}

TEST_CASE("cj localization is the enclosing circle center") {
    const auto two = cj_localize({{0, {0, 0}, -30}, {1, {2, 0}, -31}});
    CHECK(two.method == Method::CJ);
    CHECK(two.position.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two.position.y == doctest::Approx(0.0).epsilon(1e-12));

    // Concyclic observations recover the circle center.
    const auto obs = concyclic_observations({43, 57}, 25.0, {0.1, 1.3, 2.9, 4.0, 5.5});
    const auto est = cj_localize(obs);
    CHECK(std::abs(est.position.x - 43.0) < 1e-9);
    CHECK(std::abs(est.position.y - 57.0) < 1e-9);

    CHECK_THROWS_AS(cj_localize({}), NoBoundaryNodes);

    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 100; ++rep) {
        const auto fuzz = random_observations(rng, 1 + bounded_uint(rng, 12));
        std::vector<Point2D> positions;
        for (const auto& o : fuzz) positions.push_back(o.position);
        const Circle want = oracle::brute_force_mec(positions);
        const auto got = cj_localize(fuzz);
        CHECK(std::abs(got.position.x - want.center.x) < 1e-9);
        CHECK(std::abs(got.position.y - want.center.y) < 1e-9);
    }
}

TEST_CASE("chord selection picks the square diagonals") {
    const std::vector<BoundaryObservation> corners = {
        {0, {0, 0}, -30}, {1, {10, 0}, -30}, {2, {10, 10}, -30}, {3, {0, 10}, -30}};
    const ChordPair chords = select_chords(corners, 15.0);
    CHECK(chords.primary.a.node_id == 0);
    CHECK(chords.primary.b.node_id == 2);
    CHECK(chords.primary.length_m == doctest::Approx(10.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(chords.secondary.a.node_id == 1);
    CHECK(chords.secondary.b.node_id == 3);
    CHECK(chords.secondary.length_m == doctest::Approx(10.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("chord selection error paths") {
    CHECK_THROWS_AS(select_chords({{0, {0, 0}, -30}, {1, {9, 0}, -30}}, 15.0),
                    InsufficientBoundaryNodes);
    // Duplicated positions do not count as distinct.
    CHECK_THROWS_AS(
        select_chords({{0, {0, 0}, -30}, {1, {0, 0}, -30}, {2, {9, 0}, -30}}, 15.0),
        InsufficientBoundaryNodes);
    // Nearly collinear: no second chord passes the 15 degree gate.
    CHECK_THROWS_AS(
        select_chords({{0, {0, 0}, -30}, {1, {10, 0.01}, -30}, {2, {20, 0}, -30}}, 15.0),
        NoTransverseChord);
}

TEST_CASE("primary chord length matches the exhaustive pair scan") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 100; ++rep) {
        const auto obs = random_observations(rng, 3 + bounded_uint(rng, 30));
        std::vector<Point2D> positions;
        for (const auto& o : obs) positions.push_back(o.position);
        const double want = oracle::longest_pair(positions);
        const ChordPair chords = select_chords(obs, 15.0);
        CHECK(chords.primary.length_m == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("compensation delta hand values") {
    // Equal powers: k = 1.
    CHECK(compensation_delta(-30, -30, 12, CompensationMode::Paper) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(compensation_delta(-30, -30, 12, CompensationMode::Geometric) == 0.0);

    // 20 dB difference: k = 10.
    CHECK(compensation_delta(-50, -30, 12, CompensationMode::Paper) ==
          doctest::Approx(10.0).epsilon(1e-12));
    CHECK(compensation_delta(-50, -30, 12, CompensationMode::Geometric) ==
          doctest::Approx(9.0 * 12.0 / 11.0).epsilon(1e-12));

    // 40 dB difference: k = 100.
    CHECK(compensation_delta(-70, -30, 50, CompensationMode::Paper) ==
          doctest::Approx(100.0 * 50.0 / 102.0).epsilon(1e-12));
    CHECK(compensation_delta(-70, -30, 50, CompensationMode::Geometric) ==
          doctest::Approx(99.0 * 50.0 / 101.0).epsilon(1e-12));

    CHECK_THROWS_AS(compensation_delta(-30, -30, 0.0, CompensationMode::Paper),
                    DegenerateSegment);
    CHECK_THROWS_AS(compensation_delta(-30, -30, -5.0, CompensationMode::Geometric),
                    DegenerateSegment);
}

TEST_CASE("compensation delta approaches the chord length for large k") {
    for (const auto mode : {CompensationMode::Paper, CompensationMode::Geometric}) {
        const double delta = compensation_delta(-150, -30, 12, mode);  // k = 10^6
        CHECK(delta < 12.0);
        CHECK(delta > 12.0 * (1.0 - 1e-5));
    }
}

TEST_CASE("compensation delta stays in its mode's range for k >= 1") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 1000; ++rep) {
        const double p1 = uniform_range(rng, -80, -20);
        const double p2 = p1 + uniform_range(rng, 0.0, 60.0);
        const double d12 = uniform_range(rng, 0.1, 60.0);
        const double geometric = compensation_delta(p1, p2, d12, CompensationMode::Geometric);
        CHECK(geometric >= 0.0);
        CHECK(geometric < d12);
        const double paper = compensation_delta(p1, p2, d12, CompensationMode::Paper);
        CHECK(paper >= d12 / 3.0 - 1e-12);
        CHECK(paper < d12);
    }
}

TEST_CASE("gjl recovers the center exactly from concyclic equal-power observations") {
    const Point2D center{50, 50};
    const auto obs = concyclic_observations(
        center, 30.0, {0.0, 0.25 * kTwoPi, 0.5 * kTwoPi, 0.75 * kTwoPi});
    const auto est = gjl_localize(obs, CompensationMode::Geometric, 15.0);
    CHECK(est.method == Method::GJL);
    CHECK_FALSE(est.used_fallback);
    REQUIRE(est.diagnostics.has_value());
    CHECK(est.diagnostics->chord1.delta_l_m == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(est.position.x - center.x) < 1e-6);
    CHECK(std::abs(est.position.y - center.y) < 1e-6);
}

TEST_CASE("paper mode shifts the perpendiculars even for equal powers") {
    // Four points on the axes of a circle of radius 30 around (50, 50): both
    // diagonals are diameters, so the equal-power offset d12 / 3 moves each
    // line 10 m toward its smaller-id endpoint, landing the joint at (60, 60).
    const auto obs = concyclic_observations(
        {50, 50}, 30.0, {0.0, 0.25 * kTwoPi, 0.5 * kTwoPi, 0.75 * kTwoPi});
    const auto est = gjl_localize(obs, CompensationMode::Paper, 15.0);
    REQUIRE(est.diagnostics.has_value());
    CHECK(est.diagnostics->chord1.delta_l_m ==
          doctest::Approx(est.diagnostics->chord1.chord_length_m / 3.0).epsilon(1e-9));
    CHECK(est.position.x == doctest::Approx(60.0).epsilon(1e-9));
    CHECK(est.position.y == doctest::Approx(60.0).epsilon(1e-9));
    CHECK(localization_error(est, {50, 50}) == doctest::Approx(std::sqrt(200.0)).epsilon(1e-9));
}

TEST_CASE("gjl propagates typed errors on degenerate inputs") {
    CHECK_THROWS_AS(gjl_localize({{0, {0, 0}, -30}, {1, {5, 5}, -30}},
                                 CompensationMode::Geometric, 15.0),
                    InsufficientBoundaryNodes);
    CHECK_THROWS_AS(gjl_localize({{0, {0, 0}, -30}, {1, {10, 0.01}, -31}, {2, {20, 0}, -32}},
                                 CompensationMode::Geometric, 15.0),
                    NoTransverseChord);
}

TEST_CASE("gjl output is bitwise invariant under a constant power shift") {
    std::mt19937_64 rng(12);
    int done = 0;
    while (done < 50) {
        std::vector<BoundaryObservation> obs;
        const std::size_t n = 4 + bounded_uint(rng, 8);
        for (std::size_t i = 0; i < n; ++i) {
            obs.push_back({static_cast<int>(i),
                           {uniform_range(rng, 0, 100), uniform_range(rng, 0, 100)},
                           grid_power(rng)});
        }
        for (const auto mode : {CompensationMode::Paper, CompensationMode::Geometric}) {
            LocalizationEstimate base;
            try {
                base = gjl_localize(obs, mode, 15.0);
            } catch (const Error&) {
                goto next_rep;
            }
            for (const double c : {-50.0, 13.7, 100.0}) {
                auto shifted = obs;
                for (auto& o : shifted) o.received_power_dbm += c;
                const auto moved = gjl_localize(shifted, mode, 15.0);
                CHECK(moved.position.x == base.position.x);
                CHECK(moved.position.y == base.position.y);
                CHECK(moved.diagnostics->chord1.k == base.diagnostics->chord1.k);
                CHECK(moved.diagnostics->chord2.delta_l_m ==
                      base.diagnostics->chord2.delta_l_m);
            }
        }
        ++done;
    next_rep:;
    }
}

TEST_CASE("all three localizers are equivariant under rigid motion") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 50) {
        // Well-spread observations so chord selection succeeds.
        std::vector<double> angles;
        const std::size_t n = 5 + bounded_uint(rng, 6);
        for (std::size_t i = 0; i < n; ++i)
            angles.push_back(kTwoPi * (static_cast<double>(i) + 0.2 * uniform01(rng)) /
                             static_cast<double>(n));
        const Point2D center{uniform_range(rng, 30, 70), uniform_range(rng, 30, 70)};
        std::vector<BoundaryObservation> obs;
        int id = 0;
        for (const double a : angles) {
            const double r = uniform_range(rng, 24, 30);
            obs.push_back({id++,
                           {center.x + r * std::cos(a), center.y + r * std::sin(a)},
                           uniform_range(rng, -40, -30)});
        }

        const double angle = uniform_range(rng, 0.0, kTwoPi);
        const double tx = uniform_range(rng, -30, 30);
        const double ty = uniform_range(rng, -30, 30);
        auto moved = obs;
        for (auto& o : moved) o.position = rotate_translate(o.position, angle, tx, ty);

        LocalizationEstimate g0;
        LocalizationEstimate g1;
        try {
            g0 = gjl_localize(obs, CompensationMode::Geometric, 15.0);
            g1 = gjl_localize(moved, CompensationMode::Geometric, 15.0);
        } catch (const Error&) {
            continue;
        }

        const auto check_moved = [&](const Point2D& before, const Point2D& after) {
            const Point2D expect = rotate_translate(before, angle, tx, ty);
            CHECK(std::abs(after.x - expect.x) < 1e-6);
            CHECK(std::abs(after.y - expect.y) < 1e-6);
        };
        check_moved(g0.position, g1.position);
        check_moved(centroid_localize(obs).position, centroid_localize(moved).position);
        check_moved(cj_localize(obs).position, cj_localize(moved).position);
        ++done;
    }
}

TEST_CASE("localization error is the euclidean distance") {
    LocalizationEstimate est;
    est.position = {3, 4};
    CHECK(localization_error(est, {3, 4}) == 0.0);
    CHECK(localization_error(est, {0, 0}) == 5.0);

    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 100; ++rep) {
        est.position = {uniform_range(rng, -100, 100), uniform_range(rng, -100, 100)};
        const Point2D truth{uniform_range(rng, -100, 100), uniform_range(rng, -100, 100)};
        CHECK(localization_error(est, truth) ==
              doctest::Approx(oracle::euclid(est.position, truth)).epsilon(1e-12));
    }
}

TEST_CASE("gjl with fallback is total for any non-empty observation list") {
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + bounded_uint(rng, 6);
        std::vector<BoundaryObservation> obs;
        for (std::size_t i = 0; i < n; ++i) {
            // Half the time force degenerate collinear/duplicate layouts.
            Point2D p{uniform_range(rng, 0, 100), uniform_range(rng, 0, 100)};
            if (rep % 2 == 0 && i > 0) p = {obs[0].position.x + static_cast<double>(i), obs[0].position.y};
            obs.push_back({static_cast<int>(i), p, uniform_range(rng, -50, -30)});
        }
        const auto est = gjl_or_fallback(obs, CompensationMode::Geometric, 15.0);
        CHECK(est.method == Method::GJL);
        CHECK(std::isfinite(est.position.x));
        CHECK(std::isfinite(est.position.y));
    }
}
