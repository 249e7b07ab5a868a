#include "eigensteps/majorization.hpp"
#include "eigensteps/errors.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace eigensteps;

TEST_CASE("spectrum constructor validates its input") {
    CHECK_NOTHROW(Spectrum({2.0, 1.0, 1.0, 0.0}));
    CHECK_NOTHROW(Spectrum({1.0, 1.0 + 1e-10})); // noise within feas_tol
    CHECK_NOTHROW(Spectrum({1.0, -1e-10}));
    CHECK_THROWS_AS(Spectrum({1.0, 2.0}), UsageError);
    CHECK_THROWS_AS(Spectrum({1.0, -1.0}), UsageError);
    CHECK_THROWS_AS(Spectrum({std::numeric_limits<double>::quiet_NaN()}), UsageError);
    CHECK_THROWS_AS(Spectrum({std::numeric_limits<double>::infinity()}), UsageError);
}

TEST_CASE("length sequence constructor validates its input") {
    CHECK_NOTHROW(LengthSequence({1.0, 1.0, 0.5}));
    CHECK_THROWS_AS(LengthSequence({0.5, 1.0}), UsageError);
    CHECK_THROWS_AS(LengthSequence({-0.5}), UsageError);
}

TEST_CASE("majorization on the five-in-three instance") {
    const MajorizationReport rep =
        majorizes(fixtures::tight_lam_padded(), fixtures::unit_mu(5));
    CHECK(rep.holds);
    // Partial slacks are 2/3, 4/3, 2, 1, 0; the minimum sits at n = N.
    CHECK(rep.worst_partial_slack == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.trace_gap == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("every sequence majorizes itself") {
    const std::vector<double> v = {3.0, 1.5, 0.25};
    const MajorizationReport rep = majorizes(v, v);
    CHECK(rep.holds);
    CHECK(rep.worst_partial_slack == 0.0);
    CHECK(rep.trace_gap == 0.0);
}

TEST_CASE("a failed partial sum is reported with its slack") {
    const std::vector<double> lam = {1.0, 1.0};
    const std::vector<double> mu = {1.5, 0.5};
    const MajorizationReport rep = majorizes(lam, mu);
    CHECK_FALSE(rep.holds);
    CHECK(rep.worst_partial_slack == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(rep.trace_gap == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a trace mismatch alone breaks majorization") {
    const std::vector<double> lam = {2.0, 1.0};
    const std::vector<double> mu = {1.0, 1.0};
    const MajorizationReport rep = majorizes(lam, mu);
    CHECK_FALSE(rep.holds);
    CHECK(rep.trace_gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("majorization over negative entries") {
    // Shift covariance: subtracting a constant from both sides changes nothing.
    const std::vector<double> lam = {1.0, -1.0, -3.0};
    const std::vector<double> mu = {0.0, -1.0, -2.0};
    const MajorizationReport rep = majorizes(lam, mu);
    CHECK(rep.holds);
    CHECK(rep.worst_partial_slack == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("majorizes rejects mismatched shapes") {
    const std::vector<double> lam = {1.0, 0.0};
    const std::vector<double> mu = {1.0};
    CHECK_THROWS_AS(majorizes(lam, mu), UsageError);
    CHECK_THROWS_AS(majorizes(std::vector<double>{}, std::vector<double>{}), UsageError);
}

TEST_CASE("zero padding") {
    const Spectrum padded = zero_pad(Spectrum({1.0}), 3);
    CHECK(padded.values() == std::vector<double>{1.0, 0.0, 0.0});
    CHECK(zero_pad(Spectrum({1.0}), 1).values() == std::vector<double>{1.0});
    CHECK_THROWS_AS(zero_pad(Spectrum({1.0, 0.5}), 1), UsageError);
}

TEST_CASE("t-transforms produce majorized rearrangements") {
    const std::vector<double> start = {4.0, 2.0, 1.0, 0.5};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::vector<double> moved = apply_random_t_transforms(start, 12, seed);
        REQUIRE(moved.size() == start.size());
        for (std::size_t i = 0; i + 1 < moved.size(); ++i) CHECK(moved[i] >= moved[i + 1]);
        const MajorizationReport rep = majorizes(start, moved);
        CHECK(rep.holds);
        const double sum = std::accumulate(moved.begin(), moved.end(), 0.0);
        CHECK(sum == doctest::Approx(7.5).epsilon(1e-12));
    }
}

TEST_CASE("random majorized pairs satisfy their contract") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto [lam, mu] = random_majorized_pair(n, seed);
            REQUIRE(lam.size() == static_cast<std::size_t>(n));
            REQUIRE(mu.size() == static_cast<std::size_t>(n));
            const MajorizationReport rep = majorizes(lam, mu);
            CHECK(rep.holds);
            CHECK(lam.sum() == doctest::Approx(mu.sum()).epsilon(1e-12));
        }
    }
}

TEST_CASE("random pair generation is deterministic in the seed") {
    const auto [lam1, mu1] = random_majorized_pair(5, 99);
    const auto [lam2, mu2] = random_majorized_pair(5, 99);
    CHECK(lam1.values() == lam2.values());
    CHECK(mu1.values() == mu2.values());
    const auto [lam3, mu3] = random_majorized_pair(5, 100);
    CHECK(lam1.values() != lam3.values());
}

TEST_CASE("typed and raw majorization overloads agree") {
    const Spectrum lam({2.0, 1.0, 0.0});
    const LengthSequence mu({1.5, 1.0, 0.5});
    const MajorizationReport a = majorizes(lam, mu);
    const MajorizationReport b = majorizes(lam.values(), mu.values());
    CHECK(a.holds == b.holds);
    CHECK(a.worst_partial_slack == b.worst_partial_slack);
    CHECK(a.trace_gap == b.trace_gap);
}
