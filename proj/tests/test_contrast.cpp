#include "mcde/contrast.hpp"
#include "mcde/error.hpp"
#include "mcde/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace mcde;

TEST_CASE("argument errors") {
    const auto ds = generate({DependencyKind::independent, 100, 3, 0.0, 1});
    ContrastOptions opts;
    opts.iterations = 0;
    CHECK_THROWS_AS(contrast(ds, opts), ArgumentError);

    const Dataset one_col(std::vector<std::vector<double>>{{1.0, 2.0, 3.0}});
    CHECK_THROWS_AS(contrast(one_col), ArgumentError);

    const Dataset one_row(std::vector<std::vector<double>>{{1.0}, {2.0}});
    CHECK_THROWS_AS(contrast(one_row), ArgumentError);

    opts = {};
    opts.alpha = 0.0;
    CHECK_THROWS_AS(contrast(ds, opts), ArgumentError);
}

TEST_CASE("estimate metadata and recorded iterations") {
    const auto ds = generate({DependencyKind::sine_p1, 400, 3, 0.2, 4});
    ContrastOptions opts;
    opts.iterations = 37;
    opts.seed = 1234;
    opts.record_iterations = true;
    const auto est = contrast(ds, opts);
    CHECK(est.iterations == 37);
    CHECK(est.seed == 1234);
    CHECK(est.alpha == 0.5);
    REQUIRE(est.per_iteration);
    REQUIRE(est.per_iteration->size() == 37);
    const double sum = std::accumulate(est.per_iteration->begin(), est.per_iteration->end(), 0.0);
    CHECK(est.score == sum / 37.0);

    const RankIndex index(ds);
    for (std::size_t i = 0; i < 37; ++i) {
        CHECK(contrast_iteration(index, 0.5, 1234, i) == (*est.per_iteration)[i]);
    }

    opts.record_iterations = false;
    CHECK_FALSE(contrast(ds, opts).per_iteration.has_value());
}

TEST_CASE("score is bit-identical across thread counts") {
    const auto ds = generate({DependencyKind::hypersphere, 2000, 4, 0.3, 8});
    ContrastOptions opts;
    opts.iterations = 200;
    opts.seed = 77;
    opts.threads = 1;
    const double serial = contrast(ds, opts).score;
    for (unsigned t : {2u, 3u, 8u, 0u}) {
        opts.threads = t;
        CHECK(contrast(ds, opts).score == serial);
    }
    opts.seed = 78;
    opts.threads = 1;
    CHECK(contrast(ds, opts).score != serial);
}

TEST_CASE("projected index gives the same score as the projected dataset") {
    auto ds = generate({DependencyKind::parabolic, 500, 4, 0.1, 3});
    ds = discretise(ds, 20);  // with ties, to exercise within-tie order
    const RankIndex full(ds);
    const std::vector<std::size_t> dims = {3, 1};
    ContrastOptions opts;
    opts.seed = 5;
    CHECK(contrast(full.project(dims), opts).score == contrast(select_subspace(ds, dims), opts).score);
}

TEST_CASE("independent data scores near 0.5") {
    double total = 0.0;
    const int runs = 200;
    for (int r = 0; r < runs; ++r) {
        const auto ds = generate({DependencyKind::independent, 1000, 3, 0.0,
                                  static_cast<std::uint64_t>(r)});
        ContrastOptions opts;
        opts.seed = 1000 + static_cast<std::uint64_t>(r);
        total += contrast(ds, opts).score;
    }
    const double mean = total / runs;
    CHECK(mean > 0.47);
    CHECK(mean < 0.53);
}

TEST_CASE("noiseless linear dependency scores near 1") {
    const auto ds = generate({DependencyKind::linear, 1000, 2, 0.0, 12});
    const auto est = contrast(ds);
    CHECK(est.score >= 0.95);
    CHECK(est.score <= 1.0);
}

TEST_CASE("constant data scores exactly 0") {
    const Dataset ds({std::vector<double>(300, 1.0), std::vector<double>(300, 2.0),
                      std::vector<double>(300, 3.0)});
    CHECK(contrast(ds).score == 0.0);
}

TEST_CASE("hoeffding_bound") {
    CHECK(hoeffding_bound(200, 0.1) == doctest::Approx(2.0 * std::exp(-4.0)).epsilon(1e-14));
    CHECK(hoeffding_bound(200, 0.1) == doctest::Approx(0.0366).epsilon(1e-3));
    CHECK(hoeffding_bound(800, 0.1) == doctest::Approx(2.0 * std::exp(-16.0)).epsilon(1e-14));
    CHECK(hoeffding_bound(800, 0.1) == doctest::Approx(2.25e-7).epsilon(1e-2));
    CHECK(hoeffding_bound(10, 1e-6) == 1.0);
    CHECK_THROWS_AS(hoeffding_bound(10, 0.0), ArgumentError);
    CHECK_THROWS_AS(hoeffding_bound(10, 1.0), ArgumentError);
    CHECK_THROWS_AS(hoeffding_bound(0, 0.1), ArgumentError);
}

TEST_CASE("iterations_for") {
    CHECK(iterations_for(0.1, 0.04) == 196);
    CHECK(iterations_for(0.1, 2.0 * std::exp(-4.0)) == 200);
    CHECK(iterations_for(0.1, 2e-4) == 461);
    CHECK(iterations_for(0.5, 0.5) == 3);
    CHECK_THROWS_AS(iterations_for(0.0, 0.5), ArgumentError);
    CHECK_THROWS_AS(iterations_for(0.1, 1.0), ArgumentError);

    // Minimality and consistency with the bound over a grid.
    for (double eps : {0.01, 0.05, 0.1, 0.2, 0.33, 0.7}) {
        for (double delta : {1e-9, 1e-4, 0.01, 0.04, 0.3, 0.9}) {
            const auto m = iterations_for(eps, delta);
            REQUIRE(hoeffding_bound(m, eps) <= delta);
            if (m > 1) REQUIRE(hoeffding_bound(m - 1, eps) > delta);
        }
    }
}
