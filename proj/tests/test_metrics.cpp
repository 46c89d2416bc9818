#include <doctest.h>

#include "dynavid/errors.hpp"
#include "dynavid/metrics.hpp"
#include "support/fixtures.hpp"

using namespace dynavid;

TEST_CASE("static regime has exactly zero variation and zero spread") {
    Rng rng(1);
    const RegimeStats stats =
        regime_stats(ScheduleKind::static_magnitude(), 32, 9.0, 100, rng);
    CHECK(stats.mean_total_variation == 0.0);
    CHECK(stats.mean_pairwise_distance == 0.0);
    CHECK(stats.samples == 100);
}

TEST_CASE("random regime is rougher than fourier, both rougher than static") {
    Rng rng(2);
    const RegimeStats fourier =
        regime_stats(ScheduleKind::fourier_default(), 32, 9.0, 500, rng);
    const RegimeStats random =
        regime_stats(ScheduleKind::random_per_frame(), 32, 9.0, 500, rng);
    CHECK(fourier.mean_total_variation > 0.0);
    CHECK(random.mean_total_variation > fourier.mean_total_variation);
}

TEST_CASE("pairwise distances order static < fourier at matched settings") {
    Rng rng(3);
    const RegimeStats fourier =
        regime_stats(ScheduleKind::fourier_default(), 32, 9.0, 300, rng);
    const RegimeStats linear = regime_stats(ScheduleKind::linear(), 32, 9.0, 300, rng);
    CHECK(fourier.mean_pairwise_distance > 0.0);
    CHECK(linear.mean_pairwise_distance > 0.0);
    // At the default three-basis configuration the weighted basis sum
    // concentrates toward M, so single-ramp draws spread farther apart;
    // with one basis the sinusoid family overtakes the ramp.
    CHECK(linear.mean_pairwise_distance > fourier.mean_pairwise_distance);
    ScheduleKind single_basis = ScheduleKind::fourier_default();
    single_basis.fourier.num_bases = 1;
    const RegimeStats fourier1 = regime_stats(single_basis, 32, 9.0, 300, rng);
    CHECK(fourier1.mean_pairwise_distance > linear.mean_pairwise_distance);
}

TEST_CASE("regime stats are deterministic given the seed") {
    Rng a(77);
    Rng b(77);
    const RegimeStats sa = regime_stats(ScheduleKind::fourier_default(), 16, 5.0, 50, a);
    const RegimeStats sb = regime_stats(ScheduleKind::fourier_default(), 16, 5.0, 50, b);
    CHECK(sa.mean_total_variation == sb.mean_total_variation);
    CHECK(sa.mean_pairwise_distance == sb.mean_pairwise_distance);
}

TEST_CASE("regime stats need at least two samples") {
    Rng rng(1);
    CHECK_THROWS_AS(regime_stats(ScheduleKind::static_magnitude(), 8, 9.0, 1, rng),
                    ArgumentError);
}

TEST_CASE("affinity and diversity are the documented ratios") {
    CHECK(affinity({0.80, 0.80}) == doctest::Approx(1.0));
    CHECK(affinity({0.744, 0.80}) == doctest::Approx(0.93));
    CHECK(diversity({1.43, 1.0}) == doctest::Approx(1.43));
    CHECK(diversity({2.0, 2.0}) == doctest::Approx(1.0));
}

TEST_CASE("affinity and diversity are scale invariant") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(0.01, 1.0);
        const double b = rng.uniform(0.01, 1.0);
        const double k = rng.uniform(0.1, 10.0);
        CHECK(affinity({k * a, k * b}) == doctest::Approx(affinity({a, b})));
        CHECK(diversity({k * a, k * b}) == doctest::Approx(diversity({a, b})));
    }
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(affinity({0.5, 0.0}), ArgumentError);
    CHECK_THROWS_AS(diversity({0.5, 0.0}), ArgumentError);
    CHECK_THROWS_AS(diversity({0.5, -1.0}), ArgumentError);
}

TEST_CASE("csv rows carry the regime name and statistics") {
    RegimeStats stats;
    stats.mean_total_variation = 12.25;
    stats.mean_pairwise_distance = 3.5;
    stats.samples = 1000;
    CHECK(regime_stats_csv_header() == "regime,frames,magnitude,samples,mean_tv,mean_pairwise\n");
    CHECK(regime_stats_csv_row(ScheduleKind::fourier_default(), 32, 9.0, stats) ==
          "fourier,32,9,1000,12.25,3.5\n");
}
