#include "dynavid/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "dynavid/errors.hpp"

namespace dynavid {

RegimeStats regime_stats(const ScheduleKind& kind, int frames, double magnitude, int n_samples,
                         Rng& rng) {
    if (n_samples < 2) {
        throw ArgumentError("regime statistics need at least 2 samples");
    }

    std::vector<Schedule> schedules;
    schedules.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        schedules.push_back(sample_schedule(kind, frames, magnitude, rng));
    }

    RegimeStats stats;
    stats.samples = n_samples;
    for (const Schedule& s : schedules) {
        stats.mean_total_variation += total_variation(s);
    }
    stats.mean_total_variation /= n_samples;

    const double norm = std::sqrt(static_cast<double>(frames));
    double pair_sum = 0.0;
    std::size_t pair_count = 0;
    for (std::size_t i = 0; i < schedules.size(); ++i) {
        for (std::size_t j = i + 1; j < schedules.size(); ++j) {
            double sq = 0.0;
            for (int t = 0; t < frames; ++t) {
                const double d = schedules[i].values[static_cast<std::size_t>(t)] -
                                 schedules[j].values[static_cast<std::size_t>(t)];
                sq += d * d;
            }
            pair_sum += std::sqrt(sq) / norm;
            ++pair_count;
        }
    }
    stats.mean_pairwise_distance = pair_sum / static_cast<double>(pair_count);
    return stats;
}

std::string regime_stats_csv_header() {
    return "regime,frames,magnitude,samples,mean_tv,mean_pairwise\n";
}

std::string regime_stats_csv_row(const ScheduleKind& kind, int frames, double magnitude,
                                 const RegimeStats& stats) {
    char row[160];
    std::snprintf(row, sizeof(row), "%s,%d,%.9g,%d,%.9g,%.9g\n",
                  schedule_family_name(kind.family), frames, magnitude, stats.samples,
                  stats.mean_total_variation, stats.mean_pairwise_distance);
    return row;
}

double affinity(const AffinityInput& input) {
    if (!(input.accuracy_on_clean_val > 0.0)) {
        throw ArgumentError("clean validation accuracy must be positive");
    }
    return input.accuracy_on_augmented_val / input.accuracy_on_clean_val;
}

double diversity(const DiversityInput& input) {
    if (!(input.final_train_loss_clean > 0.0)) {
        throw ArgumentError("clean training loss must be positive");
    }
    return input.final_train_loss_augmented / input.final_train_loss_clean;
}

}  // namespace dynavid
