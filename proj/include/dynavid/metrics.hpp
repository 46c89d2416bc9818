#pragma once

#include <string>

#include "dynavid/rng.hpp"
#include "dynavid/signal.hpp"

namespace dynavid {

/// Sampled statistics of one schedule regime: how jagged the schedules are
/// (mean total variation) and how far apart independent draws land (mean
/// pairwise L2 distance, normalized by sqrt(T) so clip lengths compare).
struct RegimeStats {
    double mean_total_variation = 0.0;
    double mean_pairwise_distance = 0.0;
    int samples = 0;
};

/// Draws n_samples schedules of the given kind and reduces them to
/// RegimeStats. Throws ArgumentError for n_samples < 2.
RegimeStats regime_stats(const ScheduleKind& kind, int frames, double magnitude, int n_samples,
                         Rng& rng);

/// CSV header and row for the report output:
/// regime,frames,magnitude,samples,mean_tv,mean_pairwise.
std::string regime_stats_csv_header();
std::string regime_stats_csv_row(const ScheduleKind& kind, int frames, double magnitude,
                                 const RegimeStats& stats);

struct AffinityInput {
    double accuracy_on_augmented_val = 0.0;
    double accuracy_on_clean_val = 0.0;
};

struct DiversityInput {
    double final_train_loss_augmented = 0.0;
    double final_train_loss_clean = 0.0;
};

/// Validation-accuracy ratio augmented/clean. Throws ArgumentError on a
/// non-positive clean accuracy.
double affinity(const AffinityInput& input);

/// Final-training-loss ratio augmented/clean. Throws ArgumentError on a
/// non-positive clean loss.
double diversity(const DiversityInput& input);

}  // namespace dynavid
