#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dynavid/rng.hpp"

namespace dynavid {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    double width() const { return hi - lo; }
};

/// One sinusoidal basis of a sampled schedule: weight on the Dirichlet
/// simplex, frequency in cycles per (T-1)-sample window, amplitude as a
/// fraction of the base magnitude, and an integer sample offset.
struct FourierBasis {
    double weight = 0.0;
    double frequency = 1.0;
    double amplitude = 0.0;
    int offset = 0;
};

struct FourierConfig {
    int num_bases = 3;
    Interval freq_range{0.2, 1.5};
    Interval amp_range{0.0, 1.0};
    bool offsets_enabled = true;
};

/// Throws ConfigError unless num_bases >= 1, freq_range.lo > 0,
/// freq_range.lo <= freq_range.hi and amp_range is inside [0, 1].
void validate(const FourierConfig& cfg);

/// A per-frame magnitude array. `bases` records the draw that produced a
/// sampled schedule so the exact array can be rebuilt later; it is empty
/// for schedules that are not basis sums.
struct Schedule {
    std::vector<double> values;
    double base_magnitude = 0.0;
    std::vector<FourierBasis> bases;

    int length() const { return static_cast<int>(values.size()); }
};

enum class ScheduleFamily {
    Static,
    Linear,
    Sinusoidal,
    RandomPerFrame,
    RandomGaussianSmoothed,
    Fourier,
};

/// ScheduleFamily plus the knobs each family reads. `fourier.amp_range`
/// doubles as the amplitude pool for the baseline families, and
/// `fourier.offsets_enabled` is the Linear/Sinusoidal phase-shift toggle.
struct ScheduleKind {
    ScheduleFamily family = ScheduleFamily::Fourier;
    FourierConfig fourier;
    int kernel_width = 5;  // Gaussian smoothing window, odd widths recommended

    static ScheduleKind static_magnitude();
    static ScheduleKind linear(bool with_offset = true);
    static ScheduleKind sinusoidal(bool with_offset = true);
    static ScheduleKind random_per_frame();
    static ScheduleKind random_gaussian(int kernel_width = 5);
    static ScheduleKind fourier_default();
};

const char* schedule_family_name(ScheduleFamily family);

/// Deterministic composition of sinusoidal bases:
///
///   s_b[t] = sin(2 * f_b * pi * k_t / (T - 1)),  k_t = o_b + 1 + t
///
/// (denominator 1 when T == 1), each basis min-max normalized into
/// [M - M*A_b, M + M*A_b] (constant M when the raw basis is flat), then
/// summed with the basis weights.
Schedule fourier_schedule_from_bases(int frames, double magnitude,
                                     const std::vector<FourierBasis>& bases);

/// Samples basis weights from Dirichlet(1.0) over cfg.num_bases components,
/// then per basis a frequency from cfg.freq_range, an amplitude from
/// cfg.amp_range and an integer offset from [0, T-1] (0 when offsets are
/// disabled), and composes them with fourier_schedule_from_bases.
Schedule sample_fourier_schedule(int frames, double magnitude, const FourierConfig& cfg, Rng& rng);

/// Deterministic ramp spanning [M(1-A), M(1+A)] across T frames, optionally
/// reversed, then rotated left by `offset` samples with wrap-around.
Schedule linear_schedule(int frames, double magnitude, double amplitude, bool ascending,
                         int offset);

/// Samples one schedule of the requested family. Draw order per family:
///   Linear          -> amplitude, orientation, offset (offset only when enabled)
///   Sinusoidal      -> Fourier draw with num_bases = 1 and freq_range = [1, 1]
///   RandomPerFrame  -> amplitude, then T per-frame uniforms
///   RandomGaussian  -> as RandomPerFrame, then smoothed and renormalized
///   Fourier         -> see sample_fourier_schedule
Schedule sample_schedule(const ScheduleKind& kind, int frames, double magnitude, Rng& rng);

/// Sum of absolute frame-to-frame differences; 0 for single-frame schedules.
double total_variation(const Schedule& schedule);

/// CSV rows "index,magnitude" with 9 significant digits, one per frame.
std::string schedule_to_csv(const Schedule& schedule);

void to_json(nlohmann::json& j, const FourierBasis& basis);
void from_json(const nlohmann::json& j, FourierBasis& basis);
void to_json(nlohmann::json& j, const Schedule& schedule);
void from_json(const nlohmann::json& j, Schedule& schedule);

}  // namespace dynavid
