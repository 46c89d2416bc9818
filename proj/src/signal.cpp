#include "dynavid/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "dynavid/errors.hpp"

namespace dynavid {

namespace {

void check_frames(int frames) {
    if (frames < 1) {
        throw ArgumentError("schedule length must be at least 1, got " + std::to_string(frames));
    }
}

void check_magnitude(double magnitude) {
    if (!(magnitude >= 0.0)) {
        throw ArgumentError("base magnitude must be non-negative, got " +
                            std::to_string(magnitude));
    }
}

// Min-max normalizes `raw` into [M - M*A, M + M*A]; a flat signal collapses
// to the constant M.
std::vector<double> normalize_basis(const std::vector<double>& raw, double magnitude,
                                    double amplitude) {
    const auto [mn_it, mx_it] = std::minmax_element(raw.begin(), raw.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    std::vector<double> out(raw.size());
    if (mx > mn) {
        const double lo = magnitude - magnitude * amplitude;
        const double span = 2.0 * magnitude * amplitude;
        for (std::size_t t = 0; t < raw.size(); ++t) {
            out[t] = lo + (raw[t] - mn) * span / (mx - mn);
        }
    } else {
        std::fill(out.begin(), out.end(), magnitude);
    }
    return out;
}

std::vector<double> gaussian_smooth(const std::vector<double>& values, int kernel_width) {
    const int n = static_cast<int>(values.size());
    const int half = kernel_width / 2;
    if (half == 0 || n == 1) {
        return values;
    }
    const double sigma = std::max(half, 1) / 2.0;
    std::vector<double> kernel(2 * half + 1);
    for (int j = -half; j <= half; ++j) {
        kernel[j + half] = std::exp(-(j * j) / (2.0 * sigma * sigma));
    }
    std::vector<double> out(values.size());
    for (int t = 0; t < n; ++t) {
        double acc = 0.0;
        double wsum = 0.0;
        // Truncate at the clip boundaries and renormalize.
        for (int j = -half; j <= half; ++j) {
            const int src = t + j;
            if (src < 0 || src >= n) continue;
            acc += kernel[j + half] * values[src];
            wsum += kernel[j + half];
        }
        out[t] = acc / wsum;
    }
    return out;
}

}  // namespace

void validate(const FourierConfig& cfg) {
    if (cfg.num_bases < 1) {
        throw ConfigError("num_bases must be at least 1, got " + std::to_string(cfg.num_bases));
    }
    if (!(cfg.freq_range.lo > 0.0) || cfg.freq_range.lo > cfg.freq_range.hi) {
        throw ConfigError("frequency range must satisfy 0 < lo <= hi");
    }
    if (cfg.amp_range.lo < 0.0 || cfg.amp_range.lo > cfg.amp_range.hi || cfg.amp_range.hi > 1.0) {
        throw ConfigError("amplitude range must be inside [0, 1] with lo <= hi");
    }
}

ScheduleKind ScheduleKind::static_magnitude() {
    ScheduleKind kind;
    kind.family = ScheduleFamily::Static;
    return kind;
}

ScheduleKind ScheduleKind::linear(bool with_offset) {
    ScheduleKind kind;
    kind.family = ScheduleFamily::Linear;
    kind.fourier.offsets_enabled = with_offset;
    return kind;
}

ScheduleKind ScheduleKind::sinusoidal(bool with_offset) {
    ScheduleKind kind;
    kind.family = ScheduleFamily::Sinusoidal;
    kind.fourier.offsets_enabled = with_offset;
    return kind;
}

ScheduleKind ScheduleKind::random_per_frame() {
    ScheduleKind kind;
    kind.family = ScheduleFamily::RandomPerFrame;
    return kind;
}

ScheduleKind ScheduleKind::random_gaussian(int kernel_width) {
    ScheduleKind kind;
    kind.family = ScheduleFamily::RandomGaussianSmoothed;
    kind.kernel_width = kernel_width;
    return kind;
}

ScheduleKind ScheduleKind::fourier_default() { return ScheduleKind{}; }

const char* schedule_family_name(ScheduleFamily family) {
    switch (family) {
        case ScheduleFamily::Static: return "static";
        case ScheduleFamily::Linear: return "linear";
        case ScheduleFamily::Sinusoidal: return "sine";
        case ScheduleFamily::RandomPerFrame: return "random";
        case ScheduleFamily::RandomGaussianSmoothed: return "random-gauss";
        case ScheduleFamily::Fourier: return "fourier";
    }
    return "unknown";
}

Schedule fourier_schedule_from_bases(int frames, double magnitude,
                                     const std::vector<FourierBasis>& bases) {
    check_frames(frames);
    check_magnitude(magnitude);
    if (bases.empty()) {
        throw ArgumentError("basis list must not be empty");
    }

    Schedule schedule;
    schedule.base_magnitude = magnitude;
    schedule.bases = bases;
    // Accumulating weighted deviations from M (rather than w_b * norm_b
    // directly) keeps a zero-amplitude draw exactly equal to M even though
    // the sampled weights only sum to 1 up to rounding.
    schedule.values.assign(static_cast<std::size_t>(frames), magnitude);

    const double denom = frames > 1 ? static_cast<double>(frames - 1) : 1.0;
    std::vector<double> raw(static_cast<std::size_t>(frames));
    for (const FourierBasis& basis : bases) {
        // k runs over the slice [o+1, o+T] of the sample grid [1, ..., 2T].
        for (int t = 0; t < frames; ++t) {
            const double k = static_cast<double>(basis.offset + 1 + t);
            raw[static_cast<std::size_t>(t)] =
                std::sin(2.0 * basis.frequency * std::numbers::pi * k / denom);
        }
        const std::vector<double> normed = normalize_basis(raw, magnitude, basis.amplitude);
        for (int t = 0; t < frames; ++t) {
            schedule.values[static_cast<std::size_t>(t)] +=
                basis.weight * (normed[static_cast<std::size_t>(t)] - magnitude);
        }
    }
    // Rounding in the weighted sum can undershoot zero by ~1e-16 when a
    // full-amplitude basis bottoms out at 0; magnitudes stay non-negative.
    for (double& v : schedule.values) v = std::max(0.0, v);
    return schedule;
}

Schedule sample_fourier_schedule(int frames, double magnitude, const FourierConfig& cfg,
                                 Rng& rng) {
    validate(cfg);
    check_frames(frames);
    check_magnitude(magnitude);

    // Dirichlet(1.0) via normalized exponentials.
    std::vector<double> weights(static_cast<std::size_t>(cfg.num_bases));
    double sum = 0.0;
    for (double& w : weights) {
        w = rng.exponential();
        sum += w;
    }
    if (sum <= 0.0) {
        std::fill(weights.begin(), weights.end(), 1.0 / cfg.num_bases);
    } else {
        for (double& w : weights) w /= sum;
    }

    std::vector<FourierBasis> bases(static_cast<std::size_t>(cfg.num_bases));
    for (int b = 0; b < cfg.num_bases; ++b) {
        FourierBasis& basis = bases[static_cast<std::size_t>(b)];
        basis.weight = weights[static_cast<std::size_t>(b)];
        basis.frequency = rng.uniform(cfg.freq_range.lo, cfg.freq_range.hi);
        basis.amplitude = rng.uniform(cfg.amp_range.lo, cfg.amp_range.hi);
        basis.offset = cfg.offsets_enabled ? static_cast<int>(rng.uniform_int(0, frames - 1)) : 0;
    }
    return fourier_schedule_from_bases(frames, magnitude, bases);
}

Schedule linear_schedule(int frames, double magnitude, double amplitude, bool ascending,
                         int offset) {
    check_frames(frames);
    check_magnitude(magnitude);

    Schedule schedule;
    schedule.base_magnitude = magnitude;
    schedule.values.assign(static_cast<std::size_t>(frames), magnitude);
    if (frames == 1) {
        return schedule;
    }
    const double lo = magnitude * (1.0 - amplitude);
    const double step = 2.0 * magnitude * amplitude / static_cast<double>(frames - 1);
    for (int t = 0; t < frames; ++t) {
        const int pos = (t + offset) % frames;
        const double along = ascending ? pos : frames - 1 - pos;
        schedule.values[static_cast<std::size_t>(t)] = lo + step * along;
    }
    return schedule;
}

Schedule sample_schedule(const ScheduleKind& kind, int frames, double magnitude, Rng& rng) {
    check_frames(frames);
    check_magnitude(magnitude);

    switch (kind.family) {
        case ScheduleFamily::Static: {
            Schedule schedule;
            schedule.base_magnitude = magnitude;
            schedule.values.assign(static_cast<std::size_t>(frames), magnitude);
            return schedule;
        }
        case ScheduleFamily::Linear: {
            const Interval amp = kind.fourier.amp_range;
            const double amplitude = rng.uniform(amp.lo, amp.hi);
            const bool ascending = rng.bernoulli(0.5);
            const int offset = kind.fourier.offsets_enabled
                                   ? static_cast<int>(rng.uniform_int(0, frames - 1))
                                   : 0;
            return linear_schedule(frames, magnitude, amplitude, ascending, offset);
        }
        case ScheduleFamily::Sinusoidal: {
            FourierConfig cfg = kind.fourier;
            cfg.num_bases = 1;
            cfg.freq_range = Interval{1.0, 1.0};
            return sample_fourier_schedule(frames, magnitude, cfg, rng);
        }
        case ScheduleFamily::RandomPerFrame:
        case ScheduleFamily::RandomGaussianSmoothed: {
            const Interval amp = kind.fourier.amp_range;
            const double amplitude = rng.uniform(amp.lo, amp.hi);
            const double lo = magnitude * (1.0 - amplitude);
            const double hi = magnitude * (1.0 + amplitude);
            Schedule schedule;
            schedule.base_magnitude = magnitude;
            schedule.values.resize(static_cast<std::size_t>(frames));
            for (double& v : schedule.values) v = rng.uniform(lo, hi);
            if (kind.family == ScheduleFamily::RandomGaussianSmoothed) {
                std::vector<double> smooth = gaussian_smooth(schedule.values, kind.kernel_width);
                const auto [mn_it, mx_it] = std::minmax_element(smooth.begin(), smooth.end());
                if (*mx_it > *mn_it) {
                    for (double& v : smooth) {
                        v = lo + (v - *mn_it) * (hi - lo) / (*mx_it - *mn_it);
                    }
                } else {
                    std::fill(smooth.begin(), smooth.end(), magnitude);
                }
                schedule.values = std::move(smooth);
            }
            return schedule;
        }
        case ScheduleFamily::Fourier:
            return sample_fourier_schedule(frames, magnitude, kind.fourier, rng);
    }
    throw ArgumentError("unknown schedule family");
}

double total_variation(const Schedule& schedule) {
    double tv = 0.0;
    for (std::size_t t = 1; t < schedule.values.size(); ++t) {
        tv += std::abs(schedule.values[t] - schedule.values[t - 1]);
    }
    return tv;
}

std::string schedule_to_csv(const Schedule& schedule) {
    std::string out;
    char row[64];
    for (std::size_t t = 0; t < schedule.values.size(); ++t) {
        std::snprintf(row, sizeof(row), "%zu,%.9g\n", t, schedule.values[t]);
        out += row;
    }
    return out;
}

void to_json(nlohmann::json& j, const FourierBasis& basis) {
    j = nlohmann::json{{"weight", basis.weight},
                       {"frequency", basis.frequency},
                       {"amplitude", basis.amplitude},
                       {"offset", basis.offset}};
}

void from_json(const nlohmann::json& j, FourierBasis& basis) {
    j.at("weight").get_to(basis.weight);
    j.at("frequency").get_to(basis.frequency);
    j.at("amplitude").get_to(basis.amplitude);
    j.at("offset").get_to(basis.offset);
}

void to_json(nlohmann::json& j, const Schedule& schedule) {
    j = nlohmann::json{{"base_magnitude", schedule.base_magnitude},
                       {"values", schedule.values}};
    j["bases"] = schedule.bases;
}

void from_json(const nlohmann::json& j, Schedule& schedule) {
    j.at("base_magnitude").get_to(schedule.base_magnitude);
    j.at("values").get_to(schedule.values);
    schedule.bases = j.value("bases", std::vector<FourierBasis>{});
}

}  // namespace dynavid
