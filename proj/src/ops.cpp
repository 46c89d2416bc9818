#include "dynavid/ops.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "kernels.hpp"

namespace dynavid {

namespace {

struct OpNameEntry {
    OpKind kind;
    std::string_view name;
};

constexpr std::array<OpNameEntry, kNumOpKinds> kOpNames{{
    {OpKind::ShearX, "ShearX"},
    {OpKind::ShearY, "ShearY"},
    {OpKind::TranslateX, "TranslateX"},
    {OpKind::TranslateY, "TranslateY"},
    {OpKind::Rotate, "Rotate"},
    {OpKind::AutoContrast, "AutoContrast"},
    {OpKind::Invert, "Invert"},
    {OpKind::Equalize, "Equalize"},
    {OpKind::Solarize, "Solarize"},
    {OpKind::Posterize, "Posterize"},
    {OpKind::Contrast, "Contrast"},
    {OpKind::Color, "Color"},
    {OpKind::Brightness, "Brightness"},
    {OpKind::Sharpness, "Sharpness"},
    {OpKind::DynamicScale, "DynamicScale"},
    {OpKind::DynamicColor, "DynamicColor"},
    {OpKind::DynamicRandomErase, "DynamicRandomErase"},
}};

OpDescriptor make_signed(OpKind kind, double identity, double extreme_std, double extreme_wide) {
    OpDescriptor d;
    d.kind = kind;
    d.is_signed = true;
    d.zero_param = identity;
    d.pos_param = extreme_std;
    d.neg_param = identity - (extreme_std - identity);
    d.pos_param_wide = extreme_wide;
    d.neg_param_wide = identity - (extreme_wide - identity);
    return d;
}

OpDescriptor make_parameterless(OpKind kind) {
    OpDescriptor d;
    d.kind = kind;
    d.has_param = false;
    d.has_identity = false;
    return d;
}

std::array<OpDescriptor, kNumOpKinds> build_descriptors() {
    std::array<OpDescriptor, kNumOpKinds> table{};

    auto put = [&](OpDescriptor d) { table[static_cast<std::size_t>(d.kind)] = d; };

    put(make_signed(OpKind::ShearX, 0.0, 0.3, 0.5));
    put(make_signed(OpKind::ShearY, 0.0, 0.3, 0.5));
    put(make_signed(OpKind::TranslateX, 0.0, 0.45, 0.5));
    put(make_signed(OpKind::TranslateY, 0.0, 0.45, 0.5));
    put(make_signed(OpKind::Rotate, 0.0, 30.0, 50.0));
    put(make_parameterless(OpKind::AutoContrast));
    put(make_parameterless(OpKind::Invert));
    put(make_parameterless(OpKind::Equalize));

    OpDescriptor solarize;
    solarize.kind = OpKind::Solarize;
    solarize.discrete = true;
    solarize.zero_param = 256.0;
    solarize.pos_param = solarize.pos_param_wide = 0.0;
    put(solarize);

    OpDescriptor posterize;
    posterize.kind = OpKind::Posterize;
    posterize.discrete = true;
    posterize.zero_param = 8.0;
    posterize.pos_param = 4.0;
    posterize.pos_param_wide = 2.0;
    put(posterize);

    put(make_signed(OpKind::Contrast, 1.0, 1.9, 1.99));
    put(make_signed(OpKind::Color, 1.0, 1.9, 1.99));
    put(make_signed(OpKind::Brightness, 1.0, 1.9, 1.99));
    put(make_signed(OpKind::Sharpness, 1.0, 1.9, 1.99));

    // The scale range is asymmetric about the identity, so both endpoints
    // are spelled out instead of mirrored.
    OpDescriptor scale;
    scale.kind = OpKind::DynamicScale;
    scale.is_signed = true;
    scale.zero_param = 1.0;
    scale.pos_param = 1.5;
    scale.neg_param = 0.667;
    scale.pos_param_wide = 2.0;
    scale.neg_param_wide = 0.5;
    put(scale);

    put(make_signed(OpKind::DynamicColor, 0.0, 0.1, 0.3));

    OpDescriptor erase;
    erase.kind = OpKind::DynamicRandomErase;
    erase.has_identity = false;
    erase.zero_param = 0.10;
    erase.pos_param = 0.30;
    erase.pos_param_wide = 0.60;
    put(erase);

    return table;
}

const std::array<OpDescriptor, kNumOpKinds> kDescriptors = build_descriptors();

std::atomic<bool> g_profiling_enabled{false};
std::array<std::atomic<std::uint64_t>, kNumOpKinds> g_profile_ns{};

}  // namespace

std::string_view op_name(OpKind kind) {
    return kOpNames[static_cast<std::size_t>(kind)].name;
}

std::optional<OpKind> op_from_name(std::string_view name) {
    for (const OpNameEntry& entry : kOpNames) {
        if (entry.name == name) return entry.kind;
    }
    return std::nullopt;
}

Interval OpDescriptor::param_range(bool wide) const {
    if (!has_param) return Interval{0.0, 0.0};
    const double pos = wide ? pos_param_wide : pos_param;
    if (!is_signed) {
        return Interval{std::min(zero_param, pos), std::max(zero_param, pos)};
    }
    const double neg = wide ? neg_param_wide : neg_param;
    return Interval{std::min(neg, pos), std::max(neg, pos)};
}

const OpDescriptor& descriptor(OpKind kind) {
    return kDescriptors[static_cast<std::size_t>(kind)];
}

double magnitude_to_param(const OpDescriptor& desc, double magnitude, int direction, bool wide) {
    if (!desc.has_param) return 0.0;
    const double frac = std::clamp(magnitude, 0.0, kMaxMagnitude) / kMaxMagnitude;
    double target = wide ? desc.pos_param_wide : desc.pos_param;
    if (desc.is_signed && direction < 0) {
        target = wide ? desc.neg_param_wide : desc.neg_param;
    }
    double param = desc.zero_param + frac * (target - desc.zero_param);
    if (desc.discrete) {
        param = static_cast<double>(std::lround(param));
    }
    return param;
}

nlohmann::json mapping_table_json() {
    nlohmann::json table = nlohmann::json::array();
    for (const OpDescriptor& d : kDescriptors) {
        const Interval range = d.param_range(false);
        const Interval wide = d.param_range(true);
        nlohmann::json entry{
            {"op", std::string(op_name(d.kind))},
            {"parameterless", !d.has_param},
            {"signed", d.is_signed},
            {"discrete", d.discrete},
            {"range", {range.lo, range.hi}},
            {"wide_range", {wide.lo, wide.hi}},
        };
        if (d.has_identity) {
            entry["identity"] = d.zero_param;
        } else {
            entry["identity"] = nullptr;
        }
        table.push_back(std::move(entry));
    }
    return table;
}

Frame apply(const OpDescriptor& desc, const Frame& frame, double param,
            const std::optional<EraseRegion>& region) {
    if (!std::isfinite(param)) {
        throw ArgumentError("op parameter must be finite");
    }
    switch (desc.kind) {
        case OpKind::ShearX: return kernels::shear_x(frame, param);
        case OpKind::ShearY: return kernels::shear_y(frame, param);
        case OpKind::TranslateX: return kernels::translate_x(frame, param);
        case OpKind::TranslateY: return kernels::translate_y(frame, param);
        case OpKind::Rotate: return kernels::rotate(frame, param);
        case OpKind::AutoContrast: return kernels::autocontrast(frame);
        case OpKind::Invert: return kernels::invert(frame);
        case OpKind::Equalize: return kernels::equalize(frame);
        case OpKind::Solarize: return kernels::solarize(frame, static_cast<int>(param));
        case OpKind::Posterize: return kernels::posterize(frame, static_cast<int>(param));
        case OpKind::Contrast: return kernels::contrast(frame, param);
        case OpKind::Color: return kernels::color(frame, param);
        case OpKind::Brightness: return kernels::brightness(frame, param);
        case OpKind::Sharpness: return kernels::sharpness(frame, param);
        case OpKind::DynamicScale: return kernels::dynamic_scale(frame, param);
        case OpKind::DynamicColor: return kernels::dynamic_color(frame, param);
        case OpKind::DynamicRandomErase: {
            if (!region.has_value()) {
                throw ArgumentError("DynamicRandomErase requires an erase region");
            }
            if (region->center_x < 0 || region->center_x >= frame.width ||
                region->center_y < 0 || region->center_y >= frame.height) {
                throw ArgumentError("erase region centre must lie inside the frame");
            }
            return kernels::dynamic_random_erase(frame, param, *region);
        }
    }
    throw ArgumentError("unknown op kind");
}

Clip apply_scheduled(const OpDescriptor& desc, const Clip& clip, const Schedule& schedule,
                     int direction, bool wide, const std::optional<EraseRegion>& region) {
    clip.validate();
    if (schedule.length() != clip.frame_count()) {
        throw ArgumentError("schedule length " + std::to_string(schedule.length()) +
                            " does not match clip frame count " +
                            std::to_string(clip.frame_count()));
    }
    const auto start = std::chrono::steady_clock::now();

    Clip out;
    out.source_id = clip.source_id;
    out.frames.reserve(clip.frames.size());
    for (int t = 0; t < clip.frame_count(); ++t) {
        const double param = magnitude_to_param(
            desc, schedule.values[static_cast<std::size_t>(t)], direction, wide);
        out.frames.push_back(
            apply(desc, clip.frames[static_cast<std::size_t>(t)], param, region));
    }

    if (g_profiling_enabled.load(std::memory_order_relaxed)) {
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        g_profile_ns[static_cast<std::size_t>(desc.kind)].fetch_add(
            static_cast<std::uint64_t>(ns), std::memory_order_relaxed);
    }
    return out;
}

namespace profiling {

void enable(bool on) { g_profiling_enabled.store(on, std::memory_order_relaxed); }

void reset() {
    for (auto& counter : g_profile_ns) counter.store(0, std::memory_order_relaxed);
}

std::array<std::uint64_t, kNumOpKinds> snapshot_ns() {
    std::array<std::uint64_t, kNumOpKinds> out{};
    for (int i = 0; i < kNumOpKinds; ++i) {
        out[static_cast<std::size_t>(i)] =
            g_profile_ns[static_cast<std::size_t>(i)].load(std::memory_order_relaxed);
    }
    return out;
}

}  // namespace profiling

}  // namespace dynavid
