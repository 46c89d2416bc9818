#include "dynavid/policy.hpp"

#include <algorithm>
#include <array>
#include <string>

#include <nlohmann/json.hpp>

#include "dynavid/errors.hpp"
#include "dynavid/rng.hpp"

namespace dynavid {

namespace {

constexpr std::array<OpKind, kNumClassicOps> kClassicOps{
    OpKind::ShearX,     OpKind::ShearY,   OpKind::TranslateX, OpKind::TranslateY,
    OpKind::Rotate,     OpKind::AutoContrast, OpKind::Invert, OpKind::Equalize,
    OpKind::Solarize,   OpKind::Posterize, OpKind::Contrast,  OpKind::Color,
    OpKind::Brightness, OpKind::Sharpness,
};

constexpr std::array<OpKind, kNumOpKinds> kExtendedOps{
    OpKind::ShearX,     OpKind::ShearY,   OpKind::TranslateX, OpKind::TranslateY,
    OpKind::Rotate,     OpKind::AutoContrast, OpKind::Invert, OpKind::Equalize,
    OpKind::Solarize,   OpKind::Posterize, OpKind::Contrast,  OpKind::Color,
    OpKind::Brightness, OpKind::Sharpness, OpKind::DynamicScale, OpKind::DynamicColor,
    OpKind::DynamicRandomErase,
};

// Keeps the gate draw aligned between static and dynamic runs: the schedule
// stream is always split off first, whether or not it ends up used.
constexpr std::uint64_t kScheduleStreamSalt = 0x9e3779b97f4a7c15ULL;

AppliedStep sample_step(const Policy& policy, OpKind op, bool applied, double magnitude,
                        int frames, int width, int height, Rng& decisions, Rng& schedules) {
    AppliedStep step;
    step.op = op;
    step.applied = applied;
    step.magnitude = magnitude;

    const OpDescriptor& desc = descriptor(op);
    step.direction = desc.is_signed ? (decisions.bernoulli(0.5) ? 1 : -1) : 1;

    if (op == OpKind::DynamicRandomErase) {
        EraseRegion region;
        region.center_x = static_cast<int>(decisions.uniform_int(0, width - 1));
        region.center_y = static_cast<int>(decisions.uniform_int(0, height - 1));
        region.aspect = decisions.uniform(1.0 / 3.0, 3.0);
        step.region = region;
    }

    if (!desc.has_param || !policy.dynamic) {
        step.schedule.base_magnitude = magnitude;
        step.schedule.values.assign(static_cast<std::size_t>(frames), magnitude);
    } else {
        step.schedule = sample_schedule(policy.schedule_kind, frames, magnitude, schedules);
    }
    return step;
}

}  // namespace

std::span<const OpKind> ops_in_space(SearchSpace space) {
    switch (space) {
        case SearchSpace::Org:
        case SearchSpace::Wide:
            return {kClassicOps.data(), kClassicOps.size()};
        case SearchSpace::Mod:
        case SearchSpace::WideMod:
            return {kExtendedOps.data(), kExtendedOps.size()};
    }
    return {};
}

bool space_is_wide(SearchSpace space) {
    return space == SearchSpace::Wide || space == SearchSpace::WideMod;
}

const char* search_space_name(SearchSpace space) {
    switch (space) {
        case SearchSpace::Org: return "org";
        case SearchSpace::Mod: return "mod";
        case SearchSpace::Wide: return "wide";
        case SearchSpace::WideMod: return "wide-mod";
    }
    return "unknown";
}

std::optional<SearchSpace> search_space_from_name(std::string_view name) {
    if (name == "org") return SearchSpace::Org;
    if (name == "mod") return SearchSpace::Mod;
    if (name == "wide") return SearchSpace::Wide;
    if (name == "wide-mod") return SearchSpace::WideMod;
    return std::nullopt;
}

const char* policy_family_name(PolicyFamily family) {
    switch (family) {
        case PolicyFamily::RandAugment: return "ra";
        case PolicyFamily::TrivialAugment: return "ta";
        case PolicyFamily::UniformAugment: return "ua";
    }
    return "unknown";
}

std::optional<PolicyFamily> policy_family_from_name(std::string_view name) {
    if (name == "ra") return PolicyFamily::RandAugment;
    if (name == "ta") return PolicyFamily::TrivialAugment;
    if (name == "ua") return PolicyFamily::UniformAugment;
    return std::nullopt;
}

void Policy::validate() const {
    if (ops_in_space(space).empty()) {
        throw ConfigError("search space has no operations");
    }
    if (family != PolicyFamily::TrivialAugment && num_ops < 1) {
        throw ConfigError("policy step count must be at least 1");
    }
    if (family == PolicyFamily::RandAugment) {
        if (magnitude < 0.0 || magnitude > kMaxMagnitude) {
            throw ConfigError("magnitude must lie in [0, 30]");
        }
        if (probability < 0.0 || probability > 1.0) {
            throw ConfigError("probability must lie in [0, 1]");
        }
    }
    if (dynamic) {
        dynavid::validate(schedule_kind.fourier);
    }
}

AppliedPolicy sample_policy(const Policy& policy, int frames, int width, int height,
                            std::uint64_t seed) {
    policy.validate();
    if (frames < 1) {
        throw ArgumentError("frame count must be at least 1");
    }
    if (width < 1 || height < 1) {
        throw ArgumentError("frame dimensions must be positive");
    }

    Rng decisions(seed);
    Rng schedules(decisions.next_u64() ^ kScheduleStreamSalt);

    const std::span<const OpKind> pool = ops_in_space(policy.space);
    auto draw_op = [&]() {
        return pool[static_cast<std::size_t>(
            decisions.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
    };

    AppliedPolicy applied;
    applied.family = policy.family;
    applied.space = policy.space;
    applied.dynamic = policy.dynamic;
    applied.seed = seed;

    switch (policy.family) {
        case PolicyFamily::RandAugment:
            for (int i = 0; i < policy.num_ops; ++i) {
                const OpKind op = draw_op();
                const bool gate = decisions.bernoulli(policy.probability);
                applied.steps.push_back(sample_step(policy, op, gate, policy.magnitude, frames,
                                                    width, height, decisions, schedules));
            }
            break;
        case PolicyFamily::TrivialAugment: {
            const OpKind op = draw_op();
            const double magnitude = static_cast<double>(decisions.uniform_int(0, 30));
            applied.steps.push_back(sample_step(policy, op, true, magnitude, frames, width,
                                                height, decisions, schedules));
            break;
        }
        case PolicyFamily::UniformAugment:
            for (int i = 0; i < policy.num_ops; ++i) {
                const OpKind op = draw_op();
                const double gate_probability = decisions.uniform();
                const bool gate = decisions.bernoulli(gate_probability);
                const double magnitude = decisions.uniform(0.0, kMaxMagnitude);
                applied.steps.push_back(sample_step(policy, op, gate, magnitude, frames, width,
                                                    height, decisions, schedules));
            }
            break;
    }
    return applied;
}

Clip apply_policy(const AppliedPolicy& applied, const Clip& clip) {
    clip.validate();
    for (const AppliedStep& step : applied.steps) {
        if (step.schedule.length() != clip.frame_count()) {
            throw ArgumentError("applied policy schedules expect " +
                                std::to_string(step.schedule.length()) + " frames, clip has " +
                                std::to_string(clip.frame_count()));
        }
    }
    Clip out = clip;
    const bool wide = space_is_wide(applied.space);
    for (const AppliedStep& step : applied.steps) {
        if (!step.applied) continue;
        out = apply_scheduled(descriptor(step.op), out, step.schedule, step.direction, wide,
                              step.region);
    }
    return out;
}

void to_json(nlohmann::json& j, const AppliedPolicy& applied) {
    j = nlohmann::json{{"family", policy_family_name(applied.family)},
                       {"space", search_space_name(applied.space)},
                       {"dynamic", applied.dynamic},
                       {"seed", applied.seed},
                       {"steps", nlohmann::json::array()}};
    for (const AppliedStep& step : applied.steps) {
        nlohmann::json s{{"op", std::string(op_name(step.op))},
                         {"applied", step.applied},
                         {"direction", step.direction},
                         {"magnitude", step.magnitude},
                         {"schedule", step.schedule}};
        if (step.region.has_value()) {
            s["region"] = {{"center_x", step.region->center_x},
                           {"center_y", step.region->center_y},
                           {"aspect", step.region->aspect},
                           {"fill", step.region->fill}};
        }
        j["steps"].push_back(std::move(s));
    }
}

void from_json(const nlohmann::json& j, AppliedPolicy& applied) {
    const auto family = policy_family_from_name(j.at("family").get<std::string>());
    const auto space = search_space_from_name(j.at("space").get<std::string>());
    if (!family || !space) {
        throw FormatError("applied policy record names an unknown family or space");
    }
    applied.family = *family;
    applied.space = *space;
    applied.dynamic = j.at("dynamic").get<bool>();
    applied.seed = j.at("seed").get<std::uint64_t>();
    applied.steps.clear();
    for (const nlohmann::json& s : j.at("steps")) {
        AppliedStep step;
        const auto op = op_from_name(s.at("op").get<std::string>());
        if (!op) {
            throw FormatError("applied policy record names an unknown op");
        }
        step.op = *op;
        step.applied = s.at("applied").get<bool>();
        step.direction = s.at("direction").get<int>();
        step.magnitude = s.at("magnitude").get<double>();
        step.schedule = s.at("schedule").get<Schedule>();
        if (s.contains("region")) {
            EraseRegion region;
            region.center_x = s["region"].at("center_x").get<int>();
            region.center_y = s["region"].at("center_y").get<int>();
            region.aspect = s["region"].at("aspect").get<double>();
            const auto fill = s["region"].at("fill").get<std::vector<std::uint8_t>>();
            if (fill.size() != 3) {
                throw FormatError("erase region fill must have 3 channels");
            }
            std::copy(fill.begin(), fill.end(), region.fill.begin());
            step.region = region;
        }
        applied.steps.push_back(std::move(step));
    }
}

}  // namespace dynavid
