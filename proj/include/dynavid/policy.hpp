#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dynavid/ops.hpp"
#include "dynavid/signal.hpp"

namespace dynavid {

/// Candidate op pools. Org holds the 14 classic image ops at standard
/// ranges, Mod adds the 3 video ops, Wide switches the classic pool to wide
/// ranges, WideMod is Wide plus the video ops at wide ranges.
enum class SearchSpace { Org, Mod, Wide, WideMod };

std::span<const OpKind> ops_in_space(SearchSpace space);
bool space_is_wide(SearchSpace space);
const char* search_space_name(SearchSpace space);
std::optional<SearchSpace> search_space_from_name(std::string_view name);

enum class PolicyFamily { RandAugment, TrivialAugment, UniformAugment };

const char* policy_family_name(PolicyFamily family);
std::optional<PolicyFamily> policy_family_from_name(std::string_view name);

/// A sampler configuration: which family draws the per-clip steps, over
/// which space, and whether step magnitudes stay constant over the clip
/// (static) or follow a sampled schedule (dynamic).
struct Policy {
    PolicyFamily family = PolicyFamily::RandAugment;
    int num_ops = 2;           // RandAugment / UniformAugment step count
    double magnitude = 9.0;    // RandAugment static magnitude
    double probability = 1.0;  // RandAugment per-clip apply probability
    SearchSpace space = SearchSpace::Org;
    bool dynamic = false;
    ScheduleKind schedule_kind;

    void validate() const;
};

/// One realized augmentation step for a specific clip.
struct AppliedStep {
    OpKind op = OpKind::ShearX;
    bool applied = true;
    int direction = 1;
    double magnitude = 0.0;
    Schedule schedule;
    std::optional<EraseRegion> region;
};

/// A concrete per-clip draw: the full record needed to replay one
/// augmentation bit-exactly.
struct AppliedPolicy {
    PolicyFamily family = PolicyFamily::RandAugment;
    SearchSpace space = SearchSpace::Org;
    bool dynamic = false;
    std::uint64_t seed = 0;
    std::vector<AppliedStep> steps;
};

/// Draws one AppliedPolicy for a clip of `frames` frames of `width` x
/// `height` pixels. The per-step decisions (op, gate, direction, magnitude,
/// erase region) come from one stream seeded with `seed` and the schedules
/// from a second stream derived from it, so a dynamic draw makes exactly
/// the same decisions as the static draw under the same seed.
AppliedPolicy sample_policy(const Policy& policy, int frames, int width, int height,
                            std::uint64_t seed);

/// Applies the realized steps in order; steps with applied == false are
/// skipped for the whole clip.
Clip apply_policy(const AppliedPolicy& applied, const Clip& clip);

void to_json(nlohmann::json& j, const AppliedPolicy& applied);
void from_json(const nlohmann::json& j, AppliedPolicy& applied);

}  // namespace dynavid
