#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynavid/image.hpp"
#include "dynavid/policy.hpp"

namespace dynavid {

struct RunConfig {
    Policy policy;
    std::uint64_t master_seed = 0;
    int workers = 1;
};

/// Stable per-clip seed: FNV-1a over the source id folded into the master
/// seed, finished with a splitmix64 mix. Depends only on the two inputs,
/// never on batch order or worker scheduling.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view source_id);

struct AugmentResult {
    Clip clip;
    AppliedPolicy policy;
};

/// Samples a policy for the clip with the given seed and applies it.
AugmentResult augment_clip(const Clip& clip, const Policy& policy, std::uint64_t seed);

struct BatchItem {
    std::size_t index = 0;
    std::optional<AugmentResult> result;
    std::string error;  // non-empty when the item failed

    bool ok() const { return result.has_value(); }
};

/// Augments every clip with its derived seed. Results come back in input
/// order and are identical for any worker count; per-clip failures are
/// reported on the item without aborting the batch. Throws ArgumentError on
/// an empty batch.
std::vector<BatchItem> augment_batch(const std::vector<Clip>& clips, const RunConfig& config);

/// Runs fn(0..count-1) on `workers` threads. Exceptions escape to the
/// caller; body order within a worker is index-ascending chunks.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace dynavid
