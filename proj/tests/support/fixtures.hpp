#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include "dynavid/image.hpp"
#include "dynavid/rng.hpp"

namespace fixtures {

// 99th-percentile chi-square quantiles used by the distribution tests.
inline constexpr double kChi2_99_df1 = 6.6349;
inline constexpr double kChi2_99_df13 = 27.6882;
inline constexpr double kChi2_99_df16 = 31.9999;
inline constexpr double kChi2_99_df30 = 50.8922;

/// The fixed 17x13 pattern every kernel golden is computed on. Mixes three
/// integer lattices so all channels cover [0, 255], with pinned extremes.
dynavid::Frame test_pattern();

/// Deterministic pseudo-random frame (seeded), used by fuzz properties.
dynavid::Frame random_frame(int width, int height, dynavid::Rng& rng);

/// Synthetic clip with per-frame structure: gradient + moving square +
/// seeded noise, so geometric and photometric ops all have visible effect.
dynavid::Clip synthetic_clip(const std::string& source_id, int frames, int width, int height,
                             std::uint64_t seed);

/// Directory that holds tests/golden and tests/fixtures, from the
/// DYNAVID_TEST_DIR environment variable.
std::filesystem::path test_data_dir();

/// Path of the built CLI binary, from DYNAVID_CLI.
std::filesystem::path cli_path();

}  // namespace fixtures
