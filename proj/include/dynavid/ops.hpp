#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "dynavid/image.hpp"
#include "dynavid/signal.hpp"

namespace dynavid {

enum class OpKind {
    ShearX,
    ShearY,
    TranslateX,
    TranslateY,
    Rotate,
    AutoContrast,
    Invert,
    Equalize,
    Solarize,
    Posterize,
    Contrast,
    Color,
    Brightness,
    Sharpness,
    DynamicScale,
    DynamicColor,
    DynamicRandomErase,
};

inline constexpr int kNumOpKinds = 17;
inline constexpr int kNumClassicOps = 14;
inline constexpr double kMaxMagnitude = 30.0;

std::string_view op_name(OpKind kind);
std::optional<OpKind> op_from_name(std::string_view name);

/// How a shared [0, 30] magnitude maps onto one operation's parameter.
///
/// The parameter moves linearly from `zero_param` (the value at magnitude 0)
/// to the magnitude-30 endpoint: `pos_param` for direction +1, `neg_param`
/// for direction -1 on signed ops, with `_wide` variants for the wide
/// search space. Discrete ops snap the mapped parameter to the nearest
/// integer. Parameter units per op:
///
///   ShearX/Y            shear factor
///   TranslateX/Y        shift as a fraction of width/height
///   Rotate              degrees
///   Solarize            inversion threshold, 256 = no-op
///   Posterize           bits kept, 8 = no-op
///   Contrast/Color/Brightness/Sharpness
///                       blend factor toward the degenerate image, 1 = no-op
///   DynamicScale        resize factor, 1 = no-op
///   DynamicColor        hue rotation as a fraction of the hue circle
///   DynamicRandomErase  erased area as a fraction of the frame area
struct OpDescriptor {
    OpKind kind = OpKind::ShearX;
    bool has_param = true;
    bool has_identity = true;
    bool is_signed = false;
    bool discrete = false;
    double zero_param = 0.0;
    double pos_param = 0.0;
    double neg_param = 0.0;
    double pos_param_wide = 0.0;
    double neg_param_wide = 0.0;

    /// Closed parameter interval actually reachable through the mapping.
    Interval param_range(bool wide) const;
};

const OpDescriptor& descriptor(OpKind kind);

/// Per-clip fixed part of a random-erase draw: the box centre and aspect
/// ratio stay put while the schedule drives the erased area per frame.
struct EraseRegion {
    int center_x = 0;
    int center_y = 0;
    double aspect = 1.0;  // box height / box width, in [1/3, 3]
    std::array<std::uint8_t, 3> fill{128, 128, 128};
};

/// Linear magnitude -> parameter mapping described on OpDescriptor.
/// Magnitudes outside [0, 30] are clamped; direction is ignored for
/// unsigned ops.
double magnitude_to_param(const OpDescriptor& desc, double magnitude, int direction, bool wide);

/// The full mapping table as a machine-readable document: one entry per op
/// with range, wide_range, identity, signed, discrete, parameterless.
nlohmann::json mapping_table_json();

/// Applies one kernel at a fixed parameter. `region` is required for
/// DynamicRandomErase and ignored elsewhere. Throws ArgumentError on a
/// non-finite parameter or a missing region.
Frame apply(const OpDescriptor& desc, const Frame& frame, double param,
            const std::optional<EraseRegion>& region = std::nullopt);

/// Applies one op across a clip, frame t at the parameter mapped from
/// schedule.values[t] (clamped to [0, 30]). Parameterless ops ignore the
/// schedule. Throws ArgumentError when the schedule length does not match
/// the clip.
Clip apply_scheduled(const OpDescriptor& desc, const Clip& clip, const Schedule& schedule,
                     int direction, bool wide,
                     const std::optional<EraseRegion>& region = std::nullopt);

// Optional per-op wall-time accounting for the bench tool. Off by default;
// counters are process-global and thread-safe.
namespace profiling {
void enable(bool on);
void reset();
std::array<std::uint64_t, kNumOpKinds> snapshot_ns();
}  // namespace profiling

}  // namespace dynavid
