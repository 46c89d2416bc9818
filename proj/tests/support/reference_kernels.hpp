#pragma once

// Per-pixel reference implementations of every augmentation kernel and of
// the magnitude mapping, written independently of src/ and kept free of
// lookup tables or hoisted row constants. The production kernels must
// match these bit-exactly on 8-bit output.

#include <optional>

#include "dynavid/image.hpp"
#include "dynavid/ops.hpp"

namespace refk {

double magnitude_to_param(dynavid::OpKind kind, double magnitude, int direction, bool wide);

dynavid::Frame apply(dynavid::OpKind kind, const dynavid::Frame& frame, double param,
                     const std::optional<dynavid::EraseRegion>& region = std::nullopt);

dynavid::Clip apply_scheduled(dynavid::OpKind kind, const dynavid::Clip& clip,
                              const std::vector<double>& magnitudes, int direction, bool wide,
                              const std::optional<dynavid::EraseRegion>& region = std::nullopt);

}  // namespace refk
