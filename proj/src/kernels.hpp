#pragma once

// Internal pixel kernels behind ops::apply. Every kernel returns a frame of
// the input's dimensions, computes in double precision and quantizes with
// round-half-away-from-zero. Geometric kernels sample by inverse mapping
// with bilinear interpolation; taps outside the frame read the constant
// fill value 128.

#include "dynavid/image.hpp"
#include "dynavid/ops.hpp"

namespace dynavid::kernels {

inline constexpr double kGeometricFill = 128.0;

Frame shear_x(const Frame& frame, double factor);
Frame shear_y(const Frame& frame, double factor);
Frame translate_x(const Frame& frame, double fraction);
Frame translate_y(const Frame& frame, double fraction);
Frame rotate(const Frame& frame, double degrees);
Frame autocontrast(const Frame& frame);
Frame invert(const Frame& frame);
Frame equalize(const Frame& frame);
Frame solarize(const Frame& frame, int threshold);
Frame posterize(const Frame& frame, int bits);
Frame contrast(const Frame& frame, double factor);
Frame color(const Frame& frame, double factor);
Frame brightness(const Frame& frame, double factor);
Frame sharpness(const Frame& frame, double factor);
Frame dynamic_scale(const Frame& frame, double factor);
Frame dynamic_color(const Frame& frame, double hue_shift);
Frame dynamic_random_erase(const Frame& frame, double area_fraction, const EraseRegion& region);

}  // namespace dynavid::kernels
