#include "kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace dynavid::kernels {

namespace {

inline std::uint8_t quantize(double v) {
    return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
}

inline double luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

inline double tap(const Frame& f, int x, int y, int c) {
    if (x < 0 || x >= f.width || y < 0 || y >= f.height) return kGeometricFill;
    return static_cast<double>(f.at(x, y, c));
}

// Bilinear sample at (sx, sy); out-of-bounds taps read the fill value.
inline double bilinear(const Frame& f, double sx, double sy, int c) {
    const double fx0 = std::floor(sx);
    const double fy0 = std::floor(sy);
    const int x0 = static_cast<int>(fx0);
    const int y0 = static_cast<int>(fy0);
    const double wx = sx - fx0;
    const double wy = sy - fy0;
    const double p00 = tap(f, x0, y0, c);
    const double p10 = tap(f, x0 + 1, y0, c);
    const double p01 = tap(f, x0, y0 + 1, c);
    const double p11 = tap(f, x0 + 1, y0 + 1, c);
    return p00 * (1.0 - wx) * (1.0 - wy) + p10 * wx * (1.0 - wy) + p01 * (1.0 - wx) * wy +
           p11 * wx * wy;
}

// Applies out(x, y) = in(a*x + rx(y), d*y + ry(x)) where one of the source
// coordinates stays on the pixel grid for pure shears and translations.
template <typename SrcFn>
Frame resample(const Frame& frame, SrcFn&& src) {
    Frame out(frame.width, frame.height);
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            const auto [sx, sy] = src(x, y);
            for (int c = 0; c < 3; ++c) {
                out.at(x, y, c) = quantize(bilinear(frame, sx, sy, c));
            }
        }
    }
    return out;
}

Frame apply_lut(const Frame& frame, const std::array<std::array<std::uint8_t, 256>, 3>& lut) {
    Frame out(frame.width, frame.height);
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
        out.pixels[i] = lut[0][frame.pixels[i]];
        out.pixels[i + 1] = lut[1][frame.pixels[i + 1]];
        out.pixels[i + 2] = lut[2][frame.pixels[i + 2]];
    }
    return out;
}

}  // namespace

Frame shear_x(const Frame& frame, double factor) {
    const double cy = (frame.height - 1) / 2.0;
    return resample(frame, [&](int x, int y) {
        return std::pair{x + factor * (y - cy), static_cast<double>(y)};
    });
}

Frame shear_y(const Frame& frame, double factor) {
    const double cx = (frame.width - 1) / 2.0;
    return resample(frame, [&](int x, int y) {
        return std::pair{static_cast<double>(x), y + factor * (x - cx)};
    });
}

Frame translate_x(const Frame& frame, double fraction) {
    const double shift = fraction * frame.width;
    return resample(frame, [&](int x, int y) {
        return std::pair{x - shift, static_cast<double>(y)};
    });
}

Frame translate_y(const Frame& frame, double fraction) {
    const double shift = fraction * frame.height;
    return resample(frame, [&](int x, int y) {
        return std::pair{static_cast<double>(x), y - shift};
    });
}

Frame rotate(const Frame& frame, double degrees) {
    const double rad = degrees * std::numbers::pi / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const double cx = (frame.width - 1) / 2.0;
    const double cy = (frame.height - 1) / 2.0;
    return resample(frame, [&](int x, int y) {
        const double dx = x - cx;
        const double dy = y - cy;
        return std::pair{c * dx + (s * dy + cx), (-s) * dx + (c * dy + cy)};
    });
}

Frame autocontrast(const Frame& frame) {
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int c = 0; c < 3; ++c) {
        std::uint8_t lo = 255;
        std::uint8_t hi = 0;
        for (std::size_t i = static_cast<std::size_t>(c); i < frame.pixels.size(); i += 3) {
            lo = std::min(lo, frame.pixels[i]);
            hi = std::max(hi, frame.pixels[i]);
        }
        for (int v = 0; v < 256; ++v) {
            lut[c][v] = hi > lo ? quantize((v - lo) * 255.0 / (hi - lo))
                                : static_cast<std::uint8_t>(v);
        }
    }
    return apply_lut(frame, lut);
}

Frame invert(const Frame& frame) {
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int v = 0; v < 256; ++v) {
        lut[0][v] = lut[1][v] = lut[2][v] = static_cast<std::uint8_t>(255 - v);
    }
    return apply_lut(frame, lut);
}

Frame equalize(const Frame& frame) {
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int c = 0; c < 3; ++c) {
        std::array<std::int64_t, 256> hist{};
        for (std::size_t i = static_cast<std::size_t>(c); i < frame.pixels.size(); i += 3) {
            ++hist[frame.pixels[i]];
        }
        std::int64_t total = 0;
        std::int64_t last_nonzero = 0;
        int occupied = 0;
        for (int v = 0; v < 256; ++v) {
            if (hist[v] > 0) {
                total += hist[v];
                last_nonzero = hist[v];
                ++occupied;
            }
        }
        const std::int64_t step = occupied <= 1 ? 0 : (total - last_nonzero) / 255;
        if (step == 0) {
            for (int v = 0; v < 256; ++v) lut[c][v] = static_cast<std::uint8_t>(v);
        } else {
            std::int64_t n = step / 2;
            for (int v = 0; v < 256; ++v) {
                lut[c][v] = static_cast<std::uint8_t>(std::min<std::int64_t>(255, n / step));
                n += hist[v];
            }
        }
    }
    return apply_lut(frame, lut);
}

Frame solarize(const Frame& frame, int threshold) {
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int v = 0; v < 256; ++v) {
        const auto mapped = static_cast<std::uint8_t>(v >= threshold ? 255 - v : v);
        lut[0][v] = lut[1][v] = lut[2][v] = mapped;
    }
    return apply_lut(frame, lut);
}

Frame posterize(const Frame& frame, int bits) {
    const auto mask = static_cast<std::uint8_t>(0xFF << (8 - bits));
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int v = 0; v < 256; ++v) {
        lut[0][v] = lut[1][v] = lut[2][v] = static_cast<std::uint8_t>(v & mask);
    }
    return apply_lut(frame, lut);
}

Frame contrast(const Frame& frame, double factor) {
    double sum = 0.0;
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
        sum += luma(frame.pixels[i], frame.pixels[i + 1], frame.pixels[i + 2]);
    }
    const double pixel_count = static_cast<double>(frame.pixels.size() / 3);
    const double gray = static_cast<double>(quantize(sum / pixel_count));
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int v = 0; v < 256; ++v) {
        lut[0][v] = lut[1][v] = lut[2][v] = quantize(gray + factor * (v - gray));
    }
    return apply_lut(frame, lut);
}

Frame color(const Frame& frame, double factor) {
    Frame out(frame.width, frame.height);
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
        const double g = luma(frame.pixels[i], frame.pixels[i + 1], frame.pixels[i + 2]);
        out.pixels[i] = quantize(g + factor * (frame.pixels[i] - g));
        out.pixels[i + 1] = quantize(g + factor * (frame.pixels[i + 1] - g));
        out.pixels[i + 2] = quantize(g + factor * (frame.pixels[i + 2] - g));
    }
    return out;
}

Frame brightness(const Frame& frame, double factor) {
    std::array<std::array<std::uint8_t, 256>, 3> lut{};
    for (int v = 0; v < 256; ++v) {
        lut[0][v] = lut[1][v] = lut[2][v] = quantize(factor * v);
    }
    return apply_lut(frame, lut);
}

Frame sharpness(const Frame& frame, double factor) {
    Frame out(frame.width, frame.height);
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            const bool interior =
                x >= 1 && x < frame.width - 1 && y >= 1 && y < frame.height - 1;
            for (int c = 0; c < 3; ++c) {
                const double v = frame.at(x, y, c);
                double degenerate = v;
                if (interior) {
                    // 3x3 box mean; the one-pixel border keeps its original
                    // values in the degenerate image.
                    int sum = 0;
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            sum += frame.at(x + dx, y + dy, c);
                        }
                    }
                    degenerate = sum / 9.0;
                }
                out.at(x, y, c) = quantize(degenerate + factor * (v - degenerate));
            }
        }
    }
    return out;
}

Frame dynamic_scale(const Frame& frame, double factor) {
    if (factor == 1.0) return frame;
    const int src_w = frame.width;
    const int src_h = frame.height;
    const int scaled_w = std::max(1L, std::lround(src_w * factor));
    const int scaled_h = std::max(1L, std::lround(src_h * factor));
    // Resized content is pasted centered (scale-down pads with fill,
    // scale-up spills past the canvas and is thereby center-cropped).
    const int ox = static_cast<int>(std::floor((src_w - scaled_w) / 2.0));
    const int oy = static_cast<int>(std::floor((src_h - scaled_h) / 2.0));
    const double rx = static_cast<double>(src_w) / scaled_w;
    const double ry = static_cast<double>(src_h) / scaled_h;
    Frame out(src_w, src_h);
    for (int y = 0; y < src_h; ++y) {
        const int yr = y - oy;
        for (int x = 0; x < src_w; ++x) {
            const int xr = x - ox;
            if (xr < 0 || xr >= scaled_w || yr < 0 || yr >= scaled_h) {
                out.at(x, y, 0) = out.at(x, y, 1) = out.at(x, y, 2) =
                    static_cast<std::uint8_t>(kGeometricFill);
                continue;
            }
            const double sx = (xr + 0.5) * rx - 0.5;
            const double sy = (yr + 0.5) * ry - 0.5;
            for (int c = 0; c < 3; ++c) {
                out.at(x, y, c) = quantize(bilinear(frame, sx, sy, c));
            }
        }
    }
    return out;
}

Frame dynamic_color(const Frame& frame, double hue_shift) {
    if (hue_shift == 0.0) return frame;
    Frame out(frame.width, frame.height);
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
        const double r = frame.pixels[i] / 255.0;
        const double g = frame.pixels[i + 1] / 255.0;
        const double b = frame.pixels[i + 2] / 255.0;
        const double mx = std::max({r, g, b});
        const double mn = std::min({r, g, b});
        const double d = mx - mn;
        double h = 0.0;
        if (d > 0.0) {
            if (mx == r) {
                h = (g - b) / d;
            } else if (mx == g) {
                h = (b - r) / d + 2.0;
            } else {
                h = (r - g) / d + 4.0;
            }
            h /= 6.0;
            if (h < 0.0) h += 1.0;
        }
        const double s = mx == 0.0 ? 0.0 : d / mx;
        const double v = mx;

        h += hue_shift;
        h -= std::floor(h);

        const int sextant = std::min(5, static_cast<int>(h * 6.0));
        const double f = h * 6.0 - sextant;
        const double p = v * (1.0 - s);
        const double q = v * (1.0 - s * f);
        const double t = v * (1.0 - s * (1.0 - f));
        double ro = v, go = v, bo = v;
        switch (sextant) {
            case 0: ro = v; go = t; bo = p; break;
            case 1: ro = q; go = v; bo = p; break;
            case 2: ro = p; go = v; bo = t; break;
            case 3: ro = p; go = q; bo = v; break;
            case 4: ro = t; go = p; bo = v; break;
            case 5: ro = v; go = p; bo = q; break;
        }
        out.pixels[i] = quantize(ro * 255.0);
        out.pixels[i + 1] = quantize(go * 255.0);
        out.pixels[i + 2] = quantize(bo * 255.0);
    }
    return out;
}

Frame dynamic_random_erase(const Frame& frame, double area_fraction, const EraseRegion& region) {
    Frame out = frame;
    const double area = area_fraction * frame.width * frame.height;
    const long box_h = std::lround(std::sqrt(area * region.aspect));
    const long box_w = std::lround(std::sqrt(area / region.aspect));
    const int x0 = region.center_x - static_cast<int>(box_w / 2);
    const int y0 = region.center_y - static_cast<int>(box_h / 2);
    const int x1 = std::min<long>(frame.width, x0 + box_w);
    const int y1 = std::min<long>(frame.height, y0 + box_h);
    for (int y = std::max(0, y0); y < y1; ++y) {
        for (int x = std::max(0, x0); x < x1; ++x) {
            out.at(x, y, 0) = region.fill[0];
            out.at(x, y, 1) = region.fill[1];
            out.at(x, y, 2) = region.fill[2];
        }
    }
    return out;
}

}  // namespace dynavid::kernels
