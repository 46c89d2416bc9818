#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dynavid/errors.hpp"

namespace dynavid {

/// One RGB frame, 8 bits per channel, row-major with interleaved channels.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Frame() = default;
    Frame(int w, int h) : width(w), height(h) {
        if (w <= 0 || h <= 0) {
            throw ArgumentError("frame dimensions must be positive");
        }
        pixels.assign(static_cast<std::size_t>(w) * h * 3, 0);
    }

    static Frame filled(int w, int h, std::array<std::uint8_t, 3> rgb) {
        Frame frame(w, h);
        for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
            frame.pixels[i] = rgb[0];
            frame.pixels[i + 1] = rgb[1];
            frame.pixels[i + 2] = rgb[2];
        }
        return frame;
    }

    std::uint8_t& at(int x, int y, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool operator==(const Frame& other) const = default;
};

/// An ordered run of same-sized frames, the augmentation unit.
struct Clip {
    std::vector<Frame> frames;
    std::string source_id;

    int frame_count() const { return static_cast<int>(frames.size()); }
    int width() const { return frames.empty() ? 0 : frames.front().width; }
    int height() const { return frames.empty() ? 0 : frames.front().height; }

    /// Throws ArgumentError unless the clip has at least one frame and all
    /// frames share dimensions.
    void validate() const {
        if (frames.empty()) {
            throw ArgumentError("clip must contain at least one frame");
        }
        for (const Frame& frame : frames) {
            if (frame.width != width() || frame.height != height()) {
                throw ArgumentError("clip frames must share dimensions (clip '" + source_id +
                                    "')");
            }
        }
    }

    bool same_pixels(const Clip& other) const {
        return frames == other.frames;
    }
};

}  // namespace dynavid
