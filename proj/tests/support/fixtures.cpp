#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixtures {

using dynavid::Clip;
using dynavid::Frame;
using dynavid::Rng;

Frame test_pattern() {
    Frame frame(17, 13);
    for (int y = 0; y < frame.height; ++y) {
        for (int x = 0; x < frame.width; ++x) {
            frame.at(x, y, 0) = static_cast<std::uint8_t>((17 * x + 31 * y + 7) % 256);
            frame.at(x, y, 1) = static_cast<std::uint8_t>((53 * x * x + 11 * y) % 256);
            frame.at(x, y, 2) = static_cast<std::uint8_t>((13 * (x + 1) * (y + 1)) % 256);
        }
    }
    // Pin both extremes so range-sensitive ops are exercised.
    frame.at(0, 0, 0) = 0;
    frame.at(0, 0, 1) = 0;
    frame.at(0, 0, 2) = 0;
    frame.at(16, 12, 0) = 255;
    frame.at(16, 12, 1) = 255;
    frame.at(16, 12, 2) = 255;
    return frame;
}

Frame random_frame(int width, int height, Rng& rng) {
    Frame frame(width, height);
    for (std::uint8_t& v : frame.pixels) {
        v = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    }
    return frame;
}

Clip synthetic_clip(const std::string& source_id, int frames, int width, int height,
                    std::uint64_t seed) {
    Rng rng(seed);
    Clip clip;
    clip.source_id = source_id;
    clip.frames.reserve(static_cast<std::size_t>(frames));
    for (int t = 0; t < frames; ++t) {
        Frame frame(width, height);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                frame.at(x, y, 0) = static_cast<std::uint8_t>((x * 255) / std::max(1, width - 1));
                frame.at(x, y, 1) =
                    static_cast<std::uint8_t>((y * 255) / std::max(1, height - 1));
                frame.at(x, y, 2) = static_cast<std::uint8_t>((t * 29 + x + y) % 256);
            }
        }
        // A small square orbiting the frame makes motion visible per frame.
        const int sq = std::max(2, std::min(width, height) / 4);
        const int px = (t * 3) % std::max(1, width - sq);
        const int py = (t * 2) % std::max(1, height - sq);
        for (int y = py; y < py + sq && y < height; ++y) {
            for (int x = px; x < px + sq && x < width; ++x) {
                frame.at(x, y, 0) = 255;
                frame.at(x, y, 1) = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
                frame.at(x, y, 2) = 32;
            }
        }
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

std::filesystem::path test_data_dir() {
    const char* dir = std::getenv("DYNAVID_TEST_DIR");
    if (dir == nullptr) {
        throw std::runtime_error("DYNAVID_TEST_DIR is not set");
    }
    return dir;
}

std::filesystem::path cli_path() {
    const char* path = std::getenv("DYNAVID_CLI");
    if (path == nullptr) {
        throw std::runtime_error("DYNAVID_CLI is not set");
    }
    return path;
}

}  // namespace fixtures
