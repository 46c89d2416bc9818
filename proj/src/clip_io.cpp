#include "dynavid/clip_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace fs = std::filesystem;

namespace dynavid {

namespace {

std::string frame_name(int index, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%05d%s", index, ext);
    return buf;
}

Frame decode_image(const fs::path& path) {
    const cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
    if (bgr.empty()) {
        throw IoError("failed to decode image: " + path.string());
    }
    Frame frame(bgr.cols, bgr.rows);
    for (int y = 0; y < bgr.rows; ++y) {
        const auto* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x) {
            frame.at(x, y, 0) = row[x][2];
            frame.at(x, y, 1) = row[x][1];
            frame.at(x, y, 2) = row[x][0];
        }
    }
    return frame;
}

void encode_png(const Frame& frame, const fs::path& path) {
    cv::Mat bgr(frame.height, frame.width, CV_8UC3);
    for (int y = 0; y < frame.height; ++y) {
        auto* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < frame.width; ++x) {
            row[x][0] = frame.at(x, y, 2);
            row[x][1] = frame.at(x, y, 1);
            row[x][2] = frame.at(x, y, 0);
        }
    }
    if (!cv::imwrite(path.string(), bgr)) {
        throw IoError("failed to write image: " + path.string());
    }
}

void append_u32_le(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

std::uint32_t read_u32_le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

Clip read_raw_clip(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("failed to open raw clip: " + path.string());
    }
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    constexpr std::size_t header = 16 + 12;
    if (data.size() < header || std::memcmp(data.data(), kRawClipMagic, 8) != 0) {
        throw FormatError("not a raw clip (bad magic): " + path.string());
    }
    const std::uint32_t frames = read_u32_le(data.data() + 16);
    const std::uint32_t height = read_u32_le(data.data() + 20);
    const std::uint32_t width = read_u32_le(data.data() + 24);
    if (frames == 0 || height == 0 || width == 0) {
        throw FormatError("raw clip header declares empty dimensions: " + path.string());
    }
    const std::size_t payload =
        static_cast<std::size_t>(frames) * height * width * 3;
    if (data.size() != header + payload) {
        throw FormatError("raw clip payload size mismatch: " + path.string());
    }

    Clip clip;
    clip.source_id = path.stem().string();
    clip.frames.reserve(frames);
    const unsigned char* cursor = data.data() + header;
    for (std::uint32_t t = 0; t < frames; ++t) {
        Frame frame(static_cast<int>(width), static_cast<int>(height));
        std::memcpy(frame.pixels.data(), cursor, frame.pixels.size());
        cursor += frame.pixels.size();
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

void write_raw_clip(const Clip& clip, const fs::path& path) {
    std::string blob;
    blob.reserve(28 + clip.frames.size() * clip.frames.front().pixels.size());
    blob.append(kRawClipMagic, 8);
    blob.append(8, '\0');
    append_u32_le(blob, static_cast<std::uint32_t>(clip.frame_count()));
    append_u32_le(blob, static_cast<std::uint32_t>(clip.height()));
    append_u32_le(blob, static_cast<std::uint32_t>(clip.width()));
    for (const Frame& frame : clip.frames) {
        blob.append(reinterpret_cast<const char*>(frame.pixels.data()), frame.pixels.size());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(blob.data(), static_cast<std::streamsize>(blob.size()))) {
        throw IoError("failed to write raw clip: " + path.string());
    }
}

Clip read_image_sequence(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw IoError("clip directory does not exist: " + dir.string());
    }

    std::vector<int> indices;
    bool any_png = false;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.size() != 15 || name.rfind("frame_", 0) != 0) continue;
        const std::string ext = entry.path().extension().string();
        if (ext != ".png" && ext != ".jpg") continue;
        const std::string digits = name.substr(6, 5);
        if (!std::all_of(digits.begin(), digits.end(),
                         [](unsigned char ch) { return std::isdigit(ch); })) {
            continue;
        }
        any_png = any_png || ext == ".png";
        indices.push_back(std::stoi(digits));
    }
    if (indices.empty()) {
        throw FormatError("no frame_%05d.png (or .jpg) files in clip directory: " +
                          dir.string());
    }
    std::sort(indices.begin(), indices.end());
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] != static_cast<int>(t)) {
            throw FormatError("frame sequence in " + dir.string() + " is missing index " +
                              std::to_string(t));
        }
    }
    const char* ext = any_png ? ".png" : ".jpg";

    Clip clip;
    clip.source_id = dir.filename().string();
    clip.frames.reserve(indices.size());
    for (std::size_t t = 0; t < indices.size(); ++t) {
        Frame frame = decode_image(dir / frame_name(static_cast<int>(t), ext));
        if (t > 0 && (frame.width != clip.width() || frame.height != clip.height())) {
            throw FormatError("frame " + std::to_string(t) + " in " + dir.string() +
                              " has mismatched dimensions");
        }
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

void write_image_sequence(const Clip& clip, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("failed to create clip directory " + dir.string() + ": " + ec.message());
    }
    for (int t = 0; t < clip.frame_count(); ++t) {
        encode_png(clip.frames[static_cast<std::size_t>(t)], dir / frame_name(t, ".png"));
    }
}

}  // namespace

ClipLocator ClipLocator::guess(const fs::path& path) {
    ClipLocator locator;
    locator.path = path;
    locator.format = path.extension() == kRawClipExtension ? ClipFormat::RawClip
                                                           : ClipFormat::ImageSequence;
    return locator;
}

Clip read_clip(const ClipLocator& locator) {
    Clip clip = locator.format == ClipFormat::RawClip ? read_raw_clip(locator.path)
                                                      : read_image_sequence(locator.path);
    clip.validate();
    return clip;
}

void write_clip(const Clip& clip, const ClipLocator& locator) {
    clip.validate();
    if (locator.format == ClipFormat::RawClip) {
        if (locator.path.has_parent_path()) {
            std::error_code ec;
            fs::create_directories(locator.path.parent_path(), ec);
        }
        write_raw_clip(clip, locator.path);
    } else {
        write_image_sequence(clip, locator.path);
    }
}

std::uint64_t clip_content_digest(const Clip& clip) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<std::uint64_t>(clip.frame_count()));
    mix(static_cast<std::uint64_t>(clip.width()));
    mix(static_cast<std::uint64_t>(clip.height()));
    for (const Frame& frame : clip.frames) {
        for (const std::uint8_t byte : frame.pixels) mix(byte);
    }
    return h;
}

}  // namespace dynavid
