#pragma once

#include <filesystem>
#include <string>

#include "dynavid/image.hpp"

namespace dynavid {

/// RawClip container: 16-byte header (magic "DVCLIP01" + 8 reserved zero
/// bytes), little-endian u32 frame count, height, width, then
/// T*H*W*3 bytes of row-major interleaved RGB.
inline constexpr char kRawClipMagic[8] = {'D', 'V', 'C', 'L', 'I', 'P', '0', '1'};
inline constexpr const char* kRawClipExtension = ".dvclip";

enum class ClipFormat { ImageSequence, RawClip };

/// Where a clip lives: a directory of frame_%05d.png files numbered
/// contiguously from 0, or a single RawClip file.
struct ClipLocator {
    std::filesystem::path path;
    ClipFormat format = ClipFormat::ImageSequence;

    /// Picks the format from the path: RawClip for files with the .dvclip
    /// extension, image sequence for directories.
    static ClipLocator guess(const std::filesystem::path& path);
};

/// Reads a clip, validating contiguous frame numbering and uniform
/// dimensions. JPEG frames (frame_%05d.jpg) are accepted where no PNG
/// sequence is present. The clip's source_id is the directory or file stem.
Clip read_clip(const ClipLocator& locator);

/// Writes a clip; PNG frames for ImageSequence (lossless), the raw
/// container otherwise. Parent directories are created as needed.
void write_clip(const Clip& clip, const ClipLocator& locator);

/// Stable 64-bit digest of a clip's dimensions and pixel content,
/// independent of the on-disk encoding.
std::uint64_t clip_content_digest(const Clip& clip);

}  // namespace dynavid
