#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dynavid/clip_io.hpp"
#include "dynavid/errors.hpp"
#include "support/fixtures.hpp"

using namespace dynavid;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dynavid_io_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("png sequences round-trip bit-exactly") {
    TempDir tmp;
    Rng rng(1);
    for (int i = 0; i < 10; ++i) {
        const int frames = 1 + static_cast<int>(rng.uniform_int(0, 15));
        const int w = 1 + static_cast<int>(rng.uniform_int(0, 63));
        const int h = 1 + static_cast<int>(rng.uniform_int(0, 63));
        Clip clip;
        clip.source_id = "fuzz_" + std::to_string(i);
        for (int t = 0; t < frames; ++t) clip.frames.push_back(fixtures::random_frame(w, h, rng));

        const ClipLocator locator{tmp.path / clip.source_id, ClipFormat::ImageSequence};
        write_clip(clip, locator);
        const Clip back = read_clip(locator);
        REQUIRE(back.frame_count() == frames);
        REQUIRE(back.same_pixels(clip));
        CHECK(back.source_id == clip.source_id);
    }
}

TEST_CASE("raw clips round-trip bit-exactly") {
    TempDir tmp;
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        const int frames = 1 + static_cast<int>(rng.uniform_int(0, 15));
        const int w = 1 + static_cast<int>(rng.uniform_int(0, 63));
        const int h = 1 + static_cast<int>(rng.uniform_int(0, 63));
        Clip clip;
        clip.source_id = "raw_" + std::to_string(i);
        for (int t = 0; t < frames; ++t) clip.frames.push_back(fixtures::random_frame(w, h, rng));

        const ClipLocator locator{tmp.path / (clip.source_id + ".dvclip"), ClipFormat::RawClip};
        write_clip(clip, locator);
        const Clip back = read_clip(locator);
        REQUIRE(back.same_pixels(clip));
        CHECK(back.source_id == clip.source_id);
    }
}

TEST_CASE("raw clip header layout is pinned") {
    TempDir tmp;
    Clip clip;
    clip.source_id = "header";
    clip.frames.push_back(Frame::filled(3, 2, {1, 2, 3}));
    const fs::path path = tmp.path / "header.dvclip";
    write_clip(clip, {path, ClipFormat::RawClip});

    std::ifstream in(path, std::ios::binary);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() == 16 + 12 + 3 * 2 * 3);
    CHECK(std::string(bytes.begin(), bytes.begin() + 8) == "DVCLIP01");
    for (int i = 8; i < 16; ++i) CHECK(bytes[i] == 0);
    CHECK(bytes[16] == 1);  // T, little-endian
    CHECK(bytes[20] == 2);  // H
    CHECK(bytes[24] == 3);  // W
    CHECK(bytes[28] == 1);  // first pixel R
    CHECK(bytes[29] == 2);
    CHECK(bytes[30] == 3);
}

TEST_CASE("a missing frame index is reported by number") {
    TempDir tmp;
    Clip clip;
    clip.source_id = "gap";
    for (int t = 0; t < 6; ++t) clip.frames.push_back(Frame::filled(8, 6, {9, 9, 9}));
    const ClipLocator locator{tmp.path / "gap", ClipFormat::ImageSequence};
    write_clip(clip, locator);
    fs::remove(tmp.path / "gap" / "frame_00003.png");
    try {
        read_clip(locator);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("index 3") != std::string::npos);
    }
}

TEST_CASE("dimension mismatches inside a sequence are rejected") {
    TempDir tmp;
    Clip clip;
    clip.source_id = "dims";
    for (int t = 0; t < 3; ++t) clip.frames.push_back(Frame::filled(8, 6, {9, 9, 9}));
    const ClipLocator locator{tmp.path / "dims", ClipFormat::ImageSequence};
    write_clip(clip, locator);
    Clip odd;
    odd.source_id = "odd";
    odd.frames.push_back(Frame::filled(10, 6, {1, 1, 1}));
    write_clip(odd, {tmp.path / "odd", ClipFormat::ImageSequence});
    fs::copy_file(tmp.path / "odd" / "frame_00000.png", tmp.path / "dims" / "frame_00001.png",
                  fs::copy_options::overwrite_existing);
    CHECK_THROWS_AS(read_clip(locator), FormatError);
}

TEST_CASE("corrupt raw clips are rejected with format errors") {
    TempDir tmp;
    const fs::path path = tmp.path / "bad.dvclip";
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOTCLIP0googlygoo";
    }
    CHECK_THROWS_AS(read_clip(ClipLocator::guess(path)), FormatError);

    const fs::path truncated = tmp.path / "trunc.dvclip";
    {
        Clip clip;
        clip.source_id = "t";
        clip.frames.push_back(Frame::filled(4, 4, {5, 5, 5}));
        write_clip(clip, {truncated, ClipFormat::RawClip});
        fs::resize_file(truncated, 30);
    }
    CHECK_THROWS_AS(read_clip(ClipLocator::guess(truncated)), FormatError);
}

TEST_CASE("missing paths surface as io errors") {
    CHECK_THROWS_AS(read_clip(ClipLocator::guess("/nonexistent/clip")), IoError);
    CHECK_THROWS_AS(read_clip(ClipLocator::guess("/nonexistent/clip.dvclip")), IoError);
}

TEST_CASE("locator guessing picks the format from the path") {
    CHECK(ClipLocator::guess("foo.dvclip").format == ClipFormat::RawClip);
    CHECK(ClipLocator::guess("foo").format == ClipFormat::ImageSequence);
}

TEST_CASE("content digest tracks pixels not encoding") {
    Rng rng(3);
    Clip clip;
    clip.source_id = "digest";
    clip.frames.push_back(fixtures::random_frame(12, 10, rng));
    const std::uint64_t d1 = clip_content_digest(clip);
    Clip copy = clip;
    copy.source_id = "renamed";
    CHECK(clip_content_digest(copy) == d1);
    copy.frames[0].pixels[0] ^= 1;
    CHECK(clip_content_digest(copy) != d1);
}
