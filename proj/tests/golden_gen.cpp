// Regenerates the checked-in golden corpus from the per-pixel reference
// implementation and the bundled fixtures. Run from the repository root:
//
//   ./build/tests/golden_gen
//
// Outputs land under tests/golden, tests/fixtures/cli_clips and
// docs/op_mapping.json; diffs mean the reference semantics changed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "dynavid/clip_io.hpp"
#include "dynavid/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/reference_kernels.hpp"

using namespace dynavid;
namespace fs = std::filesystem;

namespace {

void write_golden_frame(const fs::path& path, const Frame& frame) {
    Clip clip;
    clip.source_id = path.stem().string();
    clip.frames.push_back(frame);
    write_clip(clip, {path, ClipFormat::RawClip});
}

void generate_kernel_goldens(const fs::path& dir) {
    fs::create_directories(dir);
    const Frame pattern = fixtures::test_pattern();
    EraseRegion region;
    region.center_x = 8;
    region.center_y = 6;
    region.aspect = 1.5;

    int files = 0;
    for (int k = 0; k < kNumOpKinds; ++k) {
        const auto kind = static_cast<OpKind>(k);
        const OpDescriptor& desc = descriptor(kind);
        const std::optional<EraseRegion> maybe_region =
            kind == OpKind::DynamicRandomErase ? std::optional<EraseRegion>(region)
                                               : std::nullopt;
        std::vector<std::pair<std::string, double>> points;
        if (!desc.has_param) {
            points.emplace_back("apply", 0.0);
        } else {
            const Interval range = desc.param_range(false);
            points.emplace_back("min", range.lo);
            points.emplace_back("max", range.hi);
            if (desc.has_identity) points.emplace_back("identity", desc.zero_param);
        }
        for (const auto& [label, param] : points) {
            const Frame out = refk::apply(kind, pattern, param, maybe_region);
            write_golden_frame(
                dir / (std::string(op_name(kind)) + "_" + label + kRawClipExtension), out);
            ++files;
        }
    }
    std::printf("kernel goldens: %d files\n", files);
}

// End-to-end golden: production policy sampling, reference kernels.
void generate_e2e_golden(const fs::path& dir) {
    fs::create_directories(dir);
    const Clip input = fixtures::synthetic_clip("e2e", 8, 32, 24, 4242);
    write_clip(input, {dir / "e2e_input.dvclip", ClipFormat::RawClip});

    Policy policy;
    policy.family = PolicyFamily::RandAugment;
    policy.num_ops = 2;
    policy.magnitude = 9.0;
    policy.probability = 1.0;
    policy.space = SearchSpace::Mod;
    policy.dynamic = true;

    const AppliedPolicy applied =
        sample_policy(policy, input.frame_count(), input.width(), input.height(), 42);
    Clip out = input;
    for (const AppliedStep& step : applied.steps) {
        if (!step.applied) continue;
        out = refk::apply_scheduled(step.op, out, step.schedule.values, step.direction,
                                    space_is_wide(applied.space), step.region);
    }
    write_clip(out, {dir / "e2e_output.dvclip", ClipFormat::RawClip});
    std::printf("e2e golden: %d frames\n", out.frame_count());
}

// Two bundled clips plus the digest an augment run over them must produce.
void generate_cli_fixture(const fs::path& fixtures_dir, const fs::path& golden_dir) {
    const fs::path clip_dir = fixtures_dir / "cli_clips";
    fs::create_directories(clip_dir);
    const Clip a = fixtures::synthetic_clip("clip_a", 6, 32, 24, 101);
    write_clip(a, {clip_dir / "clip_a", ClipFormat::ImageSequence});
    const Clip b = fixtures::synthetic_clip("clip_b", 4, 28, 20, 202);
    write_clip(b, {clip_dir / ("clip_b" + std::string(kRawClipExtension)), ClipFormat::RawClip});

    Policy policy;
    policy.family = PolicyFamily::RandAugment;
    policy.num_ops = 2;
    policy.magnitude = 9.0;
    policy.probability = 1.0;
    policy.space = SearchSpace::Mod;
    policy.dynamic = true;

    constexpr std::uint64_t kSeed = 7;
    std::uint64_t digest = 0xcbf29ce484222325ULL;
    for (const Clip* clip : {&a, &b}) {
        const AppliedPolicy applied = sample_policy(
            policy, clip->frame_count(), clip->width(), clip->height(),
            derive_seed(kSeed, clip->source_id));
        Clip out = *clip;
        for (const AppliedStep& step : applied.steps) {
            if (!step.applied) continue;
            out = refk::apply_scheduled(step.op, out, step.schedule.values, step.direction,
                                        space_is_wide(applied.space), step.region);
        }
        digest ^= clip_content_digest(out);
        digest *= 0x100000001b3ULL;
    }

    nlohmann::json record{{"seed", kSeed},
                          {"policy", "ra"},
                          {"mode", "dynamic"},
                          {"space", "mod"},
                          {"digest", digest}};
    std::ofstream(golden_dir / "cli_digest.json") << record.dump(2) << "\n";
    std::printf("cli fixture digest: %016llx\n", static_cast<unsigned long long>(digest));
}

}  // namespace

int main() {
    const fs::path tests_dir = fixtures::test_data_dir();
    const fs::path golden_dir = tests_dir / "golden";
    fs::create_directories(golden_dir);

    generate_kernel_goldens(golden_dir / "kernels");
    generate_e2e_golden(golden_dir);
    generate_cli_fixture(tests_dir / "fixtures", golden_dir);

    const fs::path docs_dir = tests_dir / ".." / "docs";
    fs::create_directories(docs_dir);
    std::ofstream(docs_dir / "op_mapping.json") << mapping_table_json().dump(2) << "\n";
    std::printf("mapping table exported\n");
    return 0;
}
