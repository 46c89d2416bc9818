#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dynavid/clip_io.hpp"
#include "dynavid/metrics.hpp"
#include "dynavid/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitMissingTool = 3;

struct ScheduleFlags {
    std::string kind = "fourier";
    int bases = 3;
    std::string freq = "0.2:1.5";
    std::string amp = "0:1";
};

dynavid::Interval parse_interval(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("range", "expected LO:HI, got '" + text + "'");
    }
    try {
        dynavid::Interval interval{std::stod(text.substr(0, colon)),
                                   std::stod(text.substr(colon + 1))};
        return interval;
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected LO:HI, got '" + text + "'");
    }
}

dynavid::ScheduleKind parse_schedule_kind(const ScheduleFlags& flags) {
    dynavid::ScheduleKind kind;
    if (flags.kind == "static") {
        kind.family = dynavid::ScheduleFamily::Static;
    } else if (flags.kind == "fourier") {
        kind.family = dynavid::ScheduleFamily::Fourier;
    } else if (flags.kind == "linear") {
        kind.family = dynavid::ScheduleFamily::Linear;
    } else if (flags.kind == "sine") {
        kind.family = dynavid::ScheduleFamily::Sinusoidal;
    } else if (flags.kind == "random") {
        kind.family = dynavid::ScheduleFamily::RandomPerFrame;
    } else if (flags.kind == "random-gauss") {
        kind.family = dynavid::ScheduleFamily::RandomGaussianSmoothed;
    } else {
        throw CLI::ValidationError("--kind", "unknown schedule kind '" + flags.kind + "'");
    }
    kind.fourier.num_bases = flags.bases;
    kind.fourier.freq_range = parse_interval(flags.freq);
    kind.fourier.amp_range = parse_interval(flags.amp);
    return kind;
}

void print_config_line(const std::string& key, const std::string& value) {
    std::cerr << "config: " << key << " = " << value << "\n";
}

std::vector<dynavid::ClipLocator> discover_clips(const fs::path& input) {
    std::vector<dynavid::ClipLocator> locators;
    for (const fs::directory_entry& entry : fs::directory_iterator(input)) {
        if (entry.is_directory()) {
            locators.push_back({entry.path(), dynavid::ClipFormat::ImageSequence});
        } else if (entry.path().extension() == dynavid::kRawClipExtension) {
            locators.push_back({entry.path(), dynavid::ClipFormat::RawClip});
        }
    }
    std::sort(locators.begin(), locators.end(),
              [](const auto& a, const auto& b) { return a.path < b.path; });
    return locators;
}

struct PolicyFlags {
    std::string family = "ra";
    std::string mode = "dynamic";
    std::string space = "org";
    int n = 2;
    double m = 9.0;
    double p = 1.0;
    ScheduleFlags schedule;
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& flags) {
    cmd->add_option("--policy", flags.family, "Policy family")
        ->check(CLI::IsMember({"ra", "ta", "ua"}))
        ->capture_default_str();
    cmd->add_option("--mode", flags.mode, "Magnitude mode")
        ->check(CLI::IsMember({"static", "dynamic"}))
        ->capture_default_str();
    cmd->add_option("--space", flags.space, "Search space")
        ->check(CLI::IsMember({"org", "mod", "wide", "wide-mod"}))
        ->capture_default_str();
    cmd->add_option("--n", flags.n, "Ops per clip (ra/ua)")->capture_default_str();
    cmd->add_option("--m", flags.m, "Static magnitude (ra)")->capture_default_str();
    cmd->add_option("--p", flags.p, "Apply probability (ra)")->capture_default_str();
    cmd->add_option("--bases", flags.schedule.bases, "Sinusoidal basis count")
        ->capture_default_str();
    cmd->add_option("--freq", flags.schedule.freq, "Frequency range LO:HI")
        ->capture_default_str();
    cmd->add_option("--amp", flags.schedule.amp, "Amplitude range LO:HI")
        ->capture_default_str();
    cmd->add_option("--schedule-kind", flags.schedule.kind, "Dynamic schedule family")
        ->check(CLI::IsMember({"fourier", "linear", "sine", "random", "random-gauss"}))
        ->capture_default_str();
}

dynavid::Policy parse_policy(const PolicyFlags& flags) {
    dynavid::Policy policy;
    policy.family = *dynavid::policy_family_from_name(flags.family);
    policy.space = *dynavid::search_space_from_name(flags.space);
    policy.num_ops = flags.n;
    policy.magnitude = flags.m;
    policy.probability = flags.p;
    policy.dynamic = flags.mode == "dynamic";
    policy.schedule_kind = parse_schedule_kind(flags.schedule);
    policy.validate();
    return policy;
}

void print_policy_config(const PolicyFlags& flags, std::uint64_t seed, int workers) {
    print_config_line("policy", flags.family);
    print_config_line("mode", flags.mode);
    print_config_line("space", flags.space);
    print_config_line("n", std::to_string(flags.n));
    print_config_line("m", std::to_string(flags.m));
    print_config_line("p", std::to_string(flags.p));
    print_config_line("schedule-kind", flags.schedule.kind);
    print_config_line("bases", std::to_string(flags.schedule.bases));
    print_config_line("freq", flags.schedule.freq);
    print_config_line("amp", flags.schedule.amp);
    print_config_line("workers", std::to_string(workers));
    print_config_line("seed", std::to_string(seed));
}

int run_augment(const PolicyFlags& policy_flags, const std::string& input,
                const std::string& output, std::uint64_t seed, int workers,
                const std::string& log_path) {
    const dynavid::Policy policy = parse_policy(policy_flags);
    print_policy_config(policy_flags, seed, workers);

    if (!fs::is_directory(input)) {
        std::cerr << "error: input is not a directory: " << input << "\n";
        return kExitUsage;
    }
    const std::vector<dynavid::ClipLocator> locators = discover_clips(input);
    if (locators.empty()) {
        std::cerr << "error: no clips found under " << input << "\n";
        return kExitUsage;
    }
    fs::create_directories(output);

    struct ItemOutcome {
        std::string name;
        std::string error;
        json record;
    };
    std::vector<ItemOutcome> outcomes(locators.size());

    dynavid::parallel_for(locators.size(), workers, [&](std::size_t i) {
        const dynavid::ClipLocator& locator = locators[i];
        outcomes[i].name = locator.path.filename().string();
        try {
            const dynavid::Clip clip = dynavid::read_clip(locator);
            const std::uint64_t clip_seed = dynavid::derive_seed(seed, clip.source_id);
            dynavid::AugmentResult result = dynavid::augment_clip(clip, policy, clip_seed);

            dynavid::ClipLocator destination = locator;
            destination.path = fs::path(output) / locator.path.filename();
            dynavid::write_clip(result.clip, destination);

            outcomes[i].record = result.policy;
            outcomes[i].record["source_id"] = clip.source_id;
        } catch (const std::exception& e) {
            outcomes[i].error = e.what();
        }
    });

    if (!log_path.empty()) {
        std::ofstream log(log_path, std::ios::trunc);
        for (const ItemOutcome& outcome : outcomes) {
            if (outcome.error.empty()) log << outcome.record.dump() << "\n";
        }
    }

    int failures = 0;
    for (const ItemOutcome& outcome : outcomes) {
        if (!outcome.error.empty()) {
            ++failures;
            std::cerr << "failed: " << outcome.name << ": " << outcome.error << "\n";
        }
    }
    std::cerr << "augmented " << (outcomes.size() - failures) << "/" << outcomes.size()
              << " clips into " << output << "\n";
    return failures == 0 ? kExitOk : kExitPartial;
}

int run_schedule(const ScheduleFlags& flags, int frames, double magnitude, std::uint64_t seed,
                 int count, const std::string& format, const std::string& forced_bases_path,
                 const std::string& output_path) {
    dynavid::ScheduleKind kind = parse_schedule_kind(flags);
    print_config_line("kind", flags.kind);
    print_config_line("frames", std::to_string(frames));
    print_config_line("m", std::to_string(magnitude));
    print_config_line("count", std::to_string(count));
    print_config_line("seed", std::to_string(seed));

    std::vector<dynavid::FourierBasis> forced;
    if (!forced_bases_path.empty()) {
        std::ifstream in(forced_bases_path);
        if (!in) {
            std::cerr << "error: cannot read forced bases file " << forced_bases_path << "\n";
            return kExitUsage;
        }
        forced = json::parse(in).get<std::vector<dynavid::FourierBasis>>();
    }

    dynavid::Rng rng(seed);
    std::vector<dynavid::Schedule> schedules;
    for (int i = 0; i < count; ++i) {
        schedules.push_back(forced.empty()
                                ? dynavid::sample_schedule(kind, frames, magnitude, rng)
                                : dynavid::fourier_schedule_from_bases(frames, magnitude, forced));
    }

    std::ostringstream body;
    if (format == "csv") {
        body << "sample_id,frame,magnitude\n";
        for (int i = 0; i < count; ++i) {
            for (int t = 0; t < frames; ++t) {
                char row[96];
                std::snprintf(row, sizeof(row), "%d,%d,%.9g\n", i, t,
                              schedules[static_cast<std::size_t>(i)]
                                  .values[static_cast<std::size_t>(t)]);
                body << row;
            }
        }
    } else {
        json doc = json::array();
        for (int i = 0; i < count; ++i) {
            json entry = schedules[static_cast<std::size_t>(i)];
            entry["sample_id"] = i;
            doc.push_back(std::move(entry));
        }
        body << doc.dump(2) << "\n";
    }

    if (output_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output_path, std::ios::trunc);
        out << body.str();
    }
    return kExitOk;
}

int run_report(const std::string& kinds_list, int frames, double magnitude, int samples,
               std::uint64_t seed, const std::string& ratios_path) {
    print_config_line("kinds", kinds_list);
    print_config_line("frames", std::to_string(frames));
    print_config_line("m", std::to_string(magnitude));
    print_config_line("samples", std::to_string(samples));
    print_config_line("seed", std::to_string(seed));
    if (samples < 2) {
        std::cerr << "error: --samples must be at least 2\n";
        return kExitUsage;
    }

    std::vector<std::string> kinds;
    std::stringstream stream(kinds_list);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) kinds.push_back(token);
    }

    std::cout << dynavid::regime_stats_csv_header();
    for (const std::string& name : kinds) {
        ScheduleFlags flags;
        flags.kind = name;
        const dynavid::ScheduleKind kind = parse_schedule_kind(flags);
        dynavid::Rng rng(dynavid::derive_seed(seed, name));
        const dynavid::RegimeStats stats =
            dynavid::regime_stats(kind, frames, magnitude, samples, rng);
        std::cout << dynavid::regime_stats_csv_row(kind, frames, magnitude, stats);
    }

    if (!ratios_path.empty()) {
        std::ifstream in(ratios_path);
        if (!in) {
            std::cerr << "error: cannot read ratios file " << ratios_path << "\n";
            return kExitUsage;
        }
        const json doc = json::parse(in);
        std::cout << "\nconfig,affinity,diversity\n";
        for (const json& row : doc.at("rows")) {
            const double aff = dynavid::affinity({row.at("accuracy_on_augmented_val"),
                                                  row.at("accuracy_on_clean_val")});
            const double div = dynavid::diversity({row.at("final_train_loss_augmented"),
                                                   row.at("final_train_loss_clean")});
            char line[128];
            std::snprintf(line, sizeof(line), "%s,%.2f,%.2f\n",
                          row.at("name").get<std::string>().c_str(), aff, div);
            std::cout << line;
        }
    }
    return kExitOk;
}

dynavid::Clip make_synthetic_clip(int index, int frames, int width, int height) {
    dynavid::Rng rng(0x5eed0000ULL + static_cast<std::uint64_t>(index));
    dynavid::Clip clip;
    char name[32];
    std::snprintf(name, sizeof(name), "synthetic_%04d", index);
    clip.source_id = name;
    for (int t = 0; t < frames; ++t) {
        dynavid::Frame frame(width, height);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                frame.at(x, y, 0) = static_cast<std::uint8_t>((x * 255) / std::max(1, width - 1));
                frame.at(x, y, 1) = static_cast<std::uint8_t>((y * 255) / std::max(1, height - 1));
                frame.at(x, y, 2) = static_cast<std::uint8_t>((t * 17 + x + 2 * y) % 256);
            }
        }
        const int sq = std::max(2, std::min(width, height) / 5);
        const int px = static_cast<int>(rng.uniform_int(0, std::max(0, width - sq)));
        const int py = static_cast<int>(rng.uniform_int(0, std::max(0, height - sq)));
        for (int y = py; y < std::min(height, py + sq); ++y) {
            for (int x = px; x < std::min(width, px + sq); ++x) {
                frame.at(x, y, 0) = 240;
                frame.at(x, y, 1) = 16;
                frame.at(x, y, 2) = 160;
            }
        }
        clip.frames.push_back(std::move(frame));
    }
    return clip;
}

std::optional<std::string> find_executable(const std::string& name) {
    const char* path_env = std::getenv("PATH");
    if (path_env == nullptr) return std::nullopt;
    std::stringstream stream(path_env);
    std::string dir;
    while (std::getline(stream, dir, ':')) {
        if (dir.empty()) continue;
        const fs::path candidate = fs::path(dir) / name;
        std::error_code ec;
        if (fs::is_regular_file(candidate, ec) &&
            ::access(candidate.c_str(), X_OK) == 0) {
            return candidate.string();
        }
    }
    return std::nullopt;
}

int run_corrupt(const std::string& input, int qp, const std::string& output) {
    print_config_line("input", input);
    print_config_line("qp", std::to_string(qp));
    print_config_line("output", output);
    if (qp < 0 || qp > 51) {
        std::cerr << "error: --qp must lie in [0, 51]\n";
        return kExitUsage;
    }
    const std::optional<std::string> ffmpeg = find_executable("ffmpeg");
    if (!ffmpeg.has_value()) {
        std::cerr << "error: ffmpeg not found on PATH; install it (e.g. apt install ffmpeg) "
                     "to use the corrupt subcommand\n";
        return kExitMissingTool;
    }

    std::vector<std::string> args = {"ffmpeg", "-i", input, "-c:v", "libx264",
                                     "-preset", "slow", "-crf", std::to_string(qp), output};
    std::vector<char*> argv;
    argv.reserve(args.size() + 1);
    for (std::string& arg : args) argv.push_back(arg.data());
    argv.push_back(nullptr);

    const pid_t pid = ::fork();
    if (pid < 0) {
        std::cerr << "error: fork failed\n";
        return kExitUsage;
    }
    if (pid == 0) {
        ::execv(ffmpeg->c_str(), argv.data());
        std::perror("execv");
        ::_exit(127);
    }
    int status = 0;
    ::waitpid(pid, &status, 0);
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    std::cerr << "error: ffmpeg terminated abnormally\n";
    return kExitUsage;
}

int run_bench(const PolicyFlags& policy_flags, const std::string& input,
              const std::string& synthetic, std::uint64_t seed, int workers, bool as_json) {
    const dynavid::Policy policy = parse_policy(policy_flags);
    print_policy_config(policy_flags, seed, workers);

    std::vector<dynavid::Clip> clips;
    if (!synthetic.empty()) {
        int frames = 0, height = 0, width = 0, count = 0;
        if (std::sscanf(synthetic.c_str(), "%dx%dx%d,%d", &frames, &height, &width, &count) != 4 ||
            frames < 1 || height < 1 || width < 1 || count < 1) {
            std::cerr << "error: --synthetic expects TxHxW,COUNT (e.g. 32x224x224,64)\n";
            return kExitUsage;
        }
        for (int i = 0; i < count; ++i) {
            clips.push_back(make_synthetic_clip(i, frames, width, height));
        }
    } else if (!input.empty()) {
        for (const dynavid::ClipLocator& locator : discover_clips(input)) {
            clips.push_back(dynavid::read_clip(locator));
        }
    }
    if (clips.empty()) {
        std::cerr << "error: bench needs --input or --synthetic clips\n";
        return kExitUsage;
    }

    dynavid::RunConfig config;
    config.policy = policy;
    config.master_seed = seed;
    config.workers = workers;

    dynavid::profiling::reset();
    dynavid::profiling::enable(true);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<dynavid::BatchItem> items = dynavid::augment_batch(clips, config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    dynavid::profiling::enable(false);

    std::uint64_t digest = 0xcbf29ce484222325ULL;
    std::size_t total_frames = 0;
    int failures = 0;
    for (const dynavid::BatchItem& item : items) {
        if (!item.ok()) {
            ++failures;
            continue;
        }
        total_frames += static_cast<std::size_t>(item.result->clip.frame_count());
        digest ^= dynavid::clip_content_digest(item.result->clip);
        digest *= 0x100000001b3ULL;
    }

    const auto op_ns = dynavid::profiling::snapshot_ns();
    std::uint64_t total_ns = 0;
    for (const std::uint64_t ns : op_ns) total_ns += ns;

    const double clips_per_sec = static_cast<double>(items.size() - failures) / seconds;
    const double frames_per_sec = static_cast<double>(total_frames) / seconds;

    if (as_json) {
        json doc{{"clips", items.size()},
                 {"failures", failures},
                 {"seconds", seconds},
                 {"clips_per_sec", clips_per_sec},
                 {"frames_per_sec", frames_per_sec},
                 {"digest", digest},
                 {"op_time_share", json::object()}};
        for (int k = 0; k < dynavid::kNumOpKinds; ++k) {
            if (op_ns[static_cast<std::size_t>(k)] == 0) continue;
            doc["op_time_share"][std::string(dynavid::op_name(static_cast<dynavid::OpKind>(k)))] =
                static_cast<double>(op_ns[static_cast<std::size_t>(k)]) /
                static_cast<double>(total_ns);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("clips: %zu  failures: %d  wall: %.3fs\n", items.size(), failures, seconds);
        std::printf("throughput: %.2f clips/sec, %.1f frames/sec\n", clips_per_sec,
                    frames_per_sec);
        std::printf("output digest: %016llx\n", static_cast<unsigned long long>(digest));
        if (total_ns > 0) {
            std::printf("per-op time share:\n");
            for (int k = 0; k < dynavid::kNumOpKinds; ++k) {
                const std::uint64_t ns = op_ns[static_cast<std::size_t>(k)];
                if (ns == 0) continue;
                std::printf("  %-18s %5.1f%%\n",
                            std::string(dynavid::op_name(static_cast<dynavid::OpKind>(k))).c_str(),
                            100.0 * static_cast<double>(ns) / static_cast<double>(total_ns));
            }
        }
    }
    return failures == 0 ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Video clip augmentation with temporally varying magnitudes"};
    app.require_subcommand(1);

    // augment
    PolicyFlags aug_policy;
    std::string aug_input, aug_output, aug_log;
    std::uint64_t aug_seed = 0;
    int aug_workers = static_cast<int>(std::thread::hardware_concurrency());
    CLI::App* augment = app.add_subcommand("augment", "Augment a directory of clips");
    augment->add_option("--input", aug_input, "Directory of clip subdirectories")->required();
    augment->add_option("--output", aug_output, "Output directory (mirrored tree)")->required();
    add_policy_flags(augment, aug_policy);
    augment->add_option("--seed", aug_seed, "Master seed")->capture_default_str();
    augment->add_option("--workers", aug_workers, "Worker threads")->capture_default_str();
    augment->add_option("--log-policies", aug_log, "JSON-lines file of applied policies");

    // schedule
    ScheduleFlags sched_flags;
    int sched_frames = 32;
    double sched_m = 9.0;
    std::uint64_t sched_seed = 0;
    int sched_count = 1;
    std::string sched_format = "csv";
    std::string sched_forced, sched_output;
    CLI::App* schedule = app.add_subcommand("schedule", "Emit sampled magnitude schedules");
    schedule->add_option("--frames", sched_frames, "Schedule length")->capture_default_str();
    schedule->add_option("--m", sched_m, "Base magnitude")->capture_default_str();
    schedule->add_option("--bases", sched_flags.bases, "Sinusoidal basis count")
        ->capture_default_str();
    schedule->add_option("--freq", sched_flags.freq, "Frequency range LO:HI")
        ->capture_default_str();
    schedule->add_option("--amp", sched_flags.amp, "Amplitude range LO:HI")
        ->capture_default_str();
    schedule->add_option("--kind", sched_flags.kind, "Schedule family")
        ->check(CLI::IsMember({"static", "fourier", "linear", "sine", "random", "random-gauss"}))
        ->capture_default_str();
    schedule->add_option("--seed", sched_seed, "Seed")->capture_default_str();
    schedule->add_option("--count", sched_count, "Number of schedules")->capture_default_str();
    schedule->add_option("--format", sched_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    schedule->add_option("--forced-bases", sched_forced,
                         "JSON file with fixed basis tuples (weight/frequency/amplitude/offset)");
    schedule->add_option("--output", sched_output, "Write to file instead of stdout");

    // report
    std::string report_kinds = "static,linear,sine,random,fourier";
    int report_frames = 32;
    double report_m = 9.0;
    int report_samples = 1000;
    std::uint64_t report_seed = 0;
    std::string report_ratios;
    CLI::App* report = app.add_subcommand("report", "Schedule regime statistics as CSV");
    report->add_option("--kinds", report_kinds, "Comma-separated schedule kinds")
        ->capture_default_str();
    report->add_option("--frames", report_frames, "Schedule length")->capture_default_str();
    report->add_option("--m", report_m, "Base magnitude")->capture_default_str();
    report->add_option("--samples", report_samples, "Schedules per regime")
        ->capture_default_str();
    report->add_option("--seed", report_seed, "Seed")->capture_default_str();
    report->add_option("--ratios", report_ratios,
                       "JSON fixture of accuracy/loss rows to render as affinity/diversity");

    // corrupt
    std::string corrupt_input, corrupt_output;
    int corrupt_qp = 23;
    CLI::App* corrupt = app.add_subcommand("corrupt", "Re-encode a video via ffmpeg at a CRF");
    corrupt->add_option("--input", corrupt_input, "Input video file")->required();
    corrupt->add_option("--qp", corrupt_qp, "H.264 CRF value in [0, 51]")->required();
    corrupt->add_option("--output", corrupt_output, "Output video file")->required();

    // bench
    PolicyFlags bench_policy;
    std::string bench_input, bench_synthetic;
    std::uint64_t bench_seed = 0;
    int bench_workers = static_cast<int>(std::thread::hardware_concurrency());
    bool bench_json = false;
    CLI::App* bench = app.add_subcommand("bench", "Measure augmentation throughput");
    bench->add_option("--input", bench_input, "Directory of clips");
    bench->add_option("--synthetic", bench_synthetic, "Synthetic set TxHxW,COUNT");
    add_policy_flags(bench, bench_policy);
    bench->add_option("--seed", bench_seed, "Master seed")->capture_default_str();
    bench->add_option("--workers", bench_workers, "Worker threads")->capture_default_str();
    bench->add_flag("--json", bench_json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (augment->parsed()) {
            return run_augment(aug_policy, aug_input, aug_output, aug_seed, aug_workers, aug_log);
        }
        if (schedule->parsed()) {
            return run_schedule(sched_flags, sched_frames, sched_m, sched_seed, sched_count,
                                sched_format, sched_forced, sched_output);
        }
        if (report->parsed()) {
            return run_report(report_kinds, report_frames, report_m, report_samples, report_seed,
                              report_ratios);
        }
        if (corrupt->parsed()) {
            return run_corrupt(corrupt_input, corrupt_qp, corrupt_output);
        }
        if (bench->parsed()) {
            return run_bench(bench_policy, bench_input, bench_synthetic, bench_seed,
                             bench_workers, bench_json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dynavid::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dynavid::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
