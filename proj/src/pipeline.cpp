#include "dynavid/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "dynavid/errors.hpp"

namespace dynavid {

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view source_id) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ master_seed;
    for (const char ch : source_id) {
        h ^= static_cast<std::uint8_t>(ch);
        h *= 0x100000001b3ULL;
    }
    // splitmix64 finisher
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

AugmentResult augment_clip(const Clip& clip, const Policy& policy, std::uint64_t seed) {
    clip.validate();
    AppliedPolicy applied =
        sample_policy(policy, clip.frame_count(), clip.width(), clip.height(), seed);
    Clip out = apply_policy(applied, clip);
    return AugmentResult{std::move(out), std::move(applied)};
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const auto n_workers =
        static_cast<std::size_t>(std::clamp<int>(workers, 1, static_cast<int>(count)));
    if (n_workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<BatchItem> augment_batch(const std::vector<Clip>& clips, const RunConfig& config) {
    if (clips.empty()) {
        throw ArgumentError("batch must contain at least one clip");
    }
    std::vector<BatchItem> items(clips.size());
    parallel_for(clips.size(), config.workers, [&](std::size_t i) {
        items[i].index = i;
        try {
            const std::uint64_t seed =
                derive_seed(config.master_seed, clips[i].source_id);
            items[i].result = augment_clip(clips[i], config.policy, seed);
        } catch (const std::exception& e) {
            items[i].error = e.what();
        }
    });
    return items;
}

}  // namespace dynavid
