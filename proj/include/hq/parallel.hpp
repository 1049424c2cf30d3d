#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hq::par {

/// Worker cap: HQ_THREADS when set (clamped to >= 1), else hardware concurrency.
int max_threads();

/// Splits [0, count) into fixed-size chunks and evaluates fn(begin, end) for
/// each, possibly on several threads. Results are returned in chunk order.
///
/// Chunk boundaries depend only on count and chunk_size, never on the thread
/// count, so every reduction over the returned partials is bit-identical no
/// matter how many workers ran.
template <typename T, typename Fn>
std::vector<T> map_chunks(std::size_t count, std::size_t chunk_size, Fn&& fn) {
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
    std::vector<T> out(nchunks);
    if (nchunks == 0) return out;

    auto run = [&](std::size_t c) {
        const std::size_t begin = c * chunk_size;
        const std::size_t end = std::min(begin + chunk_size, count);
        out[c] = fn(begin, end);
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), nchunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run(c);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) run(c);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hq::par
