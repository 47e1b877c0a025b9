#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace h3 {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(chunk_index, begin, end) over [0, count) split into fixed-size
// chunks. Chunk boundaries depend only on chunk_size, never on the thread
// count, so per-chunk results combined in chunk order are schedule-independent.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t chunk_size, unsigned threads, Fn fn)
{
    if (count == 0)
        return;
    if (chunk_size == 0)
        chunk_size = 1;
    std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
    threads = resolve_threads(threads);
    if (threads <= 1 || n_chunks == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c)
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= n_chunks)
                return;
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
    pool.reserve(spawn);
    for (unsigned t = 1; t < spawn; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
}

// Deterministic reduction: per-chunk partials are accumulated into a vector
// indexed by chunk and summed in chunk order.
template <class T, class Fn>
T parallel_reduce(std::size_t count, std::size_t chunk_size, unsigned threads, Fn fn)
{
    if (count == 0)
        return T{};
    if (chunk_size == 0)
        chunk_size = 1;
    std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
    std::vector<T> partial(n_chunks, T{});
    parallel_chunks(count, chunk_size, threads,
                    [&](std::size_t c, std::size_t b, std::size_t e) { partial[c] = fn(b, e); });
    T total{};
    for (const T& p : partial)
        total += p;
    return total;
}

} // namespace h3
