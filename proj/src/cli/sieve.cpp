#include "nell/cli/sieve.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nell::cli {

namespace {

constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t j = p * p; j <= limit; j += p) composite[j] = 1;
    }
    return out;
}

std::uint64_t isqrt_u64(std::uint64_t v) {
    std::uint64_t r = 0;
    while ((r + 1) <= v / (r + 1)) ++r;
    return r;
}

PmOneCounts count_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t k,
                        const std::vector<std::uint64_t>& primes) {
    PmOneCounts counts;
    std::vector<char> composite;
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        composite.assign(end - start + 1, 0);
        for (auto p : primes) {
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) composite[j - start] = 1;
        }
        for (std::uint64_t q = std::max<std::uint64_t>(start, 2); q <= end; ++q) {
            if (composite[q - start]) continue;
            const std::uint64_t r = q % k;
            if (r == 1) ++counts.plus_one;
            else if (r == k - 1) ++counts.minus_one;
        }
        if (end == hi) break;
    }
    return counts;
}

}  // namespace

PmOneCounts count_pm_one_primes(std::uint64_t bound, std::uint64_t k, unsigned threads) {
    if (bound < 2) return {};
    const auto primes = small_primes(isqrt_u64(bound));
    const std::uint64_t segments = (bound + kSegment) / kSegment;
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, segments));

    std::vector<PmOneCounts> partial(threads);
    std::vector<std::thread> pool;
    const std::uint64_t per = (segments + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * per * kSegment;
        if (lo > bound) break;
        const std::uint64_t hi = std::min(bound, (t + 1) * per * kSegment - 1);
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi, k, primes); });
    }
    for (auto& th : pool) th.join();

    PmOneCounts total;
    for (const auto& c : partial) {
        total.plus_one += c.plus_one;
        total.minus_one += c.minus_one;
    }
    return total;
}

unsigned default_threads() {
    if (const char* env = std::getenv("NARY_ELL_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace nell::cli
