#pragma once

/**
 * @file sieve.hpp
 * @brief Segmented Eratosthenes sieve counting primes in the classes +-1 mod k.
 */

#include <cstdint>

namespace nell::cli {

struct PmOneCounts {
    std::uint64_t plus_one = 0;   // q = 1 (mod k)
    std::uint64_t minus_one = 0;  // q = -1 (mod k)

    std::uint64_t total() const { return plus_one + minus_one; }
};

/// Primes q <= bound with q = +-1 (mod k), k >= 3. Segments are split over
/// `threads` workers; the result does not depend on the thread count.
PmOneCounts count_pm_one_primes(std::uint64_t bound, std::uint64_t k, unsigned threads = 1);

/// NARY_ELL_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
unsigned default_threads();

}  // namespace nell::cli
