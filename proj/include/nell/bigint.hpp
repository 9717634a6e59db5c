#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer helpers on top of GMP's C++ interface.
 */

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace nell {

using BigInt = mpz_class;

inline BigInt big(long v) { return BigInt(v); }

/// Parses a decimal integer with optional sign; nullopt on malformed input.
std::optional<BigInt> parse_bigint(const std::string& text);

std::string to_string(const BigInt& v);

BigInt abs(const BigInt& v);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Floor-free mathematical modulus: result in [0, m) for m > 0.
BigInt mod(const BigInt& a, const BigInt& m);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);

BigInt isqrt(const BigInt& v);

/// Deterministic Miller-Rabin below 2^64 (fixed base set); above that,
/// GMP's BPSW-backed test with 40 rounds.
bool is_prime(const BigInt& v);
bool is_prime_u64(std::uint64_t v);

}  // namespace nell
