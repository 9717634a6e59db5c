#pragma once

/**
 * @file arith_z.hpp
 * @brief Element arithmetic in nEll(Z) and nEll(Z[1/(n+1)]): irreducibles,
 * primes, factorization into irreducibles, enumeration by norm.
 *
 * Elements of nEll(Z) are plain integers. Everything is decided on the norm
 * side, where a o b corresponds to multiplication inside 1 + (n+1)Z.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "nell/base_rings.hpp"

namespace nell {

/// 1 - (n+1)a over Z.
BigInt norm_z(const Params& params, const BigInt& a);

/// a_1 o a_2 o ... (0 for the empty product).
BigInt circ_product(const Params& params, std::span<const BigInt> elems);

/// Orders elements by |norm|, then by norm.
bool norm_order_less(const Params& params, const BigInt& a, const BigInt& b);

/// s is an atom of the multiplicative monoid 1 + (n+1)Z: s = 1 (mod n+1),
/// |s| > 1, and s has no split s = u*v with u, v = 1 (mod n+1), |u|, |v| > 1.
bool is_block_irreducible(const Params& params, const BigInt& s);

/// Errc::UnitInput for a = 0.
bool is_irreducible(const Params& params, const BigInt& a);

/// |norm(a)| is a classical prime. Errc::UnitInput for a = 0.
bool is_prime_elem(const Params& params, const BigInt& a);

struct FactorEntry {
    BigInt element;
    unsigned multiplicity = 0;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct Factorization {
    BigInt target;
    /// Distinct irreducibles in norm order.
    std::vector<FactorEntry> factors;

    /// The o-product of the factors with multiplicity.
    BigInt product(const Params& params) const;
    /// Factors with multiplicity, in norm order.
    std::vector<BigInt> expanded() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Repeatedly splits off the smallest norm block (a divisor s of the
/// remaining norm with s and its cofactor both 1 mod (n+1)). Errc::UnitInput.
Factorization factor_irreducibles(const Params& params, const BigInt& a);

struct FactorizationSet {
    std::vector<Factorization> factorizations;
    bool cap_exceeded = false;
};

/// Every multiset of irreducibles with o-product a, up to `cap` of them.
/// Errc::UnitInput.
FactorizationSet all_factorizations(const Params& params, const BigInt& a, std::size_t cap = 10'000);

/// All irreducibles with 1 < |norm| <= norm_bound, in norm order.
std::vector<BigInt> enumerate_irreducibles(const Params& params, std::uint64_t norm_bound);

/// For each prime q <= norm_bound with q = +-1 (mod n+1), the element whose
/// norm is the one of +-q that is 1 mod (n+1). Ordered by q.
std::vector<BigInt> enumerate_primes(const Params& params, std::uint64_t norm_bound);

/// Every unit of Z/(n+1) is +-1.
bool irred_equals_prime(const Params& params);

/// In the localization: norm(a) is a unit times a prime not dividing n + 1.
/// Errc::UnitInput, Errc::AbsorbingInput.
bool loc_is_prime(const Params& params, const BaseElem& a);

/// In the localization: norm(a) is not a product of two non-units, found by
/// scanning divisors of its numerator. Errc::UnitInput, Errc::AbsorbingInput.
bool loc_is_irreducible(const Params& params, const BaseElem& a);

/// a has no denominator.
bool integrality_test(const Params& params, const BaseElem& a);

}  // namespace nell
