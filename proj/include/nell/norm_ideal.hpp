#pragma once

/**
 * @file norm_ideal.hpp
 * @brief The norm a -> 1 - (n+1)a and what it controls: units, divisibility,
 * cancellation, idempotents, the ideals J(m) of nEll(Z), congruences over
 * residue rings, and reduction maps nEll(Z) -> nEll(Z/m).
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nell/base_rings.hpp"

namespace nell {

/// 1 - (n+1)a in the carrier of a.
BaseElem norm(const Params& params, const BaseElem& a);

/// The a with norm(a) = s. Over Z this needs s = 1 (mod n+1); over the
/// localization it always exists. Over Z/m with gcd(n+1, m) > 1 there may be
/// several solutions and the least residue is returned.
std::optional<BaseElem> norm_preimage(const Params& params, const BaseElem& s);

/// Whether a is invertible under o, i.e. norm(a) is a unit of the base ring.
bool is_unit(const Params& params, const BaseElem& a);

/// v with u o v = 0, namely -u * norm(u)^-1. Errc::NotAUnit.
BaseElem unit_inverse(const Params& params, const BaseElem& u);

/// Some r with p o r = a, or nullopt. Exists iff norm(p) divides norm(a);
/// the witness is a - p*k with k = norm(a)/norm(p). Z and the localization only.
std::optional<BaseElem> divides(const Params& params, const BaseElem& p, const BaseElem& a);

/// Whether a o b == a o c.
bool cancellation_defect(const Params& params, const BaseElem& a, const BaseElem& b, const BaseElem& c);

/// Residue rings: no nonzero norm value is a zero divisor. Z and the
/// localization are domains, so always true there.
bool is_cancellative_carrier(const Params& params, const Carrier& carrier);

/// All a with a o a = a, ascending. Errc::InfiniteCarrier unless modular.
std::vector<BaseElem> idempotents(const Params& params, const Carrier& carrier);

/// z with a o z = z for all a: 1/(n+1). Errc::NoAbsorbingElement when n + 1
/// is not invertible (always over Z).
BaseElem absorbing_element(const Params& params, const Carrier& carrier);

/// An ideal of nEll(Z): empty, or J(m) = {a : (n+1)a = 1 mod m} with
/// gcd(m, n+1) = 1. J(1) is everything.
class NIdealZ {
public:
    static NIdealZ empty(const Params& params) { return NIdealZ(params, 0); }

    const Params& params() const noexcept { return params_; }
    bool is_empty() const noexcept { return m_ == 0; }
    bool is_full() const noexcept { return m_ == 1; }
    /// Errc::EmptyIdeal on the empty ideal.
    const BigInt& generator() const;

    std::string to_string() const;

    friend bool operator==(const NIdealZ& a, const NIdealZ& b) { return a.params_ == b.params_ && a.m_ == b.m_; }

private:
    friend NIdealZ j_ideal(const Params&, const BigInt&);
    NIdealZ(const Params& params, BigInt m) : params_(params), m_(std::move(m)) {}

    Params params_;
    BigInt m_;  // 0 encodes the empty ideal
};

/// J(m) for m >= 1; empty when gcd(m, n+1) != 1. Errc::InvalidArgument for m < 1.
NIdealZ j_ideal(const Params& params, const BigInt& m);

/// (n+1)x = 1 (mod m). Errc::EmptyIdeal.
bool j_member(const BigInt& x, const NIdealZ& ideal);

/// J(m)J(k) = J(mk); the empty ideal absorbs. Errc::CarrierMismatch for different arities.
NIdealZ ideal_mul(const NIdealZ& a, const NIdealZ& b);

/// (a) = J(|norm(a)|).
NIdealZ principal_ideal_of(const Params& params, const BigInt& a);

/// Empty is prime; J(m) is prime iff m is a classical prime.
bool is_prime_ideal(const NIdealZ& ideal);

struct CongruenceWitness {
    std::vector<BaseElem> a;
    std::vector<BaseElem> b;
};

enum class CongruenceOutcome { Witness, NoWitness, Inconclusive };

struct CongruenceResult {
    CongruenceOutcome outcome = CongruenceOutcome::NoWitness;
    std::optional<CongruenceWitness> witness;
};

/// Searches a, b in I^(n-1) with x * a_1 * .. * a_{n-1} = y * b_1 * .. * b_{n-1}
/// over nEll(Z/m). `members` must be an ideal (closure is checked,
/// Errc::NotAnIdeal). An empty ideal relates only equal elements. When the
/// search would exceed `cap` steps the outcome is Inconclusive.
CongruenceResult congruent(const Params& params, const Carrier& carrier, const BaseElem& x, const BaseElem& y,
                           std::span<const BaseElem> members, std::uint64_t cap = 50'000'000);

/// Reduction nEll(Z) -> nEll(Z/m) for m >= 2 with gcd(m, n+1) = 1.
class QuotientMap {
public:
    const Params& params() const noexcept { return params_; }
    const BigInt& modulus() const noexcept { return m_; }
    Carrier target() const { return Carrier::modular(m_); }

    BaseElem operator()(const BigInt& x) const { return BaseElem::residue(x, m_); }
    /// The absorbing element of the target; its fiber is the kernel.
    BaseElem absorbing() const;
    NIdealZ kernel() const { return j_ideal(params_, m_); }

private:
    friend QuotientMap quotient_map(const Params&, const BigInt&);
    QuotientMap(const Params& params, BigInt m) : params_(params), m_(std::move(m)) {}

    Params params_;
    BigInt m_;
};

/// Errc::BadModulus when m < 2 or gcd(m, n+1) != 1.
QuotientMap quotient_map(const Params& params, const BigInt& m);

/// The preimage of the absorbing element of nEll(Z/m), i.e. J(m). m = 1 gives
/// the full ideal. Errc::BadModulus when m < 1 or gcd(m, n+1) != 1.
NIdealZ kernel(const Params& params, const BigInt& m);

}  // namespace nell
