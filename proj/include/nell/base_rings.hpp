#pragma once

/**
 * @file base_rings.hpp
 * @brief Exact arithmetic for the three base carriers: the integers, the
 * residue rings Z/mZ, and the localization Z[1/(n+1)].
 *
 * Elements carry their carrier with them (a residue knows its modulus, a
 * localized value knows the base it inverts), so mixing carriers is caught
 * at the point of use and reported as Errc::CarrierMismatch.
 */

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nell/bigint.hpp"
#include "nell/error.hpp"

namespace nell {

/// The fixed arity n >= 2. Everything downstream also needs n + 1.
class Params {
public:
    explicit Params(long n);

    long n() const noexcept { return n_; }
    /// n + 1, the number inverted by the localization and the norm's slope.
    unsigned long base() const noexcept { return static_cast<unsigned long>(n_) + 1; }
    BigInt base_big() const { return BigInt(base()); }

    friend bool operator==(const Params&, const Params&) = default;

private:
    long n_;
};

struct IntVal {
    BigInt v;
};

/// 0 <= v < m, m >= 2.
struct ModVal {
    BigInt v;
    BigInt m;
};

/// num / base^k, normalized so that k == 0 or base does not divide num.
struct LocVal {
    BigInt num;
    unsigned long k = 0;
    unsigned long base = 0;
};

class BaseElem;

/// Describes which ring an element lives in.
class Carrier {
public:
    enum class Kind { Integers, Modular, Localized };

    static Carrier integers() { return Carrier(Kind::Integers, 0, 0); }
    static Carrier modular(const BigInt& m);
    static Carrier localized(const Params& params) { return Carrier(Kind::Localized, 0, params.base()); }
    static Carrier localized(unsigned long base);

    Kind kind() const noexcept { return kind_; }
    bool finite() const noexcept { return kind_ == Kind::Modular; }
    const BigInt& modulus() const noexcept { return modulus_; }
    unsigned long base() const noexcept { return base_; }

    /// The image of an integer under the canonical map Z -> carrier.
    BaseElem from_int(const BigInt& v) const;
    BaseElem zero() const;
    BaseElem one() const;

    /// Every element, in increasing residue order. Modular carriers only.
    std::vector<BaseElem> elements() const;

    std::string name() const;

    friend bool operator==(const Carrier& a, const Carrier& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.base_ == b.base_;
    }

private:
    Carrier(Kind kind, const BigInt& m, unsigned long base) : kind_(kind), modulus_(m), base_(base) {}

    Kind kind_;
    BigInt modulus_;
    unsigned long base_;
};

class BaseElem {
public:
    /// The integer 0.
    BaseElem() : value_(IntVal{BigInt(0)}) {}
    static BaseElem integer(const BigInt& v) { return BaseElem(IntVal{v}); }
    static BaseElem integer(long v) { return BaseElem(IntVal{BigInt(v)}); }
    /// Reduces v into [0, m). Requires m >= 2.
    static BaseElem residue(const BigInt& v, const BigInt& m);
    /// num / base^k, normalized. Requires base >= 2.
    static BaseElem localized(const BigInt& num, unsigned long k, unsigned long base);

    bool is_int() const noexcept { return std::holds_alternative<IntVal>(value_); }
    bool is_mod() const noexcept { return std::holds_alternative<ModVal>(value_); }
    bool is_loc() const noexcept { return std::holds_alternative<LocVal>(value_); }

    const IntVal& as_int() const;
    const ModVal& as_mod() const;
    const LocVal& as_loc() const;

    Carrier carrier() const;
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const BaseElem& a, const BaseElem& b);
    /// Total order within one carrier (by value for Z and Z/m, by rational value for the localization).
    friend bool operator<(const BaseElem& a, const BaseElem& b);

private:
    using Storage = std::variant<IntVal, ModVal, LocVal>;
    explicit BaseElem(Storage s) : value_(std::move(s)) {}

    Storage value_;
};

BaseElem base_add(const BaseElem& a, const BaseElem& b);
BaseElem base_sub(const BaseElem& a, const BaseElem& b);
BaseElem base_neg(const BaseElem& a);
BaseElem base_mul(const BaseElem& a, const BaseElem& b);

inline BaseElem operator+(const BaseElem& a, const BaseElem& b) { return base_add(a, b); }
inline BaseElem operator-(const BaseElem& a, const BaseElem& b) { return base_sub(a, b); }
inline BaseElem operator-(const BaseElem& a) { return base_neg(a); }
inline BaseElem operator*(const BaseElem& a, const BaseElem& b) { return base_mul(a, b); }

/// Z: |v| = 1. Z/m: gcd(v, m) = 1. Localization: every prime factor of the
/// numerator divides the base.
bool base_is_unit(const BaseElem& a);

/// Multiplicative inverse; Errc::NotInvertible if a is not a unit.
BaseElem base_inverse(const BaseElem& a);

/// The unique q with a = b * q when it exists. Integers and the localization
/// only (residue rings have non-unique quotients); Errc::UnsupportedCarrier otherwise.
std::optional<BaseElem> base_exact_div(const BaseElem& a, const BaseElem& b);

/// x with a*x = 1 (mod m), 0 <= x < m. Errc::NotInvertible when gcd(a, m) != 1.
BigInt inv_mod(const BigInt& a, const BigInt& m);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct IntFactorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending primes

    BigInt value() const;
};

/// Classical factorization v = sign * prod p^e. Trial division for small
/// factors, Pollard-Brent rho for large cofactors. Errc::ZeroInput for v = 0.
IntFactorization factor_int(const BigInt& v);

/// All positive divisors of |v|, ascending. v != 0.
std::vector<BigInt> positive_divisors(const IntFactorization& f);

/// Splits v = u * c with u a product of primes dividing `base` (a unit of the
/// localization, sign folded into c) and c coprime to base. Returns (u, c), u > 0.
std::pair<BigInt, BigInt> split_base_part(const BigInt& v, unsigned long base);

}  // namespace nell
