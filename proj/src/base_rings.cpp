#include "nell/base_rings.hpp"

#include <algorithm>
#include <map>

namespace nell {

Params::Params(long n) : n_(n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "arity n must be >= 2, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Carrier

Carrier Carrier::modular(const BigInt& m) {
    if (m < 2) throw Error(Errc::BadModulus, "modulus must be >= 2, got " + nell::to_string(m));
    return Carrier(Kind::Modular, m, 0);
}

Carrier Carrier::localized(unsigned long base) {
    if (base < 3) throw Error(Errc::InvalidArgument, "localization base must be n+1 >= 3");
    return Carrier(Kind::Localized, 0, base);
}

BaseElem Carrier::from_int(const BigInt& v) const {
    switch (kind_) {
    case Kind::Integers: return BaseElem::integer(v);
    case Kind::Modular: return BaseElem::residue(v, modulus_);
    case Kind::Localized: return BaseElem::localized(v, 0, base_);
    }
    throw Error(Errc::InvalidArgument, "unknown carrier");
}

BaseElem Carrier::zero() const { return from_int(0); }
BaseElem Carrier::one() const { return from_int(1); }

std::vector<BaseElem> Carrier::elements() const {
    if (!finite()) throw Error(Errc::InfiniteCarrier, "cannot enumerate " + name());
    std::vector<BaseElem> out;
    for (BigInt v = 0; v < modulus_; ++v) out.push_back(BaseElem::residue(v, modulus_));
    return out;
}

std::string Carrier::name() const {
    switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Modular: return "Z/" + nell::to_string(modulus_);
    case Kind::Localized: return "Z[1/" + std::to_string(base_) + "]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// BaseElem

namespace {

BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

void normalize(LocVal& x) {
    if (x.num == 0) {
        x.k = 0;
        return;
    }
    while (x.k > 0 && mpz_divisible_ui_p(x.num.get_mpz_t(), x.base)) {
        mpz_divexact_ui(x.num.get_mpz_t(), x.num.get_mpz_t(), x.base);
        --x.k;
    }
}

[[noreturn]] void mismatch(const BaseElem& a, const BaseElem& b) {
    throw Error(Errc::CarrierMismatch, a.carrier().name() + " vs " + b.carrier().name());
}

void require_same(const BaseElem& a, const BaseElem& b) {
    if (!(a.carrier() == b.carrier())) mismatch(a, b);
}

}  // namespace

BaseElem BaseElem::residue(const BigInt& v, const BigInt& m) {
    if (m < 2) throw Error(Errc::BadModulus, "modulus must be >= 2, got " + nell::to_string(m));
    return BaseElem(ModVal{nell::mod(v, m), m});
}

BaseElem BaseElem::localized(const BigInt& num, unsigned long k, unsigned long base) {
    if (base < 2) throw Error(Errc::InvalidArgument, "localization base must be >= 2");
    LocVal x{num, k, base};
    normalize(x);
    return BaseElem(std::move(x));
}

const IntVal& BaseElem::as_int() const {
    if (!is_int()) throw Error(Errc::CarrierMismatch, "expected an integer, got " + carrier().name());
    return std::get<IntVal>(value_);
}

const ModVal& BaseElem::as_mod() const {
    if (!is_mod()) throw Error(Errc::CarrierMismatch, "expected a residue, got " + carrier().name());
    return std::get<ModVal>(value_);
}

const LocVal& BaseElem::as_loc() const {
    if (!is_loc()) throw Error(Errc::CarrierMismatch, "expected a localized value, got " + carrier().name());
    return std::get<LocVal>(value_);
}

Carrier BaseElem::carrier() const {
    if (is_int()) return Carrier::integers();
    if (is_mod()) return Carrier::modular(std::get<ModVal>(value_).m);
    return Carrier::localized(std::get<LocVal>(value_).base);
}

bool BaseElem::is_zero() const {
    if (is_int()) return std::get<IntVal>(value_).v == 0;
    if (is_mod()) return std::get<ModVal>(value_).v == 0;
    return std::get<LocVal>(value_).num == 0;
}

std::string BaseElem::to_string() const {
    if (is_int()) return nell::to_string(std::get<IntVal>(value_).v);
    if (is_mod()) {
        const auto& x = std::get<ModVal>(value_);
        return nell::to_string(x.v) + " mod " + nell::to_string(x.m);
    }
    const auto& x = std::get<LocVal>(value_);
    if (x.k == 0) return nell::to_string(x.num);
    return nell::to_string(x.num) + "/" + nell::to_string(pow_ui(x.base, x.k));
}

bool operator==(const BaseElem& a, const BaseElem& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_int()) return a.as_int().v == b.as_int().v;
    if (a.is_mod()) return a.as_mod().m == b.as_mod().m && a.as_mod().v == b.as_mod().v;
    const auto& x = a.as_loc();
    const auto& y = b.as_loc();
    return x.base == y.base && x.k == y.k && x.num == y.num;
}

bool operator<(const BaseElem& a, const BaseElem& b) {
    require_same(a, b);
    if (a.is_int()) return a.as_int().v < b.as_int().v;
    if (a.is_mod()) return a.as_mod().v < b.as_mod().v;
    const auto& x = a.as_loc();
    const auto& y = b.as_loc();
    return x.num * pow_ui(x.base, y.k) < y.num * pow_ui(x.base, x.k);
}

// ---------------------------------------------------------------------------
// Ring operations

BaseElem base_add(const BaseElem& a, const BaseElem& b) {
    require_same(a, b);
    if (a.is_int()) return BaseElem::integer(a.as_int().v + b.as_int().v);
    if (a.is_mod()) return BaseElem::residue(a.as_mod().v + b.as_mod().v, a.as_mod().m);
    const auto& x = a.as_loc();
    const auto& y = b.as_loc();
    unsigned long k = std::max(x.k, y.k);
    BigInt num = x.num * pow_ui(x.base, k - x.k) + y.num * pow_ui(x.base, k - y.k);
    return BaseElem::localized(num, k, x.base);
}

BaseElem base_neg(const BaseElem& a) {
    if (a.is_int()) return BaseElem::integer(-a.as_int().v);
    if (a.is_mod()) return BaseElem::residue(-a.as_mod().v, a.as_mod().m);
    const auto& x = a.as_loc();
    return BaseElem::localized(-x.num, x.k, x.base);
}

BaseElem base_sub(const BaseElem& a, const BaseElem& b) { return base_add(a, base_neg(b)); }

BaseElem base_mul(const BaseElem& a, const BaseElem& b) {
    require_same(a, b);
    if (a.is_int()) return BaseElem::integer(a.as_int().v * b.as_int().v);
    if (a.is_mod()) return BaseElem::residue(a.as_mod().v * b.as_mod().v, a.as_mod().m);
    const auto& x = a.as_loc();
    const auto& y = b.as_loc();
    return BaseElem::localized(x.num * y.num, x.k + y.k, x.base);
}

std::pair<BigInt, BigInt> split_base_part(const BigInt& v, unsigned long base) {
    BigInt unit = 1;
    BigInt rest = v;
    if (rest == 0) return {unit, rest};
    const BigInt b(base);
    for (BigInt g = gcd(rest, b); g > 1; g = gcd(rest, b)) {
        rest /= g;
        unit *= g;
    }
    return {unit, rest};
}

namespace {

/// Smallest j with u | base^j, for u built from primes dividing base.
unsigned long base_exponent_covering(const BigInt& u, unsigned long base) {
    unsigned long j = 0;
    BigInt power = 1;
    while (!mpz_divisible_p(power.get_mpz_t(), u.get_mpz_t())) {
        power *= base;
        ++j;
    }
    return j;
}

}  // namespace

bool base_is_unit(const BaseElem& a) {
    if (a.is_int()) return abs(a.as_int().v) == 1;
    if (a.is_mod()) return gcd(a.as_mod().v, a.as_mod().m) == 1;
    const auto& x = a.as_loc();
    if (x.num == 0) return false;
    return abs(split_base_part(x.num, x.base).second) == 1;
}

BaseElem base_inverse(const BaseElem& a) {
    if (!base_is_unit(a)) throw Error(Errc::NotInvertible, a.to_string() + " in " + a.carrier().name());
    if (a.is_int()) return a;
    if (a.is_mod()) return BaseElem::residue(inv_mod(a.as_mod().v, a.as_mod().m), a.as_mod().m);
    const auto& x = a.as_loc();
    auto [u, sign] = split_base_part(x.num, x.base);
    unsigned long j = base_exponent_covering(u, x.base);
    BigInt cofactor = pow_ui(x.base, j) / u;
    return BaseElem::localized(sign * cofactor * pow_ui(x.base, x.k), j, x.base);
}

std::optional<BaseElem> base_exact_div(const BaseElem& a, const BaseElem& b) {
    require_same(a, b);
    if (a.is_int()) {
        const BigInt& d = b.as_int().v;
        if (d == 0) return std::nullopt;
        if (!mpz_divisible_p(a.as_int().v.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        return BaseElem::integer(a.as_int().v / d);
    }
    if (a.is_mod()) {
        if (!base_is_unit(b))
            throw Error(Errc::UnsupportedCarrier, "quotients by non-units of " + a.carrier().name() + " are not unique");
        return base_mul(a, base_inverse(b));
    }
    const auto& x = a.as_loc();
    const auto& y = b.as_loc();
    if (y.num == 0) return std::nullopt;
    auto [u, core] = split_base_part(y.num, y.base);
    if (!mpz_divisible_p(x.num.get_mpz_t(), core.get_mpz_t())) return std::nullopt;
    unsigned long j = base_exponent_covering(u, y.base);
    BigInt num = (x.num / core) * pow_ui(x.base, y.k) * (pow_ui(x.base, j) / u);
    return BaseElem::localized(num, x.k + j, x.base);
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
    if (m < 2) throw Error(Errc::BadModulus, "modulus must be >= 2");
    BigInt x;
    if (mpz_invert(x.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(Errc::NotInvertible, nell::to_string(a) + " mod " + nell::to_string(m));
    return nell::mod(x, m);
}

// ---------------------------------------------------------------------------
// Factorization

BigInt IntFactorization::value() const {
    BigInt v = sign;
    for (const auto& f : factors) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        v *= p;
    }
    return v;
}

namespace {

constexpr unsigned long kTrialLimit = 100000;

/// A nontrivial factor of the odd composite n (Brent's cycle variant).
BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, q = 1, g = 1, ys;
        const unsigned long batch = 128;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) { return nell::mod(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = nell::mod(q * abs(x - y), n);
                }
                g = gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

}  // namespace

IntFactorization factor_int(const BigInt& v) {
    if (v == 0) throw Error(Errc::ZeroInput, "cannot factor 0");
    IntFactorization result;
    result.sign = sgn(v) < 0 ? -1 : 1;
    BigInt rest = abs(v);
    std::map<BigInt, unsigned> found;

    auto strip = [&](unsigned long p) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[BigInt(p)];
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= kTrialLimit; p += 6) {
        if (BigInt(p) * p > rest) break;
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        if (BigInt(kTrialLimit) * kTrialLimit >= rest) ++found[rest];
        else factor_large(rest, found);
    }
    for (auto& [p, e] : found) result.factors.push_back({p, e});
    return result;
}

std::vector<BigInt> positive_divisors(const IntFactorization& f) {
    std::vector<BigInt> divisors{1};
    for (const auto& pp : f.factors) {
        const std::size_t count = divisors.size();
        BigInt power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace nell
