#include "nell/bigint.hpp"

#include <array>
#include <cctype>

#include "nell/error.hpp"

namespace nell {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::UnsupportedCarrier: return "UnsupportedCarrier";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ArityTooSmall: return "ArityTooSmall";
    case Errc::InfiniteCarrierWithoutWindow: return "InfiniteCarrierWithoutWindow";
    case Errc::InfiniteCarrier: return "InfiniteCarrier";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::EmptyIdeal: return "EmptyIdeal";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::BadModulus: return "BadModulus";
    case Errc::NoAbsorbingElement: return "NoAbsorbingElement";
    case Errc::UnitInput: return "UnitInput";
    case Errc::AbsorbingInput: return "AbsorbingInput";
    case Errc::BadGenerator: return "BadGenerator";
    case Errc::NotPrimeElement: return "NotPrimeElement";
    case Errc::InvalidSeed: return "InvalidSeed";
    }
    return "Unknown";
}

std::optional<BigInt> parse_bigint(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    BigInt out;
    std::string digits = text[0] == '+' ? text.substr(1) : text;
    if (out.set_str(digits, 10) != 0) return std::nullopt;
    return out;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt abs(const BigInt& v) { return ::abs(v); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v) {
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

BigInt isqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    std::uint64_t d = v - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& v) {
    if (sgn(v) <= 0) return false;
    if (fits_u64(v)) return is_prime_u64(to_u64(v));
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

}  // namespace nell
