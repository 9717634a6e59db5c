#include "nell/class_group.hpp"

#include <algorithm>
#include <numeric>

#include "nell/arith_z.hpp"

namespace nell {

FracIdeal::FracIdeal(const Params& params, const std::map<BigInt, long>& exponents) {
    for (const auto& [p, e] : exponents) {
        if (!is_prime(p) || mod(params.base_big(), p) == 0)
            throw Error(Errc::BadGenerator, to_string(p) + " is not a prime ideal generator for n = " +
                                                std::to_string(params.n()));
        if (e != 0) exponents_.emplace(p, e);
    }
}

FracIdeal operator+(const FracIdeal& a, const FracIdeal& b) {
    FracIdeal out = a;
    for (const auto& [p, e] : b.exponents_) {
        const long sum = (out.exponents_[p] += e);
        if (sum == 0) out.exponents_.erase(p);
    }
    return out;
}

FracIdeal operator-(const FracIdeal& a) {
    FracIdeal out = a;
    for (auto& [p, e] : out.exponents_) e = -e;
    return out;
}

IdealClass class_of_residue(const Params& params, const BigInt& u) {
    const BigInt base = params.base_big();
    const BigInt r = mod(u, base);
    if (gcd(r, base) != 1) throw Error(Errc::BadGenerator, to_string(u) + " is not a unit mod " + to_string(base));
    const unsigned long v = r.get_ui();
    return {std::min(v, params.base() - v)};
}

IdealClass class_mul(const Params& params, const IdealClass& a, const IdealClass& b) {
    return class_of_residue(params, BigInt(a.rep) * BigInt(b.rep));
}

IdealClass psi(const Params& params, const BigInt& p) {
    if (!is_prime(p) || mod(params.base_big(), p) == 0)
        throw Error(Errc::BadGenerator, to_string(p) + " is not a prime coprime to " + std::to_string(params.base()));
    return class_of_residue(params, p);
}

IdealClass class_of_frac(const Params& params, const FracIdeal& f) {
    const BigInt base = params.base_big();
    BigInt acc = 1;
    for (const auto& [p, e] : f.exponents()) {
        const BigInt g = e >= 0 ? mod(p, base) : inv_mod(p, base);
        BigInt term;
        const unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
        mpz_powm_ui(term.get_mpz_t(), g.get_mpz_t(), k, base.get_mpz_t());
        acc = mod(acc * term, base);
    }
    return class_of_residue(params, acc);
}

std::uint64_t totient(std::uint64_t v) {
    if (v == 0) return 0;
    std::uint64_t phi = v;
    for (const auto& f : factor_int(BigInt(std::to_string(v))).factors) {
        const std::uint64_t p = to_u64(f.prime);
        phi = phi / p * (p - 1);
    }
    return phi;
}

std::uint64_t class_group_order(const Params& params) { return totient(params.base()) / 2; }

std::vector<IdealClass> class_group_elements(const Params& params) {
    std::vector<IdealClass> out;
    const unsigned long base = params.base();
    for (unsigned long u = 1; 2 * u <= base; ++u)
        if (std::gcd(u, base) == 1) out.push_back({u});
    return out;
}

std::vector<PrimePower> ideal_factor(const Params& params, const BigInt& m) {
    if (m < 1 || gcd(m, params.base_big()) != 1)
        throw Error(Errc::BadGenerator, "J(" + to_string(m) + ") is not a nonempty ideal for n = " +
                                            std::to_string(params.n()));
    if (m == 1) return {};
    return factor_int(m).factors;
}

namespace {

FracIdeal frac_of(const Params& params, const std::vector<PrimePower>& factors) {
    std::map<BigInt, long> exps;
    for (const auto& f : factors) exps[f.prime] = static_cast<long>(f.exponent);
    return FracIdeal(params, exps);
}

}  // namespace

IdealClass class_of_ideal(const Params& params, const NIdealZ& ideal) {
    const BigInt& m = ideal.generator();
    return class_of_frac(params, frac_of(params, ideal_factor(params, m)));
}

bool is_principal(const Params& params, const NIdealZ& ideal) { return class_of_ideal(params, ideal).is_identity(); }

NIdealZ prime_ideal_of_element(const Params& params, const BigInt& q) {
    if (q == 0 || !is_prime_elem(params, q))
        throw Error(Errc::NotPrimeElement, to_string(q) + " is not a prime element for n = " +
                                               std::to_string(params.n()));
    return principal_ideal_of(params, q);
}

}  // namespace nell
