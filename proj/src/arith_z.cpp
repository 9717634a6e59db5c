#include "nell/arith_z.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "nell/norm_ideal.hpp"

namespace nell {

namespace {

void require_nonzero(const BigInt& a) {
    if (a == 0) throw Error(Errc::UnitInput, "0 is the unit of nEll(Z)");
}

bool one_mod(const BigInt& s, const BigInt& base) { return mod(s, base) == 1; }

bool block_less(const BigInt& s, const BigInt& t) {
    const BigInt as = abs(s);
    const BigInt at = abs(t);
    return as != at ? as < at : s < t;
}

BigInt block_to_element(const Params& params, const BigInt& s) { return (1 - s) / params.base_big(); }

std::vector<FactorEntry> group_blocks(const Params& params, const std::vector<BigInt>& blocks) {
    std::vector<FactorEntry> out;
    for (const auto& s : blocks) {
        BigInt a = block_to_element(params, s);
        if (!out.empty() && out.back().element == a)
            ++out.back().multiplicity;
        else
            out.push_back({std::move(a), 1});
    }
    return out;
}

/// Signed divisors s of r (|s| > 1) that are 1 mod (n+1) with cofactor 1 mod (n+1), in block order.
std::vector<BigInt> blocks_of(const BigInt& r, const std::vector<BigInt>& divisors, const BigInt& base) {
    std::vector<BigInt> out;
    const BigInt ar = abs(r);
    for (const auto& d : divisors) {
        if (d > ar) break;
        if (d < 2 || mod(ar, d) != 0) continue;
        for (const BigInt& s : {BigInt(-d), d})
            if (one_mod(s, base) && one_mod(r / s, base)) out.push_back(s);
    }
    return out;
}

}  // namespace

BigInt norm_z(const Params& params, const BigInt& a) { return 1 - params.base_big() * a; }

BigInt circ_product(const Params& params, std::span<const BigInt> elems) {
    const BigInt base = params.base_big();
    BigInt acc = 0;
    for (const auto& a : elems) acc = acc + a - base * acc * a;
    return acc;
}

bool norm_order_less(const Params& params, const BigInt& a, const BigInt& b) {
    return block_less(norm_z(params, a), norm_z(params, b));
}

bool is_block_irreducible(const Params& params, const BigInt& s) {
    const BigInt base = params.base_big();
    if (!one_mod(s, base) || abs(s) <= 1) return false;
    for (const auto& d : positive_divisors(factor_int(s))) {
        if (d == 1 || d == abs(s)) continue;
        for (const BigInt& u : {BigInt(-d), d})
            if (one_mod(u, base) && one_mod(s / u, base)) return false;
    }
    return true;
}

bool is_irreducible(const Params& params, const BigInt& a) {
    require_nonzero(a);
    return is_block_irreducible(params, norm_z(params, a));
}

bool is_prime_elem(const Params& params, const BigInt& a) {
    require_nonzero(a);
    return is_prime(abs(norm_z(params, a)));
}

BigInt Factorization::product(const Params& params) const {
    const auto all = expanded();
    return circ_product(params, all);
}

std::vector<BigInt> Factorization::expanded() const {
    std::vector<BigInt> out;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) out.push_back(f.element);
    return out;
}

Factorization factor_irreducibles(const Params& params, const BigInt& a) {
    require_nonzero(a);
    const BigInt base = params.base_big();
    const auto divisors = positive_divisors(factor_int(norm_z(params, a)));

    std::vector<BigInt> blocks;
    BigInt rest = norm_z(params, a);
    while (rest != 1) {
        // The smallest block is an atom: a split of it would give a smaller one.
        const auto candidates = blocks_of(rest, divisors, base);
        blocks.push_back(candidates.front());
        rest /= candidates.front();
    }
    std::sort(blocks.begin(), blocks.end(), block_less);
    return {a, group_blocks(params, blocks)};
}

namespace {

class FactorizationSearch {
public:
    FactorizationSearch(const Params& params, const BigInt& target, std::size_t cap)
        : params_(params), base_(params.base_big()), cap_(cap),
          divisors_(positive_divisors(factor_int(target))) {}

    bool exceeded() const { return exceeded_; }

    /// Block lists with product r whose blocks are all >= lo in block order.
    const std::vector<std::vector<BigInt>>& run(const BigInt& r, const BigInt& lo) {
        auto key = std::make_pair(r, lo);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<std::vector<BigInt>> out;
        if (r == 1) {
            out.emplace_back();
        } else {
            for (const auto& s : blocks_of(r, divisors_, base_)) {
                if (block_less(s, lo) || !irreducible(s)) continue;
                for (const auto& tail : run(r / s, s)) {
                    if (out.size() >= cap_) {
                        exceeded_ = true;
                        break;
                    }
                    std::vector<BigInt> list{s};
                    list.insert(list.end(), tail.begin(), tail.end());
                    out.push_back(std::move(list));
                }
            }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    bool irreducible(const BigInt& s) {
        auto it = atoms_.find(s);
        if (it == atoms_.end()) it = atoms_.emplace(s, is_block_irreducible(params_, s)).first;
        return it->second;
    }

    Params params_;
    BigInt base_;
    std::size_t cap_;
    std::vector<BigInt> divisors_;
    bool exceeded_ = false;
    std::map<std::pair<BigInt, BigInt>, std::vector<std::vector<BigInt>>> memo_;
    std::map<BigInt, bool> atoms_;
};

}  // namespace

FactorizationSet all_factorizations(const Params& params, const BigInt& a, std::size_t cap) {
    require_nonzero(a);
    const BigInt n = norm_z(params, a);
    FactorizationSearch search(params, n, cap);
    // 1 precedes every block, so it is a safe lower bound.
    const auto& lists = search.run(n, BigInt(1));

    FactorizationSet out;
    out.cap_exceeded = search.exceeded();
    for (const auto& blocks : lists) out.factorizations.push_back({a, group_blocks(params, blocks)});
    return out;
}

std::vector<BigInt> enumerate_irreducibles(const Params& params, std::uint64_t norm_bound) {
    std::vector<BigInt> out;
    if (norm_bound < 2) return out;
    const BigInt base = params.base_big();
    const BigInt bound(std::to_string(norm_bound));
    BigInt lo, hi;
    const BigInt lo_num = 1 - bound;
    const BigInt hi_num = 1 + bound;
    mpz_cdiv_q(lo.get_mpz_t(), lo_num.get_mpz_t(), base.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), hi_num.get_mpz_t(), base.get_mpz_t());
    for (BigInt a = lo; a <= hi; ++a)
        if (a != 0 && abs(norm_z(params, a)) <= bound && is_irreducible(params, a)) out.push_back(a);
    std::sort(out.begin(), out.end(), [&](const BigInt& x, const BigInt& y) { return norm_order_less(params, x, y); });
    return out;
}

std::vector<BigInt> enumerate_primes(const Params& params, std::uint64_t norm_bound) {
    std::vector<BigInt> out;
    if (norm_bound < 2) return out;
    if (norm_bound > 10'000'000'000ULL) throw Error(Errc::InvalidArgument, "norm bound above 10^10");
    std::vector<bool> composite(norm_bound + 1, false);
    const std::uint64_t base = params.base();
    const BigInt base_big = params.base_big();
    for (std::uint64_t q = 2; q <= norm_bound; ++q) {
        if (composite[q]) continue;
        if (q <= norm_bound / q)
            for (std::uint64_t k = q * q; k <= norm_bound; k += q) composite[k] = true;
        const std::uint64_t r = q % base;
        if (r != 1 && r != base - 1) continue;
        const BigInt s = r == 1 ? BigInt(std::to_string(q)) : BigInt(-BigInt(std::to_string(q)));
        out.push_back((1 - s) / base_big);
    }
    return out;
}

bool irred_equals_prime(const Params& params) {
    const unsigned long base = params.base();
    for (unsigned long u = 2; u + 1 < base; ++u)
        if (std::gcd(u, base) == 1) return false;
    return true;
}

namespace {

const LocVal& require_loc_nonunit(const Params& params, const BaseElem& a) {
    if (!a.is_loc() || a.as_loc().base != params.base())
        throw Error(Errc::CarrierMismatch, "expected an element of Z[1/" + std::to_string(params.base()) + "]");
    if (is_unit(params, a)) throw Error(Errc::UnitInput, a.to_string() + " is a unit");
    if (norm(params, a).is_zero()) throw Error(Errc::AbsorbingInput, a.to_string() + " is absorbing");
    return a.as_loc();
}

/// Whether every prime factor of v divides base, by repeatedly removing common factors.
bool only_base_primes(BigInt v, const BigInt& base) {
    v = abs(v);
    for (BigInt g = gcd(v, base); g > 1; g = gcd(v, base))
        while (mod(v, g) == 0) v /= g;
    return v == 1;
}

}  // namespace

bool loc_is_prime(const Params& params, const BaseElem& a) {
    require_loc_nonunit(params, a);
    const auto [unit, core] = split_base_part(norm(params, a).as_loc().num, params.base());
    return is_prime(abs(core));
}

bool loc_is_irreducible(const Params& params, const BaseElem& a) {
    require_loc_nonunit(params, a);
    const BigInt c = abs(norm(params, a).as_loc().num);
    const BigInt base = params.base_big();
    const BigInt root = isqrt(c);
    for (BigInt d = 2; d <= root; ++d)
        if (mod(c, d) == 0 && !only_base_primes(d, base) && !only_base_primes(c / d, base)) return false;
    return true;
}

bool integrality_test(const Params& params, const BaseElem& a) {
    if (!a.is_loc() || a.as_loc().base != params.base())
        throw Error(Errc::CarrierMismatch, "expected an element of Z[1/" + std::to_string(params.base()) + "]");
    return a.as_loc().k == 0;
}

}  // namespace nell
