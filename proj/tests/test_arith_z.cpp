#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nell/arith_z.hpp"
#include "nell/norm_ideal.hpp"

using namespace nell;

namespace {

using Multiset = std::multiset<long>;

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

bool trial_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

long sigma(long n, long a) { return 1 - (n + 1) * a; }

// a = b o c with b, c nonzero, searched on the element side.
bool splits(long n, long a) {
    const long w = std::abs(a) + 1;
    for (long b = -w; b <= w; ++b) {
        if (b == 0) continue;
        const long den = sigma(n, b);
        if ((a - b) % den != 0) continue;
        if ((a - b) / den != 0) return true;
    }
    return false;
}

// Every multiset of atoms of 1 + (n+1)Z multiplying to s, blocks taken in
// non-decreasing order of (|value|, value).
void partitions(long n, long s, long lo_abs, long lo_val, std::vector<long>& cur, std::set<Multiset>& out) {
    if (s == 1) {
        Multiset m;
        for (long b : cur) m.insert((1 - b) / (n + 1));
        out.insert(m);
        return;
    }
    for (long abs_d = lo_abs; abs_d <= std::abs(s); ++abs_d)
        for (long d : {-abs_d, abs_d}) {
            if (abs_d == lo_abs && d < lo_val) continue;
            if (s % d != 0) continue;
            if (((d - 1) % (n + 1)) != 0) continue;
            const long rest = s / d;
            if (((rest - 1) % (n + 1)) != 0) continue;
            bool atom = true;
            for (long e = 2; e < abs_d && atom; ++e)
                for (long se : {-e, e})
                    if (d % se == 0 && (se - 1) % (n + 1) == 0 && ((d / se) - 1) % (n + 1) == 0) atom = false;
            if (!atom) continue;
            cur.push_back(d);
            partitions(n, rest, abs_d, d, cur, out);
            cur.pop_back();
        }
}

std::set<Multiset> brute_factorizations(long n, long a) {
    std::set<Multiset> out;
    std::vector<long> cur;
    partitions(n, sigma(n, a), 2, -1'000'000, cur, out);
    return out;
}

std::set<Multiset> as_sets(const FactorizationSet& fs) {
    std::set<Multiset> out;
    for (const auto& f : fs.factorizations) {
        Multiset m;
        for (const auto& x : f.expanded()) m.insert(x.get_si());
        out.insert(m);
    }
    return out;
}

BaseElem L(long num, unsigned long k, unsigned long base) { return BaseElem::localized(num, k, base); }

}  // namespace

TEST(IsIrreducible, Examples) {
    EXPECT_TRUE(is_irreducible(Params(4), -1));
    EXPECT_TRUE(is_irreducible(Params(2), -2));
    EXPECT_FALSE(is_irreducible(Params(2), -1));
    EXPECT_EQ(circ_product(Params(2), std::vector<BigInt>{1, 1}), -1);
    EXPECT_EQ(code_of([] { is_irreducible(Params(2), 0); }), Errc::UnitInput);
}

TEST(IsIrreducible, AgreesWithElementSideSearch) {
    for (long n = 2; n <= 7; ++n)
        for (long a = -300; a <= 300; ++a) {
            if (a == 0) continue;
            EXPECT_EQ(is_irreducible(Params(n), a), !splits(n, a)) << n << " " << a;
        }
}

TEST(IsPrimeElem, Examples) {
    EXPECT_FALSE(is_prime_elem(Params(4), -1));
    EXPECT_TRUE(is_prime_elem(Params(2), 1));
    EXPECT_FALSE(is_prime_elem(Params(2), -9));
    EXPECT_EQ(code_of([] { is_prime_elem(Params(3), 0); }), Errc::UnitInput);
}

TEST(IsPrimeElem, NormIsPlusMinusOne) {
    for (long n = 2; n <= 12; ++n)
        for (long a = -2000; a <= 2000; ++a) {
            if (a == 0) continue;
            const long s = std::abs(sigma(n, a));
            EXPECT_EQ(is_prime_elem(Params(n), a), trial_prime(s));
            if (trial_prime(s)) EXPECT_TRUE(s % (n + 1) == 1 || s % (n + 1) == n);
        }
}

TEST(IrreducibleVersusPrime, MatchesIrredEqualsPrime) {
    for (long n = 2; n <= 12; ++n) {
        const Params p(n);
        bool gap = false;
        for (long a = -2000; a <= 2000; ++a) {
            if (a == 0) continue;
            const bool irr = is_irreducible(p, a), pr = is_prime_elem(p, a);
            if (pr) EXPECT_TRUE(irr) << n << " " << a;
            if (irr && !pr) gap = true;
        }
        EXPECT_EQ(irred_equals_prime(p), !gap) << n;
    }
    EXPECT_TRUE(irred_equals_prime(Params(2)));
    EXPECT_FALSE(irred_equals_prime(Params(4)));
    EXPECT_TRUE(irred_equals_prime(Params(5)));
}

TEST(FactorIrreducibles, Examples) {
    const auto f = factor_irreducibles(Params(2), -9);
    EXPECT_EQ(f.factors, (std::vector<FactorEntry>{{1, 2}, {-2, 1}}));
    EXPECT_EQ(f.product(Params(2)), -9);
    EXPECT_EQ(factor_irreducibles(Params(2), -2).factors, (std::vector<FactorEntry>{{-2, 1}}));
    const auto g = factor_irreducibles(Params(4), -7);
    EXPECT_EQ(g.product(Params(4)), -7);
    EXPECT_EQ(code_of([] { factor_irreducibles(Params(2), 0); }), Errc::UnitInput);
}

TEST(FactorIrreducibles, ValidForManyInputs) {
    for (long n = 2; n <= 8; ++n) {
        const Params p(n);
        for (long a = -400; a <= 400; ++a) {
            if (a == 0) continue;
            const auto f = factor_irreducibles(p, a);
            EXPECT_EQ(f.product(p), a);
            for (const auto& e : f.factors) EXPECT_TRUE(is_irreducible(p, e.element));
            const auto ex = f.expanded();
            EXPECT_TRUE(std::is_sorted(ex.begin(), ex.end(),
                                       [&](const BigInt& x, const BigInt& y) { return norm_order_less(p, x, y); }));
        }
    }
}

TEST(FactorIrreducibles, LargeNorms) {
    const Params p(3);
    const BigInt a("-123456789012345678901");
    const auto f = factor_irreducibles(p, a);
    EXPECT_EQ(f.product(p), a);
}

TEST(AllFactorizations, Examples) {
    const auto s4 = all_factorizations(Params(4), -7);
    EXPECT_EQ(as_sets(s4), (std::set<Multiset>{{-1, -1}, {1, 2}}));
    for (const auto& f : s4.factorizations) EXPECT_EQ(f.product(Params(4)), -7);
    const auto s2 = all_factorizations(Params(2), -9);
    EXPECT_EQ(as_sets(s2), (std::set<Multiset>{{1, 1, -2}}));
    EXPECT_EQ(as_sets(all_factorizations(Params(3), 4)).size(), 1u);
    EXPECT_FALSE(s4.cap_exceeded);
}

TEST(AllFactorizations, AgreesWithDivisorPartition) {
    for (long n : {2L, 4L, 6L, 7L}) {
        const Params p(n);
        for (long a = -80; a <= 80; ++a) {
            if (a == 0) continue;
            EXPECT_EQ(as_sets(all_factorizations(p, a)), brute_factorizations(n, a)) << n << " " << a;
        }
    }
}

TEST(AllFactorizations, UniqueWhenClassGroupTrivial) {
    for (long n : {2L, 3L, 5L}) {
        const Params p(n);
        for (long a = -500; a <= 500; ++a) {
            if (a == 0) continue;
            const auto s = all_factorizations(p, a);
            ASSERT_EQ(s.factorizations.size(), 1u) << n << " " << a;
            EXPECT_EQ(s.factorizations.front().expanded(), factor_irreducibles(p, a).expanded());
        }
    }
}

TEST(AllFactorizations, CapIsReported) {
    const auto s = all_factorizations(Params(4), -7, 1);
    EXPECT_TRUE(s.cap_exceeded);
    EXPECT_EQ(s.factorizations.size(), 1u);
}

TEST(EnumerateIrreducibles, Examples) {
    EXPECT_EQ(enumerate_irreducibles(Params(2), 8), (std::vector<BigInt>{1, 2, -2}));
    EXPECT_EQ(enumerate_irreducibles(Params(4), 6), (std::vector<BigInt>{1, -1}));
    EXPECT_TRUE(enumerate_irreducibles(Params(2), 1).empty());
}

TEST(EnumerateIrreducibles, MatchesScan) {
    for (long n = 2; n <= 6; ++n) {
        const Params p(n);
        const std::uint64_t bound = 3000;
        std::vector<BigInt> expected;
        for (long a = -1000; a <= 1000; ++a)
            if (a != 0 && std::abs(sigma(n, a)) <= static_cast<long>(bound) && !splits(n, a)) expected.push_back(a);
        std::sort(expected.begin(), expected.end(),
                  [&](const BigInt& x, const BigInt& y) { return norm_order_less(p, x, y); });
        EXPECT_EQ(enumerate_irreducibles(p, bound), expected);
    }
}

TEST(EnumeratePrimes, Examples) {
    EXPECT_EQ(enumerate_primes(Params(2), 13), (std::vector<BigInt>{1, 2, -2, 4, -4}));
    EXPECT_EQ(enumerate_primes(Params(4), 11), (std::vector<BigInt>{-2}));
    EXPECT_TRUE(enumerate_primes(Params(2), 1).empty());
}

TEST(EnumeratePrimes, MatchesScan) {
    for (long n = 2; n <= 12; ++n) {
        const Params p(n);
        const long bound = 20000;
        std::vector<std::pair<long, long>> expected;  // (q, a)
        for (long a = -bound; a <= bound; ++a) {
            if (a == 0) continue;
            const long s = std::abs(sigma(n, a));
            if (s <= bound && trial_prime(s)) expected.emplace_back(s, a);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<BigInt> want;
        for (const auto& [q, a] : expected) want.push_back(a);
        EXPECT_EQ(enumerate_primes(p, bound), want) << n;
    }
}

TEST(LocPrime, Examples) {
    const Params p4(4), p2(2);
    EXPECT_TRUE(loc_is_prime(p4, L(-1, 1, 5)));
    EXPECT_FALSE(loc_is_prime(p4, L(-1, 0, 5)));
    EXPECT_TRUE(loc_is_prime(p2, L(-2, 0, 3)));
    EXPECT_EQ(code_of([&] { loc_is_prime(p4, L(0, 0, 5)); }), Errc::UnitInput);
    EXPECT_EQ(code_of([&] { loc_is_prime(p4, L(1, 1, 5)); }), Errc::AbsorbingInput);
    EXPECT_EQ(code_of([&] { loc_is_irreducible(p4, L(1, 1, 5)); }), Errc::AbsorbingInput);
    EXPECT_EQ(code_of([&] { loc_is_prime(p4, BaseElem::integer(1)); }), Errc::CarrierMismatch);
}

TEST(LocPrime, PrimeIffIrreducible) {
    for (long n : {2L, 4L, 6L}) {
        const Params p(n);
        for (long num = -200; num <= 200; ++num)
            for (unsigned long k = 0; k <= 3; ++k) {
                const BaseElem a = L(num, k, p.base());
                if (is_unit(p, a) || a == absorbing_element(p, Carrier::localized(p))) continue;
                EXPECT_EQ(loc_is_prime(p, a), loc_is_irreducible(p, a)) << n << " " << a.to_string();
            }
    }
}

TEST(Integrality, Examples) {
    EXPECT_TRUE(integrality_test(Params(2), L(-2, 0, 3)));
    EXPECT_FALSE(integrality_test(Params(4), L(-1, 1, 5)));
    EXPECT_TRUE(integrality_test(Params(4), L(0, 0, 5)));
}

TEST(Integrality, MatchesNormResidue) {
    for (long n : {2L, 4L, 6L}) {
        const Params p(n);
        for (long num = -100; num <= 100; ++num)
            for (unsigned long k = 0; k <= 3; ++k) {
                const BaseElem a = L(num, k, p.base());
                const LocVal s = norm(p, a).as_loc();
                const bool norm_integral_one = s.k == 0 && mod(s.num, p.base_big()) == 1;
                EXPECT_EQ(integrality_test(p, a), norm_integral_one);
            }
    }
}
