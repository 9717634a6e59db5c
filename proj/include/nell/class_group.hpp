#pragma once

/**
 * @file class_group.hpp
 * @brief Fractional ideals of nEll(Z) and the class group
 * Cl_n(Z) = (Z/(n+1))^x / {+-1}.
 *
 * A class is stored as the residue u mod n+1 standing for {u, -u}, reduced to
 * min(u, n+1-u); the identity class prints as "1".
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nell/base_rings.hpp"
#include "nell/norm_ideal.hpp"

namespace nell {

/// Exponent vector over primes not dividing n + 1; zero exponents are dropped.
class FracIdeal {
public:
    FracIdeal() = default;
    /// Errc::BadGenerator for a key that is not a prime or divides n + 1.
    FracIdeal(const Params& params, const std::map<BigInt, long>& exponents);

    const std::map<BigInt, long>& exponents() const noexcept { return exponents_; }
    bool is_unit_ideal() const noexcept { return exponents_.empty(); }

    /// Ideal product: exponents add.
    friend FracIdeal operator+(const FracIdeal& a, const FracIdeal& b);
    friend FracIdeal operator-(const FracIdeal& a);
    friend bool operator==(const FracIdeal&, const FracIdeal&) = default;

private:
    std::map<BigInt, long> exponents_;
};

struct IdealClass {
    unsigned long rep = 1;

    bool is_identity() const noexcept { return rep == 1; }
    std::string to_string() const { return std::to_string(rep); }

    friend bool operator==(const IdealClass&, const IdealClass&) = default;
    friend auto operator<=>(const IdealClass&, const IdealClass&) = default;
};

/// The class of u mod (n+1) up to sign. Errc::BadGenerator unless gcd(u, n+1) = 1.
IdealClass class_of_residue(const Params& params, const BigInt& u);

IdealClass class_mul(const Params& params, const IdealClass& a, const IdealClass& b);

/// [J(p)] = [p mod n+1]. Errc::BadGenerator when p is not prime or divides n + 1.
IdealClass psi(const Params& params, const BigInt& p);

IdealClass class_of_frac(const Params& params, const FracIdeal& f);

/// phi(n+1)/2.
std::uint64_t class_group_order(const Params& params);

/// Canonical representatives, ascending.
std::vector<IdealClass> class_group_elements(const Params& params);

/// Euler's totient by factorization.
std::uint64_t totient(std::uint64_t v);

/// Prime factorization of m, read as J(m) = prod J(p)^e. Errc::BadGenerator
/// unless m >= 1 and gcd(m, n+1) = 1.
std::vector<PrimePower> ideal_factor(const Params& params, const BigInt& m);

/// J(m) is (a) for some a. Errc::EmptyIdeal.
bool is_principal(const Params& params, const NIdealZ& ideal);

/// (q) = J(|norm(q)|) for a prime element q. Errc::NotPrimeElement.
NIdealZ prime_ideal_of_element(const Params& params, const BigInt& q);

/// Errc::EmptyIdeal.
IdealClass class_of_ideal(const Params& params, const NIdealZ& ideal);

}  // namespace nell
