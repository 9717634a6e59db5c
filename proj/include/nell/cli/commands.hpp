#pragma once

/**
 * @file commands.hpp
 * @brief The nary-ell subcommands as library calls. Each returns a
 * CommandResult whose payload is JSON; rendering is in render.hpp.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nell/arith_z.hpp"
#include "nell/base_rings.hpp"

namespace nell::cli {

struct CommandResult {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json data = nlohmann::json::object();
    /// Set when the command sampled instead of enumerating.
    std::optional<std::uint64_t> seed;

    friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

CommandResult cmd_primes(long n, std::uint64_t bound);
CommandResult cmd_factor(long n, const BigInt& a, bool all);
CommandResult cmd_classgroup(long n);
CommandResult cmd_dirichlet(long n, std::uint64_t bound, unsigned threads);
CommandResult cmd_euclid(long n, const std::vector<BigInt>& seeds);
CommandResult cmd_axioms(long n, const BigInt& modulus, std::uint64_t seed);
CommandResult cmd_table(long n);

/// The case analysis of the Euclid argument for a purported complete list of
/// irreducibles q_1..q_r: N = q_1 o .. o q_r, M = 1 - N.
struct EuclidTrace {
    enum class Case { EmptyList, MZero, MNonzero };

    std::vector<BigInt> seeds;
    Case which = Case::EmptyList;
    BigInt n_value;  // N
    BigInt m_value;  // M
    /// The element whose irreducible factor is taken: 2 when M = 0, else M.
    BigInt factored;
    Factorization factorization;
    BigInt new_irreducible;
    /// What a listed factor would have to divide: gcd(n, 2n+1) when M = 0, 1 - n otherwise.
    BigInt obstruction;
    bool outside_list = false;
};

/// Errc::InvalidSeed when a seed is 0. The empty list yields 1.
EuclidTrace euclid_trace(const Params& params, const std::vector<BigInt>& seeds);

}  // namespace nell::cli
