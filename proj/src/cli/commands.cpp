#include "nell/cli/commands.hpp"

#include <algorithm>
#include <set>

#include "nell/class_group.hpp"
#include "nell/cli/sieve.hpp"
#include "nell/nary_core.hpp"
#include "nell/norm_ideal.hpp"

namespace nell::cli {

using nlohmann::json;

namespace {

std::string str(const BigInt& v) { return to_string(v); }

json factor_json(const Params& params, const Factorization& f) {
    json factors = json::array();
    for (const auto& e : f.factors)
        factors.push_back({{"element", str(e.element)},
                           {"norm", str(norm_z(params, e.element))},
                           {"multiplicity", e.multiplicity},
                           {"irreducible", is_irreducible(params, e.element)},
                           {"prime", is_prime_elem(params, e.element)}});
    return {{"factors", factors}};
}

std::string yes_no(bool v) { return v ? "Yes" : "No"; }

std::string residue_set(const std::set<unsigned long>& residues, unsigned long base) {
    std::string out = "q mod " + std::to_string(base) + " in {";
    bool first = true;
    for (auto r : residues) {
        out += (first ? "" : ",") + std::to_string(r);
        first = false;
    }
    return out + "}";
}

}  // namespace

CommandResult cmd_primes(long n, std::uint64_t bound) {
    const Params params(n);
    CommandResult r{"primes", {{"n", n}, {"bound", bound}}, {}, std::nullopt};
    json rows = json::array();
    for (const auto& a : enumerate_primes(params, bound)) {
        const BigInt s = norm_z(params, a);
        const BigInt q = abs(s);
        rows.push_back({{"element", str(a)},
                        {"norm", str(s)},
                        {"prime", str(q)},
                        {"residue", to_u64(mod(q, params.base_big()))}});
    }
    r.data = {{"count", rows.size()}, {"rows", rows}};
    return r;
}

CommandResult cmd_factor(long n, const BigInt& a, bool all) {
    const Params params(n);
    CommandResult r{"factor", {{"n", n}, {"a", str(a)}, {"all", all}}, {}, std::nullopt};
    json list = json::array();
    bool capped = false;
    if (all) {
        const auto set = all_factorizations(params, a);
        capped = set.cap_exceeded;
        for (const auto& f : set.factorizations) list.push_back(factor_json(params, f));
    } else {
        list.push_back(factor_json(params, factor_irreducibles(params, a)));
    }
    r.data = {{"target", str(a)}, {"norm", str(norm_z(params, a))}, {"factorizations", list}, {"cap_exceeded", capped}};
    return r;
}

CommandResult cmd_classgroup(long n) {
    const Params params(n);
    CommandResult r{"classgroup", {{"n", n}}, {}, std::nullopt};
    json classes = json::array();
    for (const auto& c : class_group_elements(params)) classes.push_back(c.to_string());
    const auto order = class_group_order(params);
    r.data = {{"order", order},
              {"totient", totient(params.base())},
              {"classes", classes},
              {"trivial", order == 1},
              {"irred_equals_prime", irred_equals_prime(params)}};
    return r;
}

CommandResult cmd_dirichlet(long n, std::uint64_t bound, unsigned threads) {
    const Params params(n);
    CommandResult r{"dirichlet", {{"n", n}, {"bound", bound}}, {}, std::nullopt};
    const auto elems = enumerate_primes(params, bound);
    std::uint64_t enum_plus = 0;
    for (const auto& a : elems)
        if (norm_z(params, a) > 0) ++enum_plus;
    const PmOneCounts sieve = count_pm_one_primes(bound, params.base(), threads);
    r.data = {{"enumerated_count", elems.size()},
              {"sieve_count", sieve.total()},
              {"equal", elems.size() == sieve.total()},
              {"enumerated_split", {{"plus_one", enum_plus}, {"minus_one", elems.size() - enum_plus}}},
              {"sieve_split", {{"plus_one", sieve.plus_one}, {"minus_one", sieve.minus_one}}}};
    return r;
}

EuclidTrace euclid_trace(const Params& params, const std::vector<BigInt>& seeds) {
    EuclidTrace t;
    t.seeds = seeds;
    for (const auto& q : seeds)
        if (q == 0) throw Error(Errc::InvalidSeed, "0 is the unit, not an irreducible");

    if (seeds.empty()) {
        t.which = EuclidTrace::Case::EmptyList;
        t.factored = 1;
        t.factorization = factor_irreducibles(params, t.factored);
    } else {
        t.n_value = circ_product(params, seeds);
        t.m_value = 1 - t.n_value;
        if (t.m_value == 0) {
            t.which = EuclidTrace::Case::MZero;
            t.factored = 2;
            t.obstruction = gcd(BigInt(params.n()), BigInt(2 * params.n() + 1));
        } else {
            t.which = EuclidTrace::Case::MNonzero;
            t.factored = t.m_value;
            t.obstruction = 1 - params.n();
        }
        t.factorization = factor_irreducibles(params, t.factored);
    }
    t.new_irreducible = t.factorization.factors.front().element;
    t.outside_list = std::find(seeds.begin(), seeds.end(), t.new_irreducible) == seeds.end();
    return t;
}

CommandResult cmd_euclid(long n, const std::vector<BigInt>& seeds) {
    const Params params(n);
    json seed_json = json::array();
    for (const auto& s : seeds) seed_json.push_back(str(s));
    CommandResult r{"euclid", {{"n", n}, {"seeds", seed_json}}, {}, std::nullopt};

    const EuclidTrace t = euclid_trace(params, seeds);
    static const char* const kCase[] = {"empty_list", "m_zero", "m_nonzero"};
    r.data = {{"case", kCase[static_cast<int>(t.which)]},
              {"factored", str(t.factored)},
              {"factored_norm", str(norm_z(params, t.factored))},
              {"factorization", factor_json(params, t.factorization)},
              {"new_irreducible", str(t.new_irreducible)},
              {"new_norm", str(norm_z(params, t.new_irreducible))},
              {"outside_list", t.outside_list}};
    if (t.which != EuclidTrace::Case::EmptyList) {
        r.data["n_value"] = str(t.n_value);
        r.data["n_norm"] = str(norm_z(params, t.n_value));
        r.data["m_value"] = str(t.m_value);
        r.data["m_norm"] = str(norm_z(params, t.m_value));
        r.data["obstruction"] = str(t.obstruction);
    }
    return r;
}

CommandResult cmd_axioms(long n, const BigInt& modulus, std::uint64_t seed) {
    const Params params(n);
    const Carrier carrier = Carrier::modular(modulus);
    CommandResult r{"axioms", {{"n", n}, {"mod", str(modulus)}, {"seed", seed}}, {}, std::nullopt};
    AxiomCheckConfig config;
    config.options.seed = seed;
    const AxiomReport rep = check_axioms(params, carrier.one(), carrier, config);
    json cx = nullptr;
    if (rep.counterexample) cx = {{"law", rep.counterexample->law}, {"inputs", rep.counterexample->inputs}};
    r.data = {{"eg1", rep.eg1_ok},
              {"eg2", rep.eg2_ok},
              {"eg3", rep.eg3_ok},
              {"distributivity", rep.dist_ok},
              {"all_pass", rep.ok()},
              {"exhaustive", rep.exhaustive},
              {"samples_checked", rep.samples_checked},
              {"counterexample", cx}};
    if (!rep.exhaustive) r.seed = seed;
    return r;
}

CommandResult cmd_table(long n) {
    const Params params(n);
    const BigInt base = params.base_big();
    const Carrier ints = Carrier::integers();
    const Carrier loc = Carrier::localized(params);
    CommandResult r{"table", {{"n", n}}, {}, std::nullopt};
    json rows = json::array();
    auto row = [&](const std::string& property, const std::string& z, const std::string& l) {
        rows.push_back({{"property", property}, {"integers", z}, {"localization", l}});
    };

    // Surjectivity of the norm on a window of targets.
    bool z_onto = true;
    bool loc_onto = true;
    for (long s = -20; s <= 20; ++s) {
        z_onto = z_onto && norm_preimage(params, ints.from_int(s)).has_value();
        loc_onto = loc_onto && norm_preimage(params, loc.from_int(s)).has_value();
    }
    row("norm_surjective", z_onto ? "Yes" : "No (image 1+" + std::to_string(params.base()) + "Z)", yes_no(loc_onto));

    // Irreducible versus prime, and uniqueness of factorization, on windows.
    bool z_irred_prime = true;
    bool z_unique = true;
    for (long a = -150; a <= 150; ++a) {
        if (a == 0) continue;
        z_irred_prime = z_irred_prime && (is_irreducible(params, a) == is_prime_elem(params, a));
        z_unique = z_unique && all_factorizations(params, a).factorizations.size() == 1;
    }
    bool loc_irred_prime = true;
    for (long num = -60; num <= 60; ++num)
        for (unsigned long k = 0; k <= 1; ++k) {
            const BaseElem a = BaseElem::localized(num, k, params.base());
            if (is_unit(params, a) || norm(params, a).is_zero()) continue;
            loc_irred_prime = loc_irred_prime && loc_is_prime(params, a) == loc_is_irreducible(params, a);
        }
    row("irreducible_equals_prime", yes_no(z_irred_prime && irred_equals_prime(params)),
        loc_irred_prime ? "Always" : "No");
    row("unique_factorization", yes_no(z_unique), loc_irred_prime ? "Always" : "No");

    // Class groups: Z side from the residue description, localization side by
    // checking that every prime ideal has a generator.
    bool loc_principal = true;
    for (std::uint64_t q = 2; q <= 200; ++q)
        if (is_prime_u64(q) && params.base() % q != 0)
            loc_principal = loc_principal && norm_preimage(params, loc.from_int(q)).has_value();
    row("class_group_order", std::to_string(class_group_order(params)), loc_principal ? "1" : "unknown");

    // Prime elements and the primes they correspond to, up to 10^4.
    constexpr std::uint64_t kBound = 10'000;
    std::set<unsigned long> z_res;
    for (const auto& a : enumerate_primes(params, kBound))
        z_res.insert(to_u64(mod(abs(norm_z(params, a)), base)));
    std::set<unsigned long> loc_res;
    std::uint64_t loc_count = 0;
    for (std::uint64_t q = 2; q <= kBound; ++q) {
        if (!is_prime_u64(q) || params.base() % q == 0) continue;
        const auto a = norm_preimage(params, loc.from_int(q));
        if (a && loc_is_prime(params, *a)) {
            ++loc_count;
            loc_res.insert(q % params.base());
        }
    }
    std::uint64_t z_count = enumerate_primes(params, kBound).size();
    row("prime_elements_up_to_10000", std::to_string(z_count), std::to_string(loc_count));
    row("primes_correspond_to", residue_set(z_res, params.base()), residue_set(loc_res, params.base()));

    r.data = {{"rows", rows}};
    return r;
}

}  // namespace nell::cli
