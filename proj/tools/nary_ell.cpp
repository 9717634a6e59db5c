// nary-ell: explore the n-ary elliptic ring nEll(Z) from the command line.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nell/axioms.hpp"
#include "nell/cli/commands.hpp"
#include "nell/cli/render.hpp"
#include "nell/cli/sieve.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nell::BigInt parse_int(const std::string& text, const char* flag) {
    auto v = nell::parse_bigint(text);
    if (!v) throw UsageError(std::string(flag) + ": not an integer: " + text);
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic of the n-ary elliptic ring nEll(Z)", "nary-ell"};
    app.require_subcommand(1);

    long n = 2;
    std::uint64_t bound = 0;
    std::string modulus = "2";
    std::string a_text;
    std::vector<std::string> seeds;
    bool all = false;
    std::string format = "text";
    std::uint64_t seed = nell::CheckOptions{}.seed;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "arity n >= 2")->required();
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* primes = app.add_subcommand("primes", "prime elements with |norm| <= bound");
    common(primes);
    primes->add_option("--bound", bound, "norm bound")->required();

    auto* factor = app.add_subcommand("factor", "factor an element into irreducibles");
    common(factor);
    factor->add_option("--a", a_text, "element")->required();
    factor->add_flag("--all", all, "list every factorization");

    auto* classgroup = app.add_subcommand("classgroup", "the class group Cl_n(Z)");
    common(classgroup);

    auto* dirichlet = app.add_subcommand("dirichlet", "prime elements versus a sieve of primes = +-1 mod n+1");
    common(dirichlet);
    dirichlet->add_option("--bound", bound, "norm bound")->required();

    auto* euclid = app.add_subcommand("euclid", "Euclid's argument for a finite list of irreducibles");
    common(euclid);
    euclid->add_option("--seeds", seeds, "comma-separated list, e.g. --seeds=1,-2")->delimiter(',');

    auto* axioms = app.add_subcommand("axioms", "check the ring axioms on nEll(Z/m)");
    common(axioms);
    axioms->add_option("--mod", modulus, "modulus m >= 2")->required();
    axioms->add_option("--seed", seed, "seed for sampled checks");

    auto* table = app.add_subcommand("table", "nEll(Z) against nEll(Z[1/(n+1)])");
    common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (n < 2) throw UsageError("--n must be at least 2");
        nell::cli::CommandResult result;
        if (*primes) {
            result = nell::cli::cmd_primes(n, bound);
        } else if (*factor) {
            result = nell::cli::cmd_factor(n, parse_int(a_text, "--a"), all);
        } else if (*classgroup) {
            result = nell::cli::cmd_classgroup(n);
        } else if (*dirichlet) {
            result = nell::cli::cmd_dirichlet(n, bound, nell::cli::default_threads());
        } else if (*euclid) {
            std::vector<nell::BigInt> list;
            for (const auto& s : seeds) list.push_back(parse_int(s, "--seeds"));
            result = nell::cli::cmd_euclid(n, list);
        } else if (*axioms) {
            const nell::BigInt m = parse_int(modulus, "--mod");
            if (m < 2) throw UsageError("--mod must be at least 2");
            result = nell::cli::cmd_axioms(n, m, seed);
        } else {
            result = nell::cli::cmd_table(n);
        }
        std::cout << (format == "json" ? nell::cli::render_json(result) : nell::cli::render_text(result));
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const nell::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == nell::Errc::InvalidArgument ? kUsage : kDomain;
    }
}
