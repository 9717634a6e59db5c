#include "nell/nary_core.hpp"

#include <algorithm>
#include <set>

namespace nell {

BaseElem star(const Params& params, const BaseElem& g, std::span<const BaseElem> elems) {
    if (elems.size() != static_cast<std::size_t>(params.n()))
        throw Error(Errc::ArityMismatch,
                    "star takes " + std::to_string(params.n()) + " inputs, got " + std::to_string(elems.size()));
    BaseElem acc = g;
    for (const auto& a : elems) acc = acc - a;
    return acc;
}

BaseElem star(const Params& params, std::span<const BaseElem> elems) {
    if (elems.empty()) throw Error(Errc::ArityMismatch, "star of no inputs");
    return star(params, elems.front().carrier().one(), elems);
}

BaseElem circ(const Params& params, const BaseElem& a, const BaseElem& b) {
    const BaseElem lambda = a.carrier().from_int(params.base_big());
    return a + b - lambda * a * b;
}

NEllElem::NEllElem(Params params, BaseElem value) : params_(params), value_(std::move(value)) {
    if (value_.is_loc() && value_.as_loc().base != params_.base())
        throw Error(Errc::CarrierMismatch, "localized value inverts " + std::to_string(value_.as_loc().base) +
                                               " but n + 1 = " + std::to_string(params_.base()));
}

NEllElem circ(const NEllElem& a, const NEllElem& b) {
    if (!(a.params() == b.params())) throw Error(Errc::CarrierMismatch, "elements read under different arities");
    return NEllElem(a.params(), circ(a.params(), a.value(), b.value()));
}

NEllElem star(std::span<const NEllElem> elems) {
    if (elems.empty()) throw Error(Errc::ArityMismatch, "star of no inputs");
    const Params& p = elems.front().params();
    std::vector<BaseElem> values;
    for (const auto& e : elems) {
        if (!(e.params() == p)) throw Error(Errc::CarrierMismatch, "elements read under different arities");
        values.push_back(e.value());
    }
    return NEllElem(p, star(p, values));
}

// ---------------------------------------------------------------------------
// Descent

BaseElem StandardStar::operator()(std::span<const BaseElem> elems) const {
    if (elems.size() != arity)
        throw Error(Errc::ArityMismatch,
                    "operation takes " + std::to_string(arity) + " inputs, got " + std::to_string(elems.size()));
    BaseElem acc = g;
    for (const auto& a : elems) acc = acc - a;
    return acc;
}

StandardStar standard_star(const Params& params, const BaseElem& g) {
    return {static_cast<std::size_t>(params.n()), g};
}

StandardStar descend(const StandardStar& op, const BaseElem& o) {
    if (op.arity < 3) throw Error(Errc::ArityTooSmall, "cannot descend below a binary operation");
    return {op.arity - 1, op.g - o};
}

StandardStar descend(const Params& params, const BaseElem& g, const BaseElem& o) {
    return descend(standard_star(params, g), o);
}

BaseElem derived_group_add(const Params& params, const BaseElem& g, std::span<const BaseElem> o_chain,
                           const BaseElem& o, const BaseElem& a, const BaseElem& b) {
    const auto n = static_cast<std::size_t>(params.n());
    if (o_chain.size() != n - 2)
        throw Error(Errc::ArityMismatch, "descent chain needs n - 2 = " + std::to_string(n - 2) + " elements, got " +
                                             std::to_string(o_chain.size()));
    const StandardStar top = standard_star(params, g);
    NaryFunction<BaseElem> op{n, [top](std::span<const BaseElem> xs) { return top(xs); }};
    for (const auto& oi : o_chain) op = descend_op(op, oi);

    const std::vector<BaseElem> ab{a, b};
    const BaseElem inner = op.fn(ab);
    const std::vector<BaseElem> outer{o, inner};
    return op.fn(outer);
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

constexpr std::uint64_t kMaxEnumeratedModulus = std::uint64_t{1} << 32;
const BigInt kMaxWindow = 1'000'000;

std::uint64_t residue_u64(const BaseElem& x, const Carrier& carrier) {
    return to_u64(mod(x.carrier() == carrier ? x.as_mod().v : x.as_int().v, carrier.modulus()));
}

/// The operations of the (r, lambda) ring over Z/m on machine words.
NaryStructure<std::uint64_t> modular_structure(std::size_t arity, std::uint64_t m, std::uint64_t r,
                                               std::uint64_t lambda) {
    using u128 = unsigned __int128;
    NaryStructure<std::uint64_t> s;
    s.arity = arity;
    s.star = [m, r](std::span<const std::uint64_t> xs) {
        u128 sum = 0;
        for (auto x : xs) sum += x;
        const auto reduced = static_cast<std::uint64_t>(sum % m);
        return (r + m - reduced) % m;
    };
    s.circ = [m, lambda](const std::uint64_t& a, const std::uint64_t& b) {
        const auto prod = static_cast<std::uint64_t>(static_cast<u128>(lambda) * a % m * b % m);
        return static_cast<std::uint64_t>((static_cast<u128>(a) + b + m - prod) % m);
    };
    s.show = [](const std::uint64_t& x) { return std::to_string(x); };
    return s;
}

std::vector<std::uint64_t> modular_domain(const Carrier& carrier) {
    if (carrier.modulus() >= BigInt(std::to_string(kMaxEnumeratedModulus)))
        throw Error(Errc::InvalidArgument, "modulus too large to enumerate: " + carrier.name());
    std::vector<std::uint64_t> out(to_u64(carrier.modulus()));
    for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

std::vector<BaseElem> window_domain(const Carrier& carrier, const std::optional<Window>& window) {
    if (!window)
        throw Error(Errc::InfiniteCarrierWithoutWindow, carrier.name() + " needs a bounded window to be checked");
    if (window->hi < window->lo || window->hi - window->lo + 1 > kMaxWindow)
        throw Error(Errc::InvalidArgument, "window must be non-empty with at most 10^6 points");
    std::set<BaseElem> points;
    for (BigInt v = window->lo; v <= window->hi; ++v) {
        if (carrier.kind() == Carrier::Kind::Localized) {
            points.insert(BaseElem::localized(v, 0, carrier.base()));
            points.insert(BaseElem::localized(v, 1, carrier.base()));
        } else {
            points.insert(carrier.from_int(v));
        }
    }
    return {points.begin(), points.end()};
}

NaryStructure<BaseElem> generic_structure(const Params& params, const BaseElem& r, const BaseElem& lambda) {
    NaryStructure<BaseElem> s;
    s.arity = static_cast<std::size_t>(params.n());
    s.star = [r](std::span<const BaseElem> xs) {
        BaseElem acc = r;
        for (const auto& x : xs) acc = acc - x;
        return acc;
    };
    s.circ = [lambda](const BaseElem& a, const BaseElem& b) { return a + b - lambda * a * b; };
    s.show = [](const BaseElem& x) { return x.to_string(); };
    return s;
}

enum class Laws { Group, Distributivity, All };

AxiomReport run_checks(const Params& params, const BaseElem& g, const BaseElem& r, const BaseElem& lambda,
                       const Carrier& carrier, const AxiomCheckConfig& config, Laws laws) {
    auto run = [&](auto checker_group, auto checker_dist) {
        AxiomReport report;
        if (laws != Laws::Distributivity) report = checker_group.run_group_laws();
        if (laws != Laws::Group) {
            AxiomReport d = checker_dist.run_distributivity();
            report.dist_ok = d.dist_ok;
            report.samples_checked += d.samples_checked;
            report.exhaustive = (laws == Laws::Distributivity ? true : report.exhaustive) && d.exhaustive;
            report.seed = d.seed;
            if (!report.counterexample) report.counterexample = d.counterexample;
        }
        return report;
    };

    if (carrier.kind() == Carrier::Kind::Modular) {
        const std::uint64_t m = to_u64(carrier.modulus());
        auto domain = modular_domain(carrier);
        auto group = modular_structure(params.n(), m, residue_u64(g, carrier), 0);
        auto ring = modular_structure(params.n(), m, residue_u64(r, carrier), residue_u64(lambda, carrier));
        return run(AxiomChecker<std::uint64_t>(group, domain, config.options),
                   AxiomChecker<std::uint64_t>(ring, domain, config.options));
    }
    auto domain = window_domain(carrier, config.window);
    auto to_carrier = [&](const BaseElem& x) { return x.carrier() == carrier ? x : carrier.from_int(x.as_int().v); };
    auto group = generic_structure(params, to_carrier(g), carrier.zero());
    auto ring = generic_structure(params, to_carrier(r), to_carrier(lambda));
    AxiomReport report = run(AxiomChecker<BaseElem>(group, domain, config.options),
                             AxiomChecker<BaseElem>(ring, domain, config.options));
    // A window covers part of an infinite carrier only.
    report.exhaustive = false;
    report.seed = config.options.seed;
    return report;
}

}  // namespace

AxiomReport check_axioms(const Params& params, const BaseElem& g, const Carrier& carrier,
                         const AxiomCheckConfig& config) {
    return run_checks(params, g, carrier.one(), carrier.from_int(params.base_big()), carrier, config, Laws::All);
}

AxiomReport check_distributivity(const Params& params, const Carrier& carrier, const AxiomCheckConfig& config) {
    return run_checks(params, carrier.one(), carrier.one(), carrier.from_int(params.base_big()), carrier, config,
                      Laws::Distributivity);
}

AxiomReport lambda_variant_report(const Params& params, const BaseElem& r, const BaseElem& lambda,
                                  const Carrier& carrier, const AxiomCheckConfig& config) {
    return run_checks(params, carrier.one(), r, lambda, carrier, config, Laws::Distributivity);
}

bool compatible_pair(const Params& params, const BaseElem& r, const BaseElem& lambda, const Carrier& carrier,
                     const AxiomCheckConfig& config) {
    return lambda_variant_report(params, r, lambda, carrier, config).dist_ok;
}

bool compatible_pair_algebraic(const Params& params, const BaseElem& r, const BaseElem& lambda) {
    return lambda * r == r.carrier().from_int(params.base_big());
}

}  // namespace nell
