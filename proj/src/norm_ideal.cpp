#include "nell/norm_ideal.hpp"

#include <algorithm>

#include "nell/nary_core.hpp"

namespace nell {

BaseElem norm(const Params& params, const BaseElem& a) {
    const Carrier c = a.carrier();
    return c.one() - c.from_int(params.base_big()) * a;
}

std::optional<BaseElem> norm_preimage(const Params& params, const BaseElem& s) {
    const Carrier c = s.carrier();
    const BaseElem diff = c.one() - s;
    const BigInt base = params.base_big();
    switch (c.kind()) {
        case Carrier::Kind::Integers: {
            const BigInt& v = diff.as_int().v;
            if (mod(v, base) != 0) return std::nullopt;
            return BaseElem::integer(v / base);
        }
        case Carrier::Kind::Localized:
            return base_exact_div(diff, c.from_int(base));
        case Carrier::Kind::Modular: {
            const BigInt& m = c.modulus();
            const BigInt d = gcd(base, m);
            const BigInt& v = diff.as_mod().v;
            if (mod(v, d) != 0) return std::nullopt;
            const BigInt m_red = m / d;
            if (m_red == 1) return c.zero();
            return BaseElem::residue((v / d) * inv_mod(base / d, m_red) % m_red, m);
        }
    }
    return std::nullopt;
}

bool is_unit(const Params& params, const BaseElem& a) { return base_is_unit(norm(params, a)); }

BaseElem unit_inverse(const Params& params, const BaseElem& u) {
    const BaseElem s = norm(params, u);
    if (!base_is_unit(s)) throw Error(Errc::NotAUnit, u.to_string() + " has norm " + s.to_string());
    return -(u * base_inverse(s));
}

std::optional<BaseElem> divides(const Params& params, const BaseElem& p, const BaseElem& a) {
    if (p.is_mod() || a.is_mod())
        throw Error(Errc::UnsupportedCarrier, "divisibility witnesses are computed over Z and Z[1/(n+1)] only");
    if (!(p.carrier() == a.carrier())) throw Error(Errc::CarrierMismatch, "divides across carriers");
    const BaseElem np = norm(params, p);
    if (np.is_zero()) {
        if (a == p) return p.carrier().zero();
        return std::nullopt;
    }
    auto k = base_exact_div(norm(params, a), np);
    if (!k) return std::nullopt;
    return a - p * *k;
}

bool cancellation_defect(const Params& params, const BaseElem& a, const BaseElem& b, const BaseElem& c) {
    return circ(params, a, b) == circ(params, a, c);
}

bool is_cancellative_carrier(const Params& params, const Carrier& carrier) {
    if (!carrier.finite()) return true;
    const BigInt& m = carrier.modulus();
    for (const auto& a : carrier.elements()) {
        const BaseElem s = norm(params, a);
        if (!s.is_zero() && gcd(s.as_mod().v, m) != 1) return false;
    }
    return true;
}

std::vector<BaseElem> idempotents(const Params& params, const Carrier& carrier) {
    if (!carrier.finite()) throw Error(Errc::InfiniteCarrier, carrier.name() + " cannot be scanned");
    std::vector<BaseElem> out;
    for (const auto& a : carrier.elements())
        if (circ(params, a, a) == a) out.push_back(a);
    return out;
}

BaseElem absorbing_element(const Params& params, const Carrier& carrier) {
    switch (carrier.kind()) {
        case Carrier::Kind::Integers:
            break;
        case Carrier::Kind::Modular:
            if (gcd(params.base_big(), carrier.modulus()) == 1)
                return BaseElem::residue(inv_mod(params.base_big(), carrier.modulus()), carrier.modulus());
            break;
        case Carrier::Kind::Localized:
            return BaseElem::localized(1, 1, carrier.base());
    }
    throw Error(Errc::NoAbsorbingElement, std::to_string(params.base()) + " is not invertible in " + carrier.name());
}

// ---------------------------------------------------------------------------
// Ideals of nEll(Z)

const BigInt& NIdealZ::generator() const {
    if (is_empty()) throw Error(Errc::EmptyIdeal, "the empty ideal has no generator");
    return m_;
}

std::string NIdealZ::to_string() const { return is_empty() ? "empty" : "J(" + nell::to_string(m_) + ")"; }

NIdealZ j_ideal(const Params& params, const BigInt& m) {
    if (m < 1) throw Error(Errc::InvalidArgument, "J(m) needs m >= 1, got " + to_string(m));
    if (gcd(m, params.base_big()) != 1) return NIdealZ::empty(params);
    return NIdealZ(params, m);
}

bool j_member(const BigInt& x, const NIdealZ& ideal) {
    const BigInt& m = ideal.generator();
    return mod(ideal.params().base_big() * x - 1, m) == 0;
}

NIdealZ ideal_mul(const NIdealZ& a, const NIdealZ& b) {
    if (!(a.params() == b.params())) throw Error(Errc::CarrierMismatch, "ideals of different arities");
    if (a.is_empty() || b.is_empty()) return NIdealZ::empty(a.params());
    return j_ideal(a.params(), a.generator() * b.generator());
}

NIdealZ principal_ideal_of(const Params& params, const BigInt& a) {
    return j_ideal(params, abs(1 - params.base_big() * a));
}

bool is_prime_ideal(const NIdealZ& ideal) {
    if (ideal.is_empty()) return true;
    return is_prime(ideal.generator());
}

// ---------------------------------------------------------------------------
// Congruences over Z/m

namespace {

using u128 = unsigned __int128;

/// Sums of k members (k = 1..levels) with the first way each sum was reached.
struct SumLevels {
    std::vector<std::vector<std::int64_t>> last;  // -1 unreachable, else the member added last
};

SumLevels sum_levels(const std::vector<std::uint64_t>& members, std::uint64_t m, std::size_t levels) {
    SumLevels out;
    out.last.assign(levels, std::vector<std::int64_t>(m, -1));
    for (auto r : members)
        if (out.last[0][r] < 0) out.last[0][r] = static_cast<std::int64_t>(r);
    for (std::size_t k = 1; k < levels; ++k) {
        for (std::uint64_t s = 0; s < m; ++s) {
            if (out.last[k - 1][s] < 0) continue;
            for (auto r : members) {
                const std::uint64_t t = (s + r) % m;
                if (out.last[k][t] < 0) out.last[k][t] = static_cast<std::int64_t>(r);
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> reconstruct(const SumLevels& levels, std::size_t count, std::uint64_t sum,
                                       std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::size_t k = count; k-- > 0;) {
        const auto r = static_cast<std::uint64_t>(levels.last[k][sum]);
        out.push_back(r);
        sum = (sum + m - r) % m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CongruenceResult congruent(const Params& params, const Carrier& carrier, const BaseElem& x, const BaseElem& y,
                           std::span<const BaseElem> members, std::uint64_t cap) {
    if (!carrier.finite()) throw Error(Errc::InvalidArgument, "congruences are searched over residue rings only");
    if (!(x.carrier() == carrier) || !(y.carrier() == carrier))
        throw Error(Errc::CarrierMismatch, "x and y must lie in " + carrier.name());

    if (members.empty()) {
        CongruenceResult res;
        if (x == y) {
            res.outcome = CongruenceOutcome::Witness;
            res.witness = CongruenceWitness{};
        }
        return res;
    }

    if (carrier.modulus() > 10'000'000)
        throw Error(Errc::InvalidArgument, "modulus too large for a witness search: " + carrier.name());
    const std::uint64_t m = to_u64(carrier.modulus());
    const std::uint64_t base = params.base() % m;
    const auto n = static_cast<std::size_t>(params.n());

    std::vector<char> in_ideal(m, 0);
    std::vector<std::uint64_t> ideal;
    for (const auto& e : members) {
        if (!(e.carrier() == carrier)) throw Error(Errc::CarrierMismatch, "ideal member outside " + carrier.name());
        const std::uint64_t r = to_u64(e.as_mod().v);
        if (!in_ideal[r]) {
            in_ideal[r] = 1;
            ideal.push_back(r);
        }
    }
    std::sort(ideal.begin(), ideal.end());

    const std::uint64_t work = detail::saturating_mul(detail::saturating_mul(n + 1, m), ideal.size());
    if (work > cap) return {CongruenceOutcome::Inconclusive, std::nullopt};

    for (std::uint64_t a = 0; a < m; ++a)
        for (auto r : ideal) {
            const auto prod = static_cast<std::uint64_t>(static_cast<u128>(base) * a % m * r % m);
            const std::uint64_t c = static_cast<std::uint64_t>((static_cast<u128>(a) + r + m - prod) % m);
            if (!in_ideal[c])
                throw Error(Errc::NotAnIdeal, std::to_string(a) + " o " + std::to_string(r) + " leaves the set");
        }

    const SumLevels levels = sum_levels(ideal, m, n);
    for (std::uint64_t s = 0; s < m; ++s)
        if (levels.last[n - 1][s] >= 0 && !in_ideal[(1 + m - s) % m])
            throw Error(Errc::NotAnIdeal, "star of members leaves the set");

    // x * a^ = y * b^  <=>  sum(a^) - sum(b^) = y - x.
    const std::uint64_t delta = to_u64(mod(y.as_mod().v - x.as_mod().v, carrier.modulus()));
    const auto& reach = levels.last[n - 2];
    for (std::uint64_t sb = 0; sb < m; ++sb) {
        const std::uint64_t sa = (sb + delta) % m;
        if (reach[sb] < 0 || reach[sa] < 0) continue;
        CongruenceWitness w;
        for (auto r : reconstruct(levels, n - 1, sa, m)) w.a.push_back(BaseElem::residue(BigInt(r), carrier.modulus()));
        for (auto r : reconstruct(levels, n - 1, sb, m)) w.b.push_back(BaseElem::residue(BigInt(r), carrier.modulus()));
        return {CongruenceOutcome::Witness, std::move(w)};
    }
    return {CongruenceOutcome::NoWitness, std::nullopt};
}

// ---------------------------------------------------------------------------
// Reduction maps

BaseElem QuotientMap::absorbing() const { return BaseElem::residue(inv_mod(params_.base_big(), m_), m_); }

QuotientMap quotient_map(const Params& params, const BigInt& m) {
    if (m < 2 || gcd(m, params.base_big()) != 1)
        throw Error(Errc::BadModulus, "reduction needs m >= 2 coprime to " + std::to_string(params.base()) +
                                          ", got " + to_string(m));
    return QuotientMap(params, m);
}

NIdealZ kernel(const Params& params, const BigInt& m) {
    if (m < 1 || gcd(m, params.base_big()) != 1)
        throw Error(Errc::BadModulus, "kernel needs m >= 1 coprime to " + std::to_string(params.base()) + ", got " +
                                          to_string(m));
    return j_ideal(params, m);
}

}  // namespace nell
