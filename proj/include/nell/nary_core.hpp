#pragma once

/**
 * @file nary_core.hpp
 * @brief The standard n-ary elliptic ring nEll(R): the n-ary operation
 * star(a_1..a_n) = g - sum(a_i), the binary product a o b = a + b - (n+1)ab,
 * descent to lower arity, and axiom checks over concrete carriers.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nell/axioms.hpp"
#include "nell/base_rings.hpp"

namespace nell {

/// g - (a_1 + ... + a_n). Errc::ArityMismatch unless exactly n inputs.
BaseElem star(const Params& params, const BaseElem& g, std::span<const BaseElem> elems);

/// The ring-level star, g = 1.
BaseElem star(const Params& params, std::span<const BaseElem> elems);

/// a + b - (n+1)ab. The identity is 0.
BaseElem circ(const Params& params, const BaseElem& a, const BaseElem& b);

/// An element of nEll(R): a base value together with the arity it is read under.
class NEllElem {
public:
    NEllElem(Params params, BaseElem value);

    const Params& params() const noexcept { return params_; }
    const BaseElem& value() const noexcept { return value_; }
    Carrier carrier() const { return value_.carrier(); }

    friend bool operator==(const NEllElem&, const NEllElem&) = default;

private:
    Params params_;
    BaseElem value_;
};

NEllElem circ(const NEllElem& a, const NEllElem& b);
NEllElem star(std::span<const NEllElem> elems);

/// The standard operation of a given arity over g: g - sum of its inputs.
struct StandardStar {
    std::size_t arity = 2;
    BaseElem g = BaseElem::integer(1);

    BaseElem operator()(std::span<const BaseElem> elems) const;
};

StandardStar standard_star(const Params& params, const BaseElem& g);

/// Fixing the last slot to o: (a_1..a_{k-1}) -> op(a_1..a_{k-1}, o). For the
/// standard operation this is the standard (k-1)-ary operation over g - o.
/// Errc::ArityTooSmall below arity 3.
StandardStar descend(const StandardStar& op, const BaseElem& o);
StandardStar descend(const Params& params, const BaseElem& g, const BaseElem& o);

/// Same descent on an opaque operation.
template <class T>
struct NaryFunction {
    std::size_t arity = 2;
    std::function<T(std::span<const T>)> fn;
};

template <class T>
NaryFunction<T> descend_op(const NaryFunction<T>& op, T o) {
    if (op.arity < 3) throw Error(Errc::ArityTooSmall, "cannot descend below a binary operation");
    auto inner = op.fn;
    return {op.arity - 1, [inner, o = std::move(o)](std::span<const T> a) {
                std::vector<T> full(a.begin(), a.end());
                full.push_back(o);
                return inner(full);
            }};
}

/// a +_o b := o *^o (a *^o b), where *^o is the binary operation obtained by
/// descending the arity-n star (over g) through o_chain. The result is an
/// abelian group law with identity o. Errc::ArityMismatch unless
/// |o_chain| = n - 2.
BaseElem derived_group_add(const Params& params, const BaseElem& g, std::span<const BaseElem> o_chain,
                           const BaseElem& o, const BaseElem& a, const BaseElem& b);

/// Bounded integer window [lo, hi] for checks over infinite carriers.
struct Window {
    BigInt lo;
    BigInt hi;
};

struct AxiomCheckConfig {
    CheckOptions options;
    std::optional<Window> window;
};

/// EG1-EG3 for the standard star over g and distributivity for the standard
/// ring (the ring laws use g = 1 regardless of the g passed here, matching
/// nEll(R)). Residue rings are enumerated; Z and the localization need a window
/// (Errc::InfiniteCarrierWithoutWindow).
AxiomReport check_axioms(const Params& params, const BaseElem& g, const Carrier& carrier,
                         const AxiomCheckConfig& config = {});

AxiomReport check_distributivity(const Params& params, const Carrier& carrier, const AxiomCheckConfig& config = {});

/// Distributivity of star_r(a..) = r - sum(a_i) over a o_lambda b = a + b - lambda*ab.
AxiomReport lambda_variant_report(const Params& params, const BaseElem& r, const BaseElem& lambda,
                                  const Carrier& carrier, const AxiomCheckConfig& config = {});

/// Whether the (r, lambda) pair distributes on the checked sample.
bool compatible_pair(const Params& params, const BaseElem& r, const BaseElem& lambda, const Carrier& carrier,
                     const AxiomCheckConfig& config = {});

/// lambda * r == n + 1 in the carrier.
bool compatible_pair_algebraic(const Params& params, const BaseElem& r, const BaseElem& lambda);

}  // namespace nell
