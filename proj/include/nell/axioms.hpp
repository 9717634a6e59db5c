#pragma once

/**
 * @file axioms.hpp
 * @brief Generic checker for the n-ary elliptic group laws and n-ary
 * distributivity over a finite domain.
 *
 * Operations are opaque callables, so corrupted or variant operations can be
 * fed through the same machinery as the standard one. The laws checked are
 *
 *   EG1  star(a_sigma(1), ..., a_sigma(n)) = star(a_1, ..., a_n)
 *   EG2  star(star(s, a^), a^) = s                      (a^ an (n-1)-tuple)
 *   EG3  x^ * (y^ * (z * w^)) = w^ * (y^ * (z * x^))     ((3n-2) inputs)
 *   DIST star(a_1..a_n) o b = star(a_1 o b, ..., a_n o b)
 *
 * A law is checked exhaustively when its input space has at most
 * `exhaustive_limit` tuples; otherwise it is sampled with a seeded generator.
 *
 * EG3 gets one extra exhaustive route. An (n-1)-tuple h enters the identity
 * only through the two unary maps t -> star(h.., t) and z -> star(z, h..),
 * so over a domain closed under star it suffices to check every triple of
 * distinct induced maps against every z. That covers all |D|^(3n-2) inputs
 * while evaluating far fewer.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace nell {

template <class T>
struct NaryStructure {
    std::size_t arity = 2;
    std::function<T(std::span<const T>)> star;
    /// May be empty when only the group laws are checked.
    std::function<T(const T&, const T&)> circ;
    std::function<std::string(const T&)> show;
};

struct CheckOptions {
    std::uint64_t exhaustive_limit = 1'000'000;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0x6e656c6c2d617831ULL;
};

struct Counterexample {
    std::string law;
    std::vector<std::string> inputs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct AxiomReport {
    bool eg1_ok = true;
    bool eg2_ok = true;
    bool eg3_ok = true;
    bool dist_ok = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t samples_checked = 0;
    /// True when every law that was run covered its whole input space.
    bool exhaustive = true;
    std::uint64_t seed = 0;

    bool ok() const { return eg1_ok && eg2_ok && eg3_ok && dist_ok; }
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
    return out;
}

/// Advances a little-endian odometer; false once it wraps around.
inline bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < radix) return true;
        idx[i] = 0;
    }
    return false;
}

}  // namespace detail

template <class T>
class AxiomChecker {
public:
    AxiomChecker(NaryStructure<T> s, std::vector<T> domain, CheckOptions opts)
        : s_(std::move(s)), domain_(std::move(domain)), opts_(opts) {
        report_.seed = opts_.seed;
    }

    AxiomReport run_group_laws() {
        check_eg1();
        check_eg2();
        check_eg3();
        return report_;
    }

    AxiomReport run_all() {
        run_group_laws();
        check_distributivity();
        return report_;
    }

    AxiomReport run_distributivity() {
        check_distributivity();
        return report_;
    }

    const AxiomReport& report() const { return report_; }

    void check_eg1() {
        const std::size_t n = s_.arity;
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        if (n <= 4) {
            while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                auto t = p;
                std::swap(t[i], t[i + 1]);
                perms.push_back(t);
            }
        }
        std::vector<T> permuted(n);
        for_each_tuple(n, 1, [&](const std::vector<T>& a, std::mt19937_64* rng) {
            const T base = s_.star(a);
            auto check = [&](const std::vector<std::size_t>& perm) {
                for (std::size_t i = 0; i < n; ++i) permuted[i] = a[perm[i]];
                ++report_.samples_checked;
                if (!(s_.star(permuted) == base)) {
                    fail(report_.eg1_ok, "EG1", a);
                    return false;
                }
                return true;
            };
            for (const auto& perm : perms)
                if (!check(perm)) return false;
            if (rng != nullptr && n > 4) {
                std::vector<std::size_t> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), *rng);
                if (!check(perm)) return false;
            }
            return true;
        });
    }

    void check_eg2() {
        const std::size_t n = s_.arity;
        std::vector<T> buf(n);
        for_each_tuple(n, 2, [&](const std::vector<T>& a, std::mt19937_64*) {
            // a[0] = s, a[1..] = the (n-1)-tuple
            const T once = s_.star(a);
            buf = a;
            buf[0] = once;
            ++report_.samples_checked;
            if (!(s_.star(buf) == a[0])) {
                fail(report_.eg2_ok, "EG2", a);
                return false;
            }
            return true;
        });
    }

    void check_eg3() {
        const std::size_t n = s_.arity;
        const std::size_t width = 3 * n - 2;
        const std::uint64_t direct = detail::saturating_pow(domain_.size(), width);
        if (direct > opts_.exhaustive_limit && check_eg3_by_classes()) return;
        for_each_tuple(width, 3, [&](const std::vector<T>& v, std::mt19937_64*) {
            // v = x^ (n-1), y^ (n-1), z, w^ (n-1)
            std::span<const T> x(v.data(), n - 1), y(v.data() + n - 1, n - 1), w(v.data() + 2 * n - 1, n - 1);
            const T z = v[2 * n - 2];
            ++report_.samples_checked;
            if (!(eg3_side(x, y, z, w) == eg3_side(w, y, z, x))) {
                fail(report_.eg3_ok, "EG3", v);
                return false;
            }
            return true;
        });
    }

    void check_distributivity() {
        const std::size_t n = s_.arity;
        std::vector<T> args(n);
        for_each_tuple(n + 1, 4, [&](const std::vector<T>& v, std::mt19937_64*) {
            const T& b = v[n];
            std::span<const T> a(v.data(), n);
            const T lhs = s_.circ(s_.star(a), b);
            for (std::size_t i = 0; i < n; ++i) args[i] = s_.circ(a[i], b);
            ++report_.samples_checked;
            if (!(lhs == s_.star(args))) {
                fail(report_.dist_ok, "DIST", v);
                return false;
            }
            return true;
        });
    }

private:
    /// x^ * (y^ * (z * w^)) with the hat-tuples written first.
    T eg3_side(std::span<const T> x, std::span<const T> y, const T& z, std::span<const T> w) const {
        std::vector<T> buf;
        buf.reserve(s_.arity);
        buf.push_back(z);
        buf.insert(buf.end(), w.begin(), w.end());
        T inner = s_.star(buf);
        buf.assign(y.begin(), y.end());
        buf.push_back(inner);
        T mid = s_.star(buf);
        buf.assign(x.begin(), x.end());
        buf.push_back(mid);
        return s_.star(buf);
    }

    /// Exhaustive EG3 via induced unary maps. False when not applicable
    /// (domain not closed under star, or too many distinct maps).
    bool check_eg3_by_classes() {
        const std::size_t n = s_.arity;
        const std::size_t d = domain_.size();
        if (detail::saturating_pow(d, n - 1) > opts_.exhaustive_limit) return false;

        std::map<T, std::size_t> index;
        for (std::size_t i = 0; i < d; ++i) index.emplace(domain_[i], i);

        // For each hat: outer map t -> star(h.., t) and inner map z -> star(z, h..).
        using Table = std::vector<std::size_t>;
        std::map<std::pair<Table, Table>, std::vector<std::size_t>> pair_classes;
        std::map<Table, std::vector<std::size_t>> outer_classes;
        std::vector<std::pair<Table, Table>> pair_order;
        std::vector<Table> outer_order;

        std::vector<std::size_t> idx(n - 1, 0);
        std::vector<T> buf(n);
        std::uint64_t evaluations = 0;
        do {
            Table outer(d), inner(d);
            for (std::size_t t = 0; t < d; ++t) {
                for (std::size_t i = 0; i + 1 < n; ++i) buf[i] = domain_[idx[i]];
                buf[n - 1] = domain_[t];
                auto it = index.find(s_.star(buf));
                if (it == index.end()) return false;
                outer[t] = it->second;

                buf[0] = domain_[t];
                for (std::size_t i = 0; i + 1 < n; ++i) buf[i + 1] = domain_[idx[i]];
                it = index.find(s_.star(buf));
                if (it == index.end()) return false;
                inner[t] = it->second;
                evaluations += 2;
            }
            auto key = std::make_pair(outer, inner);
            if (pair_classes.emplace(key, idx).second) pair_order.push_back(key);
            if (outer_classes.emplace(outer, idx).second) outer_order.push_back(outer);
        } while (detail::next_tuple(idx, d));

        const std::uint64_t work = detail::saturating_mul(
            detail::saturating_mul(detail::saturating_pow(pair_order.size(), 2), outer_order.size()), d);
        if (work > 50 * opts_.exhaustive_limit) return false;

        report_.samples_checked += evaluations;
        for (const auto& xk : pair_order) {
            for (const auto& yk : outer_order) {
                for (const auto& wk : pair_order) {
                    for (std::size_t z = 0; z < d; ++z) {
                        // x^ * (y^ * (z * w^))  vs  w^ * (y^ * (z * x^))
                        std::size_t lhs = xk.first[yk[wk.second[z]]];
                        std::size_t rhs = wk.first[yk[xk.second[z]]];
                        ++report_.samples_checked;
                        if (lhs != rhs) {
                            std::vector<T> witness;
                            for (std::size_t i : pair_classes.at(xk)) witness.push_back(domain_[i]);
                            for (std::size_t i : outer_classes.at(yk)) witness.push_back(domain_[i]);
                            witness.push_back(domain_[z]);
                            for (std::size_t i : pair_classes.at(wk)) witness.push_back(domain_[i]);
                            fail(report_.eg3_ok, "EG3", witness);
                            return true;
                        }
                    }
                }
            }
        }
        return true;
    }

    /// Runs `body` over every tuple of the given width (exhaustive) or over
    /// `samples` random tuples. `body` returns false to stop early.
    template <class Body>
    void for_each_tuple(std::size_t width, std::uint64_t law_id, Body&& body) {
        const std::size_t d = domain_.size();
        if (d == 0) return;
        std::vector<T> tuple(width);
        if (detail::saturating_pow(d, width) <= opts_.exhaustive_limit) {
            std::vector<std::size_t> idx(width, 0);
            do {
                for (std::size_t i = 0; i < width; ++i) tuple[i] = domain_[idx[i]];
                if (!body(tuple, nullptr)) return;
            } while (detail::next_tuple(idx, d));
            return;
        }
        report_.exhaustive = false;
        std::mt19937_64 rng(opts_.seed ^ (law_id * 0x9e3779b97f4a7c15ULL));
        std::uniform_int_distribution<std::size_t> pick(0, d - 1);
        for (std::uint64_t s = 0; s < opts_.samples; ++s) {
            for (std::size_t i = 0; i < width; ++i) tuple[i] = domain_[pick(rng)];
            if (!body(tuple, &rng)) return;
        }
    }

    void fail(bool& flag, const char* law, const std::vector<T>& inputs) {
        flag = false;
        if (report_.counterexample) return;
        Counterexample c{law, {}};
        for (const auto& v : inputs) c.inputs.push_back(s_.show(v));
        report_.counterexample = std::move(c);
    }

    NaryStructure<T> s_;
    std::vector<T> domain_;
    CheckOptions opts_;
    AxiomReport report_;
};

}  // namespace nell
