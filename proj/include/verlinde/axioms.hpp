#pragma once

// Abstract fusion rules N : N^(I) -> Z given by their values on multisets of bounded
// degree, and a checker for the axioms
//   (F0) N(0) = 1 and N(a) > 0 for some a,
//   (F1) N(x*) = N(x),
//   (F2) N(x + y) = sum_l N(x + l) N(y + l*),
// together with the kernel, the derived unit and the pairing N(a + b*) = delta_ab.

#include "verlinde/fusion.hpp"

#include <map>
#include <set>

namespace verlinde {

using Multiset = std::vector<std::size_t>; // sorted indices into I

struct FusionRuleTable {
    std::vector<std::string> labels;     // names of the elements of I
    std::vector<std::size_t> involution; // a -> a*
    std::size_t max_degree = 0;          // values are known for all multisets up to this degree
    std::map<Multiset, std::int64_t> values; // nonzero values only

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }

    [[nodiscard]] std::int64_t value(Multiset x) const {
        if (x.size() > max_degree)
            throw DomainError("fusion rule table: degree " + std::to_string(x.size()) + " beyond table degree " +
                              std::to_string(max_degree));
        std::sort(x.begin(), x.end());
        auto it = values.find(x);
        return it == values.end() ? 0 : it->second;
    }

    [[nodiscard]] Multiset star(const Multiset &x) const {
        Multiset y;
        y.reserve(x.size());
        for (auto a : x)
            y.push_back(involution.at(a));
        std::sort(y.begin(), y.end());
        return y;
    }

    void set(Multiset x, std::int64_t v) {
        std::sort(x.begin(), x.end());
        if (v == 0)
            values.erase(x);
        else
            values[x] = v;
    }

    void validate() const {
        if (involution.size() != labels.size())
            throw DomainError("fusion rule table: involution size does not match index set");
        for (std::size_t a = 0; a < involution.size(); ++a)
            if (involution[a] >= size() || involution[involution[a]] != a)
                throw DomainError("fusion rule table: involution is not an involution on I");
        for (const auto &[x, v] : values) {
            if (x.size() > max_degree)
                throw DomainError("fusion rule table: entry beyond declared degree");
            if (!std::is_sorted(x.begin(), x.end()))
                throw DomainError("fusion rule table: multiset keys must be sorted");
            for (auto a : x)
                if (a >= size())
                    throw DomainError("fusion rule table: index out of range");
        }
    }
};

namespace detail {

// All sorted multisets of [0, n) with degree <= max_degree, shortest first.
inline std::vector<Multiset> multisets_up_to(std::size_t n, std::size_t max_degree) {
    std::vector<Multiset> out{{}};
    std::vector<Multiset> layer{{}};
    for (std::size_t d = 1; d <= max_degree; ++d) {
        std::vector<Multiset> next;
        for (const auto &x : layer)
            for (std::size_t a = x.empty() ? 0 : x.back(); a < n; ++a) {
                auto y = x;
                y.push_back(a);
                next.push_back(std::move(y));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

inline Multiset merged(const Multiset &x, const Multiset &y) {
    Multiset z;
    z.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
    return z;
}

inline Multiset with(const Multiset &x, std::size_t a) {
    Multiset z = x;
    z.insert(std::upper_bound(z.begin(), z.end(), a), a);
    return z;
}

} // namespace detail

/// N(a_1 + ... + a_p) = t(a_1 ... a_p) for all multisets of degree <= max_degree.
[[nodiscard]] inline FusionRuleTable fusion_rule_table(const FusionRing &f, std::size_t max_degree) {
    FusionRuleTable t;
    t.max_degree = max_degree;
    for (const auto &w : f.basis())
        t.labels.push_back(w.to_string());
    t.involution = f.involution();
    Multiset stack;
    auto rec = [&](auto &&self, const RingVector &x, std::size_t from) -> void {
        if (const auto v = f.trace_form(x); v != 0)
            t.values[stack] = v;
        if (stack.size() == max_degree)
            return;
        for (std::size_t a = from; a < f.size(); ++a) {
            stack.push_back(a);
            self(self, f.multiply_basis(a, x), a);
            stack.pop_back();
        }
    };
    rec(rec, f.basis_vector(f.unit()), 0);
    return t;
}

struct F2Violation {
    Multiset x, y;
    std::int64_t lhs = 0, rhs = 0;
};

struct AxiomReport {
    std::size_t depth = 0;
    bool f0 = false;
    bool f1 = false;
    bool f2 = false;
    std::vector<Multiset> f1_violations;
    std::vector<F2Violation> f2_violations;
    std::vector<std::size_t> kernel;
    bool nondegenerate = false;
    std::optional<std::size_t> unit;
    bool pairing = false; // N(a + b*) = delta_ab
    std::vector<std::pair<std::size_t, std::size_t>> pairing_violations;

    [[nodiscard]] bool passed() const noexcept { return f0 && f1 && f2 && nondegenerate && unit && pairing; }

    [[nodiscard]] bool has_f2_violation(const Multiset &x, const Multiset &y) const {
        return std::any_of(f2_violations.begin(), f2_violations.end(),
                           [&](const F2Violation &v) { return (v.x == x && v.y == y) || (v.x == y && v.y == x); });
    }
};

/// Checks (F0), (F1) on all multisets of degree <= depth and (F2) on all pairs x, y with
/// deg x + deg y <= depth whose right-hand side stays within degree depth.
[[nodiscard]] inline AxiomReport verify_fusion_rule_axioms(const FusionRuleTable &t, std::size_t depth = 4,
                                                           std::size_t max_listed = 64) {
    t.validate();
    if (t.max_degree < std::max<std::size_t>(3, depth))
        throw DomainError("fusion rule table incomplete: degree " + std::to_string(t.max_degree) + " < required " +
                          std::to_string(std::max<std::size_t>(3, depth)));
    const std::size_t n = t.size();
    AxiomReport rep;
    rep.depth = depth;

    bool some_positive = false;
    for (std::size_t a = 0; a < n; ++a)
        some_positive = some_positive || t.value({a}) > 0;
    rep.f0 = t.value({}) == 1 && some_positive;

    rep.f1 = true;
    for (const auto &[x, v] : t.values) {
        if (x.size() > depth)
            continue;
        if (t.value(t.star(x)) != v) {
            rep.f1 = false;
            if (rep.f1_violations.size() < max_listed)
                rep.f1_violations.push_back(x);
        }
    }

    rep.f2 = true;
    const auto small = detail::multisets_up_to(n, depth == 0 ? 0 : depth - 1);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j) {
            const auto &x = small[i];
            const auto &y = small[j];
            if (x.size() + y.size() > depth)
                continue;
            const std::int64_t lhs = t.value(detail::merged(x, y));
            std::int64_t rhs = 0;
            for (std::size_t l = 0; l < n; ++l)
                rhs += t.value(detail::with(x, l)) * t.value(detail::with(y, t.involution[l]));
            if (lhs != rhs) {
                rep.f2 = false;
                if (rep.f2_violations.size() < max_listed)
                    rep.f2_violations.push_back({x, y, lhs, rhs});
            }
        }

    std::set<std::size_t> used;
    for (const auto &[x, v] : t.values)
        if (x.size() <= depth)
            used.insert(x.begin(), x.end());
    for (std::size_t a = 0; a < n; ++a)
        if (!used.contains(a))
            rep.kernel.push_back(a);
    rep.nondegenerate = rep.kernel.empty();

    std::int64_t square_sum = 0;
    std::optional<std::size_t> candidate;
    for (std::size_t a = 0; a < n; ++a) {
        const auto v = t.value({a});
        square_sum += v * v;
        if (v == 1)
            candidate = a;
    }
    if (square_sum == 1 && candidate && t.involution[*candidate] == *candidate)
        rep.unit = candidate;

    rep.pairing = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t.value({a, t.involution[b]}) != (a == b ? 1 : 0)) {
                rep.pairing = false;
                if (rep.pairing_violations.size() < max_listed)
                    rep.pairing_violations.emplace_back(a, b);
            }
    return rep;
}

} // namespace verlinde
