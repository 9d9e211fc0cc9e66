#pragma once

// Representation ring R(g): weight multiplicities (Freudenthal), tensor products
// (Racah-Speiser), the dual involution and the theta-sl2 spin decomposition.

#include "verlinde/lie.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_set>

namespace verlinde {

/// Finite Z-linear combination of classes [V_lambda], lambda dominant. Zero coefficients
/// are never stored.
class RepElement {
  public:
    using Map = std::map<Weight, std::int64_t>;

    RepElement() = default;
    explicit RepElement(const Weight &w, std::int64_t c = 1) { add(w, c); }

    void add(const Weight &w, std::int64_t c) {
        if (c == 0)
            return;
        if (!w.is_dominant())
            throw DomainError("RepElement: non-dominant weight " + w.to_string());
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    [[nodiscard]] std::int64_t coefficient(const Weight &w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }
    [[nodiscard]] const Map &terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] auto begin() const { return terms_.begin(); }
    [[nodiscard]] auto end() const { return terms_.end(); }

    RepElement &operator+=(const RepElement &o) {
        for (const auto &[w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    friend RepElement operator+(RepElement a, const RepElement &b) { return a += b; }
    friend RepElement operator*(std::int64_t k, RepElement a) {
        if (k == 0)
            return {};
        for (auto &[w, c] : a.terms_)
            c *= k;
        return a;
    }
    friend bool operator==(const RepElement &, const RepElement &) = default;

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto &[w, c] : terms_) {
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            const auto a = c < 0 ? -c : c;
            if (a != 1)
                s += std::to_string(a);
            s += w.to_string();
        }
        return s;
    }
    friend std::ostream &operator<<(std::ostream &os, const RepElement &x) { return os << x.to_string(); }

  private:
    Map terms_;
};

struct WeightMultiplicityTable {
    Weight highest;
    std::map<Weight, std::int64_t> mults; // every weight of V_highest, any chamber

    [[nodiscard]] std::int64_t multiplicity(const Weight &w) const {
        auto it = mults.find(w);
        return it == mults.end() ? 0 : it->second;
    }
    [[nodiscard]] std::int64_t dimension() const {
        std::int64_t d = 0;
        for (const auto &[w, m] : mults)
            d += m;
        return d;
    }
};

namespace detail {

inline void require_dominant(const Weight &w, const char *what) {
    if (!w.is_dominant())
        throw DomainError(std::string(what) + ": weight " + w.to_string() + " is not dominant");
}

// Depth of mu below lambda in the root order (sum of simple-root coordinates of
// lambda - mu), or -1 if some coordinate is negative.
inline std::int64_t depth_below(const RootSystem &rs, const Weight &lambda, const Weight &mu) {
    const auto c = root_coordinates(rs, lambda - mu);
    std::int64_t d = 0;
    for (auto x : c) {
        if (x < 0)
            return -1;
        d += x;
    }
    return d;
}

} // namespace detail

/// Weyl dimension formula prod_{alpha>0} (lambda+rho|alpha)/(rho|alpha), evaluated exactly.
[[nodiscard]] inline std::int64_t weyl_dimension(const RootSystem &rs, const Weight &lambda) {
    rs.check_weight(lambda);
    detail::require_dominant(lambda, "weyl_dimension");
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    const Weight shifted = lambda + rs.rho;
    for (const auto &alpha : rs.positive_root_weights) {
        num *= scaled_pairing(rs, shifted, alpha);
        den *= scaled_pairing(rs, rs.rho, alpha);
    }
    if (num % den != 0)
        throw InternalError("Weyl dimension is not integral for " + lambda.to_string());
    const cpp_int q = num / den;
    if (q > std::numeric_limits<std::int64_t>::max())
        throw CapacityError("dimension of " + lambda.to_string() + " overflows 64 bits");
    return static_cast<std::int64_t>(q);
}

/// All weights of V_lambda with multiplicities. Freudenthal's recursion runs over the
/// dominant weights in order of increasing depth; other weights inherit from their
/// dominant W-conjugate.
[[nodiscard]] inline WeightMultiplicityTable weight_multiplicities(const RootSystem &rs, const Weight &lambda) {
    rs.check_weight(lambda);
    detail::require_dominant(lambda, "weight_multiplicities");
    const auto r = static_cast<std::size_t>(rs.rank);

    // Weights are the saturated set {nu : dom(nu) <= lambda}, connected by simple-root steps.
    std::unordered_set<Weight, WeightHash> all{lambda};
    std::vector<Weight> queue{lambda};
    std::vector<std::pair<std::int64_t, Weight>> dominant{{0, lambda}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t i = 0; i < r; ++i) {
            Weight nu = queue[head] - rs.simple_root(static_cast<int>(i));
            if (all.contains(nu))
                continue;
            const Weight dom = reflect_to_dominant(rs, nu).weight;
            const auto depth = detail::depth_below(rs, lambda, dom);
            if (depth < 0)
                continue;
            if (nu == dom)
                dominant.emplace_back(depth, nu);
            all.insert(nu);
            queue.push_back(std::move(nu));
        }
    }
    std::sort(dominant.begin(), dominant.end());

    std::unordered_map<Weight, std::int64_t, WeightHash> dom_mult;
    const Weight lr = lambda + rs.rho;
    const std::int64_t top = scaled_pairing(rs, lr, lr);
    for (const auto &[depth, mu] : dominant) {
        if (depth == 0) {
            dom_mult[mu] = 1;
            continue;
        }
        std::int64_t num = 0;
        for (const auto &alpha : rs.positive_root_weights) {
            Weight shifted = mu;
            for (;;) {
                shifted += alpha;
                auto it = dom_mult.find(reflect_to_dominant(rs, shifted).weight);
                if (it == dom_mult.end())
                    break;
                num += 2 * scaled_pairing(rs, shifted, alpha) * it->second;
            }
        }
        const Weight mr = mu + rs.rho;
        const std::int64_t den = top - scaled_pairing(rs, mr, mr);
        if (den <= 0 || num % den != 0)
            throw InternalError("Freudenthal recursion not integral at " + mu.to_string());
        if (num != 0)
            dom_mult[mu] = num / den;
    }

    WeightMultiplicityTable table;
    table.highest = lambda;
    for (const auto &nu : all) {
        auto it = dom_mult.find(reflect_to_dominant(rs, nu).weight);
        if (it != dom_mult.end())
            table.mults.emplace(nu, it->second);
    }
    return table;
}

/// Thread-safe memo of multiplicity tables for one root system.
class MultiplicityCache {
  public:
    explicit MultiplicityCache(const RootSystem &rs) : rs_(&rs) {}

    std::shared_ptr<const WeightMultiplicityTable> get(const Weight &lambda) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = tables_.find(lambda); it != tables_.end())
                return it->second;
        }
        auto table = std::make_shared<const WeightMultiplicityTable>(weight_multiplicities(*rs_, lambda));
        std::unique_lock lock(mutex_);
        return tables_.try_emplace(lambda, std::move(table)).first->second;
    }

    [[nodiscard]] const RootSystem &root_system() const noexcept { return *rs_; }

  private:
    const RootSystem *rs_;
    std::shared_mutex mutex_;
    std::unordered_map<Weight, std::shared_ptr<const WeightMultiplicityTable>, WeightHash> tables_;
};

/// Racah-Speiser: V_lambda (x) V_mu = sum over weights nu of V_mu of
/// eps(w) [V_{w(lambda+nu+rho)-rho}], dropping terms on a wall.
[[nodiscard]] inline RepElement tensor_decompose(const RootSystem &rs, const Weight &lambda,
                                                 const WeightMultiplicityTable &mu_table) {
    rs.check_weight(lambda);
    detail::require_dominant(lambda, "tensor_decompose");
    RepElement out;
    const Weight base = lambda + rs.rho;
    for (const auto &[nu, m] : mu_table.mults) {
        if (auto ch = dominant_chamber(rs, base + nu))
            out.add(ch->weight - rs.rho, ch->sign * m);
    }
    for (const auto &[w, c] : out)
        if (c < 0)
            throw InternalError("negative tensor multiplicity at " + w.to_string());
    return out;
}

[[nodiscard]] inline RepElement tensor_decompose(const RootSystem &rs, const Weight &lambda, const Weight &mu) {
    rs.check_weight(lambda);
    rs.check_weight(mu);
    detail::require_dominant(lambda, "tensor_decompose");
    detail::require_dominant(mu, "tensor_decompose");
    // expand the smaller factor
    if (weyl_dimension(rs, lambda) < weyl_dimension(rs, mu))
        return tensor_decompose(rs, mu, weight_multiplicities(rs, lambda));
    return tensor_decompose(rs, lambda, weight_multiplicities(rs, mu));
}

/// lambda* = -w0(lambda), the highest weight of the dual module.
[[nodiscard]] inline Weight dual_weight(const RootSystem &rs, const Weight &lambda) {
    rs.check_weight(lambda);
    detail::require_dominant(lambda, "dual_weight");
    return reflect_to_dominant(rs, -lambda).weight;
}

[[nodiscard]] inline RepElement dual(const RootSystem &rs, const RepElement &x) {
    RepElement out;
    for (const auto &[w, c] : x)
        out.add(dual_weight(rs, w), c);
    return out;
}

/// Decomposition of V_lambda restricted to the sl2 spanned by H_theta, X_theta, X_-theta.
/// Keys are doubled spins 2i; values are the number of spin-i irreducible summands.
[[nodiscard]] inline std::map<std::int64_t, std::int64_t> theta_spin_decomposition(const RootSystem &rs,
                                                                                   const Weight &lambda) {
    const auto table = weight_multiplicities(rs, lambda);
    std::map<std::int64_t, std::int64_t> by_level;
    for (const auto &[nu, m] : table.mults)
        by_level[level_of(rs, nu)] += m;
    auto at = [&](std::int64_t k) {
        auto it = by_level.find(k);
        return it == by_level.end() ? std::int64_t{0} : it->second;
    };
    std::map<std::int64_t, std::int64_t> spins;
    for (const auto &[k, m] : by_level) {
        if (k < 0)
            continue;
        const std::int64_t count = m - at(k + 2);
        if (count < 0)
            throw InternalError("theta-string multiplicities are not unimodal");
        if (count > 0)
            spins[k] = count;
    }
    return spins;
}

} // namespace verlinde
