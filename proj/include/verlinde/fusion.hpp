#pragma once

// The level-l fusion ring R_l(g): alcove projection pi : R(g) -> R_l(g), the fusion
// product pi([V_lambda (x) V_mu]), the trace form t, the Casimir element and genus-g
// dimensions N_g.

#include "verlinde/rep_ring.hpp"

#include <atomic>
#include <random>
#include <span>
#include <thread>

namespace verlinde {

struct FusionOptions {
    bool allow_unverified = false;
    std::size_t max_basis = 5000;
    // Triples (a, b, c) checked for associativity at build time; beyond this, sampled.
    std::size_t associativity_budget = 200000;
    std::size_t associativity_samples = 20000;
    unsigned threads = 0; // 0: hardware concurrency
    std::uint64_t seed = 0x5eedf00dULL;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CapacityError("integer overflow in fusion-ring arithmetic");
    return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw CapacityError("integer overflow in fusion-ring arithmetic");
    return r;
}

inline void require_level(std::int64_t level) {
    if (level <= 0)
        throw DomainError("level must be >= 1, got " + std::to_string(level));
}

inline void require_verified(const RootSystem &rs, bool allow_unverified) {
    if (!rs.type.verified() && !allow_unverified)
        throw UnverifiedTypeError("type " + rs.type.name() +
                                  " is not covered by the known fusion-rule results; "
                                  "pass allow-unverified to compute anyway");
}

} // namespace detail

/// P_l: dominant weights of level <= l, in lexicographic order of Dynkin labels.
[[nodiscard]] inline std::vector<Weight> enumerate_P_ell(const RootSystem &rs, std::int64_t level,
                                                         std::size_t max_size = 5000) {
    detail::require_level(level);
    std::vector<Weight> out;
    std::vector<std::int64_t> labels(static_cast<std::size_t>(rs.rank), 0);
    auto rec = [&](auto &&self, std::size_t i, std::int64_t budget) -> void {
        if (i == labels.size()) {
            if (out.size() >= max_size)
                throw CapacityError("|P_l| exceeds the basis cap of " + std::to_string(max_size));
            out.emplace_back(labels);
            return;
        }
        for (std::int64_t v = 0; v * rs.comarks[i] <= budget; ++v) {
            labels[i] = v;
            self(self, i + 1, budget - v * rs.comarks[i]);
        }
        labels[i] = 0;
    };
    rec(rec, 0, level);
    return out;
}

/// pi([V_lambda]) for a single dominant lambda: std::nullopt when lambda + rho lies on an
/// affine wall, otherwise eps(w) [V_mu] with mu in P_l.
[[nodiscard]] inline std::optional<SignedWeight> project_weight(const RootSystem &rs, std::int64_t level,
                                                                const Weight &lambda) {
    rs.check_weight(lambda);
    detail::require_dominant(lambda, "project_pi");
    detail::require_level(level);
    const std::int64_t k = level + rs.dual_coxeter;
    const std::int64_t cap = 10 * k * rs.rank + 10;
    Weight y = lambda + rs.rho;
    int sign = 1;
    for (std::int64_t iter = 0; iter < cap; ++iter) {
        auto r = reflect_to_dominant(rs, std::move(y));
        sign *= r.sign;
        y = std::move(r.weight);
        if (!y.is_regular_dominant())
            return std::nullopt;
        const std::int64_t lev = level_of(rs, y);
        if (lev == k)
            return std::nullopt;
        if (lev < k)
            return SignedWeight{sign, y - rs.rho};
        // affine reflection in the wall (x | theta) = k: y -> s_theta(y) + k theta
        y -= (lev - k) * rs.highest_root;
        sign = -sign;
    }
    throw InternalError("alcove projection of " + lambda.to_string() + " did not terminate");
}

[[nodiscard]] inline RepElement project_pi(const RootSystem &rs, std::int64_t level, const RepElement &x) {
    RepElement out;
    for (const auto &[w, c] : x)
        if (auto p = project_weight(rs, level, w))
            out.add(p->weight, p->sign * c);
    return out;
}

namespace detail {

inline void require_in_P_ell(const RootSystem &rs, std::int64_t level, const Weight &w) {
    rs.check_weight(w);
    if (!w.is_dominant() || level_of(rs, w) > level)
        throw DomainError("weight " + w.to_string() + " is not in P_" + std::to_string(level) + " for " +
                          rs.type.name());
}

inline void require_nonnegative(const RepElement &x, const Weight &a, const Weight &b) {
    for (const auto &[w, c] : x)
        if (c < 0)
            throw AxiomError("negative fusion coefficient " + std::to_string(c) + " for " + w.to_string() +
                             " in " + a.to_string() + " * " + b.to_string());
}

inline RepElement fuse_with_table(const RootSystem &rs, std::int64_t level, const Weight &lambda,
                                  const WeightMultiplicityTable &mu_table) {
    RepElement out;
    const Weight base = lambda + rs.rho;
    for (const auto &[nu, m] : mu_table.mults) {
        auto ch = dominant_chamber(rs, base + nu);
        if (!ch)
            continue;
        if (auto p = project_weight(rs, level, ch->weight - rs.rho))
            out.add(p->weight, ch->sign * p->sign * m);
    }
    require_nonnegative(out, lambda, mu_table.highest);
    return out;
}

} // namespace detail

/// [V_lambda] * [V_mu] in R_l(g), computed as pi(V_lambda (x) V_mu).
[[nodiscard]] inline RepElement fuse(const RootSystem &rs, std::int64_t level, const Weight &lambda,
                                     const Weight &mu, bool allow_unverified = false) {
    detail::require_level(level);
    detail::require_verified(rs, allow_unverified);
    detail::require_in_P_ell(rs, level, lambda);
    detail::require_in_P_ell(rs, level, mu);
    return detail::fuse_with_table(rs, level, lambda, weight_multiplicities(rs, mu));
}

/// Dense element of the fusion ring: coefficients in the basis order.
using RingVector = std::vector<std::int64_t>;

class FusionRing {
  public:
    struct Entry {
        std::int32_t index;
        std::int64_t value;
    };

    [[nodiscard]] const RootSystem &root_system() const noexcept { return *rs_; }
    [[nodiscard]] std::shared_ptr<const RootSystem> root_system_ptr() const noexcept { return rs_; }
    [[nodiscard]] std::int64_t level() const noexcept { return level_; }
    [[nodiscard]] std::size_t size() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<Weight> &basis() const noexcept { return basis_; }
    [[nodiscard]] const Weight &weight(std::size_t a) const { return basis_.at(a); }
    [[nodiscard]] std::size_t unit() const noexcept { return unit_; }
    [[nodiscard]] std::size_t dual(std::size_t a) const { return involution_.at(a); }
    [[nodiscard]] const std::vector<std::size_t> &involution() const noexcept { return involution_; }
    [[nodiscard]] bool unverified() const noexcept { return !rs_->type.verified(); }

    [[nodiscard]] std::size_t index_of(const Weight &w) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
        if (it == basis_.end() || *it != w)
            throw DomainError("weight " + w.to_string() + " is not in P_" + std::to_string(level_) + " for " +
                              rs_->type.name());
        return static_cast<std::size_t>(it - basis_.begin());
    }

    /// Nonzero N_{ab}^c, sorted by c.
    [[nodiscard]] std::span<const Entry> product(std::size_t a, std::size_t b) const {
        const std::size_t p = pair_index(a, b);
        return {entries_.data() + offsets_[p], entries_.data() + offsets_[p + 1]};
    }

    /// N_{ab}^c.
    [[nodiscard]] std::int64_t structure(std::size_t a, std::size_t b, std::size_t c) const {
        const auto row = product(a, b);
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry &e, std::size_t v) { return static_cast<std::size_t>(e.index) < v; });
        return it != row.end() && static_cast<std::size_t>(it->index) == c ? it->value : 0;
    }

    [[nodiscard]] RingVector basis_vector(std::size_t a) const {
        RingVector v(size(), 0);
        v.at(a) = 1;
        return v;
    }

    [[nodiscard]] RingVector multiply(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
        check_vector(x);
        check_vector(y);
        RingVector out(size(), 0);
        for (std::size_t a = 0; a < size(); ++a) {
            if (x[a] == 0)
                continue;
            for (std::size_t b = 0; b < size(); ++b) {
                if (y[b] == 0)
                    continue;
                const std::int64_t xy = detail::checked_mul(x[a], y[b]);
                for (const auto &e : product(a, b)) {
                    auto &slot = out[static_cast<std::size_t>(e.index)];
                    slot = detail::checked_add(slot, detail::checked_mul(xy, e.value));
                }
            }
        }
        return out;
    }

    [[nodiscard]] RingVector multiply_basis(std::size_t a, std::span<const std::int64_t> y) const {
        check_vector(y);
        RingVector out(size(), 0);
        for (std::size_t b = 0; b < size(); ++b) {
            if (y[b] == 0)
                continue;
            for (const auto &e : product(a, b)) {
                auto &slot = out[static_cast<std::size_t>(e.index)];
                slot = detail::checked_add(slot, detail::checked_mul(y[b], e.value));
            }
        }
        return out;
    }

    /// t(x): coefficient of the unit.
    [[nodiscard]] std::int64_t trace_form(std::span<const std::int64_t> x) const {
        check_vector(x);
        return x[unit_];
    }

    /// Tr(m_x), the trace of multiplication by x.
    [[nodiscard]] std::int64_t trace(std::span<const std::int64_t> x) const {
        check_vector(x);
        std::int64_t tr = 0;
        for (std::size_t a = 0; a < size(); ++a) {
            if (x[a] == 0)
                continue;
            for (std::size_t b = 0; b < size(); ++b)
                tr = detail::checked_add(tr, detail::checked_mul(x[a], structure(a, b, b)));
        }
        return tr;
    }

    [[nodiscard]] RingVector star(std::span<const std::int64_t> x) const {
        check_vector(x);
        RingVector out(size(), 0);
        for (std::size_t a = 0; a < size(); ++a)
            out[involution_[a]] = x[a];
        return out;
    }

    [[nodiscard]] RingVector from_rep(const RepElement &x) const {
        RingVector v(size(), 0);
        for (const auto &[w, c] : x)
            v[index_of(w)] = c;
        return v;
    }
    [[nodiscard]] RepElement to_rep(std::span<const std::int64_t> x) const {
        check_vector(x);
        RepElement out;
        for (std::size_t a = 0; a < size(); ++a)
            out.add(basis_[a], x[a]);
        return out;
    }

    /// Matrix of m_a in the basis: entry (b, c) = N_{a c}^b.
    [[nodiscard]] std::vector<std::vector<std::int64_t>> multiplication_matrix(std::size_t a) const {
        std::vector<std::vector<std::int64_t>> m(size(), std::vector<std::int64_t>(size(), 0));
        for (std::size_t c = 0; c < size(); ++c)
            for (const auto &e : product(a, c))
                m[static_cast<std::size_t>(e.index)][c] = e.value;
        return m;
    }

    /// Assembles a ring from precomputed products (a <= b); used by the builder and by the
    /// JSON reader. Validates shape, unit and nonnegativity.
    static FusionRing assemble(std::shared_ptr<const RootSystem> rs, std::int64_t level, std::vector<Weight> basis,
                               const std::vector<std::vector<Entry>> &upper_products) {
        FusionRing f;
        f.rs_ = std::move(rs);
        f.level_ = level;
        f.basis_ = std::move(basis);
        const std::size_t n = f.basis_.size();
        if (upper_products.size() != n * (n + 1) / 2)
            throw DomainError("fusion ring: product table has wrong size");
        f.offsets_.assign(upper_products.size() + 1, 0);
        for (std::size_t p = 0; p < upper_products.size(); ++p) {
            auto row = upper_products[p];
            std::sort(row.begin(), row.end(), [](const Entry &x, const Entry &y) { return x.index < y.index; });
            for (const auto &e : row) {
                if (e.index < 0 || static_cast<std::size_t>(e.index) >= n)
                    throw DomainError("fusion ring: structure index out of range");
                if (e.value < 0)
                    throw AxiomError("fusion ring: negative structure constant");
                if (e.value != 0)
                    f.entries_.push_back(e);
            }
            f.offsets_[p + 1] = f.entries_.size();
        }
        const Weight zero = Weight::zero(static_cast<std::size_t>(f.rs_->rank));
        f.unit_ = f.index_of(zero);
        f.involution_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            f.involution_[a] = f.index_of(dual_weight(*f.rs_, f.basis_[a]));
        return f;
    }

  private:
    [[nodiscard]] std::size_t pair_index(std::size_t a, std::size_t b) const {
        if (a > b)
            std::swap(a, b);
        if (b >= size())
            throw DomainError("fusion ring: basis index out of range");
        // row-major upper triangle
        return a * size() - a * (a + 1) / 2 + b;
    }
    void check_vector(std::span<const std::int64_t> x) const {
        if (x.size() != size())
            throw DomainError("fusion ring: vector has wrong length");
    }

    std::shared_ptr<const RootSystem> rs_;
    std::int64_t level_ = 0;
    std::vector<Weight> basis_;
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
    std::size_t unit_ = 0;
    std::vector<std::size_t> involution_;
};

/// Exact structural checks on a built ring. Throws AxiomError describing the first failure.
inline void check_ring_invariants(const FusionRing &f, const FusionOptions &opts = {}) {
    const std::size_t n = f.size();
    const std::size_t e = f.unit();
    auto fail = [](const std::string &what) { throw AxiomError("fusion ring invariant violated: " + what); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            if (f.structure(a, e, c) != (a == c ? 1 : 0))
                fail("unit row at " + f.weight(a).to_string());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (f.structure(a, f.dual(b), e) != (a == b ? 1 : 0))
                fail("t(a b*) != delta at " + f.weight(a).to_string() + ", " + f.weight(b).to_string());
            for (std::size_t c = 0; c < n; ++c)
                if (f.structure(f.dual(a), f.dual(b), f.dual(c)) != f.structure(a, b, c))
                    fail("involution is not a ring homomorphism");
        }

    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
        // (a b) c == a (b c)
        RingVector left(n, 0), right(n, 0);
        for (const auto &x : f.product(a, b))
            for (const auto &y : f.product(static_cast<std::size_t>(x.index), c))
                left[static_cast<std::size_t>(y.index)] += x.value * y.value;
        for (const auto &x : f.product(b, c))
            for (const auto &y : f.product(a, static_cast<std::size_t>(x.index)))
                right[static_cast<std::size_t>(y.index)] += x.value * y.value;
        if (left != right)
            fail("associativity at (" + f.weight(a).to_string() + ", " + f.weight(b).to_string() + ", " +
                 f.weight(c).to_string() + ")");
    };
    if (n * n * n <= opts.associativity_budget) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < opts.associativity_samples; ++s)
            check_triple(pick(rng), pick(rng), pick(rng));
    }
}

[[nodiscard]] inline FusionRing build_fusion_ring(std::shared_ptr<const RootSystem> rs, std::int64_t level,
                                                  const FusionOptions &opts = {}) {
    detail::require_level(level);
    detail::require_verified(*rs, opts.allow_unverified);
    auto basis = enumerate_P_ell(*rs, level, opts.max_basis);
    const std::size_t n = basis.size();

    std::vector<WeightMultiplicityTable> tables;
    tables.reserve(n);
    for (const auto &w : basis)
        tables.push_back(weight_multiplicities(*rs, w));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            pairs.emplace_back(a, b);

    std::vector<std::vector<FusionRing::Entry>> products(pairs.size());
    std::vector<std::exception_ptr> errors;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t p; (p = next.fetch_add(1)) < pairs.size();) {
            try {
                const auto [a, b] = pairs[p];
                // expand the factor with fewer weights
                const bool swap = tables[a].mults.size() < tables[b].mults.size();
                const auto &lhs = swap ? basis[b] : basis[a];
                const auto &rhs = swap ? tables[a] : tables[b];
                for (const auto &[w, c] : detail::fuse_with_table(*rs, level, lhs, rhs)) {
                    auto idx = std::lower_bound(basis.begin(), basis.end(), w) - basis.begin();
                    products[p].push_back({static_cast<std::int32_t>(idx), c});
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                errors.push_back(std::current_exception());
            }
        }
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size() / 8)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (!errors.empty())
        std::rethrow_exception(errors.front());

    auto ring = FusionRing::assemble(std::move(rs), level, std::move(basis), products);
    check_ring_invariants(ring, opts);
    return ring;
}

[[nodiscard]] inline FusionRing build_fusion_ring(const RootSystem &rs, std::int64_t level,
                                                  const FusionOptions &opts = {}) {
    return build_fusion_ring(std::make_shared<const RootSystem>(rs), level, opts);
}

/// t(lambda mu nu) = N_{lambda mu}^{nu*}, the genus-0 three-point dimension.
[[nodiscard]] inline std::int64_t three_point(const FusionRing &f, const Weight &lambda, const Weight &mu,
                                              const Weight &nu) {
    return f.structure(f.index_of(lambda), f.index_of(mu), f.dual(f.index_of(nu)));
}

/// Three-point fusion rule for sl2 at level l, from the sl2 invariant-theory description.
[[nodiscard]] inline int sl2_three_point_oracle(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t level) {
    detail::require_level(level);
    for (auto x : {p, q, r})
        if (x < 0 || x > level)
            throw DomainError("sl2 oracle: label " + std::to_string(x) + " outside [0, " + std::to_string(level) + "]");
    const std::int64_t sum = p + q + r;
    if (sum % 2 != 0)
        return 0;
    const std::int64_t m = sum / 2;
    return p <= m && q <= m && r <= m && m <= level ? 1 : 0;
}

/// omega = sum_lambda lambda lambda*, as a ring vector.
[[nodiscard]] inline RingVector casimir_vector(const FusionRing &f) {
    RingVector omega(f.size(), 0);
    for (std::size_t a = 0; a < f.size(); ++a)
        for (const auto &e : f.product(a, f.dual(a)))
            omega[static_cast<std::size_t>(e.index)] += e.value;
    return omega;
}

[[nodiscard]] inline RepElement casimir(const FusionRing &f) { return f.to_rep(casimir_vector(f)); }

/// N_g(lambda_1 + ... + lambda_p) = t(lambda_1 ... lambda_p omega^g), exact.
[[nodiscard]] inline std::int64_t genus_dimension(const FusionRing &f, std::int64_t genus,
                                                  std::span<const Weight> weights) {
    if (genus < 0)
        throw DomainError("genus must be nonnegative");
    RingVector x = f.basis_vector(f.unit());
    for (const auto &w : weights)
        x = f.multiply_basis(f.index_of(w), x);
    if (genus > 0) {
        const RingVector omega = casimir_vector(f);
        for (std::int64_t g = 0; g < genus; ++g)
            x = f.multiply(x, omega);
    }
    return f.trace_form(x);
}

[[nodiscard]] inline std::int64_t genus_dimension(const FusionRing &f, std::int64_t genus,
                                                  std::initializer_list<Weight> weights) {
    return genus_dimension(f, genus, std::span<const Weight>(weights.begin(), weights.size()));
}

/// Fundamental weights that lie in P_l.
[[nodiscard]] inline std::vector<Weight> fundamental_weights_in_P_ell(const RootSystem &rs, std::int64_t level) {
    std::vector<Weight> out;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.comarks[static_cast<std::size_t>(i)] <= level)
            out.push_back(rs.fundamental_weight(i));
    return out;
}

} // namespace verlinde
