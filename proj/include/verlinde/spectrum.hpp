#pragma once

// Numeric spectral side: Weyl characters at the regular torus points
// t_mu = exp 2 pi i (mu + rho) / (l + h), the weight Delta(t), the order of T_l, the
// Verlinde sum and the character matrix Sigma that diagonalizes the fusion rules.

#include "verlinde/fusion.hpp"

#include <Eigen/Dense>

#include <complex>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>

namespace verlinde {

using Complex = std::complex<double>;

struct SpectrumOptions {
    bool allow_unverified = false;
    unsigned threads = 0; // 0: hardware concurrency
    double tolerance = 1e-6; // rounding contract for dimensions
};

/// Evaluates alternating sums J(e^nu)(t_mu) = sum_w eps(w) exp 2 pi i (w nu | mu + rho) / k with
/// k = l + h. Phases are reduced exactly in the integers before the table lookup.
class TorusEvaluator {
  public:
    TorusEvaluator(const RootSystem &rs, std::int64_t level) : rs_(&rs), level_(level) {
        detail::require_level(level);
        shift_ = level + rs.dual_coxeter;
        modulus_ = detail::checked_mul(rs.gram_denominator, shift_);
        roots_of_unity_.resize(static_cast<std::size_t>(modulus_));
        for (std::int64_t j = 0; j < modulus_; ++j)
            roots_of_unity_[static_cast<std::size_t>(j)] =
                std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(modulus_));
    }

    [[nodiscard]] std::int64_t shift() const noexcept { return shift_; }

    /// Per-point data: u_w = w^T G (mu + rho) so that (w nu | mu + rho) * den = nu . u_w.
    struct Point {
        Weight mu;
        std::vector<std::vector<std::int64_t>> u;
    };

    [[nodiscard]] Point point(const Weight &mu) const {
        rs_->check_weight(mu);
        const auto r = static_cast<std::size_t>(rs_->rank);
        const Weight shifted = mu + rs_->rho;
        std::vector<std::int64_t> v(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                v[i] += rs_->gram_scaled[i][j] * shifted[j];
        Point p{mu, {}};
        p.u.reserve(rs_->weyl.size());
        for (const auto &w : rs_->weyl) {
            std::vector<std::int64_t> u(r, 0);
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t i = 0; i < r; ++i)
                    u[k] += static_cast<std::int64_t>(w.matrix[i * r + k]) * v[i];
            p.u.push_back(std::move(u));
        }
        return p;
    }

    [[nodiscard]] Complex alternating_sum(const Point &p, const Weight &nu) const {
        Complex s{0.0, 0.0};
        for (std::size_t w = 0; w < p.u.size(); ++w) {
            std::int64_t phase = 0;
            for (std::size_t k = 0; k < nu.size(); ++k)
                phase += nu[k] * p.u[w][k];
            phase %= modulus_;
            if (phase < 0)
                phase += modulus_;
            const Complex z = roots_of_unity_[static_cast<std::size_t>(phase)];
            s += rs_->weyl[w].sign > 0 ? z : -z;
        }
        return s;
    }

    /// Weyl character of V_lambda at t_mu.
    [[nodiscard]] Complex character(const Point &p, const Weight &lambda, Complex weyl_denominator) const {
        return alternating_sum(p, lambda + rs_->rho) / weyl_denominator;
    }

    [[nodiscard]] Complex weyl_denominator(const Point &p) const {
        const Complex j = alternating_sum(p, rs_->rho);
        if (std::abs(j) < 1e-12)
            throw InternalError("Weyl denominator vanishes at t_" + p.mu.to_string() + ": torus point is not regular");
        return j;
    }

    /// prod_{alpha > 0} 4 sin^2(pi (alpha | mu + rho) / k).
    [[nodiscard]] double sine_product(const Weight &mu) const {
        const Weight shifted = mu + rs_->rho;
        double prod = 1.0;
        for (const auto &alpha : rs_->positive_root_weights) {
            const std::int64_t num = scaled_pairing(*rs_, alpha, shifted);
            const double s = std::sin(std::numbers::pi * static_cast<double>(num) / static_cast<double>(modulus_));
            prod *= 4.0 * s * s;
        }
        return prod;
    }

  private:
    const RootSystem *rs_;
    std::int64_t level_;
    std::int64_t shift_ = 0;
    std::int64_t modulus_ = 1;
    std::vector<Complex> roots_of_unity_;
};

namespace detail {

inline double checked_delta(const TorusEvaluator &ev, const TorusEvaluator::Point &p, Complex weyl_denominator) {
    const double from_j = std::norm(weyl_denominator);
    const double from_sines = ev.sine_product(p.mu);
    if (!(from_j > 0.0) || std::abs(from_j - from_sines) > 1e-9 * std::max(from_j, from_sines))
        throw InternalError("Delta(t_" + p.mu.to_string() + ") disagrees: |J(e^rho)|^2 = " + std::to_string(from_j) +
                            ", sine product = " + std::to_string(from_sines));
    return from_j;
}

inline void require_spectrum_point(const RootSystem &rs, std::int64_t level, const Weight &mu) {
    require_level(level);
    require_in_P_ell(rs, level, mu);
}

} // namespace detail

[[nodiscard]] inline Complex character_value(const RootSystem &rs, std::int64_t level, const Weight &lambda,
                                             const Weight &mu) {
    detail::require_spectrum_point(rs, level, mu);
    detail::require_in_P_ell(rs, level, lambda);
    const TorusEvaluator ev(rs, level);
    const auto p = ev.point(mu);
    return ev.character(p, lambda, ev.weyl_denominator(p));
}

/// J(e^rho)(t_mu).
[[nodiscard]] inline Complex weyl_denominator_at(const RootSystem &rs, std::int64_t level, const Weight &mu) {
    detail::require_spectrum_point(rs, level, mu);
    const TorusEvaluator ev(rs, level);
    return ev.weyl_denominator(ev.point(mu));
}

/// Delta(t_mu), evaluated as |J(e^rho)(t_mu)|^2 and as a product of sines; the two must agree.
[[nodiscard]] inline double delta_at(const RootSystem &rs, std::int64_t level, const Weight &mu) {
    detail::require_spectrum_point(rs, level, mu);
    const TorusEvaluator ev(rs, level);
    const auto p = ev.point(mu);
    return detail::checked_delta(ev, p, ev.weyl_denominator(p));
}

/// |T_l| = (l + h)^r f q.
[[nodiscard]] inline std::int64_t torsion_order(const RootSystem &rs, std::int64_t level) {
    detail::require_level(level);
    const std::int64_t k = level + rs.dual_coxeter;
    std::int64_t t = rs.connection_index * rs.long_index;
    for (int i = 0; i < rs.rank; ++i)
        t = detail::checked_mul(t, k);
    return t;
}

/// |P / (l + h) Q_lg| by Smith normal form, in weight coordinates.
[[nodiscard]] inline std::int64_t torsion_order_lattice(const RootSystem &rs, std::int64_t level) {
    detail::require_level(level);
    const std::int64_t k = level + rs.dual_coxeter;
    IntMatrix gens;
    for (std::size_t a = 0; a < rs.positive_root_weights.size(); ++a) {
        if (!rs.positive_root_long[a])
            continue;
        std::vector<std::int64_t> row;
        for (auto x : rs.positive_root_weights[a].labels())
            row.push_back(k * x);
        gens.push_back(std::move(row));
    }
    return lattice_index(gens, static_cast<std::size_t>(rs.rank));
}

struct SpectrumPoint {
    Weight mu;
    std::vector<Complex> chi; // chi[lambda] for lambda in the P_l basis order
    Complex weyl_denominator;
    double delta = 0.0;
    double chi_omega = 0.0;
};

struct Spectrum {
    std::shared_ptr<const RootSystem> rs;
    std::int64_t level = 0;
    std::vector<Weight> basis;
    std::vector<SpectrumPoint> points; // one per mu in P_l, basis order
    std::int64_t torsion = 0;
    bool unverified = false;

    [[nodiscard]] std::size_t size() const noexcept { return basis.size(); }
    [[nodiscard]] std::size_t index_of(const Weight &w) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        if (it == basis.end() || *it != w)
            throw DomainError("weight " + w.to_string() + " is not in P_" + std::to_string(level) + " for " +
                              rs->type.name());
        return static_cast<std::size_t>(it - basis.begin());
    }
};

[[nodiscard]] inline Spectrum compute_spectrum(std::shared_ptr<const RootSystem> rs, std::int64_t level,
                                               const SpectrumOptions &opts = {}) {
    detail::require_level(level);
    detail::require_verified(*rs, opts.allow_unverified);
    Spectrum s;
    s.rs = rs;
    s.level = level;
    s.basis = enumerate_P_ell(*rs, level);
    s.torsion = torsion_order(*rs, level);
    s.unverified = !rs->type.verified();
    const std::size_t n = s.basis.size();
    s.points.resize(n);
    const TorusEvaluator ev(*rs, level);

    auto fill = [&](std::size_t m) {
        const auto p = ev.point(s.basis[m]);
        SpectrumPoint &sp = s.points[m];
        sp.mu = s.basis[m];
        sp.weyl_denominator = ev.weyl_denominator(p);
        sp.delta = detail::checked_delta(ev, p, sp.weyl_denominator);
        sp.chi.resize(n);
        for (std::size_t l = 0; l < n; ++l) {
            sp.chi[l] = ev.character(p, s.basis[l], sp.weyl_denominator);
            sp.chi_omega += std::norm(sp.chi[l]);
        }
    };

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t m = 0; m < n; ++m)
            fill(m);
        return s;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    for (std::size_t m = next++; m < n; m = next++)
                        fill(m);
                } catch (...) {
                    std::lock_guard lock(err_mutex);
                    if (!err)
                        err = std::current_exception();
                    next = n;
                }
            });
    }
    if (err)
        std::rethrow_exception(err);
    return s;
}

[[nodiscard]] inline Spectrum compute_spectrum(const RootSystem &rs, std::int64_t level,
                                               const SpectrumOptions &opts = {}) {
    return compute_spectrum(std::make_shared<const RootSystem>(rs), level, opts);
}

struct VerlindeResult {
    Complex sum;           // before rounding
    double value = 0.0;    // real part
    std::int64_t rounded = 0;
    double residual = 0.0; // |rounded - value|
};

/// Verlinde sum |T|^{g-1} sum_mu prod_i chi(lambda_i)(t_mu) / Delta(t_mu)^{g-1}.
[[nodiscard]] inline VerlindeResult verlinde_dimension(const Spectrum &s, std::int64_t genus,
                                                       std::span<const std::size_t> insertions,
                                                       double tolerance = 1e-6) {
    if (genus < 0)
        throw DomainError("genus must be >= 0, got " + std::to_string(genus));
    for (auto a : insertions)
        if (a >= s.size())
            throw DomainError("insertion index out of range");
    const double t = static_cast<double>(s.torsion);
    VerlindeResult r;
    for (const auto &p : s.points) {
        Complex term = std::pow(t / p.delta, static_cast<double>(genus - 1));
        for (auto a : insertions)
            term *= p.chi[a];
        r.sum += term;
    }
    r.value = r.sum.real();
    if (!(std::abs(r.value) < 9.0e18))
        throw ToleranceError("Verlinde sum out of range for " + s.rs->type.name() + " level " +
                             std::to_string(s.level) + " genus " + std::to_string(genus));
    r.rounded = std::llround(r.value);
    r.residual = std::abs(static_cast<double>(r.rounded) - r.value);
    if (std::abs(r.sum.imag()) >= tolerance || r.residual >= tolerance)
        throw ToleranceError("Verlinde sum not integral for " + s.rs->type.name() + " level " +
                             std::to_string(s.level) + " genus " + std::to_string(genus) +
                             ": value " + std::to_string(r.value) + ", imaginary part " +
                             std::to_string(r.sum.imag()));
    return r;
}

[[nodiscard]] inline VerlindeResult verlinde_dimension(const Spectrum &s, std::int64_t genus,
                                                       std::span<const Weight> weights, double tolerance = 1e-6) {
    std::vector<std::size_t> idx;
    for (const auto &w : weights) {
        s.rs->check_weight(w);
        idx.push_back(s.index_of(w));
    }
    return verlinde_dimension(s, genus, std::span<const std::size_t>(idx), tolerance);
}

[[nodiscard]] inline VerlindeResult verlinde_dimension(const RootSystem &rs, std::int64_t level, std::int64_t genus,
                                                       std::span<const Weight> weights,
                                                       const SpectrumOptions &opts = {}) {
    const auto s = compute_spectrum(rs, level, opts);
    return verlinde_dimension(s, genus, weights, opts.tolerance);
}

struct SpectralTable {
    Spectrum spectrum;
    Eigen::MatrixXcd sigma;       // rows mu, columns lambda: chi_{t_mu}(lambda)
    Eigen::MatrixXcd sigma_prime; // D_omega^{-1/2} Sigma
    double unitarity_residual = 0.0;
};

/// max |A(i, j) - B(i, j)|.
[[nodiscard]] inline double max_abs_difference(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

[[nodiscard]] inline SpectralTable spectral_table(Spectrum s) {
    const auto n = static_cast<Eigen::Index>(s.size());
    SpectralTable t;
    t.sigma.resize(n, n);
    t.sigma_prime.resize(n, n);
    for (Eigen::Index m = 0; m < n; ++m) {
        const auto &p = s.points[static_cast<std::size_t>(m)];
        const double scale = 1.0 / std::sqrt(p.chi_omega);
        for (Eigen::Index l = 0; l < n; ++l) {
            t.sigma(m, l) = p.chi[static_cast<std::size_t>(l)];
            t.sigma_prime(m, l) = scale * p.chi[static_cast<std::size_t>(l)];
        }
    }
    t.unitarity_residual =
        max_abs_difference(t.sigma_prime * t.sigma_prime.adjoint(), Eigen::MatrixXcd::Identity(n, n));
    t.spectrum = std::move(s);
    return t;
}

[[nodiscard]] inline SpectralTable spectral_table(const RootSystem &rs, std::int64_t level,
                                                  const SpectrumOptions &opts = {}) {
    return spectral_table(compute_spectrum(rs, level, opts));
}

namespace detail {

inline void require_matching(const SpectralTable &t, const FusionRing &f) {
    if (t.spectrum.basis != f.basis() || t.spectrum.level != f.level() ||
        t.spectrum.rs->type.name() != f.root_system().type.name())
        throw DomainError("spectral table and fusion ring describe different instances");
}

} // namespace detail

/// Sigma^{-1} D_a Sigma for every basis element a, the numeric structure matrices.
[[nodiscard]] inline std::vector<Eigen::MatrixXcd> recovered_structure_matrices(const SpectralTable &t) {
    const Eigen::FullPivLU<Eigen::MatrixXcd> lu(t.sigma);
    if (!lu.isInvertible())
        throw InternalError("character matrix is singular");
    const Eigen::MatrixXcd inverse = lu.inverse();
    const auto n = t.sigma.rows();
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index a = 0; a < n; ++a)
        out.push_back(inverse * t.sigma.col(a).asDiagonal() * t.sigma);
    return out;
}

/// max over a, b, c of |(Sigma^{-1} D_a Sigma)(b, c) - N_{ac}^b|.
[[nodiscard]] inline double diagonalization_residual(const SpectralTable &t, const FusionRing &f) {
    detail::require_matching(t, f);
    const auto numeric = recovered_structure_matrices(t);
    double worst = 0.0;
    for (std::size_t a = 0; a < f.size(); ++a) {
        const auto exact = f.multiplication_matrix(a);
        for (std::size_t b = 0; b < f.size(); ++b)
            for (std::size_t c = 0; c < f.size(); ++c)
                worst = std::max(worst, std::abs(numeric[a](static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c)) -
                                                 Complex(static_cast<double>(exact[b][c]), 0.0)));
    }
    return worst;
}

/// max over mu, lambda, nu of |chi(lambda) chi(nu) - sum_c N_{lambda nu}^c chi(c)|.
[[nodiscard]] inline double character_property_residual(const SpectralTable &t, const FusionRing &f) {
    detail::require_matching(t, f);
    double worst = 0.0;
    for (const auto &p : t.spectrum.points)
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a; b < f.size(); ++b) {
                Complex rhs{0.0, 0.0};
                for (const auto &e : f.product(a, b))
                    rhs += static_cast<double>(e.value) * p.chi[static_cast<std::size_t>(e.index)];
                worst = std::max(worst, std::abs(p.chi[a] * p.chi[b] - rhs));
            }
    return worst;
}

/// max over mu of |sum_lambda |chi(lambda)|^2 Delta(t_mu) - |T|| / |T|.
[[nodiscard]] inline double torsion_identity_residual(const Spectrum &s) {
    const double t = static_cast<double>(s.torsion);
    double worst = 0.0;
    for (const auto &p : s.points)
        worst = std::max(worst, std::abs(p.chi_omega * p.delta - t) / t);
    return worst;
}

/// Smallest Euclidean distance between the character vectors of two distinct points.
[[nodiscard]] inline double min_character_distance(const Spectrum &s) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t l = 0; l < s.size(); ++l)
                d2 += std::norm(s.points[i].chi[l] - s.points[j].chi[l]);
            best = std::min(best, std::sqrt(d2));
        }
    return best;
}

/// sum over characters of chi(a_1) ... chi(a_p) chi(omega)^{g-1}.
[[nodiscard]] inline Complex spectral_genus_sum(const Spectrum &s, std::int64_t genus,
                                                std::span<const std::size_t> insertions) {
    if (genus < 0)
        throw DomainError("genus must be >= 0, got " + std::to_string(genus));
    Complex sum{0.0, 0.0};
    for (const auto &p : s.points) {
        Complex term = std::pow(p.chi_omega, static_cast<double>(genus - 1));
        for (auto a : insertions)
            term *= p.chi.at(a);
        sum += term;
    }
    return sum;
}

} // namespace verlinde
