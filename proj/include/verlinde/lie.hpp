#pragma once

// Root systems of simple Lie algebras in Bourbaki numbering, stored in Dynkin-label
// (fundamental-weight) coordinates. All data here is exact.
//
// Conventions:
//   cartan[i][j] = alpha_j(H_{alpha_i}), so the labels of alpha_j are column j.
//   B_r: alpha_r short.  C_r: alpha_r long.  D_r: alpha_{r-1}, alpha_r form the fork.
//   G_2: alpha_1 short.  F_4: alpha_1, alpha_2 long.  E_r: alpha_2 hangs off alpha_4.
//   The form (.|.) is normalized so long roots have squared length 2.

#include "verlinde/errors.hpp"
#include "verlinde/lattice.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verlinde {

using Rational = boost::rational<std::int64_t>;
using RationalMatrix = std::vector<std::vector<Rational>>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    // Types for which the level-l fusion ring is known to have the Weyl-character spectrum.
    [[nodiscard]] bool verified() const noexcept {
        return family == Family::A || family == Family::B || family == Family::C ||
               family == Family::D || family == Family::G;
    }

    [[nodiscard]] std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    friend bool operator==(const SimpleType &, const SimpleType &) = default;

    // Throws DomainError for (family, rank) pairs outside the classification.
    // D3 is accepted; it is A3 with a different simple-root numbering.
    void validate() const {
        bool ok = false;
        switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
        }
        if (!ok)
            throw DomainError("unsupported simple type " + name());
    }

    static SimpleType parse(std::string_view text) {
        if (text.size() < 2)
            throw DomainError("cannot parse algebra '" + std::string(text) + "'");
        SimpleType t;
        const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
            throw DomainError("unknown family in '" + std::string(text) + "'");
        t.family = static_cast<Family>(f);
        int rank = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9' || rank > 1000)
                throw DomainError("cannot parse rank in '" + std::string(text) + "'");
            rank = rank * 10 + (c - '0');
        }
        t.rank = rank;
        t.validate();
        return t;
    }
};

/// Weight in Dynkin-label coordinates: labels[i] = lambda(H_{alpha_i}).
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> labels) : labels_(std::move(labels)) {}
    Weight(std::initializer_list<std::int64_t> labels) : labels_(labels) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::vector<std::int64_t> &labels() const noexcept { return labels_; }
    std::int64_t &operator[](std::size_t i) { return labels_[i]; }
    std::int64_t operator[](std::size_t i) const { return labels_[i]; }

    [[nodiscard]] bool is_dominant() const noexcept {
        return std::all_of(labels_.begin(), labels_.end(), [](auto x) { return x >= 0; });
    }
    [[nodiscard]] bool is_regular_dominant() const noexcept {
        return std::all_of(labels_.begin(), labels_.end(), [](auto x) { return x > 0; });
    }
    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(labels_.begin(), labels_.end(), [](auto x) { return x == 0; });
    }

    Weight &operator+=(const Weight &o) {
        check_same(o);
        for (std::size_t i = 0; i < labels_.size(); ++i)
            labels_[i] += o.labels_[i];
        return *this;
    }
    Weight &operator-=(const Weight &o) {
        check_same(o);
        for (std::size_t i = 0; i < labels_.size(); ++i)
            labels_[i] -= o.labels_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight &b) { return a += b; }
    friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto &x : a.labels_)
            x = -x;
        return a;
    }
    friend Weight operator*(std::int64_t k, Weight a) {
        for (auto &x : a.labels_)
            x *= k;
        return a;
    }

    friend bool operator==(const Weight &, const Weight &) = default;
    friend auto operator<=>(const Weight &a, const Weight &b) { return a.labels_ <=> b.labels_; }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(labels_[i]);
        }
        return s + ")";
    }
    friend std::ostream &operator<<(std::ostream &os, const Weight &w) { return os << w.to_string(); }

  private:
    void check_same(const Weight &o) const {
        if (o.size() != size())
            throw DomainError("weight dimension mismatch");
    }
    std::vector<std::int64_t> labels_;
};

struct WeightHash {
    std::size_t operator()(const Weight &w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w.labels())
            h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Element of W as an integer matrix acting on label vectors (row-major), with its sign.
struct WeylElement {
    std::vector<std::int32_t> matrix;
    int sign = 1;
    int length = 0;
};

struct BuildOptions {
    // Weyl groups are enumerated explicitly; rank 7/8 exceptional groups are large.
    int max_weyl_rank = 6;
};

struct RootSystem {
    SimpleType type;
    int rank = 0;
    IntMatrix cartan;             // cartan[i][j] = alpha_j(H_{alpha_i})
    RationalMatrix simple_form;   // (alpha_i | alpha_j)
    RationalMatrix inverse_cartan;
    std::vector<std::vector<std::int64_t>> positive_roots; // simple-root coordinates
    std::vector<Weight> positive_root_weights;             // same roots, Dynkin labels
    std::vector<bool> positive_root_long;
    std::vector<std::int64_t> highest_root_coords;
    Weight highest_root;
    Weight rho;
    RationalMatrix gram;                  // (varpi_i | varpi_j)
    IntMatrix gram_scaled;                // gram * gram_denominator
    std::int64_t gram_denominator = 1;
    std::vector<std::int64_t> comarks;    // lambda(H_theta) = sum_i comarks[i] * labels[i]
    std::int64_t dual_coxeter = 0;
    std::vector<WeylElement> weyl;
    IntMatrix long_root_lattice;          // basis of Q_lg, simple-root coordinates
    std::int64_t connection_index = 1;    // f = |P/Q|
    std::int64_t long_index = 1;          // q = |Q/Q_lg|

    [[nodiscard]] Weight fundamental_weight(int i) const {
        Weight w = Weight::zero(static_cast<std::size_t>(rank));
        w[static_cast<std::size_t>(i)] = 1;
        return w;
    }
    [[nodiscard]] Weight simple_root(int j) const {
        std::vector<std::int64_t> labels(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i)
            labels[static_cast<std::size_t>(i)] = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return Weight(std::move(labels));
    }
    void check_weight(const Weight &w) const {
        if (w.size() != static_cast<std::size_t>(rank))
            throw DomainError("weight " + w.to_string() + " has length " + std::to_string(w.size()) +
                              ", expected rank " + std::to_string(rank) + " for " + type.name());
    }
};

// ---------------------------------------------------------------------------
// classical tables

[[nodiscard]] inline std::int64_t classical_weyl_order(const SimpleType &t) {
    auto factorial = [](int n) {
        std::int64_t f = 1;
        for (int i = 2; i <= n; ++i)
            f *= i;
        return f;
    };
    const int r = t.rank;
    switch (t.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return (std::int64_t{1} << r) * factorial(r);
    case Family::D: return (std::int64_t{1} << (r - 1)) * factorial(r);
    case Family::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

[[nodiscard]] inline std::int64_t classical_dimension(const SimpleType &t) {
    const std::int64_t r = t.rank;
    switch (t.family) {
    case Family::A: return r * (r + 2);
    case Family::B:
    case Family::C: return r * (2 * r + 1);
    case Family::D: return r * (2 * r - 1);
    case Family::E: return r == 6 ? 78 : r == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
    }
    return 0;
}

[[nodiscard]] inline std::int64_t classical_connection_index(const SimpleType &t) {
    switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    case Family::F:
    case Family::G: return 1;
    }
    return 1;
}

// |Q / Q_lg|. For G2 the long roots span an A2 sublattice of index 3.
[[nodiscard]] inline std::int64_t classical_long_index(const SimpleType &t) {
    switch (t.family) {
    case Family::B: return 2;
    case Family::C: return std::int64_t{1} << (t.rank - 1);
    case Family::F: return 4;
    case Family::G: return 3;
    default: return 1;
    }
}

namespace detail {

inline RationalMatrix invert(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0)
            ++p;
        if (p == n)
            throw InternalError("singular rational matrix");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        const Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].numerator() == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Symmetric form on simple roots, long roots of squared length 2.
inline RationalMatrix simple_root_form(const SimpleType &t) {
    const auto r = static_cast<std::size_t>(t.rank);
    RationalMatrix b(r, std::vector<Rational>(r, Rational(0)));
    auto link = [&](std::size_t i, std::size_t j, Rational v) { b[i][j] = b[j][i] = v; };
    using F = Family;
    switch (t.family) {
    case F::A:
        for (std::size_t i = 0; i < r; ++i)
            b[i][i] = 2;
        for (std::size_t i = 0; i + 1 < r; ++i)
            link(i, i + 1, -1);
        break;
    case F::B:
        for (std::size_t i = 0; i < r; ++i)
            b[i][i] = i + 1 < r ? 2 : 1;
        for (std::size_t i = 0; i + 1 < r; ++i)
            link(i, i + 1, -1);
        break;
    case F::C:
        for (std::size_t i = 0; i < r; ++i)
            b[i][i] = i + 1 < r ? 1 : 2;
        for (std::size_t i = 0; i + 2 < r; ++i)
            link(i, i + 1, Rational(-1, 2));
        link(r - 2, r - 1, -1);
        break;
    case F::D:
        for (std::size_t i = 0; i < r; ++i)
            b[i][i] = 2;
        for (std::size_t i = 0; i + 2 < r; ++i)
            link(i, i + 1, -1);
        link(r - 3, r - 1, -1);
        break;
    case F::E:
        for (std::size_t i = 0; i < r; ++i)
            b[i][i] = 2;
        link(0, 2, -1);
        link(2, 3, -1);
        link(1, 3, -1);
        for (std::size_t i = 3; i + 1 < r; ++i)
            link(i, i + 1, -1);
        break;
    case F::F:
        b[0][0] = b[1][1] = 2;
        b[2][2] = b[3][3] = 1;
        link(0, 1, -1);
        link(1, 2, -1);
        link(2, 3, Rational(-1, 2));
        break;
    case F::G:
        b[0][0] = Rational(2, 3);
        b[1][1] = 2;
        link(0, 1, -1);
        break;
    }
    return b;
}

inline Rational bilinear(const RationalMatrix &m, const std::vector<std::int64_t> &x,
                         const std::vector<std::int64_t> &y) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        Rational row(0);
        for (std::size_t j = 0; j < y.size(); ++j)
            row += m[i][j] * y[j];
        s += row * x[i];
    }
    return s;
}

inline std::vector<std::vector<std::int64_t>> positive_roots(const IntMatrix &cartan) {
    const std::size_t r = cartan.size();
    using Coords = std::vector<std::int64_t>;
    std::vector<Coords> roots;
    std::vector<Coords> layer;
    auto key_of = [](const Coords &c) { return Weight(c); };
    std::unordered_map<Weight, bool, WeightHash> known;
    for (std::size_t i = 0; i < r; ++i) {
        Coords c(r, 0);
        c[i] = 1;
        layer.push_back(c);
        known.emplace(key_of(c), true);
    }
    while (!layer.empty()) {
        std::vector<Coords> next;
        for (const auto &beta : layer) {
            roots.push_back(beta);
            for (std::size_t i = 0; i < r; ++i) {
                std::int64_t pairing = 0; // beta(H_i)
                for (std::size_t j = 0; j < r; ++j)
                    pairing += cartan[i][j] * beta[j];
                std::int64_t p = 0;
                Coords down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!known.contains(key_of(down)))
                        break;
                    ++p;
                }
                if (p - pairing > 0) {
                    Coords up = beta;
                    up[i] += 1;
                    if (known.emplace(key_of(up), true).second)
                        next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    return roots;
}

inline void apply_simple_reflection(const IntMatrix &cartan, std::size_t i, std::vector<std::int64_t> &y) {
    const std::int64_t c = y[i];
    if (c == 0)
        return;
    for (std::size_t j = 0; j < y.size(); ++j)
        y[j] -= c * cartan[j][i];
}

inline void enumerate_weyl(RootSystem &rs, std::int64_t expected) {
    const auto r = static_cast<std::size_t>(rs.rank);
    std::unordered_map<Weight, std::size_t, WeightHash> seen;
    seen.reserve(static_cast<std::size_t>(expected));
    WeylElement id;
    id.matrix.assign(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        id.matrix[i * r + i] = 1;
    rs.weyl.reserve(static_cast<std::size_t>(expected));
    rs.weyl.push_back(id);
    seen.emplace(rs.rho, 0);
    std::vector<Weight> images{rs.rho};
    for (std::size_t head = 0; head < rs.weyl.size(); ++head) {
        for (std::size_t i = 0; i < r; ++i) {
            auto img = images[head].labels();
            apply_simple_reflection(rs.cartan, i, img);
            Weight key(img);
            if (seen.contains(key))
                continue;
            WeylElement w;
            w.length = rs.weyl[head].length + 1;
            w.sign = -rs.weyl[head].sign;
            w.matrix = rs.weyl[head].matrix;
            // left-multiply by s_i: row j -= cartan[j][i] * row i
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i || rs.cartan[j][i] == 0)
                    continue;
                for (std::size_t k = 0; k < r; ++k)
                    w.matrix[j * r + k] -= static_cast<std::int32_t>(rs.cartan[j][i]) * w.matrix[i * r + k];
            }
            for (std::size_t k = 0; k < r; ++k)
                w.matrix[i * r + k] = -w.matrix[i * r + k];
            seen.emplace(key, rs.weyl.size());
            rs.weyl.push_back(std::move(w));
            images.push_back(std::move(key));
        }
    }
}

} // namespace detail

/// Weyl group element applied to a weight.
[[nodiscard]] inline Weight apply(const RootSystem &rs, const WeylElement &w, const Weight &x) {
    const auto r = static_cast<std::size_t>(rs.rank);
    std::vector<std::int64_t> y(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            y[i] += static_cast<std::int64_t>(w.matrix[i * r + k]) * x[k];
    return Weight(std::move(y));
}

[[nodiscard]] inline RootSystem build_root_system(const SimpleType &type, const BuildOptions &opts = {}) {
    type.validate();
    if (type.rank > opts.max_weyl_rank)
        throw CapacityError("rank " + std::to_string(type.rank) + " of " + type.name() +
                            " exceeds the Weyl enumeration cap (max rank " +
                            std::to_string(opts.max_weyl_rank) + ")");
    RootSystem rs;
    rs.type = type;
    rs.rank = type.rank;
    const auto r = static_cast<std::size_t>(type.rank);

    rs.simple_form = detail::simple_root_form(type);
    rs.cartan.assign(r, std::vector<std::int64_t>(r, 0));
    RationalMatrix cartan_q(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rational a = Rational(2) * rs.simple_form[i][j] / rs.simple_form[i][i];
            if (a.denominator() != 1)
                throw InternalError("non-integral Cartan entry");
            rs.cartan[i][j] = a.numerator();
            cartan_q[i][j] = a;
        }
    rs.inverse_cartan = detail::invert(cartan_q);

    // gram = A^{-T} B A^{-1}
    RationalMatrix tmp(r, std::vector<Rational>(r, Rational(0)));
    rs.gram.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                tmp[i][j] += rs.simple_form[i][k] * rs.inverse_cartan[k][j];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                rs.gram[i][j] += rs.inverse_cartan[k][i] * tmp[k][j];
    std::int64_t den = 1;
    for (const auto &row : rs.gram)
        for (const auto &x : row)
            den = std::lcm(den, x.denominator());
    rs.gram_denominator = den;
    rs.gram_scaled.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rational v = rs.gram[i][j] * den;
            rs.gram_scaled[i][j] = v.numerator();
        }

    rs.positive_roots = detail::positive_roots(rs.cartan);
    std::size_t top = 0;
    auto height = [](const std::vector<std::int64_t> &c) {
        std::int64_t h = 0;
        for (auto x : c)
            h += x;
        return h;
    };
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        const auto &c = rs.positive_roots[k];
        std::vector<std::int64_t> labels(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                labels[i] += rs.cartan[i][j] * c[j];
        rs.positive_root_weights.emplace_back(std::move(labels));
        rs.positive_root_long.push_back(detail::bilinear(rs.simple_form, c, c) == Rational(2));
        if (height(c) > height(rs.positive_roots[top]))
            top = k;
    }
    rs.highest_root_coords = rs.positive_roots[top];
    rs.highest_root = rs.positive_root_weights[top];
    rs.rho = Weight(std::vector<std::int64_t>(r, 1));

    rs.comarks.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < r; ++j)
            s += rs.gram[i][j] * rs.highest_root[j];
        if (s.denominator() != 1)
            throw InternalError("non-integral comark");
        rs.comarks[i] = s.numerator();
    }
    rs.dual_coxeter = 1;
    for (auto c : rs.comarks)
        rs.dual_coxeter += c;

    IntMatrix long_roots;
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
        if (rs.positive_root_long[k])
            long_roots.push_back(rs.positive_roots[k]);
    rs.long_root_lattice = lattice_basis(long_roots);
    rs.connection_index = classical_connection_index(type);
    rs.long_index = classical_long_index(type);

    detail::enumerate_weyl(rs, classical_weyl_order(type));
    return rs;
}

/// Normalized invariant form (x|y) on weights.
[[nodiscard]] inline Rational killing_pairing(const RootSystem &rs, const Weight &x, const Weight &y) {
    rs.check_weight(x);
    rs.check_weight(y);
    return detail::bilinear(rs.gram, x.labels(), y.labels());
}

/// (x|y) * gram_denominator, exact integer.
[[nodiscard]] inline std::int64_t scaled_pairing(const RootSystem &rs, const Weight &x, const Weight &y) {
    std::int64_t s = 0;
    const auto r = static_cast<std::size_t>(rs.rank);
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0)
            continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < r; ++j)
            row += rs.gram_scaled[i][j] * y[j];
        s += row * x[i];
    }
    return s;
}

/// lambda(H_theta).
[[nodiscard]] inline std::int64_t level_of(const RootSystem &rs, const Weight &x) {
    rs.check_weight(x);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += rs.comarks[i] * x[i];
    return s;
}

/// Simple-root coordinates of an element of the root lattice; throws if x is not in Q.
[[nodiscard]] inline std::vector<std::int64_t> root_coordinates(const RootSystem &rs, const Weight &x) {
    const auto r = static_cast<std::size_t>(rs.rank);
    std::vector<std::int64_t> c(r);
    for (std::size_t i = 0; i < r; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < r; ++j)
            s += rs.inverse_cartan[i][j] * x[j];
        if (s.denominator() != 1)
            throw DomainError(x.to_string() + " is not in the root lattice");
        c[i] = s.numerator();
    }
    return c;
}

struct SignedWeight {
    int sign = 1;
    Weight weight;
    friend bool operator==(const SignedWeight &, const SignedWeight &) = default;
};

/// Reflects x into the closed dominant chamber by simple reflections. `sign` is the
/// signature of the element used; it is meaningful only when the result is regular.
[[nodiscard]] inline SignedWeight reflect_to_dominant(const RootSystem &rs, Weight x) {
    rs.check_weight(x);
    int sign = 1;
    auto labels = x.labels();
    for (;;) {
        std::size_t i = 0;
        while (i < labels.size() && labels[i] >= 0)
            ++i;
        if (i == labels.size())
            break;
        detail::apply_simple_reflection(rs.cartan, i, labels);
        sign = -sign;
    }
    return {sign, Weight(std::move(labels))};
}

/// Dominant W-orbit representative with the signature of the reflecting element;
/// std::nullopt when x lies on a wall (is fixed by some reflection).
[[nodiscard]] inline std::optional<SignedWeight> dominant_chamber(const RootSystem &rs, const Weight &x) {
    auto res = reflect_to_dominant(rs, x);
    if (!res.weight.is_regular_dominant())
        return std::nullopt;
    return res;
}

} // namespace verlinde
