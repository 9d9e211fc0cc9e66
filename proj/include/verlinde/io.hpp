#pragma once

// Serialization of fusion rings, fusion rule tables and spectra. JSON output is byte
// stable: keys sorted, two-space indentation, scalar arrays on one line and floats
// printed with 17 significant digits.

#include "verlinde/axioms.hpp"
#include "verlinde/spectrum.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace verlinde {

using Json = nlohmann::json;

namespace detail {

inline void format_double(std::string &out, double d) {
    if (!std::isfinite(d))
        throw InternalError("cannot serialize non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    out += buf;
    if (std::string_view(buf).find_first_of(".en") == std::string_view::npos)
        out += ".0";
}

inline bool is_scalar(const Json &j) { return !j.is_array() && !j.is_object(); }

inline void emit(std::string &out, const Json &j, int depth) {
    const auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            pad(depth + 1);
            out += Json(it.key()).dump();
            out += ": ";
            emit(out, it.value(), depth + 1);
        }
        out += "\n";
        pad(depth);
        out += "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // short rows like [a, b, c, N] or [re, im] stay on one line
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json &x) { return is_scalar(x); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                emit(out, j[i], depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            pad(depth + 1);
            emit(out, j[i], depth + 1);
        }
        out += "\n";
        pad(depth);
        out += "]";
        return;
    }
    case Json::value_t::number_float:
        format_double(out, j.get<double>());
        return;
    default:
        out += j.dump();
    }
}

inline std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string weight_key(const Weight &w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

template <class T> T get_field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw DomainError(std::string("JSON input: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception &e) {
        throw DomainError(std::string("JSON input: bad field '") + key + "': " + e.what());
    }
}

} // namespace detail

/// Deterministic rendering of a JSON value, terminated by a newline.
[[nodiscard]] inline std::string dump_json(const Json &j) {
    std::string out;
    detail::emit(out, j, 0);
    out += "\n";
    return out;
}

[[nodiscard]] inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw DomainError(std::string("JSON input: ") + e.what());
    }
}

[[nodiscard]] inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string &path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DomainError("cannot open output file '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw DomainError("failed writing output file '" + path + "'");
}

[[nodiscard]] inline Json weight_to_json(const Weight &w) { return Json(w.labels()); }

[[nodiscard]] inline Json basis_to_json(std::span<const Weight> basis) {
    Json out = Json::array();
    for (const auto &w : basis)
        out.push_back(weight_to_json(w));
    return out;
}

[[nodiscard]] inline Weight weight_from_json(const Json &j, int rank) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(rank))
        throw DomainError("JSON input: weight must be an array of " + std::to_string(rank) + " labels");
    std::vector<std::int64_t> labels;
    for (const auto &x : j) {
        if (!x.is_number_integer())
            throw DomainError("JSON input: weight labels must be integers");
        labels.push_back(x.get<std::int64_t>());
    }
    return Weight(std::move(labels));
}

/// {algebra, level, basis, structure: [a, b, c, N] over all ordered pairs, involution, unit}.
[[nodiscard]] inline Json ring_to_json(const FusionRing &f) {
    Json j;
    j["algebra"] = f.root_system().type.name();
    j["level"] = f.level();
    j["basis"] = basis_to_json(f.basis());
    Json structure = Json::array();
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b)
            for (const auto &e : f.product(a, b))
                structure.push_back({a, b, e.index, e.value});
    j["structure"] = std::move(structure);
    Json inv = Json::array();
    for (std::size_t a = 0; a < f.size(); ++a)
        inv.push_back({a, f.dual(a)});
    j["involution"] = std::move(inv);
    j["unit"] = f.unit();
    return j;
}

/// Inverse of ring_to_json. The basis must be P_l in the documented order, the structure
/// symmetric and the involution the one induced by -w_0.
[[nodiscard]] inline FusionRing ring_from_json(const Json &j, bool allow_unverified = false) {
    const auto type = SimpleType::parse(detail::get_field<std::string>(j, "algebra"));
    const auto level = detail::get_field<std::int64_t>(j, "level");
    auto rs = std::make_shared<const RootSystem>(build_root_system(type));
    detail::require_level(level);
    detail::require_verified(*rs, allow_unverified);

    const auto &jb = j.at("basis");
    if (!jb.is_array())
        throw DomainError("JSON input: basis must be an array");
    std::vector<Weight> basis;
    for (const auto &w : jb)
        basis.push_back(weight_from_json(w, rs->rank));
    if (basis != enumerate_P_ell(*rs, level))
        throw DomainError("JSON input: basis is not P_" + std::to_string(level) + " in lexicographic order");
    const std::size_t n = basis.size();

    std::map<std::array<std::size_t, 3>, std::int64_t> entries;
    for (const auto &row : j.at("structure")) {
        if (!row.is_array() || row.size() != 4)
            throw DomainError("JSON input: structure rows must be [a, b, c, N]");
        std::array<std::size_t, 3> key{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto v = row[i].get<std::int64_t>();
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw DomainError("JSON input: structure index out of range");
            key[i] = static_cast<std::size_t>(v);
        }
        if (!entries.emplace(key, row[3].get<std::int64_t>()).second)
            throw DomainError("JSON input: duplicate structure entry");
    }
    std::vector<std::vector<FusionRing::Entry>> upper(n * (n + 1) / 2);
    for (const auto &[key, v] : entries) {
        const auto [a, b, c] = key;
        const auto mirrored = entries.find({b, a, c});
        if (mirrored == entries.end() || mirrored->second != v)
            throw AxiomError("JSON input: structure constants are not symmetric at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
        if (a <= b)
            upper[a * n - a * (a + 1) / 2 + b].push_back({static_cast<std::int32_t>(c), v});
    }
    auto f = FusionRing::assemble(std::move(rs), level, std::move(basis), upper);
    if (j.contains("unit") && j.at("unit").get<std::size_t>() != f.unit())
        throw DomainError("JSON input: unit index does not match the zero weight");
    if (j.contains("involution")) {
        for (const auto &p : j.at("involution")) {
            const auto a = p.at(0).get<std::size_t>();
            if (a >= n || p.at(1).get<std::size_t>() != f.dual(a))
                throw DomainError("JSON input: involution does not match the dual weights");
        }
    }
    return f;
}

[[nodiscard]] inline std::string ring_to_csv(const FusionRing &f) {
    std::string out = "a,b,c,N\n";
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b)
            for (const auto &e : f.product(a, b))
                out += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(e.index) + "," +
                       std::to_string(e.value) + "\n";
    return out;
}

/// {labels, involution, max_degree, values: [[multiset], N]} with nonzero values only.
[[nodiscard]] inline Json rule_table_to_json(const FusionRuleTable &t) {
    Json j;
    j["labels"] = t.labels;
    j["involution"] = t.involution;
    j["max_degree"] = t.max_degree;
    Json values = Json::array();
    for (const auto &[x, v] : t.values)
        values.push_back(Json::array({Json(x), v}));
    j["values"] = std::move(values);
    return j;
}

[[nodiscard]] inline FusionRuleTable rule_table_from_json(const Json &j) {
    FusionRuleTable t;
    t.labels = detail::get_field<std::vector<std::string>>(j, "labels");
    t.involution = detail::get_field<std::vector<std::size_t>>(j, "involution");
    t.max_degree = detail::get_field<std::size_t>(j, "max_degree");
    for (const auto &row : j.at("values")) {
        if (!row.is_array() || row.size() != 2)
            throw DomainError("JSON input: table values must be [[indices], N]");
        auto x = row[0].get<Multiset>();
        std::sort(x.begin(), x.end());
        if (t.values.contains(x))
            throw DomainError("JSON input: duplicate table entry");
        t.set(std::move(x), row[1].get<std::int64_t>());
    }
    t.validate();
    return t;
}

/// {algebra, level, basis, sigma (rows mu, [re, im]), delta, chi_omega, torsion_order}.
[[nodiscard]] inline Json spectrum_to_json(const SpectralTable &t) {
    const auto &s = t.spectrum;
    Json j;
    j["algebra"] = s.rs->type.name();
    j["level"] = s.level;
    j["basis"] = basis_to_json(s.basis);
    Json sigma = Json::array();
    Json delta = Json::array();
    Json omega = Json::array();
    for (const auto &p : s.points) {
        Json row = Json::array();
        for (const auto &c : p.chi)
            row.push_back(Json::array({c.real(), c.imag()}));
        sigma.push_back(std::move(row));
        delta.push_back(p.delta);
        omega.push_back(p.chi_omega);
    }
    j["sigma"] = std::move(sigma);
    j["delta"] = std::move(delta);
    j["chi_omega"] = std::move(omega);
    j["torsion_order"] = s.torsion;
    j["unitarity_residual"] = t.unitarity_residual;
    return j;
}

[[nodiscard]] inline std::string spectrum_to_csv(const SpectralTable &t) {
    std::string out = "mu,lambda,re,im\n";
    const auto &s = t.spectrum;
    for (std::size_t m = 0; m < s.size(); ++m)
        for (std::size_t l = 0; l < s.size(); ++l) {
            out += std::to_string(m) + "," + std::to_string(l) + ",";
            detail::format_double(out, s.points[m].chi[l].real());
            out += ",";
            detail::format_double(out, s.points[m].chi[l].imag());
            out += "\n";
        }
    return out;
}

} // namespace verlinde
