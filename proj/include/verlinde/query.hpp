#pragma once

// Query dispatch behind the command-line tool: one Query in, one ResultDocument out.

#include "verlinde/io.hpp"

#include <charconv>

namespace verlinde {

enum class Command { dim, fuse, table, smatrix, check, oracle };
enum class Format { json, csv, text };

[[nodiscard]] inline std::string_view to_string(Command c) {
    switch (c) {
    case Command::dim: return "dim";
    case Command::fuse: return "fuse";
    case Command::table: return "table";
    case Command::smatrix: return "smatrix";
    case Command::check: return "check";
    case Command::oracle: return "oracle";
    }
    return "?";
}

[[nodiscard]] inline Command parse_command(std::string_view s) {
    for (auto c : {Command::dim, Command::fuse, Command::table, Command::smatrix, Command::check, Command::oracle})
        if (to_string(c) == s)
            return c;
    throw DomainError("unknown command '" + std::string(s) + "'");
}

[[nodiscard]] inline std::string_view to_string(Format f) {
    switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
    }
    return "?";
}

[[nodiscard]] inline Format parse_format(std::string_view s) {
    for (auto f : {Format::json, Format::csv, Format::text})
        if (to_string(f) == s)
            return f;
    throw DomainError("unknown output format '" + std::string(s) + "'");
}

struct Tolerances {
    double dim = 1e-6;             // exact vs numeric dimension, before rounding
    double unitarity = 1e-9;
    double diagonalization = 1e-6;
    double character = 1e-8;
    double torsion_identity = 1e-6; // relative
    double distinct = 1e-9;         // minimum distance between character vectors

    [[nodiscard]] Json to_json() const {
        return {{"dim", dim},
                {"unitarity", unitarity},
                {"diagonalization", diagonalization},
                {"character", character},
                {"torsion_identity", torsion_identity},
                {"distinct", distinct}};
    }

    /// "name=value", or a bare number for the dimension tolerance.
    void set(std::string_view setting) {
        const auto eq = setting.find('=');
        const std::string key = eq == std::string_view::npos ? "dim" : std::string(setting.substr(0, eq));
        const std::string text(eq == std::string_view::npos ? setting : setting.substr(eq + 1));
        double v = 0;
        try {
            std::size_t used = 0;
            v = std::stod(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } catch (const std::exception &) {
            throw DomainError("bad tolerance value '" + text + "'");
        }
        if (!(v > 0))
            throw DomainError("tolerance must be positive, got '" + text + "'");
        if (key == "dim")
            dim = v;
        else if (key == "unitarity")
            unitarity = v;
        else if (key == "diagonalization")
            diagonalization = v;
        else if (key == "character")
            character = v;
        else if (key == "torsion")
            torsion_identity = v;
        else if (key == "distinct")
            distinct = v;
        else
            throw DomainError("unknown tolerance '" + key + "'");
    }
};

struct Query {
    Command command = Command::dim;
    std::optional<SimpleType> algebra; // may come from the input file for `check`
    std::int64_t level = 1;
    std::int64_t genus = 0;
    std::vector<Weight> weights;
    Format format = Format::json;
    bool allow_unverified = false;
    Tolerances tolerances;
    std::size_t depth = 4; // axiom verification depth
    std::string input;     // JSON ring or rule table for `check`
    unsigned threads = 0;
};

/// Parses "1,0;0,1" into weights of the given rank. Empty text gives no weights.
[[nodiscard]] inline std::vector<Weight> parse_weights(std::string_view text, int rank) {
    std::vector<Weight> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(';', start), text.size());
        const auto item = trim(text.substr(start, end - start));
        std::vector<std::int64_t> labels;
        std::size_t p = 0;
        while (p <= item.size()) {
            const auto q = std::min(item.find(',', p), item.size());
            const auto tok = trim(item.substr(p, q - p));
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw DomainError("bad weight label '" + std::string(tok) + "' in '" + std::string(item) + "'");
            labels.push_back(v);
            p = q + 1;
        }
        if (labels.size() != static_cast<std::size_t>(rank))
            throw DomainError("weight '" + std::string(item) + "' has " + std::to_string(labels.size()) +
                              " labels, expected rank " + std::to_string(rank));
        out.emplace_back(std::move(labels));
        start = end + 1;
    }
    return out;
}

inline constexpr std::string_view kUnverifiedStamp =
    "unproven: spectrum conditions are not established for this type";

struct ResultDocument {
    Json query;
    Json payload;
    Json provenance;
    ExitCode status = ExitCode::ok;

    [[nodiscard]] Json to_json() const {
        return {{"query", query}, {"payload", payload}, {"provenance", provenance},
                {"status", static_cast<int>(status)}};
    }

    [[nodiscard]] static ResultDocument from_json(const Json &j) {
        ResultDocument d;
        d.query = j.at("query");
        d.payload = j.at("payload");
        d.provenance = j.at("provenance");
        d.status = static_cast<ExitCode>(j.at("status").get<int>());
        return d;
    }

    friend bool operator==(const ResultDocument &, const ResultDocument &) = default;
};

namespace detail {

inline Json query_to_json(const Query &q) {
    Json j;
    j["command"] = std::string(to_string(q.command));
    j["algebra"] = q.algebra ? Json(q.algebra->name()) : Json(nullptr);
    j["level"] = q.level;
    if (q.command == Command::dim)
        j["genus"] = q.genus;
    j["weights"] = basis_to_json(q.weights);
    j["format"] = std::string(to_string(q.format));
    j["allow_unverified"] = q.allow_unverified;
    if (q.command == Command::check) {
        j["depth"] = q.depth;
        j["input"] = q.input;
    }
    return j;
}

inline Json provenance_for(const RootSystem &rs, std::int64_t level, std::span<const Weight> basis,
                           const Tolerances &tol) {
    Json p;
    p["basis"] = basis_to_json(basis);
    p["basis_order"] = "lexicographic in Dynkin labels";
    p["dual_coxeter"] = rs.dual_coxeter;
    p["torsion_order"] = torsion_order(rs, level);
    p["tolerances"] = tol.to_json();
    p["unverified"] = !rs.type.verified();
    if (!rs.type.verified())
        p["stamp"] = std::string(kUnverifiedStamp);
    p["residuals"] = Json::object();
    return p;
}

inline FusionOptions fusion_options(const Query &q) {
    FusionOptions o;
    o.allow_unverified = q.allow_unverified;
    o.threads = q.threads;
    return o;
}

inline SpectrumOptions spectrum_options(const Query &q) {
    SpectrumOptions o;
    o.allow_unverified = q.allow_unverified;
    o.threads = q.threads;
    o.tolerance = q.tolerances.dim;
    return o;
}

inline const SimpleType &require_algebra(const Query &q) {
    if (!q.algebra)
        throw DomainError("missing --algebra");
    return *q.algebra;
}

inline Json rep_to_json(const RepElement &x) {
    Json j = Json::object();
    for (const auto &[w, c] : x)
        j[w.to_string()] = c;
    return j;
}

struct CheckOutcome {
    Json report;
    bool axioms_ok = true;
    bool numeric_ok = true;
};

inline Json axiom_report_to_json(const AxiomReport &r) {
    Json j;
    j["depth"] = r.depth;
    j["f0"] = r.f0;
    j["f1"] = r.f1;
    j["f2"] = r.f2;
    j["f1_violations"] = r.f1_violations.size();
    Json v = Json::array();
    for (const auto &x : r.f2_violations)
        v.push_back({{"x", x.x}, {"y", x.y}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    j["f2_violations"] = std::move(v);
    j["kernel"] = r.kernel;
    j["nondegenerate"] = r.nondegenerate;
    j["unit"] = r.unit ? Json(*r.unit) : Json(nullptr);
    j["pairing"] = r.pairing;
    j["passed"] = r.passed();
    return j;
}

inline CheckOutcome check_ring(const FusionRing &f, const Query &q) {
    CheckOutcome out;
    const auto report = verify_fusion_rule_axioms(fusion_rule_table(f, std::max<std::size_t>(q.depth, 3)), q.depth);
    out.report["axioms"] = axiom_report_to_json(report);
    out.axioms_ok = report.passed();

    Json inv;
    try {
        check_ring_invariants(f, fusion_options(q));
        inv["passed"] = true;
    } catch (const AxiomError &e) {
        inv["passed"] = false;
        inv["message"] = e.what();
        out.axioms_ok = false;
    }
    out.report["ring_invariants"] = std::move(inv);

    const auto &rs = f.root_system();
    const auto &tol = q.tolerances;
    const auto table = spectral_table(compute_spectrum(f.root_system_ptr(), f.level(), spectrum_options(q)));
    Json num;
    auto record = [&](const char *name, double value, double bound, bool below) {
        const bool ok = below ? value < bound : value > bound;
        num[name] = {{"value", value}, {"bound", bound}, {"passed", ok}};
        out.numeric_ok = out.numeric_ok && ok;
    };
    record("unitarity_residual", table.unitarity_residual, tol.unitarity, true);
    record("diagonalization_residual", diagonalization_residual(table, f), tol.diagonalization, true);
    record("character_residual", character_property_residual(table, f), tol.character, true);
    record("torsion_identity_residual", torsion_identity_residual(table.spectrum), tol.torsion_identity, true);
    if (f.size() > 1)
        record("min_character_distance", min_character_distance(table.spectrum), tol.distinct, false);
    const auto t_formula = torsion_order(rs, f.level());
    const auto t_lattice = torsion_order_lattice(rs, f.level());
    num["torsion_order"] = {{"formula", t_formula}, {"lattice", t_lattice}, {"passed", t_formula == t_lattice}};
    out.numeric_ok = out.numeric_ok && t_formula == t_lattice;
    out.report["numeric"] = std::move(num);
    out.report["passed"] = out.axioms_ok && out.numeric_ok;
    return out;
}

} // namespace detail

/// Runs one query. Input errors throw; failed checks are reported through `status`.
[[nodiscard]] inline ResultDocument run_query(const Query &q) {
    if (q.level < 1)
        throw DomainError("level must be >= 1, got " + std::to_string(q.level));
    ResultDocument doc;
    doc.query = detail::query_to_json(q);

    if (q.command == Command::check && !q.input.empty()) {
        Json in = parse_json(read_file(q.input));
        // accept a whole `table` result document as well as a bare ring
        if (in.is_object() && in.contains("payload") && in.at("payload").contains("ring"))
            in = Json(in.at("payload").at("ring"));
        if (in.is_object() && in.contains("values")) {
            const auto table = rule_table_from_json(in);
            const auto report = verify_fusion_rule_axioms(table, q.depth);
            doc.payload["report"] = {{"axioms", detail::axiom_report_to_json(report)}, {"passed", report.passed()}};
            doc.provenance = {{"source", "fusion rule table"}, {"labels", table.labels}};
            doc.status = report.passed() ? ExitCode::ok : ExitCode::axiom;
            return doc;
        }
        const auto f = ring_from_json(in, q.allow_unverified);
        doc.query["algebra"] = f.root_system().type.name();
        doc.query["level"] = f.level();
        if (q.algebra && q.algebra->name() != f.root_system().type.name())
            throw DomainError("--algebra does not match the input ring");
        const auto outcome = detail::check_ring(f, q);
        doc.payload["report"] = outcome.report;
        doc.provenance = detail::provenance_for(f.root_system(), f.level(), f.basis(), q.tolerances);
        doc.status = !outcome.axioms_ok ? ExitCode::axiom : !outcome.numeric_ok ? ExitCode::tolerance : ExitCode::ok;
        return doc;
    }

    const auto rs = std::make_shared<const RootSystem>(build_root_system(detail::require_algebra(q)));
    for (const auto &w : q.weights)
        rs->check_weight(w);
    detail::require_verified(*rs, q.allow_unverified);
    const auto basis = enumerate_P_ell(*rs, q.level);
    doc.provenance = detail::provenance_for(*rs, q.level, basis, q.tolerances);

    switch (q.command) {
    case Command::dim: {
        if (q.genus < 0)
            throw DomainError("genus must be >= 0, got " + std::to_string(q.genus));
        const auto f = build_fusion_ring(rs, q.level, detail::fusion_options(q));
        const auto exact = genus_dimension(f, q.genus, q.weights);
        const auto s = compute_spectrum(rs, q.level, detail::spectrum_options(q));
        const auto numeric = verlinde_dimension(s, q.genus, q.weights, q.tolerances.dim);
        const double difference = std::abs(numeric.value - static_cast<double>(exact));
        doc.payload["dimension"] = exact;
        doc.payload["exact"] = exact;
        doc.payload["numeric"] = {{"value", numeric.value},
                                  {"imag", numeric.sum.imag()},
                                  {"rounded", numeric.rounded},
                                  {"rounding_residual", numeric.residual}};
        doc.provenance["residuals"]["exact_numeric"] = difference;
        if (difference >= q.tolerances.dim || numeric.rounded != exact)
            throw ToleranceError("exact and numeric dimensions disagree for " + rs->type.name() + " level " +
                                 std::to_string(q.level) + " genus " + std::to_string(q.genus) + ": " +
                                 std::to_string(exact) + " vs " + std::to_string(numeric.value));
        break;
    }
    case Command::fuse: {
        if (q.weights.empty())
            throw DomainError("fuse needs at least one weight");
        const auto f = build_fusion_ring(rs, q.level, detail::fusion_options(q));
        RingVector x = f.basis_vector(f.unit());
        for (const auto &w : q.weights)
            x = f.multiply_basis(f.index_of(w), x);
        doc.payload["product"] = detail::rep_to_json(f.to_rep(x));
        doc.payload["text"] = f.to_rep(x).to_string();
        break;
    }
    case Command::table: {
        const auto f = build_fusion_ring(rs, q.level, detail::fusion_options(q));
        doc.payload["ring"] = ring_to_json(f);
        break;
    }
    case Command::smatrix: {
        const auto t = spectral_table(compute_spectrum(rs, q.level, detail::spectrum_options(q)));
        doc.payload["spectrum"] = spectrum_to_json(t);
        doc.provenance["residuals"]["unitarity"] = t.unitarity_residual;
        if (t.unitarity_residual >= q.tolerances.unitarity)
            doc.status = ExitCode::tolerance;
        break;
    }
    case Command::check: {
        const auto f = build_fusion_ring(rs, q.level, detail::fusion_options(q));
        const auto outcome = detail::check_ring(f, q);
        doc.payload["report"] = outcome.report;
        doc.status = !outcome.axioms_ok ? ExitCode::axiom : !outcome.numeric_ok ? ExitCode::tolerance : ExitCode::ok;
        break;
    }
    case Command::oracle: {
        if (rs->type.family != Family::A || rs->rank != 1)
            throw DomainError("oracle is the sl2 three-point rule and needs --algebra A1");
        if (q.weights.size() != 3)
            throw DomainError("oracle needs exactly three weights");
        for (const auto &w : q.weights)
            detail::require_in_P_ell(*rs, q.level, w);
        const auto f = build_fusion_ring(rs, q.level, detail::fusion_options(q));
        const auto oracle = sl2_three_point_oracle(q.weights[0][0], q.weights[1][0], q.weights[2][0], q.level);
        const auto ring = three_point(f, q.weights[0], q.weights[1], q.weights[2]);
        doc.payload["oracle"] = oracle;
        doc.payload["ring"] = ring;
        doc.payload["agree"] = oracle == ring;
        if (oracle != ring)
            doc.status = ExitCode::axiom;
        break;
    }
    }
    return doc;
}

namespace detail {

inline std::string format_number(const Json &j) {
    if (j.is_number_float()) {
        std::string s;
        format_double(s, j.get<double>());
        return s;
    }
    return j.dump();
}

} // namespace detail

/// Renders a result in the requested format.
[[nodiscard]] inline std::string render(const ResultDocument &doc, Format format) {
    if (format == Format::json)
        return dump_json(doc.to_json());
    const auto command = parse_command(doc.query.at("command").get<std::string>());
    const Json &p = doc.payload;
    std::string out;
    if (format == Format::csv) {
        switch (command) {
        case Command::dim:
            out = "exact,numeric,rounded,rounding_residual,exact_numeric_residual\n" +
                  detail::format_number(p.at("exact")) + "," + detail::format_number(p.at("numeric").at("value")) +
                  "," + detail::format_number(p.at("numeric").at("rounded")) + "," +
                  detail::format_number(p.at("numeric").at("rounding_residual")) + "," +
                  detail::format_number(doc.provenance.at("residuals").at("exact_numeric")) + "\n";
            break;
        case Command::fuse:
            out = "weight,coefficient\n";
            for (auto it = p.at("product").begin(); it != p.at("product").end(); ++it)
                out += detail::csv_escape(it.key()) + "," + it.value().dump() + "\n";
            break;
        case Command::table:
            out = "a,b,c,N\n";
            for (const auto &row : p.at("ring").at("structure"))
                out += row[0].dump() + "," + row[1].dump() + "," + row[2].dump() + "," + row[3].dump() + "\n";
            break;
        case Command::smatrix: {
            out = "mu,lambda,re,im\n";
            const auto &sigma = p.at("spectrum").at("sigma");
            for (std::size_t m = 0; m < sigma.size(); ++m)
                for (std::size_t l = 0; l < sigma[m].size(); ++l)
                    out += std::to_string(m) + "," + std::to_string(l) + "," +
                           detail::format_number(sigma[m][l][0]) + "," + detail::format_number(sigma[m][l][1]) + "\n";
            break;
        }
        case Command::check: {
            out = "check,passed\n";
            const auto &r = p.at("report");
            if (r.contains("axioms"))
                out += "axioms," + r.at("axioms").at("passed").dump() + "\n";
            if (r.contains("ring_invariants"))
                out += "ring_invariants," + r.at("ring_invariants").at("passed").dump() + "\n";
            if (r.contains("numeric"))
                for (auto it = r.at("numeric").begin(); it != r.at("numeric").end(); ++it)
                    out += it.key() + "," + it.value().at("passed").dump() + "\n";
            out += "all," + r.at("passed").dump() + "\n";
            break;
        }
        case Command::oracle:
            out = "oracle,ring\n" + p.at("oracle").dump() + "," + p.at("ring").dump() + "\n";
            break;
        }
        return out;
    }

    const std::string head = doc.query.at("algebra").is_string()
                                 ? doc.query.at("algebra").get<std::string>() + " level " +
                                       doc.query.at("level").dump()
                                 : "table";
    switch (command) {
    case Command::dim:
        out = head + " genus " + doc.query.at("genus").dump() + ": dimension " + p.at("exact").dump() +
              " (numeric " + detail::format_number(p.at("numeric").at("value")) + ")\n";
        break;
    case Command::fuse:
        out = p.at("text").get<std::string>() + "\n";
        break;
    case Command::table: {
        const auto &r = p.at("ring");
        out = head + ": " + std::to_string(r.at("basis").size()) + " simple objects\n";
        const auto &basis = r.at("basis");
        auto label = [&](const Json &i) {
            std::string s = "(";
            const auto &w = basis.at(i.get<std::size_t>());
            for (std::size_t k = 0; k < w.size(); ++k)
                s += (k ? "," : "") + w[k].dump();
            return s + ")";
        };
        for (const auto &row : r.at("structure"))
            if (row[0].get<std::size_t>() <= row[1].get<std::size_t>())
                out += label(row[0]) + " x " + label(row[1]) + " -> " + row[3].dump() + " " + label(row[2]) + "\n";
        break;
    }
    case Command::smatrix: {
        const auto &s = p.at("spectrum");
        out = head + ": character matrix, rows t_mu, columns lambda\n";
        for (const auto &row : s.at("sigma")) {
            for (std::size_t l = 0; l < row.size(); ++l) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%s%.6f%+.6fi", l ? "  " : "", row[l][0].get<double>(),
                              row[l][1].get<double>());
                out += buf;
            }
            out += "\n";
        }
        break;
    }
    case Command::check: {
        const auto &r = p.at("report");
        out = head + ": " + (r.at("passed").get<bool>() ? "all checks passed" : "CHECK FAILED") + "\n";
        const auto &a = r.at("axioms");
        for (const char *k : {"f0", "f1", "f2", "nondegenerate", "pairing"})
            out += std::string("  ") + k + ": " + (a.at(k).get<bool>() ? "ok" : "FAIL") + "\n";
        if (r.contains("ring_invariants"))
            out += std::string("  ring invariants: ") + (r.at("ring_invariants").at("passed").get<bool>() ? "ok" : "FAIL") + "\n";
        if (r.contains("numeric"))
            for (auto it = r.at("numeric").begin(); it != r.at("numeric").end(); ++it)
                out += "  " + it.key() + ": " + (it.value().at("passed").get<bool>() ? "ok" : "FAIL") + "\n";
        break;
    }
    case Command::oracle:
        out = "oracle " + p.at("oracle").dump() + ", ring " + p.at("ring").dump() + "\n";
        break;
    }
    if (doc.provenance.value("unverified", false))
        out += "note: " + std::string(kUnverifiedStamp) + "\n";
    return out;
}

} // namespace verlinde
