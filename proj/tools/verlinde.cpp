#include "verlinde/query.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
    CLI::App app{"Level-l fusion rings of simple Lie algebras and Verlinde dimensions"};
    app.set_version_flag("--version", "verlinde 0.1.0");

    std::string command;
    std::string algebra;
    std::string weights;
    std::string format = "json";
    std::string input;
    std::string output;
    std::int64_t level = 1;
    std::int64_t genus = 0;
    std::size_t depth = 4;
    unsigned threads = 0;
    bool allow_unverified = false;
    std::vector<std::string> tolerances;

    app.add_option("command", command, "dim | fuse | table | smatrix | check | oracle")
        ->required()
        ->check(CLI::IsMember({"dim", "fuse", "table", "smatrix", "check", "oracle"}));
    app.add_option("-a,--algebra", algebra, "simple type, e.g. A2, C3, G2");
    app.add_option("-l,--level", level, "level l >= 1");
    app.add_option("-g,--genus", genus, "genus for dim");
    app.add_option("-w,--weights", weights, "Dynkin labels, weights separated by ';' (\"1,0;0,1\")");
    app.add_option("-f,--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--allow-unverified", allow_unverified, "compute for types outside the verified range (F4, E6-E8)");
    app.add_option("--tol", tolerances,
                   "tolerance override, NAME=VALUE with NAME in dim, unitarity, diagonalization, character, "
                   "torsion, distinct; a bare number sets dim")
        ->allow_extra_args(false);
    app.add_option("--depth", depth, "axiom verification depth for check")->check(CLI::Range(1, 8));
    app.add_option("-i,--input", input, "ring or fusion rule table JSON for check");
    app.add_option("-o,--output", output, "write to file instead of stdout");
    app.add_option("-j,--threads", threads, "worker threads, 0 for hardware concurrency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e);
        return static_cast<int>(verlinde::ExitCode::parse);
    }

    try {
        verlinde::Query q;
        q.command = verlinde::parse_command(command);
        if (!algebra.empty()) {
            q.algebra = verlinde::SimpleType::parse(algebra);
            q.algebra->validate();
            q.weights = verlinde::parse_weights(weights, q.algebra->rank);
        } else if (!weights.empty()) {
            throw verlinde::DomainError("--weights needs --algebra");
        }
        q.level = level;
        q.genus = genus;
        q.format = verlinde::parse_format(format);
        q.allow_unverified = allow_unverified;
        for (const auto &t : tolerances)
            q.tolerances.set(t);
        q.depth = depth;
        q.input = input;
        q.threads = threads;

        const auto doc = verlinde::run_query(q);
        const auto bytes = verlinde::render(doc, q.format);
        if (output.empty())
            std::cout << bytes << std::flush;
        else
            verlinde::write_file(output, bytes);
        return static_cast<int>(doc.status);
    } catch (const verlinde::Error &e) {
        std::cerr << "verlinde: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception &e) {
        std::cerr << "verlinde: internal error: " << e.what() << "\n";
        return 1;
    }
}
