// conserva command-line front end. Talks to the shared library exclusively
// through the C API in conserva/conserva.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conserva/conserva.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { conserva_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedAlgebra {
    conserva_algebra* ptr = nullptr;
    ~OwnedAlgebra() { conserva_algebra_free(ptr); }
};

int report_error(conserva_status status) {
    std::cerr << "error: " << conserva_status_message(status);
    const char* detail = conserva_last_error();
    if (detail && *detail)
        std::cerr << ": " << detail;
    std::cerr << "\n";
    return kExitUsage;
}

/// Resolves a positional algebra argument: an overriding file in
/// --algebra-dir wins, then the built-in names, then a plain file path.
conserva_status resolve_algebra(const std::string& name, const std::string& algebra_dir,
                                OwnedAlgebra& out) {
    conserva_status status = conserva_algebra_builtin(
        name.c_str(), algebra_dir.empty() ? nullptr : algebra_dir.c_str(), &out.ptr);
    if (status != CONSERVA_ERROR_UNKNOWN_ALGEBRA)
        return status;
    if (std::ifstream(name).good())
        return conserva_algebra_from_file(name.c_str(), &out.ptr);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for the multiplication algebras of 2-dimensional algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --algebra-dir after the subcommand as well

    std::string algebra_dir;
    app.add_option("--algebra-dir", algebra_dir,
                   "directory whose <name>.json files override the built-in tables");

    std::string show_name;
    bool show_json = false;
    auto* show = app.add_subcommand("show", "print a multiplication table");
    show->add_option("algebra", show_name, "built-in name or JSON file")->required();
    show->add_flag("--json", show_json, "emit the JSON interchange document");

    std::string solve_kind, solve_name, solve_delta;
    bool solve_json = false;
    auto* solve = app.add_subcommand("solve", "compute a solution space");
    solve->add_option("kind", solve_kind,
                      "derivations | delta-derivations | centroid | biderivations | "
                      "biderivations-sym | biderivations-skew")
        ->required();
    solve->add_option("algebra", solve_name, "built-in name or JSON file")->required();
    solve->add_option("--delta", solve_delta, "rational delta (delta-derivations only)");
    solve->add_flag("--json", solve_json, "machine-readable report");

    int construct_n = 2;
    std::string construct_e, construct_out;
    bool construct_json = false;
    auto* construct =
        app.add_subcommand("construct", "build the algebra of all multiplications on V_n");
    construct->add_option("--n", construct_n, "underlying dimension (default 2)");
    construct->add_option("--e", construct_e, "basepoint as comma-separated rationals (default v1)");
    construct->add_option("--output", construct_out,
                          "write the constructed algebra JSON here (default W<n>.json; \"-\" to skip)");
    construct->add_flag("--json", construct_json, "machine-readable report (includes the algebra)");

    bool verify_json = false;
    auto* verify = app.add_subcommand("verify-paper", "check every published claim about the tables");
    verify->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cout.flush();
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (show->parsed()) {
        OwnedAlgebra algebra;
        if (auto status = resolve_algebra(show_name, algebra_dir, algebra); status != CONSERVA_OK)
            return report_error(status);
        OwnedString text;
        const auto status = show_json ? conserva_algebra_to_json(algebra.ptr, &text.ptr)
                                      : conserva_algebra_table(algebra.ptr, &text.ptr);
        if (status != CONSERVA_OK)
            return report_error(status);
        std::cout << text.str();
        return kExitOk;
    }

    if (solve->parsed()) {
        OwnedAlgebra algebra;
        if (auto status = resolve_algebra(solve_name, algebra_dir, algebra); status != CONSERVA_OK)
            return report_error(status);
        OwnedString text;
        const auto status =
            conserva_solve(algebra.ptr, solve_kind.c_str(),
                           solve_delta.empty() ? nullptr : solve_delta.c_str(),
                           solve_json ? 1 : 0, &text.ptr);
        if (status != CONSERVA_OK)
            return report_error(status);
        std::cout << text.str();
        return kExitOk;
    }

    if (construct->parsed()) {
        std::string e_csv = construct_e;
        if (e_csv.empty()) {
            e_csv = "1";
            for (int i = 1; i < construct_n; ++i)
                e_csv += ",0";
        }
        OwnedString report, algebra_json;
        const auto status = conserva_construct_wn(construct_n, e_csv.c_str(),
                                                  construct_json ? 1 : 0, &report.ptr,
                                                  &algebra_json.ptr);
        if (status != CONSERVA_OK)
            return report_error(status);
        std::cout << report.str();
        if (!construct_json && construct_out != "-") {
            const std::string path =
                construct_out.empty() ? "W" + std::to_string(construct_n) + ".json" : construct_out;
            std::ofstream out(path);
            if (!out) {
                std::cerr << "error: cannot write " << path << "\n";
                return kExitUsage;
            }
            out << algebra_json.str();
            std::cout << "algebra written to " << path << "\n";
        }
        return kExitOk;
    }

    // verify-paper
    OwnedString report;
    int failed = 0, flagged = 0;
    const auto status =
        conserva_verify_paper(algebra_dir.empty() ? nullptr : algebra_dir.c_str(),
                              verify_json ? 1 : 0, &report.ptr, &failed, &flagged);
    if (status != CONSERVA_OK)
        return report_error(status);
    std::cout << report.str();
    return failed == 0 ? kExitOk : kExitVerificationFailure;
}
