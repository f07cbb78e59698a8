// clawfree: zero-free disk reports for chromatic polynomials of claw-free graphs.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 cap exceeded, 3 verification failure.
// CLAWFREE_MAX_ENUM overrides the default vertex cap for exponential enumeration.

#include "clawfree/bounds.hpp"
#include "clawfree/errors.hpp"
#include "clawfree/graph.hpp"
#include "clawfree/penrose.hpp"
#include "clawfree/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kVerify = 3 };

template <class Report>
void emit(const Report& r, bool json) {
    if (json)
        std::cout << clawfree::to_json(r).dump(2) << '\n';
    else
        std::cout << clawfree::render_text(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-free disks for chromatic polynomials of claw-free graphs"};
    app.require_subcommand(1);
    app.footer("Environment: CLAWFREE_MAX_ENUM=N sets the vertex cap for exponential enumeration (default " +
               std::to_string(clawfree::kDefaultEnumerationCap) + ", at most " +
               std::to_string(clawfree::kMaxEnumerationCap) + ").");
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string file;
    int max_enum = 0;
    auto* analyze = app.add_subcommand("analyze", "Classify a graph and certify its zero-free disk");
    analyze->add_option("file", file, "Edge-list file")->required();
    analyze->add_option("--max-enum", max_enum, "Vertex cap for exact polynomial stages")
        ->check(CLI::Range(1, clawfree::kMaxEnumerationCap));
    analyze->add_flag("--json", json, "Machine-readable output");

    int class_index = 0;
    double kappa = 0.0;
    std::optional<double> a;
    std::optional<int> delta;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the disk constant");
    bounds->add_option("--class", class_index, "0: claw-free, 1: also square- and diamond-free")
        ->required()
        ->check(CLI::IsMember({0, 1}));
    bounds->add_option("--kappa", kappa, "Pair independence ratio in [0,1]")->required();
    bounds->add_option("--a", a, "Fixed a in (0,1); optimized when absent");
    bounds->add_option("--delta", delta, "Maximum degree (>= 3)");
    bounds->add_flag("--json", json, "Machine-readable output");

    double step = 0.1;
    bool check = false;
    auto* table = app.add_subcommand("table1", "Tabulate the constants over a kappa grid");
    table->add_option("--step", step, "Grid step; 1/step must be an integer");
    table->add_flag("--check", check, "Compare against the embedded reference table (step 0.1)");
    table->add_flag("--json", json, "Machine-readable output");

    int r_max = 6;
    auto* scheme = app.add_subcommand("verify-scheme", "Check the Penrose partition scheme and forest identity");
    scheme->add_option("file", file, "Edge-list file")->required();
    scheme->add_option("--rmax", r_max, "Largest vertex subset size to check")->check(CLI::PositiveNumber);
    scheme->add_flag("--json", json, "Machine-readable output");

    auto* roots = app.add_subcommand("roots", "Chromatic roots with residuals");
    roots->add_option("file", file, "Edge-list file")->required();
    roots->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const auto parsed = clawfree::load_graph_file(file);
            const auto r = clawfree::analyze(parsed.graph, {max_enum}, parsed.duplicate_edges);
            emit(r, json);
            if (r.verdict == clawfree::DiskVerdict::No) return kVerify;
            if (r.oracle_agrees && !*r.oracle_agrees) return kVerify;
        } else if (*bounds) {
            clawfree::BoundQuery q{class_index, kappa, a};
            emit(clawfree::evaluate_bound(q, delta), json);
        } else if (*table) {
            const auto r = clawfree::make_table1(step, check);
            emit(r, json);
            if (!r.passed) return kVerify;
        } else if (*scheme) {
            const auto parsed = clawfree::load_graph_file(file);
            const auto r = clawfree::verify_scheme(parsed.graph, r_max);
            emit(r, json);
            if (!r.passed()) return kVerify;
        } else if (*roots) {
            const auto parsed = clawfree::load_graph_file(file);
            const auto r = clawfree::chromatic_roots(parsed.graph);
            emit(r, json);
        }
    } catch (const clawfree::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const clawfree::ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const clawfree::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
