#pragma once

// Report assembly behind the command-line tool. Each command builds a plain
// struct; to_json renders the machine-readable document (stable field names,
// decimals rounded to six fractional digits) and render_text the human one.

#include "clawfree/bounds.hpp"
#include "clawfree/graph.hpp"
#include "clawfree/partition_scheme.hpp"
#include "clawfree/polynomial.hpp"
#include "clawfree/roots.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace clawfree {

enum class DiskVerdict { Yes, No, NotComputed };

struct DiskBound {
    int class_index = 0;
    double c = 0.0;        // C^i_kappa at the graph's kappa
    double a_star = 0.0;
    double radius = 0.0;   // C * delta
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    int delta = 0;
    int duplicate_edges = 0;
    ClassMembership classes;
    std::optional<Rational> kappa;  // empty when delta <= 1
    double kappa_decimal = 0.0;     // 0 when degenerate
    std::optional<DiskBound> bound;
    std::optional<SparsePolynomial> chromatic;
    std::optional<bool> oracle_agrees;  // deletion-contraction cross-check, when within its cap
    std::optional<RootReport> roots;
    DiskVerdict verdict = DiskVerdict::NotComputed;
    double max_root_modulus = 0.0;
    std::vector<std::string> notes;
};

struct AnalyzeOptions {
    int max_enum = 0;  // 0: use enumeration_cap()
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& options = {}, int duplicate_edges = 0);

/// Conservative root uncertainty: max(1,|r|) (10 residual)^(1/deg), which
/// covers roots of any multiplicity up to the degree.
double root_uncertainty(const PolynomialRoot& r, int degree);

struct VerifySchemeReport {
    PartitionSchemeReport partition;
    int r_max = 0;
    bool identity_passed = false;
    std::optional<SparsePolynomial> via_penrose;
    std::optional<SparsePolynomial> via_deletion_contraction;
    bool passed() const { return partition.passed && identity_passed; }
};

VerifySchemeReport verify_scheme(const Graph& g, int r_max, int max_enum = 0);

struct RootsReport {
    SparsePolynomial chromatic;
    RootReport roots;
};

RootsReport chromatic_roots(const Graph& g, int max_enum = 0);

struct Table1Report {
    std::vector<Table1Row> rows;
    bool checked = false;
    std::optional<double> max_deviation;
    bool passed = true;
};

/// Deviation allowed against the published table.
inline constexpr double kTable1Tolerance = 5e-6;

Table1Report make_table1(double step, bool check);

double round6(double x);

nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const BoundResult& r);
nlohmann::json to_json(const Table1Report& r);
nlohmann::json to_json(const VerifySchemeReport& r);
nlohmann::json to_json(const RootsReport& r);

std::string render_text(const AnalysisReport& r);
std::string render_text(const BoundResult& r);
std::string render_text(const Table1Report& r);
std::string render_text(const VerifySchemeReport& r);
std::string render_text(const RootsReport& r);

}  // namespace clawfree
