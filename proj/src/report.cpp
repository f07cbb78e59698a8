#include "clawfree/report.hpp"

#include "clawfree/chromatic.hpp"
#include "clawfree/errors.hpp"
#include "clawfree/penrose.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace clawfree {

namespace {

int resolve_cap(int max_enum) { return max_enum > 0 ? max_enum : enumeration_cap(); }

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", round6(x));
    return buf;
}

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// six significant digits, for quantities spanning many orders of magnitude
double round_sig6(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return std::strtod(buf, nullptr);
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const char* verdict_text(DiskVerdict v) {
    switch (v) {
        case DiskVerdict::Yes: return "yes";
        case DiskVerdict::No: return "no";
        case DiskVerdict::NotComputed: return "not-computed";
    }
    return "not-computed";
}

nlohmann::json coefficient_array(const SparsePolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : p.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            arr.push_back(c.convert_to<std::int64_t>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

nlohmann::json polynomial_json(const SparsePolynomial& p) {
    return {{"coefficients", coefficient_array(p)}, {"degree", p.degree()}, {"text", p.to_string("q")}};
}

nlohmann::json roots_json(const RootReport& r) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& root : r.roots)
        list.push_back({{"re", round6(root.value.real())},
                        {"im", round6(root.value.imag())},
                        {"modulus", round6(std::abs(root.value))},
                        {"residual", round_sig6(root.residual)}});
    return {{"roots", list},
            {"max_residual", round_sig6(r.max_residual)},
            {"well_conditioned", r.well_conditioned}};
}

std::string complex_text(std::complex<double> z) {
    std::string out = fixed6(z.real());
    const double im = round6(z.imag());
    if (im != 0.0) out += (im < 0 ? " - " : " + ") + fixed6(std::fabs(im)) + "i";
    return out;
}

std::string roots_text(const RootReport& r) {
    std::ostringstream out;
    for (const auto& root : r.roots)
        out << "  " << complex_text(root.value) << "   |r| = " << fixed6(std::abs(root.value))
            << "   residual " << sci(root.residual) << '\n';
    out << "max residual: " << sci(r.max_residual) << (r.well_conditioned ? "" : "  (ILL-CONDITIONED)") << '\n';
    return out.str();
}

}  // namespace

double round6(double x) {
    const double r = std::round(x * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

double root_uncertainty(const PolynomialRoot& r, int degree) {
    if (r.residual <= 0.0 || degree <= 0) return 0.0;
    return std::max(1.0, std::abs(r.value)) * std::pow(10.0 * r.residual, 1.0 / degree);
}

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& options, int duplicate_edges) {
    AnalysisReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.delta = max_degree(g);
    r.duplicate_edges = duplicate_edges;
    r.classes = classify(g);
    if (duplicate_edges > 0) r.notes.push_back(std::to_string(duplicate_edges) + " duplicate edge line(s) merged");

    try {
        r.kappa = pair_independence_ratio(g);
        r.kappa_decimal = boost::rational_cast<double>(*r.kappa);
        if (*r.kappa > Rational(1)) r.notes.push_back("kappa exceeds 1: outside [0,1] because the graph is not claw-free");
    } catch (const DegenerateDenominator&) {
        r.notes.push_back("max degree <= 1: pair independence ratio undefined, reported as 0");
    }

    if (!r.classes.claw_free) {
        r.notes.push_back("not claw-free: no zero-free bound applies");
    } else if (r.delta < 3) {
        r.notes.push_back("zero-free bound requires delta >= 3: no bound reported");
    } else {
        const int i = *r.classes.class_index;
        const BoundResult b = minimize_C(i, r.kappa_decimal);
        r.bound = DiskBound{i, b.c_star, b.a_star, b.c_star * r.delta};
    }

    const int cap = resolve_cap(options.max_enum);
    if (r.n > cap) {
        r.notes.push_back("chromatic polynomial not computed: " + std::to_string(r.n) +
                          " vertices exceed the enumeration cap " + std::to_string(cap));
        return r;
    }
    r.chromatic = chromatic_via_penrose(g, cap);
    if (r.n <= kDeletionContractionCap) r.oracle_agrees = chromatic_deletion_contraction(g) == *r.chromatic;
    r.roots = find_roots(*r.chromatic);
    if (!r.roots->well_conditioned) r.notes.push_back("root residual above threshold: roots ill-conditioned");
    for (const auto& root : r.roots->roots) r.max_root_modulus = std::max(r.max_root_modulus, std::abs(root.value));

    if (r.bound) {
        bool inside = true;
        for (const auto& root : r.roots->roots)
            if (std::abs(root.value) + root_uncertainty(root, r.chromatic->degree()) >= r.bound->radius) inside = false;
        r.verdict = inside ? DiskVerdict::Yes : DiskVerdict::No;
    }
    return r;
}

VerifySchemeReport verify_scheme(const Graph& g, int r_max, int max_enum) {
    VerifySchemeReport r;
    r.r_max = r_max;
    const VertexOrdering ord = VertexOrdering::natural(g.vertex_count());
    r.partition = verify_partition_scheme(g, ord, r_max);
    r.via_penrose = chromatic_via_penrose(g, ord, resolve_cap(max_enum));
    r.via_deletion_contraction = chromatic_deletion_contraction(g);
    r.identity_passed = *r.via_penrose == *r.via_deletion_contraction;
    return r;
}

RootsReport chromatic_roots(const Graph& g, int max_enum) {
    RootsReport r;
    r.chromatic = chromatic_via_penrose(g, resolve_cap(max_enum));
    r.roots = find_roots(r.chromatic);
    return r;
}

Table1Report make_table1(double step, bool check) {
    Table1Report r;
    r.rows = table1(step);
    if (check) {
        r.checked = true;
        r.max_deviation = max_table1_deviation(r.rows);
        r.passed = *r.max_deviation <= kTable1Tolerance;
    }
    return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["command"] = "analyze";
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"delta", r.delta}, {"duplicate_edges", r.duplicate_edges}};
    nlohmann::json cls = {{"claw_free", r.classes.claw_free},
                          {"square_free", r.classes.square_free},
                          {"diamond_free", r.classes.diamond_free}};
    cls["class_index"] = r.classes.class_index ? nlohmann::json(*r.classes.class_index) : nlohmann::json(nullptr);
    j["classification"] = cls;
    if (r.kappa)
        j["kappa"] = {{"exact", rational_text(*r.kappa)}, {"decimal", round6(r.kappa_decimal)}, {"degenerate", false}};
    else
        j["kappa"] = {{"exact", "0"}, {"decimal", 0.0}, {"degenerate", true}};
    if (r.bound)
        j["bound"] = {{"class_index", r.bound->class_index},
                      {"C", round6(r.bound->c)},
                      {"a_star", round6(r.bound->a_star)},
                      {"radius", round6(r.bound->radius)}};
    else
        j["bound"] = nullptr;
    j["chromatic_polynomial"] = r.chromatic ? polynomial_json(*r.chromatic) : nlohmann::json(nullptr);
    j["oracle_agrees"] = r.oracle_agrees ? nlohmann::json(*r.oracle_agrees) : nlohmann::json(nullptr);
    j["roots"] = r.roots ? roots_json(*r.roots) : nlohmann::json(nullptr);
    j["max_root_modulus"] = r.roots ? nlohmann::json(round6(r.max_root_modulus)) : nlohmann::json(nullptr);
    j["disk_verdict"] = verdict_text(r.verdict);
    j["notes"] = r.notes;
    return j;
}

nlohmann::json to_json(const BoundResult& r) {
    nlohmann::json j;
    j["command"] = "bounds";
    j["class_index"] = r.class_index;
    j["kappa"] = round6(r.kappa);
    j["optimized"] = r.optimized;
    j["a"] = round6(r.a_star);
    j["x"] = round6(r.x_star);
    j["C"] = round6(r.c_of_a);
    j["delta"] = r.delta ? nlohmann::json(*r.delta) : nlohmann::json(nullptr);
    j["z"] = r.z_of_a ? nlohmann::json(round6(*r.z_of_a)) : nlohmann::json(nullptr);
    j["radius"] = r.disk_radius ? nlohmann::json(round6(*r.disk_radius)) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const Table1Report& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"kappa", round6(row.kappa)},
                        {"C0", round6(row.c0)},
                        {"C1", round6(row.c1)},
                        {"a0", round6(row.a0)},
                        {"a1", round6(row.a1)}});
    nlohmann::json j = {{"command", "table1"}, {"rows", rows}, {"checked", r.checked}};
    j["max_deviation"] = r.max_deviation ? nlohmann::json(round_sig6(*r.max_deviation)) : nlohmann::json(nullptr);
    j["passed"] = r.passed;
    return j;
}

nlohmann::json to_json(const VerifySchemeReport& r) {
    nlohmann::json part = {{"passed", r.partition.passed},
                           {"r_max", r.r_max},
                           {"subsets_checked", r.partition.subsets_checked},
                           {"connected_spanning_sets", r.partition.connected_spanning_sets},
                           {"spanning_trees", r.partition.spanning_trees}};
    if (r.partition.counterexample) {
        const auto& c = *r.partition.counterexample;
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& e : c.edge_set) edges.push_back({e.u, e.v});
        part["counterexample"] = {{"subset", c.subset},
                                  {"edge_set", edges},
                                  {"cover_count", c.cover_count},
                                  {"connected_spanning", c.connected_spanning}};
    } else {
        part["counterexample"] = nullptr;
    }
    nlohmann::json ident = {{"passed", r.identity_passed}};
    ident["via_penrose"] = r.via_penrose ? polynomial_json(*r.via_penrose) : nlohmann::json(nullptr);
    ident["via_deletion_contraction"] =
        r.via_deletion_contraction ? polynomial_json(*r.via_deletion_contraction) : nlohmann::json(nullptr);
    return {{"command", "verify-scheme"}, {"partition_scheme", part}, {"penrose_identity", ident}, {"passed", r.passed()}};
}

nlohmann::json to_json(const RootsReport& r) {
    nlohmann::json j = roots_json(r.roots);
    j["command"] = "roots";
    j["chromatic_polynomial"] = polynomial_json(r.chromatic);
    return j;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph: n = " << r.n << ", m = " << r.m << ", delta = " << r.delta << '\n';
    out << "claw-free: " << (r.classes.claw_free ? "yes" : "no") << ", square-free: "
        << (r.classes.square_free ? "yes" : "no") << ", diamond-free: " << (r.classes.diamond_free ? "yes" : "no")
        << '\n';
    out << "class index: " << (r.classes.class_index ? std::to_string(*r.classes.class_index) : "none") << '\n';
    if (r.kappa)
        out << "kappa: " << rational_text(*r.kappa) << " (" << fixed6(r.kappa_decimal) << ")\n";
    else
        out << "kappa: 0 (degenerate)\n";
    if (r.bound)
        out << "bound: C = " << fixed6(r.bound->c) << ", a* = " << fixed6(r.bound->a_star)
            << ", radius C*delta = " << fixed6(r.bound->radius) << '\n';
    else
        out << "bound: none\n";
    if (r.chromatic) {
        out << "chromatic polynomial: " << r.chromatic->to_string("q") << '\n';
        if (r.oracle_agrees) out << "deletion-contraction agrees: " << (*r.oracle_agrees ? "yes" : "NO") << '\n';
    } else {
        out << "chromatic polynomial: not-computed\n";
    }
    if (r.roots) {
        out << "roots:\n" << roots_text(*r.roots);
        out << "max |root|: " << fixed6(r.max_root_modulus) << '\n';
    }
    out << "disk verdict: " << verdict_text(r.verdict) << '\n';
    for (const auto& note : r.notes) out << "note: " << note << '\n';
    return out.str();
}

std::string render_text(const BoundResult& r) {
    std::ostringstream out;
    out << "class " << r.class_index << ", kappa = " << fixed6(r.kappa) << '\n';
    if (r.optimized)
        out << "C=" << fixed6(r.c_star) << " a*=" << fixed6(r.a_star) << '\n';
    else
        out << "C(a)=" << fixed6(r.c_of_a) << " a=" << fixed6(r.a_star) << '\n';
    out << "x=" << fixed6(r.x_star) << '\n';
    if (r.delta) out << "delta=" << *r.delta << " z=" << fixed6(*r.z_of_a) << " radius=" << fixed6(*r.disk_radius) << '\n';
    return out.str();
}

std::string render_text(const Table1Report& r) {
    std::ostringstream out;
    out << "kappa       C0          C1          a0*         a1*\n";
    for (const auto& row : r.rows)
        out << fixed6(row.kappa) << "    " << fixed6(row.c0) << "    " << fixed6(row.c1) << "    " << fixed6(row.a0)
            << "    " << fixed6(row.a1) << '\n';
    if (r.checked)
        out << "check against reference: " << (r.passed ? "PASS" : "FAIL") << " (max deviation "
            << sci(*r.max_deviation) << ", tolerance " << sci(kTable1Tolerance) << ")\n";
    return out.str();
}

std::string render_text(const VerifySchemeReport& r) {
    std::ostringstream out;
    out << "partition scheme (|R| <= " << r.r_max << "): " << (r.partition.passed ? "PASS" : "FAIL") << " ("
        << r.partition.subsets_checked << " vertex sets, " << r.partition.connected_spanning_sets
        << " connected spanning sets, " << r.partition.spanning_trees << " spanning trees)\n";
    if (r.partition.counterexample) {
        const auto& c = *r.partition.counterexample;
        out << "  counterexample R = {";
        for (std::size_t k = 0; k < c.subset.size(); ++k) out << (k ? "," : "") << c.subset[k];
        out << "}, edge set {";
        for (std::size_t k = 0; k < c.edge_set.size(); ++k) out << (k ? " " : "") << c.edge_set[k].u << "-" << c.edge_set[k].v;
        out << "} covered " << c.cover_count << " time(s)\n";
    }
    out << "penrose identity: " << (r.identity_passed ? "PASS" : "FAIL") << '\n';
    if (r.via_penrose) out << "  via Penrose forests:     " << r.via_penrose->to_string("q") << '\n';
    if (r.via_deletion_contraction)
        out << "  via deletion-contraction: " << r.via_deletion_contraction->to_string("q") << '\n';
    return out.str();
}

std::string render_text(const RootsReport& r) {
    std::ostringstream out;
    out << "chromatic polynomial: " << r.chromatic.to_string("q") << '\n';
    out << "roots:\n" << roots_text(r.roots);
    return out.str();
}

}  // namespace clawfree
