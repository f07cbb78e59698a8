#include "clawfree/genfun.hpp"

#include "clawfree/errors.hpp"

#include <cmath>
#include <sstream>

namespace clawfree {

namespace {

constexpr double kSqrtClamp = 1e-14;
constexpr double kEdgeSlack = 4e-15;  // relative slack admitted at a closed domain endpoint

std::string describe(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

double clamped_sqrt(double arg) {
    if (arg < 0.0 && arg > -kSqrtClamp) return 0.0;
    return std::sqrt(arg);
}

}  // namespace

GenFunParams::GenFunParams(int branching, int pairs) : d(branching), m(pairs) {
    if (d < 2) throw DomainError("branching degree must be >= 2");
    if (m < 0) throw DomainError("pair budget must be >= 0");
}

double GenFunParams::radius() const { return 1.0 / (2.0 * std::sqrt(static_cast<double>(m)) + d); }

double GenFunTable::u_series(double y) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + it->convert_to<double>()) * y;
    return acc;
}

double GenFunTable::w_series(double y) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + it->convert_to<double>();
    return acc;
}

GenFunTable u_coefficients(GenFunParams p, int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    std::vector<BigInt> u(static_cast<std::size_t>(n_max));
    u[0] = 1;
    for (int n = 2; n <= n_max; ++n) {
        BigInt pairs = 0;
        for (int j = 1; j <= n - 2; ++j) pairs += u[static_cast<std::size_t>(j - 1)] * u[static_cast<std::size_t>(n - 2 - j)];
        u[static_cast<std::size_t>(n - 1)] = p.d * u[static_cast<std::size_t>(n - 2)] + p.m * pairs;
    }
    return GenFunTable(p, std::move(u));
}

double w_closed_form(GenFunParams p, double y) {
    const double r = p.radius();
    if (!(y >= 0.0) || y > r * (1.0 + kEdgeSlack))
        throw DomainError("w(y) needs 0 <= y <= radius " + describe(r) + ", got " + describe(y));
    const double lin = 1.0 - p.d * y;
    return 2.0 / (lin + clamped_sqrt(lin * lin - 4.0 * p.m * y * y));
}

double g_delta(int delta, double y) {
    if (delta < 3) throw DomainError("g_delta needs delta >= 3");
    const double top = 1.0 / (2.0 * (delta - 1));
    if (!(y >= 0.0) || y > top * (1.0 + kEdgeSlack))
        throw DomainError("g_delta needs 0 <= y <= " + describe(top) + ", got " + describe(y));
    const double root = clamped_sqrt(1.0 - 2.0 * (delta - 1) * y);
    return 4.0 / ((1.0 + root) * (1.0 + root));
}

double h(double x) {
    if (!(x >= 0.0) || x > 0.5 * (1.0 + kEdgeSlack)) throw DomainError("h needs 0 <= x <= 1/2, got " + describe(x));
    const double root = clamped_sqrt(1.0 - 2.0 * x);
    return 4.0 / ((1.0 + root) * (1.0 + root));
}

std::vector<BigInt> tree_genfun(const Graph& g, const VertexOrdering& ord, Vertex v, int n_max, int cap) {
    return penrose_tree_counts(g, ord, v, n_max, cap);
}

double evaluate_series(std::span<const BigInt> coeffs, double y) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + it->convert_to<double>();
    return acc;
}

}  // namespace clawfree
