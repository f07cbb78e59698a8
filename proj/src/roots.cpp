#include "clawfree/roots.hpp"

#include "clawfree/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace clawfree {

double relative_residual(const SparsePolynomial& p, std::complex<double> r) {
    const double scale = p.magnitude_bound(1.0) * std::pow(std::max(1.0, std::abs(r)), p.degree());
    if (scale == 0.0) return 0.0;
    return std::abs(p.evaluate(r)) / scale;
}

RootReport find_roots(const SparsePolynomial& p) {
    if (p.is_zero()) throw ContractViolation("the zero polynomial has no finite root set");
    RootReport report;

    int zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    for (int k = 0; k < zeros; ++k) report.roots.push_back({{0.0, 0.0}, 0.0});

    const int deg = p.degree() - zeros;
    if (deg > 0) {
        const double lead = p.coeff(p.degree()).convert_to<double>();
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
        for (int k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;
        for (int k = 0; k < deg; ++k) companion(k, deg - 1) = -p.coeff(k + zeros).convert_to<double>() / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        if (solver.info() != Eigen::Success) throw Error("companion eigenvalue iteration did not converge");
        for (int k = 0; k < deg; ++k) {
            std::complex<double> r = solver.eigenvalues()(k);
            report.roots.push_back({r, relative_residual(p, r)});
        }
    }

    std::sort(report.roots.begin(), report.roots.end(), [](const PolynomialRoot& a, const PolynomialRoot& b) {
        // real parts equal up to noise count as ties
        const double ra = std::round(a.value.real() * 1e9), rb = std::round(b.value.real() * 1e9);
        if (ra != rb) return ra < rb;
        return a.value.imag() < b.value.imag();
    });
    for (const auto& r : report.roots) report.max_residual = std::max(report.max_residual, r.residual);
    report.well_conditioned = report.max_residual < kRootResidualThreshold;
    return report;
}

}  // namespace clawfree
