#pragma once

#include "clawfree/polynomial.hpp"

#include <complex>
#include <vector>

namespace clawfree {

/// Roots with relative residual above this are flagged as ill-conditioned.
inline constexpr double kRootResidualThreshold = 1e-8;

struct PolynomialRoot {
    std::complex<double> value;
    /// |P(r)| / (sum_k |c_k| * max(1, |r|)^deg)
    double residual = 0.0;
};

struct RootReport {
    std::vector<PolynomialRoot> roots;  // sorted by real part, then imaginary part
    double max_residual = 0.0;
    bool well_conditioned = true;       // every residual below the threshold
};

/// All complex roots with multiplicity. Factors of the variable are split off
/// exactly; the rest come from the eigenvalues of the companion matrix of the
/// monic quotient. Throws ContractViolation for the zero polynomial.
RootReport find_roots(const SparsePolynomial& p);

double relative_residual(const SparsePolynomial& p, std::complex<double> r);

}  // namespace clawfree
