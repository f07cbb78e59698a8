#pragma once

// Generating functions for rooted trees in which every vertex has at most two
// children drawn from d slots, and two children are allowed only for m of the
// d(d-1)/2 slot pairs. u(y) = sum_n u_n y^n solves u = y (1 + d u + m u^2);
// w(y) = u(y) / y has a closed form. The bounding functions g_delta and h
// dominate the Penrose-tree generating function of claw-free graphs.

#include "clawfree/graph.hpp"
#include "clawfree/penrose.hpp"
#include "clawfree/polynomial.hpp"

#include <span>
#include <vector>

namespace clawfree {

struct GenFunParams {
    int d = 2;  // children slots per vertex
    int m = 0;  // admissible pairs of slots

    /// Throws DomainError unless d >= 2 and m >= 0.
    GenFunParams(int branching, int pairs);

    /// 1 / (2 sqrt(m) + d), the radius of convergence.
    double radius() const;
};

class GenFunTable {
public:
    GenFunTable(GenFunParams params, std::vector<BigInt> coeffs) : params_(params), coeffs_(std::move(coeffs)) {}

    const GenFunParams& params() const noexcept { return params_; }
    int size() const noexcept { return static_cast<int>(coeffs_.size()); }
    /// u_n for 1 <= n <= size().
    const BigInt& u(int n) const { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// sum_{n <= size()} u_n y^n
    double u_series(double y) const;
    /// sum_{n <= size()} u_n y^(n-1)
    double w_series(double y) const;

private:
    GenFunParams params_;
    std::vector<BigInt> coeffs_;
};

/// u_1 = 1 and u_n = d u_{n-1} + m sum_{j=1}^{n-2} u_j u_{n-1-j}.
GenFunTable u_coefficients(GenFunParams p, int n_max);

/// 2 / (1 - d y + sqrt((1 - d y)^2 - 4 m y^2)) for 0 <= y <= radius.
/// Throws DomainError (naming the radius) outside that range.
double w_closed_form(GenFunParams p, double y);

/// 4 / (1 + sqrt(1 - 2 (delta - 1) y))^2 for delta >= 3, 0 <= y <= 1 / (2 (delta - 1)).
double g_delta(int delta, double y);

/// 4 / (1 + sqrt(1 - 2 x))^2 for 0 <= x <= 1/2.
double h(double x);

/// T_{G,v} truncated after n_max edges: entry k counts Penrose trees with k
/// edges containing v (entry 0 is the empty tree).
std::vector<BigInt> tree_genfun(const Graph& g, const VertexOrdering& ord, Vertex v, int n_max,
                                int cap = enumeration_cap());

/// sum_k c_k y^k at double precision.
double evaluate_series(std::span<const BigInt> coeffs, double y);

}  // namespace clawfree
