#pragma once

// Zero-free disk constants for claw-free graphs.
//
//   K(a, x) = (1 - a) x + kappa x^2 / 4 [(1 - a)^2 + (h(x) - 1)(h(x) - i)]
//   x(a)    = sup { x in [0, 1/2] : K(a, x) <= a }
//   C(a)    = 1 / ((1 - a) x(a)),        z(a) = 1 / (C(a) delta)
//   C       = inf over a in (0, 1) of C(a)
//
// i = 1 for (claw, C4, diamond)-free graphs and 0 for claw-free graphs; kappa is
// the pair independence ratio. Chromatic roots lie in |q| < C delta.

#include <array>
#include <optional>
#include <vector>

namespace clawfree {

struct BoundQuery {
    int class_index = 0;
    double kappa = 0.0;
    std::optional<double> a;  // absent: optimize over a

    /// Throws DomainError for class_index outside {0,1}, kappa outside [0,1], a outside (0,1).
    void validate() const;
};

struct BoundResult {
    int class_index = 0;
    double kappa = 0.0;
    double a_star = 0.0;   // the a used (the minimizer when optimized)
    double x_star = 0.0;   // x(a_star)
    double c_of_a = 0.0;   // C(a_star)
    double c_star = 0.0;   // equals c_of_a; the infimum when optimized
    bool optimized = false;
    std::optional<int> delta;
    std::optional<double> z_of_a;       // 1 / (C delta)
    std::optional<double> disk_radius;  // C delta
};

double K_func(const BoundQuery& q, double x);

/// Bisection tolerance on x.
inline constexpr double kSolveTolerance = 1e-13;

/// x(a): 1/2 when K(a, 1/2) <= a, otherwise the root of K(a, x) = a.
double solve_x(const BoundQuery& q);

double c_of_a(const BoundQuery& q);

/// Throws DomainError for delta < 3.
double z_of_a(const BoundQuery& q, int delta);

/// Grid over a = 0.001 .. 0.999, then golden-section refinement on the
/// bracket around the best grid point down to |da| <= 1e-9.
BoundResult minimize_C(int class_index, double kappa);

/// Full result for a query: optimizes when q.a is absent; fills z and the disk
/// radius when delta is given.
BoundResult evaluate_bound(const BoundQuery& q, std::optional<int> delta = std::nullopt);

struct Table1Row {
    double kappa = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
};

/// One row per kappa in {0, step, 2 step, ..., 1}. Throws DomainError unless
/// 1/step is an integer (to 1e-9).
std::vector<Table1Row> table1(double step);

/// Published constants on the 0.1 grid, six decimals.
const std::array<Table1Row, 11>& reference_table1();

/// Largest absolute deviation between a computed step-0.1 table and the reference.
double max_table1_deviation(const std::vector<Table1Row>& rows);

}  // namespace clawfree
