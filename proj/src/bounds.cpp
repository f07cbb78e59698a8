#include "clawfree/bounds.hpp"

#include "clawfree/errors.hpp"
#include "clawfree/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clawfree {

void BoundQuery::validate() const {
    if (class_index != 0 && class_index != 1) throw DomainError("class index must be 0 or 1");
    if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError("kappa must lie in [0, 1]");
    if (a && !(*a > 0.0 && *a < 1.0)) throw DomainError("a must lie in (0, 1)");
}

double K_func(const BoundQuery& q, double x) {
    q.validate();
    if (!q.a) throw DomainError("K needs a value of a");
    if (!(x >= 0.0 && x <= 0.5)) throw DomainError("K needs x in [0, 1/2]");
    const double a = *q.a;
    const double hx = h(x);
    return (1.0 - a) * x + q.kappa * x * x / 4.0 * ((1.0 - a) * (1.0 - a) + (hx - 1.0) * (hx - q.class_index));
}

double solve_x(const BoundQuery& q) {
    const double a = q.a.value_or(-1.0);
    if (K_func(q, 0.5) <= a) return 0.5;
    // K(a, 0) = 0 < a and K is increasing in x
    double lo = 0.0, hi = 0.5;
    while (hi - lo > kSolveTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (K_func(q, mid) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double c_of_a(const BoundQuery& q) { return 1.0 / ((1.0 - *q.a) * solve_x(q)); }

double z_of_a(const BoundQuery& q, int delta) {
    if (delta < 3) throw DomainError("z(a) needs delta >= 3");
    return 1.0 / (c_of_a(q) * delta);
}

BoundResult minimize_C(int class_index, double kappa) {
    BoundQuery q{class_index, kappa, std::nullopt};
    q.validate();
    auto cost = [&](double a) {
        BoundQuery at = q;
        at.a = a;
        return c_of_a(at);
    };

    constexpr int kGrid = 1000;
    int best = 1;
    double best_value = cost(1.0 / kGrid);
    for (int k = 2; k < kGrid; ++k) {
        const double value = cost(static_cast<double>(k) / kGrid);
        if (value < best_value) {  // strict: ties keep the smaller a
            best_value = value;
            best = k;
        }
    }

    // golden section on the bracket spanned by the neighbouring grid points
    double lo = static_cast<double>(std::max(best - 1, 1)) / kGrid;
    double hi = static_cast<double>(std::min(best + 1, kGrid - 1)) / kGrid;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = cost(x1), f2 = cost(x2);
    while (hi - lo > 1e-9) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = cost(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = cost(x2);
        }
    }
    double a_star = 0.5 * (lo + hi);
    double c_star = cost(a_star);
    const double grid_a = static_cast<double>(best) / kGrid;
    if (best_value < c_star) {
        a_star = grid_a;
        c_star = best_value;
    }

    BoundResult r;
    r.class_index = class_index;
    r.kappa = kappa;
    r.a_star = a_star;
    q.a = a_star;
    r.x_star = solve_x(q);
    r.c_of_a = c_star;
    r.c_star = c_star;
    r.optimized = true;
    return r;
}

BoundResult evaluate_bound(const BoundQuery& q, std::optional<int> delta) {
    q.validate();
    BoundResult r;
    if (q.a) {
        r.class_index = q.class_index;
        r.kappa = q.kappa;
        r.a_star = *q.a;
        r.x_star = solve_x(q);
        r.c_of_a = 1.0 / ((1.0 - *q.a) * r.x_star);
        r.c_star = r.c_of_a;
    } else {
        r = minimize_C(q.class_index, q.kappa);
    }
    if (delta) {
        if (*delta < 3) throw DomainError("z(a) needs delta >= 3");
        r.delta = delta;
        r.z_of_a = 1.0 / (r.c_of_a * *delta);
        r.disk_radius = r.c_of_a * *delta;
    }
    return r;
}

std::vector<Table1Row> table1(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw DomainError("step must lie in (0, 1]");
    const double count = 1.0 / step;
    const long intervals = std::lround(count);
    if (std::fabs(count - static_cast<double>(intervals)) > 1e-9 * count)
        throw DomainError("step must divide [0, 1] into a whole number of intervals");
    std::vector<Table1Row> rows;
    rows.reserve(static_cast<std::size_t>(intervals) + 1);
    for (long k = 0; k <= intervals; ++k) {
        const double kappa = static_cast<double>(k) / static_cast<double>(intervals);
        const BoundResult r0 = minimize_C(0, kappa);
        const BoundResult r1 = minimize_C(1, kappa);
        rows.push_back({kappa, r0.c_star, r1.c_star, r0.a_star, r1.a_star});
    }
    return rows;
}

const std::array<Table1Row, 11>& reference_table1() {
    static const std::array<Table1Row, 11> rows{{
        {0.0, 3.000000, 3.000000, 0.333333, 0.333333},
        {0.1, 3.169627, 3.128158, 0.355952, 0.350761},
        {0.2, 3.285039, 3.214447, 0.363300, 0.356563},
        {0.3, 3.377769, 3.283304, 0.367230, 0.359765},
        {0.4, 3.457121, 3.341956, 0.369749, 0.361902},
        {0.5, 3.527398, 3.393730, 0.371534, 0.363490},
        {0.6, 3.591011, 3.440483, 0.372885, 0.364754},
        {0.7, 3.649470, 3.483371, 0.373957, 0.365812},
        {0.8, 3.703793, 3.523172, 0.374839, 0.366730},
        {0.9, 3.754706, 3.560437, 0.375586, 0.367548},
        {1.0, 3.802747, 3.595574, 0.376232, 0.368292},
    }};
    return rows;
}

double max_table1_deviation(const std::vector<Table1Row>& rows) {
    const auto& ref = reference_table1();
    if (rows.size() != ref.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        worst = std::max({worst, std::fabs(rows[k].kappa - ref[k].kappa), std::fabs(rows[k].c0 - ref[k].c0),
                          std::fabs(rows[k].c1 - ref[k].c1), std::fabs(rows[k].a0 - ref[k].a0),
                          std::fabs(rows[k].a1 - ref[k].a1)});
    }
    return worst;
}

}  // namespace clawfree
