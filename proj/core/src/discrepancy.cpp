#include "jitterdisc/discrepancy.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "jitterdisc/numeric.hpp"

namespace jitterdisc {

namespace {

void validate_unit_cube(const PointSet& ps) {
    for (std::size_t r = 0; r < ps.size(); ++r) {
        for (int j = 0; j < ps.dim(); ++j) {
            const double v = ps.coord(r, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ParameterError("coordinate " + std::to_string(v) + " of point " +
                                     std::to_string(r) + " outside [0, 1]");
            }
        }
    }
}

}  // namespace

double warnock_l2_squared(const PointSet& ps) {
    validate_unit_cube(ps);
    const std::size_t n = ps.size();
    const int d = ps.dim();
    const double n_d = static_cast<double>(n);

    const double volume_term = pow_int(1.0 / 3.0, d);

    const double single_sum = pairwise_sum(std::size_t{0}, n, [&](std::size_t r) {
        double prod = 1.0;
        for (int j = 0; j < d; ++j) {
            const double x = ps.coord(r, j);
            prod *= (1.0 - x * x) * 0.5;
        }
        return prod;
    });

    // Symmetric pair sum: keep only p <= r and double the off-diagonal part.
    std::vector<double> row_sums(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double off_diag = pairwise_sum(std::size_t{0}, r, [&](std::size_t p) {
            double prod = 1.0;
            for (int j = 0; j < d; ++j) {
                prod *= 1.0 - std::max(ps.coord(r, j), ps.coord(p, j));
            }
            return prod;
        });
        double diag = 1.0;
        for (int j = 0; j < d; ++j) diag *= 1.0 - ps.coord(r, j);
        row_sums[r] = 2.0 * off_diag + diag;
    }
    const double pair_sum = pairwise_sum(row_sums);

    return volume_term - (2.0 / n_d) * single_sum + pair_sum / (n_d * n_d);
}

double projected_l2_squared(const PointSet& ps, SubsetMask subset) {
    return warnock_l2_squared(project(ps, subset));
}

double hickernell_l2_squared(const PointSet& ps) {
    const int d = ps.dim();
    if (d > 20) {
        throw ResourceLimitError("Hickernell discrepancy enumerates 2^" + std::to_string(d) +
                                 " - 1 projections; refusing d > 20");
    }
    const std::uint32_t full = (1u << d) - 1u;
    double total = 0.0;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
        total += projected_l2_squared(ps, SubsetMask(bits));
    }
    return total;
}

}  // namespace jitterdisc
