#include "jitterdisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "jitterdisc/numeric.hpp"

namespace jitterdisc {

namespace {

constexpr std::int64_t kDirectBoxLimit = 1'000'000;
constexpr int kCollapsedDimLimit = 12;

double box_sum_direct(std::int64_t m, int d) {
    const PartitionSpec spec(m, d);
    const std::int64_t n = spec.box_count();
    const double md = static_cast<double>(m);

    // c[t] = (3^t - 2^t)/(6m)^t, the per-region constant for d - |u| = t.
    std::vector<double> region_const(d + 1);
    for (int t = 0; t <= d; ++t) {
        region_const[t] = pow_int(0.5 / md, t) - pow_int(1.0 / (3.0 * md), t);
    }

    const std::uint32_t full = (d >= 32) ? ~0u : ((1u << d) - 1u);
    const double total = pairwise_sum(std::size_t{0}, static_cast<std::size_t>(n),
                                      [&](std::size_t rank) {
        const PartitionIndex idx = index_from_rank(spec, static_cast<std::int64_t>(rank));
        double box_total = region_const[d];
        for (std::uint32_t bits = 1; bits < full; ++bits) {
            const int k = __builtin_popcount(bits);
            double w = 1.0;
            for (int j = 0; j < d; ++j) {
                if ((bits >> j) & 1u) w *= static_cast<double>(m - idx.comps[j]) / md;
            }
            box_total += region_const[d - k] * w;
        }
        return box_total;
    });
    return div_pow_int(total, md, 2 * d);
}

}  // namespace

double expected_l2_squared_binomial_sum(std::int64_t m, int d) {
    if (m < 1) throw ParameterError("m must be >= 1, got " + std::to_string(m));
    if (d < 1) throw ParameterError("d must be >= 1, got " + std::to_string(d));
    const double md = static_cast<double>(m);
    const double m_sq = md * md;
    // Scale m^{-2d} into the bases: ((m-1)/2)^k (1/2 or 1/3)^{d-k} / m^{2d}.
    const double gamma = (md - 1.0) / (2.0 * m_sq);
    const double half = 0.5 / m_sq;
    const double third = 1.0 / (3.0 * m_sq);
    double total = 0.0;
    for (int k = 0; k <= d; ++k) {
        total += binomial(d, k) * pow_int(gamma, k) *
                 (pow_int(half, d - k) - pow_int(third, d - k));
    }
    return total;
}

double expected_l2_squared_by_box_sum(std::int64_t m, int d, BoxSumPath path) {
    const PartitionSpec spec(m, d);
    const std::int64_t n = spec.box_count();
    switch (path) {
        case BoxSumPath::DirectEnumeration:
            if (n > kDirectBoxLimit) {
                throw ResourceLimitError("direct box enumeration over " + std::to_string(n) +
                                         " boxes exceeds the " +
                                         std::to_string(kDirectBoxLimit) + " box limit");
            }
            return box_sum_direct(m, d);
        case BoxSumPath::CollapsedSum:
            if (d > kCollapsedDimLimit) {
                throw ResourceLimitError("collapsed box sum limited to d <= " +
                                         std::to_string(kCollapsedDimLimit) + ", got d = " +
                                         std::to_string(d));
            }
            return expected_l2_squared_binomial_sum(m, d);
        case BoxSumPath::Auto:
            if (n <= kDirectBoxLimit) return box_sum_direct(m, d);
            if (d <= kCollapsedDimLimit) return expected_l2_squared_binomial_sum(m, d);
            throw ResourceLimitError("box sum needs m^d <= " + std::to_string(kDirectBoxLimit) +
                                     " or d <= " + std::to_string(kCollapsedDimLimit));
    }
    throw ParameterError("invalid box sum path");
}

double l2_squared_by_cell_decomposition(const PointSet& ps) {
    const std::size_t n = ps.size();
    const int d = ps.dim();
    if (n > 8 || d > 3) {
        throw ResourceLimitError("cell decomposition enumerates up to (N+1)^d cells; "
                                 "limited to N <= 8 and d <= 3");
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (int j = 0; j < d; ++j) {
            const double v = ps.coord(r, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ParameterError("coordinate " + std::to_string(v) + " outside [0, 1]");
            }
        }
    }

    // Axis breakpoints: 0, 1 and every distinct coordinate value.
    std::vector<std::vector<double>> breaks(d);
    for (int j = 0; j < d; ++j) {
        std::vector<double>& b = breaks[j];
        b.push_back(0.0);
        b.push_back(1.0);
        for (std::size_t r = 0; r < n; ++r) b.push_back(ps.coord(r, j));
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    const double n_d = static_cast<double>(n);
    std::vector<std::size_t> cell(d, 0);
    double total = 0.0;
    for (;;) {
        double vol = 1.0, lin = 1.0, quad = 1.0;
        for (int j = 0; j < d; ++j) {
            const double lo = breaks[j][cell[j]];
            const double hi = breaks[j][cell[j] + 1];
            vol *= hi - lo;
            lin *= (hi * hi - lo * lo) / 2.0;
            quad *= (hi * hi * hi - lo * lo * lo) / 3.0;
        }
        // Counting function on the open cell: points with every coordinate
        // at or below the cell's lower corner.
        std::size_t count = 0;
        for (std::size_t r = 0; r < n; ++r) {
            bool inside = true;
            for (int j = 0; j < d; ++j) {
                if (ps.coord(r, j) > breaks[j][cell[j]]) {
                    inside = false;
                    break;
                }
            }
            count += inside;
        }
        const double frac = static_cast<double>(count) / n_d;
        total += frac * frac * vol - 2.0 * frac * lin + quad;

        int axis = 0;
        while (axis < d && cell[axis] + 2 >= breaks[axis].size()) {
            cell[axis] = 0;
            ++axis;
        }
        if (axis == d) break;
        ++cell[axis];
    }
    return total;
}

double q_integral_per_region(const PartitionSpec& spec, const PartitionIndex& i,
                             std::optional<SubsetMask> covered_axes) {
    validate_index(spec, i);
    const int d = spec.dim;
    const double md = static_cast<double>(spec.boxes_per_axis);
    if (!covered_axes) {
        return pow_int(0.5 / md, d) - pow_int(1.0 / (3.0 * md), d);
    }
    const SubsetMask u = *covered_axes;
    if (u.empty() || !u.within_dim(d) || u.count() >= d) {
        throw ParameterError("covered axes must form a nonempty strict subset of the axes");
    }
    const int t = d - u.count();
    double value = pow_int(0.5 / md, t) - pow_int(1.0 / (3.0 * md), t);
    for (int j = 0; j < d; ++j) {
        if (u.contains_axis(j + 1)) {
            value *= static_cast<double>(spec.boxes_per_axis - i.comps[j]) / md;
        }
    }
    return value;
}

EstimateWithCI mc_expected_discrepancy(const PartitionSpec& spec, const McTarget& target,
                                       std::int64_t replicates, std::uint64_t master_seed,
                                       std::int64_t budget) {
    if (replicates < 2) {
        throw ParameterError("need at least 2 replicates for a standard error, got " +
                             std::to_string(replicates));
    }
    if (target.kind == DiscrepancyKind::ProjectedL2) {
        if (target.subset.empty()) throw ParameterError("projected target requires a subset");
        if (!target.subset.within_dim(spec.dim)) {
            throw ParameterError("projected target subset uses axes beyond dimension " +
                                 std::to_string(spec.dim));
        }
    }
    const std::int64_t n = spec.box_count();
    if (n > budget / replicates) {
        throw ResourceLimitError("estimated cost " + std::to_string(n) + " x " +
                                 std::to_string(replicates) +
                                 " point evaluations exceeds budget " + std::to_string(budget));
    }

    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t r = 0; r < replicates; ++r) {
        const PointSet ps = jittered_sample(spec, SeedSpec{master_seed,
                                                           static_cast<std::uint64_t>(r)});
        double value = 0.0;
        switch (target.kind) {
            case DiscrepancyKind::L2:
                value = warnock_l2_squared(ps);
                break;
            case DiscrepancyKind::ProjectedL2:
                value = projected_l2_squared(ps, target.subset);
                break;
            case DiscrepancyKind::HickernellL2:
                value = hickernell_l2_squared(ps);
                break;
        }
        const double delta = value - mean;
        mean += delta / static_cast<double>(r + 1);
        m2 += delta * (value - mean);
    }
    const double variance = m2 / static_cast<double>(replicates - 1);
    return {mean, std::sqrt(variance / static_cast<double>(replicates)), replicates, master_seed};
}

}  // namespace jitterdisc
