#pragma once

#include <cstdint>
#include <optional>

#include "jitterdisc/expectation.hpp"

// Independent verification paths for the closed forms: per-box analytic
// summation, the pre-collapsed binomial sum, an analytic cell-decomposition
// evaluation of L2^2 for small point sets, per-region integrals of the
// variance density q(1-q), and Monte Carlo estimation with standard errors.

namespace jitterdisc {

/// Monte Carlo estimate of an expected squared discrepancy.
/// std_error is the sample standard deviation divided by sqrt(replicates).
struct EstimateWithCI {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t replicates = 0;
    std::uint64_t master_seed = 0;
};

/// Which quantity mc_expected_discrepancy estimates.
struct McTarget {
    DiscrepancyKind kind = DiscrepancyKind::L2;
    SubsetMask subset;  // required for ProjectedL2
};

/// Default cap on sampled points (box count x replicates) per MC run.
inline constexpr std::int64_t kDefaultMcBudget = 1'000'000'000;

enum class BoxSumPath {
    Auto,               // direct when the box count allows it, else collapsed
    DirectEnumeration,  // sum per-box integrals over every box (m^d <= 10^6)
    CollapsedSum,       // index-sum identity collapsed to a k-indexed sum (d <= 12)
};

/// E[L2^2] by summing the closed-form per-box, per-region integrals of
/// q(1-q); an independent route to the same value as expected_l2_squared.
double expected_l2_squared_by_box_sum(std::int64_t m, int d,
                                      BoxSumPath path = BoxSumPath::Auto);

/// The pre-collapsed binomial form
/// m^{-2d} sum_k binom(d,k) ((m-1)/2)^k [(1/2)^{d-k} - (1/3)^{d-k}].
double expected_l2_squared_binomial_sum(std::int64_t m, int d);

/// Exact L2^2 by decomposing [0,1]^d into cells on which the counting
/// function is constant and integrating (c/N - prod x_j)^2 per cell in
/// closed form. Independent of the pair-sum route. N <= 8, d <= 3.
double l2_squared_by_cell_decomposition(const PointSet& ps);

/// Closed-form integral of q(1-q) over one region of box i:
/// covered_axes == nullopt   -> over the box itself, (3^d - 2^d)/(6m)^d;
/// covered_axes == u         -> over the region cut outside u,
///   ((3^{d-|u|} - 2^{d-|u|})/(6m)^{d-|u|}) prod_{j in u} (1 - i_j/m),
/// with u a nonempty strict subset of the axes.
double q_integral_per_region(const PartitionSpec& spec, const PartitionIndex& i,
                             std::optional<SubsetMask> covered_axes);

/// Mean and standard error of the squared discrepancy of `replicates`
/// independent jittered samples (replicate indices 0..R-1). Deterministic
/// for fixed inputs; replicate values are folded with a streaming
/// mean/variance recurrence in replicate order.
EstimateWithCI mc_expected_discrepancy(const PartitionSpec& spec, const McTarget& target,
                                       std::int64_t replicates, std::uint64_t master_seed,
                                       std::int64_t budget = kDefaultMcBudget);

}  // namespace jitterdisc
