#pragma once

#include <cstdint>
#include <optional>

#include "jitterdisc/discrepancy.hpp"

// Closed-form expected squared discrepancies of jittered samples, and the
// asymptotic order of the root-mean-squared discrepancy in the point count.
// All evaluators accept m >= 1; the m = 1 case degenerates to a single
// uniform point and is covered by the same formulas.

namespace jitterdisc {

/// E[L2^2] of a jittered sample with m^d points.
/// Evaluated as m^{-2d} (a - b) * sum_k a^k b^{d-1-k} with a = m/2 and
/// b = (3m-1)/6, with the m^{-2d} scale folded into each factor so no
/// intermediate leaves the double range for any (m, d).
double expected_l2_squared(std::int64_t m, int d);

/// The d = 2 specialization (6m - 1) / (36 m^4).
double expected_l2_squared_d2(std::int64_t m);

/// E[L2^2] of the projection of a jittered sample onto the axes in `subset`;
/// depends on the subset only through its cardinality.
double expected_projected_l2_squared(std::int64_t m, int d, SubsetMask subset);

/// E[D^2] for the Hickernell L2-discrepancy: sum over projection orders
/// j = 1..d of binom(d, j) m^{-(d+j)} [a^j - b^j].
double expected_hickernell_squared(std::int64_t m, int d);

/// Explicit lower bound m^{-2d} (d/6) ((m-1)/2)^{d-1} for E[L2^2] (m >= 2),
/// and the exponent of the root-mean-squared decay E[L2] = Theta(N^e),
/// e = -(1/2 + 1/(2d)), as a function of N = m^d.
struct AsymptoticEnvelope {
    double lower_bound;
    double order_exponent;
};
AsymptoticEnvelope asymptotic_envelope_l2(std::int64_t m, int d);

/// A closed-form value together with the parameters that produced it.
struct ExpectationResult {
    std::int64_t m = 1;
    int d = 1;
    DiscrepancyKind kind = DiscrepancyKind::L2;
    std::optional<SubsetMask> subset;  // set for ProjectedL2
    double value = 0.0;
};

ExpectationResult evaluate_expectation(std::int64_t m, int d, DiscrepancyKind kind,
                                       std::optional<SubsetMask> subset = std::nullopt);

}  // namespace jitterdisc
