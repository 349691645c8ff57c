#pragma once

#include "jitterdisc/sampler.hpp"

// Exact squared L2-type discrepancies of finite point sets. All functions
// are pure; the O(N^2 d) pair sum uses a fixed deterministic reduction order
// so repeated runs are bit-identical.

namespace jitterdisc {

enum class DiscrepancyKind { L2, ProjectedL2, HickernellL2 };

struct DiscrepancyValue {
    DiscrepancyKind kind;
    SubsetMask subset;  // meaningful for ProjectedL2 only
    double squared;
};

/// Squared anchored L2-discrepancy of an arbitrary point set, evaluated by
/// the closed-form pair sum (one product of d coordinate factors per point
/// pair). Coordinates must lie in [0,1].
double warnock_l2_squared(const PointSet& ps);

/// warnock_l2_squared of the projection onto the axes in `subset`.
double projected_l2_squared(const PointSet& ps, SubsetMask subset);

/// Sum of projected_l2_squared over all 2^d - 1 nonempty axis subsets,
/// enumerated in ascending bitmask order. Guarded to d <= 20.
double hickernell_l2_squared(const PointSet& ps);

}  // namespace jitterdisc
