#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jitterdisc/errors.hpp"

// Geometry of the jittered partition of [0,1]^d: the grid of m^d congruent
// half-open boxes, the coverage ratio of a box by an anchored test region
// [0,x), and the classification of anchor points by how they cut a box.

namespace jitterdisc {

/// Grid parameters: m boxes per axis in d dimensions, m^d boxes total.
struct PartitionSpec {
    std::int64_t boxes_per_axis = 1;  // m
    int dim = 1;                      // d

    /// Validates m >= 1, d >= 1 and m^d <= 2^53.
    PartitionSpec(std::int64_t m, int d);

    std::int64_t box_count() const noexcept;
};

/// Position of one box in the grid; components are 1-based, in {1, ..., m}.
struct PartitionIndex {
    std::vector<std::int64_t> comps;
};

/// Subset of the axes {1, ..., d} as a bitmask; bit j-1 stands for axis j.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit constexpr SubsetMask(std::uint32_t bits) : bits_(bits) {}

    static SubsetMask full(int dim) {
        return SubsetMask((dim >= 32) ? ~0u : ((1u << dim) - 1u));
    }
    /// Build from 1-based axis numbers; duplicates and axes outside [1,32] are rejected.
    static SubsetMask from_axes(std::span<const int> axes_one_based);

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    int count() const noexcept { return __builtin_popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains_axis(int axis_one_based) const noexcept {
        return (bits_ >> (axis_one_based - 1)) & 1u;
    }
    constexpr bool within_dim(int dim) const noexcept {
        return dim >= 32 || (bits_ >> dim) == 0;
    }
    /// 1-based axis numbers in ascending order.
    std::vector<int> axes() const;

    friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Axis-aligned box, half-open along each axis: [lower_j, upper_j).
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;
};

/// How an anchor point x relates to one box of the partition.
enum class RegionKind : unsigned char {
    Empty,     // the box and [0,x) do not intersect
    Covered,   // the box lies entirely inside [0,x)
    Interior,  // x is inside the box itself (every axis partially cut)
    Partial,   // the box is cut along some axes and fully covered along the rest
};

struct RegionClass {
    RegionKind kind;
    SubsetMask covered_axes;  // meaningful only for Partial: nonempty strict subset
};

/// Throws ParameterError unless every component of i lies in {1, ..., m}
/// and the number of components equals d.
void validate_index(const PartitionSpec& spec, const PartitionIndex& i);

/// Bounds of box i: [(i_j - 1)/m, i_j/m) per axis.
Box box_bounds(const PartitionSpec& spec, const PartitionIndex& i);

/// Index <-> linear rank, row-major with coordinate 1 varying fastest.
std::int64_t rank_of(const PartitionSpec& spec, const PartitionIndex& i);
PartitionIndex index_from_rank(const PartitionSpec& spec, std::int64_t rank);

/// Advance to the next index in rank order; returns false after the last box.
bool next_index(const PartitionSpec& spec, PartitionIndex& i);

/// Fraction of box i covered by the anchored region [0,x), i.e.
/// |box ∩ [0,x)| * m^d. Branch-free product of per-axis clamped overlaps.
double box_coverage(const PartitionSpec& spec, const PartitionIndex& i,
                    std::span<const double> x);

/// Classify x against box i. Consistent with box_coverage: the coverage q
/// satisfies q(1-q) != 0 exactly for Interior and Partial anchors.
RegionClass classify_anchor(const PartitionSpec& spec, const PartitionIndex& i,
                            std::span<const double> x);

}  // namespace jitterdisc
