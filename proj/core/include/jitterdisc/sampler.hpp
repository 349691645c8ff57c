#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "jitterdisc/partition.hpp"

// Jittered and plain Monte Carlo point sets with replicable randomness.
// Point sets are immutable after creation and safe to share across threads;
// distinct replicate indices give independent streams, so replicates may be
// generated concurrently.

namespace jitterdisc {

/// Identifies one random stream: the pair maps injectively to the draws.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;
};

/// Ordered list of points in [0,1]^d, stored row-major.
class PointSet {
public:
    PointSet(int dim, std::vector<double> coords);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return count_; }

    double coord(std::size_t point, int axis) const noexcept {
        return coords_[point * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(axis)];
    }
    std::span<const double> point(std::size_t rank) const noexcept {
        return {coords_.data() + rank * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }
    std::span<const double> coords() const noexcept { return coords_; }

private:
    int dim_;
    std::size_t count_;
    std::vector<double> coords_;
};

/// One point uniform in each box of the partition, in box-rank order.
/// Coordinate j of the point in box rank r consumes exactly the draw keyed
/// by (master_seed, replicate_index, r, j).
PointSet jittered_sample(const PartitionSpec& spec, const SeedSpec& seed);

/// count i.i.d. uniform points in [0,1)^dim.
PointSet uniform_sample(std::int64_t count, int dim, const SeedSpec& seed);

/// Keep only the coordinates whose axes are in `subset`, ascending axis
/// order; all points are retained even when projections coincide.
PointSet project(const PointSet& ps, SubsetMask subset);

/// Plain-text point-set format: header line `# d=<d> n=<N> seed=<seed>`,
/// then one point per line with round-trip-exact decimal coordinates.
void write_point_set(std::ostream& out, const PointSet& ps, std::uint64_t seed);
void write_point_set(const std::filesystem::path& path, const PointSet& ps, std::uint64_t seed);
PointSet read_point_set(std::istream& in);
PointSet read_point_set(const std::filesystem::path& path);

}  // namespace jitterdisc
