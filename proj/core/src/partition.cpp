#include "jitterdisc/partition.hpp"

#include <algorithm>
#include <string>

namespace jitterdisc {

namespace {

constexpr std::int64_t kMaxBoxCount = std::int64_t{1} << 53;

std::int64_t checked_box_count(std::int64_t m, int d) {
    std::int64_t n = 1;
    for (int j = 0; j < d; ++j) {
        if (n > kMaxBoxCount / m) {
            throw ParameterError("box count m^d exceeds 2^53 (m=" + std::to_string(m) +
                                 ", d=" + std::to_string(d) + ")");
        }
        n *= m;
    }
    return n;
}

}  // namespace

PartitionSpec::PartitionSpec(std::int64_t m, int d) : boxes_per_axis(m), dim(d) {
    if (m < 1) throw ParameterError("boxes per axis must be >= 1, got " + std::to_string(m));
    if (d < 1) throw ParameterError("dimension must be >= 1, got " + std::to_string(d));
    checked_box_count(m, d);
}

std::int64_t PartitionSpec::box_count() const noexcept {
    std::int64_t n = 1;
    for (int j = 0; j < dim; ++j) n *= boxes_per_axis;
    return n;
}

SubsetMask SubsetMask::from_axes(std::span<const int> axes_one_based) {
    std::uint32_t bits = 0;
    for (int axis : axes_one_based) {
        if (axis < 1 || axis > 32) {
            throw ParameterError("axis " + std::to_string(axis) + " outside [1, 32]");
        }
        const std::uint32_t bit = 1u << (axis - 1);
        if (bits & bit) throw ParameterError("duplicate axis " + std::to_string(axis));
        bits |= bit;
    }
    return SubsetMask(bits);
}

std::vector<int> SubsetMask::axes() const {
    std::vector<int> out;
    for (int j = 0; j < 32; ++j) {
        if ((bits_ >> j) & 1u) out.push_back(j + 1);
    }
    return out;
}

void validate_index(const PartitionSpec& spec, const PartitionIndex& i) {
    if (static_cast<int>(i.comps.size()) != spec.dim) {
        throw ParameterError("index has " + std::to_string(i.comps.size()) +
                             " components, expected " + std::to_string(spec.dim));
    }
    for (std::int64_t c : i.comps) {
        if (c < 1 || c > spec.boxes_per_axis) {
            throw ParameterError("index component " + std::to_string(c) +
                                 " outside {1, ..., " + std::to_string(spec.boxes_per_axis) + "}");
        }
    }
}

Box box_bounds(const PartitionSpec& spec, const PartitionIndex& i) {
    validate_index(spec, i);
    const double m = static_cast<double>(spec.boxes_per_axis);
    Box box;
    box.lower.resize(spec.dim);
    box.upper.resize(spec.dim);
    for (int j = 0; j < spec.dim; ++j) {
        box.lower[j] = static_cast<double>(i.comps[j] - 1) / m;
        box.upper[j] = static_cast<double>(i.comps[j]) / m;
    }
    return box;
}

std::int64_t rank_of(const PartitionSpec& spec, const PartitionIndex& i) {
    validate_index(spec, i);
    std::int64_t rank = 0;
    for (int j = spec.dim - 1; j >= 0; --j) {
        rank = rank * spec.boxes_per_axis + (i.comps[j] - 1);
    }
    return rank;
}

PartitionIndex index_from_rank(const PartitionSpec& spec, std::int64_t rank) {
    if (rank < 0 || rank >= spec.box_count()) {
        throw ParameterError("box rank " + std::to_string(rank) + " outside [0, " +
                             std::to_string(spec.box_count()) + ")");
    }
    PartitionIndex i;
    i.comps.resize(spec.dim);
    for (int j = 0; j < spec.dim; ++j) {
        i.comps[j] = rank % spec.boxes_per_axis + 1;
        rank /= spec.boxes_per_axis;
    }
    return i;
}

bool next_index(const PartitionSpec& spec, PartitionIndex& i) {
    for (int j = 0; j < spec.dim; ++j) {
        if (i.comps[j] < spec.boxes_per_axis) {
            ++i.comps[j];
            return true;
        }
        i.comps[j] = 1;
    }
    return false;
}

double box_coverage(const PartitionSpec& spec, const PartitionIndex& i,
                    std::span<const double> x) {
    validate_index(spec, i);
    if (static_cast<int>(x.size()) != spec.dim) {
        throw ParameterError("point has " + std::to_string(x.size()) +
                             " coordinates, expected " + std::to_string(spec.dim));
    }
    const double m = static_cast<double>(spec.boxes_per_axis);
    double q = 1.0;
    for (int j = 0; j < spec.dim; ++j) {
        const double overlap = m * x[j] - static_cast<double>(i.comps[j] - 1);
        q *= std::clamp(overlap, 0.0, 1.0);
    }
    return q;
}

RegionClass classify_anchor(const PartitionSpec& spec, const PartitionIndex& i,
                            std::span<const double> x) {
    validate_index(spec, i);
    if (static_cast<int>(x.size()) != spec.dim) {
        throw ParameterError("point has " + std::to_string(x.size()) +
                             " coordinates, expected " + std::to_string(spec.dim));
    }
    const double m = static_cast<double>(spec.boxes_per_axis);
    std::uint32_t covered = 0;
    int covered_count = 0;
    for (int j = 0; j < spec.dim; ++j) {
        const double lower = static_cast<double>(i.comps[j] - 1) / m;
        const double upper = static_cast<double>(i.comps[j]) / m;
        if (x[j] <= lower) return {RegionKind::Empty, SubsetMask{}};
        if (x[j] >= upper) {
            covered |= 1u << j;
            ++covered_count;
        }
    }
    if (covered_count == spec.dim) return {RegionKind::Covered, SubsetMask{}};
    if (covered_count == 0) return {RegionKind::Interior, SubsetMask{}};
    return {RegionKind::Partial, SubsetMask(covered)};
}

}  // namespace jitterdisc
