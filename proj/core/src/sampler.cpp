#include "jitterdisc/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "jitterdisc/rng.hpp"

namespace jitterdisc {

PointSet::PointSet(int dim, std::vector<double> coords)
    : dim_(dim), count_(0), coords_(std::move(coords)) {
    if (dim_ < 1) throw ParameterError("point set dimension must be >= 1");
    if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0) {
        throw ParameterError("coordinate buffer size " + std::to_string(coords_.size()) +
                             " is not a positive multiple of dim " + std::to_string(dim_));
    }
    count_ = coords_.size() / static_cast<std::size_t>(dim_);
}

PointSet jittered_sample(const PartitionSpec& spec, const SeedSpec& seed) {
    const std::int64_t n = spec.box_count();
    const double m = static_cast<double>(spec.boxes_per_axis);
    std::vector<double> coords;
    coords.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(spec.dim));

    PartitionIndex idx;
    idx.comps.assign(spec.dim, 1);
    std::size_t at = 0;
    for (std::int64_t r = 0; r < n; ++r) {
        for (int j = 0; j < spec.dim; ++j) {
            const double u = rng::uniform_draw(seed.master_seed, seed.replicate_index,
                                               static_cast<std::uint64_t>(r),
                                               static_cast<std::uint64_t>(j));
            const double lower = static_cast<double>(idx.comps[j] - 1) / m;
            const double upper = static_cast<double>(idx.comps[j]) / m;
            double x = (static_cast<double>(idx.comps[j] - 1) + u) / m;
            // The sum can round up onto the box's upper face for u near 1;
            // the boxes are half-open, so pull such a draw back inside.
            if (x >= upper) x = std::nextafter(upper, lower);
            coords[at++] = x;
        }
        next_index(spec, idx);
    }
    return PointSet(spec.dim, std::move(coords));
}

PointSet uniform_sample(std::int64_t count, int dim, const SeedSpec& seed) {
    if (count < 1) throw ParameterError("point count must be >= 1, got " + std::to_string(count));
    if (dim < 1) throw ParameterError("dimension must be >= 1, got " + std::to_string(dim));
    std::vector<double> coords;
    coords.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(dim));
    std::size_t at = 0;
    for (std::int64_t r = 0; r < count; ++r) {
        for (int j = 0; j < dim; ++j) {
            coords[at++] = rng::uniform_draw(seed.master_seed, seed.replicate_index,
                                             static_cast<std::uint64_t>(r),
                                             static_cast<std::uint64_t>(j));
        }
    }
    return PointSet(dim, std::move(coords));
}

PointSet project(const PointSet& ps, SubsetMask subset) {
    if (subset.empty()) throw ParameterError("projection subset must be nonempty");
    if (!subset.within_dim(ps.dim())) {
        throw ParameterError("projection subset uses axes beyond dimension " +
                             std::to_string(ps.dim()));
    }
    const std::vector<int> axes = subset.axes();
    std::vector<double> coords;
    coords.resize(ps.size() * axes.size());
    std::size_t at = 0;
    for (std::size_t r = 0; r < ps.size(); ++r) {
        for (int axis : axes) coords[at++] = ps.coord(r, axis - 1);
    }
    return PointSet(static_cast<int>(axes.size()), std::move(coords));
}

void write_point_set(std::ostream& out, const PointSet& ps, std::uint64_t seed) {
    out << "# d=" << ps.dim() << " n=" << ps.size() << " seed=" << seed << "\n";
    char buf[40];
    for (std::size_t r = 0; r < ps.size(); ++r) {
        for (int j = 0; j < ps.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", ps.coord(r, j));
            if (j > 0) out << ' ';
            out << buf;
        }
        out << "\n";
    }
}

void write_point_set(const std::filesystem::path& path, const PointSet& ps, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path.string() + " for writing");
    write_point_set(out, ps, seed);
    if (!out) throw ParameterError("write to " + path.string() + " failed");
}

PointSet read_point_set(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError("missing header line", line_no);

    int dim = 0;
    long long count = 0;
    unsigned long long seed = 0;
    if (std::sscanf(line.c_str(), "# d=%d n=%lld seed=%llu", &dim, &count, &seed) != 3) {
        throw ParseError("header must be '# d=<d> n=<N> seed=<seed>'", line_no);
    }
    if (dim < 1) throw ParseError("dimension must be >= 1", line_no);
    if (count < 1) throw ParseError("point count must be >= 1", line_no);

    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(dim));
    for (long long r = 0; r < count; ++r) {
        ++line_no;
        if (!std::getline(in, line)) throw ParseError("unexpected end of file", line_no);
        std::istringstream row(line);
        for (int j = 0; j < dim; ++j) {
            double v = 0.0;
            if (!(row >> v)) throw ParseError("expected " + std::to_string(dim) +
                                              " coordinates", line_no);
            if (!(v >= 0.0 && v <= 1.0) || std::isnan(v)) {
                throw ParseError("coordinate " + std::to_string(v) + " outside [0, 1]", line_no);
            }
            coords.push_back(v);
        }
        std::string extra;
        if (row >> extra) throw ParseError("trailing data '" + extra + "'", line_no);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty()) throw ParseError("trailing data after " + std::to_string(count) +
                                            " points", line_no);
    }
    return PointSet(dim, std::move(coords));
}

PointSet read_point_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path.string() + " for reading");
    return read_point_set(in);
}

}  // namespace jitterdisc
