#include "mindenom/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "mindenom/cone_search.hpp"
#include "mindenom/parallel.hpp"

namespace mindenom {

namespace {

struct Reduced {
    double a1, b1, a2, b2, det;
};

Reduced reduce(const LatticeD& lattice) {
    const MatrixD red = mul_integer(lattice.matrix(), gauss_reduce(lattice.matrix()));
    return {red(0, 0), red(1, 0), red(0, 1), red(1, 1), red(0, 0) * red(1, 1) - red(1, 0) * red(0, 1)};
}

// Integers i with lo <= a*i + b < hi, intersected into [imin, imax].
bool restrict_range(double a, double b, double lo, double hi, double& imin, double& imax) {
    if (a > 0) {
        imin = std::max(imin, std::ceil((lo - b) / a));
        imax = std::min(imax, std::ceil((hi - b) / a) - 1);
    } else if (a < 0) {
        imax = std::min(imax, std::floor((lo - b) / a));
        imin = std::max(imin, std::floor((hi - b) / a) + 1);
    } else if (!(lo <= b && b < hi)) {
        return false;
    }
    return true;
}

template <class LineCount>
std::uint64_t sweep(const Reduced& r, double xmin, double xmax, double ymin, double ymax, LineCount line) {
    const double xs[4] = {xmin, xmax, xmin, xmax};
    const double ys[4] = {ymin, ymin, ymax, ymax};
    double jmin = std::numeric_limits<double>::infinity(), jmax = -jmin;
    for (int k = 0; k < 4; ++k) {
        const double j = (r.a1 * ys[k] - r.b1 * xs[k]) / r.det;
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
    }
    std::uint64_t total = 0;
    for (double j = std::floor(jmin) - 1; j <= std::ceil(jmax) + 1; j += 1) total += line(j);
    return total;
}

} // namespace

HaarSample sample_x2(Stream& stream) {
    HaarSample s;
    const double y_floor = std::sqrt(3.0) / 2;
    for (;;) {
        ++s.proposals;
        s.x = stream.uniform() - 0.5;
        s.y = y_floor / stream.uniform_open_left();
        if (s.x * s.x + s.y * s.y >= 1.0) break;
    }
    s.theta = 2 * std::numbers::pi * stream.uniform();
    const double sy = std::sqrt(s.y);
    s.basis = LatticeD(rotation_2(s.theta) * MatrixD(2, 2, {1 / sy, s.x / sy, 0.0, sy}));
    return s;
}

std::uint64_t count_in_box(const LatticeD& lattice, const Box& box) {
    if (box.area() == 0.0) return 0;
    const Reduced r = reduce(lattice);
    const std::uint64_t total = sweep(r, box.x0, box.x1, box.y0, box.y1, [&](double j) -> std::uint64_t {
        double imin = -std::numeric_limits<double>::infinity(), imax = -imin;
        if (!restrict_range(r.a1, j * r.a2, box.x0, box.x1, imin, imax)) return 0;
        if (!restrict_range(r.b1, j * r.b2, box.y0, box.y1, imin, imax)) return 0;
        return imax >= imin ? static_cast<std::uint64_t>(imax - imin + 1) : 0;
    });
    const bool has_origin = box.x0 <= 0 && 0 < box.x1 && box.y0 <= 0 && 0 < box.y1;
    return total - (has_origin ? 1 : 0);
}

std::uint64_t count_in_disk(const LatticeD& lattice, double radius) {
    if (!(radius > 0)) return 0;
    const Reduced r = reduce(lattice);
    const double aa = r.a1 * r.a1 + r.b1 * r.b1;
    const double ab = r.a1 * r.a2 + r.b1 * r.b2;
    const double bb = r.a2 * r.a2 + r.b2 * r.b2;
    const std::uint64_t total = sweep(r, -radius, radius, -radius, radius, [&](double j) -> std::uint64_t {
        // |i c1 + j c2|^2 < radius^2 as a quadratic in i
        const double b = 2 * j * ab;
        const double c = j * j * bb - radius * radius;
        const double disc = b * b - 4 * aa * c;
        if (disc <= 0) return 0;
        const double root = std::sqrt(disc);
        const double imin = std::floor((-b - root) / (2 * aa)) + 1;
        const double imax = std::ceil((-b + root) / (2 * aa)) - 1;
        return imax >= imin ? static_cast<std::uint64_t>(imax - imin + 1) : 0;
    });
    return total - 1;
}

double siegel_mean_count(std::uint64_t seed, const Box& region, std::size_t n_samples) {
    if (n_samples == 0) return 0.0;
    std::vector<std::uint64_t> counts(n_samples);
    parallel_for(n_samples, [&](std::size_t i) {
        Stream stream(seed, i);
        counts[i] = count_in_box(sample_x2(stream).basis, region);
    });
    long double sum = 0;
    for (auto c : counts) sum += c;
    return static_cast<double>(sum / n_samples);
}

} // namespace mindenom
