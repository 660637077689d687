#pragma once

#include <cstddef>
#include <cstdint>

#include "mindenom/lattice.hpp"
#include "mindenom/rng.hpp"

namespace mindenom {

struct HaarSample {
    double x = 0;      // in [-1/2, 1/2]
    double y = 1;      // >= sqrt(3)/2, with x^2 + y^2 >= 1
    double theta = 0;  // in [0, 2 pi)
    LatticeD basis = LatticeD::standard(2);
    std::uint64_t proposals = 0;
};

/// Haar-random unimodular lattice in the plane, drawn through the modular fundamental domain.
HaarSample sample_x2(Stream& stream);

/// Half-open box [x0, x1) x [y0, y1).
struct Box {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    double area() const { return x1 > x0 && y1 > y0 ? (x1 - x0) * (y1 - y0) : 0.0; }
};

/// Number of nonzero lattice points in the box.
std::uint64_t count_in_box(const LatticeD& lattice, const Box& box);
/// Number of nonzero lattice points of Euclidean norm below radius.
std::uint64_t count_in_disk(const LatticeD& lattice, double radius);

/// Mean nonzero-point count in the box over n Haar lattices; sample i uses stream(seed, i).
double siegel_mean_count(std::uint64_t seed, const Box& region, std::size_t n_samples);

} // namespace mindenom
