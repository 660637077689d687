#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mindenom/experiments.hpp"
#include "mindenom/holonomy.hpp"

namespace mindenom {

/// Psi(h_s omega, delta) in the symmetric cone: the least a = t p over saddle connections
/// t (p, q) with p > 0 and |q - s p| < delta p. Throws EmptyConeError past max_real_part.
std::int64_t psi_horocycle(const SurfaceTracer& tracer, const Rational& s, const Rational& delta,
                           std::int64_t max_real_part = 100'000'000);

/// Psi(h_s omega, delta) in the printed cone y < delta x. When h_alpha lies in the Veech group every
/// residue of q modulo alpha p is admitted, so the value depends on neither s nor delta.
std::int64_t psi_printed(const SurfaceTracer& tracer, long alpha, std::int64_t max_real_part = 100'000'000);

/// sqrt(delta) Psi(h_s omega, delta) on the stratified grid s_i = alpha (i + u) / n, where the
/// offset u = k / 2^32 comes from stream(seed, 0).
std::vector<Sample> sc_samples(const Origami& o, long alpha, const Rational& delta, std::size_t n,
                               std::uint64_t seed, SurfaceCone cone);

struct ScExperiment {
    std::vector<Sample> lhs;        // at delta
    std::vector<Sample> rhs_proxy;  // at delta / 16
};

ScExperiment sc_experiment(const Origami& o, long alpha, const Rational& delta, std::size_t n, std::uint64_t seed,
                           SurfaceCone cone = SurfaceCone::Symmetric);

} // namespace mindenom
