#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "mindenom/matrix.hpp"
#include "mindenom/origami.hpp"

namespace mindenom {

struct Vec2 {
    double x = 0;
    double y = 0;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Holonomy vectors with multiplicity; complete for the max-norm ball of the given radius.
struct HolonomySet {
    std::vector<Vec2> vectors;
    double radius = 0;
    bool integral = true;  // vectors are integer pairs of an untransformed square-tiled surface

    /// Vectors sorted, for multiset comparison.
    std::vector<Vec2> sorted() const;
};

struct SaddleConnection {
    std::int64_t a = 0, b = 0;  // holonomy
    int start_cone = 0, end_cone = 0;
    int start_square = 0;       // square containing the initial segment
    int start_corner_x = 0, start_corner_y = 0;  // launch corner of that square, in {0, 1}
};

/// Straight-line flow on an origami in primitive integer directions.
class SurfaceTracer {
public:
    explicit SurfaceTracer(const Origami& o);

    /// Saddle connections in direction (p, q), one per outgoing ray, up to max_steps vertex-to-vertex segments.
    std::vector<SaddleConnection> trace(std::int64_t p, std::int64_t q,
                                        std::int64_t max_steps = std::numeric_limits<std::int64_t>::max()) const;
    std::int64_t shortest_multiple(std::int64_t p, std::int64_t q) const;

private:
    struct Step {
        int square;  // square containing the segment
        int corner_x, corner_y;
        int next;    // lower-left sheet of the vertex reached
    };
    Step step(int j, std::int64_t p, std::int64_t q) const;
    template <class Visit>
    void trace_rays(std::int64_t p, std::int64_t q, std::int64_t max_steps, Visit visit) const;

    std::vector<int> h_, v_, hi_, vi_;
    std::vector<int> labels_;
};

/// Saddle connections in the primitive direction (p, q), one per outgoing ray.
std::vector<SaddleConnection> trace_direction(const Origami& o, std::int64_t p, std::int64_t q);
/// Length multiplier of the shortest saddle connection in the primitive direction (p, q).
std::int64_t shortest_multiple(const Origami& o, std::int64_t p, std::int64_t q);

/// All saddle connections with max-norm holonomy at most radius.
std::vector<SaddleConnection> saddle_connections(const Origami& o, std::int64_t radius);
HolonomySet enumerate_holonomies(const Origami& o, std::int64_t radius);
/// Primitive integer vectors of max-norm at most radius.
HolonomySet torus_holonomies(std::int64_t radius);

/// A applied to every vector; the certified radius shrinks by the max-norm operator norm of A^-1.
HolonomySet act_matrix(const MatrixD& a, const HolonomySet& h);

enum class SurfaceCone {
    Printed,   // x > 0 and y < delta x
    Symmetric  // x > 0 and |y| < delta x
};

struct PsiValue {
    double value = 0;
    Vec2 witness;
    bool certified = false;  // no vector outside the enumerated ball can beat the value
};

/// Minimal real part of a holonomy vector in the cone; throws EmptyConeError if none is listed.
PsiValue psi(const HolonomySet& h, double delta, SurfaceCone cone);

} // namespace mindenom
