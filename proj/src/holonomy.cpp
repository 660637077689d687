#include "mindenom/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mindenom/errors.hpp"

namespace mindenom {

namespace {

void require_primitive(std::int64_t p, std::int64_t q) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("direction must be a primitive integer vector");
}

} // namespace

SurfaceTracer::SurfaceTracer(const Origami& o)
    : h_(o.h().images()), v_(o.v().images()), hi_(o.h().inverse().images()), vi_(o.v().inverse().images()),
      labels_(o.corner_labels()) {}

SurfaceTracer::Step SurfaceTracer::step(int j, std::int64_t p, std::int64_t q) const {
    const auto& h = h_;
    const auto& v = v_;
    const int left = hi_[static_cast<std::size_t>(j)];
    const int down_left = vi_[static_cast<std::size_t>(left)];
    int s, cx, cy;
    if (p > 0 && q >= 0) {
        s = j, cx = 0, cy = 0;
        if (q == 0) return {s, cx, cy, h[s]};
    } else if (p <= 0 && q > 0) {
        s = left, cx = 1, cy = 0;
        if (p == 0) return {s, cx, cy, h[v[s]]};
    } else if (p < 0 && q <= 0) {
        s = down_left, cx = 1, cy = 1;
        if (q == 0) return {s, cx, cy, v[s]};
    } else {
        s = h[down_left], cx = 0, cy = 1;
        if (p == 0) return {s, cx, cy, s};
    }
    const int start = s;
    const auto& horizontal = p > 0 ? h_ : hi_;
    const auto& vertical = q > 0 ? v_ : vi_;
    const std::int64_t ap = std::llabs(p), aq = std::llabs(q);
    std::int64_t i = 1, k = 1;
    while (i < ap || k < aq) {
        // the i-th vertical line is crossed before the k-th horizontal one iff i/|p| < k/|q|
        if (k >= aq || (i < ap && i * aq < k * ap)) {
            s = horizontal[s];
            ++i;
        } else {
            s = vertical[s];
            ++k;
        }
    }
    int next;
    if (p > 0 && q > 0) {
        next = h[v[s]];
    } else if (p < 0 && q > 0) {
        next = v[s];
    } else if (p < 0) {
        next = s;
    } else {
        next = h[s];
    }
    return {start, cx, cy, next};
}

template <class Visit>
void SurfaceTracer::trace_rays(std::int64_t p, std::int64_t q, std::int64_t max_steps, Visit visit) const {
    require_primitive(p, q);
    const std::vector<int>& labels = labels_;
    const auto limit = static_cast<std::int64_t>(labels_.size());
    for (std::size_t j = 0; j < labels_.size(); ++j) {
        if (labels[j] < 0) continue;
        int cur = static_cast<int>(j);
        const Step first = step(cur, p, q);
        cur = first.next;
        std::int64_t t = 1;
        while (labels[static_cast<std::size_t>(cur)] < 0) {
            if (t >= limit) throw std::logic_error("ray did not reach a cone point");
            if (t >= max_steps) break;
            cur = step(cur, p, q).next;
            ++t;
        }
        if (labels[static_cast<std::size_t>(cur)] < 0) continue;
        SaddleConnection sc;
        sc.a = t * p;
        sc.b = t * q;
        sc.start_cone = labels[j];
        sc.end_cone = labels[static_cast<std::size_t>(cur)];
        sc.start_square = first.square;
        sc.start_corner_x = first.corner_x;
        sc.start_corner_y = first.corner_y;
        visit(sc);
    }
}

std::vector<Vec2> HolonomySet::sorted() const {
    std::vector<Vec2> v = vectors;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<SaddleConnection> SurfaceTracer::trace(std::int64_t p, std::int64_t q, std::int64_t max_steps) const {
    std::vector<SaddleConnection> out;
    trace_rays(p, q, max_steps, [&](const SaddleConnection& sc) { out.push_back(sc); });
    return out;
}

std::int64_t SurfaceTracer::shortest_multiple(std::int64_t p, std::int64_t q) const {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    trace_rays(p, q, std::numeric_limits<std::int64_t>::max(),
               [&](const SaddleConnection& sc) { best = std::min(best, p != 0 ? sc.a / p : sc.b / q); });
    return best;
}

std::vector<SaddleConnection> trace_direction(const Origami& o, std::int64_t p, std::int64_t q) {
    return SurfaceTracer(o).trace(p, q);
}

std::int64_t shortest_multiple(const Origami& o, std::int64_t p, std::int64_t q) {
    return SurfaceTracer(o).shortest_multiple(p, q);
}

std::vector<SaddleConnection> saddle_connections(const Origami& o, std::int64_t radius) {
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    const SurfaceTracer tracer(o);
    std::vector<SaddleConnection> out;
    for (std::int64_t p = -radius; p <= radius; ++p)
        for (std::int64_t q = -radius; q <= radius; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const std::int64_t norm = std::max(std::llabs(p), std::llabs(q));
            for (const auto& sc : tracer.trace(p, q, radius / norm)) out.push_back(sc);
        }
    return out;
}

HolonomySet enumerate_holonomies(const Origami& o, std::int64_t radius) {
    HolonomySet h;
    h.radius = static_cast<double>(radius);
    for (const auto& sc : saddle_connections(o, radius))
        h.vectors.push_back({static_cast<double>(sc.a), static_cast<double>(sc.b)});
    return h;
}

HolonomySet torus_holonomies(std::int64_t radius) {
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    HolonomySet h;
    h.radius = static_cast<double>(radius);
    for (std::int64_t p = -radius; p <= radius; ++p)
        for (std::int64_t q = -radius; q <= radius; ++q)
            if (std::gcd(p, q) == 1) h.vectors.push_back({static_cast<double>(p), static_cast<double>(q)});
    return h;
}

HolonomySet act_matrix(const MatrixD& a, const HolonomySet& h) {
    if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("act_matrix expects a 2 x 2 matrix");
    if (std::fabs(determinant(a) - 1.0) > 1e-9) throw std::invalid_argument("act_matrix expects determinant 1");
    // A^-1 = [[d, -b], [-c, a]]
    const double inv_norm = std::max(std::fabs(a(1, 1)) + std::fabs(a(0, 1)), std::fabs(a(1, 0)) + std::fabs(a(0, 0)));
    HolonomySet out;
    out.radius = h.radius / inv_norm;
    out.integral = h.integral && a == MatrixD::identity(2);
    for (const auto& v : h.vectors) {
        const Vec2 w{a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
        if (std::max(std::fabs(w.x), std::fabs(w.y)) <= out.radius) out.vectors.push_back(w);
    }
    return out;
}

PsiValue psi(const HolonomySet& h, double delta, SurfaceCone cone) {
    if (!(delta > 0)) throw std::invalid_argument("psi requires delta > 0");
    PsiValue best;
    bool found = false;
    for (const auto& v : h.vectors) {
        if (!(v.x > 0)) continue;
        const bool inside = cone == SurfaceCone::Symmetric ? std::fabs(v.y) < delta * v.x : v.y < delta * v.x;
        if (!inside) continue;
        if (!found || v.x < best.value || (v.x == best.value && v < best.witness)) {
            best.value = v.x;
            best.witness = v;
            found = true;
        }
    }
    if (!found) throw EmptyConeError("psi: no holonomy vector of the enumerated set lies in the cone");
    if (cone == SurfaceCone::Symmetric) {
        best.certified = std::max(1.0, delta) * best.value <= h.radius;
    } else {
        // real parts of an integral set are integers, so 1 cannot be beaten
        best.certified = h.integral && best.value <= 1.0;
    }
    return best;
}

} // namespace mindenom
