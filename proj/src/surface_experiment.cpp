#include "mindenom/surface_experiment.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mindenom/errors.hpp"
#include "mindenom/parallel.hpp"
#include "mindenom/rng.hpp"

namespace mindenom {

namespace {

using i128 = __int128;

i128 mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("psi: integer overflow");
    return r;
}

i128 add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("psi: integer overflow");
    return r;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 to_i128(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("psi: rational parameter too large");
    return static_cast<i128>(v.get_si());
}

} // namespace

std::int64_t psi_horocycle(const SurfaceTracer& tracer, const Rational& s, const Rational& delta,
                           std::int64_t max_real_part) {
    if (delta.sign() <= 0) throw std::invalid_argument("psi requires delta > 0");
    const i128 sn = to_i128(s.numerator()), sd = to_i128(s.denominator());
    const i128 dn = to_i128(delta.numerator()), dd = to_i128(delta.denominator());
    const i128 a = mul(sd, dd);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t p = 1; p < best; ++p) {
        if (p > max_real_part) throw EmptyConeError("psi: no saddle connection with real part up to " + std::to_string(max_real_part));
        // |q sd dd - p sn dd| < p dn sd
        const i128 centre = mul(mul(p, sn), dd);
        const i128 width = mul(mul(p, dn), sd);
        const i128 qlo = floor_div(add(centre, -width), a) + 1;
        const i128 qhi = -floor_div(-add(centre, width), a) - 1;
        for (i128 q = qlo; q <= qhi; ++q) {
            const auto qq = static_cast<std::int64_t>(q);
            if (std::gcd(p, qq) != 1) continue;
            const std::int64_t k = tracer.shortest_multiple(p, qq);
            if (k <= (best - 1) / p) best = p * k;
        }
    }
    return best;
}

std::int64_t psi_printed(const SurfaceTracer& tracer, long alpha, std::int64_t max_real_part) {
    if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t p = 1; p < best; ++p) {
        if (p > max_real_part) throw EmptyConeError("psi: no saddle connection with real part up to " + std::to_string(max_real_part));
        for (std::int64_t q = 0; q < alpha * p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const std::int64_t k = tracer.shortest_multiple(p, q);
            if (k <= (best - 1) / p) best = p * k;
        }
    }
    return best;
}

std::vector<Sample> sc_samples(const Origami& o, long alpha, const Rational& delta, std::size_t n,
                               std::uint64_t seed, SurfaceCone cone) {
    if (n == 0) throw std::invalid_argument("sample count must be >= 1");
    if (!(delta.sign() > 0 && delta < Rational(1))) throw std::invalid_argument("delta must lie in (0, 1)");
    if (!veech_h_alpha_check(o, alpha)) throw std::invalid_argument("h_alpha is not in the Veech group of the origami");
    const SurfaceTracer tracer(o);
    const double scale = std::sqrt(delta.to_double());
    Stream offset_stream(seed, 0);
    const long offset = static_cast<long>(offset_stream.next_u32());
    const Integer denom = Integer(static_cast<unsigned long>(n)) * Integer(4294967296UL);
    std::vector<Sample> out(n);
    if (cone == SurfaceCone::Printed) {
        const double value = scale * static_cast<double>(psi_printed(tracer, alpha));
        for (std::size_t i = 0; i < n; ++i) {
            const Rational s(Integer(alpha) * (Integer(static_cast<unsigned long>(i)) * Integer(4294967296UL) + offset), denom);
            out[i] = {format_double(s.to_double()), value};
        }
        return out;
    }
    parallel_for(n, [&](std::size_t i) {
        const Rational s(Integer(alpha) * (Integer(static_cast<unsigned long>(i)) * Integer(4294967296UL) + offset), denom);
        out[i] = {format_double(s.to_double()), scale * static_cast<double>(psi_horocycle(tracer, s, delta))};
    });
    return out;
}

ScExperiment sc_experiment(const Origami& o, long alpha, const Rational& delta, std::size_t n, std::uint64_t seed,
                           SurfaceCone cone) {
    return {sc_samples(o, alpha, delta, n, seed, cone), sc_samples(o, alpha, delta / Rational(16), n, seed, cone)};
}

} // namespace mindenom
