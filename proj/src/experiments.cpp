#include "mindenom/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mindenom/cone_search.hpp"
#include "mindenom/haar.hpp"
#include "mindenom/minimal_denominator.hpp"
#include "mindenom/parallel.hpp"
#include "mindenom/rng.hpp"

namespace mindenom {

namespace {

void require_unit_delta(const Rational& delta) {
    if (!(delta.sign() > 0 && delta < Rational(1))) throw std::invalid_argument("delta must lie in (0, 1)");
}

void require_count(std::size_t n) {
    if (n == 0) throw std::invalid_argument("sample count must be >= 1");
}

ConeSpec<double> unit_cone() {
    ConeSpec<double> c;
    c.n = 1;
    c.m = 1;
    c.delta = 1.0;
    c.side = ConeSide::OneSided;
    return c;
}

std::string dyadic_input(const std::vector<std::uint64_t>& ks) {
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ';';
        s += format_double(static_cast<double>(ks[i]) * 0x1.0p-53);
    }
    return s;
}

std::vector<Sample> generate(std::size_t n, const std::function<Sample(std::size_t)>& one) {
    std::vector<Sample> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = one(i); });
    return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// delta^{m/(m+n)}, with the square root taken exactly when the exponent is 1/2
double normalization(std::size_t m, std::size_t n_dim, const Rational& delta) {
    if (m == n_dim) return std::sqrt(delta.to_double());
    return std::pow(delta.to_double(), static_cast<double>(m) / static_cast<double>(m + n_dim));
}

} // namespace

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("empirical CDF needs at least one sample");
    for (double v : sorted_)
        if (std::isnan(v)) throw std::invalid_argument("empirical CDF sample is NaN");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::eval(double t) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<double> default_grid() {
    std::vector<double> g(512);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = 0.01 * std::pow(1000.0, static_cast<double>(k) / 511.0);
    g.front() = 0.01;
    g.back() = 10.0;
    return g;
}

ChenHaynesEstimate estimate_on_grid(const EmpiricalCDF& cdf, double delta, std::uint64_t seed,
                                    const std::vector<double>& grid) {
    ChenHaynesEstimate e;
    e.grid = grid;
    e.xi_hat.reserve(grid.size());
    for (double t : grid) e.xi_hat.push_back(cdf.eval(t));
    e.delta = delta;
    e.n = cdf.size();
    e.seed = seed;
    return e;
}

double ks_distance(const EmpiricalCDF& a, const EmpiricalCDF& b) {
    const auto& x = a.sorted();
    const auto& y = b.sorted();
    const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double best = 0;
    while (i < x.size() || j < y.size()) {
        double t;
        if (j == y.size() || (i < x.size() && x[i] <= y[j])) {
            t = x[i];
        } else {
            t = y[j];
        }
        while (i < x.size() && x[i] <= t) ++i;
        while (j < y.size() && y[j] <= t) ++j;
        best = std::max(best, std::fabs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return best;
}

double mean_estimate(const EmpiricalCDF& cdf) {
    long double s = 0;
    for (double v : cdf.sorted()) s += v;
    return static_cast<double>(s / static_cast<long double>(cdf.size()));
}

double layer_cake_mean(const EmpiricalCDF& cdf) {
    const auto& s = cdf.sorted();
    if (s.front() < 0) throw std::invalid_argument("layer-cake mean needs nonnegative samples");
    const long double n = static_cast<long double>(s.size());
    // 1 - CDF is constant between consecutive order statistics
    long double area = s.front();
    for (std::size_t k = 1; k < s.size(); ++k)
        area += (static_cast<long double>(s[k]) - s[k - 1]) * (1.0L - static_cast<long double>(k) / n);
    return static_cast<double>(area);
}

std::vector<double> statistics(const std::vector<Sample>& samples) {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto& s : samples) v.push_back(s.statistic);
    return v;
}

std::vector<Sample> lhs_qmin_samples(const Rational& delta, std::size_t n, std::uint64_t seed) {
    require_unit_delta(delta);
    require_count(n);
    const double scale = normalization(1, 1, delta);
    return generate(n, [&](std::size_t i) {
        Stream stream(seed, i);
        const std::uint64_t k = stream.next_bits53();
        const FractionHit hit = qmin(Rational::dyadic(k, 53), delta);
        return Sample{dyadic_input({k}), scale * hit.q.get_d()};
    });
}

std::vector<Sample> rhs_haar_samples(std::size_t n, std::uint64_t seed) {
    require_count(n);
    const ConeSpec<double> cone = unit_cone();
    return generate(n, [&](std::size_t i) {
        Stream stream(seed, i);
        const HaarSample h = sample_x2(stream);
        const auto hit = f_cone(h.basis, cone, 1e6);
        return Sample{format_double(h.x) + ";" + format_double(h.y) + ";" + format_double(h.theta), hit.unorm};
    });
}

std::vector<Sample> rhs_haar_primitive_samples(std::size_t n, std::uint64_t seed) {
    require_count(n);
    const ConeSpec<double> cone = unit_cone();
    return generate(n, [&](std::size_t i) {
        Stream stream(seed, i);
        const HaarSample h = sample_x2(stream);
        const auto hit = f_cone(h.basis, cone, 1e6);
        // a cone minimizer is primitive: dividing it by its content stays in the cone with smaller |u|
        if (gcd64(hit.coords[0], hit.coords[1]) != 1) throw std::logic_error("cone minimizer is not primitive");
        return Sample{format_double(h.x) + ";" + format_double(h.y) + ";" + format_double(h.theta), hit.unorm};
    });
}

std::vector<Sample> horocycle_orbit_samples(double delta, std::size_t n) {
    if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("delta must lie in (0, 1]");
    require_count(n);
    const ConeSpec<double> cone = unit_cone();
    const MatrixD g = geodesic_2(std::log(delta));
    return generate(n, [&](std::size_t i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const LatticeD lattice(g * horocycle_2(x));
        return Sample{format_double(x), f_cone(lattice, cone, 1e6).unorm};
    });
}

ExperimentCaps default_caps(std::size_t m, std::size_t n_dim, const Rational& delta) {
    const double typical = std::pow(delta.to_double(), -static_cast<double>(m) / static_cast<double>(m + n_dim));
    ExperimentCaps caps;
    caps.max_q = static_cast<std::uint64_t>(std::max(1e4, 1000.0 * typical));
    caps.max_shell = static_cast<std::int64_t>(std::max(1e3, (n_dim == 1 ? 1000.0 : 200.0) * typical));
    return caps;
}

std::vector<Sample> lhs_qm_samples(std::size_t m, const Rational& delta, std::size_t n, std::uint64_t seed,
                                   std::uint64_t max_q) {
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    require_unit_delta(delta);
    require_count(n);
    const double scale = normalization(m, 1, delta);
    const QmOptions options{max_q > 0 ? max_q : default_caps(m, 1, delta).max_q};
    return generate(n, [&](std::size_t i) {
        Stream stream(seed, i);
        std::vector<std::uint64_t> ks(m);
        RationalVector x;
        for (auto& k : ks) {
            k = stream.next_bits53();
            x.push_back(Rational::dyadic(k, 53));
        }
        return Sample{dyadic_input(ks), scale * static_cast<double>(q_m(x, delta, options))};
    });
}

std::vector<Sample> lhs_qmn_samples(std::size_t m, std::size_t n_dim, const Rational& delta, std::size_t n,
                                    std::uint64_t seed, std::int64_t max_shell) {
    if (m == 0 || n_dim == 0) throw std::invalid_argument("m and n must be >= 1");
    require_unit_delta(delta);
    require_count(n);
    const double scale = normalization(m, n_dim, delta);
    const QmnOptions options{max_shell > 0 ? max_shell : default_caps(m, n_dim, delta).max_shell};
    return generate(n, [&](std::size_t i) {
        Stream stream(seed, i);
        std::vector<std::uint64_t> ks(m * n_dim);
        std::vector<Rational> entries;
        for (auto& k : ks) {
            k = stream.next_bits53();
            entries.push_back(Rational::dyadic(k, 53));
        }
        const RationalMatrix x(m, n_dim, entries);
        if (n_dim == 1) return Sample{dyadic_input(ks), scale * static_cast<double>(q_mn(x, delta, options).qnorm)};
        // a shell of radius r holds about r^n vectors; the exact cone search returns the same value at any scale
        ConeSpec<Rational> cone;
        cone.n = n_dim;
        cone.m = m;
        cone.delta = delta;
        const auto hit = f_cone_exact(LatticeQ(horocycle_mn_exact(x)), cone, static_cast<double>(options.max_shell));
        return Sample{dyadic_input(ks), scale * hit.unorm.to_double()};
    });
}

EmpiricalCDF lhs_qmin_cdf(const Rational& delta, std::size_t n, std::uint64_t seed) {
    return EmpiricalCDF(statistics(lhs_qmin_samples(delta, n, seed)));
}

EmpiricalCDF rhs_haar_cdf(std::size_t n, std::uint64_t seed) {
    return EmpiricalCDF(statistics(rhs_haar_samples(n, seed)));
}

EmpiricalCDF horocycle_orbit_cdf(double delta, std::size_t n) {
    return EmpiricalCDF(statistics(horocycle_orbit_samples(delta, n)));
}

EmpiricalCDF lhs_qm_cdf(std::size_t m, const Rational& delta, std::size_t n, std::uint64_t seed) {
    return EmpiricalCDF(statistics(lhs_qm_samples(m, delta, n, seed)));
}

EmpiricalCDF lhs_qmn_cdf(std::size_t m, std::size_t n_dim, const Rational& delta, std::size_t n, std::uint64_t seed) {
    return EmpiricalCDF(statistics(lhs_qmn_samples(m, n_dim, delta, n, seed)));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace mindenom
