#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "mindenom/cone_search.hpp"
#include "mindenom/experiments.hpp"
#include "mindenom/haar.hpp"
#include "mindenom/holonomy.hpp"
#include "mindenom/lattice.hpp"
#include "mindenom/minimal_denominator.hpp"
#include "mindenom/origami.hpp"
#include "mindenom/surface_experiment.hpp"

using namespace mindenom;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [FAIL]");
    }
};

struct Criterion {
    int id;
    const char* name;
    std::function<Result()> body;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T>
ConeSpec<T> cone(std::size_t n, std::size_t m, T delta, ConeSide side = ConeSide::TwoSided) {
    ConeSpec<T> c;
    c.n = n;
    c.m = m;
    c.delta = delta;
    c.side = side;
    return c;
}

MatrixD random_sl(std::size_t d, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> coef(-1.5, 1.5);
    std::uniform_int_distribution<std::size_t> idx(0, d - 1);
    MatrixD g = MatrixD::identity(d);
    for (std::size_t step = 0; step < 3 * d; ++step) {
        const std::size_t i = idx(gen);
        std::size_t j = idx(gen);
        if (i == j) j = (j + 1) % d;
        MatrixD e = MatrixD::identity(d);
        e(i, j) = coef(gen);
        g = e * g;
    }
    MatrixD diag = MatrixD::identity(d);
    double logsum = 0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double l = coef(gen);
        diag(i, i) = std::exp(l);
        logsum += l;
    }
    diag(d - 1, d - 1) = std::exp(-logsum);
    return diag * g;
}

Rational random_fraction(std::mt19937_64& gen, long max_den) {
    const long d = std::uniform_int_distribution<long>(1, max_den)(gen);
    return Rational(std::uniform_int_distribution<long>(0, d - 1)(gen), d);
}

Origami l_shape() { return Origami::parse("h=(1 2)(3)\nv=(1 3)(2)"); }
Origami four_a() { return Origami::parse("h=(1 2 3)\nv=(1 4)"); }
Origami four_b() { return Origami::parse("h=(1 2)(3 4)\nv=(2 3)"); }
Origami six() { return Origami::parse("h=(1 3 4 6)(2 5)\nv=(1 5 4)(2 6 3)"); }

MatrixD generator_matrix(Generator g) {
    switch (g) {
    case Generator::TUpper: return MatrixD(2, 2, {1.0, 1.0, 0.0, 1.0});
    case Generator::TLower: return MatrixD(2, 2, {1.0, 0.0, -1.0, 1.0});
    case Generator::S: return MatrixD(2, 2, {0.0, -1.0, 1.0, 0.0});
    }
    return MatrixD::identity(2);
}

const double reference_mean = 16.0 / (std::numbers::pi * std::numbers::pi);
const double mean_tolerance = 0.02;
const double ks_planar = 0.015;
const double ks_stabilization = 0.02;
const double ks_surface = 0.03;
const std::uint64_t seed_lhs = 20261016;
const std::uint64_t seed_rhs = 20261017;

std::size_t linear_forms_bridge(Result& r, std::mt19937_64& gen) {
    std::size_t mismatches = 0;
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> entries;
            for (std::size_t k = 0; k < m * n; ++k) entries.push_back(random_fraction(gen, 1000));
            const RationalMatrix x(m, n, entries);
            const Rational delta(1, std::uniform_int_distribution<long>(2, 200)(gen));
            const auto q = q_mn(x, delta);
            const auto hit = f_cone_exact(LatticeQ(horocycle_mn_exact(x)), cone<Rational>(n, m, delta));
            if (hit.unorm != Rational(static_cast<long>(q.qnorm))) ++mismatches;
        }
    }
    r.require(mismatches == 0, "linear forms vs cone minimum: " + std::to_string(mismatches) + "/300 mismatches");
    return mismatches;
}

Result qmin_mean() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const double mean = mean_estimate(lhs_qmin_cdf(Rational(1, 1'000'000), 200'000, seed_lhs));
    const double t = seconds_since(t0);
    r.require(std::fabs(mean - reference_mean) <= mean_tolerance,
              "mean " + fmt("%.5f", mean) + " vs " + fmt("%.5f", reference_mean) + " +- 0.02");
    r.require(t < 60, "runtime " + fmt("%.1f", t) + " s < 60 s");
    return r;
}

Result haar_mean() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    const double mean = mean_estimate(rhs_haar_cdf(200'000, seed_rhs));
    const double t = seconds_since(t0);
    r.require(std::fabs(mean - reference_mean) <= mean_tolerance,
              "mean " + fmt("%.5f", mean) + " vs " + fmt("%.5f", reference_mean) + " +- 0.02");
    r.require(t < 120, "runtime " + fmt("%.1f", t) + " s < 120 s");
    return r;
}

Result qmin_vs_haar() {
    Result r;
    const double ks = ks_distance(lhs_qmin_cdf(Rational(1, 1'000'000), 100'000, seed_lhs), rhs_haar_cdf(100'000, seed_rhs));
    r.require(ks <= ks_planar, "KS " + fmt("%.5f", ks) + " <= 0.015");
    return r;
}

Result horocycle_vs_haar() {
    Result r;
    const double ks = ks_distance(horocycle_orbit_cdf(1e-6, 100'000), rhs_haar_cdf(100'000, seed_rhs));
    r.require(ks <= ks_planar, "KS " + fmt("%.5f", ks) + " <= 0.015");
    return r;
}

Result exact_oracles() {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 gen(5);
    std::size_t brute = 0, bridge = 0;
    for (int i = 0; i < 1000; ++i) {
        const Rational x = random_fraction(gen, 1'000'000);
        const long d = std::uniform_int_distribution<long>(2, 10'000)(gen);
        const Rational delta(std::uniform_int_distribution<long>(1, std::max(1L, d / 4))(gen), d);
        if (!(qmin(x, delta) == qmin_bruteforce(x, delta))) ++brute;
    }
    for (int i = 0; i < 1000; ++i) {
        const Rational x = random_fraction(gen, 1'000'000);
        const Rational delta(1, std::uniform_int_distribution<long>(2, 100'000)(gen));
        const auto hit = f_cone_exact(LatticeQ(horocycle_2_exact(x)), cone<Rational>(1, 1, delta, ConeSide::OneSided));
        if (hit.unorm != Rational(qmin(x, delta).q)) ++bridge;
    }
    r.require(brute == 0, "qmin vs brute force: " + std::to_string(brute) + "/1000 mismatches");
    r.require(bridge == 0, "qmin vs cone minimum: " + std::to_string(bridge) + "/1000 mismatches");
    linear_forms_bridge(r, gen);
    const double t = seconds_since(t0);
    r.require(t < 60, "runtime " + fmt("%.1f", t) + " s < 60 s");
    return r;
}

Result scaling_identities() {
    Result r;
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> tdist(-3, 3), ddist(0.05, 2.0);
    double worst2 = 0, worst3 = 0, worst_surface = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const LatticeD l(random_sl(2, gen));
        const double t = tdist(gen), delta = ddist(gen);
        const double lhs = f_cone(apply(geodesic_2(t), l), cone<double>(1, 1, delta)).unorm;
        const double rhs = std::exp(t / 2) * f_cone(l, cone<double>(1, 1, delta * std::exp(t))).unorm;
        worst2 = std::max(worst2, std::fabs(lhs - rhs) / rhs);
    }
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {1, 2}}) {
        for (int trial = 0; trial < 100; ++trial) {
            const LatticeD l(random_sl(m + n, gen));
            const double t = tdist(gen), delta = ddist(gen);
            const double lhs = f_cone(apply(geodesic_mn(t, m, n), l), cone<double>(n, m, delta)).unorm;
            const double rhs = std::exp(t / static_cast<double>(m + n)) *
                               f_cone(l, cone<double>(n, m, delta * std::exp(t / static_cast<double>(m)))).unorm;
            worst3 = std::max(worst3, std::fabs(lhs - rhs) / rhs);
        }
    }
    const HolonomySet torus = torus_holonomies(200);
    std::size_t uncertified = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double t = std::uniform_real_distribution<double>(-2, 2)(gen);
        const double delta = std::uniform_real_distribution<double>(0.1, 1.0)(gen);
        const PsiValue moved = psi(act_matrix(geodesic_2(t), torus), delta, SurfaceCone::Symmetric);
        const PsiValue base = psi(torus, delta * std::exp(t), SurfaceCone::Symmetric);
        if (!moved.certified || !base.certified) {
            ++uncertified;
            continue;
        }
        const double rhs = std::exp(t / 2) * base.value;
        worst_surface = std::max(worst_surface, std::fabs(moved.value - rhs) / rhs);
    }
    r.require(worst2 <= 1e-9, "planar flow: max rel err " + fmt("%.2e", worst2));
    r.require(worst3 <= 1e-9, "(2,1),(1,2) flow: max rel err " + fmt("%.2e", worst3));
    r.require(worst_surface <= 1e-9 && uncertified == 0,
              "torus holonomies: max rel err " + fmt("%.2e", worst_surface) + ", uncertified " +
                  std::to_string(uncertified));
    return r;
}

Result siegel_sampler() {
    Result r;
    const double mean = siegel_mean_count(seed_rhs, Box{-2, 2, -2, 2}, 200'000);
    r.require(std::fabs(mean - 16.0) <= 0.2, "mean count " + fmt("%.4f", mean) + " vs 16 +- 0.2");
    const double small_t = rhs_haar_cdf(1'000'000, seed_lhs).eval(0.1);
    r.require(std::fabs(small_t - 0.00608) <= 0.001, "P(F <= 0.1) " + fmt("%.5f", small_t) + " vs 0.00608 +- 0.001");
    return r;
}

Result higher_dimensional_stabilization() {
    Result r;
    // scales where the step delta^{m/(m+n)} of the normalized integer statistic is about 2e-3
    const std::tuple<std::size_t, std::size_t, Rational> cases[] = {{2, 1, Rational(1, 10'000)},
                                                                     {1, 2, Rational(1, 100'000'000)}};
    for (const auto& [m, n, delta] : cases) {
        const Rational finer = delta / Rational(16);
        const double ks = ks_distance(lhs_qmn_cdf(m, n, delta, 50'000, seed_lhs), lhs_qmn_cdf(m, n, finer, 50'000, seed_lhs));
        r.require(ks <= ks_stabilization, "(" + std::to_string(m) + "," + std::to_string(n) + ") KS " + fmt("%.5f", ks) +
                                              " <= 0.02 at delta " + delta.str());
    }
    std::mt19937_64 gen(77);
    linear_forms_bridge(r, gen);
    return r;
}

Result torus_holonomies_exact() {
    Result r;
    const auto traced = enumerate_holonomies(Origami::torus(), 20).sorted();
    const auto filtered = torus_holonomies(20).sorted();
    r.require(traced == filtered, std::to_string(traced.size()) + " traced vs " + std::to_string(filtered.size()) +
                                      " primitive vectors");
    return r;
}

Result origami_equivariance() {
    Result r;
    const std::int64_t radius = 24;
    std::size_t compared = 0, failures = 0;
    for (Generator g : {Generator::TUpper, Generator::TLower, Generator::S}) {
        for (const Origami& o : {l_shape(), four_a(), four_b()}) {
            const HolonomySet moved = act_matrix(generator_matrix(g), enumerate_holonomies(o, radius));
            const auto rr = static_cast<std::int64_t>(std::floor(moved.radius));
            std::vector<Vec2> clipped;
            for (const auto& v : moved.sorted())
                if (std::max(std::fabs(v.x), std::fabs(v.y)) <= static_cast<double>(rr)) clipped.push_back(v);
            const auto direct = enumerate_holonomies(act(g, o), rr).sorted();
            compared += direct.size();
            if (clipped != direct) ++failures;
        }
    }
    r.require(failures == 0, std::to_string(failures) + "/9 multiset mismatches over " + std::to_string(compared) +
                                 " vectors");
    return r;
}

Result surface_statistic() {
    Result r;
    const Rational delta(1, 10'000);
    const auto torus = sc_experiment(Origami::torus(), 1, delta, 50'000, seed_lhs);
    const auto primitive = rhs_haar_primitive_samples(50'000, seed_rhs);
    const double ks = ks_distance(EmpiricalCDF(statistics(torus.lhs)), EmpiricalCDF(statistics(primitive)));
    r.require(ks <= ks_surface, "torus vs Haar primitive KS " + fmt("%.5f", ks) + " <= 0.03");
    const std::pair<const char*, Origami> surfaces[] = {
        {"L", l_shape()}, {"four_a", four_a()}, {"four_b", four_b()}, {"six", six()}};
    for (const auto& [name, o] : surfaces) {
        const auto exp = sc_experiment(o, minimal_alpha(o), delta, 50'000, seed_lhs);
        const double s = ks_distance(EmpiricalCDF(statistics(exp.lhs)), EmpiricalCDF(statistics(exp.rhs_proxy)));
        r.require(s <= ks_surface, std::string(name) + " stabilization KS " + fmt("%.5f", s) + " <= 0.03");
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "qmin mean", qmin_mean},
        {2, "haar mean", haar_mean},
        {3, "qmin vs haar distribution", qmin_vs_haar},
        {4, "horocycle orbit vs haar distribution", horocycle_vs_haar},
        {5, "exact oracles", exact_oracles},
        {6, "scaling identities", scaling_identities},
        {7, "siegel sampler", siegel_sampler},
        {8, "higher-dimensional stabilization", higher_dimensional_stabilization},
        {9, "torus holonomies", torus_holonomies_exact},
        {10, "origami equivariance", origami_equivariance},
        {11, "surface statistic", surface_statistic},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2d %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
