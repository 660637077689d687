#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mindenom/rational.hpp"

namespace mindenom {

/// Right-continuous empirical distribution function of a nonempty sample.
class EmpiricalCDF {
public:
    explicit EmpiricalCDF(std::vector<double> samples);

    double eval(double t) const;
    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

struct ChenHaynesEstimate {
    std::vector<double> grid;
    std::vector<double> xi_hat;
    double delta = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

/// 512 points, geometric from 0.01 to 10.
std::vector<double> default_grid();
ChenHaynesEstimate estimate_on_grid(const EmpiricalCDF& cdf, double delta, std::uint64_t seed,
                                    const std::vector<double>& grid = default_grid());

double ks_distance(const EmpiricalCDF& a, const EmpiricalCDF& b);
double mean_estimate(const EmpiricalCDF& cdf);
/// Integral of 1 - CDF over [0, max sample]; equals the mean for nonnegative samples.
double layer_cake_mean(const EmpiricalCDF& cdf);

/// One experiment sample: a printable description of the input and the normalized statistic.
struct Sample {
    std::string input;
    double statistic = 0;
};

std::vector<double> statistics(const std::vector<Sample>& samples);

/// sqrt(delta) * qmin(x, delta) for x = k / 2^53 drawn from stream(seed, i).
std::vector<Sample> lhs_qmin_samples(const Rational& delta, std::size_t n, std::uint64_t seed);
/// F^1_1 of Haar lattices drawn from stream(seed, i).
std::vector<Sample> rhs_haar_samples(std::size_t n, std::uint64_t seed);
/// Primitive-vector variant: F^1_1 restricted to primitive lattice vectors.
std::vector<Sample> rhs_haar_primitive_samples(std::size_t n, std::uint64_t seed);
/// F^1_1(g_{log delta} h_x Z^2) on the grid x_i = (i + 1/2) / n.
std::vector<Sample> horocycle_orbit_samples(double delta, std::size_t n);
/// delta^{m/(m+1)} Q^m(x, delta) for uniform x in [0,1]^m; a zero cap selects default_caps.
std::vector<Sample> lhs_qm_samples(std::size_t m, const Rational& delta, std::size_t n, std::uint64_t seed,
                                   std::uint64_t max_q = 0);
/// delta^{m/(m+n)} Q^{m,n}(X, delta) for uniform X in [0,1]^{m x n}; a zero cap selects default_caps.
/// With n >= 2 the value comes from the exact cone search on h_X Z^{m+n} instead of shell scanning.
std::vector<Sample> lhs_qmn_samples(std::size_t m, std::size_t n_dim, const Rational& delta, std::size_t n,
                                    std::uint64_t seed, std::int64_t max_shell = 0);

EmpiricalCDF lhs_qmin_cdf(const Rational& delta, std::size_t n, std::uint64_t seed);
EmpiricalCDF rhs_haar_cdf(std::size_t n, std::uint64_t seed);
EmpiricalCDF horocycle_orbit_cdf(double delta, std::size_t n);
EmpiricalCDF lhs_qm_cdf(std::size_t m, const Rational& delta, std::size_t n, std::uint64_t seed);
EmpiricalCDF lhs_qmn_cdf(std::size_t m, std::size_t n_dim, const Rational& delta, std::size_t n, std::uint64_t seed);

/// Enumeration caps for Q^m and Q^{m,n}: far beyond the typical scale delta^{-m/(m+n)}.
struct ExperimentCaps {
    std::uint64_t max_q = 0;
    std::int64_t max_shell = 0;
};
ExperimentCaps default_caps(std::size_t m, std::size_t n_dim, const Rational& delta);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

} // namespace mindenom
