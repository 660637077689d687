#include "mindenom/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace mindenom {

namespace {

void check_unimodular(const MatrixD& b) {
    const double det = determinant(b);
    if (!(std::fabs(det - 1.0) <= 1e-9)) throw std::invalid_argument("lattice basis is not unimodular");
}

void check_unimodular(const MatrixQ& b) {
    if (determinant(b) != Rational(1)) throw std::invalid_argument("lattice basis is not unimodular");
}

} // namespace

template <class T>
LatticeBasis<T>::LatticeBasis(Matrix<T> basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
        throw std::invalid_argument("lattice basis must be a non-empty square matrix");
    check_unimodular(basis_);
}

template class LatticeBasis<double>;
template class LatticeBasis<Rational>;

LatticeD to_double(const LatticeQ& lattice) { return LatticeD(to_double(lattice.matrix())); }

MatrixD geodesic_2(double t) { return MatrixD(2, 2, {std::exp(t / 2), 0.0, 0.0, std::exp(-t / 2)}); }

MatrixD horocycle_2(double s) { return MatrixD(2, 2, {1.0, 0.0, -s, 1.0}); }

MatrixQ horocycle_2_exact(const Rational& s) { return MatrixQ(2, 2, {Rational(1), Rational(0), -s, Rational(1)}); }

MatrixD geodesic_mn(double t, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("geodesic_mn requires m, n >= 1");
    const double d = static_cast<double>(m + n);
    const double expand = std::exp(t / d);
    const double contract = std::exp(-static_cast<double>(n) * t / (static_cast<double>(m) * d));
    MatrixD g(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = expand;
    for (std::size_t i = n; i < m + n; ++i) g(i, i) = contract;
    return g;
}

MatrixD horocycle_mn(const MatrixD& x) {
    const std::size_t m = x.rows(), n = x.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("horocycle_mn requires a non-empty matrix");
    MatrixD h = MatrixD::identity(m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) h(n + i, j) = -x(i, j);
    return h;
}

MatrixQ horocycle_mn_exact(const RationalMatrix& x) {
    const std::size_t m = x.rows(), n = x.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("horocycle_mn requires a non-empty matrix");
    MatrixQ h = MatrixQ::identity(m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) h(n + i, j) = -x(i, j);
    return h;
}

MatrixD rotation_2(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return MatrixD(2, 2, {c, -s, s, c});
}

} // namespace mindenom
