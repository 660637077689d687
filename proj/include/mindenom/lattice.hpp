#pragma once

#include <cstddef>

#include "mindenom/matrix.hpp"

namespace mindenom {

/// Unimodular lattice given by the columns of a square basis matrix.
template <class T>
class LatticeBasis {
public:
    explicit LatticeBasis(Matrix<T> basis);

    static LatticeBasis standard(std::size_t d) { return LatticeBasis(Matrix<T>::identity(d)); }

    std::size_t dim() const { return basis_.rows(); }
    const Matrix<T>& matrix() const { return basis_; }
    std::vector<T> column(std::size_t c) const { return basis_.column(c); }

private:
    Matrix<T> basis_;
};

using LatticeD = LatticeBasis<double>;
using LatticeQ = LatticeBasis<Rational>;

/// Left action g * Lambda.
template <class T>
LatticeBasis<T> apply(const Matrix<T>& g, const LatticeBasis<T>& lattice) {
    return LatticeBasis<T>(g * lattice.matrix());
}

LatticeD to_double(const LatticeQ& lattice);

MatrixD geodesic_2(double t);
MatrixD horocycle_2(double s);
MatrixQ horocycle_2_exact(const Rational& s);

/// diag(e^{t/(m+n)} Id_n, e^{-nt/(m(m+n))} Id_m); the first n coordinates are the u block.
MatrixD geodesic_mn(double t, std::size_t m, std::size_t n);
/// [[Id_n, 0], [-X, Id_m]] for an m x n matrix X.
MatrixD horocycle_mn(const MatrixD& x);
MatrixQ horocycle_mn_exact(const RationalMatrix& x);

/// Rotation by angle theta.
MatrixD rotation_2(double theta);

} // namespace mindenom
