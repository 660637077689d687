#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mindenom/lattice.hpp"

namespace mindenom {

enum class ConeSide {
    TwoSided,      // ||v|| < delta ||u||, u != 0
    OneSided,      // n == 1, u > 0 and ||v|| < delta u
    OneSidedNoAbs  // n == m == 1, u > 0 and v < delta u
};

/// Cone in R^n (+) R^m; a point lists the n coordinates of u before the m coordinates of v.
template <class T>
struct ConeSpec {
    std::size_t n = 1;
    std::size_t m = 1;
    T delta = T(1);
    ConeSide side = ConeSide::TwoSided;

    void validate() const;
    bool contains(const std::vector<T>& point) const;
    T unorm(const std::vector<T>& point) const;
    T vnorm(const std::vector<T>& point) const;
};

template <class T>
struct ConeHit {
    std::vector<T> vector;
    std::vector<std::int64_t> coords;  // integer coordinates in the input basis
    T unorm{};
    bool near_boundary = false;        // floating flavor only: within 1e-12 of the cone boundary
};

/// Lattice point in the cone minimizing ||u||_inf; ties go to the lexicographically
/// smallest integer coordinate vector. Throws NotFoundError once the shell radius exceeds search_cap.
ConeHit<double> f_cone(const LatticeD& lattice, const ConeSpec<double>& cone, double search_cap = 1e15);
ConeHit<Rational> f_cone_exact(const LatticeQ& lattice, const ConeSpec<Rational>& cone, double search_cap = 1e15);

/// Unimodular U such that basis * U is Lagrange-Gauss reduced (2 x 2 only).
MatrixI gauss_reduce(const MatrixD& basis);
/// Unimodular U such that basis * U is LLL reduced with the given Lovasz parameter.
MatrixI lll_reduce(const MatrixD& basis, double lovasz = 0.99);

} // namespace mindenom
