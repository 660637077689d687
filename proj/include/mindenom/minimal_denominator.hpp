#pragma once

#include <cstdint>
#include <vector>

#include "mindenom/rational.hpp"

namespace mindenom {

/// A fraction p/q in lowest terms found inside a query interval.
struct FractionHit {
    Integer q;
    Integer p;

    Rational value() const { return Rational(p, q); }
    friend bool operator==(const FractionHit&, const FractionHit&) = default;
};

/// Fraction of minimal denominator in the open interval I.
///
/// Continued-fraction descent: an integer strictly inside I is returned
/// directly (closest to the midpoint, then smaller p); otherwise the interval
/// is shifted by k = floor(lo), inverted, and the search recurses on
/// (1/(hi-k), 1/(lo-k)). For q >= 2 the minimal-denominator fraction in an
/// open interval is unique.
FractionHit simplest_in_interval(const OpenInterval& interval);

/// Minimal denominator of a fraction in (x - delta, x + delta); delta > 0.
FractionHit qmin(const Rational& x, const Rational& delta);

/// Reference implementation of qmin: scans q = 1, 2, ... and tests every
/// candidate numerator. Terminates by q <= floor(1/delta) + 1.
FractionHit qmin_bruteforce(const Rational& x, const Rational& delta);

struct QmOptions {
    std::uint64_t max_q = 10'000'000;
};

/// Smallest q >= 1 with ||q x - p||_inf < q delta for some integer vector p.
/// Throws NotFoundError past options.max_q.
std::uint64_t q_m(const RationalVector& x, const Rational& delta, QmOptions options = {});

struct QmnResult {
    std::uint64_t qnorm;
    std::vector<std::int64_t> q;   // first nonzero entry positive
};

struct QmnOptions {
    std::int64_t max_shell = 1000;
};

/// Linear-form minimal denominator for an m x n matrix X:
/// min ||q||_inf over nonzero q in Z^n with ||Xq - p||_inf < delta ||q||_inf.
/// Shells ||q||_inf = r are scanned in increasing r; within the winning shell
/// the witness is the lexicographically smallest q whose first nonzero entry
/// is positive (q and -q are equivalent). Throws NotFoundError past max_shell.
QmnResult q_mn(const RationalMatrix& x, const Rational& delta, QmnOptions options = {});

} // namespace mindenom
