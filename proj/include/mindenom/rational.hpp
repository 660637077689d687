#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mindenom {

using Integer = mpz_class;

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den >= 1).
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(const Integer& value) : v_(value) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q", an integer, or a decimal/scientific literal such as
    /// "0.25" or "1e-6"; the decimal forms are converted exactly.
    static Rational parse(std::string_view text);

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    /// k / 2^bits.
    static Rational dyadic(std::uint64_t k, unsigned bits);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    mpq_class v_;
};

Rational abs(const Rational& r);

/// Open interval (lo, hi) with lo < hi.
class OpenInterval {
public:
    OpenInterval(Rational lo, Rational hi);
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool contains(const Rational& r) const { return lo_ < r && r < hi_; }

private:
    Rational lo_;
    Rational hi_;
};

using RationalVector = std::vector<Rational>;

/// Dense row-major rows x cols matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

} // namespace mindenom
