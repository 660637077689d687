#include "doctest.h"

#include <random>

#include "mindenom/errors.hpp"
#include "mindenom/minimal_denominator.hpp"

using namespace mindenom;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// Test-only oracle for Q^m and Q^{m,n}: plain loops over exact rationals.
bool within(const Rational& v, const Rational& bound) {
    const Rational frac = v - Rational(v.floor());
    const Rational dist = frac < Rational(1, 2) ? frac : Rational(1) - frac;
    return dist < bound;
}

std::uint64_t naive_q_m(const RationalVector& x, const Rational& delta) {
    for (std::uint64_t q = 1;; ++q) {
        bool ok = true;
        for (const auto& xi : x) ok = ok && within(Rational(static_cast<long>(q)) * xi, Rational(static_cast<long>(q)) * delta);
        if (ok) return q;
    }
}

std::uint64_t naive_q_mn(const RationalMatrix& X, const Rational& delta) {
    const auto n = X.cols();
    for (long r = 1;; ++r) {
        std::vector<long> q(n, -r);
        for (;;) {
            long norm = 0;
            for (long v : q) norm = std::max(norm, std::labs(v));
            if (norm == r) {
                bool ok = true;
                for (std::size_t i = 0; i < X.rows() && ok; ++i) {
                    Rational t = 0;
                    for (std::size_t j = 0; j < n; ++j) t += X(i, j) * Rational(q[j]);
                    ok = within(t, delta * Rational(r));
                }
                if (ok) return static_cast<std::uint64_t>(r);
            }
            std::size_t k = 0;
            while (k < n && q[k] == r) q[k++] = -r;
            if (k == n) break;
            ++q[k];
        }
    }
}

struct RandomRationals {
    std::mt19937_64 gen{20241016};
    Rational unit(long max_den) {
        std::uniform_int_distribution<long> den(1, max_den);
        const long d = den(gen);
        std::uniform_int_distribution<long> num(0, d);
        return Rational(num(gen), d);
    }
    // delta in (0, 1/2]
    Rational delta(long max_den) {
        std::uniform_int_distribution<long> den(2, max_den);
        const long d = den(gen);
        std::uniform_int_distribution<long> num(1, d / 2);
        return Rational(num(gen), d);
    }
};

} // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(R("1e-6") == Rational(1, 1000000));
    CHECK(R("0.25") == Rational(1, 4));
    CHECK(R("-3/6") == Rational(-1, 2));
    CHECK(R("2.5e1") == Rational(25));
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::dyadic(3, 2) == Rational(3, 4));
    CHECK_THROWS_AS(R("1/0"), std::domain_error);
    CHECK_THROWS_AS(R("abc"), std::invalid_argument);
    CHECK_THROWS_AS(OpenInterval(R("1/2"), R("1/2")), std::invalid_argument);
}

TEST_CASE("simplest_in_interval examples") {
    auto h = simplest_in_interval(OpenInterval(R("1/4"), R("3/4")));
    CHECK(h.q == 2);
    CHECK(h.p == 1);

    h = simplest_in_interval(OpenInterval(R("11/25"), R("23/50")));
    CHECK(h.q == 9);
    CHECK(h.p == 4);

    for (const char* d : {"1/10", "1/1000", "7/3", "1e-9"}) {
        h = simplest_in_interval(OpenInterval(-R(d), R(d)));
        CHECK(h.q == 1);
        CHECK(h.p == 0);
    }
}

TEST_CASE("simplest_in_interval tie-break on integer hits") {
    // integers 1, 2, 3 inside; midpoint 2.1
    auto h = simplest_in_interval(OpenInterval(R("1/2"), R("37/10")));
    CHECK(h.q == 1);
    CHECK(h.p == 2);
    // midpoint exactly between 1 and 2 -> smaller p
    h = simplest_in_interval(OpenInterval(R("1/2"), R("5/2")));
    CHECK(h.p == 1);
    // negative intervals
    h = simplest_in_interval(OpenInterval(R("-3/4"), R("-1/4")));
    CHECK(h.q == 2);
    CHECK(h.p == -1);
    // endpoint is an integer: open interval excludes it
    h = simplest_in_interval(OpenInterval(R("1"), R("3/2")));
    CHECK(h.q == 3);
    CHECK(h.p == 4);
}

TEST_CASE("qmin examples against brute force") {
    CHECK(qmin(R("9/20"), R("1/100")).q == 9);
    CHECK(qmin_bruteforce(R("9/20"), R("1/100")).q == 9);
    CHECK(qmin(R("0"), R("1/10")) == FractionHit{1, 0});
    CHECK(qmin_bruteforce(R("0"), R("1/10")) == FractionHit{1, 0});
    CHECK(qmin(R("1/2"), R("1/4")) == FractionHit{2, 1});
    CHECK(qmin_bruteforce(R("1/2"), R("1/4")) == FractionHit{2, 1});
    // strictness: 1/2 sits exactly on the boundary of (1/4, 1/2)
    CHECK(qmin(R("3/8"), R("1/8")).q == 3);
    CHECK_THROWS_AS(qmin(R("0"), R("0")), std::invalid_argument);
}

TEST_CASE("qmin oracle equivalence and invariances on random inputs") {
    RandomRationals rnd;
    for (int trial = 0; trial < 400; ++trial) {
        const Rational x = rnd.unit(5000);
        const Rational delta = rnd.delta(3000);
        const auto fast = qmin(x, delta);
        const auto slow = qmin_bruteforce(x, delta);
        REQUIRE(fast == slow);
        CHECK(fast.q <= (Rational(1) / delta).floor() + 1);
        CHECK(qmin(x + Rational(1), delta).q == fast.q);
        CHECK(qmin(Rational(1) - x, delta).q == fast.q);
        const Rational smaller = delta / Rational(3);
        CHECK(qmin(x, smaller).q >= fast.q);
    }
}

TEST_CASE("q_m examples") {
    CHECK(q_m({R("1/2"), R("1/3")}, R("1/100")) == 6);
    CHECK(q_m({R("0"), R("0")}, R("1/1000")) == 1);
    CHECK(q_m({R("1/2")}, R("1/4")) == 2);
    CHECK_THROWS_AS(q_m({R("1/3")}, R("1/1000"), QmOptions{2}), NotFoundError);
    CHECK_THROWS_AS(q_m({}, R("1/2")), std::invalid_argument);
}

TEST_CASE("q_m agrees with qmin for m = 1 and with the naive oracle") {
    RandomRationals rnd;
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x = rnd.unit(1000);
        const Rational y = rnd.unit(1000);
        const Rational delta = rnd.delta(200);
        CHECK(Integer(static_cast<unsigned long>(q_m({x}, delta))) == qmin(x, delta).q);
        CHECK(q_m({x, y}, delta) == naive_q_m({x, y}, delta));
        CHECK(q_m({x, y}, delta / Rational(2)) >= q_m({x, y}, delta));
    }
}

TEST_CASE("q_m large-denominator path matches the fast path") {
    // denominators beyond 62 bits force the arbitrary-precision branch
    const Rational big = Rational(Integer("1234567890123456789012345"), Integer("9876543210987654321098765"));
    const Rational delta = R("1/500");
    const auto q = q_m({big, R("2/7")}, delta);
    CHECK(q == naive_q_m({big, R("2/7")}, delta));
}

TEST_CASE("q_mn examples") {
    RationalMatrix x(1, 2, {R("1/2"), R("1/3")});
    auto res = q_mn(x, R("1/5"));
    CHECK(res.qnorm == 1);
    CHECK(res.q == std::vector<std::int64_t>{1, -1});

    RationalMatrix zero(2, 2, {R("0"), R("0"), R("0"), R("0")});
    CHECK(q_mn(zero, R("1/1000")).qnorm == 1);

    RationalMatrix half(1, 1, {R("1/2")});
    CHECK(q_mn(half, R("1/4")).qnorm == 2);

    RationalMatrix third(1, 1, {R("1/3")});
    CHECK_THROWS_AS(q_mn(third, R("1/1000"), QmnOptions{2}), NotFoundError);
}

TEST_CASE("q_mn specialization chain and naive oracle") {
    RandomRationals rnd;
    for (int trial = 0; trial < 120; ++trial) {
        const Rational x = rnd.unit(500);
        const Rational delta = rnd.delta(100);
        RationalMatrix one(1, 1, {x});
        const auto qn = q_mn(one, delta).qnorm;
        CHECK(qn == q_m({x}, delta));
        CHECK(Integer(static_cast<unsigned long>(qn)) == qmin(x, delta).q);

        RationalMatrix col(2, 1, {rnd.unit(300), rnd.unit(300)});
        CHECK(q_mn(col, delta).qnorm == q_m({col(0, 0), col(1, 0)}, delta));

        RationalMatrix row(1, 2, {rnd.unit(300), rnd.unit(300)});
        const auto res = q_mn(row, delta);
        CHECK(res.qnorm == naive_q_mn(row, delta));
        CHECK(q_mn(row, delta / Rational(2)).qnorm >= res.qnorm);
        // witness satisfies the defining inequality
        Rational t = row(0, 0) * Rational(res.q[0]) + row(0, 1) * Rational(res.q[1]);
        CHECK(within(t, delta * Rational(static_cast<long>(res.qnorm))));
    }
}
