#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "mindenom/cone_search.hpp"
#include "mindenom/haar.hpp"

using namespace mindenom;

TEST_CASE("philox known answers") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are deterministic and distinct") {
    Stream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    bool differ_c = false, differ_d = false;
    for (int k = 0; k < 64; ++k) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        differ_c = differ_c || va != c.next_u64();
        differ_d = differ_d || va != d.next_u64();
    }
    CHECK(differ_c);
    CHECK(differ_d);

    Stream s(1, 0);
    double sum = 0;
    for (int k = 0; k < 100000; ++k) {
        const double u = s.uniform();
        const double v = s.uniform_open_left();
        CHECK_UNARY(u >= 0.0 && u < 1.0);
        CHECK_UNARY(v > 0.0 && v <= 1.0);
        sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("haar samples live in the fundamental domain") {
    std::uint64_t proposals = 0, accepted = 0;
    for (std::uint64_t i = 0; proposals < 100000; ++i) {
        Stream s(2024, i);
        const HaarSample h = sample_x2(s);
        proposals += h.proposals;
        ++accepted;
        CHECK_UNARY(std::fabs(h.x) <= 0.5);
        CHECK_UNARY(h.y >= std::sqrt(3.0) / 2);
        CHECK_UNARY(h.x * h.x + h.y * h.y >= 1.0);
        CHECK_UNARY(h.theta >= 0.0 && h.theta < 2 * std::numbers::pi);
        CHECK_UNARY(std::fabs(determinant(h.basis.matrix()) - 1.0) <= 1e-9);
    }
    const double rate = static_cast<double>(accepted) / static_cast<double>(proposals);
    CHECK(rate >= 0.89);
    CHECK(rate <= 0.92);
}

TEST_CASE("lattice point counting") {
    const LatticeD z = LatticeD::standard(2);
    CHECK(count_in_box(z, {-2, 2, -2, 2}) == 15);
    CHECK(count_in_box(z, {0, 1, 0, 1}) == 0);
    CHECK(count_in_box(z, {0.5, 0.5, -3, 3}) == 0);
    CHECK(count_in_box(z, {1, 1, 0, 4}) == 0);
    CHECK(count_in_box(z, {0.5, 3.5, 0.5, 1.5}) == 3);
    CHECK(count_in_disk(z, 1.5) == 8);
    CHECK(count_in_disk(z, 1.0) == 0);
    CHECK(count_in_disk(z, 2.0) == 8);
    CHECK(count_in_disk(z, 2.0000001) == 12);

    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 200; ++trial) {
        Stream s(77, static_cast<std::uint64_t>(trial));
        const LatticeD l = sample_x2(s).basis;
        std::uniform_real_distribution<double> u(-3, 3);
        double x0 = u(gen), x1 = u(gen), y0 = u(gen), y1 = u(gen);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        const Box box{x0, x1, y0, y1};
        const double rad = std::fabs(u(gen));
        // brute force over the reduced coefficients
        const MatrixD red = mul_integer(l.matrix(), gauss_reduce(l.matrix()));
        std::uint64_t nb = 0, nd = 0;
        for (long a = -400; a <= 400; ++a)
            for (long b = -400; b <= 400; ++b) {
                if (a == 0 && b == 0) continue;
                const double px = red(0, 0) * a + red(0, 1) * b, py = red(1, 0) * a + red(1, 1) * b;
                if (box.x0 <= px && px < box.x1 && box.y0 <= py && py < box.y1) ++nb;
                if (px * px + py * py < rad * rad) ++nd;
            }
        CHECK(count_in_box(l, box) == nb);
        CHECK(count_in_disk(l, rad) == nd);
    }
}

TEST_CASE("siegel mean value") {
    CHECK(siegel_mean_count(5, {-2, 2, -2, 2}, 200000) == doctest::Approx(16.0).epsilon(0.2 / 16));
    CHECK(siegel_mean_count(6, {0, 1, 0, 1}, 200000) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(siegel_mean_count(7, {0.3, 0.3, -1, 1}, 1000) == 0.0);
}
