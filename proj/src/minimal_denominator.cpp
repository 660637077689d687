#include "mindenom/minimal_denominator.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "mindenom/errors.hpp"

namespace mindenom {

namespace {

Integer fdiv(const Integer& n, const Integer& d) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer fmod(const Integer& n, const Integer& d) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::size_t bits(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }
std::size_t bits(std::uint64_t v) {
    std::size_t b = 0;
    while (v) { ++b; v >>= 1; }
    return b;
}

using i128 = __int128;
using u128 = unsigned __int128;

i128 to_i128(const Integer& v) {
    // callers guarantee |v| < 2^63
    return static_cast<i128>(v.get_si());
}

// Simplest fraction in (a, b) with 0 <= a < b, where b may be +infinity.
// Returns (P, Q) with gcd 1.
std::pair<Integer, Integer> simplest_nonnegative(Integer an, Integer ad, Integer bn, Integer bd, bool b_inf) {
    Integer p0 = 1, p1 = 0, q0 = 0, q1 = 1;
    for (;;) {
        const Integer k = fdiv(an, ad);
        const Integer next = k + 1;
        if (b_inf || next * bd < bn) {
            return {Integer(p0 * next + p1), Integer(q0 * next + q1)};
        }
        // no integer strictly inside, so k <= a < b <= k + 1
        Integer new_an = bd;
        Integer new_ad = bn - k * bd;
        const Integer rem = an - k * ad;
        if (rem == 0) {
            b_inf = true;
        } else {
            bn = ad;
            bd = rem;
        }
        an = std::move(new_an);
        ad = std::move(new_ad);

        Integer np0 = p0 * k + p1;
        Integer nq0 = q0 * k + q1;
        p1 = std::move(p0);
        q1 = std::move(q0);
        p0 = std::move(np0);
        q0 = std::move(nq0);
    }
}

} // namespace

FractionHit simplest_in_interval(const OpenInterval& interval) {
    const Rational& lo = interval.lo();
    const Rational& hi = interval.hi();

    const Integer first = lo.floor() + 1;
    const Integer last = hi.ceil() - 1;
    if (first <= last) {
        const Rational mid = interval.midpoint();
        Integer best = mid.floor();
        if (best < first) best = first;
        if (best > last) best = last;
        if (best + 1 <= last && abs(Rational(Integer(best + 1)) - mid) < abs(Rational(best) - mid)) {
            best += 1;
        }
        return {Integer(1), best};
    }

    const Integer k = lo.floor();
    const Rational a = lo - Rational(k);
    const Rational b = hi - Rational(k);
    auto [p, q] = simplest_nonnegative(a.numerator(), a.denominator(), b.numerator(), b.denominator(), false);
    return {q, Integer(k * q + p)};
}

FractionHit qmin(const Rational& x, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("qmin requires delta > 0");
    return simplest_in_interval(OpenInterval(x - delta, x + delta));
}

FractionHit qmin_bruteforce(const Rational& x, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("qmin_bruteforce requires delta > 0");
    // p/q in (x - d, x + d)  <=>  |p*A - q*B| < q*C  with A = xd*dd, B = xn*dd, C = dn*xd
    const Integer A = x.denominator() * delta.denominator();
    const Integer B = x.numerator() * delta.denominator();
    const Integer C = delta.numerator() * x.denominator();

    Integer centre = 0, radius = 0;
    for (Integer q = 1;; q += 1) {
        centre += B;
        radius += C;
        const Integer p_lo = fdiv(Integer(centre - radius), A);
        const Integer p_hi = fdiv(Integer(centre + radius), A) + 1;
        bool found = false;
        Integer best_p, best_gap;
        for (Integer p = p_lo; p <= p_hi; p += 1) {
            Integer gap = p * A - centre;
            if (gap < 0) gap = -gap;
            if (gap < radius && (!found || gap < best_gap)) {
                found = true;
                best_p = p;
                best_gap = gap;
            }
        }
        if (found) return {q, best_p};
    }
}

std::uint64_t q_m(const RationalVector& x, const Rational& delta, QmOptions options) {
    if (x.empty()) throw std::invalid_argument("q_m requires m >= 1");
    if (delta.sign() <= 0) throw std::invalid_argument("q_m requires delta > 0");

    Integer D = 1;
    for (const auto& xi : x) D = lcm(D, xi.denominator());
    std::vector<Integer> step;
    step.reserve(x.size());
    for (const auto& xi : x) step.push_back(fmod(Integer(xi.numerator() * (D / xi.denominator())), D));
    const Integer c = delta.numerator();
    const Integer e = delta.denominator();
    const std::uint64_t cap = options.max_q;

    // coordinate i passes at q iff min(r, D - r) * e < c * q * D, r = q*a_i mod D
    const bool fast = bits(D) <= 62 && bits(c) <= 62 && bits(e) <= 62 &&
                      bits(c) + bits(D) + bits(cap) <= 126 && bits(D) + bits(e) <= 126;
    if (fast) {
        const u128 d = static_cast<u128>(D.get_ui());
        const u128 ee = static_cast<u128>(e.get_ui());
        const u128 cd = static_cast<u128>(c.get_ui()) * d;
        std::vector<u128> s(step.size()), r(step.size(), 0);
        for (std::size_t i = 0; i < step.size(); ++i) s[i] = static_cast<u128>(step[i].get_ui());
        u128 bound = 0;
        for (std::uint64_t q = 1; q <= cap; ++q) {
            bound += cd;
            bool ok = true;
            for (std::size_t i = 0; i < s.size(); ++i) {
                r[i] += s[i];
                if (r[i] >= d) r[i] -= d;
                const u128 dist = r[i] < d - r[i] ? r[i] : d - r[i];
                if (ok && !(dist * ee < bound)) ok = false;
            }
            if (ok) return q;
        }
    } else {
        std::vector<Integer> r(step.size(), Integer(0));
        const Integer cd = c * D;
        Integer bound = 0;
        for (std::uint64_t q = 1; q <= cap; ++q) {
            bound += cd;
            bool ok = true;
            for (std::size_t i = 0; i < step.size(); ++i) {
                r[i] += step[i];
                if (r[i] >= D) r[i] -= D;
                const Integer other = D - r[i];
                const Integer& dist = r[i] < other ? r[i] : other;
                if (ok && !(dist * e < bound)) ok = false;
            }
            if (ok) return q;
        }
    }
    throw NotFoundError("q_m: no denominator up to " + std::to_string(cap));
}

namespace {

// Visits the vectors q in Z^n with ||q||_inf == r and first nonzero entry
// positive, in lexicographic order. Stops when visit returns true.
bool for_each_canonical_in_shell(std::size_t n, std::int64_t r,
                                 const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> q(n, 0);
    std::function<bool(std::size_t, bool, bool)> rec = [&](std::size_t pos, bool extreme, bool nonzero) -> bool {
        if (pos == n) return visit(q);
        const std::int64_t lo = nonzero ? -r : 0;
        if (pos + 1 == n && !extreme) {
            // the last entry must supply the extreme value
            if (nonzero) {
                q[pos] = -r;
                if (visit(q)) return true;
            }
            q[pos] = r;
            return visit(q);
        }
        for (std::int64_t v = lo; v <= r; ++v) {
            q[pos] = v;
            if (rec(pos + 1, extreme || v == r || v == -r, nonzero || v != 0)) return true;
        }
        return false;
    };
    return rec(0, false, false);
}

} // namespace

QmnResult q_mn(const RationalMatrix& x, const Rational& delta, QmnOptions options) {
    if (delta.sign() <= 0) throw std::invalid_argument("q_mn requires delta > 0");
    if (options.max_shell < 1) throw std::invalid_argument("q_mn requires max_shell >= 1");
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();

    Integer D = 1;
    for (const auto& v : x.entries()) D = lcm(D, v.denominator());
    std::vector<Integer> a(m * n);
    for (std::size_t k = 0; k < m * n; ++k) {
        const auto& v = x.entries()[k];
        a[k] = fmod(Integer(v.numerator() * (D / v.denominator())), D);
    }
    const Integer c = delta.numerator();
    const Integer e = delta.denominator();
    const auto cap = static_cast<std::uint64_t>(options.max_shell);

    const bool fast = bits(D) <= 62 && bits(c) <= 62 && bits(e) <= 62 &&
                      bits(D) + bits(cap) + bits(static_cast<std::uint64_t>(n)) + 2 <= 126 &&
                      bits(c) + bits(D) + bits(cap) <= 126 && bits(D) + bits(e) <= 126;

    QmnResult result{0, {}};
    if (fast) {
        const i128 d = to_i128(D);
        const i128 ee = to_i128(e);
        const i128 cd = to_i128(c) * d;
        std::vector<i128> aa(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) aa[k] = to_i128(a[k]);
        for (std::int64_t r = 1; r <= options.max_shell; ++r) {
            const i128 bound = cd * r;
            const bool hit = for_each_canonical_in_shell(n, r, [&](const std::vector<std::int64_t>& q) {
                for (std::size_t i = 0; i < m; ++i) {
                    i128 t = 0;
                    for (std::size_t j = 0; j < n; ++j) t += aa[i * n + j] * q[j];
                    t %= d;
                    if (t < 0) t += d;
                    const i128 dist = t < d - t ? t : d - t;
                    if (!(dist * ee < bound)) return false;
                }
                result = {static_cast<std::uint64_t>(r), q};
                return true;
            });
            if (hit) return result;
        }
    } else {
        const Integer cd = c * D;
        for (std::int64_t r = 1; r <= options.max_shell; ++r) {
            const Integer bound = cd * Integer(static_cast<long>(r));
            const bool hit = for_each_canonical_in_shell(n, r, [&](const std::vector<std::int64_t>& q) {
                for (std::size_t i = 0; i < m; ++i) {
                    Integer t = 0;
                    for (std::size_t j = 0; j < n; ++j) t += a[i * n + j] * Integer(static_cast<long>(q[j]));
                    t = fmod(t, D);
                    const Integer other = D - t;
                    const Integer& dist = t < other ? t : other;
                    if (!(dist * e < bound)) return false;
                }
                result = {static_cast<std::uint64_t>(r), q};
                return true;
            });
            if (hit) return result;
        }
    }
    throw NotFoundError("q_mn: no witness within shell radius " + std::to_string(options.max_shell));
}

} // namespace mindenom
