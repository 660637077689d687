#include "mindenom/cone_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "mindenom/errors.hpp"

namespace mindenom {

namespace {

double absval(double v) { return std::fabs(v); }
Rational absval(const Rational& v) { return abs(v); }

bool positive(double v) { return v > 0; }
bool positive(const Rational& v) { return v.sign() > 0; }

bool at_most(double v, double r) { return v <= r; }
bool at_most(const Rational& v, double r) { return v <= Rational(Integer(r)); }

std::int64_t checked_round(double v) {
    if (!(std::fabs(v) < 4.0e18)) throw std::overflow_error("basis reduction coefficient out of range");
    return std::llround(v);
}

using Columns = std::vector<std::vector<double>>;

Columns columns_of(const MatrixD& m) {
    Columns c(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) c[j] = m.column(j);
    return c;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy_column(Columns& b, MatrixI& u, std::size_t k, std::size_t j, std::int64_t q) {
    for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= static_cast<double>(q) * b[j][i];
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, k) -= q * u(i, j);
}

void swap_columns(Columns& b, MatrixI& u, std::size_t k, std::size_t j) {
    std::swap(b[k], b[j]);
    for (std::size_t i = 0; i < u.rows(); ++i) std::swap(u(i, k), u(i, j));
}

struct GramSchmidt {
    std::vector<std::vector<double>> mu;
    std::vector<double> norms;  // squared norms of the orthogonalized vectors
};

GramSchmidt gram_schmidt(const Columns& b) {
    const std::size_t d = b.size();
    GramSchmidt gs{std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)), std::vector<double>(d, 0.0)};
    Columns star = b;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            gs.mu[k][j] = dot(b[k], star[j]) / gs.norms[j];
            for (std::size_t i = 0; i < star[k].size(); ++i) star[k][i] -= gs.mu[k][j] * star[j][i];
        }
        gs.norms[k] = dot(star[k], star[k]);
        if (!(gs.norms[k] > 0)) throw std::invalid_argument("degenerate lattice basis");
        gs.mu[k][k] = 1.0;
    }
    return gs;
}

// Product of the floating image of a basis and an integer matrix.
MatrixD apply_integer(const MatrixD& s, const MatrixI& u) { return mul_integer(s, u); }

template <class T>
class ConeSearch {
public:
    ConeSearch(const LatticeBasis<T>& lattice, const ConeSpec<T>& cone) : cone_(cone) {
        cone_.validate();
        if (cone_.side == ConeSide::OneSidedNoAbs)
            throw std::invalid_argument("cone minimization does not support the unsigned one-sided cone");
        d_ = lattice.dim();
        if (d_ != cone_.n + cone_.m) throw std::invalid_argument("cone dimension does not match the lattice");

        scaled_ = to_double(lattice.matrix());
        const double inv_delta = 1.0 / to_double(cone_.delta);
        if (!(std::isfinite(inv_delta) && inv_delta > 0)) throw std::invalid_argument("cone delta out of floating range");
        for (std::size_t r = cone_.n; r < d_; ++r)
            for (std::size_t c = 0; c < d_; ++c) scaled_(r, c) *= inv_delta;

        u_ = d_ == 2 ? gauss_reduce(scaled_) : lll_reduce(scaled_);
        reduced_scaled_ = apply_integer(scaled_, u_);
        reduced_ = mul_integer(lattice.matrix(), u_);
    }

    ConeHit<T> run(double cap) {
        for (double r = 1.0; r <= cap; r *= 2.0) {
            if (d_ == 2) {
                scan_lines(r);
            } else {
                scan_ball(r);
            }
            if (best_ && at_most(best_->unorm, r)) return finish();
        }
        throw NotFoundError("cone search: no lattice point with ||u|| <= " + std::to_string(cap));
    }

private:
    // Records reduced coefficients c as a candidate if the point lies in the cone.
    bool consider(const std::vector<std::int64_t>& c) {
        std::vector<T> point(d_, T(0));
        for (std::size_t j = 0; j < d_; ++j) {
            if (c[j] == 0) continue;
            const T cj(static_cast<long>(c[j]));
            for (std::size_t i = 0; i < d_; ++i) point[i] += reduced_(i, j) * cj;
        }
        if (!cone_.contains(point)) return false;
        std::vector<std::int64_t> coords(d_, 0);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) coords[i] += u_(i, j) * c[j];
        T un = cone_.unorm(point);
        if (best_ && (best_->unorm < un || (best_->unorm == un && !(coords < best_->coords)))) return true;
        best_ = ConeHit<T>{std::move(point), std::move(coords), std::move(un), false};
        return true;
    }

    ConeHit<T> finish() {
        ConeHit<T> hit = *best_;
        if constexpr (std::is_same_v<T, double>) {
            const double edge = cone_.delta * hit.unorm;
            hit.near_boundary = std::fabs(edge - cone_.vnorm(hit.vector)) <= 1e-12 * std::max(1.0, edge);
        }
        return hit;
    }

    // Two dimensions: sweep the lines parallel to the first reduced vector across
    // each half-triangle {0 < sX <= r, |Y| < sX} of the scaled cone.
    void scan_lines(double r) {
        const double a1 = reduced_scaled_(0, 0), b1 = reduced_scaled_(1, 0);
        const double a2 = reduced_scaled_(0, 1), b2 = reduced_scaled_(1, 1);
        const double det = a1 * b2 - b1 * a2;
        const int sides = cone_.side == ConeSide::TwoSided ? 2 : 1;
        for (int side = 0; side < sides; ++side) {
            const double s = side == 0 ? 1.0 : -1.0;
            const double vx[3] = {0.0, s * r, s * r};
            const double vy[3] = {0.0, r, -r};
            double jmin = std::numeric_limits<double>::infinity(), jmax = -jmin;
            for (int k = 0; k < 3; ++k) {
                const double jv = (a1 * vy[k] - b1 * vx[k]) / det;
                jmin = std::min(jmin, jv);
                jmax = std::max(jmax, jv);
            }
            const std::int64_t jlo = checked_round(std::floor(jmin)) - 1;
            const std::int64_t jhi = checked_round(std::ceil(jmax)) + 1;
            for (std::int64_t j = jlo; j <= jhi; ++j) scan_line(s, static_cast<double>(j), j, r);
        }
    }

    void scan_line(double s, double jd, std::int64_t j, double r) {
        const double a1 = reduced_scaled_(0, 0), b1 = reduced_scaled_(1, 0);
        const double a2 = reduced_scaled_(0, 1), b2 = reduced_scaled_(1, 1);
        // each constraint reads alpha * i + beta >= 0
        const double alpha[4] = {s * a1, -s * a1, s * a1 - b1, s * a1 + b1};
        const double beta[4] = {s * jd * a2, r - s * jd * a2, jd * (s * a2 - b2), jd * (s * a2 + b2)};
        double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
        for (int k = 0; k < 4; ++k) {
            if (alpha[k] > 0) {
                lo = std::max(lo, -beta[k] / alpha[k]);
            } else if (alpha[k] < 0) {
                hi = std::min(hi, -beta[k] / alpha[k]);
            } else if (beta[k] < 0) {
                return;
            }
        }
        if (!(std::isfinite(lo) && std::isfinite(hi))) throw std::logic_error("cone search: unbounded line segment");
        if (lo - 1.0 > hi + 1.0) return;
        const std::int64_t ilo = checked_round(std::floor(lo)) - 1;
        const std::int64_t ihi = checked_round(std::ceil(hi)) + 1;
        std::vector<std::int64_t> c{0, j};
        auto member = [&](std::int64_t i) {
            c[0] = i;
            return (i != 0 || j != 0) && consider(c);
        };
        const double slope = s * a1;
        if (slope >= 0) {
            for (std::int64_t i = ilo; i <= ihi; ++i)
                if (member(i)) break;
        }
        if (slope <= 0) {
            for (std::int64_t i = ihi; i >= ilo; --i)
                if (member(i)) break;
        }
    }

    // Three or more dimensions: Fincke-Pohst enumeration of the reduced scaled lattice
    // over the ball containing the cube ||u|| <= r, ||v / delta|| <= r.
    void scan_ball(double r) {
        const Columns b = columns_of(reduced_scaled_);
        const GramSchmidt gs = gram_schmidt(b);
        const double radius = r * std::sqrt(static_cast<double>(d_)) * (1.0 + 1e-9);
        const double rho2 = radius * radius;
        std::vector<std::int64_t> c(d_, 0);
        std::function<void(std::size_t, double)> rec = [&](std::size_t k, double partial) {
            double center = 0;
            for (std::size_t j = k + 1; j < d_; ++j) center -= gs.mu[j][k] * static_cast<double>(c[j]);
            const double rem = rho2 - partial;
            if (rem < 0) return;
            const double w = std::sqrt(rem / gs.norms[k]);
            const double slack = 1e-9 * (1.0 + std::fabs(center) + w);
            const std::int64_t lo = checked_round(std::ceil(center - w - slack));
            const std::int64_t hi = checked_round(std::floor(center + w + slack));
            for (std::int64_t ci = lo; ci <= hi; ++ci) {
                c[k] = ci;
                const double t = static_cast<double>(ci) - center;
                const double next = partial + gs.norms[k] * t * t;
                if (k == 0) {
                    if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) (void)consider(c);
                } else {
                    rec(k - 1, next);
                }
            }
            c[k] = 0;
        };
        rec(d_ - 1, 0.0);
    }

    ConeSpec<T> cone_;
    std::size_t d_ = 0;
    MatrixD scaled_;
    MatrixI u_;
    MatrixD reduced_scaled_;
    Matrix<T> reduced_;
    std::optional<ConeHit<T>> best_;
};

} // namespace

template <class T>
void ConeSpec<T>::validate() const {
    if (n == 0 || m == 0) throw std::invalid_argument("cone requires n, m >= 1");
    if (!positive(delta)) throw std::invalid_argument("cone requires delta > 0");
    if (side == ConeSide::OneSided && n != 1) throw std::invalid_argument("one-sided cone requires n == 1");
    if (side == ConeSide::OneSidedNoAbs && (n != 1 || m != 1))
        throw std::invalid_argument("unsigned one-sided cone requires n == m == 1");
}

template <class T>
T ConeSpec<T>::unorm(const std::vector<T>& point) const {
    T best(0);
    for (std::size_t i = 0; i < n; ++i) {
        T a = absval(point[i]);
        if (best < a) best = std::move(a);
    }
    return best;
}

template <class T>
T ConeSpec<T>::vnorm(const std::vector<T>& point) const {
    T best(0);
    for (std::size_t i = n; i < n + m; ++i) {
        T a = absval(point[i]);
        if (best < a) best = std::move(a);
    }
    return best;
}

template <class T>
bool ConeSpec<T>::contains(const std::vector<T>& point) const {
    if (point.size() != n + m) throw std::invalid_argument("point dimension does not match the cone");
    switch (side) {
    case ConeSide::TwoSided: {
        const T u = unorm(point);
        return positive(u) && vnorm(point) < delta * u;
    }
    case ConeSide::OneSided:
        return positive(point[0]) && vnorm(point) < delta * point[0];
    case ConeSide::OneSidedNoAbs:
        return positive(point[0]) && point[1] < delta * point[0];
    }
    return false;
}

template struct ConeSpec<double>;
template struct ConeSpec<Rational>;

MatrixI gauss_reduce(const MatrixD& basis) {
    if (basis.rows() != 2 || basis.cols() != 2) throw std::invalid_argument("gauss_reduce expects a 2 x 2 basis");
    Columns b = columns_of(basis);
    MatrixI u = MatrixI::identity(2);
    if (dot(b[0], b[0]) > dot(b[1], b[1])) swap_columns(b, u, 0, 1);
    for (int iter = 0; iter < 10000; ++iter) {
        const double n0 = dot(b[0], b[0]);
        if (!(n0 > 0)) throw std::invalid_argument("degenerate lattice basis");
        const std::int64_t q = checked_round(dot(b[0], b[1]) / n0);
        if (q != 0) axpy_column(b, u, 1, 0, q);
        if (dot(b[1], b[1]) >= n0) break;
        swap_columns(b, u, 0, 1);
    }
    return u;
}

MatrixI lll_reduce(const MatrixD& basis, double lovasz) {
    const std::size_t d = basis.cols();
    if (basis.rows() != d || d == 0) throw std::invalid_argument("lll_reduce expects a square basis");
    Columns b = columns_of(basis);
    MatrixI u = MatrixI::identity(d);
    if (d == 1) return u;
    GramSchmidt gs = gram_schmidt(b);
    std::size_t k = 1;
    for (int iter = 0; k < d && iter < 100000; ++iter) {
        for (std::size_t jj = k; jj-- > 0;) {
            const std::int64_t q = checked_round(gs.mu[k][jj]);
            if (q != 0) {
                axpy_column(b, u, k, jj, q);
                gs = gram_schmidt(b);
            }
        }
        const double m = gs.mu[k][k - 1];
        if (gs.norms[k] >= (lovasz - m * m) * gs.norms[k - 1]) {
            ++k;
        } else {
            swap_columns(b, u, k, k - 1);
            gs = gram_schmidt(b);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return u;
}

ConeHit<double> f_cone(const LatticeD& lattice, const ConeSpec<double>& cone, double search_cap) {
    return ConeSearch<double>(lattice, cone).run(search_cap);
}

ConeHit<Rational> f_cone_exact(const LatticeQ& lattice, const ConeSpec<Rational>& cone, double search_cap) {
    return ConeSearch<Rational>(lattice, cone).run(search_cap);
}

} // namespace mindenom
