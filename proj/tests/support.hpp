#pragma once

#include "fuchsian/analysis.hpp"
#include "fuchsian/sympow.hpp"
#include "fuchsian/transform.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace fuchsian;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    Rational rational(long num_range, long den_max) {
        return make_rational(integer(-num_range, num_range), integer(1, den_max));
    }
    bool coin() { return integer(0, 1) == 1; }
};

// Monic operator with regular singular points at `points` and at infinity
// whose indicial polynomials are prod (r - exponent). The last exponent at
// infinity is forced by the Fuchs relation and stored in `at_infinity`.
struct PrescribedOperator {
    LinearODE L;
    std::vector<Rational> points;
    std::vector<std::vector<Rational>> exponents;  // per finite point
    std::vector<Rational> at_infinity;
};

// Coefficients e_i with prod (s + roots) = sum e_i [s]_i.
inline std::vector<Rational> falling_expansion(const std::vector<Rational> &roots, bool negate) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto &r : roots) p = p * (negate ? Polynomial::linear(-r) : Polynomial::linear(r));
    const int n = p.degree();
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    // Peel off the top falling factorial repeatedly.
    for (int i = n; i >= 0; --i) {
        Rational c = p[i];
        out[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        Polynomial ff = Polynomial::constant(Rational(1));
        for (int k = 0; k < i; ++k) ff = ff * Polynomial::linear(Rational(k));
        p = p - ff * c;
    }
    return out;
}

inline Polynomial lagrange(const std::vector<Rational> &xs, const std::vector<Rational> &ys) {
    Polynomial acc;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        Polynomial term = Polynomial::constant(ys[j]);
        for (std::size_t m = 0; m < xs.size(); ++m)
            if (m != j) term = term * Polynomial::linear(xs[m]) * (Rational(1) / (xs[j] - xs[m]));
        acc += term;
    }
    return acc;
}

inline PrescribedOperator prescribed_operator(const std::vector<Rational> &points,
                                              const std::vector<std::vector<Rational>> &exps,
                                              std::vector<Rational> inf_partial, Rng &rng,
                                              std::string var = "x") {
    const int n = static_cast<int>(exps.front().size());
    const int k = static_cast<int>(points.size());
    Polynomial D = Polynomial::constant(Rational(1));
    for (const auto &a : points) D = D * Polynomial::linear(a);
    const Polynomial dD = D.derivative();

    // c[j][i]: coefficient of [r]_i in the indicial polynomial at points[j].
    std::vector<std::vector<Rational>> c;
    for (const auto &e : exps) c.push_back(falling_expansion(e, false));

    std::vector<Polynomial> P(static_cast<std::size_t>(n));
    // P_{n-1} is fixed by interpolation; its leading coefficient closes the
    // exponents at infinity.
    for (int i = n - 1; i >= 0; --i) {
        std::vector<Rational> ys;
        for (int j = 0; j < k; ++j) {
            Rational s = dD.evaluate(points[j]);
            Rational v = c[j][i];
            for (int m = 0; m < n - i; ++m) v *= s;
            ys.push_back(v);
        }
        Polynomial Q = lagrange(points, ys);
        if (i == n - 1) {
            Rational lead = Q.degree() == k - 1 ? Q.leading() : Rational(0);
            Rational sum;
            for (const auto &r : inf_partial) sum += r;
            inf_partial.push_back(lead - make_rational(n * (n - 1), 2) - sum);
            P[static_cast<std::size_t>(i)] = Q;
            continue;
        }
        const auto ell = falling_expansion(inf_partial, true);
        const int top = (n - i) * (k - 1);
        std::vector<Rational> rc(static_cast<std::size_t>(top - k) + 1);
        for (auto &x : rc) x = rng.rational(5, 3);
        rc.back() = ell[static_cast<std::size_t>(i)];
        P[static_cast<std::size_t>(i)] = Q + D * Polynomial(rc);
    }
    std::vector<RationalFunction> a;
    for (int i = 0; i < n; ++i) a.emplace_back(P[static_cast<std::size_t>(i)], D.pow(static_cast<unsigned>(n - i)));
    return PrescribedOperator{LinearODE(std::move(a), std::move(var)), points, exps, inf_partial};
}

// Random Fuchsian operator of order n with k rational singular points.
inline PrescribedOperator random_fuchsian(Rng &rng, int n, int k, long den_max = 4) {
    std::vector<Rational> points;
    while (static_cast<int>(points.size()) < k) {
        Rational p(rng.integer(-4, 4));
        if (rng.coin()) p = make_rational(rng.integer(-6, 6), 2);
        bool dup = false;
        for (const auto &q : points) dup = dup || q == p;
        if (!dup) points.push_back(p);
    }
    std::vector<std::vector<Rational>> exps(static_cast<std::size_t>(k));
    for (auto &e : exps)
        for (int i = 0; i < n; ++i) e.push_back(rng.rational(6, den_max));
    std::vector<Rational> inf;
    for (int i = 0; i + 1 < n; ++i) inf.push_back(rng.rational(6, den_max));
    return prescribed_operator(points, exps, inf, rng);
}

// Random non-constant map of degree at most max_deg with small integer
// coefficients.
inline RationalMap random_map(Rng &rng, int max_deg) {
    for (;;) {
        auto poly = [&](int deg) {
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(rng.integer(-3, 3));
            return Polynomial(c);
        };
        Polynomial num = poly(static_cast<int>(rng.integer(1, max_deg)));
        Polynomial den = rng.coin() ? poly(static_cast<int>(rng.integer(0, max_deg))) : Polynomial::constant(Rational(1));
        if (num.is_zero() || den.is_zero()) continue;
        RationalFunction f(num, den);
        if (f.is_constant()) continue;
        return RationalMap(f);
    }
}

// Taylor coefficients of f at x0 up to (x - x0)^(terms-1).
inline std::vector<Rational> taylor(const RationalFunction &f, const Rational &x0, int terms) {
    Polynomial num = f.num().taylor_shift(x0);
    Polynomial den = f.den().taylor_shift(x0);
    std::vector<Rational> out(static_cast<std::size_t>(terms));
    const Rational d0 = den[0];
    for (int m = 0; m < terms; ++m) {
        Rational s = num[m];
        for (int j = 1; j <= m && j <= den.degree(); ++j) s -= den[j] * out[static_cast<std::size_t>(m - j)];
        out[static_cast<std::size_t>(m)] = s / d0;
    }
    return out;
}

using Series = std::vector<Rational>;

inline Series series_mul(const Series &a, const Series &b) {
    const std::size_t n = std::min(a.size(), b.size());
    Series out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Series series_derivative(const Series &a) {
    Series out(a.size() > 0 ? a.size() - 1 : 0);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
    return out;
}

// Solution of the monic L at the ordinary point x0 with the given initial
// derivatives, as Taylor coefficients.
inline Series solution_series(const LinearODE &L, const Rational &x0, const std::vector<Rational> &init,
                              int terms) {
    const int n = L.order();
    std::vector<Series> a;
    for (int i = 0; i < n; ++i) a.push_back(taylor(L.coefficient(i), x0, terms));
    Series y(static_cast<std::size_t>(terms));
    Rational fact(1);
    for (int i = 0; i < n; ++i) {
        if (i > 0) fact *= i;
        y[static_cast<std::size_t>(i)] = init[static_cast<std::size_t>(i)] / fact;
    }
    // y^(n) = -sum a_i y^(i); compare coefficients of (x-x0)^m.
    for (int m = 0; m + n < terms; ++m) {
        Rational rhs;
        for (int i = 0; i < n; ++i) {
            // coefficient of t^m in a_i * y^(i)
            for (int j = 0; j <= m; ++j) {
                Rational c = y[static_cast<std::size_t>(j + i)];
                if (c == 0) continue;
                for (int k = 1; k <= i; ++k) c *= (j + k);
                rhs -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - j)] * c;
            }
        }
        Rational c(1);
        for (int k = 1; k <= n; ++k) c *= (m + k);
        y[static_cast<std::size_t>(m + n)] = rhs / c;
    }
    return y;
}

// L applied to a series; the result is exact for the first
// terms - order coefficients.
inline Series apply_series(const LinearODE &L, const Rational &x0, const Series &y) {
    const int terms = static_cast<int>(y.size());
    const int n = L.order();
    Series acc(static_cast<std::size_t>(terms - n));
    Series dy = y;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) dy = series_derivative(dy);
        Series a = i == n ? Series{Rational(1)} : taylor(L.coefficient(i), x0, terms);
        a.resize(static_cast<std::size_t>(terms));
        Series prod = series_mul(a, dy);
        for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += prod[m];
    }
    return acc;
}

// Independent rank over Q by plain Gauss-Jordan on rationals.
inline int rank_q(std::vector<std::vector<Rational>> m) {
    int r = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

// Dimension of the span of {x^k/D : k <= N} annihilated by L, found by
// applying L to each candidate directly and counting linear relations among
// the images.
inline int brute_force_dimension(const LinearODE &L, const Polynomial &D, int N) {
    if (N < 0) return 0;
    std::vector<RationalFunction> images;
    Polynomial common = Polynomial::constant(Rational(1));
    for (int k = 0; k <= N; ++k) {
        images.push_back(L.apply(RationalFunction(Polynomial::monomial(Rational(1), k), D)));
        common = poly_lcm(common, images.back().den());
    }
    std::vector<Polynomial> nums;
    int deg = 0;
    for (const auto &f : images) {
        nums.push_back(f.num() * exact_quotient(common, f.den()));
        deg = std::max(deg, nums.back().degree());
    }
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(deg) + 1,
                                            std::vector<Rational>(nums.size()));
    for (std::size_t k = 0; k < nums.size(); ++k)
        for (int i = 0; i <= nums[k].degree(); ++i) rows[static_cast<std::size_t>(i)][k] = nums[k][i];
    return static_cast<int>(nums.size()) - rank_q(rows);
}

// Rational roots by enumerating p/q with p | a_0 and q | a_n.
inline std::vector<Rational> divisor_roots(const Polynomial &a) {
    Polynomial p = a;
    std::vector<Rational> out;
    while (p.degree() > 0 && p[0] == 0) {
        out.emplace_back(0);
        p = exact_quotient(p, Polynomial::x());
    }
    if (p.degree() <= 0) return out;
    auto [content, ints] = p.primitive_part();
    (void)content;
    auto divisors = [](BigInt v) {
        v = abs(v);
        std::vector<BigInt> d;
        for (BigInt i = 1; i * i <= v; ++i)
            if (v % i == 0) {
                d.push_back(i);
                if (i * i != v) d.push_back(v / i);
            }
        return d;
    };
    std::vector<Rational> cands;
    for (const auto &num : divisors(ints.front()))
        for (const auto &den : divisors(ints.back())) {
            cands.push_back(make_rational(num, den));
            cands.push_back(-make_rational(num, den));
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto &c : cands) {
        while (p.degree() > 0 && p.evaluate(c) == 0) {
            out.push_back(c);
            p = exact_quotient(p, Polynomial::linear(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Order-2 operator with the rational solutions s1, s2.
inline LinearODE operator_with_solutions(const RationalFunction &s1, const RationalFunction &s2,
                                         std::string var = "x") {
    RationalFunction d1 = s1.derivative(), d2 = s2.derivative();
    RationalFunction dd1 = d1.derivative(), dd2 = d2.derivative();
    RationalFunction W = s1 * d2 - s2 * d1;
    // det [[y, y', y''], [s1, s1', s1''], [s2, s2', s2'']] / W
    RationalFunction c0 = d1 * dd2 - dd1 * d2;
    RationalFunction c1 = -(s1 * dd2 - dd1 * s2);
    return LinearODE::from_operator(std::vector<RationalFunction>{c0, c1, W}, std::move(var));
}

}  // namespace testing_support
