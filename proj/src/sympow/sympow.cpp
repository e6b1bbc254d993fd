#include "fuchsian/sympow.hpp"

#include "fuchsian/error.hpp"
#include "fuchsian/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace fuchsian {

std::string StandardEquationSpec::name() const {
    switch (group) {
    case Group::A4: return "A4";
    case Group::S4: return "S4";
    case Group::A5: return "A5";
    case Group::D2n: return "D2n:" + std::to_string(n);
    }
    return "?";
}

StandardEquationSpec standard_spec(Group g, long n) {
    StandardEquationSpec s;
    s.group = g;
    switch (g) {
    case Group::A4:
        s.lambda = Rational(1, 3), s.mu = Rational(1, 2), s.nu = Rational(1, 3);
        break;
    case Group::S4:
        s.lambda = Rational(1, 3), s.mu = Rational(1, 2), s.nu = Rational(1, 4);
        break;
    case Group::A5:
        s.lambda = Rational(1, 3), s.mu = Rational(1, 2), s.nu = Rational(1, 5);
        break;
    case Group::D2n:
        if (n < 2) throw Error(ErrorKind::UnknownGroup, "D2n needs n >= 2, got " + std::to_string(n));
        s.n = n;
        s.lambda = Rational(1, 2), s.mu = Rational(1, 2), s.nu = make_rational(1, n);
        break;
    }
    s.a = (1 - s.lambda * s.lambda) / 4;
    s.b = (1 - s.mu * s.mu) / 4;
    s.c = (s.lambda * s.lambda + s.mu * s.mu - 1 - s.nu * s.nu) / 4;
    return s;
}

namespace {

std::optional<long> parse_long(std::string_view s) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

StandardEquationSpec parse_group(std::string_view tag) {
    if (tag == "A4") return standard_spec(Group::A4);
    if (tag == "S4") return standard_spec(Group::S4);
    if (tag == "A5") return standard_spec(Group::A5);
    if (tag.starts_with("D2n:")) {
        if (auto n = parse_long(tag.substr(4))) return standard_spec(Group::D2n, *n);
    } else if (tag.starts_with("D")) {
        if (auto m = parse_long(tag.substr(1)); m && *m % 2 == 0) return standard_spec(Group::D2n, *m / 2);
    }
    throw Error(ErrorKind::UnknownGroup, "unknown group '" + std::string(tag) + "'");
}

LinearODE standard_equation(const StandardEquationSpec &s) {
    const RationalFunction x = RationalFunction::x();
    const RationalFunction x1 = x - RationalFunction(1);
    RationalFunction a0 = RationalFunction(s.a) / (x * x) + RationalFunction(s.b) / (x1 * x1) +
                          RationalFunction(s.c) / (x * x1);
    return LinearODE({a0, RationalFunction()}, "x");
}

LinearODE derivative_equation(const LinearODE &L) {
    if (L.order() != 2 || !L.coefficient(1).is_zero())
        throw Error(ErrorKind::NotInReducedForm, "expected y'' - f y = 0");
    RationalFunction f = -L.coefficient(0);
    if (f.is_zero()) throw Error(ErrorKind::ZeroPotential, "potential f is zero");
    return LinearODE({-f, -(f.derivative() / f)}, L.variable());
}

LinearODE symmetric_power(const LinearODE &L, int d) {
    if (L.order() != 2) throw Error(ErrorKind::InvalidArgument, "symmetric power needs an order-2 operator");
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "symmetric power degree must be positive");
    const RationalFunction &a0 = L.coefficient(0);
    const RationalFunction &a1 = L.coefficient(1);
    const auto N = static_cast<std::size_t>(d) + 1;

    // w[i][k]: coefficient of y^(d-k) y'^k in the i-th derivative of y^d.
    std::vector<std::vector<RationalFunction>> w(N + 1, std::vector<RationalFunction>(N));
    w[0][0] = RationalFunction(1);
    for (std::size_t i = 0; i < N; ++i) {
        const auto &cur = w[i];
        auto &next = w[i + 1];
        const std::size_t top = std::min(i + 1, N - 1);
        for (std::size_t k = 0; k <= top; ++k) {
            RationalFunction acc;
            if (k <= i && !cur[k].is_zero()) {
                acc += cur[k].derivative();
                if (k > 0 && !a1.is_zero()) acc -= RationalFunction(static_cast<long>(k)) * a1 * cur[k];
            }
            if (k > 0 && !cur[k - 1].is_zero())
                acc += RationalFunction(static_cast<long>(d - static_cast<int>(k) + 1)) * cur[k - 1];
            if (k + 1 < N && k + 1 <= i && !cur[k + 1].is_zero() && !a0.is_zero())
                acc -= RationalFunction(static_cast<long>(k + 1)) * a0 * cur[k + 1];
            next[k] = std::move(acc);
        }
    }

    // w[i] is triangular with constant diagonal d!/(d-i)!.
    std::vector<RationalFunction> c(N);
    for (std::size_t k = N; k-- > 0;) {
        RationalFunction rhs = w[N][k];
        for (std::size_t i = k + 1; i < N; ++i)
            if (!c[i].is_zero() && !w[i][k].is_zero()) rhs -= c[i] * w[i][k];
        c[k] = rhs * RationalFunction(Rational(1) / w[k][k].num()[0]);
    }
    for (auto &ci : c) ci = -ci;
    return LinearODE(std::move(c), L.variable());
}

namespace {

std::optional<BigInt> min_integer_root(const Polynomial &p) {
    std::optional<BigInt> best;
    for (const auto &r : rational_roots(p)) {
        if (r.root.get_den() != 1) continue;
        if (!best || r.root.get_num() < *best) best = r.root.get_num();
    }
    return best;
}

// Polynomial in N whose roots are the possible degrees of solutions near
// infinity: the sum of lc(a_i) [N]_i over the terms of highest degree
// N - i - v(a_i). Agrees with the indicial polynomial when infinity is
// regular and stays valid when it is not.
Polynomial dominant_polynomial_at_infinity(const LinearODE &L) {
    const int n = L.order();
    std::optional<int> top;
    for (int i = 0; i <= n; ++i) {
        const auto &a = L.coefficient(i);
        if (a.is_zero()) continue;
        const int shift = -i - valuation_at_infinity(a);
        if (!top || shift > *top) top = shift;
    }
    Polynomial out;
    for (int i = 0; i <= n; ++i) {
        const auto &a = L.coefficient(i);
        if (a.is_zero() || -i - valuation_at_infinity(a) != *top) continue;
        Polynomial ff = Polynomial::constant(a.num().leading() / a.den().leading());
        for (int k = 0; k < i; ++k) ff = ff * Polynomial::linear(Rational(k));
        out += ff;
    }
    return out;
}

}  // namespace

SolutionBounds rational_solution_bounds(const LinearODE &L) {
    const auto places = singular_places(L);
    bool regular_at_infinity = true;
    for (const auto &p : places) {
        if (is_fuchsian_at(L, p)) continue;
        if (!p.is_infinity())
            throw Error(ErrorKind::NotFuchsian, "operator is not Fuchsian at " + p.label(L.variable()));
        regular_at_infinity = false;
    }
    SolutionBounds b;
    b.denominator = Polynomial::constant(Rational(1));
    std::optional<BigInt> at_inf = BigInt(0);
    for (const auto &p : places) {
        std::optional<BigInt> m;
        if (p.is_infinity() && !regular_at_infinity) {
            // Roots are degrees N, exponents are -N.
            for (const auto &r : rational_roots(dominant_polynomial_at_infinity(L)))
                if (r.root.get_den() == 1 && (!m || -r.root.get_num() < *m)) m = BigInt(-r.root.get_num());
        } else {
            m = min_integer_root(indicial_norm(indicial_polynomial(L, p)));
        }
        if (!m) {
            b.possible = false;
            return b;
        }
        if (p.is_infinity()) at_inf = m;
        else if (*m < 0) b.denominator *= p.min_poly.pow(static_cast<unsigned>(-m->get_si()));
    }
    BigInt bound = BigInt(b.denominator.degree()) - *at_inf;
    if (bound < 0) {
        b.possible = false;
        return b;
    }
    b.degree_bound = static_cast<int>(bound.get_si());
    return b;
}

InvariantBasis rational_solutions(const LinearODE &L) {
    InvariantBasis out;
    SolutionBounds bounds = rational_solution_bounds(L);
    if (!bounds.possible) return out;
    const int n = L.order();
    const Polynomial &D = bounds.denominator;

    // L(P/D) = sum_j b_j P^(j) / D with b_j = sum_{i>=j} a_i C(i,j) D (1/D)^(i-j).
    // With s = rad(D), D (1/D)^(m) = T_m / s^m, and with u the radical of the
    // coefficient denominators a_i = A_i / u^(n-i) at regular finite places,
    // so b_j = sum_i A_i C(i,j) T_{i-j} (u/s)^(i-j) / u^(n-j).
    auto radical = [](const Polynomial &p) {
        return p.is_constant() ? Polynomial::constant(Rational(1)) : exact_quotient(p, poly_gcd(p, p.derivative()));
    };
    const Polynomial s = radical(D);
    const Polynomial ds = s.derivative();
    const Polynomial E = D.is_constant() ? Polynomial() : exact_quotient(s * D.derivative(), D);
    std::vector<Polynomial> T(static_cast<std::size_t>(n) + 1);
    T[0] = Polynomial::constant(Rational(1));
    for (int m = 0; m < n; ++m) T[m + 1] = T[m].derivative() * s - T[m] * (E + ds * Rational(m));

    Polynomial Q = Polynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i) Q = poly_lcm(Q, L.coefficient(i).den());
    const Polynomial u = radical(Q);
    const Polynomial w = exact_quotient(u, s);
    std::vector<Polynomial> upow(static_cast<std::size_t>(n) + 1), wpow(static_cast<std::size_t>(n) + 1);
    upow[0] = wpow[0] = Polynomial::constant(Rational(1));
    for (int m = 1; m <= n; ++m) {
        upow[m] = upow[m - 1] * u;
        wpow[m] = wpow[m - 1] * w;
    }
    std::vector<Polynomial> A(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        const auto &a = L.coefficient(i);
        A[i] = a.num() * exact_quotient(upow[n - i], a.den());
    }
    A[n] = Polynomial::constant(Rational(1));

    std::vector<Polynomial> B(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        BigInt binom = 1;
        Polynomial acc;
        for (int i = j; i <= n; ++i) {
            if (i > j) binom = binom * i / (i - j);
            if (A[i].is_zero() || T[i - j].is_zero()) continue;
            acc += A[i] * T[i - j] * wpow[i - j] * Rational(binom);
        }
        B[j] = acc * upow[j];
    }

    const int N = bounds.degree_bound;
    std::vector<Polynomial> cols;
    int rows = 0;
    for (int k = 0; k <= N; ++k) {
        Polynomial col;
        BigInt ff = 1;  // k (k-1) ... (k-j+1)
        for (int j = 0; j <= n && j <= k; ++j) {
            if (j > 0) ff *= k - j + 1;
            if (!B[j].is_zero()) col += B[j] * Polynomial::monomial(Rational(ff), k - j);
        }
        rows = std::max(rows, col.degree() + 1);
        cols.push_back(std::move(col));
    }
    Matrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(N) + 1));
    for (int k = 0; k <= N; ++k)
        for (int i = 0; i <= cols[k].degree(); ++i) m[i][k] = cols[k][i];

    for (auto &v : nullspace(m, N + 1))
        out.basis.emplace_back(Polynomial(std::move(v)), D);
    return out;
}

LineBundle line_bundle_degree(const std::vector<RationalFunction> &basis) {
    if (basis.empty()) throw Error(ErrorKind::EmptyBasis, "empty basis");
    Polynomial l = Polynomial::constant(Rational(1));
    for (const auto &f : basis) {
        if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "basis element is zero");
        l = poly_lcm(l, f.den());
    }
    std::vector<Polynomial> gens;
    Polynomial g;
    for (const auto &f : basis) {
        gens.push_back(f.num() * exact_quotient(l, f.den()));
        g = poly_gcd(g, gens.back());
    }
    LineBundle out;
    for (auto &p : gens) {
        p = exact_quotient(p, g);
        out.degree = std::max(out.degree, p.degree());
    }
    out.generators = std::move(gens);
    return out;
}

int default_degree(const StandardEquationSpec &spec) {
    switch (spec.group) {
    case Group::A4: return 24;
    case Group::S4: return 24;
    case Group::A5: return 60;
    case Group::D2n: return static_cast<int>(spec.n % 2 == 0 ? 2 * spec.n : 4 * spec.n);
    }
    return 0;
}

RuledSurfaceDescriptor ruled_surface(const StandardEquationSpec &spec, int d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
    const LinearODE st = standard_equation(spec);
    RuledSurfaceDescriptor out;
    out.d = d;
    auto side = [&](const LinearODE &L, const char *which) {
        InvariantBasis inv = rational_solutions(symmetric_power(L, d));
        if (inv.basis.empty())
            throw Error(ErrorKind::NoInvariants, std::string("no invariants of degree ") + std::to_string(d) +
                                                     " for " + which + " of St:" + spec.name());
        return std::make_pair(line_bundle_degree(inv.basis), static_cast<int>(inv.basis.size()));
    };
    auto [lb, dim] = side(st, "the solutions");
    auto [lbp, dimp] = side(derivative_equation(st), "the derivatives");
    out.degL = lb.degree;
    out.degLprime = lbp.degree;
    out.twist = std::abs(out.degLprime - out.degL);
    out.generatorsL = std::move(lb.generators);
    out.generatorsLprime = std::move(lbp.generators);
    out.dimL = dim;
    out.dimLprime = dimp;
    return out;
}

}  // namespace fuchsian
