#include "fuchsian/transform.hpp"

#include "fuchsian/error.hpp"

#include <algorithm>

namespace fuchsian {

RationalMap::RationalMap(RationalFunction f) : f_(std::move(f)) {
    if (f_.is_constant()) throw Error(ErrorKind::DegenerateMap, "map is constant");
    degree_ = std::max(f_.num().degree(), f_.den().degree());
}

LinearODE pullback(const LinearODE &L0, const RationalMap &map) {
    const int n = L0.order();
    const RationalFunction &f = map.function();
    const RationalFunction df = f.derivative();

    std::vector<RationalFunction> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[i] = L0.coefficient(i).compose(f);

    // v[k][j]: coefficient of y^(j)(f(x)) in d^k/dx^k y(f(x)).
    std::vector<std::vector<RationalFunction>> v(static_cast<std::size_t>(n + 1),
                                                 std::vector<RationalFunction>(n));
    v[0][0] = RationalFunction(1);
    for (int k = 0; k < n; ++k) {
        std::vector<RationalFunction> next(static_cast<std::size_t>(n));
        RationalFunction top;
        for (int j = 0; j < n; ++j) {
            const RationalFunction &c = v[k][j];
            if (c.is_zero()) continue;
            next[j] += c.derivative();
            if (j + 1 < n) next[j + 1] += c * df;
            else top = c * df;
        }
        if (!top.is_zero())
            for (int j = 0; j < n; ++j)
                if (!a[j].is_zero()) next[j] -= top * a[j];
        v[k + 1] = std::move(next);
    }

    // v[k] is triangular with v[k][k] = f'^k; solve v[n] = sum lambda_k v[k].
    std::vector<RationalFunction> lambda(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        RationalFunction rhs = v[n][j];
        for (int k = j + 1; k < n; ++k)
            if (!lambda[k].is_zero() && !v[k][j].is_zero()) rhs -= lambda[k] * v[k][j];
        lambda[j] = rhs / v[j][j];
    }
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (auto &l : lambda) coeffs.push_back(-l);
    return LinearODE(std::move(coeffs), L0.variable());
}

LinearODE exp_product(const LinearODE &L, const RationalFunction &r) {
    // Solutions exp(int r) y: substitute D -> D - r.
    const int n = L.order();
    DiffOperator P = DiffOperator::identity();
    DiffOperator acc = P.scaled(L.coefficient(0));
    for (int i = 1; i <= n; ++i) {
        DiffOperator next = P.derive();
        next += P.scaled(-r);
        P = std::move(next);
        acc += P.scaled(L.coefficient(i));
    }
    return LinearODE::from_operator(acc, L.variable());
}

bool twist_is_irregular(const RationalFunction &r) {
    if (r.is_zero()) return false;
    if (valuation_at_infinity(r) < 1) return true;
    const Polynomial &d = r.den();
    return !poly_gcd(d, d.derivative()).is_constant();
}

RationalFunction normalizing_twist(const LinearODE &L) {
    const int n = L.order();
    return L.coefficient(n - 1) * RationalFunction(Rational(1, n));
}

LinearODE projective_normalize(const LinearODE &L) {
    RationalFunction r = normalizing_twist(L);
    if (r.is_zero()) return L;
    return exp_product(L, r);
}

bool projectively_equivalent(const LinearODE &L1, const LinearODE &L2) {
    if (L1.order() != L2.order())
        throw Error(ErrorKind::OrderMismatch, "operators have orders " + std::to_string(L1.order()) +
                                                  " and " + std::to_string(L2.order()));
    return projective_normalize(L1) == projective_normalize(L2);
}

int ramification_index(const RationalMap &map, const Place &p) {
    RationalFunction f = map.function();
    Polynomial q = p.is_infinity() ? Polynomial::x() : p.min_poly;
    if (p.is_infinity()) f = change_to_infinity(f);
    int v = valuation(f, q);
    if (v < 0) return -v;
    return 1 + valuation(f.derivative(), q);
}

namespace {

// num^d q0(num/den) homogenized, d = deg q0.
Polynomial homogenized(const Polynomial &q0, const Polynomial &num, const Polynomial &den) {
    const int d = q0.degree();
    Polynomial acc;
    for (int k = 0; k <= d; ++k) {
        if (q0[k] == 0) continue;
        acc = acc + Polynomial::constant(q0[k]) * num.pow(static_cast<unsigned>(k)) *
                        den.pow(static_cast<unsigned>(d - k));
    }
    return acc;
}

}  // namespace

std::vector<std::pair<Place, int>> fibre(const RationalMap &map, const Place &target) {
    const RationalFunction &f = map.function();
    std::vector<std::pair<Place, int>> out;
    Polynomial h;
    if (target.is_infinity()) {
        h = f.den();
        if (f.num().degree() > f.den().degree())
            out.emplace_back(Place::infinity(), f.num().degree() - f.den().degree());
    } else {
        h = homogenized(target.min_poly, f.num(), f.den());
        if (f.num().degree() <= f.den().degree()) {
            Rational at_inf = f.num().degree() == f.den().degree() ? f.num().leading() / f.den().leading()
                                                                   : Rational(0);
            if (target.min_poly.evaluate(at_inf) == 0)
                out.emplace_back(Place::infinity(),
                                 valuation_at_infinity(f - RationalFunction(at_inf)));
        }
    }
    if (!h.is_constant())
        for (const auto &sf : squarefree_factor(h))
            for (const auto &pl : places_of(sf.factor)) out.emplace_back(pl, sf.multiplicity);
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return place_less(a.first, b.first); });
    return out;
}

RationalMap compose(const RationalMap &f, const RationalMap &g) {
    return RationalMap(f.function().compose(g.function()));
}

}  // namespace fuchsian
