#include "fuchsian/analysis.hpp"

#include <algorithm>

namespace fuchsian {

namespace {

// [r]_i = r (r-1) ... (r-i+1)
std::vector<Polynomial> falling_factorials(int n) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(Polynomial::constant(Rational(1)));
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * Polynomial::linear(Rational(i - 1)));
    return out;
}

}  // namespace

std::vector<Place> places_of(const Polynomial &q) {
    std::vector<Place> out;
    Polynomial rest = q.monic();
    for (const auto &r : rational_roots(rest)) {
        out.push_back(Place::at(r.root));
        rest = exact_quotient(rest, Polynomial::linear(r.root));
    }
    if (rest.degree() > 0) out.push_back(Place::finite(rest.monic()));
    return out;
}

namespace {

// Resultant of the monic q with h as the determinant of multiplication by h.
Rational norm_of(const Polynomial &h, const Polynomial &q) {
    const int d = q.degree();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    Polynomial col = divmod(h, q).remainder;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[i];
        col = divmod(col * Polynomial::x(), q).remainder;
    }
    Rational det(1);
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
            det = -det;
        }
        const Rational p = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        det *= p;
        for (int r = c + 1; r < d; ++r) {
            Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / p;
            if (f == 0) continue;
            for (int k = c; k < d; ++k)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        }
    }
    return det;
}

// Newton interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational> &xs, std::vector<Rational> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Polynomial acc = Polynomial::constant(ys[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * Polynomial::linear(xs[i]);
        acc += Polynomial::constant(ys[i]);
    }
    return acc;
}

Polynomial evaluate_indicial(const IndicialPolynomial &ind, const Rational &r) {
    Polynomial acc;
    for (std::size_t k = ind.coefficients.size(); k-- > 0;) {
        acc = acc * r;
        acc += ind.coefficients[k];
    }
    return divmod(acc, ind.modulus).remainder;
}

}  // namespace

Polynomial indicial_norm(const IndicialPolynomial &ind) {
    const Polynomial &q = ind.modulus;
    if (q.degree() == 1) return ind.as_rational();
    const int npts = static_cast<int>(ind.coefficients.size() - 1) * q.degree() + 1;
    std::vector<Rational> xs, ys;
    for (int k = 0; k < npts; ++k) {
        xs.emplace_back(k);
        ys.push_back(norm_of(evaluate_indicial(ind, xs.back()), q));
    }
    return interpolate(xs, ys);
}

namespace {

// Looks for a rational r whose indicial value is a zero divisor: such an r is
// an exponent at some but not all points of the place.
void split_on_partial_roots(const IndicialPolynomial &ind) {
    const Polynomial &q = ind.modulus;
    Polynomial norm = indicial_norm(ind);
    if (norm.is_zero()) return;
    for (const auto &root : rational_roots(norm)) {
        Polynomial h = evaluate_indicial(ind, root.root);
        if (h.is_zero()) continue;
        Polynomial g = poly_gcd(h, q);
        if (g.degree() > 0 && g.degree() < q.degree())
            throw PlaceSplit(ind.place, g, exact_quotient(q, g).monic());
    }
}

}  // namespace

Place Place::finite(Polynomial q) {
    Place p;
    p.kind = Kind::Finite;
    if (q.degree() < 1 || !poly_gcd(q, q.derivative()).is_one())
        throw Error(ErrorKind::InvalidArgument, "place polynomial must be non-constant and squarefree");
    p.min_poly = q.monic();
    if (p.min_poly.degree() == 1) p.point = -p.min_poly[0];
    return p;
}

Place Place::at(const Rational &point) { return finite(Polynomial::linear(point)); }

Place Place::infinity() { return Place{}; }

std::string Place::label(std::string_view var) const {
    if (is_infinity()) return "infinity";
    if (point) return point->get_str();
    return min_poly.to_string(var);
}

bool place_less(const Place &a, const Place &b) {
    auto rank = [](const Place &p) { return p.is_infinity() ? 2 : (p.point ? 0 : 1); };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 0) return *a.point < *b.point;
    if (ra == 2) return false;
    if (a.min_poly.degree() != b.min_poly.degree()) return a.min_poly.degree() < b.min_poly.degree();
    const auto &ca = a.min_poly.coefficients();
    const auto &cb = b.min_poly.coefficients();
    for (std::size_t k = ca.size(); k-- > 0;) {
        if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
    return false;
}

std::vector<Polynomial> IndicialPolynomial::coordinates() const {
    const int d = modulus.degree();
    std::vector<Polynomial> out;
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> c(coefficients.size());
        for (std::size_t k = 0; k < coefficients.size(); ++k) c[k] = coefficients[k][j];
        out.emplace_back(std::move(c));
    }
    return out;
}

Polynomial IndicialPolynomial::as_rational() const { return coordinates().front(); }

PlaceSplit::PlaceSplit(const Place &place, Polynomial first, Polynomial second)
    : Error(ErrorKind::NonRationalExponent,
            "place " + place.label() + " splits as (" + first.to_string() + ")*(" +
                second.to_string() + ")"),
      first_(std::move(first)), second_(std::move(second)) {}

std::vector<Polynomial> coprime_basis(const std::vector<Polynomial> &polys) {
    std::vector<Polynomial> basis;
    std::vector<Polynomial> work;
    for (const auto &p : polys)
        if (p.degree() > 0) work.push_back(p.monic());
    while (!work.empty()) {
        Polynomial f = std::move(work.back());
        work.pop_back();
        if (f.degree() <= 0) continue;
        bool merged = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial g = poly_gcd(f, basis[i]);
            if (g.degree() <= 0) continue;
            Polynomial b = std::move(basis[i]);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            work.push_back(exact_quotient(b, g).monic());
            work.push_back(exact_quotient(f, g).monic());
            work.push_back(g);
            merged = true;
            break;
        }
        if (!merged) basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

// Numerators of the t = 1/x operator over a common denominator, c_0 .. c_n.
std::vector<Polynomial> numerators_at_infinity(const LinearODE &L) {
    const int n = L.order();
    // Clear denominators: p_i = a_i * D, p_n = D.
    Polynomial D = Polynomial::constant(Rational(1));
    for (const auto &a : L.coefficients()) D = poly_lcm(D, a.den());
    std::vector<Polynomial> p(static_cast<std::size_t>(n) + 1);
    int m = D.degree();
    for (int i = 0; i < n; ++i) {
        const auto &a = L.coefficient(i);
        if (a.is_zero()) continue;
        p[static_cast<std::size_t>(i)] = a.num() * exact_quotient(D, a.den());
        m = std::max(m, p[static_cast<std::size_t>(i)].degree());
    }
    p[static_cast<std::size_t>(n)] = D;
    // P_i(t) = t^m p_i(1/t).
    std::vector<Polynomial> P(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const auto &pi = p[static_cast<std::size_t>(i)];
        if (!pi.is_zero()) P[static_cast<std::size_t>(i)] = pi.reversed(m);
    }
    // (d/dx)^i = sum_k alpha[i][k] t^(i+k) (d/dt)^k.
    std::vector<std::vector<Rational>> alpha(static_cast<std::size_t>(n) + 1);
    alpha[0] = {Rational(1)};
    for (int i = 1; i <= n; ++i) {
        auto &cur = alpha[static_cast<std::size_t>(i)];
        const auto &prev = alpha[static_cast<std::size_t>(i - 1)];
        cur.assign(static_cast<std::size_t>(i) + 1, Rational(0));
        for (int k = 0; k <= i; ++k) {
            Rational v(0);
            if (k <= i - 1) v -= Rational(i - 1 + k) * prev[static_cast<std::size_t>(k)];
            if (k >= 1) v -= prev[static_cast<std::size_t>(k - 1)];
            cur[static_cast<std::size_t>(k)] = v;
        }
    }
    std::vector<Polynomial> full(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Polynomial acc;
        for (int i = k; i <= n; ++i) {
            const auto &Pi = P[static_cast<std::size_t>(i)];
            const Rational &c = alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (Pi.is_zero() || c == 0) continue;
            acc += Pi * Polynomial::monomial(c, i + k);
        }
        full[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return full;
}

int trailing_order(const Polynomial &p) {
    int k = 0;
    while (p[k] == 0) ++k;
    return k;
}

}  // namespace

LinearODE operator_at_infinity(const LinearODE &L) {
    const int n = L.order();
    const auto full = numerators_at_infinity(L);
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    const Polynomial &lead = full[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) coeffs.emplace_back(full[static_cast<std::size_t>(k)], lead);
    return LinearODE(std::move(coeffs), L.variable());
}

std::vector<Place> singular_places(const LinearODE &L) {
    std::vector<Polynomial> dens;
    for (const auto &a : L.coefficients())
        if (a.den().degree() > 0 && std::find(dens.begin(), dens.end(), a.den()) == dens.end())
            dens.push_back(a.den());
    std::vector<Polynomial> factors;
    for (const auto &d : dens)
        for (const auto &sf : squarefree_factor(d)) factors.push_back(sf.factor);
    std::vector<Place> out;
    for (const auto &b : coprime_basis(factors)) {
        auto ps = places_of(b);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    const auto full = numerators_at_infinity(L);
    const int lead_order = trailing_order(full.back());
    for (std::size_t k = 0; k + 1 < full.size(); ++k) {
        if (!full[k].is_zero() && trailing_order(full[k]) < lead_order) {
            out.push_back(Place::infinity());
            break;
        }
    }
    std::sort(out.begin(), out.end(), place_less);
    return out;
}

bool is_fuchsian_at(const LinearODE &L, const Place &p) {
    const int n = L.order();
    if (p.is_infinity()) {
        for (int i = 0; i < n; ++i) {
            const auto &a = L.coefficient(i);
            if (!a.is_zero() && valuation_at_infinity(a) < n - i) return false;
        }
        return true;
    }
    for (int i = 0; i < n; ++i) {
        const auto &a = L.coefficient(i);
        if (a.is_zero() || a.den().degree() <= 0) continue;
        if (valuation(a, p.min_poly) < -(n - i)) return false;
    }
    return true;
}

bool is_fuchsian(const LinearODE &L) {
    for (const auto &p : singular_places(L))
        if (!is_fuchsian_at(L, p)) return false;
    return true;
}

IndicialPolynomial indicial_polynomial(const LinearODE &L, const Place &p) {
    if (!is_fuchsian_at(L, p))
        throw Error(ErrorKind::NotFuchsian, "operator is not Fuchsian at " + p.label(L.variable()));
    const int n = L.order();
    if (p.is_infinity()) {
        // y = x^(-r): L(y) ~ x^(-r-n) sum_i c_i [-r]_i with c_i = lim x^(n-i) a_i.
        const auto ff = falling_factorials(n);
        const Polynomial minus_r = Polynomial::monomial(Rational(-1), 1);
        Polynomial acc;
        for (int i = 0; i <= n; ++i) {
            const auto &a = L.coefficient(i);
            if (a.is_zero() || valuation_at_infinity(a) > n - i) continue;
            acc += ff[static_cast<std::size_t>(i)].compose(minus_r) * (a.num().leading() / a.den().leading());
        }
        if (n % 2 == 1) acc = -acc;
        std::vector<Polynomial> coeffs(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = Polynomial::constant(acc[k]);
        return IndicialPolynomial{p, Polynomial::x(), std::move(coeffs)};
    }
    const Polynomial &q = p.min_poly;
    // c_i = q^(n-i) a_i / q'^(n-i) at the points of q.
    auto dq_inv = residue_invert(ResidueElement(q, q.derivative()));
    const ResidueElement scale = std::get<ResidueElement>(dq_inv);
    const auto ff = falling_factorials(n);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(n) + 1);
    ResidueElement scale_pow(q, Polynomial::constant(Rational(1)));
    for (int i = n; i >= 0; --i) {
        Polynomial ci;
        if (i == n) {
            ci = Polynomial::constant(Rational(1));
        } else {
            scale_pow = scale_pow * scale;
            const auto &a = L.coefficient(i);
            if (a.is_zero()) continue;
            RationalFunction f = a * RationalFunction(q.pow(static_cast<unsigned>(n - i)));
            auto r = residue_of(f, q);
            if (std::holds_alternative<SplitEvent>(r))
                throw Error(ErrorKind::NotFuchsian, "operator is not Fuchsian at " + p.label(L.variable()));
            ci = (std::get<ResidueElement>(r) * scale_pow).value();
        }
        if (ci.is_zero()) continue;
        const auto &fi = ff[static_cast<std::size_t>(i)];
        for (int k = 0; k <= i; ++k) {
            if (fi[k] == 0) continue;
            coeffs[static_cast<std::size_t>(k)] += ci * fi[k];
        }
    }
    for (auto &c : coeffs) c = divmod(c, q).remainder;
    return IndicialPolynomial{p, q, std::move(coeffs)};
}

ExponentReport make_report(const Place &p, std::vector<Rational> exponents, int order) {
    std::sort(exponents.begin(), exponents.end());
    ExponentReport rep;
    rep.place = p;
    rep.delta = exponents.back() - exponents.front() - Rational(order - 1);
    BigInt lcd = 1;
    for (const auto &e : exponents) {
        Rational diff = e - exponents.front();
        mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), diff.get_den_mpz_t());
    }
    rep.ram_index = lcd.get_si();
    bool apparent = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i].get_den() != 1 || exponents[i] < 0) apparent = false;
        if (i > 0 && exponents[i] == exponents[i - 1]) apparent = false;
    }
    rep.apparent = apparent;
    rep.exponents = std::move(exponents);
    return rep;
}

ExponentReport local_exponents(const LinearODE &L, const Place &p) {
    IndicialPolynomial ind = indicial_polynomial(L, p);
    const int n = L.order();
    Polynomial g;
    for (const auto &c : ind.coordinates()) g = poly_gcd(g, c);
    std::vector<Rational> exps;
    for (const auto &r : rational_roots(g))
        for (int k = 0; k < r.multiplicity; ++k) exps.push_back(r.root);
    if (static_cast<int>(exps.size()) < n) {
        if (!p.is_infinity() && p.degree() > 1) split_on_partial_roots(ind);
        throw Error(ErrorKind::NonRationalExponent,
                    "only " + std::to_string(exps.size()) + " of " + std::to_string(n) +
                        " exponents are rational at " + p.label(L.variable()));
    }
    return make_report(p, std::move(exps), n);
}

std::vector<ExponentReport> exponent_reports(const LinearODE &L) {
    std::vector<Place> work = singular_places(L);
    std::vector<ExponentReport> out;
    while (!work.empty()) {
        Place p = std::move(work.back());
        work.pop_back();
        try {
            out.push_back(local_exponents(L, p));
        } catch (const PlaceSplit &split) {
            for (const auto *f : {&split.first(), &split.second()}) {
                auto ps = places_of(*f);
                work.insert(work.end(), ps.begin(), ps.end());
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ExponentReport &a, const ExponentReport &b) { return place_less(a.place, b.place); });
    return out;
}

Rational delta_total(const LinearODE &L) {
    Rational sum(0);
    for (const auto &rep : exponent_reports(L)) sum += rep.delta * rep.place.degree();
    return sum;
}

Rational delta_over(const LinearODE &L, std::span<const Place> places) {
    Rational sum(0);
    for (const auto &p : places) sum += local_exponents(L, p).delta * p.degree();
    return sum;
}

FuchsCheck fuchs_relation_check(const std::vector<ExponentReport> &reports, int order) {
    FuchsCheck out;
    int total_degree = 0;
    for (const auto &rep : reports) {
        Rational s(0);
        for (const auto &e : rep.exponents) s += e;
        out.lhs += s * rep.place.degree();
        total_degree += rep.place.degree();
    }
    out.rhs = make_rational(order * (order - 1), 2) * (total_degree - 2);
    out.ok = out.lhs == out.rhs;
    return out;
}

FuchsCheck fuchs_relation_check(const LinearODE &L) {
    return fuchs_relation_check(exponent_reports(L), L.order());
}

}  // namespace fuchsian
