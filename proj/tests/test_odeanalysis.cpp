#include "doctest.h"
#include "support.hpp"

#include "fuchsian/catalog.hpp"

#include <algorithm>

using namespace fuchsian;
using testing_support::Rng;

namespace {

Polynomial P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

Rational Q(long a, long b = 1) { return make_rational(a, b); }

std::vector<Rational> Qs(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> v;
    for (auto [a, b] : xs) v.push_back(make_rational(a, b));
    return v;
}

const RationalFunction X = RationalFunction::x();

std::vector<std::string> all_keys() {
    std::vector<std::string> keys;
    for (const auto &e : builtin_catalog()) keys.push_back(e.key);
    for (const char *k : {"St:A4", "St:S4", "St:A5", "St:D2n:2", "St:D2n:3", "St:D2n:5"}) keys.emplace_back(k);
    return keys;
}

LinearODE y2() { return LinearODE({RationalFunction(), RationalFunction()}); }

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const ExponentReport &at(const std::vector<ExponentReport> &rs, const Place &p) {
    for (const auto &r : rs)
        if (r.place == p) return r;
    FAIL("place not found");
    return rs.front();
}

}  // namespace

TEST_CASE("operators apply to functions") {
    // y'' - (2/x) y' + (2/x^2) y kills x and x^2.
    LinearODE L({RationalFunction(Q(2)) / X.pow(2), RationalFunction(Q(-2)) / X});
    CHECK(L.apply(X).is_zero());
    CHECK(L.apply(X.pow(2)).is_zero());
    CHECK(L.apply(X.pow(3)) == RationalFunction(P({0, 2})));
    CHECK(L.order() == 2);
    CHECK(L.coefficient(2) == RationalFunction(1));

    auto M = LinearODE::from_operator(std::vector<RationalFunction>{RationalFunction(2), RationalFunction(-2) * X, X.pow(2)});
    CHECK(M == L);
    CHECK(LinearODE::from_operator(L.as_operator()) == L);
    CHECK(L.to_string() == "y'' + (-2/x)*y' + (2/x^2)*y = 0");

    DiffOperator d = DiffOperator::derivation().scaled(X);  // x D
    CHECK(d.apply(X.pow(3)) == X.pow(3) * RationalFunction(3));
    CHECK(d.derive().apply(X.pow(2)) == X * RationalFunction(4));
    CHECK_THROWS_AS(LinearODE::from_operator(std::vector<RationalFunction>{RationalFunction(1), RationalFunction()}), Error);
    CHECK_THROWS_AS(LinearODE({}), Error);
}

TEST_CASE("singular places of catalog equations") {
    auto g = singular_places(catalog("G54"));
    REQUIRE(g.size() == 4);
    CHECK(g[0] == Place::at(Q(-1)));
    CHECK(g[1] == Place::at(Q(0)));
    CHECK(g[2] == Place::at(Q(1)));
    CHECK(g[3].is_infinity());

    auto y = singular_places(y2());
    REQUIRE(y.size() == 1);
    CHECK(y[0].is_infinity());

    auto h = singular_places(catalog("H72"));
    REQUIRE(h.size() == 3);
    CHECK(h[0] == Place::at(Q(1)));
    CHECK(h[1] == Place::finite(Polynomial({Q(1, 3), Q(0), Q(1)})));
    CHECK(h[1].degree() == 2);
    CHECK(h[2].is_infinity());

    // y' - y: the only candidate is infinity, where it is irregular.
    LinearODE e({RationalFunction(-1)});
    auto ep = singular_places(e);
    REQUIRE(ep.size() == 1);
    CHECK(ep[0].is_infinity());
}

TEST_CASE("Fuchsian test") {
    CHECK(is_fuchsian(catalog("G54")));
    CHECK_FALSE(is_fuchsian(LinearODE({-X.pow(-4), RationalFunction()})));
    CHECK_FALSE(is_fuchsian(LinearODE({RationalFunction(-1)})));
    CHECK_FALSE(is_fuchsian_at(LinearODE({RationalFunction(-1)}), Place::infinity()));
    CHECK(is_fuchsian(y2()));
    for (const auto &k : all_keys()) CHECK(is_fuchsian(catalog(k)));
}

TEST_CASE("indicial polynomials") {
    // At 0 the displayed G54 operator gives r(r-1)(r-2) + 3 r(r-1) + 5/12 r - 5/54.
    auto ind = indicial_polynomial(catalog("G54"), Place::at(Q(0)));
    Polynomial r = P({0, 1});
    Polynomial want = r * (r - P({1})) * (r - P({2})) + Q(3) * r * (r - P({1})) + Q(5, 12) * r -
                      Polynomial::constant(Q(5, 54));
    CHECK(ind.as_rational() == want);

    CHECK(indicial_polynomial(y2(), Place::at(Q(3))).as_rational() == P({0, -1, 1}));

    auto f = indicial_polynomial(catalog("F36"), Place::at(Q(0)));
    Polynomial fw = r * (r - P({1})) * (r - P({2})) + Q(15, 16) * r - Polynomial::constant(Q(15, 16));
    CHECK(f.as_rational() == fw);
    auto fr = rational_roots(fw);
    REQUIRE(fr.size() == 3);
    CHECK(fr[0].root == Q(3, 4));

    CHECK_THROWS_AS(indicial_polynomial(LinearODE({-X.pow(-4), RationalFunction()}), Place::at(Q(0))), Error);

    // Over x^2 + 1/3 the polynomial has residue-field coefficients; its norm
    // vanishes at the exponents.
    auto h = indicial_polynomial(catalog("H72"), Place::finite(Polynomial({Q(1, 3), Q(0), Q(1)})));
    Polynomial norm = indicial_norm(h);
    CHECK(norm.degree() == 6);
    for (const auto &e : Qs({{-7, 12}, {-1, 3}, {-1, 12}})) {
        CHECK(norm.evaluate(e) == 0);
        for (const auto &c : h.coordinates()) CHECK(c.evaluate(e) == 0);
    }
}

TEST_CASE("local exponents examples") {
    auto g = local_exponents(catalog("G54"), Place::at(Q(0)));
    CHECK(g.exponents == Qs({{-2, 3}, {-1, 6}, {5, 6}}));
    CHECK(g.delta == Q(-1, 2));
    CHECK(g.ram_index == 2);
    CHECK_FALSE(g.apparent);

    auto h = local_exponents(catalog("H72"), Place::finite(Polynomial({Q(1, 3), Q(0), Q(1)})));
    CHECK(h.exponents == Qs({{-7, 12}, {-1, 3}, {-1, 12}}));
    CHECK(h.ram_index == 4);

    auto yi = local_exponents(y2(), Place::infinity());
    CHECK(yi.exponents == Qs({{-1, 1}, {0, 1}}));
    CHECK(yi.delta == 0);

    auto a = local_exponents(catalog("H72"), Place::at(Q(1)));
    CHECK(a.exponents == Qs({{0, 1}, {1, 1}, {3, 1}}));
    CHECK(a.apparent);
    CHECK(a.ram_index == 1);

    // y'' + y/(4x^2): the double exponent 1/2 at 0.
    auto d = local_exponents(LinearODE({RationalFunction(Q(1, 4)) / X.pow(2), RationalFunction()}), Place::at(Q(0)));
    CHECK(d.exponents == Qs({{1, 2}, {1, 2}}));
    CHECK(d.delta == -1);
    CHECK(d.ram_index == 1);

    // y'' + y/x^2 has exponents (1 +- i sqrt 3)/2 at 0.
    CHECK_THROWS_AS(local_exponents(LinearODE({X.pow(-2), RationalFunction()}), Place::at(Q(0))), Error);
}

TEST_CASE("exponent reports of catalog equations") {
    auto g = exponent_reports(catalog("G54"));
    REQUIRE(g.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(g[i].exponents == Qs({{-2, 3}, {-1, 6}, {5, 6}}));
    CHECK(g[3].exponents == Qs({{4, 3}, {11, 6}, {17, 6}}));
    for (const auto &r : g) CHECK(r.ram_index == 2);

    auto f = exponent_reports(catalog("F36"));
    REQUIRE(f.size() == 3);
    CHECK(at(f, Place::at(Q(0))).exponents == Qs({{3, 4}, {1, 1}, {5, 4}}));
    CHECK(at(f, Place::at(Q(-1))).exponents == Qs({{1, 3}, {5, 6}, {11, 6}}));
    CHECK(at(f, Place::infinity()).exponents == Qs({{-5, 4}, {-1, 1}, {-3, 4}}));

    auto t = exponent_reports(catalog("third"));
    CHECK(at(t, Place::at(Q(0))).ram_index == 4);
    CHECK(at(t, Place::at(Q(1))).ram_index == 2);
    CHECK(at(t, Place::infinity()).ram_index == 4);

    auto h = exponent_reports(catalog("H216"));
    CHECK(at(h, Place::at(Q(0))).exponents == Qs({{2, 3}, {1, 1}, {4, 3}}));
    CHECK(at(h, Place::at(Q(1))).exponents == Qs({{5, 9}, {8, 9}, {14, 9}}));
    CHECK(at(h, Place::infinity()).ram_index == 4);
}

TEST_CASE("delta totals") {
    CHECK(delta_total(catalog("G54")) == -2);
    CHECK(delta_total(y2()) == 0);
    CHECK(delta_total(catalog("H72")) == Q(-7, 2));
}

TEST_CASE("Fuchs relation on catalog equations") {
    auto g = fuchs_relation_check(catalog("G54"));
    CHECK(g.ok);
    CHECK(g.lhs == 6);
    auto f = fuchs_relation_check(catalog("F36"));
    CHECK(f.ok);
    CHECK(f.lhs == 3);
    auto y = fuchs_relation_check(y2());
    CHECK(y.ok);
    CHECK(y.lhs == -1);
    for (const auto &k : all_keys()) CHECK(fuchs_relation_check(catalog(k)).ok);
}

TEST_CASE("random operators have the prescribed exponents") {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(rng.integer(2, 4));
        const int k = static_cast<int>(rng.integer(2, 4));
        auto op = testing_support::random_fuchsian(rng, n, k);
        REQUIRE(is_fuchsian(op.L));
        for (std::size_t j = 0; j < op.points.size(); ++j) {
            auto ind = indicial_polynomial(op.L, Place::at(op.points[j]));
            Polynomial want = Polynomial::constant(Rational(1));
            for (const auto &e : op.exponents[j]) want = want * Polynomial::linear(e);
            CHECK(ind.as_rational() == want);
        }
        auto ind = indicial_polynomial(op.L, Place::infinity()).as_rational();
        for (const auto &e : op.at_infinity) CHECK(ind.evaluate(e) == 0);
    }
}

TEST_CASE("Fuchs relation on random operators") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.integer(2, 4));
        auto op = testing_support::random_fuchsian(rng, n, static_cast<int>(rng.integer(2, 4)));
        auto c = fuchs_relation_check(op.L);
        CHECK(c.ok);
    }
}

TEST_CASE("exponent invariants on random operators") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(rng.integer(2, 3));
        auto op = testing_support::random_fuchsian(rng, n, 3);
        Rational total;
        for (const auto &r : exponent_reports(op.L)) {
            CHECK(static_cast<int>(r.exponents.size()) == n);
            CHECK(r.delta == r.exponents.back() - r.exponents.front() - (n - 1));
            bool integral = true;
            for (const auto &a : r.exponents)
                for (const auto &b : r.exponents) {
                    Rational d = (a - b) * r.ram_index;
                    CHECK(d.get_den() == 1);
                    Rational diff = a - b;
                    integral = integral && diff.get_den() == 1;
                }
            // Minimal: no smaller multiplier clears every difference.
            for (long e = 1; e < r.ram_index; ++e) {
                bool clears = true;
                for (const auto &a : r.exponents) {
                    Rational d = (a - r.exponents.front()) * e;
                    clears = clears && d.get_den() == 1;
                }
                CHECK_FALSE(clears);
            }
            CHECK((r.ram_index == 1) == integral);
            total += r.delta * r.place.degree();
        }
        CHECK(total == delta_total(op.L));

        // Ordinary places add nothing.
        std::vector<Place> s = singular_places(op.L);
        Rational p(7);
        while (std::any_of(op.points.begin(), op.points.end(), [&](const Rational &a) { return a == p; })) p += 1;
        auto ord = local_exponents(op.L, Place::at(p));
        std::vector<Rational> want;
        for (int i = 0; i < n; ++i) want.emplace_back(i);
        CHECK(ord.exponents == want);
        CHECK(ord.delta == 0);
        CHECK(ord.ram_index == 1);
        s.push_back(Place::at(p));
        s.push_back(Place::finite(P({2, 0, 1})));
        CHECK(delta_over(op.L, s) == delta_total(op.L));
    }
}

TEST_CASE("least common denominators of exponent differences") {
    auto r = make_report(Place::at(Q(0)), Qs({{1, 4}, {1, 2}, {3, 2}}), 3);
    CHECK(r.ram_index == 4);
    CHECK(make_report(Place::at(Q(0)), Qs({{0, 1}, {2, 1}}), 2).apparent);
    CHECK_FALSE(make_report(Place::at(Q(0)), Qs({{0, 1}, {0, 1}}), 2).apparent);
    CHECK_FALSE(make_report(Place::at(Q(0)), Qs({{-1, 1}, {2, 1}}), 2).apparent);
}

TEST_CASE("reducible places are refined") {
    // Singular at +-1 with different exponents, presented through x^2 - 1.
    std::vector<Rational> pts = {Q(-1), Q(1)};
    Rng rng(24);
    auto op = testing_support::prescribed_operator(pts, {Qs({{1, 3}, {0, 1}}), Qs({{1, 2}, {0, 1}})}, {Q(1, 5)}, rng);
    auto reports = exponent_reports(op.L);
    CHECK(at(reports, Place::at(Q(-1))).exponents == Qs({{0, 1}, {1, 3}}));
    CHECK(at(reports, Place::at(Q(1))).exponents == Qs({{0, 1}, {1, 2}}));

    auto pl = places_of(P({-1, 0, 0, 0, 1}));  // (x-1)(x+1)(x^2+1)
    REQUIRE(pl.size() == 3);
    CHECK(pl[2] == Place::finite(P({1, 0, 1})));

    auto basis = coprime_basis({P({-1, 0, 1}), P({-1, 1}) * P({-2, 1})});
    CHECK(basis.size() == 3);
}

TEST_CASE("operator at infinity") {
    // y'' = 0 becomes t^2 (t^2 y')' ... i.e. y'' + (2/t) y' = 0.
    auto inf = operator_at_infinity(y2());
    CHECK(inf == LinearODE({RationalFunction(), RationalFunction(Q(2)) / X}));
    auto g = catalog("G54");
    auto ind = indicial_polynomial(operator_at_infinity(g), Place::at(Q(0))).as_rational();
    for (const auto &e : local_exponents(g, Place::infinity()).exponents) CHECK(ind.evaluate(e) == 0);
}

TEST_CASE("place ordering and labels") {
    CHECK(place_less(Place::at(Q(-1)), Place::at(Q(0))));
    CHECK(place_less(Place::at(Q(5)), Place::finite(P({1, 0, 1}))));
    CHECK(place_less(Place::finite(P({1, 0, 1})), Place::infinity()));
    CHECK(Place::at(Q(-1, 2)).label() == "-1/2");
    CHECK(Place::infinity().label() == "infinity");
    CHECK(Place::finite(P({1, 0, 1})).label("z") == "z^2 + 1");
    CHECK_THROWS_AS(Place::finite(P({0, 0, 1})), Error);
}
