#include "doctest.h"
#include "support.hpp"

#include "fuchsian/catalog.hpp"
#include "fuchsian/genus.hpp"
#include "fuchsian/parser.hpp"

#include <algorithm>

using namespace fuchsian;
using testing_support::Rng;

namespace {

Rational Q(long a, long b = 1) { return make_rational(a, b); }

const RationalFunction X = RationalFunction::x();

LinearODE y2() { return LinearODE({RationalFunction(), RationalFunction()}); }
// y'' - (2/x) y' + (2/x^2) y, solutions x and x^2.
LinearODE euler() { return LinearODE({RationalFunction(2) / X.pow(2), RationalFunction(-2) / X}); }

RationalMap map_of(const char *text) { return RationalMap(parse_expression(text)); }

std::vector<Rational> shifted(std::vector<Rational> e) {
    Rational m = e.front();
    for (auto &x : e) x -= m;
    return e;
}

// Twist with simple poles at a couple of rational points.
RationalFunction simple_twist(Rng &rng) {
    RationalFunction r;
    for (int i = 0; i < 2; ++i) r += RationalFunction(rng.rational(5, 4)) / (X - RationalFunction(rng.integer(-3, 3)));
    return r;
}

}  // namespace

TEST_CASE("rational maps") {
    CHECK(map_of("x^2").degree() == 2);
    CHECK(map_of("4*x/(x+1)^2").degree() == 2);
    CHECK(map_of("(1/16)*(x^2+1)^4/(x^2*(x+1)^2*(x-1)^2)").degree() == 8);
    CHECK_THROWS_AS(RationalMap(RationalFunction(Q(3))), Error);
    try {
        RationalMap m{RationalFunction(Q(3))};
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DegenerateMap);
    }
    auto c = compose(map_of("x^2"), map_of("(x+1)/x"));
    CHECK(c.degree() == 2);
    CHECK(c.function() == parse_expression("(x+1)^2/x^2"));
}

TEST_CASE("pullback examples") {
    CHECK(pullback(y2(), map_of("x^2")) == LinearODE({RationalFunction(), RationalFunction(-1) / X}));
    CHECK(pullback(y2(), map_of("x")) == y2());
    // Solutions of the pullback are y(f).
    LinearODE L = pullback(euler(), map_of("(x^2+1)/x"));
    RationalFunction f = parse_expression("(x^2+1)/x");
    CHECK(L.apply(f).is_zero());
    CHECK(L.apply(f.pow(2)).is_zero());
    CHECK(pullback(euler().with_variable("z"), map_of("x^3")).variable() == "z");
}

TEST_CASE("pullback of the degree-8 map matches G54") {
    auto entry = catalog_entry("G54");
    LinearODE pb = pullback(catalog(entry.pullback_of), RationalMap(parse_expression(entry.map)));
    CHECK(projectively_equivalent(catalog("G54"), pb));
    CHECK_FALSE(pb == catalog("G54"));
}

TEST_CASE("exp product examples") {
    CHECK(exp_product(y2(), X.inverse()) == euler());
    CHECK(exp_product(euler(), RationalFunction()) == euler());
    CHECK(exp_product(euler(), -X.inverse()) == y2());
    CHECK(twist_is_irregular(X.pow(-2)));
    CHECK_FALSE(twist_is_irregular(X.inverse()));
    // Polynomial twists have an irregular point at infinity.
    CHECK(twist_is_irregular(X));
    CHECK_FALSE(twist_is_irregular(RationalFunction()));
}

TEST_CASE("projective normalization examples") {
    CHECK(projective_normalize(euler()) == y2());
    CHECK(projective_normalize(y2()) == y2());
    CHECK(normalizing_twist(euler()) == RationalFunction(-1) / X);
    CHECK(projectively_equivalent(y2(), euler()));
    CHECK_FALSE(projectively_equivalent(y2(), LinearODE({RationalFunction(-1), RationalFunction()})));
    LinearODE third_order({RationalFunction(), RationalFunction(), RationalFunction()});
    CHECK_THROWS_AS(projectively_equivalent(y2(), third_order), Error);
    for (const auto &e : builtin_catalog()) {
        LinearODE n = projective_normalize(catalog(e.key));
        CHECK(n.coefficient(n.order() - 1).is_zero());
        CHECK(projective_normalize(n) == n);
    }
}

TEST_CASE("pullbacks of the catalog partners") {
    // The H72 map as stated.
    auto h = catalog_entry("H72");
    CHECK(projectively_equivalent(catalog("H72"), pullback(catalog(h.pullback_of), RationalMap(parse_expression(h.map)))));

    // F36 is the pullback by 4x/(x+1)^2, the stated map after x -> x + 1.
    LinearODE f36 = catalog("F36");
    LinearODE klein = catalog("3F2-klein");
    CHECK(projectively_equivalent(f36, pullback(klein, map_of("4*x/(x+1)^2"))));
    CHECK_FALSE(projectively_equivalent(f36, pullback(klein, map_of("4*(x-1)/x^2"))));
    CHECK(projectively_equivalent(f36.with_variable("x"),
                                  pullback(pullback(klein, map_of("4*(x-1)/x^2")), map_of("x+1"))));
}

TEST_CASE("ramification and fibres") {
    RationalMap sq = map_of("x^2");
    CHECK(ramification_index(sq, Place::at(Q(0))) == 2);
    CHECK(ramification_index(sq, Place::at(Q(1))) == 1);
    CHECK(ramification_index(sq, Place::infinity()) == 2);

    auto f0 = fibre(sq, Place::at(Q(0)));
    REQUIRE(f0.size() == 1);
    CHECK(f0[0].first == Place::at(Q(0)));
    CHECK(f0[0].second == 2);

    auto f1 = fibre(sq, Place::at(Q(1)));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].first == Place::at(Q(-1)));
    CHECK(f1[1].first == Place::at(Q(1)));

    auto fi = fibre(sq, Place::infinity());
    REQUIRE(fi.size() == 1);
    CHECK(fi[0].first.is_infinity());
    CHECK(fi[0].second == 2);

    // x^2 = -1/3 has no rational points.
    auto fa = fibre(sq, Place::at(Q(-1, 3)));
    REQUIRE(fa.size() == 1);
    CHECK(fa[0].first == Place::finite(Polynomial({Q(1, 3), Q(0), Q(1)})));

    RationalMap g = map_of("4*x/(x+1)^2");
    auto g1 = fibre(g, Place::at(Q(1)));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].first == Place::at(Q(1)));
    CHECK(g1[0].second == 2);
    auto gi = fibre(g, Place::infinity());
    REQUIRE(gi.size() == 1);
    CHECK(gi[0].first == Place::at(Q(-1)));
    CHECK(gi[0].second == 2);
    auto g0 = fibre(g, Place::at(Q(0)));
    REQUIRE(g0.size() == 2);
    CHECK(g0[0].first == Place::at(Q(0)));
    CHECK(g0[1].first.is_infinity());

    // Fibre sizes weighted by e and degree add up to the map degree.
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        RationalMap m = testing_support::random_map(rng, 4);
        for (const Place &p : {Place::at(Q(0)), Place::at(Q(rng.integer(-3, 3))), Place::infinity()}) {
            int total = 0;
            for (const auto &[q, e] : fibre(m, p)) {
                total += e * q.degree();
                if (q.degree() == 1) CHECK(ramification_index(m, q) == e);
            }
            CHECK(total == m.degree());
        }
    }
}

TEST_CASE("projective equivalence is an equivalence relation") {
    Rng rng(32);
    for (int t = 0; t < 20; ++t) {
        const int n = static_cast<int>(rng.integer(2, 3));
        LinearODE L = testing_support::random_fuchsian(rng, n, 2).L;
        LinearODE A = exp_product(L, simple_twist(rng));
        LinearODE B = exp_product(A, simple_twist(rng));
        CHECK(projectively_equivalent(L, L));
        CHECK(projectively_equivalent(L, A) == projectively_equivalent(A, L));
        CHECK(projectively_equivalent(L, A));
        CHECK(projectively_equivalent(A, B));
        CHECK(projectively_equivalent(L, B));
        CHECK(projective_normalize(A) == projective_normalize(L));
        LinearODE other = testing_support::random_fuchsian(rng, n, 3).L;
        CHECK_FALSE(projectively_equivalent(L, other));
    }
}

TEST_CASE("twists preserve exponent differences") {
    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        const int n = static_cast<int>(rng.integer(2, 3));
        auto op = testing_support::random_fuchsian(rng, n, 2);
        RationalFunction r = simple_twist(rng);
        REQUIRE_FALSE(twist_is_irregular(r));
        LinearODE T = exp_product(op.L, r);
        std::vector<Place> places = singular_places(op.L);
        for (const auto &p : singular_places(T))
            if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
        for (const auto &p : places) {
            auto a = local_exponents(op.L, p);
            auto b = local_exponents(T, p);
            CHECK(shifted(a.exponents) == shifted(b.exponents));
            CHECK(a.delta == b.delta);
            CHECK(a.ram_index == b.ram_index);
        }
    }
}

TEST_CASE("pullback exponent law and delta identity") {
    Rng rng(34);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.integer(2, 3));
        LinearODE L0 = testing_support::random_fuchsian(rng, n, 2, 3).L;
        RationalMap f = testing_support::random_map(rng, 4);
        LinearODE L = pullback(L0, f);
        CHECK(L.apply(RationalFunction(1)).is_zero() == L0.apply(RationalFunction(1)).is_zero());

        auto id = pullback_delta_identity(L0, f);
        CHECK(id.ok);
        CHECK(id.lhs == id.rhs);

        for (const auto &p0 : singular_places(L0)) {
            auto e0 = local_exponents(L0, p0).exponents;
            for (const auto &[p, e] : fibre(f, p0)) {
                std::vector<Rational> want;
                for (const auto &x : e0) want.push_back(x * e);
                CHECK(local_exponents(L, p).exponents == want);
                ++checked;
            }
        }
        // Ramified points over ordinary places.
        for (const auto &p : singular_places(L)) {
            Rational image;
            bool ordinary_image = false;
            if (p.point) {
                auto fp = f.function();
                if (fp.den().evaluate(*p.point) != 0) {
                    image = fp.evaluate(*p.point);
                    auto sp = singular_places(L0);
                    ordinary_image = std::find(sp.begin(), sp.end(), Place::at(image)) == sp.end();
                }
            }
            if (!ordinary_image) continue;
            const long e = ramification_index(f, p);
            std::vector<Rational> want;
            for (int i = 0; i < n; ++i) want.emplace_back(i * e);
            CHECK(local_exponents(L, p).exponents == want);
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("pullback composes") {
    Rng rng(35);
    for (int t = 0; t < 10; ++t) {
        LinearODE L0 = testing_support::random_fuchsian(rng, 2, 2, 3).L;
        RationalMap f = testing_support::random_map(rng, 2);
        RationalMap g = testing_support::random_map(rng, 2);
        RationalMap fg = compose(f, g);
        CHECK(fg.degree() == f.degree() * g.degree());
        CHECK(pullback(pullback(L0, f), g) == pullback(L0, fg));
    }
}
