#pragma once

#include "fuchsian/error.hpp"
#include "fuchsian/ode.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuchsian {

// A point of the projective line over Qbar up to Galois conjugacy: the
// roots of a monic squarefree polynomial, or infinity.
struct Place {
    enum class Kind { Finite, Infinity };

    Kind kind = Kind::Infinity;
    Polynomial min_poly;           // finite only
    std::optional<Rational> point;  // set for linear min_poly

    static Place finite(Polynomial q);
    static Place at(const Rational &point);
    static Place infinity();

    bool is_infinity() const { return kind == Kind::Infinity; }
    // Number of conjugate points.
    int degree() const { return is_infinity() ? 1 : min_poly.degree(); }
    std::string label(std::string_view var = "x") const;

    friend bool operator==(const Place &a, const Place &b) {
        return a.kind == b.kind && a.min_poly == b.min_poly;
    }
};

// Rational points ascending, then algebraic places by (degree, coefficients), infinity last.
bool place_less(const Place &a, const Place &b);

// The local exponent multiset E(L,p) and its invariants.
struct ExponentReport {
    Place place;
    std::vector<Rational> exponents;  // ascending, with multiplicity
    Rational delta;                   // max E - min E - (n - 1)
    long ram_index = 1;               // least common denominator of E - E
    bool apparent = false;            // distinct non-negative integers
};

// ind(r) = sum_k coefficients[k] r^k with coefficients in Q[alpha]/modulus.
struct IndicialPolynomial {
    Place place;
    Polynomial modulus;                 // x for rational points and infinity
    std::vector<Polynomial> coefficients;  // residue values, degree < deg modulus

    // P_j(r) with ind(r) = sum_j P_j(r) alpha^j.
    std::vector<Polynomial> coordinates() const;
    // Only meaningful for degree-one places.
    Polynomial as_rational() const;
};

// Rational polynomial whose roots are the exponents at all points of the place.
Polynomial indicial_norm(const IndicialPolynomial &ind);

// A place that turned out to be reducible while classifying exponents.
class PlaceSplit : public Error {
public:
    PlaceSplit(const Place &place, Polynomial first, Polynomial second);
    const Polynomial &first() const { return first_; }
    const Polynomial &second() const { return second_; }

private:
    Polynomial first_;
    Polynomial second_;
};

// The operator in t = 1/x, made monic.
LinearODE operator_at_infinity(const LinearODE &L);

std::vector<Place> singular_places(const LinearODE &L);
bool is_fuchsian(const LinearODE &L);
bool is_fuchsian_at(const LinearODE &L, const Place &p);

IndicialPolynomial indicial_polynomial(const LinearODE &L, const Place &p);
ExponentReport local_exponents(const LinearODE &L, const Place &p);
ExponentReport make_report(const Place &p, std::vector<Rational> exponents, int order);

// Exponent reports for every singular place, refining reducible places.
std::vector<ExponentReport> exponent_reports(const LinearODE &L);

Rational delta_total(const LinearODE &L);
// Delta(L,S) summed over the given places, each weighted by its degree.
Rational delta_over(const LinearODE &L, std::span<const Place> places);

struct FuchsCheck {
    Rational lhs;
    Rational rhs;
    bool ok = false;
};
FuchsCheck fuchs_relation_check(const LinearODE &L);
FuchsCheck fuchs_relation_check(const std::vector<ExponentReport> &reports, int order);

// Rational roots of q as points, the remaining cofactor as one place.
std::vector<Place> places_of(const Polynomial &q);

// Pairwise coprime refinement of a family of squarefree polynomials.
std::vector<Polynomial> coprime_basis(const std::vector<Polynomial> &polys);

}  // namespace fuchsian
