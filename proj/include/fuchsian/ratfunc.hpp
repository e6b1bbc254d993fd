#pragma once

#include "fuchsian/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace fuchsian {

// Reduced quotient num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(const Rational &c);  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction derivative() const;
    RationalFunction inverse() const;
    Rational evaluate(const Rational &at) const;
    // this(inner(x))
    RationalFunction compose(const RationalFunction &inner) const;
    RationalFunction pow(int e) const;

    RationalFunction &operator+=(const RationalFunction &o);
    RationalFunction &operator-=(const RationalFunction &o);
    RationalFunction &operator*=(const RationalFunction &o);
    RationalFunction &operator/=(const RationalFunction &o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a);
    friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "x") const;

private:
    struct Reduced {};
    RationalFunction(Polynomial num, Polynomial den, Reduced)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

// Residue class modulo a monic squarefree polynomial.
class ResidueElement {
public:
    ResidueElement(Polynomial modulus, Polynomial value);

    const Polynomial &modulus() const { return modulus_; }
    const Polynomial &value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    ResidueElement operator+(const ResidueElement &o) const;
    ResidueElement operator-(const ResidueElement &o) const;
    ResidueElement operator*(const ResidueElement &o) const;
    friend bool operator==(const ResidueElement &a, const ResidueElement &b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

private:
    Polynomial modulus_;
    Polynomial value_;
};

// The modulus factored as first * second (both monic, non-constant): the
// inverted element vanishes modulo `first` and is a unit modulo `second`.
struct SplitEvent {
    Polynomial first;
    Polynomial second;
};

std::variant<ResidueElement, SplitEvent> residue_invert(const ResidueElement &e);

// Residue class of f modulo q; ZeroDivision when q divides den(f), a
// SplitEvent when den(f) shares only part of q.
std::variant<ResidueElement, SplitEvent> residue_of(const RationalFunction &f,
                                                    const Polynomial &modulus);

struct ValuationLead {
    int valuation;
    ResidueElement lead;
};

// Order of f along the monic squarefree q and the residue of f / q^v.
// Returns a SplitEvent when the leading residue is not well defined
// because q is reducible and the orders differ between its factors.
std::variant<ValuationLead, SplitEvent> valuation_and_lead(const RationalFunction &f,
                                                           const Polynomial &q);

// Minimal order of f along q (min over the points of q), without lead.
int valuation(const RationalFunction &f, const Polynomial &q);

// f(1/t) as a function of t.
RationalFunction change_to_infinity(const RationalFunction &f);

// Order of vanishing at infinity: deg den - deg num.
int valuation_at_infinity(const RationalFunction &f);

}  // namespace fuchsian
