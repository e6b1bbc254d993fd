#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuchsian {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt &num, const BigInt &den);
std::string to_string(const Rational &q);

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, int degree);
    static Polynomial x() { return monomial(Rational(1), 1); }
    // x - root
    static Polynomial linear(const Rational &root);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of x^k; zero beyond the degree.
    const Rational &operator[](int k) const;
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &leading() const;

    Polynomial monic() const;
    Polynomial derivative() const;
    Rational evaluate(const Rational &at) const;
    Polynomial compose(const Polynomial &inner) const;
    // p(x + shift)
    Polynomial taylor_shift(const Rational &shift) const;
    // x^deg p(1/x) with deg = degree() unless given.
    Polynomial reversed(int deg) const;

    // Splits into rational content times primitive integer polynomial with
    // positive leading coefficient.
    std::pair<Rational, std::vector<BigInt>> primitive_part() const;
    static Polynomial from_integers(const std::vector<BigInt> &coeffs);

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.coeffs_ == b.coeffs_;
    }

    Polynomial pow(unsigned e) const;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

DivisionResult divmod(const Polynomial &a, const Polynomial &b);
// Quotient of a division known to be exact.
Polynomial exact_quotient(const Polynomial &a, const Polynomial &b);
bool divides(const Polynomial &d, const Polynomial &a);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial &a, const Polynomial &b);
Polynomial poly_lcm(const Polynomial &a, const Polynomial &b);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial s;    // s*a + t*b = gcd
    Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial &a, const Polynomial &b);

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree
    int multiplicity;
};
// Yun's algorithm; factors are pairwise coprime, one per multiplicity.
std::vector<SquarefreeFactor> squarefree_factor(const Polynomial &a);

struct RationalRoot {
    Rational root;
    int multiplicity;
};
// All rational roots with multiplicities, ascending.
std::vector<RationalRoot> rational_roots(const Polynomial &a);

// Largest k with d^k | a (d non-constant, a non-zero).
int multiplicity_of(const Polynomial &d, const Polynomial &a);

}  // namespace fuchsian
