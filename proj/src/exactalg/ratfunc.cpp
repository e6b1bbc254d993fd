#include "fuchsian/ratfunc.hpp"

#include "fuchsian/error.hpp"

namespace fuchsian {

namespace {

const Polynomial &one_poly() {
    static const Polynomial one = Polynomial::constant(Rational(1));
    return one;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(one_poly()) {}

RationalFunction::RationalFunction(const Rational &c)
    : num_(Polynomial::constant(c)), den_(one_poly()) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = one_poly();
        return;
    }
    Polynomial g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    Rational lc = den.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num *= inv;
        den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        return *this;
    }
    // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(., g).
    Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        Polynomial n = num_ * o.den_ + o.num_ * den_;
        Polynomial d = den_ * o.den_;
        if (n.is_zero()) return *this = RationalFunction();
        *this = RationalFunction(std::move(n), std::move(d), Reduced{});
        return *this;
    }
    Polynomial bg = exact_quotient(den_, g);
    Polynomial dg = exact_quotient(o.den_, g);
    Polynomial n = num_ * dg + o.num_ * bg;
    if (n.is_zero()) return *this = RationalFunction();
    Polynomial d = den_ * dg;
    Polynomial h = poly_gcd(n, g);
    if (!h.is_one()) {
        n = exact_quotient(n, h);
        d = exact_quotient(d, h);
    }
    *this = RationalFunction(std::move(n), std::move(d), Reduced{});
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o) {
    return *this += -o;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (o.is_constant()) {
        num_ *= o.num_.leading();
        return *this;
    }
    if (is_constant()) {
        Rational c = num_.leading();
        *this = o;
        num_ *= c;
        return *this;
    }
    Polynomial g1 = poly_gcd(num_, o.den_);
    Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial a = g1.is_one() ? num_ : exact_quotient(num_, g1);
    Polynomial d = g1.is_one() ? o.den_ : exact_quotient(o.den_, g1);
    Polynomial c = g2.is_one() ? o.num_ : exact_quotient(o.num_, g2);
    Polynomial b = g2.is_one() ? den_ : exact_quotient(den_, g2);
    Polynomial n = a * c;
    Polynomial m = b * d;
    Rational lc = m.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        n *= inv;
        m *= inv;
    }
    *this = RationalFunction(std::move(n), std::move(m), Reduced{});
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o) {
    return *this *= o.inverse();
}

RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "inverse of zero rational function");
    Polynomial n = den_, d = num_;
    Rational inv = 1 / d.leading();
    n *= inv;
    d *= inv;
    return RationalFunction(std::move(n), std::move(d), Reduced{});
}

RationalFunction RationalFunction::derivative() const {
    if (den_.is_one()) return RationalFunction(num_.derivative());
    // (N/D)' = (N' D/g - N D'/g) / (D * D/g) with g = gcd(D, D').
    Polynomial dd = den_.derivative();
    Polynomial g = poly_gcd(den_, dd);
    Polynomial dg = exact_quotient(den_, g);
    Polynomial ddg = exact_quotient(dd, g);
    Polynomial n = num_.derivative() * dg - num_ * ddg;
    return RationalFunction(std::move(n), den_ * dg);
}

Rational RationalFunction::evaluate(const Rational &at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw Error(ErrorKind::ZeroDivision, "evaluation at a pole");
    return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction &inner) const {
    if (is_constant()) return *this;
    // P(N/D) = sum p_k N^k D^(m-k) / D^m, m = max(deg P, deg Q).
    const Polynomial &in_n = inner.num();
    const Polynomial &in_d = inner.den();
    int m = std::max(num_.degree(), den_.degree());
    std::vector<Polynomial> npow(static_cast<std::size_t>(m) + 1), dpow(static_cast<std::size_t>(m) + 1);
    npow[0] = one_poly();
    dpow[0] = one_poly();
    for (int k = 1; k <= m; ++k) {
        npow[static_cast<std::size_t>(k)] = npow[static_cast<std::size_t>(k - 1)] * in_n;
        dpow[static_cast<std::size_t>(k)] = dpow[static_cast<std::size_t>(k - 1)] * in_d;
    }
    auto homog = [&](const Polynomial &p) {
        Polynomial acc;
        for (int k = 0; k <= p.degree(); ++k) {
            if (p[k] == 0) continue;
            acc += npow[static_cast<std::size_t>(k)] * dpow[static_cast<std::size_t>(m - k)] * p[k];
        }
        return acc;
    };
    return RationalFunction(homog(num_), homog(den_));
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)),
                            den_.pow(static_cast<unsigned>(e)), Reduced{});
}

std::string RationalFunction::to_string(std::string_view var) const {
    std::string n = num_.to_string(var);
    if (den_.is_one()) return n;
    // Polynomial::to_string separates terms with spaces.
    std::string out = n.find(' ') == std::string::npos ? n : "(" + n + ")";
    std::string d = den_.to_string(var);
    out += d.find_first_of(" */") == std::string::npos ? "/" + d : "/(" + d + ")";
    return out;
}

ResidueElement::ResidueElement(Polynomial modulus, Polynomial value)
    : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw Error(ErrorKind::InvalidArgument, "residue modulus must be non-constant");
    value_ = value.degree() >= modulus_.degree() ? divmod(value, modulus_).remainder : std::move(value);
}

ResidueElement ResidueElement::operator+(const ResidueElement &o) const {
    return ResidueElement(modulus_, value_ + o.value_);
}

ResidueElement ResidueElement::operator-(const ResidueElement &o) const {
    return ResidueElement(modulus_, value_ - o.value_);
}

ResidueElement ResidueElement::operator*(const ResidueElement &o) const {
    return ResidueElement(modulus_, value_ * o.value_);
}

std::variant<ResidueElement, SplitEvent> residue_invert(const ResidueElement &e) {
    if (e.is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of zero residue");
    ExtendedGcd eg = extended_gcd(e.value(), e.modulus());
    if (eg.gcd.is_one()) return ResidueElement(e.modulus(), eg.s);
    return SplitEvent{eg.gcd, exact_quotient(e.modulus(), eg.gcd).monic()};
}

std::variant<ResidueElement, SplitEvent> residue_of(const RationalFunction &f,
                                                    const Polynomial &modulus) {
    ResidueElement n(modulus, f.num());
    if (f.den().is_one()) return n;
    ResidueElement d(modulus, f.den());
    if (d.is_zero()) throw Error(ErrorKind::ZeroDivision, "residue_of: pole along the modulus");
    auto inv = residue_invert(d);
    if (auto *split = std::get_if<SplitEvent>(&inv)) return *split;
    return n * std::get<ResidueElement>(inv);
}

int valuation(const RationalFunction &f, const Polynomial &q) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of zero function");
    int up = multiplicity_of(q, f.num());
    if (up > 0) return up;
    // Pole order along q counts the factor with the deepest pole.
    int down = 0;
    Polynomial d = f.den();
    Polynomial g = poly_gcd(d, q);
    while (g.degree() > 0) {
        ++down;
        d = exact_quotient(d, g);
        g = poly_gcd(d, g);
    }
    return -down;
}

std::variant<ValuationLead, SplitEvent> valuation_and_lead(const RationalFunction &f,
                                                           const Polynomial &q) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of zero function");
    auto strip = [&q](Polynomial p, int &order) -> std::variant<Polynomial, SplitEvent> {
        order = 0;
        while (true) {
            DivisionResult qr = divmod(p, q);
            if (!qr.remainder.is_zero()) break;
            p = std::move(qr.quotient);
            ++order;
        }
        Polynomial g = poly_gcd(p, q);
        if (g.degree() > 0) return SplitEvent{g, exact_quotient(q, g).monic()};
        return p;
    };
    int up = 0, down = 0;
    auto n = strip(f.num(), up);
    if (auto *s = std::get_if<SplitEvent>(&n)) return *s;
    auto d = strip(f.den(), down);
    if (auto *s = std::get_if<SplitEvent>(&d)) return *s;
    RationalFunction rest(std::get<Polynomial>(n), std::get<Polynomial>(d));
    auto r = residue_of(rest, q);
    if (auto *s = std::get_if<SplitEvent>(&r)) return *s;
    return ValuationLead{up - down, std::get<ResidueElement>(r)};
}

RationalFunction change_to_infinity(const RationalFunction &f) {
    // N(1/t)/D(1/t) = t^(dD - dN) rev(N)/rev(D).
    int dn = f.num().degree();
    int dd = f.den().degree();
    if (f.is_zero()) return f;
    Polynomial rn = f.num().reversed(dn);
    Polynomial rd = f.den().reversed(dd);
    int shift = dd - dn;
    if (shift > 0) rn = rn * Polynomial::monomial(Rational(1), shift);
    if (shift < 0) rd = rd * Polynomial::monomial(Rational(1), -shift);
    return RationalFunction(std::move(rn), std::move(rd));
}

int valuation_at_infinity(const RationalFunction &f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of zero function");
    return f.den().degree() - f.num().degree();
}

}  // namespace fuchsian
