#include "fuchsian/polynomial.hpp"

#include "fuchsian/error.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

namespace fuchsian {

namespace {

const Rational kZero(0);

// a = ints / scale with scale > 0.
struct ScaledIntegers {
    std::vector<BigInt> ints;
    BigInt scale;
};

ScaledIntegers to_scaled(const std::vector<Rational> &coeffs) {
    ScaledIntegers out;
    out.scale = 1;
    for (const auto &c : coeffs) {
        mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(),
                c.get_den_mpz_t());
    }
    out.ints.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        BigInt v = out.scale / c.get_den();
        v *= c.get_num();
        out.ints.push_back(std::move(v));
    }
    return out;
}

std::vector<BigInt> int_mul(const std::vector<BigInt> &a,
                            const std::vector<BigInt> &b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
        }
    }
    return out;
}

void int_trim(std::vector<BigInt> &v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt int_content(const std::vector<BigInt> &v) {
    BigInt g = 0;
    for (const auto &c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<BigInt> int_primitive(std::vector<BigInt> v) {
    int_trim(v);
    if (v.empty()) return v;
    BigInt g = int_content(v);
    if (v.back() < 0) g = -g;
    for (auto &c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Exact division over Z; false when b does not divide a.
bool int_exact_div(std::vector<BigInt> a, const std::vector<BigInt> &b,
                   std::vector<BigInt> *quotient) {
    int_trim(a);
    if (a.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    std::vector<BigInt> q(a.size() - b.size() + 1);
    const BigInt &lead = b.back();
    BigInt t;
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt &top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_submul(a[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
        q[k] = t;
    }
    for (std::size_t j = 0; j + 1 < b.size() && j < a.size(); ++j) {
        if (a[j] != 0) return false;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

BigInt int_eval(const std::vector<BigInt> &p, const BigInt &at) {
    BigInt acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc *= at;
        acc += p[k];
    }
    return acc;
}

BigInt max_norm(const std::vector<BigInt> &p) {
    BigInt m = 0;
    for (const auto &c : p) {
        BigInt a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

// Heuristic gcd of primitive integer polynomials; empty result on failure.
std::vector<BigInt> gcd_heuristic(const std::vector<BigInt> &a,
                                  const std::vector<BigInt> &b) {
    BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        BigInt va = int_eval(a, xi);
        BigInt vb = int_eval(b, xi);
        BigInt gamma;
        mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        if (gamma != 0) {
            std::vector<BigInt> g;
            BigInt half = xi / 2;
            while (gamma != 0) {
                BigInt r;
                mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
                if (r > half) r -= xi;
                g.push_back(r);
                gamma -= r;
                mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
            }
            g = int_primitive(std::move(g));
            if (!g.empty() && int_exact_div(a, g, nullptr) &&
                int_exact_div(b, g, nullptr)) {
                return g;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return {};
}

Polynomial gcd_euclid(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

// Modular root search for a squarefree primitive integer polynomial with
// non-zero constant term.
std::vector<Rational> rational_roots_squarefree(const std::vector<BigInt> &p) {
    std::vector<Rational> roots;
    if (p.size() <= 1) return roots;
    if (p.size() == 2) {
        roots.push_back(make_rational(-p[0], p[1]));
        return roots;
    }
    std::vector<BigInt> dp(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * static_cast<long>(k);

    BigInt bound = max_norm({p.front(), p.back()});
    BigInt target = 2 * bound * bound + 1;

    BigInt prime = 10007;
    for (int attempt = 0; attempt < 200; ++attempt,
             mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
        const std::uint64_t q = prime.get_ui();
        if (mpz_divisible_ui_p(p.back().get_mpz_t(), q)) continue;
        std::vector<std::uint64_t> pm(p.size()), dm(dp.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            pm[k] = mpz_fdiv_ui(p[k].get_mpz_t(), q);
        for (std::size_t k = 0; k < dp.size(); ++k)
            dm[k] = mpz_fdiv_ui(dp[k].get_mpz_t(), q);
        auto eval_mod = [q](const std::vector<std::uint64_t> &c, std::uint64_t x) {
            std::uint64_t acc = 0;
            for (std::size_t k = c.size(); k-- > 0;) acc = (acc * x + c[k]) % q;
            return acc;
        };
        std::vector<std::uint64_t> residues;
        bool simple = true;
        for (std::uint64_t x = 0; x < q; ++x) {
            if (eval_mod(pm, x) != 0) continue;
            if (eval_mod(dm, x) == 0) {
                simple = false;
                break;
            }
            residues.push_back(x);
            if (residues.size() + 1 > p.size()) break;
        }
        if (!simple) continue;

        for (std::uint64_t r0 : residues) {
            BigInt modulus = prime;
            BigInt r = r0;
            while (modulus < target) {
                modulus *= modulus;
                BigInt f = int_eval(p, r);
                BigInt df = int_eval(dp, r);
                mpz_fdiv_r(df.get_mpz_t(), df.get_mpz_t(), modulus.get_mpz_t());
                BigInt inv;
                mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), modulus.get_mpz_t());
                r -= f * inv;
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
            }
            // Rational reconstruction with |num|, den <= sqrt(modulus / 2).
            BigInt limit;
            BigInt half_mod = modulus / 2;
            mpz_sqrt(limit.get_mpz_t(), half_mod.get_mpz_t());
            BigInt r0v = modulus, r1v = r, t0 = 0, t1 = 1;
            while (r1v > limit) {
                BigInt quo = r0v / r1v;
                BigInt r2 = r0v - quo * r1v;
                BigInt t2 = t0 - quo * t1;
                r0v = std::move(r1v);
                r1v = std::move(r2);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            if (t1 == 0 || abs(t1) > limit) continue;
            Rational cand = make_rational(r1v, t1);
            const BigInt &a = cand.get_num();
            const BigInt &b = cand.get_den();
            // Exact check: sum p_k a^k b^(n-k) == 0.
            BigInt acc = 0, bpow = 1;
            std::vector<BigInt> apow(p.size());
            apow[0] = 1;
            for (std::size_t k = 1; k < p.size(); ++k) apow[k] = apow[k - 1] * a;
            for (std::size_t k = p.size(); k-- > 0;) {
                acc += p[k] * apow[k] * bpow;
                bpow *= b;
            }
            if (acc == 0) roots.push_back(cand);
        }
        return roots;
    }
    throw Error(ErrorKind::InvalidArgument,
                "rational_roots: no suitable prime found");
}

}  // namespace

Rational make_rational(const BigInt &num, const BigInt &den) {
    if (den == 0) throw Error(ErrorKind::ZeroDivision, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational &c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational &c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational &root) {
    return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational &Polynomial::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational &Polynomial::leading() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational &at) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc *= at;
        acc += coeffs_[k];
    }
    return acc;
}

Polynomial Polynomial::compose(const Polynomial &inner) const {
    Polynomial acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * inner;
        acc += constant(coeffs_[k]);
    }
    return acc;
}

Polynomial Polynomial::taylor_shift(const Rational &shift) const {
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed(int deg) const {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= degree(); ++k) c[static_cast<std::size_t>(deg - k)] = coeffs_[static_cast<std::size_t>(k)];
    return Polynomial(std::move(c));
}

std::pair<Rational, std::vector<BigInt>> Polynomial::primitive_part() const {
    if (is_zero()) return {Rational(0), {}};
    ScaledIntegers s = to_scaled(coeffs_);
    BigInt g = int_content(s.ints);
    if (s.ints.back() < 0) g = -g;
    for (auto &c : s.ints) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {make_rational(g, s.scale), std::move(s.ints)};
}

Polynomial Polynomial::from_integers(const std::vector<BigInt> &coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto &v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
    *this = *this * other;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &v : coeffs_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.coeffs_.size() == 1) return b * a.coeffs_[0];
    if (b.coeffs_.size() == 1) return a * b.coeffs_[0];
    ScaledIntegers sa = to_scaled(a.coeffs_);
    ScaledIntegers sb = to_scaled(b.coeffs_);
    std::vector<BigInt> prod = int_mul(sa.ints, sb.ints);
    BigInt scale = sa.scale * sb.scale;
    std::vector<Rational> out;
    out.reserve(prod.size());
    for (auto &c : prod) out.push_back(make_rational(c, scale));
    return Polynomial(std::move(out));
}

Polynomial operator-(Polynomial a) {
    for (auto &c : a.coeffs_) c = -c;
    return a;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational &c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
    return os << p.to_string();
}

DivisionResult divmod(const Polynomial &a, const Polynomial &b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDivision, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coefficients();
    const auto &bc = b.coefficients();
    const std::size_t bn = bc.size();
    std::vector<Rational> quo(rem.size() - bn + 1);
    Rational inv = 1 / b.leading();
    Rational t;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational &top = rem[k + bn - 1];
        if (top == 0) continue;
        t = top * inv;
        for (std::size_t j = 0; j + 1 < bn; ++j) {
            if (bc[j] != 0) rem[k + j] -= t * bc[j];
        }
        top = 0;
        quo[k] = t;
    }
    rem.resize(bn - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial &a, const Polynomial &b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDivision, "polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.degree() == 0) return a * (1 / b.leading());
    auto [ca, ia] = a.primitive_part();
    auto [cb, ib] = b.primitive_part();
    std::vector<BigInt> q;
    if (!int_exact_div(ia, ib, &q)) {
        throw Error(ErrorKind::InvalidArgument, "exact_quotient: division is not exact");
    }
    return Polynomial::from_integers(q) * (ca / cb);
}

bool divides(const Polynomial &d, const Polynomial &a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero() || d.degree() == 0) return true;
    if (d.degree() > a.degree()) return false;
    auto ia = a.primitive_part().second;
    auto id = d.primitive_part().second;
    return int_exact_div(ia, id, nullptr);
}

Polynomial poly_gcd(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial::constant(Rational(1));
    auto ia = a.primitive_part().second;
    auto ib = b.primitive_part().second;
    if (ia == ib) return a.monic();
    std::vector<BigInt> g = gcd_heuristic(ia, ib);
    if (!g.empty()) return Polynomial::from_integers(g).monic();
    return gcd_euclid(a.monic(), b.monic());
}

Polynomial poly_lcm(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial g = poly_gcd(a, b);
    return (exact_quotient(a, g) * b).monic();
}

ExtendedGcd extended_gcd(const Polynomial &a, const Polynomial &b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Rational(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        DivisionResult qr = divmod(r0, r1);
        Polynomial s2 = s0 - qr.quotient * s1;
        Polynomial t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquarefreeFactor> squarefree_factor(const Polynomial &a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_factor of zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (a.degree() == 0) return out;
    Polynomial f = a.monic();
    Polynomial df = f.derivative();
    Polynomial c = poly_gcd(f, df);
    Polynomial w = exact_quotient(f, c);
    Polynomial y = exact_quotient(df, c);
    Polynomial z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial g = poly_gcd(w, z);
        if (g.degree() > 0) out.push_back({g, i});
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

int multiplicity_of(const Polynomial &d, const Polynomial &a) {
    if (d.degree() <= 0) throw Error(ErrorKind::InvalidArgument, "multiplicity_of: constant divisor");
    if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity_of: zero polynomial");
    auto id = d.primitive_part().second;
    auto ia = a.primitive_part().second;
    int k = 0;
    std::vector<BigInt> q;
    while (int_exact_div(ia, id, &q)) {
        ia = int_primitive(std::move(q));
        ++k;
    }
    return k;
}

std::vector<RationalRoot> rational_roots(const Polynomial &a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational_roots of zero polynomial");
    std::vector<RationalRoot> out;
    if (a.degree() == 0) return out;
    Polynomial sqf = exact_quotient(a, poly_gcd(a, a.derivative()));
    std::vector<BigInt> p = sqf.primitive_part().second;
    std::vector<Rational> roots;
    if (p[0] == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    auto rest = rational_roots_squarefree(p);
    roots.insert(roots.end(), rest.begin(), rest.end());
    std::sort(roots.begin(), roots.end());
    for (const auto &r : roots) out.push_back({r, multiplicity_of(Polynomial::linear(r), a)});
    return out;
}

}  // namespace fuchsian
