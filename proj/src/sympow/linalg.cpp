#include "fuchsian/linalg.hpp"

namespace fuchsian {

namespace {

using IntRow = std::vector<BigInt>;

IntRow to_integer_row(const std::vector<Rational> &row) {
    BigInt l = 1;
    for (const auto &c : row)
        if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntRow out(row.size());
    BigInt g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        out[j] = row[j].get_num() * (l / row[j].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
    }
    if (g > 1)
        for (auto &c : out)
            if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<int> pivots;
};

// Fraction-free (Bareiss) row echelon form.
Echelon echelon(const Matrix &m, int ncols) {
    std::vector<IntRow> a;
    a.reserve(m.size());
    for (const auto &row : m) {
        IntRow r = to_integer_row(row);
        r.resize(static_cast<std::size_t>(ncols));
        bool nz = false;
        for (const auto &c : r) nz = nz || c != 0;
        if (nz) a.push_back(std::move(r));
    }
    Echelon e;
    BigInt prev = 1;
    std::size_t top = 0;
    BigInt t;
    for (int c = 0; c < ncols && top < a.size(); ++c) {
        std::size_t piv = a.size();
        std::size_t best_size = 0;
        for (std::size_t r = top; r < a.size(); ++r) {
            if (a[r][c] == 0) continue;
            std::size_t sz = mpz_sizeinbase(a[r][c].get_mpz_t(), 2);
            if (piv == a.size() || sz < best_size) {
                piv = r;
                best_size = sz;
            }
        }
        if (piv == a.size()) continue;
        std::swap(a[piv], a[top]);
        const BigInt p = a[top][c];
        for (std::size_t r = top + 1; r < a.size(); ++r) {
            const BigInt f = a[r][c];
            for (int k = c + 1; k < ncols; ++k) {
                // a[r][k] = (p a[r][k] - f a[top][k]) / prev
                t = p * a[r][k];
                mpz_submul(t.get_mpz_t(), f.get_mpz_t(), a[top][k].get_mpz_t());
                mpz_divexact(a[r][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = p;
        e.pivots.push_back(c);
        ++top;
    }
    a.resize(top);
    e.rows = std::move(a);
    return e;
}

}  // namespace

int rank(const Matrix &m, int ncols) { return static_cast<int>(echelon(m, ncols).pivots.size()); }

Matrix nullspace(const Matrix &m, int ncols) {
    Echelon e = echelon(m, ncols);
    std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
    for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    Matrix out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(ncols));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = e.pivots.size(); i-- > 0;) {
            const int c = e.pivots[i];
            Rational s = 0;
            const IntRow &row = e.rows[i];
            for (int k = c + 1; k < ncols; ++k)
                if (row[k] != 0 && v[static_cast<std::size_t>(k)] != 0) s += Rational(row[k]) * v[k];
            v[static_cast<std::size_t>(c)] = -s / Rational(row[c]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace fuchsian
