#include "fuchsian/genus.hpp"

#include "fuchsian/error.hpp"

#include <algorithm>

namespace fuchsian {

namespace {

std::vector<ExponentReport> reports_with(const LinearODE &L, const std::vector<Place> &extra) {
    std::vector<ExponentReport> reps = exponent_reports(L);
    for (const auto &p : extra) {
        bool seen = std::any_of(reps.begin(), reps.end(),
                                [&](const ExponentReport &r) { return r.place == p; });
        if (!seen) reps.push_back(local_exponents(L, p));
    }
    std::sort(reps.begin(), reps.end(),
              [](const ExponentReport &a, const ExponentReport &b) { return place_less(a.place, b.place); });
    return reps;
}

Rational contribution(const ExponentReport &r) {
    return Rational(r.place.degree()) * (1 - Rational(1, r.ram_index));
}

}  // namespace

Rational hurwitz_sum(const LinearODE &L) { return hurwitz_sum(L, {}); }

Rational hurwitz_sum(const LinearODE &L, const std::vector<Place> &extra) {
    Rational sum;
    for (const auto &r : reports_with(L, extra)) sum += contribution(r);
    return sum;
}

Rational genus_from_cover(const Rational &sum, long M, long g0) {
    if (M < 1) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
    return 1 + make_rational(M, 2) * (sum + 2 * g0 - 2);
}

GenusReport genus_report(const LinearODE &L, std::optional<long> M, long g0,
                         const std::vector<Place> &extra) {
    GenusReport out;
    out.base_genus = g0;
    for (const auto &r : reports_with(L, extra)) {
        Rational c = contribution(r);
        out.hurwitz_sum += c;
        out.per_place.push_back({r.place, r.ram_index, c});
    }
    if (M) {
        out.group_order = *M;
        out.genus = genus_from_cover(out.hurwitz_sum, *M, g0);
    }
    return out;
}

IdentityCheck pullback_delta_identity(const LinearODE &L0, const RationalMap &f) {
    const int n = L0.order();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "identity needs order at least 2");
    const LinearODE L = pullback(L0, f);
    const Rational k(n - 1);
    IdentityCheck c;
    c.lhs = Rational(f.degree()) * (delta_total(L0) / k + 2);
    c.rhs = delta_total(L) / k + 2;
    c.ok = c.lhs == c.rhs;
    return c;
}

Rational genus_from_delta(const LinearODE &L0, const RationalMap &f) {
    const int n = L0.order();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "identity needs order at least 2");
    const Rational k(n - 1);
    const Rational lhs = Rational(f.degree()) * (delta_total(L0) / k + 2);
    return 1 + (delta_total(pullback(L0, f)) / k - lhs) / 2;
}

}  // namespace fuchsian
