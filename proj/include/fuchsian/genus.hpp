#pragma once

#include "fuchsian/analysis.hpp"
#include "fuchsian/transform.hpp"

#include <optional>
#include <vector>

namespace fuchsian {

struct PlaceContribution {
    Place place;
    long e = 1;
    Rational contribution;  // deg(p) (1 - 1/e)
};

struct GenusReport {
    Rational hurwitz_sum;
    std::optional<Rational> genus;  // set when a group order was given
    long group_order = 0;
    long base_genus = 0;
    std::vector<PlaceContribution> per_place;
};

// sum deg(p) (1 - 1/e(L,p)) over the singular places, plus any extra places.
Rational hurwitz_sum(const LinearODE &L);
Rational hurwitz_sum(const LinearODE &L, const std::vector<Place> &extra);

// g with 2(g-1)/M = 2(g0-1) + sum.
Rational genus_from_cover(const Rational &sum, long M, long g0 = 0);

GenusReport genus_report(const LinearODE &L, std::optional<long> M, long g0 = 0,
                         const std::vector<Place> &extra = {});

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool ok = false;
};

// M (Delta(L0)/(n-1) + 2) against Delta(pullback)/(n-1) + 2.
IdentityCheck pullback_delta_identity(const LinearODE &L0, const RationalMap &f);

// g solved from M (Delta(L0)/(n-1) + 2) = Delta(pullback)/(n-1) - 2(g-1).
Rational genus_from_delta(const LinearODE &L0, const RationalMap &f);

}  // namespace fuchsian
