#pragma once

#include "fuchsian/analysis.hpp"

#include <utility>
#include <vector>

namespace fuchsian {

// Non-constant map x -> f(x) of the projective line.
class RationalMap {
public:
    explicit RationalMap(RationalFunction f);

    const RationalFunction &function() const { return f_; }
    int degree() const { return degree_; }

private:
    RationalFunction f_;
    int degree_;
};

// Monic operator annihilating y(f(x)) for every solution y of L0.
LinearODE pullback(const LinearODE &L0, const RationalMap &f);

// Monic operator whose solutions are exp(int r) times those of L.
LinearODE exp_product(const LinearODE &L, const RationalFunction &r);

// True when exp(int r) has poles of order > 1 somewhere (an irregular
// twist): the exponent invariants are not asserted for those.
bool twist_is_irregular(const RationalFunction &r);

// The twist r = a_{n-1}/n killing the D^{n-1} coefficient.
RationalFunction normalizing_twist(const LinearODE &L);
LinearODE projective_normalize(const LinearODE &L);
bool projectively_equivalent(const LinearODE &L1, const LinearODE &L2);

// Ramification index of f at a place of the source line.
int ramification_index(const RationalMap &f, const Place &p);

// The places over `target` with their ramification indices, in place order.
std::vector<std::pair<Place, int>> fibre(const RationalMap &f, const Place &target);

// f(g(x)); degree is multiplicative.
RationalMap compose(const RationalMap &f, const RationalMap &g);

}  // namespace fuchsian
