#pragma once

#include "fuchsian/polynomial.hpp"

#include <vector>

namespace fuchsian {

using Matrix = std::vector<std::vector<Rational>>;

// Basis of {v : M v = 0}: one vector per free column, with that entry 1 and
// the other free entries 0 (the reduced-echelon nullspace basis).
Matrix nullspace(const Matrix &m, int ncols);

// Rank over Q.
int rank(const Matrix &m, int ncols);

}  // namespace fuchsian
