#pragma once

#include "fuchsian/analysis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fuchsian {

enum class Group { A4, S4, A5, D2n };

// The Schwarz triple of a standard equation and the derived constants of
// y'' + (a/x^2 + b/(x-1)^2 + c/(x(x-1))) y = 0.
struct StandardEquationSpec {
    Group group = Group::A4;
    long n = 0;  // D2n only
    Rational lambda, mu, nu;
    Rational a, b, c;

    std::string name() const;
};

StandardEquationSpec standard_spec(Group g, long n = 0);
// "A4", "S4", "A5", "D2n:<n>" (also "D<2n>", e.g. "D6").
StandardEquationSpec parse_group(std::string_view tag);

LinearODE standard_equation(const StandardEquationSpec &spec);

// y'' - f y = 0  ->  y'' - (f'/f) y' - f y = 0, satisfied by the derivatives.
LinearODE derivative_equation(const LinearODE &L);

// Annihilator of all d-fold products of solutions of the order-2 operator L.
LinearODE symmetric_power(const LinearODE &L, int d);

struct InvariantBasis {
    int degree = 0;  // symmetric power the basis came from, 0 if none
    std::vector<RationalFunction> basis;
};

// Every rational solution has the form P/denominator with deg P <= degree_bound.
struct SolutionBounds {
    bool possible = true;
    Polynomial denominator;
    int degree_bound = -1;
};

// L must be regular at every finite place; infinity may be irregular.
SolutionBounds rational_solution_bounds(const LinearODE &L);
InvariantBasis rational_solutions(const LinearODE &L);

struct LineBundle {
    int degree = 0;
    std::vector<Polynomial> generators;
};

LineBundle line_bundle_degree(const std::vector<RationalFunction> &basis);

struct RuledSurfaceDescriptor {
    int d = 0;
    int degL = 0;
    int degLprime = 0;
    int twist = 0;  // |degLprime - degL|
    std::vector<Polynomial> generatorsL;
    std::vector<Polynomial> generatorsLprime;
    int dimL = 0;
    int dimLprime = 0;
};

// Symmetric-power degree used for each group when none is given.
int default_degree(const StandardEquationSpec &spec);

RuledSurfaceDescriptor ruled_surface(const StandardEquationSpec &spec, int d);

}  // namespace fuchsian
