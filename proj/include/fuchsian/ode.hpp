#pragma once

#include "fuchsian/ratfunc.hpp"

#include <string>
#include <vector>

namespace fuchsian {

// sum_{i=0}^{m} c_i D^i with D = d/dx; not necessarily monic.
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<RationalFunction> coefficients);

    static DiffOperator identity();
    static DiffOperator derivation();

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RationalFunction> &coefficients() const { return coeffs_; }
    const RationalFunction &operator[](int i) const;

    // D o this
    DiffOperator derive() const;
    // f * this
    DiffOperator scaled(const RationalFunction &f) const;
    DiffOperator &operator+=(const DiffOperator &o);

    RationalFunction apply(const RationalFunction &y) const;

private:
    void trim();
    std::vector<RationalFunction> coeffs_;
};

// Monic operator D^n + a_{n-1} D^{n-1} + ... + a_0 over Q(x).
class LinearODE {
public:
    // Monic coefficients a_0 .. a_{n-1}.
    explicit LinearODE(std::vector<RationalFunction> coefficients,
                       std::string variable = "x");

    // Divides by the leading coefficient; full = c_0 .. c_n with c_n != 0.
    static LinearODE from_operator(const std::vector<RationalFunction> &full,
                                   std::string variable = "x");
    static LinearODE from_operator(const DiffOperator &op, std::string variable = "x");

    int order() const { return static_cast<int>(coeffs_.size()); }
    // a_i, with a_n = 1.
    const RationalFunction &coefficient(int i) const;
    const std::vector<RationalFunction> &coefficients() const { return coeffs_; }
    const std::string &variable() const { return variable_; }
    LinearODE with_variable(std::string variable) const;

    DiffOperator as_operator() const;
    RationalFunction apply(const RationalFunction &y) const;

    // Coefficient equality; the variable name is a display detail.
    friend bool operator==(const LinearODE &a, const LinearODE &b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    std::vector<RationalFunction> coeffs_;
    std::string variable_;
};

}  // namespace fuchsian
