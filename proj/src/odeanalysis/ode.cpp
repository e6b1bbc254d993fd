#include "fuchsian/ode.hpp"

#include "fuchsian/error.hpp"

#include <sstream>

namespace fuchsian {

DiffOperator::DiffOperator(std::vector<RationalFunction> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

DiffOperator DiffOperator::identity() { return DiffOperator({RationalFunction(1)}); }

DiffOperator DiffOperator::derivation() {
    return DiffOperator({RationalFunction(), RationalFunction(1)});
}

const RationalFunction &DiffOperator::operator[](int i) const {
    static const RationalFunction zero;
    if (i < 0 || i > order()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void DiffOperator::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOperator DiffOperator::derive() const {
    // D (c D^k) = c' D^k + c D^(k+1)
    std::vector<RationalFunction> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] += coeffs_[k].derivative();
        out[k + 1] += coeffs_[k];
    }
    return DiffOperator(std::move(out));
}

DiffOperator DiffOperator::scaled(const RationalFunction &f) const {
    std::vector<RationalFunction> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_) out.push_back(c * f);
    return DiffOperator(std::move(out));
}

DiffOperator &DiffOperator::operator+=(const DiffOperator &o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

RationalFunction DiffOperator::apply(const RationalFunction &y) const {
    RationalFunction acc;
    RationalFunction dy = y;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) dy = dy.derivative();
        if (!coeffs_[k].is_zero()) acc += coeffs_[k] * dy;
    }
    return acc;
}

LinearODE::LinearODE(std::vector<RationalFunction> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), variable_(std::move(variable)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "operator order must be at least 1");
}

LinearODE LinearODE::from_operator(const std::vector<RationalFunction> &full,
                                   std::string variable) {
    if (full.size() < 2) throw Error(ErrorKind::InvalidArgument, "operator order must be at least 1");
    const RationalFunction &lead = full.back();
    if (lead.is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "leading coefficient is zero");
    RationalFunction inv = lead.inverse();
    std::vector<RationalFunction> monic;
    monic.reserve(full.size() - 1);
    for (std::size_t i = 0; i + 1 < full.size(); ++i) monic.push_back(full[i] * inv);
    return LinearODE(std::move(monic), std::move(variable));
}

LinearODE LinearODE::from_operator(const DiffOperator &op, std::string variable) {
    return from_operator(op.coefficients(), std::move(variable));
}

const RationalFunction &LinearODE::coefficient(int i) const {
    static const RationalFunction one(1);
    if (i == order()) return one;
    return coeffs_.at(static_cast<std::size_t>(i));
}

LinearODE LinearODE::with_variable(std::string variable) const {
    LinearODE out = *this;
    out.variable_ = std::move(variable);
    return out;
}

DiffOperator LinearODE::as_operator() const {
    std::vector<RationalFunction> full = coeffs_;
    full.emplace_back(1);
    return DiffOperator(std::move(full));
}

RationalFunction LinearODE::apply(const RationalFunction &y) const {
    return as_operator().apply(y);
}

std::string LinearODE::to_string() const {
    std::ostringstream os;
    const int n = order();
    auto dname = [&](int k) {
        if (k == 0) return std::string("y");
        if (k <= 3) return "y" + std::string(static_cast<std::size_t>(k), '\'');
        return "y^(" + std::to_string(k) + ")";
    };
    os << dname(n);
    for (int i = n - 1; i >= 0; --i) {
        const auto &c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        os << " + (" << c.to_string(variable_) << ")*" << dname(i);
    }
    os << " = 0";
    return os.str();
}

}  // namespace fuchsian
