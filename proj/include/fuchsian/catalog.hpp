#pragma once

#include "fuchsian/ode.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fuchsian {

// Coefficient-wise equation text: a_0 .. a_{n-1}, optionally divided by a
// leading coefficient.
struct EquationSource {
    std::string key;
    int order = 0;
    std::string variable = "x";
    std::vector<std::string> coefficients;
    std::string leading;
    std::string pullback_of;
    std::string map;
    long group_order = 0;
};

LinearODE build_equation(const EquationSource &src);

// Records of the form "[key]" followed by "name = value" lines.
std::vector<EquationSource> parse_catalog(std::string_view text);

const std::vector<EquationSource> &builtin_catalog();
const EquationSource &catalog_entry(std::string_view key);
// Catalog records plus St:A4, St:S4, St:A5, St:D2n:<n>.
LinearODE catalog(std::string_view key);
std::vector<std::string> catalog_keys();

}  // namespace fuchsian
