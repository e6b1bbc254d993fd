#include "fuchsian/catalog.hpp"

#include "fuchsian/error.hpp"
#include "fuchsian/parser.hpp"
#include "fuchsian/sympow.hpp"

#include <charconv>

namespace fuchsian {

extern const char *const kCatalogText;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

long to_long(std::string_view s, int line) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(line) + ": bad integer");
    return v;
}

}  // namespace

LinearODE build_equation(const EquationSource &src) {
    if (src.order < 1 || static_cast<int>(src.coefficients.size()) != src.order)
        throw Error(ErrorKind::InvalidArgument,
                    "equation '" + src.key + "' needs " + std::to_string(src.order) + " coefficients");
    std::vector<RationalFunction> full;
    for (const auto &c : src.coefficients) full.push_back(parse_expression(c, src.variable));
    full.push_back(src.leading.empty() ? RationalFunction(1) : parse_expression(src.leading, src.variable));
    return LinearODE::from_operator(full, src.variable);
}

std::vector<EquationSource> parse_catalog(std::string_view text) {
    std::vector<EquationSource> out;
    int lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(lineno) + ": bad header");
            out.emplace_back();
            out.back().key = std::string(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (out.empty() || eq == std::string_view::npos)
            throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(lineno) + ": expected name = value");
        std::string_view name = trim(line.substr(0, eq));
        std::string value(trim(line.substr(eq + 1)));
        EquationSource &e = out.back();
        if (name == "var") {
            e.variable = value;
        } else if (name == "order") {
            e.order = static_cast<int>(to_long(value, lineno));
            e.coefficients.assign(static_cast<std::size_t>(e.order), "0");
        } else if (name == "leading") {
            e.leading = value;
        } else if (name == "pullback_of") {
            e.pullback_of = value;
        } else if (name == "map") {
            e.map = value;
        } else if (name == "group_order") {
            e.group_order = to_long(value, lineno);
        } else if (name.size() > 1 && name.front() == 'a') {
            long i = to_long(name.substr(1), lineno);
            if (i < 0 || i >= e.order)
                throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(lineno) + ": coefficient index out of range");
            e.coefficients[static_cast<std::size_t>(i)] = value;
        } else {
            throw Error(ErrorKind::InvalidArgument, "catalog line " + std::to_string(lineno) + ": unknown field '" + std::string(name) + "'");
        }
    }
    return out;
}

const std::vector<EquationSource> &builtin_catalog() {
    static const std::vector<EquationSource> entries = parse_catalog(kCatalogText);
    return entries;
}

const EquationSource &catalog_entry(std::string_view key) {
    for (const auto &e : builtin_catalog())
        if (e.key == key) return e;
    throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + std::string(key) + "'");
}

LinearODE catalog(std::string_view key) {
    if (key.starts_with("St:")) {
        try {
            return standard_equation(parse_group(key.substr(3)));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::UnknownGroup) throw;
            throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + std::string(key) + "'");
        }
    }
    return build_equation(catalog_entry(key));
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    for (const auto &e : builtin_catalog()) keys.push_back(e.key);
    for (const char *k : {"St:A4", "St:S4", "St:A5", "St:D2n:<n>"}) keys.emplace_back(k);
    return keys;
}

}  // namespace fuchsian
