#include "fuchsian.h"

#include "CLI11.hpp"

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct OdeDeleter {
    void operator()(fu_ode *p) const { fu_ode_free(p); }
};
using Ode = std::unique_ptr<fu_ode, OdeDeleter>;

struct Failure {
    fu_status status;
};

void check(fu_status s) {
    if (s != FU_OK) throw Failure{s};
}

struct EquationArgs {
    std::string catalog;
    std::vector<std::string> coeffs;
    int order = 0;
    std::string leading;
    std::string var = "x";

    void add(CLI::App *app, const std::string &prefix = "") {
        auto *c = app->add_option("--" + prefix + "catalog", catalog, "catalog key");
        auto *k = app->add_option("--" + prefix + "coeffs", coeffs, "coefficients a0 .. a(n-1)");
        c->excludes(k);
        app->add_option("--" + prefix + "order", order, "order (defaults to the number of coefficients)");
        app->add_option("--" + prefix + "leading", leading, "leading coefficient (default 1)");
        app->add_option("--" + prefix + "var", var, "variable name")->capture_default_str();
    }

    bool given() const { return !catalog.empty() || !coeffs.empty(); }

    Ode load() const {
        fu_ode *out = nullptr;
        if (!catalog.empty()) {
            check(fu_ode_from_catalog(catalog.c_str(), &out));
        } else if (!coeffs.empty()) {
            int n = order > 0 ? order : static_cast<int>(coeffs.size());
            if (n != static_cast<int>(coeffs.size()))
                throw CLI::ValidationError("--order", "expected " + std::to_string(n) + " coefficients");
            std::vector<const char *> ptrs;
            for (const auto &c : coeffs) ptrs.push_back(c.c_str());
            check(fu_ode_from_coeffs(n, ptrs.data(), leading.empty() ? nullptr : leading.c_str(), var.c_str(),
                                     &out));
        } else {
            throw CLI::RequiredError("--catalog or --coeffs");
        }
        return Ode(out);
    }
};

void emit(fu_status s, char **text) {
    check(s);
    std::fputs(*text, stdout);
    fu_string_free(*text);
    *text = nullptr;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact analysis of Fuchsian linear ODEs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    EquationArgs eq, other;
    long group_order = 0, base_genus = 0;
    std::string map, map_var = "x", pullback_of, group;
    std::vector<std::string> places;
    int degree = 0;

    auto *analyze = app.add_subcommand("analyze", "exponents, Delta and the Fuchs relation");
    eq.add(analyze);
    analyze->add_option("--group-order", group_order, "also report the genus for this group order");

    auto *genus = app.add_subcommand("genus", "genus of the solution curve");
    eq.add(genus);
    genus->add_option("--group-order", group_order, "order M of the projective group")->required();
    genus->add_option("--base-genus", base_genus, "genus of the base curve")->capture_default_str();
    genus->add_option("--place", places, "extra place (polynomial or 'infinity')");

    auto *pull = app.add_subcommand("pullback", "pullback along a rational map");
    eq.add(pull);
    pull->add_option("--map", map, "rational map f(x)")->required();
    pull->add_option("--map-var", map_var, "variable of the map")->capture_default_str();

    auto *norm = app.add_subcommand("normalize", "projective normal form");
    eq.add(norm);

    auto *equiv = app.add_subcommand("equiv", "projective equivalence of two equations");
    eq.add(equiv);
    other.add(equiv, "other-");
    equiv->add_option("--pullback-of", pullback_of, "compare with the pullback of this catalog equation");
    equiv->add_option("--map", map, "map for --pullback-of (default: the catalog's)");
    equiv->add_option("--map-var", map_var, "variable of the map")->capture_default_str();

    auto *sym = app.add_subcommand("sympow", "symmetric power of an order-2 equation");
    eq.add(sym);
    sym->add_option("-d,--degree", degree, "degree")->required()->check(CLI::PositiveNumber);

    auto *ratsol = app.add_subcommand("ratsol", "rational solutions");
    eq.add(ratsol);
    ratsol->add_option("-d,--degree", degree, "take this symmetric power first")->check(CLI::PositiveNumber);

    auto *ruled = app.add_subcommand("ruled", "ruled surface of a standard equation");
    ruled->add_option("--group", group, "A4, S4, A5 or D2n:<n>")->required();
    ruled->add_option("-d,--degree", degree, "symmetric power degree (default per group)")
        ->check(CLI::PositiveNumber);

    auto *cat = app.add_subcommand("catalog", "list catalog keys or show one entry");
    std::string key;
    cat->add_option("key", key, "catalog key");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const fu_format fmt = format == "json" ? FU_FORMAT_JSON : FU_FORMAT_TEXT;
    char *out = nullptr;
    try {
        if (*analyze) {
            emit(fu_analyze(eq.load().get(), group_order, fmt, &out), &out);
        } else if (*genus) {
            std::vector<const char *> ptrs;
            for (const auto &p : places) ptrs.push_back(p.c_str());
            emit(fu_genus(eq.load().get(), group_order, base_genus, ptrs.data(), static_cast<int>(ptrs.size()), fmt,
                          &out), &out);
        } else if (*pull) {
            fu_ode *res = nullptr;
            check(fu_pullback(eq.load().get(), map.c_str(), map_var.c_str(), &res));
            Ode hold(res);
            emit(fu_report_equation(res, "pullback", fmt, &out), &out);
        } else if (*norm) {
            fu_ode *res = nullptr;
            check(fu_normalize(eq.load().get(), &res));
            Ode hold(res);
            emit(fu_report_equation(res, "normalize", fmt, &out), &out);
        } else if (*equiv) {
            Ode a = eq.load();
            Ode b;
            if (!pullback_of.empty()) {
                if (other.given()) throw CLI::ValidationError("--pullback-of", "conflicts with --other-*");
                std::string m = map;
                if (m.empty()) {
                    if (eq.catalog.empty()) throw CLI::RequiredError("--map");
                    char *partner = nullptr, *cmap = nullptr;
                    check(fu_catalog_pullback(eq.catalog.c_str(), &partner, &cmap));
                    if (cmap) m = cmap;
                    fu_string_free(partner);
                    fu_string_free(cmap);
                    if (m.empty()) throw CLI::RequiredError("--map");
                }
                fu_ode *base = nullptr;
                check(fu_ode_from_catalog(pullback_of.c_str(), &base));
                Ode hold(base);
                fu_ode *res = nullptr;
                check(fu_pullback(base, m.c_str(), map_var.c_str(), &res));
                b.reset(res);
            } else {
                b = other.load();
            }
            emit(fu_equiv_report(a.get(), b.get(), fmt, &out), &out);
        } else if (*sym) {
            fu_ode *res = nullptr;
            check(fu_sympow(eq.load().get(), degree, &res));
            Ode hold(res);
            emit(fu_report_equation(res, "sympow", fmt, &out), &out);
        } else if (*ratsol) {
            emit(fu_ratsol(eq.load().get(), degree, fmt, &out), &out);
        } else if (*ruled) {
            emit(fu_ruled(group.c_str(), degree, fmt, &out), &out);
        } else if (*cat) {
            emit(fu_catalog(key.empty() ? nullptr : key.c_str(), fmt, &out), &out);
        }
    } catch (const Failure &f) {
        std::fprintf(stderr, "error: %s: %s\n", fu_status_name(f.status), fu_last_error());
        return fu_status_is_input_error(f.status) ? 2 : 1;
    } catch (const CLI::Error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
