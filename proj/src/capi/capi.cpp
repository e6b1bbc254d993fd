#include "fuchsian.h"

#include "../cli/report.hpp"
#include "fuchsian/catalog.hpp"
#include "fuchsian/error.hpp"
#include "fuchsian/parser.hpp"
#include "fuchsian/transform.hpp"

#include <cstring>
#include <new>
#include <string>

struct fu_ode {
    fuchsian::LinearODE L;
};

namespace {

thread_local std::string last_error;

fu_status status_of(fuchsian::ErrorKind k) { return static_cast<fu_status>(static_cast<int>(k) + 1); }

template <class F>
fu_status guarded(F &&f) {
    try {
        f();
        last_error.clear();
        return FU_OK;
    } catch (const fuchsian::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return FU_E_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return FU_E_INTERNAL;
    }
}

char *dup(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void require(const void *p, const char *what) {
    if (!p) throw fuchsian::Error(fuchsian::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

fuchsian::Format format_of(fu_format f) {
    return f == FU_FORMAT_JSON ? fuchsian::Format::Json : fuchsian::Format::Text;
}

fu_ode *wrap(fuchsian::LinearODE L) { return new fu_ode{std::move(L)}; }

std::vector<fuchsian::Place> parse_places(const char *const *items, int n, const std::string &var) {
    std::vector<fuchsian::Place> out;
    for (int i = 0; i < n; ++i) {
        require(items[i], "place");
        std::string s = items[i];
        if (s == "infinity" || s == "inf") {
            out.push_back(fuchsian::Place::infinity());
            continue;
        }
        fuchsian::RationalFunction q = fuchsian::parse_expression(s, var);
        if (!q.is_polynomial() || q.num().degree() < 1)
            throw fuchsian::Error(fuchsian::ErrorKind::InvalidArgument, "place '" + s + "' is not a non-constant polynomial");
        for (const auto &sf : fuchsian::squarefree_factor(q.num()))
            for (auto &p : fuchsian::places_of(sf.factor)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

extern "C" {

const char *fu_last_error(void) { return last_error.c_str(); }

const char *fu_status_name(fu_status s) {
    if (s == FU_OK) return "Ok";
    if (s == FU_E_INTERNAL) return "Internal";
    return fuchsian::error_kind_name(static_cast<fuchsian::ErrorKind>(static_cast<int>(s) - 1));
}

int fu_status_is_input_error(fu_status s) {
    if (s == FU_OK || s == FU_E_INTERNAL) return 0;
    return fuchsian::is_input_error(static_cast<fuchsian::ErrorKind>(static_cast<int>(s) - 1)) ? 1 : 0;
}

fu_status fu_ode_from_coeffs(int order, const char *const *coeffs, const char *leading, const char *var,
                             fu_ode **out) {
    return guarded([&] {
        require(out, "out");
        require(coeffs, "coeffs");
        fuchsian::EquationSource src;
        src.key = "input";
        src.order = order;
        src.variable = var ? var : "x";
        for (int i = 0; i < order; ++i) {
            require(coeffs[i], "coefficient");
            src.coefficients.emplace_back(coeffs[i]);
        }
        if (leading) src.leading = leading;
        *out = wrap(fuchsian::build_equation(src));
    });
}

fu_status fu_ode_from_catalog(const char *key, fu_ode **out) {
    return guarded([&] {
        require(out, "out");
        require(key, "key");
        *out = wrap(fuchsian::catalog(key));
    });
}

void fu_ode_free(fu_ode *ode) { delete ode; }

int fu_ode_order(const fu_ode *ode) { return ode ? ode->L.order() : 0; }

fu_status fu_ode_to_string(const fu_ode *ode, char **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        *out = dup(ode->L.to_string());
    });
}

fu_status fu_pullback(const fu_ode *ode, const char *map, const char *var, fu_ode **out) {
    return guarded([&] {
        require(ode, "ode");
        require(map, "map");
        require(out, "out");
        std::string v = var ? var : "x";
        fuchsian::RationalMap f(fuchsian::parse_expression(map, v));
        *out = wrap(fuchsian::pullback(ode->L, f).with_variable(v));
    });
}

fu_status fu_normalize(const fu_ode *ode, fu_ode **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        *out = wrap(fuchsian::projective_normalize(ode->L));
    });
}

fu_status fu_sympow(const fu_ode *ode, int d, fu_ode **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        *out = wrap(fuchsian::symmetric_power(ode->L, d));
    });
}

fu_status fu_equivalent(const fu_ode *a, const fu_ode *b, int *out) {
    return guarded([&] {
        require(a, "ode");
        require(b, "ode");
        require(out, "out");
        *out = fuchsian::projectively_equivalent(a->L, b->L) ? 1 : 0;
    });
}

fu_status fu_report_equation(const fu_ode *ode, const char *command, fu_format fmt, char **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        *out = dup(fuchsian::equation_report(command ? command : "equation", ode->L).render(format_of(fmt)));
    });
}

fu_status fu_analyze(const fu_ode *ode, long group_order, fu_format fmt, char **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        std::optional<long> M;
        if (group_order > 0) M = group_order;
        *out = dup(fuchsian::analyze_report(ode->L, M).render(format_of(fmt)));
    });
}

fu_status fu_genus(const fu_ode *ode, long group_order, long base_genus, const char *const *extra_places,
                   int n_extra, fu_format fmt, char **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        if (group_order < 1)
            throw fuchsian::Error(fuchsian::ErrorKind::InvalidArgument, "group order must be positive");
        if (base_genus < 0)
            throw fuchsian::Error(fuchsian::ErrorKind::InvalidArgument, "base genus must be non-negative");
        auto extra = parse_places(extra_places, n_extra, ode->L.variable());
        *out = dup(fuchsian::genus_command_report(ode->L, group_order, base_genus, extra).render(format_of(fmt)));
    });
}

fu_status fu_equiv_report(const fu_ode *a, const fu_ode *b, fu_format fmt, char **out) {
    return guarded([&] {
        require(a, "ode");
        require(b, "ode");
        require(out, "out");
        *out = dup(fuchsian::equivalence_report(a->L, b->L).render(format_of(fmt)));
    });
}

fu_status fu_ratsol(const fu_ode *ode, int d, fu_format fmt, char **out) {
    return guarded([&] {
        require(ode, "ode");
        require(out, "out");
        fuchsian::LinearODE L = d > 0 ? fuchsian::symmetric_power(ode->L, d) : ode->L;
        fuchsian::InvariantBasis basis = fuchsian::rational_solutions(L);
        basis.degree = d > 0 ? d : 0;
        *out = dup(fuchsian::rational_solutions_report(L, basis).render(format_of(fmt)));
    });
}

fu_status fu_ruled(const char *group, int d, fu_format fmt, char **out) {
    return guarded([&] {
        require(group, "group");
        require(out, "out");
        auto spec = fuchsian::parse_group(group);
        int deg = d > 0 ? d : fuchsian::default_degree(spec);
        *out = dup(fuchsian::ruled_report(spec, fuchsian::ruled_surface(spec, deg)).render(format_of(fmt)));
    });
}

fu_status fu_catalog(const char *key, fu_format fmt, char **out) {
    return guarded([&] {
        require(out, "out");
        auto r = key ? fuchsian::catalog_entry_report(key) : fuchsian::catalog_report();
        *out = dup(r.render(format_of(fmt)));
    });
}

fu_status fu_catalog_pullback(const char *key, char **partner, char **map) {
    return guarded([&] {
        require(key, "key");
        require(partner, "partner");
        require(map, "map");
        const auto &e = fuchsian::catalog_entry(key);
        *partner = e.pullback_of.empty() ? nullptr : dup(e.pullback_of);
        *map = e.map.empty() ? nullptr : dup(e.map);
    });
}

void fu_string_free(char *s) { std::free(s); }

}  // extern "C"
