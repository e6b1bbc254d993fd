#include "report.hpp"

#include "fuchsian/catalog.hpp"
#include "fuchsian/transform.hpp"

#include <sstream>

namespace fuchsian {

using nlohmann::ordered_json;

namespace {

ordered_json rationals(const std::vector<Rational> &v) {
    ordered_json a = ordered_json::array();
    for (const auto &r : v) a.push_back(to_string(r));
    return a;
}

std::string joined(const std::vector<Rational> &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + "}";
}

ordered_json equation_json(const LinearODE &L) {
    ordered_json e;
    e["order"] = L.order();
    e["variable"] = L.variable();
    ordered_json c = ordered_json::array();
    for (const auto &a : L.coefficients()) c.push_back(a.to_string(L.variable()));
    e["coefficients"] = std::move(c);
    e["text"] = L.to_string();
    return e;
}

ordered_json header(const std::string &command) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    return j;
}

void genus_block(const GenusReport &g, std::string_view var, ordered_json &j, std::ostringstream &os) {
    ordered_json gj;
    gj["hurwitz_sum"] = to_string(g.hurwitz_sum);
    ordered_json pp = ordered_json::array();
    for (const auto &c : g.per_place) {
        ordered_json e;
        e["place"] = place_json(c.place, var);
        e["e"] = c.e;
        e["contribution"] = to_string(c.contribution);
        pp.push_back(std::move(e));
    }
    gj["places"] = std::move(pp);
    os << "hurwitz sum: " << to_string(g.hurwitz_sum) << "\n";
    if (g.genus) {
        gj["group_order"] = g.group_order;
        gj["base_genus"] = g.base_genus;
        gj["genus"] = to_string(*g.genus);
        gj["integral"] = g.genus->get_den() == 1;
        os << "genus: " << to_string(*g.genus) << " (M = " << g.group_order << ", g0 = " << g.base_genus << ")";
        if (g.genus->get_den() != 1) os << " not integral";
        os << "\n";
    }
    j["genus"] = std::move(gj);
}

ordered_json polys(const std::vector<Polynomial> &ps, std::string_view var) {
    ordered_json a = ordered_json::array();
    for (const auto &p : ps) a.push_back(p.to_string(var));
    return a;
}

}  // namespace

std::string Report::render(Format f) const {
    return f == Format::Json ? json.dump(2) + "\n" : text;
}

ordered_json place_json(const Place &p, std::string_view var) {
    ordered_json j;
    if (p.is_infinity()) {
        j["type"] = "infinity";
        return j;
    }
    j["type"] = "finite";
    j["min_poly"] = p.min_poly.to_string(var);
    if (p.point) j["point"] = to_string(*p.point);
    j["degree"] = p.degree();
    return j;
}

Report equation_report(const std::string &command, const LinearODE &L) {
    Report r;
    r.json = header(command);
    r.json["equation"] = equation_json(L);
    r.text = L.to_string() + "\n";
    return r;
}

Report analyze_report(const LinearODE &L, std::optional<long> group_order) {
    Report r;
    r.json = header("analyze");
    r.json["equation"] = equation_json(L);
    std::ostringstream os;
    os << "equation: " << L.to_string() << "\n";
    const std::string &var = L.variable();
    if (!is_fuchsian(L)) {
        std::string where;
        for (const auto &p : singular_places(L))
            if (!is_fuchsian_at(L, p)) where += (where.empty() ? "" : ", ") + p.label(var);
        throw Error(ErrorKind::NotFuchsian, "operator is not Fuchsian at " + where);
    }
    r.json["fuchsian"] = true;
    os << "fuchsian: yes\n";
    const auto reps = exponent_reports(L);
    ordered_json places = ordered_json::array();
    for (const auto &rep : reps) {
        ordered_json e;
        e["place"] = place_json(rep.place, var);
        e["exponents"] = rationals(rep.exponents);
        e["delta"] = to_string(rep.delta);
        e["e"] = rep.ram_index;
        e["apparent"] = rep.apparent;
        places.push_back(std::move(e));
        os << "place " << rep.place.label(var) << ": exponents " << joined(rep.exponents) << "  delta "
           << to_string(rep.delta) << "  e " << rep.ram_index << (rep.apparent ? "  apparent" : "") << "\n";
    }
    r.json["places"] = std::move(places);
    Rational total;
    for (const auto &rep : reps) total += Rational(rep.place.degree()) * rep.delta;
    r.json["delta_total"] = to_string(total);
    os << "delta total: " << to_string(total) << "\n";
    const FuchsCheck fc = fuchs_relation_check(reps, L.order());
    r.json["fuchs_relation"] = {{"lhs", to_string(fc.lhs)}, {"rhs", to_string(fc.rhs)}, {"ok", fc.ok}};
    os << "fuchs relation: " << to_string(fc.lhs) << " = " << to_string(fc.rhs) << (fc.ok ? " ok" : " FAILED") << "\n";
    if (group_order) genus_block(genus_report(L, group_order), var, r.json, os);
    r.text = os.str();
    return r;
}

Report genus_command_report(const LinearODE &L, long M, long g0, const std::vector<Place> &extra) {
    Report r;
    r.json = header("genus");
    r.json["equation"] = equation_json(L);
    std::ostringstream os;
    genus_block(genus_report(L, M, g0, extra), L.variable(), r.json, os);
    r.text = os.str();
    return r;
}

Report equivalence_report(const LinearODE &L1, const LinearODE &L2) {
    Report r;
    r.json = header("equiv");
    const bool eq = projectively_equivalent(L1, L2);
    r.json["equivalent"] = eq;
    r.json["normal_form"] = equation_json(projective_normalize(L1));
    r.text = eq ? "true\n" : "false\n";
    return r;
}

Report rational_solutions_report(const LinearODE &L, const InvariantBasis &basis) {
    Report r;
    r.json = header("ratsol");
    if (basis.degree) r.json["degree"] = basis.degree;
    r.json["dimension"] = basis.basis.size();
    ordered_json b = ordered_json::array();
    std::ostringstream os;
    os << "dimension: " << basis.basis.size() << "\n";
    for (const auto &f : basis.basis) {
        b.push_back(f.to_string(L.variable()));
        os << f.to_string(L.variable()) << "\n";
    }
    r.json["basis"] = std::move(b);
    r.text = os.str();
    return r;
}

Report ruled_report(const StandardEquationSpec &spec, const RuledSurfaceDescriptor &d) {
    Report r;
    r.json = header("ruled");
    r.json["group"] = spec.name();
    r.json["d"] = d.d;
    r.json["degL"] = d.degL;
    r.json["degLprime"] = d.degLprime;
    r.json["N"] = d.twist;
    r.json["dimL"] = d.dimL;
    r.json["dimLprime"] = d.dimLprime;
    r.json["generatorsL"] = polys(d.generatorsL, "x");
    r.json["generatorsLprime"] = polys(d.generatorsLprime, "x");
    std::ostringstream os;
    os << "St:" << spec.name() << " d=" << d.d << ": P(O(" << d.degL << ") + O(" << d.degLprime << ")), N = " << d.twist
       << "\n";
    r.text = os.str();
    return r;
}

Report catalog_report() {
    Report r;
    r.json = header("catalog");
    ordered_json keys = ordered_json::array();
    std::string text;
    for (const auto &k : catalog_keys()) {
        keys.push_back(k);
        text += k + "\n";
    }
    r.json["keys"] = std::move(keys);
    r.text = text;
    return r;
}

Report catalog_entry_report(const std::string &key) {
    LinearODE L = catalog(key);
    Report r = equation_report("catalog", L);
    r.json["key"] = key;
    if (!key.starts_with("St:")) {
        const EquationSource &e = catalog_entry(key);
        if (!e.pullback_of.empty()) {
            r.json["pullback_of"] = e.pullback_of;
            r.json["map"] = e.map;
            r.text += "pullback of " + e.pullback_of + " by " + e.map + "\n";
        }
        if (e.group_order) {
            r.json["group_order"] = e.group_order;
            r.text += "group order " + std::to_string(e.group_order) + "\n";
        }
    }
    return r;
}

}  // namespace fuchsian
