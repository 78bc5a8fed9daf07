#include "braidalg/io.hpp"

#include <fstream>

#include "braidalg/errors.hpp"
#include "braidalg/expr.hpp"

namespace braidalg {

using nlohmann::json;

std::string poly_to_expr(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        out += "(" + it->second.str() + ")";
        if (!it->first.empty()) out += " " + word_str(*p.sig(), it->first);
    }
    return out;
}

std::string group_alg_to_expr(const GroupAlgElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [x, c] : e.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ") t(";
        for (size_t i = 0; i < x.e.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(x.e[i]);
        }
        out += ")";
    }
    return out;
}

namespace {

json group_to_json(const FgAbelianGroup& g) {
    return json{{"rank", g.rank}, {"torsion", g.torsion}};
}

FgAbelianGroup group_from_json(const json& j) {
    FgAbelianGroup g;
    g.rank = j.at("rank").get<int64_t>();
    if (j.contains("torsion")) g.torsion = j.at("torsion").get<std::vector<int64_t>>();
    return g;
}

json ge_to_json(const GroupElement& e) {
    return json(e.e);
}

GroupElement ge_from_json(const json& j, const FgAbelianGroup& g) {
    return ge_reduce(g, j.get<std::vector<int64_t>>());
}

std::vector<std::string> rank_descending_names(const Signature& sig) {
    std::vector<int> ids(sig.gens.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return sig.rank[static_cast<size_t>(a)] > sig.rank[static_cast<size_t>(b)];
    });
    std::vector<std::string> names;
    for (int id : ids) names.push_back(sig.gens[static_cast<size_t>(id)].name);
    return names;
}

} // namespace

json presentation_to_json(const Presentation& p) {
    json j;
    j["schema"] = 1;
    j["kind"] = p.is_braided() ? "braided" : "hopf";
    j["scalars"] = {{"cyclotomic_order", p.ring->zeta_order},
                    {"unitary", p.ring->unitary},
                    {"positive", p.ring->positive}};
    j["group"] = group_to_json(p.group);
    json gens = json::array();
    for (size_t i = 0; i < p.sig->gens.size(); ++i) {
        const GenInfo& g = p.sig->gens[i];
        json e;
        e["name"] = g.name;
        e["bidegree"] = {ge_to_json(g.degL), ge_to_json(g.degR)};
        e["star"] = p.sig->gens[static_cast<size_t>(g.star_partner)].name;
        if (!g.star_coeff.is_one()) e["star_coeff"] = g.star_coeff.str();
        e["pi"] = group_alg_to_expr(p.pi[i]);
        gens.push_back(e);
    }
    j["generators"] = gens;
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back(poly_to_expr(r));
    j["relations"] = rels;
    json cop, cou, ant;
    for (size_t i = 0; i < p.sig->gens.size(); ++i) {
        const std::string& nm = p.sig->gens[i].name;
        cop[nm] = poly_to_expr(p.coproduct[i]);
        cou[nm] = p.counit[i].str();
        ant[nm] = poly_to_expr(p.antipode[i]);
    }
    j["coproduct"] = cop;
    j["counit"] = cou;
    j["antipode"] = ant;
    j["precedence"] = p.precedence ? *p.precedence : rank_descending_names(*p.sig);
    j["completion_cap"] = {{"rules", p.caps.max_rules},
                           {"length", p.caps.max_len},
                           {"steps", p.caps.step_budget}};
    if (p.braiding) {
        json rows = json::array();
        for (const auto& row : p.braiding->values()) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(r);
        }
        j["braiding"] = rows;
    }
    if (p.twist_grading) {
        json tg = json::array();
        for (const auto& t : *p.twist_grading)
            tg.push_back({ge_to_json(t.p1), ge_to_json(t.p2), ge_to_json(t.q1),
                          ge_to_json(t.q2)});
        j["twist_grading"] = tg;
    }
    return j;
}

Presentation presentation_from_json(const json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw IoError("unsupported presentation schema");
    const json& sc = j.at("scalars");
    auto ring = make_ring(sc.at("cyclotomic_order").get<unsigned>(),
                          sc.value("unitary", std::vector<std::string>{}),
                          sc.value("positive", std::vector<std::string>{}));
    FgAbelianGroup group = group_from_json(j.at("group"));

    const json& gens_j = j.at("generators");
    std::vector<GenInfo> gens;
    std::map<std::string, int> name_to_id;
    int id = 0;
    for (const auto& e : gens_j) {
        std::string name = e.at("name").get<std::string>();
        if (name_to_id.count(name)) throw IoError("duplicate generator name " + name);
        name_to_id[name] = id++;
    }
    for (const auto& e : gens_j) {
        GenInfo g;
        g.name = e.at("name").get<std::string>();
        g.degL = ge_from_json(e.at("bidegree").at(0), group);
        g.degR = ge_from_json(e.at("bidegree").at(1), group);
        std::string partner = e.at("star").get<std::string>();
        if (!name_to_id.count(partner)) throw IoError("unknown star partner " + partner);
        g.star_partner = name_to_id.at(partner);
        g.star_coeff = e.contains("star_coeff")
                           ? parse_scalar(ring, e.at("star_coeff").get<std::string>())
                           : Scalar::one(ring);
        gens.push_back(std::move(g));
    }

    PresentationData d;
    d.ring = ring;
    d.group = group;
    std::optional<std::vector<std::string>> prec;
    if (j.contains("precedence")) prec = j.at("precedence").get<std::vector<std::string>>();
    d.precedence = prec;
    d.sig = make_signature(ring, group, gens, prec);
    if (j.contains("completion_cap")) {
        const json& c = j.at("completion_cap");
        d.caps.max_rules = c.value("rules", d.caps.max_rules);
        d.caps.max_len = c.value("length", d.caps.max_len);
        d.caps.step_budget = c.value("steps", d.caps.step_budget);
    }
    for (const auto& r : j.at("relations"))
        d.relations.push_back(parse_poly(d.sig, r.get<std::string>()));
    SigPtr slot2 = make_slot_signature(d.sig, 2);
    for (const auto& e : gens_j) {
        std::string nm = e.at("name").get<std::string>();
        if (!j.at("coproduct").contains(nm))
            throw IoError("missing coproduct for generator " + nm);
        if (!j.at("antipode").contains(nm))
            throw IoError("missing antipode for generator " + nm);
        if (!j.at("counit").contains(nm)) throw IoError("missing counit for generator " + nm);
        d.coproduct.push_back(parse_poly(slot2, j.at("coproduct").at(nm).get<std::string>()));
        d.counit.push_back(parse_scalar(ring, j.at("counit").at(nm).get<std::string>()));
        d.antipode.push_back(parse_poly(d.sig, j.at("antipode").at(nm).get<std::string>()));
        d.pi.push_back(parse_group_alg(group, ring, e.value("pi", "0")));
    }
    bool braided = j.value("kind", "hopf") == std::string("braided");
    if (j.contains("braiding")) {
        std::vector<std::vector<Scalar>> vals;
        for (const auto& row : j.at("braiding")) {
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(parse_scalar(ring, v.get<std::string>()));
            vals.push_back(std::move(r));
        }
        d.braiding = Bicharacter(group, vals);
    } else if (braided) {
        throw IoError("kind braided requires a braiding matrix");
    }
    if (j.contains("twist_grading")) {
        std::vector<Presentation::TwistDeg> tg;
        for (const auto& t : j.at("twist_grading"))
            tg.push_back({ge_from_json(t.at(0), group), ge_from_json(t.at(1), group),
                          ge_from_json(t.at(2), group), ge_from_json(t.at(3), group)});
        d.twist_grading = tg;
    }
    return build_presentation(std::move(d));
}

void save_presentation(const Presentation& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << presentation_to_json(p).dump(2) << "\n";
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return presentation_from_json(j);
}

json bicharacter_to_json(const Bicharacter& b) {
    json j;
    j["group"] = group_to_json(b.group());
    json rows = json::array();
    for (const auto& row : b.values()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    j["matrix"] = rows;
    return j;
}

Bicharacter bicharacter_from_json(const json& j, const ScalarRingPtr& ring) {
    FgAbelianGroup g = group_from_json(j.at("group"));
    std::vector<std::vector<Scalar>> vals;
    for (const auto& row : j.at("matrix")) {
        std::vector<Scalar> r;
        for (const auto& v : row) r.push_back(parse_scalar(ring, v.get<std::string>()));
        vals.push_back(std::move(r));
    }
    return Bicharacter(g, vals);
}

Bicharacter load_bicharacter(const std::string& path, const ScalarRingPtr& ring) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return bicharacter_from_json(j, ring);
}

SubgroupSpec subgroup_from_json(const json& j, const FgAbelianGroup& ambient) {
    std::vector<GroupElement> gens;
    for (const auto& g : j.at("generators")) gens.push_back(ge_from_json(g, ambient));
    return SubgroupSpec(ambient, gens);
}

SubgroupSpec load_subgroup(const std::string& path, const FgAbelianGroup& ambient) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return subgroup_from_json(j, ambient);
}

json report_to_json(const Report& r, long timing_ms) {
    json j;
    j["schema"] = 1;
    j["verb"] = r.verb;
    j["overall"] = status_str(r.overall());
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = status_str(c.status);
        if (!c.certificate.empty()) e["certificate"] = c.certificate;
        checks.push_back(e);
    }
    j["checks"] = checks;
    if (timing_ms >= 0) j["timing_ms"] = timing_ms;
    return j;
}

} // namespace braidalg
