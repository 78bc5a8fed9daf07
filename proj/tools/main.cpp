#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidalg/constructions.hpp"
#include "braidalg/errors.hpp"
#include "braidalg/examples.hpp"
#include "braidalg/expr.hpp"
#include "braidalg/io.hpp"
#include "braidalg/stdform.hpp"

using namespace braidalg;
using nlohmann::json;

namespace {

struct GlobalOpts {
    size_t cap_rules = 0;
    size_t cap_len = 0;
    size_t cap_steps = 0;
    double tol = 1e-10;
    bool emit_json = false;
    bool timing = false;
    uint64_t seed = 1;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

CMat cmat_from_json(const json& j) {
    const json& rows = j.contains("matrix") ? j.at("matrix") : j;
    size_t m = rows.size();
    CMat a(static_cast<long>(m), static_cast<long>(rows.at(0).size()));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < rows.at(i).size(); ++k) {
            const json& e = rows.at(i).at(k);
            if (e.is_array())
                a(static_cast<long>(i), static_cast<long>(k)) =
                    std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
            else
                a(static_cast<long>(i), static_cast<long>(k)) = e.get<double>();
        }
    return a;
}

json cmat_to_json(const CMat& a) {
    json rows = json::array();
    for (long i = 0; i < a.rows(); ++i) {
        json r = json::array();
        for (long k = 0; k < a.cols(); ++k)
            r.push_back({a(i, k).real(), a(i, k).imag()});
        rows.push_back(r);
    }
    return rows;
}

std::vector<CharLabel> labels_from_json(const json& j) {
    const json& rows = j.contains("labels") ? j.at("labels") : j;
    std::vector<CharLabel> out;
    for (const auto& r : rows) out.push_back(r.get<CharLabel>());
    return out;
}

NumericBichar shadow_from_json(const json& j) {
    NumericBichar b;
    const json& rows = j.contains("vals") ? j.at("vals") : j;
    for (const auto& r : rows) {
        std::vector<std::complex<double>> row;
        for (const auto& e : r) {
            if (e.is_array())
                row.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
            else
                row.push_back({e.get<double>(), 0.0});
        }
        b.vals.push_back(std::move(row));
    }
    return b;
}

int emit_report(const GlobalOpts& g, const Report& rep, long ms) {
    if (g.emit_json) {
        std::cout << report_to_json(rep, g.timing ? ms : -1).dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << "[" << status_str(c.status) << "] " << c.name;
            if (!c.certificate.empty()) std::cout << "  -- " << c.certificate;
            std::cout << "\n";
        }
        std::cout << rep.verb << ": " << status_str(rep.overall()) << " (" << rep.checks.size()
                  << " checks";
        if (g.timing) std::cout << ", " << ms << " ms";
        std::cout << ")\n";
    }
    switch (rep.overall()) {
        case CheckStatus::Pass: return 0;
        case CheckStatus::Fail: return 1;
        default: return 2;
    }
}

Presentation load_pres(const GlobalOpts& g, const std::string& path) {
    json j = load_json(path);
    if (g.cap_rules) j["completion_cap"]["rules"] = g.cap_rules;
    if (g.cap_len) j["completion_cap"]["length"] = g.cap_len;
    if (g.cap_steps) j["completion_cap"]["steps"] = g.cap_steps;
    return presentation_from_json(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidalg: exact construction and verification of braided Hopf *-algebras "
                 "obtained by transmutation over abelian group gradings"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--cap-rules", g.cap_rules, "override completion rule cap");
    app.add_option("--cap-len", g.cap_len, "override completion monomial length cap");
    app.add_option("--cap-steps", g.cap_steps, "override rewrite step budget");
    app.add_option("--tol", g.tol, "numerical tolerance for the floating-point verbs");
    app.add_flag("--json", g.emit_json, "emit canonical JSON reports");
    app.add_flag("--timing", g.timing, "include timing in reports");
    app.add_option("--seed", g.seed, "seed for randomized property suites");

    std::string pres_path, beta_path, sub_path, out_path, expr_text, name;
    std::string z_path, u_path, a_path, x_path, a2_path, x2_path, b_path, shadow_path;
    std::vector<int64_t> w_label, w2_label, w0_label;
    std::string cocycle = "J1";
    bool inverse = false, fundamental = false;
    int tau = 1;

    auto* reduce = app.add_subcommand("reduce", "reduce an expression to normal form");
    reduce->add_option("presentation", pres_path)->required();
    reduce->add_option("expression", expr_text)->required();

    auto* vh = app.add_subcommand("verify-hopf", "verify the Hopf *-algebra axioms");
    vh->add_option("presentation", pres_path)->required();

    auto* vb = app.add_subcommand("verify-braided", "verify the braided Hopf *-algebra axioms");
    vb->add_option("presentation", pres_path)->required();

    auto* tr = app.add_subcommand("transmute", "transmute along pi and a bicharacter");
    tr->add_option("presentation", pres_path)->required();
    tr->add_option("--beta", beta_path, "bicharacter file")->required();
    tr->add_option("-o,--output", out_path)->required();

    auto* tw = app.add_subcommand("twist", "scalar 2-cocycle twist (J1/J2 from a bicharacter)");
    tw->add_option("presentation", pres_path)->required();
    tw->add_option("--beta", beta_path)->required();
    tw->add_option("--cocycle", cocycle, "J1 or J2");
    tw->add_flag("--inverse", inverse, "twist by the pointwise inverse cocycle");
    tw->add_option("-o,--output", out_path)->required();

    auto* bos = app.add_subcommand("bosonize", "bosonization C[T/T_0] # A");
    bos->add_option("presentation", pres_path)->required();
    bos->add_option("--subgroup", sub_path, "annihilator subgroup S (default: full group)");
    bos->add_option("-o,--output", out_path)->required();

    auto* vt = app.add_subcommand("verify-theta", "verify the untwisted isomorphism Theta");
    vt->add_option("presentation", pres_path)->required();
    vt->add_option("--subgroup", sub_path)->required();

    auto* vm = app.add_subcommand("verify-thm-main", "verify the twisted bosonization theorem");
    vm->add_option("presentation", pres_path)->required();
    vm->add_option("--subgroup", sub_path)->required();
    vm->add_option("--beta", beta_path)->required();

    auto* ub = app.add_subcommand("ubar", "conjugate corepresentation matrix Ubar_Z");
    ub->add_option("presentation", pres_path)->required();
    ub->add_option("--z", z_path, "corepresentation matrix over C[T^]")->required();
    ub->add_option("--beta", beta_path)->required();
    ub->add_option("--u", u_path, "matrix of expressions (default: fundamental u_ij)");
    ub->add_flag("--fundamental", fundamental);

    auto* ex = app.add_subcommand("examples", "built-in example presentations");
    auto* exl = ex->add_subcommand("list", "list example names");
    auto* exb = ex->add_subcommand("build", "build an example presentation file");
    exb->add_option("name", name)->required();
    exb->add_option("-o,--output", out_path)->required();
    auto* exv = ex->add_subcommand("verify", "run the full pipeline for an example");
    exv->add_option("name", name)->required();

    auto* sf = app.add_subcommand("std-form", "block-diagonal standard form of (A, X)");
    sf->add_option("-A,--a", a_path)->required();
    sf->add_option("-X,--x", x_path)->required();
    sf->add_option("--w0", w0_label, "character label of w0")->required();

    auto* tl = app.add_subcommand("tl-form", "antidiagonal normal form of A");
    tl->add_option("-A,--a", a_path)->required();

    auto* mz = app.add_subcommand("check-mrozinski", "spectrum criterion for Otilde_B^+");
    mz->add_option("-B,--b", b_path)->required();

    auto* ci = app.add_subcommand("check-iso", "isomorphism conditions for two BFO pairs");
    ci->add_option("-A,--a", a_path)->required();
    ci->add_option("-X,--x", x_path)->required();
    ci->add_option("-w,--w", w_label)->required();
    ci->add_option("--a2", a2_path)->required();
    ci->add_option("--x2", x2_path)->required();
    ci->add_option("--w2", w2_label)->required();
    ci->add_option("--beta-shadow", shadow_path)->required();

    auto* cb = app.add_subcommand("check-bfo", "numeric BFO preconditions and tau");
    cb->add_option("-A,--a", a_path)->required();
    cb->add_option("-X,--x", x_path)->required();
    cb->add_option("-w,--w", w_label)->required();
    cb->add_option("--beta-shadow", shadow_path)->required();
    cb->add_option("--tau", tau);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (*reduce) {
            Presentation p = load_pres(g, pres_path);
            NCPoly poly = parse_poly(p.sig, expr_text);
            NCPoly nf = p.rs.normal_form(poly);
            std::cout << poly_to_expr(nf) << "\n";
            Report rep;
            rep.verb = "reduce";
            CheckStatus st = nf.is_zero() ? CheckStatus::Pass
                             : p.rs.status() == CompletionStatus::Complete
                                 ? CheckStatus::Fail
                                 : CheckStatus::Inconclusive;
            rep.add("reduce-to-zero", st, nf.is_zero() ? "" : poly_to_expr(nf));
            return emit_report(g, rep, elapsed());
        }
        if (*vh) {
            Presentation p = load_pres(g, pres_path);
            return emit_report(g, verify_hopf(p), elapsed());
        }
        if (*vb) {
            Presentation p = load_pres(g, pres_path);
            return emit_report(g, verify_braided_hopf(p), elapsed());
        }
        if (*tr) {
            Presentation p = load_pres(g, pres_path);
            Bicharacter beta = load_bicharacter(beta_path, p.ring);
            Presentation out = transmute(p, beta);
            save_presentation(out, out_path);
            Report rep;
            rep.verb = "transmute";
            rep.add("bicharacter-valid", CheckStatus::Pass);
            rep.add("completion",
                    out.rs.status() == CompletionStatus::Complete ? CheckStatus::Pass
                                                                  : CheckStatus::Inconclusive);
            return emit_report(g, rep, elapsed());
        }
        if (*tw) {
            Presentation p = load_pres(g, pres_path);
            Bicharacter beta = load_bicharacter(beta_path, p.ring);
            auto [j1, j2] = cocycles_from_bichar(beta);
            TwistData data = cocycle == "J2" ? j2 : j1;
            if (cocycle != "J1" && cocycle != "J2") throw Error("--cocycle must be J1 or J2");
            if (inverse) data = data.inverse();
            Presentation out = scalar_cocycle_twist(p, data);
            save_presentation(out, out_path);
            Report rep;
            rep.verb = "twist";
            rep.add("completion",
                    out.rs.status() == CompletionStatus::Complete ? CheckStatus::Pass
                                                                  : CheckStatus::Inconclusive);
            return emit_report(g, rep, elapsed());
        }
        if (*bos) {
            Presentation p = load_pres(g, pres_path);
            SubgroupSpec s = sub_path.empty() ? SubgroupSpec::full(p.group)
                                              : load_subgroup(sub_path, p.group);
            Presentation out = braided_smash(s, p);
            save_presentation(out, out_path);
            Report rep;
            rep.verb = "bosonize";
            rep.add("completion",
                    out.rs.status() == CompletionStatus::Complete ? CheckStatus::Pass
                                                                  : CheckStatus::Inconclusive);
            return emit_report(g, rep, elapsed());
        }
        if (*vt) {
            Presentation p = load_pres(g, pres_path);
            SubgroupSpec s = load_subgroup(sub_path, p.group);
            return emit_report(g, verify_theta_iso(p, s), elapsed());
        }
        if (*vm) {
            Presentation p = load_pres(g, pres_path);
            SubgroupSpec s = load_subgroup(sub_path, p.group);
            Bicharacter beta = load_bicharacter(beta_path, p.ring);
            return emit_report(g, verify_thm_main(p, s, beta), elapsed());
        }
        if (*ub) {
            Presentation p = load_pres(g, pres_path);
            Bicharacter beta = load_bicharacter(beta_path, p.ring);
            json zj = load_json(z_path);
            CharMatrix z;
            z.group = p.group;
            z.ring = p.ring;
            const json& rows = zj.contains("matrix") ? zj.at("matrix") : zj;
            z.m = rows.size();
            for (const auto& row : rows) {
                std::vector<GroupAlgElem> r;
                for (const auto& e : row)
                    r.push_back(parse_group_alg(p.group, p.ring, e.get<std::string>()));
                z.e.push_back(std::move(r));
            }
            CorepMatrix u;
            u.pres = &p;
            u.m = z.m;
            if (!u_path.empty()) {
                json uj = load_json(u_path);
                const json& ur = uj.contains("matrix") ? uj.at("matrix") : uj;
                for (const auto& row : ur) {
                    std::vector<NCPoly> r;
                    for (const auto& e : row) r.push_back(parse_poly(p.sig, e.get<std::string>()));
                    u.e.push_back(std::move(r));
                }
            } else {
                for (size_t i = 0; i < z.m; ++i) {
                    std::vector<NCPoly> r;
                    for (size_t jj = 0; jj < z.m; ++jj) {
                        std::string nm =
                            "u" + std::to_string(i + 1) + std::to_string(jj + 1);
                        int id = p.find_gen(nm);
                        if (id < 0) throw Error("no generator " + nm + "; pass --u");
                        r.push_back(NCPoly::generator(p.sig, id));
                    }
                    u.e.push_back(std::move(r));
                }
            }
            CorepMatrix ubar_m = ubar(u, z, beta);
            json out = json::array();
            for (const auto& row : ubar_m.e) {
                json r = json::array();
                for (const auto& e : row) r.push_back(poly_to_expr(e));
                out.push_back(r);
            }
            std::cout << json{{"schema", 1}, {"ubar", out}}.dump(2) << "\n";
            return 0;
        }
        if (*exl) {
            for (const auto& n : example_names()) std::cout << n << "\n";
            return 0;
        }
        if (*exb) {
            Presentation p = build_example(name);
            save_presentation(p, out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*exv) {
            if (name == "all") {
                Report rep;
                rep.verb = "examples-verify-all";
                for (const auto& n : example_names()) {
                    Report r = verify_example(n);
                    for (const auto& c : r.checks)
                        rep.checks.push_back({n + "/" + c.name, c.status, c.certificate});
                }
                return emit_report(g, rep, elapsed());
            }
            return emit_report(g, verify_example(name), elapsed());
        }
        if (*sf) {
            CMat a = cmat_from_json(load_json(a_path));
            std::vector<CharLabel> x = labels_from_json(load_json(x_path));
            StandardForm r = standard_form(a, x, w0_label, g.tol);
            json blocks = json::array();
            for (const auto& b : r.blocks)
                blocks.push_back({{"size", b.size},
                                  {"lambda", b.lambda},
                                  {"theta", {b.theta.real(), b.theta.imag()}},
                                  {"chi", b.chi}});
            json out{{"schema", 1},
                     {"blocks", blocks},
                     {"v", cmat_to_json(r.v)},
                     {"residual_a", r.residual_a},
                     {"residual_x", r.residual_x},
                     {"degenerate_warning", r.degenerate_warning}};
            std::cout << out.dump(2) << "\n";
            return (r.residual_a < 1e-9 && r.residual_x < 1e-9) ? 0 : 1;
        }
        if (*tl) {
            CMat a = cmat_from_json(load_json(a_path));
            TlForm r = tl_form(a, g.tol);
            json anti = json::array();
            for (const auto& e : r.antidiag) anti.push_back({e.real(), e.imag()});
            std::cout << json{{"schema", 1},
                              {"antidiagonal", anti},
                              {"v", cmat_to_json(r.v)},
                              {"residual", r.residual}}
                             .dump(2)
                      << "\n";
            return r.residual < 1e-9 ? 0 : 1;
        }
        if (*mz) {
            CMat b = cmat_from_json(load_json(b_path));
            MrozinskiResult r = check_mrozinski(b);
            json out{{"schema", 1}, {"pass", r.pass}};
            if (r.pass) {
                out["lambda"] = {r.lambda.real(), r.lambda.imag()};
                out["odd_exponents"] = r.odd_exponents;
                out["l"] = r.l;
            } else {
                out["reason"] = r.reason;
            }
            std::cout << out.dump(2) << "\n";
            return r.pass ? 0 : 1;
        }
        if (*ci) {
            CMat a = cmat_from_json(load_json(a_path));
            CMat a2 = cmat_from_json(load_json(a2_path));
            auto x = labels_from_json(load_json(x_path));
            auto x2 = labels_from_json(load_json(x2_path));
            NumericBichar beta = shadow_from_json(load_json(shadow_path));
            IsoResult r = check_iso_conditions(a, x, w_label, a2, x2, w2_label, beta, g.tol);
            json out{{"schema", 1}, {"iso", r.iso}};
            if (r.iso) {
                out["chi"] = r.chi;
                out["v"] = cmat_to_json(r.v);
            } else {
                out["reason"] = r.reason;
            }
            std::cout << out.dump(2) << "\n";
            return r.iso ? 0 : 1;
        }
        if (*cb) {
            CMat a = cmat_from_json(load_json(a_path));
            auto x = labels_from_json(load_json(x_path));
            NumericBichar beta = shadow_from_json(load_json(shadow_path));
            BfoNumeric r = check_bfo_numeric(a, x, w_label, beta, g.tol);
            json out{{"schema", 1},
                     {"ok", r.ok},
                     {"c", {r.c.real(), r.c.imag()}},
                     {"tau", r.tau},
                     {"residual", r.residual}};
            if (!r.reason.empty()) out["reason"] = r.reason;
            if (r.odd_m_impossible) out["odd_m_impossible"] = true;
            std::cout << out.dump(2) << "\n";
            return r.ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
