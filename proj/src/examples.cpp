#include "braidalg/examples.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "braidalg/errors.hpp"
#include "braidalg/expr.hpp"
#include "braidalg/stdform.hpp"

namespace braidalg {

// --- scalar matrix helpers ----------------------------------------------------

SMat smat_mul(const SMat& a, const SMat& b) {
    size_t m = a.size(), k = b.size(), n = b[0].size();
    const ScalarRingPtr& ring = a[0][0].ring();
    SMat r(m, std::vector<Scalar>(n, Scalar::zero(ring)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t t = 0; t < k; ++t) r[i][j] = r[i][j] + a[i][t] * b[t][j];
    return r;
}

SMat smat_conj(const SMat& a) {
    SMat r = a;
    for (auto& row : r)
        for (auto& x : row) x = x.conj();
    return r;
}

SMat smat_transpose(const SMat& a) {
    size_t m = a.size(), n = a[0].size();
    SMat r(n, std::vector<Scalar>(m, Scalar::zero(a[0][0].ring())));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}

SMat smat_inverse(const SMat& a) {
    size_t m = a.size();
    const ScalarRingPtr& ring = a[0][0].ring();
    SMat work = a;
    SMat inv(m, std::vector<Scalar>(m, Scalar::zero(ring)));
    for (size_t i = 0; i < m; ++i) inv[i][i] = Scalar::one(ring);
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = m;
        for (size_t r = col; r < m; ++r)
            if (work[r][col].is_monomial()) {
                pivot = r;
                break;
            }
        if (pivot == m) throw SingularMatrix("smat_inverse: no invertible pivot in column");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar pinv = work[col][col].invert();
        for (size_t j = 0; j < m; ++j) {
            work[col][j] = work[col][j] * pinv;
            inv[col][j] = inv[col][j] * pinv;
        }
        for (size_t r = 0; r < m; ++r) {
            if (r == col || work[r][col].is_zero()) continue;
            Scalar f = work[r][col];
            for (size_t j = 0; j < m; ++j) {
                work[r][j] = work[r][j] - f * work[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

bool smat_is_scalar(const SMat& a, Scalar& value) {
    size_t m = a.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (!a[i][j].is_zero()) return false;
        }
    value = a[0][0];
    for (size_t i = 1; i < m; ++i)
        if (!(a[i][i] == value)) return false;
    return true;
}

// Matrix quantum group scaffolding: generators u_ij and u_ij_star with
// Delta(u_ij) = sum_k u_ik (x) u_kj, eps = delta, S(u_ij) = u_ji_star and
// S(u_ij_star) given by the builder.
struct MqgScaffold {
    PresentationData d;
    SigPtr sig;
    size_t m = 0;

    int id(size_t i, size_t j) const { return static_cast<int>(2 * (i * m + j)); }
    int sid(size_t i, size_t j) const { return id(i, j) + 1; }
};

MqgScaffold mqg_scaffold(const ScalarRingPtr& ring, const FgAbelianGroup& group,
                         const std::vector<GroupElement>& z) {
    MqgScaffold s;
    s.m = z.size();
    Scalar one = Scalar::one(ring);
    std::vector<GenInfo> gens;
    for (size_t i = 0; i < s.m; ++i) {
        for (size_t j = 0; j < s.m; ++j) {
            std::string nm = "u" + std::to_string(i + 1) + std::to_string(j + 1);
            gens.push_back({nm, z[i], z[j], s.sid(i, j), one});
            gens.push_back({nm + "_star", ge_neg(group, z[i]), ge_neg(group, z[j]), s.id(i, j),
                            one});
        }
    }
    s.d.ring = ring;
    s.d.group = group;
    s.d.sig = make_signature(ring, group, gens);
    s.sig = s.d.sig;
    SigPtr slot2 = make_slot_signature(s.sig, 2);
    int bs = s.sig->base_size;
    for (size_t i = 0; i < s.m; ++i) {
        for (size_t j = 0; j < s.m; ++j) {
            NCPoly cp(slot2);
            for (size_t k = 0; k < s.m; ++k)
                cp.add_term({s.id(i, k), s.id(k, j) + bs}, one);
            s.d.coproduct.push_back(cp);
            s.d.coproduct.push_back(cp.star());
            Scalar eps = i == j ? one : Scalar::zero(ring);
            s.d.counit.push_back(eps);
            s.d.counit.push_back(eps);
            // S(u_ij) = u_ji_star; the star case is builder-specific and
            // filled in afterwards (placeholder zero)
            s.d.antipode.push_back(NCPoly::generator(s.sig, s.sid(j, i)));
            s.d.antipode.push_back(NCPoly::zero(s.sig));
            GroupAlgElem pi(group, ring);
            if (i == j) pi = GroupAlgElem::of(group, ring, z[i], one);
            s.d.pi.push_back(pi);
            s.d.pi.push_back(pi.star());
        }
    }
    return s;
}

// unitarity relations for the matrix whose (i,j) entry is entry(i,j)
void add_unitarity_relations(PresentationData& d, size_t m,
                             const std::function<NCPoly(size_t, size_t)>& entry,
                             const std::function<NCPoly(size_t, size_t)>& entry_star) {
    const SigPtr& sig = d.sig;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly uu(sig), su(sig);
            for (size_t k = 0; k < m; ++k) {
                uu = uu + entry(i, k) * entry_star(j, k);
                su = su + entry_star(k, i) * entry(k, j);
            }
            NCPoly delta = i == j ? NCPoly::one(sig) : NCPoly::zero(sig);
            d.relations.push_back(uu - delta);
            d.relations.push_back(su - delta);
        }
    }
}

} // namespace

// --- SU_q(2) -------------------------------------------------------------------

Suq2 build_suq2() {
    Suq2 out;
    auto ring = make_ring(1, {"lambda", "mu"}, {"q"});
    FgAbelianGroup z{1, {}};
    Scalar one = Scalar::one(ring);
    Scalar q = Scalar::variable(ring, "q");
    std::vector<GenInfo> gens = {
        {"alpha", GroupElement{{1}}, GroupElement{{1}}, 1, one},
        {"alpha_star", GroupElement{{-1}}, GroupElement{{-1}}, 0, one},
        {"gamma", GroupElement{{-1}}, GroupElement{{1}}, 3, one},
        {"gamma_star", GroupElement{{1}}, GroupElement{{-1}}, 2, one},
    };
    PresentationData d;
    d.ring = ring;
    d.group = z;
    d.sig = make_signature(ring, z, gens);
    auto P = [&](const std::string& text) { return parse_poly(d.sig, text); };
    d.relations = {
        P("alpha gamma - q gamma alpha"),
        P("alpha gamma_star - q gamma_star alpha"),
        P("gamma_star gamma - gamma gamma_star"),
        P("alpha_star alpha + gamma_star gamma - 1"),
        P("alpha alpha_star + q^2 gamma gamma_star - 1"),
    };
    SigPtr slot2 = make_slot_signature(d.sig, 2);
    auto D = [&](const std::string& text) { return parse_poly(slot2, text); };
    d.coproduct = {
        D("alpha@1 alpha@2 - q gamma_star@1 gamma@2"),
        D("alpha_star@1 alpha_star@2 - q gamma@1 gamma_star@2"),
        D("gamma@1 alpha@2 + alpha_star@1 gamma@2"),
        D("gamma_star@1 alpha_star@2 + alpha@1 gamma_star@2"),
    };
    d.counit = {one, one, Scalar::zero(ring), Scalar::zero(ring)};
    d.antipode = {P("alpha_star"), P("alpha"), P("-q gamma"), P("-q^-1 gamma_star")};
    d.pi = {GroupAlgElem::of(z, ring, GroupElement{{1}}, one),
            GroupAlgElem::of(z, ring, GroupElement{{-1}}, one), GroupAlgElem(z, ring),
            GroupAlgElem(z, ring)};
    out.h = build_presentation(std::move(d));
    out.beta_lambda = Bicharacter(z, {{Scalar::variable(ring, "lambda", -1)}});
    out.s2 = SubgroupSpec(z, {GroupElement{{2}}});
    return out;
}

Presentation build_suq2_mutated() {
    Suq2 base = build_suq2();
    const Presentation& h = base.h;
    PresentationData d;
    d.ring = h.ring;
    d.group = h.group;
    d.sig = h.sig;
    auto P = [&](const std::string& text) { return parse_poly(h.sig, text); };
    d.relations = {
        P("alpha gamma - q^2 gamma alpha"), // the q -> q^2 perturbation
        P("alpha gamma_star - q gamma_star alpha"),
        P("gamma_star gamma - gamma gamma_star"),
        P("alpha_star alpha + gamma_star gamma - 1"),
        P("alpha alpha_star + q^2 gamma gamma_star - 1"),
    };
    d.coproduct = h.coproduct;
    d.counit = h.counit;
    d.antipode = h.antipode;
    d.pi = h.pi;
    return build_presentation(std::move(d));
}

// --- O_F^+ and U_F^+ ------------------------------------------------------------

Presentation build_ofplus(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& f,
                          const std::vector<GroupElement>& z) {
    size_t m = z.size();
    // F Fbar = tau 1
    Scalar tau = Scalar::zero(ring);
    if (!smat_is_scalar(smat_mul(f, smat_conj(f)), tau) ||
        !(tau == Scalar::one(ring) || tau == -Scalar::one(ring)))
        throw PreconditionFailed("F Fbar is not a +-1 scalar matrix");
    // F Zbar = Z F entrywise: F_ik != 0 forces z_k = -z_i
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k)
            if (!f[i][k].is_zero() && !(z[k] == ge_neg(group, z[i])))
                throw PreconditionFailed("F Zbar F^{-1} = Z fails on the supports");

    MqgScaffold s = mqg_scaffold(ring, group, z);
    auto U = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.id(i, j)); };
    auto Us = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.sid(i, j)); };
    add_unitarity_relations(s.d, m, U, Us);
    // U F = F Ubar
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly lhs(s.sig), rhs(s.sig);
            for (size_t k = 0; k < m; ++k) {
                lhs = lhs + U(i, k).scaled(f[k][j]);
                rhs = rhs + Us(k, j).scaled(f[i][k]);
            }
            s.d.relations.push_back(lhs - rhs);
        }
    }
    // S(u_ij_star) = sum_{k,l} (F^{-1})_{ik} F_{lj} u_lk_star
    SMat finv = smat_inverse(f);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly sp(s.sig);
            for (size_t k = 0; k < m; ++k)
                for (size_t l = 0; l < m; ++l) {
                    Scalar c = finv[i][k] * f[l][j];
                    if (!c.is_zero()) sp = sp + Us(l, k).scaled(c);
                }
            s.d.antipode[static_cast<size_t>(s.sid(i, j))] = sp;
        }
    }
    return build_presentation(std::move(s.d));
}

Presentation build_ufplus(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& f,
                          const std::vector<GroupElement>& z) {
    size_t m = z.size();
    SMat fs = smat_mul(smat_conj(smat_transpose(f)), f); // F* F
    SMat fsinv = smat_inverse(fs);
    Scalar tr = Scalar::zero(ring), trinv = Scalar::zero(ring);
    for (size_t i = 0; i < m; ++i) {
        tr = tr + fs[i][i];
        trinv = trinv + fsinv[i][i];
    }
    if (!(tr == trinv))
        throw PreconditionFailed("Tr(F*F) != Tr((F*F)^{-1}): " + (tr - trinv).str());
    // Z-compatibility: F Zbar F^{-1} is unitary in Mat(C[T^])
    {
        SMat finv = smat_inverse(f);
        CharMatrix zb;
        zb.group = group;
        zb.ring = ring;
        zb.m = m;
        for (size_t i = 0; i < m; ++i) {
            std::vector<GroupAlgElem> row(m, GroupAlgElem(group, ring));
            row[i] = GroupAlgElem::of(group, ring, ge_neg(group, z[i]), Scalar::one(ring));
            zb.e.push_back(std::move(row));
        }
        auto lift = [&](const SMat& sm) {
            CharMatrix c;
            c.group = group;
            c.ring = ring;
            c.m = m;
            for (size_t i = 0; i < m; ++i) {
                std::vector<GroupAlgElem> row;
                for (size_t j = 0; j < m; ++j)
                    row.push_back(GroupAlgElem::of(group, ring, ge_zero(group), sm[i][j]));
                c.e.push_back(std::move(row));
            }
            return c;
        };
        CharMatrix v = lift(f).mul(zb).mul(lift(finv));
        if (!v.is_unitary())
            throw PreconditionFailed("F Zbar F^{-1} is not unitary (Zbar vs |F| compatibility)");
    }

    MqgScaffold s = mqg_scaffold(ring, group, z);
    auto U = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.id(i, j)); };
    auto Us = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.sid(i, j)); };
    add_unitarity_relations(s.d, m, U, Us);
    // V = F Ubar F^{-1} unitary
    SMat finv = smat_inverse(f);
    auto V = [&](size_t i, size_t j) {
        NCPoly acc(s.sig);
        for (size_t k = 0; k < m; ++k)
            for (size_t l = 0; l < m; ++l) {
                Scalar c = f[i][k] * finv[l][j];
                if (!c.is_zero()) acc = acc + Us(k, l).scaled(c);
            }
        return acc;
    };
    auto Vstar = [&](size_t i, size_t j) { return V(j, i).star(); };
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly vv(s.sig), sv(s.sig);
            for (size_t k = 0; k < m; ++k) {
                vv = vv + V(i, k) * Vstar(k, j);
                sv = sv + Vstar(i, k) * V(k, j);
            }
            NCPoly delta = i == j ? NCPoly::one(s.sig) : NCPoly::zero(s.sig);
            s.d.relations.push_back(vv - delta);
            s.d.relations.push_back(sv - delta);
        }
    }
    // S(u_ij_star) = sum ((F*F)^{-1})_{ik} (F*F)_{lj} u_lk
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly sp(s.sig);
            for (size_t k = 0; k < m; ++k)
                for (size_t l = 0; l < m; ++l) {
                    Scalar c = fsinv[i][k] * fs[l][j];
                    if (!c.is_zero()) sp = sp + U(l, k).scaled(c);
                }
            s.d.antipode[static_cast<size_t>(s.sid(i, j))] = sp;
        }
    }
    return build_presentation(std::move(s.d));
}

// --- S_N^+ ----------------------------------------------------------------------

SnPlus build_snplus(int n) {
    if (n < 2) throw Error("build_snplus requires N >= 2");
    SnPlus out;
    auto ring = make_ring(static_cast<unsigned>(n), {}, {});
    FgAbelianGroup zn{0, {n}};
    Scalar one = Scalar::one(ring);
    auto idx = [&](int64_t i, int64_t j) {
        int64_t ii = ((i % n) + n) % n, jj = ((j % n) + n) % n;
        return static_cast<int>(ii * n + jj);
    };
    std::vector<GenInfo> gens;
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j) {
            std::string nm = "a" + std::to_string(i) + "_" + std::to_string(j);
            gens.push_back({nm, ge_reduce(zn, {i}), ge_reduce(zn, {j}), idx(-i, -j), one});
        }
    PresentationData d;
    d.ring = ring;
    d.group = zn;
    d.sig = make_signature(ring, zn, gens);
    if (n >= 4) {
        d.caps.max_rules = 4000;
        d.caps.max_len = 12;
        d.caps.step_budget = 10000000;
    }
    auto A = [&](int64_t i, int64_t j) { return NCPoly::generator(d.sig, idx(i, j)); };
    // a_00 = 1, a_0i = a_i0 = 0 (i != 0)
    d.relations.push_back(A(0, 0) - NCPoly::one(d.sig));
    for (int64_t i = 1; i < n; ++i) {
        d.relations.push_back(A(0, i));
        d.relations.push_back(A(i, 0));
    }
    // convolution relations
    auto push_unique = [&](const NCPoly& p) {
        for (const auto& r : d.relations)
            if (r == p || r == -p) return;
        d.relations.push_back(p);
    };
    for (int64_t k = 0; k < n; ++k)
        for (int64_t i = 0; i < n; ++i)
            for (int64_t j = 0; j < n; ++j) {
                NCPoly sum1(d.sig), sum2(d.sig);
                for (int64_t l = 0; l < n; ++l) {
                    sum1 = sum1 + A(k - l, i) * A(l, j);
                    sum2 = sum2 + A(j, l) * A(i, k - l);
                }
                push_unique(sum1 - A(k, i + j));
                push_unique(sum2 - A(i + j, k));
            }
    SigPtr slot2 = make_slot_signature(d.sig, 2);
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j) {
            NCPoly cp(slot2);
            for (int64_t k = 0; k < n; ++k)
                cp.add_term({idx(i, k), idx(k, j) + d.sig->base_size}, one);
            d.coproduct.push_back(cp);
            d.counit.push_back(i == j ? one : Scalar::zero(ring));
            d.antipode.push_back(A(-j, -i));
            GroupAlgElem pi(zn, ring);
            if (i == j) pi = GroupAlgElem::of(zn, ring, ge_reduce(zn, {i}), one);
            d.pi.push_back(pi);
        }
    out.h = build_presentation(std::move(d));
    out.beta = Bicharacter(zn, {{Scalar::zeta_pow(ring, -1)}});
    return out;
}

// --- braided free orthogonal ----------------------------------------------------

BfoResult build_bfo(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& a,
                    const std::vector<GroupElement>& x, const GroupElement& w,
                    const Bicharacter& beta) {
    BfoResult out;
    out.report.verb = "build-bfo";
    size_t m = x.size();
    // support condition A(w^2 Xbar) A^{-1} = X
    GroupElement w2 = ge_add(group, w, w);
    for (size_t k = 0; k < m; ++k)
        for (size_t j = 0; j < m; ++j)
            if (!a[k][j].is_zero() && !(x[k] == ge_sub(group, w2, x[j])))
                throw PreconditionFailed("A(w^2 Xbar)A^{-1} = X fails on the supports");
    out.report.add("bfo-condition-support", CheckStatus::Pass);

    // tau from A Abar = tau beta(w,w)^2 X(t_w)^{-2}
    SMat aa = smat_mul(a, smat_conj(a));
    Scalar bw2 = beta.eval(w, w).pow(2);
    std::optional<Scalar> tau;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i != j) {
                if (!aa[i][j].is_zero())
                    throw PreconditionFailed("A Abar is not diagonal; tau undeterminable");
                continue;
            }
            Scalar t = aa[i][i] * bw2.invert() * beta.eval(x[i], w).pow(2);
            if (!tau) tau = t;
            if (!(*tau == t)) throw PreconditionFailed("tau undeterminable: nonconstant diagonal");
        }
    }
    if (!(*tau == Scalar::one(ring) || *tau == -Scalar::one(ring)))
        throw PreconditionFailed("tau = " + tau->str() + " is not +-1");
    out.tau = *tau;
    out.report.add("bfo-condition-tau", CheckStatus::Pass, "tau = " + tau->str());

    // F = AC with C = diag(beta(x_i^{-1}, w)); Z = w^{-1} X
    SMat f = a;
    for (size_t i = 0; i < m; ++i) {
        Scalar c = beta.eval(ge_neg(group, x[i]), w);
        for (size_t k = 0; k < m; ++k) f[k][i] = f[k][i] * c;
    }
    std::vector<GroupElement> zchars;
    for (size_t i = 0; i < m; ++i) zchars.push_back(ge_sub(group, x[i], w));
    out.ofplus = build_ofplus(ring, group, f, zchars);
    out.transmuted = transmute(out.ofplus, beta);

    // direct presentation from the displayed relations
    MqgScaffold s = mqg_scaffold(ring, group, zchars);
    s.d.braiding = beta;
    auto U = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.id(i, j)); };
    auto Us = [&](size_t i, size_t j) { return NCPoly::generator(s.sig, s.sid(i, j)); };
    add_unitarity_relations(s.d, m, U, Us);
    // U A = A Ubar_X with ubar_kj = beta(x_k - x_j, -x_k) u_kj_star
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            NCPoly lhs(s.sig), rhs(s.sig);
            for (size_t k = 0; k < m; ++k) {
                lhs = lhs + U(i, k).scaled(a[k][j]);
                Scalar ub = beta.eval(ge_sub(group, x[k], x[j]), ge_neg(group, x[k]));
                rhs = rhs + Us(k, j).scaled(a[i][k] * ub);
            }
            s.d.relations.push_back(lhs - rhs);
        }
    }
    // antipode on stars, translated from the transmuted realization through
    // u_ij -> u_ij, u_ij_star -> c_ij u_ij_star with c_ij the transmuted
    // star coefficient.
    std::vector<Scalar> cc(2 * m * m, Scalar::one(ring));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            cc[static_cast<size_t>(s.id(i, j))] =
                out.transmuted.sig->gens[static_cast<size_t>(s.id(i, j))].star_coeff;
    auto from_transmuted = [&](const NCPoly& p) {
        NCPoly r(s.sig);
        for (const auto& [word, c] : p.terms()) {
            Scalar coeff = c;
            for (int32_t g : word)
                if (g % 2 == 1) coeff = coeff * cc[static_cast<size_t>(g - 1)].invert();
            r.add_term(word, coeff);
        }
        return r;
    };
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            size_t gid = static_cast<size_t>(s.id(i, j));
            NCPoly st = out.transmuted.antipode[gid + 1].scaled(cc[gid]);
            s.d.antipode[gid + 1] = from_transmuted(st);
        }
    }
    out.direct = build_presentation(std::move(s.d));

    // isomorphism with the transmutation: u_ij -> u_ij,
    // u_ij_star -> c_ij u_ij_star
    AlgebraMap iso;
    iso.src = &out.direct;
    iso.tgt = &out.transmuted;
    iso.name = "bfo-vs-transmutation";
    AlgebraMap iso_inv;
    iso_inv.src = &out.transmuted;
    iso_inv.tgt = &out.direct;
    iso_inv.name = "bfo-vs-transmutation-inv";
    for (size_t g = 0; g < 2 * m * m; ++g) {
        if (g % 2 == 0) {
            iso.images.push_back(NCPoly::generator(out.transmuted.sig, static_cast<int>(g)));
            iso_inv.images.push_back(NCPoly::generator(out.direct.sig, static_cast<int>(g)));
        } else {
            iso.images.push_back(
                NCPoly::word(out.transmuted.sig, {static_cast<int32_t>(g)}, cc[g - 1]));
            iso_inv.images.push_back(
                NCPoly::word(out.direct.sig, {static_cast<int32_t>(g)}, cc[g - 1].invert()));
        }
    }
    check_hopf_map(out.report, iso);
    check_hopf_map(out.report, iso_inv);
    return out;
}

// --- quadruple construction -----------------------------------------------------

QuadrupleResult build_quadruple(const Eigen::MatrixXcd& a, int tau) {
    QuadrupleResult out;
    out.report.verb = "build-quadruple";
    const long m = a.rows();
    if ((a * a.conjugate() * (a * a.conjugate()).adjoint() -
         Eigen::MatrixXcd::Identity(m, m))
            .cwiseAbs()
            .maxCoeff() > 1e-10)
        throw NotUnitary("A Abar is not unitary");
    if (m % 2 == 1 && tau == -1)
        throw PreconditionFailed("odd m forces tau = +1");

    TlForm tl = tl_form(a);
    out.v = tl.v;
    out.report.add("tl-form-residual", tl.residual < 1e-9 ? CheckStatus::Pass : CheckStatus::Fail,
                   "residual " + std::to_string(tl.residual));
    long k = m / 2;
    bool odd = (m % 2 == 1);
    // lambda_i = a_i conj(a_{m-i+1})
    std::vector<std::complex<double>> lambda;
    for (long i = 0; i < k; ++i)
        lambda.push_back(tl.antidiag[static_cast<size_t>(i)] *
                         std::conj(tl.antidiag[static_cast<size_t>(m - 1 - i)]));

    // group: x_1..x_k (+ x_{k+1} = w for odd m; separate w for even m)
    long rank = odd ? k + 1 : k + 1;
    out.group = FgAbelianGroup{rank, {}};
    std::vector<std::string> unitaries;
    for (long i = 0; i < k; ++i) unitaries.push_back("nu" + std::to_string(i + 1));
    out.ring = make_ring(1, unitaries, {});
    auto elem = [&](long i) {
        GroupElement e = ge_zero(out.group);
        e.e[static_cast<size_t>(i)] = 1;
        return e;
    };
    out.w = elem(rank - 1); // last generator: w (= x_{k+1} when m is odd)
    out.x.resize(static_cast<size_t>(m));
    GroupElement w2 = ge_add(out.group, out.w, out.w);
    for (long i = 0; i < k; ++i) {
        out.x[static_cast<size_t>(i)] = elem(i);
        out.x[static_cast<size_t>(m - 1 - i)] = ge_sub(out.group, w2, elem(i));
    }
    if (odd) out.x[static_cast<size_t>(k)] = out.w;

    // beta: all generator pairs 1 except beta(x_i, w) = nu_i
    std::vector<std::vector<Scalar>> vals(
        static_cast<size_t>(rank),
        std::vector<Scalar>(static_cast<size_t>(rank), Scalar::one(out.ring)));
    for (long i = 0; i < k; ++i)
        vals[static_cast<size_t>(i)][static_cast<size_t>(rank - 1)] =
            Scalar::variable(out.ring, "nu" + std::to_string(i + 1));
    out.beta = Bicharacter(out.group, vals);

    // shadows: nu_i^{-2} = tau lambda_i, so nu_i = (tau lambda_i)^{-1/2}
    for (long i = 0; i < k; ++i) {
        std::complex<double> target = static_cast<double>(tau) * lambda[static_cast<size_t>(i)];
        std::complex<double> nu = 1.0 / std::sqrt(target);
        out.shadows["nu" + std::to_string(i + 1)] = nu;
    }
    // verify the displayed constraints symbolically and numerically
    bool ok = true;
    for (long i = 0; i < k; ++i) {
        GroupElement diff = ge_sub(out.group, out.x[static_cast<size_t>(m - 1 - i)],
                                   out.x[static_cast<size_t>(i)]);
        Scalar lhs = out.beta.eval(diff, out.w);
        Scalar expect = Scalar::variable(out.ring, "nu" + std::to_string(i + 1), -2);
        if (!(lhs == expect)) ok = false;
        std::complex<double> num = lhs.eval(out.shadows);
        std::complex<double> want = static_cast<double>(tau) * lambda[static_cast<size_t>(i)];
        if (std::abs(num - want) > 1e-9) ok = false;
        // x_i x_{m-i+1} = w^2
        if (!(ge_add(out.group, out.x[static_cast<size_t>(i)],
                     out.x[static_cast<size_t>(m - 1 - i)]) == w2))
            ok = false;
    }
    if (odd) {
        // center constraint: lambda_{k+1} = 1 within tolerance
        std::complex<double> center = tl.antidiag[static_cast<size_t>(k)] *
                                      std::conj(tl.antidiag[static_cast<size_t>(k)]);
        if (std::abs(center - 1.0) > 1e-9) ok = false;
    }
    out.report.add("wTL-constraints", ok ? CheckStatus::Pass : CheckStatus::Fail);
    return out;
}

// --- Meyer-Roy comparison --------------------------------------------------------

MeyerRoyResult build_meyer_roy(const ScalarRingPtr& ring, const SMat& omega,
                               const std::vector<int64_t>& d_exps, int d, const Scalar& zeta) {
    MeyerRoyResult out;
    out.d = d;
    size_t m = d_exps.size();
    // support: omega_ij != 0 => d_i + d_j = d
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!omega[i][j].is_zero() && d_exps[i] + d_exps[j] != d)
                throw PreconditionFailed("support condition omega_ij != 0 => d_i + d_j = d fails");
    // Omegabar Omega = c X(zeta^d)
    SMat oo = smat_mul(smat_conj(omega), omega);
    std::optional<Scalar> c;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i != j) {
                if (!oo[i][j].is_zero())
                    throw PreconditionFailed("Omegabar Omega is not diagonal");
                continue;
            }
            Scalar t = oo[i][i] * zeta.pow(-static_cast<long>(d) * d_exps[i]);
            if (!c) c = t;
            if (!(*c == t)) throw PreconditionFailed("Omegabar Omega != c X(zeta^d)");
        }
    }
    if (!c->is_unitary_monomial())
        throw PreconditionFailed("c is not a unimodular scalar: " + c->str());
    out.c = *c;

    FgAbelianGroup zgrp{1, {}};
    if (d % 2 == 0) {
        // w(t) = t^{d/2}
        SMat a(m, std::vector<Scalar>(m, Scalar::zero(ring)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                a[i][j] = omega[j][i] * zeta.pow(static_cast<long>(d) * d_exps[j]);
        std::vector<GroupElement> x;
        for (size_t i = 0; i < m; ++i) x.push_back(GroupElement{{d_exps[i]}});
        GroupElement w{{d / 2}};
        Bicharacter beta(zgrp, {{zeta}});
        out.bfo = build_bfo(ring, zgrp, a, x, w, beta);
        return out;
    }
    // odd d: m must be even; pass to the double cover with a fourth root
    if (m % 2 == 1) throw PreconditionFailed("odd d requires even m");
    // realize the fourth root: cyclotomic zeta^k extends the ring order by 4
    Scalar mu = Scalar::zero(ring);
    ScalarRingPtr ring4 = ring;
    if (zeta.is_monomial() && zeta.terms().begin()->first ==
                                  Scalar::ExpVec(ring->var_count(), 0)) {
        // pure cyclotomic: mu = primitive 4N-th root power
        unsigned n4 = ring->zeta_order * 4;
        ring4 = make_ring(n4, ring->unitary, ring->positive);
        // zeta = zeta_N^k embeds as zeta_{4N}^{4k}; mu = zeta_{4N}^{k}
        const Cyclotomic& cz = zeta.terms().begin()->second;
        // find k with zeta = zeta_N^k
        long kk = -1;
        for (long t = 0; t < static_cast<long>(ring->zeta_order); ++t)
            if (cz == Cyclotomic::zeta_pow(ring->zeta_order, t)) kk = t;
        if (kk < 0)
            throw PreconditionFailed("odd d needs zeta to be a root of unity or a formal "
                                     "unitary with an adjoined fourth root");
        mu = Scalar::zeta_pow(ring4, kk);
    } else {
        throw PreconditionFailed("odd d with a formal zeta requires a fourth root; supply a "
                                 "cyclotomic zeta");
    }
    SMat a(m, std::vector<Scalar>(m, Scalar::zero(ring4)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            a[i][j] = omega[j][i].reringed(ring4) *
                      mu.pow(4L * static_cast<long>(d) * d_exps[j]);
    std::vector<GroupElement> x;
    for (size_t i = 0; i < m; ++i) x.push_back(GroupElement{{2 * d_exps[i]}});
    GroupElement w{{d}};
    Bicharacter beta4(zgrp, {{mu}});
    out.bfo = build_bfo(ring4, zgrp, a, x, w, beta4);
    return out;
}

// --- registry --------------------------------------------------------------------

std::vector<std::string> example_names() {
    return {"suq2",     "suq2-mutated", "ofplus-m2", "ofplus-m2-q", "ufplus-m2",
            "snplus-2", "snplus-3",     "snplus-4",  "bfo-m2",      "meyer-roy-m2"};
}

namespace {

Presentation ofplus_m2() {
    auto ring = make_ring(1, {"lambda"}, {"q"});
    FgAbelianGroup z{1, {}};
    SMat f = {{Scalar::zero(ring), Scalar::one(ring)},
              {-Scalar::one(ring), Scalar::zero(ring)}};
    return build_ofplus(ring, z, f, {GroupElement{{1}}, GroupElement{{-1}}});
}

Presentation ofplus_m2_q() {
    // F = [[0, q^{1/2}], [-q^{-1/2}, 0]] with qh = q^{1/2} a fresh positive
    auto ring = make_ring(1, {"lambda"}, {"qh"});
    FgAbelianGroup z{1, {}};
    Scalar qh = Scalar::variable(ring, "qh");
    SMat f = {{Scalar::zero(ring), qh}, {-qh.invert(), Scalar::zero(ring)}};
    return build_ofplus(ring, z, f, {GroupElement{{1}}, GroupElement{{-1}}});
}

Presentation ufplus_m2() {
    auto ring = make_ring(1, {"lambda"}, {});
    FgAbelianGroup z{1, {}};
    SMat f = {{Scalar::one(ring), Scalar::zero(ring)},
              {Scalar::zero(ring), Scalar::one(ring)}};
    return build_ufplus(ring, z, f, {GroupElement{{1}}, GroupElement{{-1}}});
}

Bicharacter beta_lambda_for(const Presentation& p) {
    return Bicharacter(p.group, {{Scalar::variable(p.ring, "lambda", -1)}});
}

BfoResult bfo_m2() {
    // m = 2, A = [[0,1],[1,0]], X = diag(x, w^2 x^{-1}) on free T^ = Z^2.
    // lambda_1 = 1 and tau = +1 force beta(x_1, w)^2 = 1; the sign -1 keeps
    // the braiding nontrivial.
    auto ring = make_ring(1, {}, {});
    FgAbelianGroup g{2, {}};
    SMat a = {{Scalar::zero(ring), Scalar::one(ring)},
              {Scalar::one(ring), Scalar::zero(ring)}};
    GroupElement x1{{1, 0}}, w{{0, 1}};
    GroupElement x2 = ge_sub(g, ge_add(g, w, w), x1);
    std::vector<std::vector<Scalar>> vals(2, std::vector<Scalar>(2, Scalar::one(ring)));
    vals[0][1] = Scalar::from_int(ring, -1);
    Bicharacter beta(g, vals);
    return build_bfo(ring, g, a, {x1, x2}, w, beta);
}

MeyerRoyResult meyer_roy_m2() {
    auto ring = make_ring(1, {"zetav"}, {});
    Scalar zeta = Scalar::variable(ring, "zetav");
    SMat omega = {{Scalar::zero(ring), Scalar::one(ring)},
                  {Scalar::one(ring), Scalar::zero(ring)}};
    return build_meyer_roy(ring, omega, {1, 1}, 2, zeta);
}

} // namespace

Presentation build_example(const std::string& name) {
    if (name == "suq2") return build_suq2().h;
    if (name == "suq2-mutated") return build_suq2_mutated();
    if (name == "ofplus-m2") return ofplus_m2();
    if (name == "ofplus-m2-q") return ofplus_m2_q();
    if (name == "ufplus-m2") return ufplus_m2();
    if (name == "snplus-2") return build_snplus(2).h;
    if (name == "snplus-3") return build_snplus(3).h;
    if (name == "snplus-4") return build_snplus(4).h;
    if (name == "bfo-m2") return bfo_m2().direct;
    if (name == "meyer-roy-m2") return meyer_roy_m2().bfo.direct;
    throw Error("unknown example: " + name);
}

Report verify_example(const std::string& name) {
    Report rep;
    rep.verb = "examples-verify-" + name;
    auto merge = [&](const Report& r, const std::string& prefix) {
        for (const auto& c : r.checks) rep.checks.push_back({prefix + c.name, c.status, c.certificate});
    };
    auto pipeline = [&](const Presentation& h, const Bicharacter& beta, const SubgroupSpec& s) {
        merge(verify_hopf(h), "hopf/");
        Presentation a = transmute(h, beta);
        merge(verify_braided_hopf(a), "braided/");
        Presentation b = braided_smash(s, a);
        merge(verify_hopf(b), "bosonization/");
    };
    if (name == "suq2") {
        Suq2 s = build_suq2();
        pipeline(s.h, s.beta_lambda, s.s2);
        merge(verify_thm_main(s.h, s.s2, s.beta_lambda), "thm-main/");
    } else if (name == "suq2-mutated") {
        merge(verify_hopf(build_suq2_mutated()), "hopf/");
    } else if (name == "ofplus-m2" || name == "ofplus-m2-q") {
        Presentation h = build_example(name);
        pipeline(h, beta_lambda_for(h), SubgroupSpec::full(h.group));
    } else if (name == "ufplus-m2") {
        Presentation h = build_example(name);
        pipeline(h, beta_lambda_for(h), SubgroupSpec::full(h.group));
    } else if (name.rfind("snplus-", 0) == 0) {
        SnPlus s = build_snplus(std::stoi(name.substr(7)));
        pipeline(s.h, s.beta, SubgroupSpec::full(s.h.group));
    } else if (name == "bfo-m2") {
        BfoResult r = bfo_m2();
        merge(r.report, "");
        merge(verify_braided_hopf(r.direct), "braided/");
    } else if (name == "meyer-roy-m2") {
        MeyerRoyResult r = meyer_roy_m2();
        merge(r.bfo.report, "");
        merge(verify_braided_hopf(r.bfo.direct), "braided/");
    } else {
        throw Error("unknown example: " + name);
    }
    return rep;
}

} // namespace braidalg
