#include "braidalg/hopf.hpp"

#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg {

void Report::add(std::string name, CheckStatus status, std::string certificate) {
    checks.push_back({std::move(name), status, std::move(certificate)});
}

CheckStatus Report::overall() const {
    bool inconclusive = false;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
        if (c.status == CheckStatus::Inconclusive) inconclusive = true;
    }
    return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

size_t Report::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

// --- structure-map extensions -------------------------------------------

NCPoly Presentation::antipode_of_word(const Word& w) const {
    Scalar coeff = Scalar::one(ring);
    if (braiding) {
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                coeff = coeff * braiding->eval(ad(w[i]), ad(w[j]));
    }
    NCPoly acc = NCPoly::scalar(sig, coeff);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * antipode[static_cast<size_t>(*it)];
    return acc;
}

NCPoly Presentation::antipode_of_poly(const NCPoly& p) const {
    NCPoly acc(sig);
    for (const auto& [w, c] : p.terms()) acc = acc + antipode_of_word(w).scaled(c);
    return acc;
}

Scalar Presentation::counit_of_poly(const NCPoly& p) const {
    Scalar acc = Scalar::zero(ring);
    for (const auto& [w, c] : p.terms()) {
        Scalar t = c;
        for (int32_t g : w) t = t * counit[static_cast<size_t>(g)];
        acc = acc + t;
    }
    return acc;
}

GroupAlgElem Presentation::pi_of_poly(const NCPoly& p) const {
    GroupAlgElem acc(group, ring);
    for (const auto& [w, c] : p.terms()) {
        GroupAlgElem t = GroupAlgElem::of(group, ring, ge_zero(group), c);
        for (int32_t g : w) t = t * pi[static_cast<size_t>(g)];
        acc = acc + t;
    }
    return acc;
}

NCPoly Presentation::coproduct_of_poly(const NCPoly& p) const {
    NCPoly acc(slot2.sig);
    for (const auto& [w, c] : p.terms()) {
        NCPoly t = NCPoly::scalar(slot2.sig, c);
        for (int32_t g : w) t = t * coproduct[static_cast<size_t>(g)];
        acc = acc + t;
    }
    return acc;
}

// --- build -----------------------------------------------------------------

Presentation build_presentation(PresentationData d) {
    Presentation p;
    p.ring = std::move(d.ring);
    p.group = std::move(d.group);
    p.sig = std::move(d.sig);
    p.coproduct = std::move(d.coproduct);
    p.counit = std::move(d.counit);
    p.antipode = std::move(d.antipode);
    p.pi = std::move(d.pi);
    p.braiding = std::move(d.braiding);
    p.twist_grading = std::move(d.twist_grading);
    p.precedence = std::move(d.precedence);
    p.caps = d.caps;

    size_t n = p.sig->gens.size();
    if (p.coproduct.size() != n || p.counit.size() != n || p.antipode.size() != n ||
        p.pi.size() != n)
        throw Error("structure maps must cover every generator");

    // star involutivity on generators
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = p.sig->gens[i];
        const GenInfo& partner = p.sig->gens[static_cast<size_t>(g.star_partner)];
        if (partner.star_partner != static_cast<int>(i))
            throw GradingMismatch("star partner of " + g.name + " is not involutive");
        if (!(g.star_coeff.conj() * partner.star_coeff).is_one())
            throw GradingMismatch("star coefficients of " + g.name + " are not involutive");
    }

    // antipode degree flip S(g) in H_{b^{-1}, a^{-1}}; pi support; counit of
    // off-diagonal generators vanishes
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = p.sig->gens[i];
        const NCPoly& S = p.antipode[i];
        if (!S.is_zero()) {
            if (!S.is_homogeneous())
                throw GradingMismatch("antipode of " + g.name + " is not homogeneous");
            auto [l, r] = S.bidegree();
            if (!(l == ge_neg(p.group, g.degR)) || !(r == ge_neg(p.group, g.degL)))
                throw GradingMismatch("antipode of " + g.name + " violates the degree flip");
        }
        bool diagonal = (g.degL == g.degR);
        if (!diagonal) {
            if (!p.pi[i].is_zero())
                throw GradingMismatch("pi(" + g.name + ") must vanish off the diagonal");
            if (!p.counit[i].is_zero())
                throw GradingMismatch("counit(" + g.name + ") must vanish off the diagonal");
        } else {
            for (const auto& [x, c] : p.pi[i].terms())
                if (!(x == g.degL))
                    throw GradingMismatch("pi(" + g.name + ") supported off its character");
        }
    }

    // rewrite system: relations star-closed, then completed
    p.rs = RewriteSystem(p.sig, p.caps);
    std::vector<NCPoly> closed;
    for (const auto& r : d.relations) {
        closed.push_back(r);
        NCPoly rstar = r.star();
        bool dup = false;
        for (const auto& c : closed)
            if (c == rstar || c == -rstar) dup = true;
        for (const auto& c : d.relations)
            if (c == rstar || c == -rstar) dup = true;
        if (!dup) closed.push_back(rstar);
    }
    p.relations = closed;
    for (const auto& r : p.relations) p.rs.add_relation(r);
    p.rs.complete(/*capture_obstruction=*/true);

    // coproduct grading: Delta(g) in sum_c H_{a,c} (x) H_{c,b}
    p.slot2 = build_slot_algebra(p.sig, p.rs, 2, p.braiding);
    p.slot3 = build_slot_algebra(p.sig, p.rs, 3, p.braiding);
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = p.sig->gens[i];
        NCPoly nf = p.slot2.rs.normal_form(p.coproduct[i]);
        for (const auto& [w, c] : nf.terms()) {
            Word w1, w2;
            for (int32_t x : w)
                (p.slot2.sig->slot_of(x) == 0 ? w1 : w2)
                    .push_back(p.slot2.sig->base_id(x));
            auto [l1, r1] = word_bidegree(*p.sig, w1);
            auto [l2, r2] = word_bidegree(*p.sig, w2);
            if (!(l1 == g.degL) || !(r2 == g.degR) || !(r1 == l2))
                throw GradingMismatch("coproduct of " + g.name +
                                      " violates the bigrading: term " + word_str(*p.slot2.sig, w));
        }
    }
    return p;
}

// --- verification ------------------------------------------------------------

namespace {

// shift a base word into slot `slot` of a slot signature
Word shift_word(const Word& w, int slot, int base_size) {
    Word r;
    r.reserve(w.size());
    for (int32_t g : w) r.push_back(g + slot * base_size);
    return r;
}

// split a slot word into per-slot base words
std::vector<Word> split_slots(const Signature& ssig, const Word& w, int slots) {
    std::vector<Word> parts(static_cast<size_t>(slots));
    for (int32_t g : w) parts[static_cast<size_t>(ssig.slot_of(g))].push_back(ssig.base_id(g));
    return parts;
}

CheckStatus zero_or(const RewriteSystem& rs, const NCPoly& nf) {
    if (nf.is_zero()) return CheckStatus::Pass;
    return rs.status() == CompletionStatus::Complete ? CheckStatus::Fail
                                                     : CheckStatus::Inconclusive;
}

void check_zero(Report& rep, const std::string& name, const RewriteSystem& rs, const NCPoly& p) {
    NCPoly nf = rs.normal_form(p);
    CheckStatus st = zero_or(rs, nf);
    rep.add(name, st, st == CheckStatus::Pass ? "" : nf.str());
}

Report verify_impl(const Presentation& p, const char* verb) {
    Report rep;
    rep.verb = verb;
    size_t n = p.sig->gens.size();

    // completion status of the defining rewrite system
    switch (p.rs.status()) {
        case CompletionStatus::Complete:
            rep.add("completion", CheckStatus::Pass);
            break;
        case CompletionStatus::Capped:
            if (p.rs.obstruction()) {
                rep.add("completion", CheckStatus::Fail,
                        "derived relation with non-invertible leading coefficient: " +
                            *p.rs.obstruction());
            } else {
                rep.add("completion", CheckStatus::Inconclusive, "completion capped");
            }
            break;
        default:
            rep.add("completion", CheckStatus::Inconclusive, "completion not attempted");
    }

    // counit and pi kill the relations (exact decisions)
    for (size_t r = 0; r < p.relations.size(); ++r) {
        Scalar e = p.counit_of_poly(p.relations[r]);
        rep.add("counit-relation-" + std::to_string(r),
                e.is_zero() ? CheckStatus::Pass : CheckStatus::Fail,
                e.is_zero() ? "" : e.str());
        GroupAlgElem pr = p.pi_of_poly(p.relations[r]);
        rep.add("pi-relation-" + std::to_string(r),
                pr.is_zero() ? CheckStatus::Pass : CheckStatus::Fail,
                pr.is_zero() ? "" : pr.str());
    }

    // Delta extends to a homomorphism: relations map to zero in 2 slots
    for (size_t r = 0; r < p.relations.size(); ++r)
        check_zero(rep, "delta-relation-" + std::to_string(r), p.slot2.rs,
                   p.coproduct_of_poly(p.relations[r]));

    // Delta is *-compatible on generators
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = p.sig->gens[i];
        NCPoly lhs = p.coproduct[static_cast<size_t>(g.star_partner)].scaled(g.star_coeff);
        NCPoly rhs = p.coproduct[i].star();
        check_zero(rep, "delta-star-" + g.name, p.slot2.rs, lhs - rhs);
    }

    // coassociativity in 3 slots
    int bs = p.sig->base_size;
    for (size_t i = 0; i < n; ++i) {
        NCPoly d = p.slot2.rs.normal_form(p.coproduct[i]);
        NCPoly left(p.slot3.sig), right(p.slot3.sig);
        for (const auto& [w, c] : d.terms()) {
            // expand slot-1 letters by Delta (slots 1,2), shift slot-2 to 3
            NCPoly tl = NCPoly::scalar(p.slot3.sig, c);
            NCPoly tr = NCPoly::scalar(p.slot3.sig, c);
            for (int32_t x : w) {
                int slot = p.slot2.sig->slot_of(x);
                int b = p.slot2.sig->base_id(x);
                if (slot == 0) {
                    // left: Delta into slots (1,2); right: stay slot 1
                    NCPoly dd(p.slot3.sig);
                    for (const auto& [dw, dc] : p.coproduct[static_cast<size_t>(b)].terms()) {
                        Word w3;
                        for (int32_t y : dw)
                            w3.push_back(p.slot2.sig->base_id(y) +
                                         p.slot2.sig->slot_of(y) * bs);
                        dd.add_term(w3, dc);
                    }
                    tl = tl * dd;
                    tr = tr * NCPoly::generator(p.slot3.sig, b);
                } else {
                    tl = tl * NCPoly::generator(p.slot3.sig, b + 2 * bs);
                    NCPoly dd(p.slot3.sig);
                    for (const auto& [dw, dc] : p.coproduct[static_cast<size_t>(b)].terms()) {
                        Word w3;
                        for (int32_t y : dw)
                            w3.push_back(p.slot2.sig->base_id(y) +
                                         (p.slot2.sig->slot_of(y) + 1) * bs);
                        dd.add_term(w3, dc);
                    }
                    tr = tr * dd;
                }
            }
            left = left + tl;
            right = right + tr;
        }
        check_zero(rep, "coassoc-" + p.sig->gens[i].name, p.slot3.rs, left - right);
    }

    // counit laws on generators
    for (size_t i = 0; i < n; ++i) {
        NCPoly d = p.slot2.rs.normal_form(p.coproduct[i]);
        NCPoly lhs(p.sig), rhs(p.sig);
        for (const auto& [w, c] : d.terms()) {
            auto parts = split_slots(*p.slot2.sig, w, 2);
            NCPoly l = NCPoly::word(p.sig, parts[1], c);
            for (int32_t g : parts[0]) l = l.scaled(p.counit[static_cast<size_t>(g)]);
            lhs = lhs + l;
            NCPoly rr = NCPoly::word(p.sig, parts[0], c);
            for (int32_t g : parts[1]) rr = rr.scaled(p.counit[static_cast<size_t>(g)]);
            rhs = rhs + rr;
        }
        NCPoly gen = NCPoly::generator(p.sig, static_cast<int>(i));
        check_zero(rep, "counit-left-" + p.sig->gens[i].name, p.rs, lhs - gen);
        check_zero(rep, "counit-right-" + p.sig->gens[i].name, p.rs, rhs - gen);
    }

    // antipode convolution laws on generators
    for (size_t i = 0; i < n; ++i) {
        NCPoly d = p.slot2.rs.normal_form(p.coproduct[i]);
        NCPoly lhs(p.sig), rhs(p.sig);
        for (const auto& [w, c] : d.terms()) {
            auto parts = split_slots(*p.slot2.sig, w, 2);
            lhs = lhs + (p.antipode_of_word(parts[0]) *
                         NCPoly::word(p.sig, parts[1], Scalar::one(p.ring)))
                            .scaled(c);
            rhs = rhs + (NCPoly::word(p.sig, parts[0], Scalar::one(p.ring)) *
                         p.antipode_of_word(parts[1]))
                            .scaled(c);
        }
        NCPoly eps1 = NCPoly::scalar(p.sig, p.counit[i]);
        check_zero(rep, "antipode-left-" + p.sig->gens[i].name, p.rs, lhs - eps1);
        check_zero(rep, "antipode-right-" + p.sig->gens[i].name, p.rs, rhs - eps1);
    }

    // antipode extends anti-multiplicatively: relations map to zero
    for (size_t r = 0; r < p.relations.size(); ++r)
        check_zero(rep, "antipode-relation-" + std::to_string(r), p.rs,
                   p.antipode_of_poly(p.relations[r]));

    // pi is a Hopf *-map on generators
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = p.sig->gens[i];
        const std::string& nm = g.name;
        // counit compatibility
        Scalar eps_pi = p.pi[i].counit();
        rep.add("pi-counit-" + nm,
                eps_pi == p.counit[i] ? CheckStatus::Pass : CheckStatus::Fail,
                eps_pi == p.counit[i] ? "" : (eps_pi - p.counit[i]).str());
        // coproduct compatibility: (pi (x) pi) Delta(g) == Delta(pi(g))
        std::map<std::pair<GroupElement, GroupElement>, Scalar> lhs, rhs;
        auto add_to = [&](std::map<std::pair<GroupElement, GroupElement>, Scalar>& m,
                          const GroupElement& x, const GroupElement& y, const Scalar& c) {
            auto key = std::make_pair(x, y);
            auto it = m.find(key);
            if (it == m.end()) {
                if (!c.is_zero()) m.emplace(key, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        NCPoly d = p.slot2.rs.normal_form(p.coproduct[i]);
        for (const auto& [w, c] : d.terms()) {
            auto parts = split_slots(*p.slot2.sig, w, 2);
            GroupAlgElem p1 = p.pi_of_poly(NCPoly::word(p.sig, parts[0], Scalar::one(p.ring)));
            GroupAlgElem p2 = p.pi_of_poly(NCPoly::word(p.sig, parts[1], Scalar::one(p.ring)));
            for (const auto& [x, cx] : p1.terms())
                for (const auto& [y, cy] : p2.terms()) add_to(lhs, x, y, c * cx * cy);
        }
        for (const auto& [x, c] : p.pi[i].terms()) add_to(rhs, x, x, c);
        bool eq = lhs == rhs;
        rep.add("pi-coproduct-" + nm, eq ? CheckStatus::Pass : CheckStatus::Fail,
                eq ? "" : "pi-image coproduct mismatch");
        // antipode compatibility: pi(S(g)) == S(pi(g))
        GroupAlgElem ps = p.pi_of_poly(p.antipode[i]);
        GroupAlgElem sp = p.pi[i].antipode();
        rep.add("pi-antipode-" + nm, ps == sp ? CheckStatus::Pass : CheckStatus::Fail,
                ps == sp ? "" : (ps - sp).str());
        // star compatibility: pi(g*) == pi(g)*
        GroupAlgElem pstar =
            p.pi[static_cast<size_t>(g.star_partner)].scaled(g.star_coeff);
        GroupAlgElem starp = p.pi[i].star();
        rep.add("pi-star-" + nm, pstar == starp ? CheckStatus::Pass : CheckStatus::Fail,
                pstar == starp ? "" : (pstar - starp).str());
    }

    return rep;
}

} // namespace

Report verify_hopf(const Presentation& p) {
    if (p.is_braided())
        throw Error("verify_hopf expects an ordinary presentation; use verify_braided_hopf");
    return verify_impl(p, "verify-hopf");
}

Report verify_braided_hopf(const Presentation& p) {
    if (!p.is_braided())
        throw Error("verify_braided_hopf expects a braided presentation");
    Report rep = verify_impl(p, "verify-braided");
    // ad-degree preservation of the structure maps (beyond load-time checks):
    // every coproduct term carries the generator's total ad-degree.
    for (size_t i = 0; i < p.sig->gens.size(); ++i) {
        const GenInfo& g = p.sig->gens[i];
        GroupElement adg = p.ad(static_cast<int>(i));
        bool ok = true;
        NCPoly d = p.slot2.rs.normal_form(p.coproduct[i]);
        for (const auto& [w, c] : d.terms()) {
            GroupElement total = ge_zero(p.group);
            for (int32_t x : w)
                total = ge_add(p.group, total,
                               p.sig->ad(p.slot2.sig->base_id(x)));
            if (!(total == adg)) ok = false;
        }
        rep.add("ad-degree-delta-" + g.name, ok ? CheckStatus::Pass : CheckStatus::Fail);
    }
    return rep;
}

bool is_cocentral(const Presentation& p, const SubgroupSpec& s) {
    for (size_t i = 0; i < p.sig->gens.size(); ++i)
        if (!s.member(p.ad(static_cast<int>(i)))) return false;
    return true;
}

} // namespace braidalg
