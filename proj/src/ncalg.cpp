#include "braidalg/ncalg.hpp"

#include <algorithm>
#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg {

int Signature::find(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    return -1;
}

SigPtr make_signature(ScalarRingPtr ring, FgAbelianGroup group, std::vector<GenInfo> gens,
                      std::optional<std::vector<std::string>> precedence) {
    auto sig = std::make_shared<Signature>();
    sig->ring = std::move(ring);
    sig->group = std::move(group);
    sig->gens = std::move(gens);
    sig->base_size = static_cast<int>(sig->gens.size());
    size_t n = sig->gens.size();
    sig->rank.assign(n, 0);
    if (precedence) {
        if (precedence->size() != n) throw Error("precedence list must name every generator");
        // first named = highest rank
        for (size_t i = 0; i < n; ++i) {
            int id = sig->find((*precedence)[i]);
            if (id < 0) throw Error("precedence names unknown generator " + (*precedence)[i]);
            sig->rank[static_cast<size_t>(id)] = static_cast<int>(n - i);
        }
        std::set<int> seen(sig->rank.begin(), sig->rank.end());
        if (seen.size() != n) throw Error("precedence list repeats a generator");
    } else {
        // declaration order descending: first declared is largest
        for (size_t i = 0; i < n; ++i) sig->rank[i] = static_cast<int>(n - i);
    }
    for (size_t i = 0; i < n; ++i) {
        const GenInfo& g = sig->gens[i];
        if (g.star_partner < 0 || g.star_partner >= static_cast<int>(n))
            throw Error("generator " + g.name + " has no star partner");
        const GenInfo& p = sig->gens[static_cast<size_t>(g.star_partner)];
        if (!(p.degL == ge_neg(sig->group, g.degL)) || !(p.degR == ge_neg(sig->group, g.degR)))
            throw GradingMismatch("bidegree of " + p.name +
                                  " is not the inverse of the bidegree of " + g.name);
    }
    return sig;
}

SigPtr make_slot_signature(const SigPtr& base, int slots) {
    auto sig = std::make_shared<Signature>();
    sig->ring = base->ring;
    sig->group = base->group;
    sig->slot_count = slots;
    sig->base_size = base->base_size;
    sig->base = base;
    int n = base->base_size;
    for (int s = 0; s < slots; ++s) {
        for (int i = 0; i < n; ++i) {
            GenInfo g = base->gens[static_cast<size_t>(i)];
            g.name += "@" + std::to_string(s + 1);
            g.star_partner += s * n;
            sig->gens.push_back(std::move(g));
            // higher slots rank above lower slots; base order within a slot
            sig->rank.push_back(s * (n + 1) + base->rank[static_cast<size_t>(i)]);
        }
    }
    return sig;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        int ra = sig->rank[static_cast<size_t>(a[i])];
        int rb = sig->rank[static_cast<size_t>(b[i])];
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::pair<GroupElement, GroupElement> word_bidegree(const Signature& sig, const Word& w) {
    GroupElement l = ge_zero(sig.group), r = ge_zero(sig.group);
    for (int32_t g : w) {
        l = ge_add(sig.group, l, sig.gens[static_cast<size_t>(g)].degL);
        r = ge_add(sig.group, r, sig.gens[static_cast<size_t>(g)].degR);
    }
    return {l, r};
}

std::string word_str(const Signature& sig, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << " ";
        out << sig.gens[static_cast<size_t>(w[i])].name;
    }
    return out.str();
}

NCPoly::NCPoly(SigPtr sig) : sig_(std::move(sig)), terms_(WordLess{sig_.get()}) {}

NCPoly NCPoly::one(const SigPtr& sig) {
    return scalar(sig, Scalar::one(sig->ring));
}

NCPoly NCPoly::scalar(const SigPtr& sig, const Scalar& c) {
    NCPoly p(sig);
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::generator(const SigPtr& sig, int g) {
    NCPoly p(sig);
    p.add_term({g}, Scalar::one(sig->ring));
    return p;
}

NCPoly NCPoly::word(const SigPtr& sig, Word w, const Scalar& c) {
    NCPoly p(sig);
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(sig_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r(sig_);
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

NCPoly NCPoly::star() const {
    NCPoly r(sig_);
    for (const auto& [w, c] : terms_) {
        Scalar coeff = c.conj();
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const GenInfo& g = sig_->gens[static_cast<size_t>(*it)];
            coeff = coeff * g.star_coeff;
            sw.push_back(g.star_partner);
        }
        r.add_term(sw, coeff);
    }
    return r;
}

std::map<std::pair<GroupElement, GroupElement>, NCPoly> NCPoly::homogeneous_components() const {
    std::map<std::pair<GroupElement, GroupElement>, NCPoly> out;
    for (const auto& [w, c] : terms_) {
        auto key = word_bidegree(*sig_, w);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, NCPoly(sig_)).first;
        it->second.add_term(w, c);
    }
    return out;
}

bool NCPoly::is_homogeneous() const {
    return homogeneous_components().size() <= 1;
}

std::pair<GroupElement, GroupElement> NCPoly::bidegree() const {
    if (terms_.empty()) return {ge_zero(sig_->group), ge_zero(sig_->group)};
    return word_bidegree(*sig_, terms_.begin()->first);
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.str() << ")";
        if (!it->first.empty()) out << " " << word_str(*sig_, it->first);
    }
    return out.str();
}

NCPoly to_slot(const NCPoly& p, const SigPtr& slot_sig, int slot) {
    if (!slot_sig->base) throw Error("to_slot requires a slot signature");
    int n = slot_sig->base_size;
    NCPoly r(slot_sig);
    for (const auto& [w, c] : p.terms()) {
        Word sw;
        sw.reserve(w.size());
        for (int32_t g : w) sw.push_back(g + slot * n);
        r.add_term(sw, c);
    }
    return r;
}

// --- RewriteSystem ----------------------------------------------------------

RewriteSystem::RewriteSystem(SigPtr sig, CompletionCaps caps)
    : sig_(std::move(sig)), caps_(caps) {}

size_t RewriteSystem::active_rule_count() const {
    size_t n = 0;
    for (const auto& r : rules_)
        if (r.active) ++n;
    return n;
}

bool RewriteSystem::reduce_once(const Word& w, size_t& pos, size_t& rule_id) const {
    for (pos = 0; pos < w.size(); ++pos) {
        auto it = index_.find(w[pos]);
        if (it == index_.end()) continue;
        for (size_t id : it->second) {
            const Rule& r = rules_[id];
            if (!r.active) continue;
            if (r.lhs.size() > w.size() - pos) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos))) {
                rule_id = id;
                return true;
            }
        }
    }
    return false;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    NCPoly result(sig_);
    NCPoly agenda = p;
    size_t steps = 0;
    while (!agenda.is_zero()) {
        auto top = *agenda.terms().rbegin();
        const Word w = top.first;
        const Scalar c = top.second;
        agenda.add_term(w, -c);
        size_t pos = 0, rule_id = 0;
        if (!reduce_once(w, pos, rule_id)) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > caps_.step_budget)
            throw DivergenceGuard("normal form exceeded step budget of " +
                                  std::to_string(caps_.step_budget));
        const Rule& r = rules_[rule_id];
        Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
        Word suffix(w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
        for (const auto& [rw, rc] : r.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            agenda.add_term(nw, c * rc);
        }
    }
    return result;
}

size_t RewriteSystem::insert_rule(Word lhs, NCPoly rhs) {
    rules_.push_back({std::move(lhs), std::move(rhs), true});
    size_t id = rules_.size() - 1;
    index_[rules_[id].lhs[0]].push_back(id);
    return id;
}

void RewriteSystem::deactivate_rule(size_t id) {
    rules_[id].active = false;
}

bool RewriteSystem::add_relation(const NCPoly& p0) {
    NCPoly p = normal_form(p0);
    if (p.is_zero()) return false;
    if (!p.is_homogeneous())
        throw InhomogeneousRelation("relation is not bidegree-homogeneous: " + p.str());
    auto lead = *p.terms().rbegin();
    if (lead.first.empty())
        throw InconsistentPresentation("relation reduces to a nonzero scalar: " + p.str());
    if (!lead.second.is_monomial())
        throw NonMonomialLeadingCoefficient(
            "derived relation needs a multi-term inverse; normal form: " + p.str());
    NCPoly scaled = p.scaled(lead.second.invert());
    NCPoly rhs(sig_);
    for (const auto& [w, c] : scaled.terms()) {
        if (w == lead.first) continue;
        rhs.add_term(w, -c);
    }
    insert_rule(lead.first, std::move(rhs));
    return true;
}

void RewriteSystem::complete(bool capture_obstruction) {
    struct PairLess {
        const Signature* sig;
        bool operator()(const std::tuple<Word, size_t, size_t, size_t, int>& a,
                        const std::tuple<Word, size_t, size_t, size_t, int>& b) const {
            WordLess wl{sig};
            const auto& [wa, ia, ja, pa, ta] = a;
            const auto& [wb, ib, jb, pb, tb] = b;
            if (wl(wa, wb)) return true;
            if (wl(wb, wa)) return false;
            return std::tie(ia, ja, pa, ta) < std::tie(ib, jb, pb, tb);
        }
    };
    // (overlap word, rule i, rule j, position, type); type 0 = proper
    // overlap with j starting at `position` inside i..., type 1 = inclusion
    // of lhs_j in lhs_i at `position`.
    std::set<std::tuple<Word, size_t, size_t, size_t, int>, PairLess> queue{PairLess{sig_.get()}};

    auto enqueue_pairs_for = [&](size_t k) {
        const Word& lk = rules_[k].lhs;
        for (size_t j = 0; j < rules_.size(); ++j) {
            if (!rules_[j].active) continue;
            const Word& lj = rules_[j].lhs;
            // proper overlaps: suffix of lk = prefix of lj
            for (size_t o = 1; o < std::min(lk.size(), lj.size()); ++o) {
                if (std::equal(lk.end() - static_cast<long>(o), lk.end(), lj.begin())) {
                    Word w = lk;
                    w.insert(w.end(), lj.begin() + static_cast<long>(o), lj.end());
                    if (w.size() <= caps_.max_len)
                        queue.insert({w, k, j, lk.size() - o, 0});
                    else
                        status_ = CompletionStatus::Capped;
                }
            }
            // overlaps with roles swapped: suffix of lj = prefix of lk
            for (size_t o = 1; o < std::min(lk.size(), lj.size()); ++o) {
                if (std::equal(lj.end() - static_cast<long>(o), lj.end(), lk.begin())) {
                    Word w = lj;
                    w.insert(w.end(), lk.begin() + static_cast<long>(o), lk.end());
                    if (w.size() <= caps_.max_len)
                        queue.insert({w, j, k, lj.size() - o, 0});
                    else
                        status_ = CompletionStatus::Capped;
                }
            }
            // inclusions
            if (lj.size() < lk.size()) {
                for (size_t p = 0; p + lj.size() <= lk.size(); ++p)
                    if (std::equal(lj.begin(), lj.end(), lk.begin() + static_cast<long>(p)))
                        queue.insert({lk, k, j, p, 1});
            }
            if (j != k && lk.size() < lj.size()) {
                for (size_t p = 0; p + lk.size() <= lj.size(); ++p)
                    if (std::equal(lk.begin(), lk.end(), lj.begin() + static_cast<long>(p)))
                        queue.insert({lj, j, k, p, 1});
            }
        }
    };

    status_ = CompletionStatus::Complete;
    for (size_t k = 0; k < rules_.size(); ++k)
        if (rules_[k].active) enqueue_pairs_for(k);

    std::vector<NCPoly> pending; // reprocessed rules from interreduction
    while (!queue.empty() || !pending.empty()) {
        NCPoly spoly(sig_);
        if (!pending.empty()) {
            spoly = pending.back();
            pending.pop_back();
        } else {
            auto [w, i, j, pos, type] = *queue.begin();
            queue.erase(queue.begin());
            if (!rules_[i].active || !rules_[j].active) continue;
            if (type == 0) {
                // w = lhs_i + tail, rule j matches at pos
                Word tail(w.begin() + static_cast<long>(rules_[i].lhs.size()), w.end());
                Word head(w.begin(), w.begin() + static_cast<long>(pos));
                NCPoly left = rules_[i].rhs * NCPoly::word(sig_, tail, Scalar::one(sig_->ring));
                NCPoly right = NCPoly::word(sig_, head, Scalar::one(sig_->ring)) * rules_[j].rhs;
                spoly = left - right;
            } else {
                Word head(w.begin(), w.begin() + static_cast<long>(pos));
                Word tail(w.begin() + static_cast<long>(pos + rules_[j].lhs.size()), w.end());
                NCPoly mid = NCPoly::word(sig_, head, Scalar::one(sig_->ring)) * rules_[j].rhs *
                             NCPoly::word(sig_, tail, Scalar::one(sig_->ring));
                spoly = rules_[i].rhs - mid;
            }
        }
        NCPoly nf = normal_form(spoly);
        if (nf.is_zero()) continue;
        auto lead = *nf.terms().rbegin();
        if (lead.first.size() > caps_.max_len) {
            status_ = CompletionStatus::Capped;
            continue;
        }
        if (active_rule_count() >= caps_.max_rules) {
            status_ = CompletionStatus::Capped;
            continue;
        }
        size_t new_id;
        try {
            if (!add_relation(nf)) continue;
            new_id = rules_.size() - 1;
        } catch (const NonMonomialLeadingCoefficient& e) {
            if (capture_obstruction) {
                status_ = CompletionStatus::Capped;
                if (!obstruction_) obstruction_ = nf.str();
                continue;
            }
            throw;
        }
        // interreduce: any older rule whose lhs contains the new lhs gets
        // reprocessed against the current system
        const Word& nl = rules_[new_id].lhs;
        for (size_t r = 0; r < new_id; ++r) {
            if (!rules_[r].active) continue;
            const Word& lr = rules_[r].lhs;
            if (lr.size() < nl.size()) continue;
            bool contains = false;
            for (size_t p = 0; !contains && p + nl.size() <= lr.size(); ++p)
                contains = (lr == nl) ||
                           std::equal(nl.begin(), nl.end(), lr.begin() + static_cast<long>(p));
            if (lr == nl) contains = true;
            if (!contains) continue;
            NCPoly poly = NCPoly::word(sig_, lr, Scalar::one(sig_->ring)) - rules_[r].rhs;
            deactivate_rule(r);
            pending.push_back(std::move(poly));
        }
        enqueue_pairs_for(new_id);
    }

    // normalize right-hand sides against the final system
    for (auto& r : rules_) {
        if (!r.active) continue;
        r.rhs = normal_form(r.rhs);
    }
}

EqualStatus RewriteSystem::equal_mod(const NCPoly& p, const NCPoly& q) const {
    NCPoly nf = normal_form(p - q);
    if (nf.is_zero()) return EqualStatus::Equal;
    return status_ == CompletionStatus::Complete ? EqualStatus::Unequal
                                                 : EqualStatus::Inconclusive;
}

// --- slot algebras -----------------------------------------------------------

RewriteSystem make_slot_rules(const RewriteSystem& base, const SigPtr& slot_sig,
                              const std::optional<Bicharacter>& braiding) {
    RewriteSystem rs(slot_sig, base.caps());
    int n = slot_sig->base_size;
    int slots = slot_sig->slot_count;
    const SigPtr& base_sig = slot_sig->base;
    // slot-internal copies of the base rules
    for (int s = 0; s < slots; ++s) {
        for (const auto& rule : base.rules()) {
            if (!rule.active) continue;
            Word lhs;
            lhs.reserve(rule.lhs.size());
            for (int32_t g : rule.lhs) lhs.push_back(g + s * n);
            rs.insert_rule(std::move(lhs), to_slot(rule.rhs, slot_sig, s));
        }
    }
    // cross rules: y@t x@s -> scalar x@s y@t for s < t
    for (int s = 0; s < slots; ++s) {
        for (int t = s + 1; t < slots; ++t) {
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < n; ++x) {
                    Scalar scalar = Scalar::one(slot_sig->ring);
                    if (braiding)
                        scalar = braiding->eval(base_sig->ad(y), base_sig->ad(x));
                    Word lhs = {y + t * n, x + s * n};
                    Word rhs_w = {x + s * n, y + t * n};
                    rs.insert_rule(std::move(lhs), NCPoly::word(slot_sig, rhs_w, scalar));
                }
            }
        }
    }
    rs.set_status(base.status());
    return rs;
}

SlotAlgebra build_slot_algebra(const SigPtr& base, const RewriteSystem& base_rules, int slots,
                               const std::optional<Bicharacter>& braiding) {
    SlotAlgebra sa;
    sa.sig = make_slot_signature(base, slots);
    sa.rs = make_slot_rules(base_rules, sa.sig, braiding);
    sa.slots = slots;
    return sa;
}

} // namespace braidalg
