#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidalg/abgroup.hpp"
#include "braidalg/scalar.hpp"

namespace braidalg {

/// Generator of a free *-algebra: name, bidegree, and the star map
/// star(g) = star_coeff * gens[star_partner]. The bidegree of the partner is
/// the componentwise inverse of the bidegree of g.
struct GenInfo {
    std::string name;
    GroupElement degL, degR;
    int star_partner = -1;
    Scalar star_coeff;
};

/// Immutable description of a (possibly slotted) generator alphabet. For
/// slot signatures generator ids are slot-major: id = slot*base_size + base id,
/// and deglex ranks place higher slots above lower ones so that normal forms
/// are slot-sorted ascending.
struct Signature {
    ScalarRingPtr ring;
    FgAbelianGroup group;
    std::vector<GenInfo> gens;
    std::vector<int> rank; // deglex rank per generator; higher compares larger

    int slot_count = 1;
    int base_size = 0; // == gens.size() for base signatures
    std::shared_ptr<const Signature> base; // set for slot signatures

    int find(const std::string& name) const;
    GroupElement ad(int g) const { return ge_sub(group, gens[g].degR, gens[g].degL); }
    int slot_of(int g) const { return g / base_size; }
    int base_id(int g) const { return g % base_size; }
};

using SigPtr = std::shared_ptr<const Signature>;

/// Builds a base signature; ranks default to declaration order descending
/// (first generator largest).
SigPtr make_signature(ScalarRingPtr ring, FgAbelianGroup group, std::vector<GenInfo> gens,
                      std::optional<std::vector<std::string>> precedence = std::nullopt);

/// n-slot copy of a base signature.
SigPtr make_slot_signature(const SigPtr& base, int slots);

using Word = std::vector<int32_t>;

struct WordLess {
    const Signature* sig = nullptr;
    bool operator()(const Word& a, const Word& b) const;
};

std::pair<GroupElement, GroupElement> word_bidegree(const Signature& sig, const Word& w);
std::string word_str(const Signature& sig, const Word& w);

/// Noncommutative polynomial over a signature: map word -> Scalar with no
/// zero coefficients stored.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(SigPtr sig);

    static NCPoly zero(const SigPtr& sig) { return NCPoly(sig); }
    static NCPoly one(const SigPtr& sig);
    static NCPoly scalar(const SigPtr& sig, const Scalar& c);
    static NCPoly generator(const SigPtr& sig, int g);
    static NCPoly word(const SigPtr& sig, Word w, const Scalar& c);

    const SigPtr& sig() const { return sig_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly scaled(const Scalar& c) const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    /// Free *-algebra involution: reverse each word, star each generator,
    /// conjugate coefficients.
    NCPoly star() const;

    /// Termwise bidegree decomposition; the parts sum to the polynomial.
    std::map<std::pair<GroupElement, GroupElement>, NCPoly> homogeneous_components() const;
    bool is_homogeneous() const;
    /// Bidegree of a homogeneous polynomial (zero polynomial: identity).
    std::pair<GroupElement, GroupElement> bidegree() const;

    void add_term(const Word& w, const Scalar& c);
    std::string str() const;

private:
    SigPtr sig_;
    std::map<Word, Scalar, WordLess> terms_;
};

/// Re-express a polynomial into slot `slot` (0-based) of a slot signature.
NCPoly to_slot(const NCPoly& p, const SigPtr& slot_sig, int slot);

enum class CompletionStatus { Complete, Capped, Unknown };
enum class EqualStatus { Equal, Unequal, Inconclusive };

struct CompletionCaps {
    size_t max_rules = 500;
    size_t max_len = 12;
    size_t step_budget = 1000000;
};

/// Rewrite system over a free algebra with a deglex order. Rules have
/// monomial-invertible leading coefficients (scaled to 1) and every rule is
/// bidegree-homogeneous.
class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(SigPtr sig, CompletionCaps caps = {});

    struct Rule {
        Word lhs;
        NCPoly rhs;
        bool active = true;
    };

    const SigPtr& sig() const { return sig_; }
    const std::vector<Rule>& rules() const { return rules_; }
    size_t active_rule_count() const;
    CompletionStatus status() const { return status_; }
    const std::optional<std::string>& obstruction() const { return obstruction_; }
    const CompletionCaps& caps() const { return caps_; }

    /// Deterministic reduction: largest term first, leftmost position, first
    /// matching rule. Throws DivergenceGuard past the step budget.
    NCPoly normal_form(const NCPoly& p) const;

    /// Reduce, orient and insert a relation; returns false when the relation
    /// reduces to zero. Throws InhomogeneousRelation /
    /// NonMonomialLeadingCoefficient / InconsistentPresentation.
    bool add_relation(const NCPoly& p);

    /// Critical-pair completion up to the caps. On success status() becomes
    /// Complete; hitting a cap leaves Capped. A generated rule that would
    /// need a multi-term inverse throws NonMonomialLeadingCoefficient unless
    /// capture_obstruction, in which case it is recorded and the status is
    /// Capped.
    void complete(bool capture_obstruction = false);

    EqualStatus equal_mod(const NCPoly& p, const NCPoly& q) const;

    void set_status(CompletionStatus s) { status_ = s; }

private:
    SigPtr sig_;
    CompletionCaps caps_;
    std::vector<Rule> rules_;
    std::map<int32_t, std::vector<size_t>> index_; // first letter -> rule ids
    CompletionStatus status_ = CompletionStatus::Complete;
    std::optional<std::string> obstruction_;

    bool reduce_once(const Word& w, size_t& pos, size_t& rule_id) const;
    size_t insert_rule(Word lhs, NCPoly rhs);
    void deactivate_rule(size_t id);
    friend RewriteSystem make_slot_rules(const RewriteSystem& base, const SigPtr& slot_sig,
                                         const std::optional<Bicharacter>& braiding);
};

/// Tensor-slot algebra: n slots of the base presentation with slot-internal
/// rules copied and cross rules sorting higher slots rightward. With a
/// bicharacter, moving a slot-j generator y left past a slot-i generator x
/// (i < j) produces the scalar beta(ad y, ad x).
struct SlotAlgebra {
    SigPtr sig;
    RewriteSystem rs;
    int slots = 1;
};

SlotAlgebra build_slot_algebra(const SigPtr& base, const RewriteSystem& base_rules, int slots,
                               const std::optional<Bicharacter>& braiding);

} // namespace braidalg
