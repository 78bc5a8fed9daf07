#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidalg/abgroup.hpp"
#include "braidalg/ncalg.hpp"

namespace braidalg {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string certificate; // nonzero normal form / residual / note
};

struct Report {
    std::string verb;
    std::vector<Check> checks;

    void add(std::string name, CheckStatus status, std::string certificate = "");
    CheckStatus overall() const;
    size_t count(CheckStatus s) const;
};

const char* status_str(CheckStatus s);

/// Presentation of a Hopf *-algebra (braiding empty) or braided Hopf
/// *-algebra (braiding set) with a distinguished Hopf map pi to the group
/// algebra of `group`. Structure maps are recorded on generators; products
/// in a braided presentation are the braided products throughout.
struct Presentation {
    ScalarRingPtr ring;
    FgAbelianGroup group;
    SigPtr sig;
    std::vector<NCPoly> relations; // star-closed
    RewriteSystem rs;

    std::vector<NCPoly> coproduct; // over the 2-slot signature
    std::vector<Scalar> counit;
    std::vector<NCPoly> antipode; // over sig
    std::vector<GroupAlgElem> pi;

    std::optional<Bicharacter> braiding;

    /// Effective T^ x T^ bidegrees used by the scalar cocycle twist; only
    /// presentations produced by the tensor/coinvariant/smash constructions
    /// carry these.
    struct TwistDeg {
        GroupElement p1, p2, q1, q2;
    };
    std::optional<std::vector<TwistDeg>> twist_grading;

    std::optional<std::vector<std::string>> precedence;
    CompletionCaps caps;

    // slot algebras over the presentation's own rewrite system
    SlotAlgebra slot2, slot3;

    bool is_braided() const { return braiding.has_value(); }
    int find_gen(const std::string& name) const { return sig->find(name); }
    GroupElement ad(int g) const { return sig->ad(g); }

    /// Antipode of a word, extended (braided-)anti-multiplicatively.
    NCPoly antipode_of_word(const Word& w) const;
    /// Antipode of a polynomial (linear extension).
    NCPoly antipode_of_poly(const NCPoly& p) const;
    /// Counit of a polynomial (multiplicative on words).
    Scalar counit_of_poly(const NCPoly& p) const;
    /// pi of a polynomial (multiplicative on words) in C[T^].
    GroupAlgElem pi_of_poly(const NCPoly& p) const;
    /// Coproduct of a polynomial as an algebra map into the 2-slot algebra.
    NCPoly coproduct_of_poly(const NCPoly& p) const;
};

/// Raw ingredients for building a presentation; `build_presentation` runs
/// the structural checks, star-closes the relations and completes the
/// rewrite system (recording rather than throwing completion obstructions).
struct PresentationData {
    ScalarRingPtr ring;
    FgAbelianGroup group;
    SigPtr sig;
    std::vector<NCPoly> relations;
    std::vector<NCPoly> coproduct;
    std::vector<Scalar> counit;
    std::vector<NCPoly> antipode;
    std::vector<GroupAlgElem> pi;
    std::optional<Bicharacter> braiding;
    std::optional<std::vector<Presentation::TwistDeg>> twist_grading;
    std::optional<std::vector<std::string>> precedence;
    CompletionCaps caps;
};

Presentation build_presentation(PresentationData data);

/// Machine verification of the Hopf *-algebra axioms on generators and
/// relations: coproduct gradings, Delta a *-homomorphism, coassociativity,
/// counit laws, antipode convolution laws, antipode anti-multiplicativity,
/// and pi a Hopf *-map.
Report verify_hopf(const Presentation& p);

/// Braided variant: the same axioms in beta-braided slot algebras plus the
/// braided star compatibility of the coproduct.
Report verify_braided_hopf(const Presentation& p);

/// True iff every generator's ad-degree lies in S.
bool is_cocentral(const Presentation& p, const SubgroupSpec& s);

} // namespace braidalg
