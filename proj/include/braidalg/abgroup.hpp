#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidalg/intlinalg.hpp"
#include "braidalg/scalar.hpp"

namespace braidalg {

/// Finitely generated abelian group Z^r + Z/n_1 + ... + Z/n_t, written
/// additively. Torsion orders are kept in sorted order.
struct FgAbelianGroup {
    int64_t rank = 0;
    std::vector<int64_t> torsion;

    size_t dim() const { return static_cast<size_t>(rank) + torsion.size(); }
    bool operator==(const FgAbelianGroup& o) const = default;
};

/// Element of an FgAbelianGroup: exponent vector with torsion coordinates
/// reduced into [0, n_i).
struct GroupElement {
    std::vector<int64_t> e;

    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const { return e < o.e; }
    bool is_zero() const;
};

GroupElement ge_zero(const FgAbelianGroup& g);
GroupElement ge_reduce(const FgAbelianGroup& g, std::vector<int64_t> raw);
GroupElement ge_add(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement ge_neg(const FgAbelianGroup& g, const GroupElement& a);
GroupElement ge_sub(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement ge_smul(const FgAbelianGroup& g, int64_t k, const GroupElement& a);
std::string ge_str(const GroupElement& a);

/// Unitary bicharacter beta: T^ x T^ -> scalars, given by its values on
/// generator pairs and extended bimultiplicatively.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(FgAbelianGroup group, std::vector<std::vector<Scalar>> values);

    static Bicharacter trivial(const FgAbelianGroup& g, const ScalarRingPtr& ring);

    const FgAbelianGroup& group() const { return group_; }
    const ScalarRingPtr& ring() const { return ring_; }
    const std::vector<std::vector<Scalar>>& values() const { return values_; }

    Scalar eval(const GroupElement& a, const GroupElement& b) const;
    bool is_trivial() const;

    struct ValidationIssue {
        size_t i, j;
        std::string reason;
    };
    /// Checks every entry is a unitary monomial and torsion consistency
    /// beta(g_i, g_j)^{n_i} = 1 (both slots).
    std::vector<ValidationIssue> validate() const;

    /// The character t_w: x -> beta(x, w).
    Scalar transpose_character(const GroupElement& x, const GroupElement& w) const {
        return eval(x, w);
    }

private:
    FgAbelianGroup group_;
    ScalarRingPtr ring_;
    std::vector<std::vector<Scalar>> values_;
};

/// Subgroup S of T^ described by a generating set; membership and
/// coordinates are answered through Hermite/Smith forms. In the paper's
/// notation S is the annihilator of the cocentral subgroup T_0.
class SubgroupSpec {
public:
    SubgroupSpec() = default;
    SubgroupSpec(FgAbelianGroup ambient, std::vector<GroupElement> gens);

    static SubgroupSpec full(const FgAbelianGroup& g);

    const FgAbelianGroup& ambient() const { return ambient_; }
    const std::vector<GroupElement>& gens() const { return gens_; }

    bool member(const GroupElement& a) const;

    /// Canonical basis of S as an abstract group: basis elements in the
    /// ambient group plus their orders (0 = infinite).
    struct Basis {
        std::vector<GroupElement> elems;
        std::vector<int64_t> orders;
    };
    const Basis& basis() const { return basis_; }

    /// Coordinates of a member in the canonical basis (torsion coordinates
    /// reduced mod the order); nullopt for non-members.
    std::optional<std::vector<int64_t>> express(const GroupElement& a) const;

private:
    FgAbelianGroup ambient_;
    std::vector<GroupElement> gens_;
    IMat solve_matrix_; // [gens | torsion relations]
    Basis basis_;
    IMat basis_solve_; // [basis elems | torsion relations]
    void build();
};

/// Element of the group algebra C[T^]: finite scalar-weighted sum of group
/// elements.
class GroupAlgElem {
public:
    GroupAlgElem() = default;
    GroupAlgElem(FgAbelianGroup group, ScalarRingPtr ring)
        : group_(std::move(group)), ring_(std::move(ring)) {}

    static GroupAlgElem zero(const FgAbelianGroup& g, const ScalarRingPtr& r) {
        return GroupAlgElem(g, r);
    }
    static GroupAlgElem of(const FgAbelianGroup& g, const ScalarRingPtr& r,
                           const GroupElement& x, const Scalar& coeff);

    const FgAbelianGroup& group() const { return group_; }
    const ScalarRingPtr& ring() const { return ring_; }
    const std::map<GroupElement, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    GroupAlgElem operator+(const GroupAlgElem& o) const;
    GroupAlgElem operator-(const GroupAlgElem& o) const;
    GroupAlgElem operator*(const GroupAlgElem& o) const;
    GroupAlgElem scaled(const Scalar& s) const;
    bool operator==(const GroupAlgElem& o) const { return terms_ == o.terms_; }

    /// Group algebra star: (sum c_g g)* = sum conj(c_g) g^{-1}.
    GroupAlgElem star() const;
    /// Antipode: g -> g^{-1} linearly.
    GroupAlgElem antipode() const;
    /// Counit: sum of coefficients.
    Scalar counit() const;

    void add_term(const GroupElement& x, const Scalar& c);
    std::string str() const;

private:
    FgAbelianGroup group_;
    ScalarRingPtr ring_;
    std::map<GroupElement, Scalar> terms_;
};

/// Bilinear extension of a bicharacter to the group algebra.
Scalar bichar_eval_alg(const Bicharacter& beta, const GroupAlgElem& a, const GroupAlgElem& b);

/// Scalar 2-cocycles on T^ x T^ used by the cocycle-twist machinery. Only
/// the pullbacks appearing in the constructions are representable: the
/// J_1/J_2 cocycles derived from a bicharacter, optionally inverted.
class TwistData {
public:
    enum class Kind { J1, J2 };

    TwistData() = default;
    TwistData(Kind kind, Bicharacter beta, bool inverted = false)
        : kind_(kind), beta_(std::move(beta)), inverted_(inverted) {}

    Kind kind() const { return kind_; }
    const Bicharacter& beta() const { return beta_; }
    bool inverted() const { return inverted_; }
    TwistData inverse() const { return TwistData(kind_, beta_, !inverted_); }

    /// J((a,b),(c,d)) on group-like pairs.
    Scalar eval(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                const GroupElement& d) const;
    /// Convolution element u(p) = J(p, p^{-1}) on a group-like pair p=(a,b).
    Scalar u(const GroupElement& a, const GroupElement& b) const;

private:
    Kind kind_ = Kind::J1;
    Bicharacter beta_;
    bool inverted_ = false;
};

/// The two Hopf 2-cocycles of the bosonization comparison theorem:
/// J1((a,b),(c,d)) = conj beta(b,c),  J2((a,b),(c,d)) = conj beta(b, c-d).
std::pair<TwistData, TwistData> cocycles_from_bichar(const Bicharacter& beta);

} // namespace braidalg
