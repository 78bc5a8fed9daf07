#include "braidalg/abgroup.hpp"

#include <algorithm>
#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg {

bool GroupElement::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; });
}

GroupElement ge_zero(const FgAbelianGroup& g) {
    return GroupElement{std::vector<int64_t>(g.dim(), 0)};
}

GroupElement ge_reduce(const FgAbelianGroup& g, std::vector<int64_t> raw) {
    if (raw.size() != g.dim()) throw GroupMismatch("group element has wrong length");
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        int64_t n = g.torsion[i];
        int64_t& x = raw[static_cast<size_t>(g.rank) + i];
        x %= n;
        if (x < 0) x += n;
    }
    return GroupElement{std::move(raw)};
}

GroupElement ge_add(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    std::vector<int64_t> r(g.dim());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.e[i] + b.e[i];
    return ge_reduce(g, std::move(r));
}

GroupElement ge_neg(const FgAbelianGroup& g, const GroupElement& a) {
    std::vector<int64_t> r(g.dim());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.e[i];
    return ge_reduce(g, std::move(r));
}

GroupElement ge_sub(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return ge_add(g, a, ge_neg(g, b));
}

GroupElement ge_smul(const FgAbelianGroup& g, int64_t k, const GroupElement& a) {
    std::vector<int64_t> r(g.dim());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.e[i];
    return ge_reduce(g, std::move(r));
}

std::string ge_str(const GroupElement& a) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (i) out << ",";
        out << a.e[i];
    }
    out << ")";
    return out.str();
}

// --- Bicharacter -----------------------------------------------------------

Bicharacter::Bicharacter(FgAbelianGroup group, std::vector<std::vector<Scalar>> values)
    : group_(std::move(group)), values_(std::move(values)) {
    size_t n = group_.dim();
    if (values_.size() != n) throw GroupMismatch("bicharacter matrix has wrong size");
    for (const auto& row : values_)
        if (row.size() != n) throw GroupMismatch("bicharacter matrix has wrong size");
    if (n > 0) ring_ = values_[0][0].ring();
}

Bicharacter Bicharacter::trivial(const FgAbelianGroup& g, const ScalarRingPtr& ring) {
    std::vector<std::vector<Scalar>> vals(g.dim(), std::vector<Scalar>(g.dim(), Scalar::one(ring)));
    Bicharacter b(g, std::move(vals));
    b.ring_ = ring;
    return b;
}

Scalar Bicharacter::eval(const GroupElement& a, const GroupElement& b) const {
    if (a.e.size() != group_.dim() || b.e.size() != group_.dim())
        throw GroupMismatch("bicharacter evaluated on foreign group elements");
    Scalar acc = Scalar::one(ring_);
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] == 0) continue;
        for (size_t j = 0; j < b.e.size(); ++j) {
            if (b.e[j] == 0) continue;
            acc = acc * values_[i][j].pow(a.e[i] * b.e[j]);
        }
    }
    return acc;
}

bool Bicharacter::is_trivial() const {
    for (const auto& row : values_)
        for (const auto& v : row)
            if (!v.is_one()) return false;
    return true;
}

std::vector<Bicharacter::ValidationIssue> Bicharacter::validate() const {
    std::vector<ValidationIssue> issues;
    size_t n = group_.dim();
    auto order_of = [&](size_t idx) -> int64_t {
        size_t r = static_cast<size_t>(group_.rank);
        return idx < r ? 0 : group_.torsion[idx - r];
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Scalar& v = values_[i][j];
            if (!v.is_monomial() || !v.is_unitary_monomial()) {
                issues.push_back({i, j, "entry is not a unitary monomial: " + v.str()});
                continue;
            }
            int64_t ni = order_of(i), nj = order_of(j);
            if (ni > 0 && !v.pow(ni).is_one())
                issues.push_back({i, j, "torsion violation: beta(g_i,g_j)^" + std::to_string(ni) +
                                            " != 1 (first slot)"});
            if (nj > 0 && !v.pow(nj).is_one())
                issues.push_back({i, j, "torsion violation: beta(g_i,g_j)^" + std::to_string(nj) +
                                            " != 1 (second slot)"});
        }
    }
    return issues;
}

// --- SubgroupSpec ----------------------------------------------------------

SubgroupSpec::SubgroupSpec(FgAbelianGroup ambient, std::vector<GroupElement> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
    for (auto& g : gens_) g = ge_reduce(ambient_, g.e);
    build();
}

SubgroupSpec SubgroupSpec::full(const FgAbelianGroup& g) {
    std::vector<GroupElement> gens;
    for (size_t i = 0; i < g.dim(); ++i) {
        GroupElement x = ge_zero(g);
        x.e[i] = 1;
        gens.push_back(x);
    }
    return SubgroupSpec(g, gens);
}

namespace {

// columns = generating vectors plus torsion relations n_i * e_{rank+i}
IMat relation_matrix(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    size_t dim = g.dim();
    IMat m(dim, gens.size() + g.torsion.size());
    for (size_t c = 0; c < gens.size(); ++c)
        for (size_t r = 0; r < dim; ++r) m.at(r, c) = gens[c].e[r];
    for (size_t i = 0; i < g.torsion.size(); ++i)
        m.at(static_cast<size_t>(g.rank) + i, gens.size() + i) = g.torsion[i];
    return m;
}

} // namespace

void SubgroupSpec::build() {
    solve_matrix_ = relation_matrix(ambient_, gens_);

    // Abstract structure: S = Z^m / K where K = { x : sum x_j gens_j = 0 in T^ }.
    // K is computed as the projection to the first m coordinates of the
    // integer kernel of [gens | torsion].
    size_t m = gens_.size();
    IMat full = solve_matrix_;
    // kernel of full: columns u of unimodular U with H-column zero
    HnfResult hr = hermite_normal_form(full);
    std::vector<std::vector<int64_t>> kernel;
    for (size_t c = 0; c < hr.h.cols; ++c) {
        bool zero = true;
        for (size_t r = 0; r < hr.h.rows; ++r)
            if (hr.h.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<int64_t> k(m);
        for (size_t i = 0; i < m; ++i) k[i] = hr.u.at(i, c);
        kernel.push_back(std::move(k));
    }
    IMat kmat(m, kernel.size());
    for (size_t c = 0; c < kernel.size(); ++c)
        for (size_t r = 0; r < m; ++r) kmat.at(r, c) = kernel[c][r];
    SnfResult snf = smith_normal_form(kmat);
    // S = Z^m / im(kmat); with U kmat V = D, basis elements are the columns
    // of U^{-1}, i.e. generators combined via rows of U... we need, for
    // basis b_i of Z^m / im(K): coordinates map y = U x; orders d_i.
    // Basis element i corresponds to the preimage of e_i under U.
    // Compute U^{-1} by solving U X = I (U unimodular).
    size_t rows = snf.u.rows;
    IMat uinv(rows, rows);
    for (size_t col = 0; col < rows; ++col) {
        std::vector<int64_t> b(rows, 0);
        b[col] = 1;
        auto x = solve_integer(snf.u, b);
        if (!x) throw Error("unimodular inverse failed");
        for (size_t r = 0; r < rows; ++r) uinv.at(r, col) = (*x)[r];
    }
    basis_.elems.clear();
    basis_.orders.clear();
    for (size_t i = 0; i < m; ++i) {
        int64_t d = (i < std::min(snf.d.rows, snf.d.cols)) ? snf.d.at(i, i) : 0;
        if (d == 1) continue; // trivial factor
        // basis element = sum_j uinv[j][i] * gens_j
        GroupElement b = ge_zero(ambient_);
        for (size_t j = 0; j < m; ++j)
            if (uinv.at(j, i) != 0) b = ge_add(ambient_, b, ge_smul(ambient_, uinv.at(j, i), gens_[j]));
        basis_.elems.push_back(b);
        basis_.orders.push_back(d);
    }
    basis_solve_ = relation_matrix(ambient_, basis_.elems);
}

bool SubgroupSpec::member(const GroupElement& a) const {
    if (a.e.size() != ambient_.dim()) throw GroupMismatch("membership test on foreign element");
    return solve_integer(solve_matrix_, a.e).has_value();
}

std::optional<std::vector<int64_t>> SubgroupSpec::express(const GroupElement& a) const {
    auto sol = solve_integer(basis_solve_, a.e);
    if (!sol) return std::nullopt;
    std::vector<int64_t> coords(basis_.elems.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        coords[i] = (*sol)[i];
        if (basis_.orders[i] > 0) {
            coords[i] %= basis_.orders[i];
            if (coords[i] < 0) coords[i] += basis_.orders[i];
        }
    }
    return coords;
}

// --- GroupAlgElem -----------------------------------------------------------

GroupAlgElem GroupAlgElem::of(const FgAbelianGroup& g, const ScalarRingPtr& r,
                              const GroupElement& x, const Scalar& coeff) {
    GroupAlgElem e(g, r);
    e.add_term(ge_reduce(g, x.e), coeff);
    return e;
}

void GroupAlgElem::add_term(const GroupElement& x, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgElem GroupAlgElem::operator+(const GroupAlgElem& o) const {
    GroupAlgElem r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, c);
    return r;
}

GroupAlgElem GroupAlgElem::operator-(const GroupAlgElem& o) const {
    GroupAlgElem r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, -c);
    return r;
}

GroupAlgElem GroupAlgElem::operator*(const GroupAlgElem& o) const {
    GroupAlgElem r(group_, ring_);
    for (const auto& [x, c] : terms_)
        for (const auto& [y, d] : o.terms_) r.add_term(ge_add(group_, x, y), c * d);
    return r;
}

GroupAlgElem GroupAlgElem::scaled(const Scalar& s) const {
    GroupAlgElem r(group_, ring_);
    for (const auto& [x, c] : terms_) r.add_term(x, c * s);
    return r;
}

GroupAlgElem GroupAlgElem::star() const {
    GroupAlgElem r(group_, ring_);
    for (const auto& [x, c] : terms_) r.add_term(ge_neg(group_, x), c.conj());
    return r;
}

GroupAlgElem GroupAlgElem::antipode() const {
    GroupAlgElem r(group_, ring_);
    for (const auto& [x, c] : terms_) r.add_term(ge_neg(group_, x), c);
    return r;
}

Scalar GroupAlgElem::counit() const {
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [x, c] : terms_) acc = acc + c;
    return acc;
}

std::string GroupAlgElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [x, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*t" << ge_str(x);
    }
    return out.str();
}

Scalar bichar_eval_alg(const Bicharacter& beta, const GroupAlgElem& a, const GroupAlgElem& b) {
    Scalar acc = Scalar::zero(beta.ring());
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms()) acc = acc + c * d * beta.eval(x, y);
    return acc;
}

// --- TwistData ---------------------------------------------------------------

Scalar TwistData::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                       const GroupElement& d) const {
    (void)a;
    Scalar v;
    if (kind_ == Kind::J1) {
        v = beta_.eval(b, c).conj();
    } else {
        v = beta_.eval(b, ge_sub(beta_.group(), c, d)).conj();
    }
    return inverted_ ? v.invert() : v;
}

Scalar TwistData::u(const GroupElement& a, const GroupElement& b) const {
    const FgAbelianGroup& g = beta_.group();
    return eval(a, b, ge_neg(g, a), ge_neg(g, b));
}

std::pair<TwistData, TwistData> cocycles_from_bichar(const Bicharacter& beta) {
    return {TwistData(TwistData::Kind::J1, beta), TwistData(TwistData::Kind::J2, beta)};
}

} // namespace braidalg
