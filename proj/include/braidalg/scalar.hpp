#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidalg/cyclotomic.hpp"

namespace braidalg {

/// Names the coefficient ring Q(zeta_N)[u_1^{±1},...,p_1^{±1},...]:
/// cyclotomic order plus the formal unitary variables (u* = u^{-1}) and
/// positive self-adjoint variables (p* = p).
struct ScalarRingSpec {
    unsigned zeta_order = 1;
    std::vector<std::string> unitary;
    std::vector<std::string> positive;

    size_t var_count() const { return unitary.size() + positive.size(); }
    bool is_unitary_var(size_t idx) const { return idx < unitary.size(); }
    const std::string& var_name(size_t idx) const {
        return idx < unitary.size() ? unitary[idx] : positive[idx - unitary.size()];
    }
    std::optional<size_t> find_var(const std::string& name) const;

    bool operator==(const ScalarRingSpec& o) const = default;
};

using ScalarRingPtr = std::shared_ptr<const ScalarRingSpec>;

ScalarRingPtr make_ring(unsigned zeta_order, std::vector<std::string> unitary,
                        std::vector<std::string> positive);

/// Exact scalar: finitely many terms  exponent-vector -> cyclotomic, where
/// the exponent vector runs over all formal variables of the ring spec.
/// Zero coefficients are never stored, so the representation is canonical.
class Scalar {
public:
    using ExpVec = std::vector<int32_t>;

    Scalar() = default;
    explicit Scalar(ScalarRingPtr ring) : ring_(std::move(ring)) {}

    static Scalar zero(const ScalarRingPtr& ring) { return Scalar(ring); }
    static Scalar one(const ScalarRingPtr& ring);
    static Scalar from_rational(const ScalarRingPtr& ring, const Rational& r);
    static Scalar from_int(const ScalarRingPtr& ring, long n) {
        return from_rational(ring, Rational(n));
    }
    static Scalar from_cyclotomic(const ScalarRingPtr& ring, const Cyclotomic& c);
    static Scalar zeta_pow(const ScalarRingPtr& ring, long k);
    static Scalar variable(const ScalarRingPtr& ring, const std::string& name, int32_t exp = 1);
    static Scalar variable(const ScalarRingPtr& ring, size_t idx, int32_t exp = 1);

    const ScalarRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Monomial whose product with its conjugate is 1.
    bool is_unitary_monomial() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Involution: zeta -> zeta^{-1}, u -> u^{-1}, p -> p, rationals fixed.
    Scalar conj() const;
    /// Multiplicative inverse of a single-term scalar; throws NotInvertible
    /// for multi-term scalars or zero.
    Scalar invert() const;
    Scalar pow(long k) const;

    /// Exact division a/b when the quotient lies in the ring; nullopt if not.
    std::optional<Scalar> try_divide(const Scalar& b) const;

    /// Replace var^k by value within every term: exponent e on the variable
    /// is rewritten as e = k*q + r, contributing value^q and residual
    /// exponent r. Used for recorded root relations like mu^4 = zeta.
    Scalar substitute_power(size_t var_idx, int32_t k, const Scalar& value) const;
    /// Substitute a variable entirely by a monomial scalar.
    Scalar substitute(size_t var_idx, const Scalar& value) const;
    /// Re-express in a ring with the same variables in possibly different
    /// order, plus extras, and a cyclotomic order divisible by the old one.
    Scalar reringed(const ScalarRingPtr& new_ring) const;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& vars) const;

    const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
    std::string str() const;

private:
    ScalarRingPtr ring_;
    std::map<ExpVec, Cyclotomic> terms_;

    void add_term(const ExpVec& e, const Cyclotomic& c);
    void check_ring(const Scalar& o) const;
};

/// Parses the textual scalar grammar: zeta(N)^k, variable names, integer
/// exponents with ^, *, +, -, parentheses, rational literals p/q.
Scalar parse_scalar(const ScalarRingPtr& ring, const std::string& text);

} // namespace braidalg
