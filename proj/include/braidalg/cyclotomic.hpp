#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braidalg {

using Rational = mpq_class;

/// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
/// zeta_N reduced against the N-th cyclotomic polynomial. The reduced
/// representation is canonical: two elements are equal iff their coefficient
/// vectors are equal.
class Cyclotomic {
public:
    Cyclotomic() : order_(1) {}
    explicit Cyclotomic(unsigned order) : order_(order) {}

    static Cyclotomic rational(unsigned order, const Rational& r);
    static Cyclotomic integer(unsigned order, long n) { return rational(order, Rational(n)); }
    /// zeta_N^k (k may be negative).
    static Cyclotomic zeta_pow(unsigned order, long k);

    unsigned order() const { return order_; }
    bool is_zero() const;
    bool is_rational() const;
    /// Only valid when is_rational().
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const;
    /// Multiplicative inverse; throws NotInvertible on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long k) const;

    /// Re-embed into Q(zeta_M) where order() divides M.
    Cyclotomic embedded(unsigned new_order) const;

    std::complex<double> to_complex() const;
    /// Canonical textual form in the scalar grammar (rationals and
    /// zeta(N)^k terms).
    std::string str() const;

    /// Coefficients in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
    const std::vector<Rational>& coeffs() const { return c_; }

private:
    unsigned order_;
    std::vector<Rational> c_; // index = power of zeta, reduced mod Phi_N

    void reduce();
    static const std::vector<Rational>& phi(unsigned n); // cached Phi_n
    friend struct CyclotomicOps;
};

/// Degree of Phi_N (Euler phi of N).
unsigned cyclotomic_degree(unsigned n);

} // namespace braidalg
