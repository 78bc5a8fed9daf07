#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace braidalg {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Integer character labels per basis vector (exponent vectors into a free
/// abelian T^); all equality of characters is exact on labels, all matrix
/// arithmetic is floating point.
using CharLabel = std::vector<int64_t>;

/// Numeric shadow of a bicharacter on a free abelian group: unit-modulus
/// values on generator pairs, extended bimultiplicatively.
struct NumericBichar {
    std::vector<std::vector<std::complex<double>>> vals;
    std::complex<double> eval(const CharLabel& a, const CharLabel& b) const;
};

/// Antilinear polar decomposition AJ = u |AJ| with J the pointwise
/// conjugation: returns the matrix part of u (u = mu o J) and the positive
/// part P, with A = mu * conj(P).
struct PolarResult {
    CMat mu;
    CMat p;
    double residual;
};
PolarResult polar_antilinear(const CMat& a, double tol = 1e-10);

struct Block {
    int size = 2; // 1 or 2
    double lambda = 1.0;
    std::complex<double> theta{1.0, 0.0};
    CharLabel chi;
};

struct StandardForm {
    CMat v;
    std::vector<Block> blocks;
    double residual_a = 0.0;
    double residual_x = 0.0;
    bool degenerate_warning = false;

    CMat assemble_a() const;
    /// Diagonal of the assembled X at the evaluation point t (angles per
    /// group generator).
    CVec assemble_x(const std::vector<double>& angles, const CharLabel& w0) const;
};

/// Block-diagonal standard form of a pair (A, X) with A \bar A unitary, X
/// diagonal with exact labels, and A (w0 Xbar) A^{-1} = X.
StandardForm standard_form(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w0,
                           double tol = 1e-10);

/// Antidiagonal normal form (Temperley-Lieb shape); requires a 2-torsion-free
/// label group, which the caller asserts via allow.
struct TlForm {
    CMat v;
    std::vector<std::complex<double>> antidiag;
    double residual = 0.0;
};
TlForm tl_form(const CMat& a, double tol = 1e-10);

struct MrozinskiResult {
    bool pass = false;
    std::complex<double> lambda{1.0, 0.0};
    std::vector<int64_t> odd_exponents; // mu_i = lambda^{odd_exponents[i]}
    std::vector<int64_t> l;             // l_i with spectrum value lambda^{2 l_i + 1}
    std::vector<std::complex<double>> spectrum;
    std::string reason; // set on fail
};
/// m even and spec(B Bbar) = { lambda^{odd} } for a single unimodular lambda.
MrozinskiResult check_mrozinski(const CMat& b, double tol = 1e-9, int exponent_bound = 33);

struct IsoResult {
    bool iso = false;
    CMat v;
    CharLabel chi;
    std::string reason;
};
/// Solves vXv* = chi X' and v(AD)v^t = A' with D = diag(beta(x_i^{-1}, chi));
/// candidate chi = w - w' for torsion-free label groups, with a multiset
/// enumeration fallback.
IsoResult check_iso_conditions(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w,
                               const CMat& a2, const std::vector<CharLabel>& x2,
                               const CharLabel& w2, const NumericBichar& beta,
                               double tol = 1e-8);

struct BfoNumeric {
    bool ok = false;
    std::complex<double> c{1.0, 0.0};
    int tau = 1;
    double residual = 0.0;
    bool odd_m_impossible = false;
    std::string reason;
};
/// Checks A Abar = c X(t_w)^{-2} and tau = c beta(w,w)^{-2} = +-1.
BfoNumeric check_bfo_numeric(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w,
                             const NumericBichar& beta, double tol = 1e-8);

} // namespace braidalg
