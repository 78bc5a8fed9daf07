#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "braidalg/constructions.hpp"
#include "braidalg/hopf.hpp"

namespace braidalg {

using SMat = std::vector<std::vector<Scalar>>;

SMat smat_mul(const SMat& a, const SMat& b);
SMat smat_conj(const SMat& a);
SMat smat_transpose(const SMat& a);
/// Gaussian elimination; pivots must be invertible monomials.
SMat smat_inverse(const SMat& a);

struct Suq2 {
    Presentation h;
    Bicharacter beta_lambda;
    SubgroupSpec s2; // 2Z, the annihilator of T_0 = {-1, 1}
};
/// C[SU_q(2)] on generators alpha, gamma with pi(alpha) = z, pi(gamma) = 0;
/// the ring carries the unitary parameters lambda, mu and the positive q.
Suq2 build_suq2();
/// The q -> q^2 mutation of the first relation, for the sensitivity test.
Presentation build_suq2_mutated();

/// Free orthogonal quantum group C[O_F^+]: U unitary, U = F Ubar F^{-1},
/// with pi(U) = Z = diag of the given characters.
Presentation build_ofplus(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& f,
                          const std::vector<GroupElement>& z);

/// Free unitary quantum group C[U_F^+]: U and F Ubar F^{-1} unitary.
Presentation build_ufplus(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& f,
                          const std::vector<GroupElement>& z);

struct SnPlus {
    Presentation h;
    Bicharacter beta; // beta(z^i, z^j) = omega^{-ij}, omega = zeta_N
};
/// Quantum permutation group C[S_N^+] in the homogeneous a_ij generators.
SnPlus build_snplus(int n);

struct BfoResult {
    Presentation direct;     // C[O_A^{X,beta}] from the displayed relations
    Presentation transmuted; // C[O_F^+]_beta with F = AC, Z = w^{-1} X
    Presentation ofplus;     // the underlying C[O_F^+]
    Scalar tau;
    Report report; // preconditions + the isomorphism certificates
};
/// Braided free orthogonal quantum group from (A, X, w, beta); X diagonal
/// with the given characters.
BfoResult build_bfo(const ScalarRingPtr& ring, const FgAbelianGroup& group, const SMat& a,
                    const std::vector<GroupElement>& x, const GroupElement& w,
                    const Bicharacter& beta);

struct QuadrupleResult {
    FgAbelianGroup group;
    std::vector<GroupElement> x;
    GroupElement w;
    Bicharacter beta;
    ScalarRingPtr ring;
    std::map<std::string, std::complex<double>> shadows; // fresh unitary values
    Eigen::MatrixXcd v;                                  // antidiagonalizing unitary
    Report report;
};
/// Builds a quadruple (T, X, w, beta) for a numeric matrix A with A Abar
/// unitary, per the antidiagonal reduction; fresh unitary variables carry
/// the numeric lambda_i.
QuadrupleResult build_quadruple(const Eigen::MatrixXcd& a, int tau);

struct MeyerRoyResult {
    BfoResult bfo;
    Scalar c;
    int d;
};
/// The A_o(Omega, X) comparison: X = diag(t^{d_i}), omega_ij != 0 =>
/// d_i + d_j = d, Omegabar Omega = c X(zeta^d); realized through build_bfo
/// (even d directly, odd d through the double cover and a fourth root).
MeyerRoyResult build_meyer_roy(const ScalarRingPtr& ring, const SMat& omega,
                               const std::vector<int64_t>& d_exps, int d, const Scalar& zeta);

/// Built-in example registry for the CLI.
std::vector<std::string> example_names();
Presentation build_example(const std::string& name);
Report verify_example(const std::string& name);

} // namespace braidalg
