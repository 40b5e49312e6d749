#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "qorb/orbifold.hpp"

namespace qorb {

using CMatrix = Eigen::MatrixXcd;

// Compact real form su(n) in the defining representation, orthonormal for
// minus the Killing form B(X, Y) = 2n tr(XY). Off-diagonal pairs
// (E_jk - E_kj, i(E_jk + E_kj)) come first in lexicographic (j, k) order,
// then the Gram-Schmidt of i(E_jj - E_j+1,j+1).
struct LieAlgebraBasis {
    const RootDatum* rd = nullptr;
    int n = 0;
    std::vector<CMatrix> x;
    // [x_k, x_l] = sum_m c[k][l][m] x_m
    std::vector<std::vector<std::vector<double>>> c;
    // Coroots h_i = E_ii - E_i+1,i+1 of the complexification.
    std::vector<CMatrix> h;

    std::size_t dim() const { return x.size(); }
    double killing(const CMatrix& a, const CMatrix& b) const;
    // Complex coordinates of an element of the complexification.
    Eigen::VectorXcd coords(const CMatrix& a) const;
};

const LieAlgebraBasis& lie_basis(const RootDatum& rd);

// Max residuals of antisymmetry and the Jacobi identity of c.
struct StructureCheck {
    double antisymmetry = 0, jacobi = 0, orthonormality = 0;
};
StructureCheck check_structure(const LieAlgebraBasis& g);

// Irreducible module of cl(g) of dimension 2^floor(dim g / 2) built from
// Jordan-Wigner strings: e_2j = Z..Z X I..I, e_2j+1 = Z..Z Y I..I and, for
// odd dim g, the last generator Z..Z; gamma_k = i e_k.
struct SpinorModule {
    std::size_t dim_g = 0;
    std::vector<CMatrix> gamma;
    bool even = false;
    // Z..Z in the even case; empty otherwise.
    CMatrix omega;
    // Positions of the +1 and -1 eigenvectors of omega (omega is diagonal).
    std::vector<int> plus, minus;

    std::size_t dim() const { return gamma.empty() ? 0 : static_cast<std::size_t>(gamma[0].rows()); }
};

const SpinorModule& spinor_module(const LieAlgebraBasis& g);

CMatrix gamma_of(const SpinorModule& s, const Eigen::VectorXcd& coords);
// ad~(x) = 1/4 sum_k gamma(x_k) gamma([x, x_k])
CMatrix ad_tilde(const LieAlgebraBasis& g, const SpinorModule& s, const Eigen::VectorXcd& coords);
CMatrix ad_tilde(const LieAlgebraBasis& g, const CMatrix& x);

// Chirality and the projectors onto Sigma+ and Sigma-; throws
// std::invalid_argument for odd dim g.
struct Chirality {
    CMatrix omega, p_plus, p_minus;
};
Chirality chirality(const LieAlgebraBasis& g);

// Clifford relations, ad~ homomorphism, gamma([x,y]) = [ad~(x), gamma(y)],
// and in the even case the chirality identities.
Report verify_spinor(const RootDatum& rd, double tol = 1e-12);

CMatrix restrict(const CMatrix& a, const std::vector<int>& idx);

// Joint eigenvalues of commuting Hermitian matrices, rounded to integers
// within tol; sorted.
std::vector<std::vector<int>> joint_weights(const std::vector<CMatrix>& hs, double tol = 1e-9);

// Classical irreducible representation of the complexification at q = 1.
CMatrix classical_rep(const LieAlgebraBasis& g, const Weight& lambda, const CMatrix& x);

// Weight-(1,0) module or the spinor blocks as the target of the lift.
enum class LiftTarget { Spinor, Fundamental };

struct SpinLift {
    bool pass = false;
    bool periodic = false;
    double conjugation_residual = 0;
    double homomorphism_residual = 0;
    // On failure: factor, block and the offending eigenvalue of the generator
    // plus twist, with the phase e^{2 pi i v} it produces at one full turn.
    int factor = -1, block = -1;
    double eigenvalue = 0;
    std::string detail;
};

// Blocks are Sigma+, Sigma- (even) or Sigma (odd), or the single module for
// LiftTarget::Fundamental. twists holds one integer per block, or one per
// block per factor (factor-major).
SpinLift spin_lift_check(const ActionSpec& a, const std::vector<int>& twists, LiftTarget target = LiftTarget::Spinor);

// Report covering the su(2) twist window, the su(3) Cartan block
// spectra and the x = 1 surrogate comparison.
Report spin_examples(int window = 5);

struct DiracBlock {
    Weight lambda;
    CMatrix d;
    std::vector<double> spectrum;
    std::vector<double> spectrum_check;
    double hermiticity = 0;
    double commutation = 0;
    double solver_gap = 0;
};
// (rho_lambda (x) s)(D) on M_lambda (x) Sigma.
DiracBlock dirac_block(const RootDatum& rd, const Weight& lambda);
// Blocks for several weights, computed in parallel.
std::vector<DiracBlock> dirac_blocks(const RootDatum& rd, const std::vector<Weight>& lambdas);

}  // namespace qorb
