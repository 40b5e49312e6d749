#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qorb/orbifold.hpp"

namespace qorb {

// Invariant idempotent in end(V) (x) C[G_q]; rho acts on V diagonally with
// the given charges.
struct EquivariantProjector {
    ActionSpec action;
    std::string name;
    std::vector<Charge> charges;
    std::vector<std::vector<CoordElement>> p;

    std::size_t dim() const { return p.size(); }
};

// p = v v* for the column v_i = t^lambda_{i, column}. Throws
// std::invalid_argument when sum_i v_i* v_i != 1 or when declared charges
// disagree with the entry charges.
EquivariantProjector corep_column_projector(const ActionSpec& a, const Weight& lambda, int column,
                                            const std::vector<Charge>& charges = {});
// diag(1, 0, ..., 0) with all charges zero.
EquivariantProjector trivial_projector(const ActionSpec& a, std::size_t dim);
// "su2-column" (defining column 0), "su2-column:1", "su3-column:j", "trivial:n".
EquivariantProjector projector_preset(const std::string& name, const ActionSpec& a);

// p^2 = p, p* = p and charge(p_ij) = c_i - c_j, all exact.
Report verify_projector(const EquivariantProjector& p);

using Monomial = std::vector<MatrixCoeff>;

// Element of C[G_q]^(x)(degree+1) in the tensor basis.
struct Chain {
    int degree = 0;
    std::map<Monomial, QScalar> terms;

    void add(const Monomial& m, const QScalar& v);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Chain& a, const Chain& b);
};

// Expansion of x_0 (x) ... (x) x_k.
Chain tensor_chain(const std::vector<CoordElement>& xs);

Charge total_charge(const ActionSpec& a, const Monomial& m);

// Membership in C_k: every monomial has invariant total charge.
struct ComplexMembership {
    bool in_complex = true;
    std::optional<Monomial> violation;
    // A monomial of total charge 0 with a non-invariant tensor factor.
    std::optional<Monomial> witness;
    std::size_t monomials = 0;
};
ComplexMembership check_complex(const ActionSpec& a, const Chain& c);

// tr(p (x) ... (x) p), 2k+1 factors.
Chain chern_character(const EquivariantProjector& p, int k);

// Functional on (degree+1)-fold monomials, extended multilinearly.
class Cochain {
public:
    using Fn = std::function<QScalar(const Monomial&)>;

    Cochain() = default;
    Cochain(int degree, Fn f) : degree_(degree), f_(std::move(f)) {}
    // Finitely supported combination of dual-basis functionals.
    static Cochain finite(int degree, std::map<Monomial, QScalar> values);
    static Cochain dual(const Monomial& m);
    // eps (x) ... (x) eps, degree+1 factors; a cyclic cocycle.
    static Cochain counit_power(int degree);

    int degree() const { return degree_; }
    QScalar operator()(const Monomial& m) const;
    // Value on x_0 (x) ... (x) x_k, expanded term by term.
    QScalar operator()(const std::vector<CoordElement>& xs) const;

private:
    int degree_ = 0;
    Fn f_;
};

// (b c)(a_0..a_k+1) = sum_i (-1)^i c(.., a_i a_i+1, ..) + (-1)^(k+1) c(a_k+1 a_0, a_1, .., a_k)
Cochain hochschild_b(const Cochain& c, const CoordAlgebra& alg);
// (lambda c)(a_0..a_k) = (-1)^k c(a_k, a_0, .., a_k-1)
Cochain cyclic_lambda(const Cochain& c);

// Throws std::invalid_argument on a degree mismatch.
QScalar pair_chain(const Cochain& c, const Chain& x);

// gamma gamma' = p', gamma' gamma = p and both invariant (entry charges
// c'_i - c_j and c_i - c'_j).
Report check_equivalence(const EquivariantProjector& p, const EquivariantProjector& p2,
                         const std::vector<std::vector<CoordElement>>& gamma,
                         const std::vector<std::vector<CoordElement>>& gamma2);

// The teardrop-style report: projector identities, ch_0 and ch_2 membership
// in the complex, and the isotropy witness.
Report chern_report(const EquivariantProjector& p, const std::vector<int>& degrees);

}  // namespace qorb
