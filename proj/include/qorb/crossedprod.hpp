#pragma once

#include <map>
#include <string>
#include <vector>

#include "qorb/orbifold.hpp"

namespace qorb {

// Residues of a finite group element, one per factor, reduced mod the order.
using Residues = std::vector<long>;

// Finite sum of sigma . t, t in C[G_q].
struct CrossedElement {
    std::map<Residues, CoordElement> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Residues& g, const CoordElement& t);
    CrossedElement& operator+=(const CrossedElement& o);
    CrossedElement& operator-=(const CrossedElement& o);
    CrossedElement& operator*=(const QScalar& c);
    friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
    friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
    friend bool operator==(const CrossedElement& a, const CrossedElement& b) { return (a - b).is_zero(); }
    std::string to_string() const;
};

std::string residues_str(const Residues& g);

// Truncated matrix of varpi(A) on the coefficients with labels <= cutoff.
struct VarpiMatrix {
    std::vector<MatrixCoeff> basis;
    Matrix m;
    std::vector<bool> overflow;
};

class CrossedProduct {
public:
    // Throws std::invalid_argument unless the group is finite.
    CrossedProduct(const ActionSpec& a, int cutoff = 4);

    const ActionSpec& action() const { return a_; }
    const CoordAlgebra& algebra() const { return alg_; }
    std::vector<Residues> group() const { return group_residues(a_.group); }

    Residues identity() const;
    Residues inverse(const Residues& g) const;
    Residues compose(const Residues& g, const Residues& h) const;

    CrossedElement unit() const;
    CrossedElement element(const Residues& g, const CoordElement& t) const;
    CrossedElement group_element(const Residues& g) const { return element(g, alg_.unit()); }
    CrossedElement embed(const CoordElement& t) const { return element(identity(), t); }

    CoordElement act(const Residues& g, const CoordElement& t) const;

    // (s1 . t1)(s2 . t2) = s1 s2 . t1 (s1 |> t2)
    CrossedElement multiply(const CrossedElement& a, const CrossedElement& b) const;
    // (s . t)* = s^-1 . (s^-1 |> t*)
    CrossedElement star(const CrossedElement& a) const;

    // varpi(s . t) psi = pi(t)(s |> psi)
    VarpiMatrix varpi(const CrossedElement& a, int cutoff) const;

private:
    Residues checked(const Residues& g) const;

    ActionSpec a_;
    CoordAlgebra alg_;
};

// (a) No non-identity element fixes every fundamental coefficient.
// (b) The matrices varpi(s . t) over all s and basis t with labels <= cutoff,
//     truncated to labels <= space_cutoff, are linearly independent.
// space_cutoff < 0 means 2 * cutoff, where no product overflows.
Report check_effective_faithful(const ActionSpec& a, int cutoff = 1, int space_cutoff = -1);

}  // namespace qorb
