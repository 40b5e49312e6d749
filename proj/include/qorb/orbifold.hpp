#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qorb/coordalg.hpp"

namespace qorb {

// order == 0 is a circle, otherwise the cyclic group of that order.
struct CircleFactor {
    int order = 0;
    bool continuous() const { return order == 0; }
};

struct GroupSpec {
    std::vector<CircleFactor> factors;
    bool finite() const;
    // Number of elements; only for finite groups.
    long size() const;
};

using RVec = std::vector<mpq_class>;

// sigma = e^{i phi} on one factor maps to [e^{i phi y1.h}, e^{i phi y2.h}].
struct FactorAction {
    RVec y1, y2;
};

struct ActionSpec {
    const RootDatum* rd = nullptr;
    std::string name;
    GroupSpec group;
    std::vector<FactorAction> y;  // one per group factor
};

// One rational charge per group factor.
using Charge = std::vector<mpq_class>;

std::string charge_str(const Charge& c);

// mu(y1) + nu(y2) per factor, with mu, nu the weights of the row and column
// basis vectors.
Charge charge_of(const ActionSpec& a, const MatrixCoeff& t);
// Charge of every term, or nullopt if x is not homogeneous.
std::optional<Charge> charge_of(const ActionSpec& a, const CoordElement& x);

// Group element: per factor the angle as a rational multiple of 2 pi (for a
// cyclic factor of order p, the residue j stands for j/p).
struct GroupElement {
    RVec turns;
};
GroupElement element_from_residues(const GroupSpec& g, const std::vector<long>& residues);
// Every element of a finite group, residues in lexicographic order.
std::vector<std::vector<long>> group_residues(const GroupSpec& g);

// sigma |> x: each coefficient scaled by exp(2 pi i sum_f turns_f c_f).
CoordElement act(const ActionSpec& a, const GroupElement& g, const CoordElement& x);
QScalar phase(const ActionSpec& a, const GroupElement& g, const MatrixCoeff& t);

struct Validation {
    bool valid = false;
    std::string certificate;
    std::optional<MatrixCoeff> witness;
    int factor = -1;
    mpq_class charge;
};

// Periodicity modulo the centre: every charge of a fundamental module must
// be an integer. On failure the certificate names the first offending
// coefficient.
Validation validate_action(const RootDatum& rd, const std::vector<FactorAction>& y, const GroupSpec& group);
Validation validate_action(const ActionSpec& a);

// Closed-form family: y1 = (k11 + x/3, k12 + 2x/3), y2 = (k21 + 2x/3, k22 + x/3).
FactorAction su3_family(int x, int k11, int k12, int k21, int k22);
// Members with x in xs and all k in [-kbox, kbox], on a single factor.
std::vector<ActionSpec> enumerate_su3_actions(const std::vector<int>& xs, int kbox, int order = 0);
// The x for which y is a family member (any integer k), if any.
std::optional<int> su3_family_x(const FactorAction& y);

// Brute-force comparison of validate_action with the family over the grid
// (1/den Z)^4 covering the k-box.
struct FamilyScan {
    long grid_points = 0, brute_valid = 0, family_members = 0;
    long false_accepts = 0, false_rejects = 0;
    long box_members = 0, box_members_valid = 0;
};
FamilyScan scan_su3_family(int kbox, int den = 6);

// Central elements of the maximal torus as y-vectors: e^{2 pi i z.h}.
std::vector<RVec> central_elements(const RootDatum& rd);

// weighted:k,l  sphere  teardrop:k,l  lens:l,p  su3-adjoint  trivial:su2
// trivial:su3  su3-family:x,k11,k12,k21,k22; any of them may end in :p=P to
// restrict every circle factor to Z_P.
ActionSpec action_preset(const std::string& name);
std::vector<std::string> action_preset_names();

// Charge fixed by the whole group: 0 on circles, divisible by p on Z_p.
bool is_invariant_charge(const GroupSpec& g, const Charge& c);
// Basis coefficients with labels <= cutoff fixed by the whole group.
bool is_invariant(const ActionSpec& a, const MatrixCoeff& t);
std::vector<MatrixCoeff> invariant_basis(const ActionSpec& a, int cutoff);

}  // namespace qorb
