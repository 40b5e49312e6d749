#pragma once

#include <string>
#include <vector>

#include "qorb/rep.hpp"

namespace qorb {

// Canonical irreducible module of highest weight lambda. For A1 every spin
// and for A2 the weights (0,0), (1,0), (0,1), (2,0) are the builtins; the
// remaining A2 modules are cut out of M_(a-1,b) x M_(1,0) (a >= 1) or
// M_(0,b-1) x M_(0,1) with an orthonormal basis ordered by descending
// weight, then by generation order under the f_i.
const Rep& irrep(const RootDatum& rd, const Weight& lambda);
Rep build_irrep(const RootDatum& rd, const Weight& lambda);

// Highest weight of the dual module.
Weight dual_weight(const RootDatum& rd, const Weight& lambda);
// Index of the highest weight vector in irrep(rd, lambda).
std::size_t highest_index(const Rep& r, const Weight& lambda);

// Unnormalized intertwiner M_kappa -> V sending the canonical highest
// weight vector to a highest weight vector w0 of V. For *-modules
// E0^dagger E0 = norm * 1 with norm = <w0, w0>.
struct IntertwinerBlock {
    Weight kappa;
    Matrix e0;
    QScalar norm;
};

// One block per highest weight vector of v (v must be a *-module).
std::vector<IntertwinerBlock> intertwiners(const Rep& v);
// Intertwiner M_kappa -> v determined by the image w0 of the highest vector.
Matrix intertwiner_from(const Rep& v, const Weight& kappa, const std::vector<QScalar>& w0);

// Isometric Clebsch-Gordan embedding M_kappa -> V.
struct CGEmbedding {
    Weight kappa;
    Matrix e;
};

// Throws std::domain_error when a block norm has no single-term square root.
std::vector<CGEmbedding> decompose(const Rep& v);

// Memoized blocks of irrep(lambda) x irrep(lambda2).
const std::vector<IntertwinerBlock>& pair_blocks(const RootDatum& rd, const Weight& lambda, const Weight& lambda2);

// Entry <v_m x v_m', E u_k> of the isometric embedding, with 1-based labels
// in the canonical bases. `copy` selects among repeated summands.
QScalar clebsch_gordan(const RootDatum& rd, const Weight& lambda, const Weight& lambda2, const Weight& kappa, int m,
                       int m2, int k, int copy = 0);

}  // namespace qorb
