#pragma once

#include <string>
#include <vector>

#include "qorb/matrix.hpp"
#include "qorb/report.hpp"

namespace qorb {

// Cartan data for the simply laced types used here.
struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<std::vector<int>> a;  // a[i][j] = alpha_j(h_i)
    std::vector<int> d;

    static const RootDatum& A1();
    static const RootDatum& A2();
    static const RootDatum& by_name(const std::string& name);
    // (alpha_i, alpha_j) = d_i a_ij
    int form(int i, int j) const { return d[i] * a[i][j]; }
    bool operator==(const RootDatum& o) const { return name == o.name; }
};

// Coordinates (lambda(h_1), ..., lambda(h_n)).
using Weight = std::vector<int>;

bool is_dominant(const Weight& w);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
std::string weight_str(const Weight& w);

// Finite-dimensional admissible module given by generator matrices on a
// weight basis. k_i acts by s^(d_i mu(h_i)) on a weight-mu vector.
struct Rep {
    const RootDatum* rd = nullptr;
    std::string name;
    std::vector<Weight> weights;
    std::vector<Matrix> e, f;

    std::size_t dim() const { return weights.size(); }
    int rank() const { return rd->rank; }
    Matrix k(int i) const;
    Matrix kinv(int i) const;
    // Uniform accessor: gen 0 = e, 1 = f, 2 = k, 3 = k^{-1}.
    Matrix generator(int kind, int i) const;
};

// su2:j (j = 0, 1/2, 1, 3/2, ...), su3:λ1, su3:λ1v, su3:λ2 (ASCII aliases
// su3:l1, su3:l1v, su3:l2), trivial, trivial:su2, trivial:su3.
Rep builtin_rep(const std::string& name);
// Standard spin-j module, basis m = j, j-1, ..., -j where twice_j = 2j.
Rep su2_rep(int twice_j);
Rep trivial_rep(const RootDatum& rd);

// Exact check of the defining relations, one report entry per relation.
Report verify_defining_relations(const Rep& r);
// matrix(e_i)^dagger == matrix(f_i) for all i.
bool is_star_rep(const Rep& r);

Rep tensor(const Rep& a, const Rep& b);
// rho*(x) = rho(S x)^T, weights negated.
Rep dual(const Rep& r);

struct HighestWeightVector {
    Weight weight;
    std::vector<QScalar> v;
};

// Basis of the joint kernel of the e_i, per weight space, weights in basis
// order. Within a weight space the vectors are mutually orthogonal and each
// has its first nonzero coordinate positive at the branch point.
std::vector<HighestWeightVector> highest_weight_vectors(const Rep& r);

// Vectors of a weight space of r indexed by basis position.
std::vector<std::size_t> weight_space(const Rep& r, const Weight& w);

}  // namespace qorb
