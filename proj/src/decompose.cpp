#include "qorb/decompose.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qorb/cache.hpp"

namespace qorb {

Weight dual_weight(const RootDatum& rd, const Weight& lambda) {
    if (rd.rank == 2) return {lambda[1], lambda[0]};
    return lambda;
}

std::size_t highest_index(const Rep& r, const Weight& lambda) {
    for (std::size_t i = 0; i < r.dim(); ++i)
        if (r.weights[i] == lambda) return i;
    throw std::invalid_argument("highest_index: weight " + weight_str(lambda) + " not in " + r.name);
}

namespace {

std::vector<QScalar> restrict_to(const std::vector<QScalar>& v, const std::vector<std::size_t>& idx) {
    std::vector<QScalar> r(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r[i] = v[idx[i]];
    return r;
}

bool is_zero_vec(const std::vector<QScalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Vectors generated from a highest weight vector by f-words, level by level
// with i ascending, keeping those independent of the earlier ones in their
// weight space. `partner` is carried along through the same words.
struct Generated {
    Weight weight;
    std::vector<QScalar> v;
    std::vector<QScalar> partner;
};

std::vector<Generated> generate(const Rep& r, const std::vector<QScalar>& hw, const Weight& top, const Rep* pr,
                                const std::vector<QScalar>* phw) {
    std::vector<Generated> accepted;
    std::map<Weight, std::vector<std::vector<QScalar>>> per_weight;
    std::vector<Generated> frontier;
    accepted.push_back({top, hw, phw ? *phw : std::vector<QScalar>{}});
    per_weight[top].push_back(restrict_to(hw, weight_space(r, top)));
    frontier.push_back(accepted.back());
    while (!frontier.empty()) {
        std::vector<Generated> next;
        for (const auto& g : frontier) {
            for (int i = 0; i < r.rank(); ++i) {
                std::vector<QScalar> v = r.f[i].apply(g.v);
                if (is_zero_vec(v)) continue;
                Weight w = g.weight;
                for (int j = 0; j < r.rank(); ++j) w[j] -= r.rd->a[i][j];
                std::vector<std::size_t> idx = weight_space(r, w);
                auto& list = per_weight[w];
                if (list.size() == idx.size()) continue;
                std::vector<QScalar> rv = restrict_to(v, idx);
                Matrix m(idx.size(), list.size() + 1);
                for (std::size_t c = 0; c < list.size(); ++c)
                    for (std::size_t p = 0; p < idx.size(); ++p) m(p, c) = list[c][p];
                for (std::size_t p = 0; p < idx.size(); ++p) m(p, list.size()) = rv[p];
                if (rank(m) != list.size() + 1) continue;
                list.push_back(rv);
                Generated ng{w, v, {}};
                if (pr) ng.partner = pr->f[i].apply(g.partner);
                accepted.push_back(ng);
                next.push_back(std::move(ng));
            }
        }
        frontier = std::move(next);
    }
    return accepted;
}

bool weight_before(const Weight& a, const Weight& b) { return a > b; }

// Gram-Schmidt of the candidates in the given order; false if a norm has no
// exact square root.
bool orthonormalize(std::vector<std::vector<QScalar>>& cand) {
    std::vector<std::vector<QScalar>> out;
    for (auto v : cand) {
        for (const auto& u : out) {
            QScalar c = inner(u, v);
            if (c.is_zero()) continue;
            for (std::size_t t = 0; t < v.size(); ++t)
                if (!u[t].is_zero()) v[t] -= c * u[t];
        }
        QScalar n = inner(v, v);
        QScalar r;
        try {
            r = n.sqrt();
        } catch (const std::domain_error&) {
            return false;
        }
        QScalar ri = r.inv();
        for (auto& x : v)
            if (!x.is_zero()) x *= ri;
        out.push_back(std::move(v));
    }
    cand = std::move(out);
    return true;
}

struct IrrepCache {
    std::recursive_mutex mu;
    std::map<std::pair<std::string, Weight>, std::unique_ptr<Rep>> reps;
    std::map<std::tuple<std::string, Weight, Weight>, std::unique_ptr<std::vector<IntertwinerBlock>>> pairs;
};

IrrepCache& cache() {
    static IrrepCache c;
    return c;
}

}  // namespace

Rep build_irrep(const RootDatum& rd, const Weight& lambda) {
    if (!is_dominant(lambda) || static_cast<int>(lambda.size()) != rd.rank)
        throw std::invalid_argument("irrep: weight " + weight_str(lambda) + " is not dominant");
    if (rd.rank == 1) return su2_rep(lambda[0]);
    const int a = lambda[0], b = lambda[1];
    if (a == 0 && b == 0) return trivial_rep(rd);
    if (a == 1 && b == 0) return builtin_rep("su3:λ1");
    if (a == 0 && b == 1) return builtin_rep("su3:λ1v");
    if (a == 2 && b == 0) return builtin_rep("su3:λ2");
    Rep t = a >= 1 ? tensor(irrep(rd, {a - 1, b}), irrep(rd, {1, 0})) : tensor(irrep(rd, {0, b - 1}), irrep(rd, {0, 1}));
    std::vector<std::size_t> top = weight_space(t, lambda);
    if (top.size() != 1) throw std::logic_error("build_irrep: top weight space is not one-dimensional");
    std::vector<QScalar> hw(t.dim());
    hw[top[0]] = QScalar(1);
    std::vector<Generated> gen = generate(t, hw, lambda, nullptr, nullptr);
    std::stable_sort(gen.begin(), gen.end(),
                     [](const Generated& x, const Generated& y) { return weight_before(x.weight, y.weight); });
    std::vector<Weight> weights;
    std::vector<std::vector<QScalar>> basis;
    for (std::size_t s = 0; s < gen.size();) {
        std::size_t e = s;
        while (e < gen.size() && gen[e].weight == gen[s].weight) ++e;
        std::vector<std::size_t> perm(e - s);
        std::iota(perm.begin(), perm.end(), 0);
        bool ok = false;
        std::vector<std::vector<QScalar>> cand;
        do {
            cand.clear();
            for (auto p : perm) cand.push_back(gen[s + p].v);
            ok = orthonormalize(cand);
        } while (!ok && std::next_permutation(perm.begin(), perm.end()));
        if (!ok)
            throw std::domain_error("build_irrep: no basis ordering of weight space " + weight_str(gen[s].weight) +
                                    " admits exact normalization");
        for (auto& v : cand) {
            weights.push_back(gen[s].weight);
            basis.push_back(std::move(v));
        }
        s = e;
    }
    Matrix bm(t.dim(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) bm.set_column(c, basis[c]);
    Matrix bd = bm.adjoint();
    Rep r;
    r.rd = &rd;
    r.name = (rd.rank == 2 ? "su3:" : "su2:") + weight_str(lambda);
    r.weights = weights;
    for (int i = 0; i < rd.rank; ++i) {
        r.e.push_back(bd * (t.e[i] * bm));
        r.f.push_back(bd * (t.f[i] * bm));
    }
    return r;
}

const Rep& irrep(const RootDatum& rd, const Weight& lambda) {
    IrrepCache& c = cache();
    std::lock_guard<std::recursive_mutex> lock(c.mu);
    auto key = std::make_pair(rd.name, lambda);
    auto it = c.reps.find(key);
    if (it != c.reps.end()) return *it->second;
    std::string file = "irrep_" + rd.name + "_" + weight_str(lambda) + ".json";
    Rep r;
    if (!load_cached_rep(file, r)) {
        r = build_irrep(rd, lambda);
        store_cached_rep(file, r);
    }
    r.rd = &rd;
    return *c.reps.emplace(key, std::make_unique<Rep>(std::move(r))).first->second;
}

Matrix intertwiner_from(const Rep& v, const Weight& kappa, const std::vector<QScalar>& w0) {
    const Rep& m = irrep(*v.rd, kappa);
    std::size_t h = highest_index(m, kappa);
    std::vector<QScalar> u(m.dim());
    u[h] = QScalar(1);
    std::vector<Generated> gen = generate(m, u, kappa, &v, &w0);
    if (gen.size() != m.dim()) throw std::logic_error("intertwiner_from: f-words do not span the module");
    Matrix a(m.dim(), m.dim()), b(v.dim(), m.dim());
    for (std::size_t c = 0; c < gen.size(); ++c) {
        a.set_column(c, gen[c].v);
        b.set_column(c, gen[c].partner);
    }
    // E0 A = B; A^T E0^T = B^T
    return solve(a.transpose(), b.transpose()).transpose();
}

std::vector<IntertwinerBlock> intertwiners(const Rep& v) {
    std::vector<IntertwinerBlock> out;
    for (auto& hw : highest_weight_vectors(v)) {
        IntertwinerBlock blk;
        blk.kappa = hw.weight;
        blk.e0 = intertwiner_from(v, hw.weight, hw.v);
        blk.norm = inner(hw.v, hw.v);
        out.push_back(std::move(blk));
    }
    return out;
}

std::vector<CGEmbedding> decompose(const Rep& v) {
    std::vector<CGEmbedding> out;
    for (auto& blk : intertwiners(v)) {
        QScalar r = blk.norm.sqrt().inv();
        out.push_back({blk.kappa, blk.e0 * r});
    }
    return out;
}

const std::vector<IntertwinerBlock>& pair_blocks(const RootDatum& rd, const Weight& lambda, const Weight& lambda2) {
    IrrepCache& c = cache();
    std::lock_guard<std::recursive_mutex> lock(c.mu);
    auto key = std::make_tuple(rd.name, lambda, lambda2);
    auto it = c.pairs.find(key);
    if (it != c.pairs.end()) return *it->second;
    std::string file = "pair_" + rd.name + "_" + weight_str(lambda) + "_" + weight_str(lambda2) + ".json";
    auto blocks = std::make_unique<std::vector<IntertwinerBlock>>();
    if (!load_cached_blocks(file, *blocks)) {
        *blocks = intertwiners(tensor(irrep(rd, lambda), irrep(rd, lambda2)));
        store_cached_blocks(file, *blocks);
    }
    return *c.pairs.emplace(key, std::move(blocks)).first->second;
}

QScalar clebsch_gordan(const RootDatum& rd, const Weight& lambda, const Weight& lambda2, const Weight& kappa, int m,
                       int m2, int k, int copy) {
    const auto& blocks = pair_blocks(rd, lambda, lambda2);
    const std::size_t d2 = irrep(rd, lambda2).dim();
    int seen = 0;
    for (const auto& b : blocks) {
        if (b.kappa != kappa) continue;
        if (seen++ != copy) continue;
        std::size_t row = static_cast<std::size_t>(m - 1) * d2 + static_cast<std::size_t>(m2 - 1);
        if (m < 1 || m2 < 1 || k < 1 || row >= b.e0.rows() || static_cast<std::size_t>(k - 1) >= b.e0.cols())
            throw std::out_of_range("clebsch_gordan: label out of range");
        const QScalar& x = b.e0(row, static_cast<std::size_t>(k - 1));
        if (x.is_zero()) return {};
        return x * b.norm.sqrt().inv();
    }
    throw std::invalid_argument("clebsch_gordan: " + weight_str(kappa) + " is not a summand");
}

}  // namespace qorb
