#include <gtest/gtest.h>

#include <map>

#include "qorb/decompose.hpp"
#include "qorb/json_io.hpp"
#include "qorb/rep.hpp"

using namespace qorb;

namespace {

std::map<Weight, int> multiplicities(const Rep& r) {
    std::map<Weight, int> m;
    for (const auto& w : r.weights) ++m[w];
    return m;
}

void expect_relations(const Rep& r) {
    Report rep = verify_defining_relations(r);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << r.name << ": " << c.name;
}

bool intertwines(const Rep& target, const Rep& source, const Matrix& e) {
    for (int i = 0; i < target.rank(); ++i)
        for (int kind = 0; kind < 4; ++kind)
            if (!(target.generator(kind, i) * e == e * source.generator(kind, i))) return false;
    return true;
}

QScalar sqrt_q_over_2() { return (QScalar::s_pow(2) / q_int(2)).sqrt(); }
QScalar sqrt_1_over_q2() { return (QScalar::s_pow(2) * q_int(2)).inv().sqrt(); }

}  // namespace

TEST(Builtin, RelationsHold) {
    for (const char* n : {"su3:λ1", "su3:λ1v", "su3:λ2", "trivial", "trivial:su2", "su2:0", "su2:1/2", "su2:1",
                          "su2:3/2", "su2:2"})
        expect_relations(builtin_rep(n));
}

TEST(Builtin, Matrices) {
    Rep r = builtin_rep("su3:λ1");
    Matrix k1 = Matrix::diagonal({QScalar::s_pow(1), QScalar::s_pow(-1), QScalar(1)});
    EXPECT_EQ(r.k(0), k1);
    Rep t = builtin_rep("trivial");
    for (int i = 0; i < 2; ++i) {
        EXPECT_TRUE(t.e[i].is_zero());
        EXPECT_TRUE(t.f[i].is_zero());
        EXPECT_TRUE(t.k(i) == Matrix::identity(1));
    }
    Rep l2 = builtin_rep("su3:l2");
    QScalar r2 = q_int(2).sqrt();
    EXPECT_EQ(l2.e[0](0, 1), r2);
    EXPECT_EQ(l2.e[0](1, 2), r2);
    EXPECT_EQ(l2.e[0](3, 4), QScalar(1));
    EXPECT_EQ(l2.k(0)(0, 0), QScalar::s_pow(2));
    EXPECT_EQ(l2.k(1)(3, 3), QScalar::s_pow(-1));
}

TEST(Builtin, Names) {
    EXPECT_THROW(builtin_rep("su4:λ1"), std::invalid_argument);
    EXPECT_THROW(builtin_rep("su2:2/3"), std::invalid_argument);
    EXPECT_THROW(builtin_rep("su2:x"), std::invalid_argument);
    EXPECT_EQ(builtin_rep("su2:3/2").dim(), 4u);
    EXPECT_EQ(builtin_rep("su3:λ1∨").name, "su3:λ1v");
}

TEST(Builtin, StarProperty) {
    for (const char* n : {"su3:λ1", "su3:λ1v", "su3:λ2", "su2:1/2", "su2:2"}) EXPECT_TRUE(is_star_rep(builtin_rep(n)));
}

TEST(Relations, MutationIsCaught) {
    Rep r = builtin_rep("su3:λ1");
    r.e[0](0, 1) = QScalar(2);
    Report rep = verify_defining_relations(r);
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "[e11,f]") {
            found = true;
            EXPECT_FALSE(c.pass);
        }
    EXPECT_TRUE(found);
    EXPECT_FALSE(rep.all_pass());
}

TEST(Tensor, RelationsAndWeights) {
    Rep h = builtin_rep("su2:1/2");
    Rep hh = tensor(h, h);
    EXPECT_EQ(hh.dim(), 4u);
    std::map<Weight, int> want{{{1 * 2}, 1}, {{0}, 2}, {{-2}, 1}};
    EXPECT_EQ(multiplicities(hh), want);
    expect_relations(hh);
    EXPECT_TRUE(is_star_rep(hh));
    Rep l1 = builtin_rep("su3:λ1");
    Rep ll = tensor(l1, l1);
    EXPECT_EQ(ll.dim(), 9u);
    expect_relations(ll);
    EXPECT_TRUE(is_star_rep(ll));
    expect_relations(tensor(builtin_rep("su3:λ2"), l1));
    EXPECT_THROW(tensor(h, l1), std::invalid_argument);
}

TEST(Tensor, TrivialIsUnit) {
    Rep r = builtin_rep("su3:λ2");
    Rep t = tensor(builtin_rep("trivial"), r);
    EXPECT_EQ(t.weights, r.weights);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(t.e[i], r.e[i]);
        EXPECT_EQ(t.f[i], r.f[i]);
    }
}

TEST(Dual, Relations) {
    for (const char* n : {"su3:λ1", "su3:λ2", "su2:1", "su2:3/2", "trivial"}) {
        Rep d = dual(builtin_rep(n));
        expect_relations(d);
        EXPECT_EQ(multiplicities(dual(d)), multiplicities(builtin_rep(n)));
    }
    Rep dt = dual(builtin_rep("trivial"));
    EXPECT_EQ(dt.dim(), 1u);
    EXPECT_TRUE(dt.e[0].is_zero());
    auto hw = highest_weight_vectors(dual(builtin_rep("su3:λ1")));
    ASSERT_EQ(hw.size(), 1u);
    EXPECT_EQ(hw[0].weight, (Weight{0, 1}));
    EXPECT_EQ(dual_weight(RootDatum::A2(), {1, 0}), (Weight{0, 1}));
}

TEST(HighestWeight, Builtins) {
    auto hw = highest_weight_vectors(builtin_rep("su3:λ1"));
    ASSERT_EQ(hw.size(), 1u);
    EXPECT_EQ(hw[0].weight, (Weight{1, 0}));
    auto ht = highest_weight_vectors(builtin_rep("trivial"));
    ASSERT_EQ(ht.size(), 1u);
    EXPECT_EQ(ht[0].weight, (Weight{0, 0}));
}

TEST(HighestWeight, LambdaOneSquared) {
    Rep l1 = builtin_rep("su3:λ1");
    Rep ll = tensor(l1, l1);
    auto hw = highest_weight_vectors(ll);
    ASSERT_EQ(hw.size(), 2u);
    EXPECT_EQ(hw[0].weight, (Weight{2, 0}));
    EXPECT_EQ(hw[1].weight, (Weight{0, 1}));
    for (const auto& h : hw)
        for (int i = 0; i < 2; ++i)
            for (const auto& x : ll.e[i].apply(h.v)) EXPECT_TRUE(x.is_zero());
}

TEST(Decompose, Isometric) {
    const char* names[][2] = {{"su3:λ1", "su3:λ1"}, {"su3:λ1", "su3:λ1v"}, {"su2:1/2", "su2:1/2"},
                              {"su2:1", "su2:1/2"}, {"trivial", "trivial"}, {"su3:λ2", "su3:λ1"}};
    for (auto& p : names) {
        Rep v = tensor(builtin_rep(p[0]), builtin_rep(p[1]));
        auto emb = decompose(v);
        std::size_t total = 0;
        for (const auto& c : emb) {
            const Rep& m = irrep(*v.rd, c.kappa);
            total += m.dim();
            EXPECT_EQ(c.e.adjoint() * c.e, Matrix::identity(m.dim())) << v.name << " " << weight_str(c.kappa);
            EXPECT_TRUE(intertwines(v, m, c.e)) << v.name << " " << weight_str(c.kappa);
        }
        EXPECT_EQ(total, v.dim()) << v.name;
        std::vector<Matrix> blocks;
        for (const auto& c : emb) blocks.push_back(c.e);
        Matrix u = hstack(blocks);
        EXPECT_EQ(u.adjoint() * u, Matrix::identity(v.dim()));
    }
}

TEST(Decompose, TrivialTrivial) {
    auto emb = decompose(tensor(builtin_rep("trivial"), builtin_rep("trivial")));
    ASSERT_EQ(emb.size(), 1u);
    EXPECT_EQ(emb[0].e, Matrix::identity(1));
}

TEST(Decompose, Singlet) {
    Rep h = builtin_rep("su2:1/2");
    auto emb = decompose(tensor(h, h));
    ASSERT_EQ(emb.size(), 2u);
    EXPECT_EQ(emb[0].kappa, (Weight{2}));
    EXPECT_EQ(emb[1].kappa, (Weight{0}));
    const Matrix& s = emb[1].e;
    // basis v+v+, v+v-, v-v+, v-v-
    EXPECT_TRUE(s(0, 0).is_zero());
    EXPECT_TRUE(s(3, 0).is_zero());
    EXPECT_EQ(s(2, 0) / s(1, 0), -QScalar::s_pow(-2));
}

TEST(Decompose, IntertwinerNorm) {
    Rep ll = tensor(builtin_rep("su3:λ1"), builtin_rep("su3:λ1"));
    for (const auto& b : intertwiners(ll)) {
        const Rep& m = irrep(RootDatum::A2(), b.kappa);
        EXPECT_EQ(b.e0.adjoint() * b.e0, Matrix::identity(m.dim()) * b.norm);
        EXPECT_TRUE(intertwines(ll, m, b.e0));
    }
}

// Reference tables in the canonical bases of the builtins. The lambda1-dual
// labels of the printed table count from the highest weight vector, which is
// basis vector 3 of su3:λ1v, so the printed label k is canonical 4 - k.
TEST(CG, GoldenTables) {
    const RootDatum& a2 = RootDatum::A2();
    const Weight l1{1, 0}, l1v{0, 1}, l2{2, 0};
    const QScalar a = sqrt_q_over_2(), b = sqrt_1_over_q2(), one(1);
    struct Entry {
        Weight kappa;
        int m, m2, k;
        QScalar v;
    };
    std::vector<Entry> table = {
        {l1v, 1, 2, 3, a},   {l1v, 1, 3, 2, a},   {l1v, 2, 3, 1, a},   {l1v, 2, 1, 3, -b},
        {l1v, 3, 1, 2, -b},  {l1v, 3, 2, 1, -b},  {l2, 1, 1, 1, one},  {l2, 2, 2, 3, one},
        {l2, 3, 3, 6, one},  {l2, 2, 1, 2, a},    {l2, 3, 1, 4, a},    {l2, 3, 2, 5, a},
        {l2, 1, 2, 2, b},    {l2, 1, 3, 4, b},    {l2, 2, 3, 5, b},
    };
    const std::map<Weight, int> sign{{l1v, 1}, {l2, 1}};
    std::map<std::tuple<Weight, int, int, int>, QScalar> want;
    for (const auto& e : table) want[{e.kappa, e.m, e.m2, e.k}] = e.v * QScalar(sign.at(e.kappa));
    for (const Weight& kappa : {l1v, l2}) {
        int dk = static_cast<int>(irrep(a2, kappa).dim());
        for (int m = 1; m <= 3; ++m)
            for (int m2 = 1; m2 <= 3; ++m2)
                for (int k = 1; k <= dk; ++k) {
                    QScalar got = clebsch_gordan(a2, l1, l1, kappa, m, m2, k);
                    auto it = want.find({kappa, m, m2, k});
                    if (it == want.end())
                        EXPECT_TRUE(got.is_zero()) << weight_str(kappa) << " " << m << m2 << k;
                    else
                        EXPECT_EQ(got, it->second) << weight_str(kappa) << " " << m << m2 << k;
                }
    }
    EXPECT_THROW(clebsch_gordan(a2, l1, l1, {1, 1}, 1, 1, 1), std::invalid_argument);
}

TEST(Irrep, Generated) {
    const RootDatum& a2 = RootDatum::A2();
    for (Weight w : {Weight{1, 1}, Weight{0, 2}, Weight{2, 1}, Weight{3, 0}}) {
        const Rep& r = irrep(a2, w);
        expect_relations(r);
        EXPECT_TRUE(is_star_rep(r)) << weight_str(w);
        EXPECT_EQ(r.weights[highest_index(r, w)], w);
        for (std::size_t i = 1; i < r.dim(); ++i) EXPECT_FALSE(r.weights[i - 1] < r.weights[i]);
        auto hw = highest_weight_vectors(r);
        ASSERT_EQ(hw.size(), 1u) << weight_str(w);
    }
    EXPECT_EQ(irrep(a2, {1, 1}).dim(), 8u);
    EXPECT_EQ(irrep(a2, {0, 2}).dim(), 6u);
    EXPECT_EQ(irrep(a2, {2, 1}).dim(), 15u);
    EXPECT_EQ(irrep(a2, {3, 0}).dim(), 10u);
    EXPECT_THROW(irrep(a2, {-1, 0}), std::invalid_argument);
}

TEST(ClassicalLimit, SlRelations) {
    for (const char* n : {"su3:λ1", "su3:λ2", "su2:3/2"}) {
        Rep r = builtin_rep(n);
        for (int i = 0; i < r.rank(); ++i) {
            Matrix e(r.dim(), r.dim()), f(r.dim(), r.dim());
            for (std::size_t a = 0; a < r.dim(); ++a)
                for (std::size_t b = 0; b < r.dim(); ++b) {
                    e(a, b) = r.e[i](a, b).classical_limit();
                    f(a, b) = r.f[i](a, b).classical_limit();
                }
            Matrix c = e * f - f * e;
            for (std::size_t a = 0; a < r.dim(); ++a)
                for (std::size_t b = 0; b < r.dim(); ++b) {
                    QScalar want = a == b ? QScalar(r.weights[a][i]) : QScalar();
                    EXPECT_EQ(c(a, b), want) << n;
                }
        }
    }
}

TEST(Json, RoundTrip) {
    Rep r = irrep(RootDatum::A2(), {1, 1});
    Rep back = rep_from_json(json::parse(to_json(r).dump()));
    EXPECT_EQ(back.weights, r.weights);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(back.e[i], r.e[i]);
        EXPECT_EQ(back.f[i], r.f[i]);
    }
    QScalar z = QScalar::zeta(1, 3) * q_int(2).sqrt() + QScalar::s_pow(-3, mpq_class(2, 7));
    EXPECT_EQ(scalar_from_json(json::parse(to_json(z).dump())), z);
}
