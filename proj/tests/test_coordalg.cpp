#include <gtest/gtest.h>

#include <random>

#include "qorb/coordalg.hpp"

using namespace qorb;

namespace {

const QScalar q = QScalar::s_pow(2);

CoordElement t3(int i, int j) { return CoordAlgebra::su3().coeff({1, 0}, i - 1, j - 1); }
CoordElement tv(int i, int j) { return CoordAlgebra::su3().coeff({0, 1}, i - 1, j - 1); }

std::vector<UqWord> all_words(int rank, int max_len) {
    std::vector<UqWord> letters;
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < 4; ++k) letters.push_back({{{k, i}}});
    std::vector<UqWord> out{UqWord{}}, layer{UqWord{}};
    for (int n = 0; n < max_len; ++n) {
        std::vector<UqWord> next;
        for (const auto& w : layer)
            for (const auto& l : letters) next.push_back(w * l);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST(Generators, Names) {
    auto su2 = CoordAlgebra::su2().generators();
    ASSERT_EQ(su2.size(), 2u);
    EXPECT_EQ(su2[0].first, "alpha");
    EXPECT_EQ(su2[1].second, CoordElement(MatrixCoeff{{1}, 0, 1}));
    auto su3 = CoordAlgebra::su3().generators();
    ASSERT_EQ(su3.size(), 9u);
    EXPECT_EQ(su3[5].first, "t23");
    EXPECT_EQ(su3[5].second, t3(2, 3));
    EXPECT_EQ(CoordAlgebra::su3().unit(), CoordElement(MatrixCoeff{{0, 0}, 0, 0}));
}

TEST(Multiply, UnitIsNeutral) {
    CoordAlgebra a = CoordAlgebra::su3();
    CoordElement x = t3(1, 2) * QScalar(3) + t3(2, 2);
    EXPECT_EQ(a.multiply(a.unit(), x), x);
    EXPECT_EQ(a.multiply(x, a.unit()), x);
}

TEST(Multiply, T11T12IsOneLambda2Coefficient) {
    CoordElement p = CoordAlgebra::su3().multiply(t3(1, 1), t3(1, 2));
    ASSERT_EQ(p.terms.size(), 1u);
    const auto& [c, v] = *p.terms.begin();
    EXPECT_EQ(c, (MatrixCoeff{{2, 0}, 0, 1}));
    // E(11 -> 1) = 1, E(12 -> 2) = sqrt(1/(q[2]))
    EXPECT_EQ(v, (q * q_int(2)).inv().sqrt());
}

TEST(Multiply, Associative) {
    std::mt19937 rng(7);
    for (int g = 0; g < 2; ++g) {
        CoordAlgebra alg = g == 0 ? CoordAlgebra::su2(6) : CoordAlgebra::su3(4);
        auto gens = alg.fundamental_coeffs();
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::uniform_int_distribution<int> len(1, 2);
        const int triples = g == 0 ? 120 : 80;
        for (int n = 0; n < triples; ++n) {
            CoordElement x[3];
            int total = 0;
            for (auto& e : x) {
                int l = total >= 2 ? 1 : len(rng);
                total += l;
                e = gens[pick(rng)];
                if (l == 2) e = alg.multiply(e, gens[pick(rng)]);
            }
            EXPECT_EQ(alg.multiply(alg.multiply(x[0], x[1]), x[2]), alg.multiply(x[0], alg.multiply(x[1], x[2])))
                << x[0].to_string() << " | " << x[1].to_string() << " | " << x[2].to_string();
        }
    }
}

TEST(Multiply, CutoffIsLoud) {
    CoordAlgebra a = CoordAlgebra::su2(1);
    auto g = a.generators();
    EXPECT_THROW(a.multiply(g[0].second, g[1].second), CutoffExceeded);
    EXPECT_THROW(a.coeff({2}, 0, 0), CutoffExceeded);
}

TEST(Pair, Examples) {
    CoordAlgebra a = CoordAlgebra::su3();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(a.pair(t3(i, j), UqWord{}), QScalar(i == j ? 1 : 0));
    EXPECT_EQ(a.pair(t3(1, 1), UqWord::k(0)), QScalar::s_pow(1));
    CoordAlgebra b = CoordAlgebra::su2();
    EXPECT_TRUE(b.pair(b.generators()[0].second, UqWord::f(0)).is_zero());
    EXPECT_EQ(b.pair(b.generators()[1].second, UqWord::e(0)), QScalar(1));
}

TEST(Pair, ProductCompatibility) {
    for (int g = 0; g < 2; ++g) {
        CoordAlgebra alg = g == 0 ? CoordAlgebra::su2() : CoordAlgebra::su3();
        auto gens = alg.fundamental_coeffs();
        auto words = all_words(alg.root_datum().rank, g == 0 ? 3 : 2);
        for (std::size_t i = 0; i < gens.size(); i += (g == 0 ? 1 : 2))
            for (std::size_t j = 0; j < gens.size(); j += (g == 0 ? 1 : 3)) {
                CoordElement ab = alg.multiply(gens[i], gens[j]);
                for (const auto& x : words) {
                    QScalar rhs;
                    for (const auto& [x1, x2, c] : coproduct(x)) rhs += c * alg.pair(gens[i], x1) * alg.pair(gens[j], x2);
                    EXPECT_EQ(alg.pair(ab, x), rhs) << x.to_string();
                }
            }
    }
}

TEST(Coproduct, Examples) {
    CoordAlgebra a = CoordAlgebra::su2();
    CoordTensor d = a.coproduct(a.generators()[0].second);
    CoordTensor want{{{MatrixCoeff{{1}, 0, 0}, MatrixCoeff{{1}, 0, 0}}, QScalar(1)},
                     {{MatrixCoeff{{1}, 0, 1}, MatrixCoeff{{1}, 1, 0}}, QScalar(1)}};
    EXPECT_EQ(d, want);
    CoordTensor du = a.coproduct(a.unit());
    ASSERT_EQ(du.size(), 1u);
    EXPECT_EQ(du.begin()->first.first, a.unit().terms.begin()->first);
    CoordAlgebra b = CoordAlgebra::su3();
    EXPECT_TRUE(b.counit(t3(1, 2)).is_zero());
    EXPECT_EQ(b.counit(t3(1, 1)), QScalar(1));
}

TEST(Antipode, FundamentalTable) {
    CoordAlgebra a = CoordAlgebra::su3();
    EXPECT_EQ(a.antipode(t3(1, 1)), tv(1, 1));
    EXPECT_EQ(a.antipode(t3(1, 2)), tv(2, 1) * (-q));
    EXPECT_EQ(a.antipode(t3(2, 1)), tv(1, 2) * (-q.inv()));
    EXPECT_EQ(a.antipode(t3(2, 2)), tv(2, 2));
    EXPECT_EQ(a.antipode(t3(2, 3)), tv(3, 2) * (-q));
    EXPECT_EQ(a.antipode(t3(3, 2)), tv(2, 3) * (-q.inv()));
    EXPECT_EQ(a.antipode(t3(3, 3)), tv(3, 3));
    EXPECT_EQ(a.antipode(t3(1, 3)), tv(3, 1) * (q * q));
    EXPECT_EQ(a.antipode(t3(3, 1)), tv(1, 3) * (q * q).inv());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(a.star(t3(i, j)), a.antipode(t3(j, i)));
    EXPECT_EQ(a.antipode(a.unit()), a.unit());
    EXPECT_EQ(a.star(a.unit()), a.unit());
}

TEST(Antipode, DualCoefficientsAsQuadratics) {
    // t-dual_{kk'} = sum conj(E[(m,m'),k]) E[(n,n'),k'] t_mn t_m'n' with E the
    // isometric lambda1-dual block of lambda1 x lambda1.
    CoordAlgebra a = CoordAlgebra::su3();
    const RootDatum& rd = RootDatum::A2();
    for (int k = 1; k <= 3; ++k)
        for (int k2 = 1; k2 <= 3; ++k2) {
            CoordElement sum;
            for (int m = 1; m <= 3; ++m)
                for (int m2 = 1; m2 <= 3; ++m2) {
                    QScalar x = clebsch_gordan(rd, {1, 0}, {1, 0}, {0, 1}, m, m2, k);
                    if (x.is_zero()) continue;
                    for (int n = 1; n <= 3; ++n)
                        for (int n2 = 1; n2 <= 3; ++n2) {
                            QScalar y = clebsch_gordan(rd, {1, 0}, {1, 0}, {0, 1}, n, n2, k2);
                            if (y.is_zero()) continue;
                            sum += a.multiply(t3(m, n), t3(m2, n2)) * (x.conj() * y);
                        }
                }
            EXPECT_EQ(sum, tv(k, k2)) << k << k2;
        }
}

TEST(Star, InvolutiveAntiMultiplicative) {
    CoordAlgebra a = CoordAlgebra::su3();
    CoordElement x = t3(1, 2) * QScalar::zeta(1, 3) + t3(3, 1) * q_int(2).sqrt();
    EXPECT_EQ(a.star(a.star(x)), x);
    CoordElement y = t3(2, 3);
    EXPECT_EQ(a.star(a.multiply(x, y)), a.multiply(a.star(y), a.star(x)));
    // conjugate-linear
    EXPECT_EQ(a.star(t3(1, 1) * QScalar::zeta(1, 3)), a.star(t3(1, 1)) * QScalar::zeta(2, 3));
}

TEST(Actions, Examples) {
    CoordAlgebra a = CoordAlgebra::su3();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const Weight& mu = irrep(RootDatum::A2(), {1, 0}).weights[i - 1];
            const Weight& nu = irrep(RootDatum::A2(), {1, 0}).weights[j - 1];
            for (int h = 0; h < 2; ++h) {
                EXPECT_EQ(a.right_action(UqWord::k(h), t3(i, j)), t3(i, j) * QScalar::s_pow(nu[h]));
                EXPECT_EQ(a.left_action(UqWord::k(h), t3(i, j)), t3(i, j) * QScalar::s_pow(mu[h]));
            }
            EXPECT_EQ(a.right_action(UqWord{}, t3(i, j)), t3(i, j));
            EXPECT_EQ(a.left_action(UqWord{}, t3(i, j)), t3(i, j));
        }
    EXPECT_EQ(a.right_action(UqWord::e(0), t3(1, 2)), t3(1, 1));
}

TEST(Audit, SelectsFrozenPlacement) {
    PlacementAudit au = audit_placement();
    EXPECT_EQ(au.selected, Placement::Direct);
    EXPECT_TRUE(au.frozen_agrees);
    EXPECT_TRUE(au.report.all_pass());
    EXPECT_FALSE(au.t11t12_direct == au.t11t12_opposite);
}

TEST(Su2Relations, FromContraction) {
    Report r = verify_su2_relations();
    EXPECT_EQ(r.checks.size(), 5u);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

// The relation lists of the two groups use opposite q conventions; this pins
// which parts hold under each placement.
TEST(Su3Relations, OutcomeByPlacement) {
    Report d = verify_su3_relations(Placement::Direct);
    ASSERT_EQ(d.checks.size(), 5u);
    std::vector<bool> want_d{false, false, true, false, true};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(d.checks[i].pass, want_d[i]) << d.checks[i].name;
    Report o = verify_su3_relations(Placement::Opposite);
    std::vector<bool> want_o{true, true, true, true, false};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(o.checks[i].pass, want_o[i]) << o.checks[i].name;
}

TEST(Hopf, Suites) {
    for (const RootDatum* rd : {&RootDatum::A1(), &RootDatum::A2()}) {
        Report r = verify_hopf(*rd, 2);
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << ": " << c.name << " " << c.detail;
    }
    Report one = verify_hopf(RootDatum::A1(), 1);
    EXPECT_TRUE(one.all_pass());
}

TEST(Gns, Matrices) {
    const RootDatum& rd = RootDatum::A1();
    CoordAlgebra a = CoordAlgebra::su2();
    auto g = a.generators();
    const CoordElement& al = g[0].second;
    const CoordElement& be = g[1].second;
    const int cut = 3;
    GnsMatrix pu = gns_matrix(rd, a.unit(), cut);
    EXPECT_EQ(pu.m, Matrix::identity(pu.basis.size()));
    GnsMatrix pa = gns_matrix(rd, al, cut), pb = gns_matrix(rd, be, cut);
    ASSERT_EQ(pa.basis[0], a.unit().terms.begin()->first);
    for (std::size_t i = 0; i < pa.basis.size(); ++i)
        EXPECT_EQ(pa.m(i, 0), QScalar(pa.basis[i] == MatrixCoeff{{1}, 0, 0} ? 1 : 0));
    Matrix comm = pb.m * pa.m - pa.m * pb.m * q;
    std::size_t clean = 0;
    for (std::size_t j = 0; j < pa.basis.size(); ++j) {
        if (pa.overflow[j] || pb.overflow[j]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pa.basis.size(); ++i)
            if ((!pa.m(i, j).is_zero() && pb.overflow[i]) || (!pb.m(i, j).is_zero() && pa.overflow[i])) ok = false;
        if (!ok) continue;
        ++clean;
        for (std::size_t i = 0; i < pa.basis.size(); ++i) EXPECT_TRUE(comm(i, j).is_zero());
    }
    EXPECT_GT(clean, 0u);
    std::size_t over = 0;
    for (bool b : pa.overflow) over += b;
    EXPECT_EQ(over, 16u);  // the j = 3/2 block
}
