#include <gtest/gtest.h>

#include <random>

#include "qorb/crossedprod.hpp"

using namespace qorb;

namespace {

const MatrixCoeff alpha{{1}, 0, 0}, beta{{1}, 0, 1};

CrossedProduct teardrop() { return CrossedProduct(action_preset("teardrop:1,3:p=3"), 4); }

// Sum of up to two terms sigma . c t with t a unit or fundamental coefficient.
CrossedElement random_element(const CrossedProduct& cp, std::mt19937& rng) {
    const auto group = cp.group();
    auto basis = cp.algebra().fundamental_coeffs();
    basis.push_back(cp.algebra().unit());
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1), pick_t(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3), terms(1, 2);
    CrossedElement e;
    for (int n = terms(rng); n > 0; --n) {
        int c = coef(rng);
        if (c == 0) c = 1;
        e += cp.element(group[pick_g(rng)], basis[pick_t(rng)] * QScalar(c));
    }
    return e;
}

}  // namespace

TEST(Crossed, GroupAlgebraEmbedding) {
    CrossedProduct cp = teardrop();
    for (const auto& g : cp.group())
        for (const auto& h : cp.group())
            EXPECT_TRUE(cp.multiply(cp.group_element(g), cp.group_element(h)) == cp.group_element(cp.compose(g, h)));
    EXPECT_TRUE(cp.compose({2}, {2}) == Residues({1}));
    EXPECT_TRUE(cp.inverse({1}) == Residues({2}));
}

TEST(Crossed, GroupTimesCoefficient) {
    CrossedProduct cp = teardrop();
    // alpha has charge -1, so sigma = 1 mod 3 multiplies it by zeta_3^-1.
    CrossedElement lhs = cp.multiply(cp.group_element({1}), cp.embed(CoordElement(alpha)));
    EXPECT_TRUE(lhs == cp.element({1}, CoordElement(alpha, QScalar::zeta(2, 3))));
    // beta has charge 3 and is fixed.
    EXPECT_TRUE(cp.multiply(cp.group_element({2}), cp.embed(CoordElement(beta))) ==
                cp.element({2}, CoordElement(beta)));
    // coefficient first: no phase
    EXPECT_TRUE(cp.multiply(cp.embed(CoordElement(alpha)), cp.group_element({1})) ==
                cp.element({1}, CoordElement(alpha)));
}

TEST(Crossed, UnitAndSubalgebra) {
    CrossedProduct cp = teardrop();
    std::mt19937 rng(7);
    for (int n = 0; n < 20; ++n) {
        CrossedElement a = random_element(cp, rng);
        EXPECT_TRUE(cp.multiply(cp.unit(), a) == a);
        EXPECT_TRUE(cp.multiply(a, cp.unit()) == a);
    }
    for (const auto& s : cp.algebra().fundamental_coeffs())
        for (const auto& t : cp.algebra().fundamental_coeffs())
            EXPECT_TRUE(cp.multiply(cp.embed(s), cp.embed(t)) == cp.embed(cp.algebra().multiply(s, t)));
}

TEST(Crossed, Associativity) {
    CrossedProduct cp = teardrop();
    std::mt19937 rng(11);
    for (int n = 0; n < 100; ++n) {
        CrossedElement a = random_element(cp, rng), b = random_element(cp, rng), c = random_element(cp, rng);
        EXPECT_TRUE(cp.multiply(cp.multiply(a, b), c) == cp.multiply(a, cp.multiply(b, c))) << n;
    }
}

TEST(Crossed, Star) {
    CrossedProduct cp = teardrop();
    for (const auto& t : cp.algebra().fundamental_coeffs())
        EXPECT_TRUE(cp.star(cp.embed(t)) == cp.embed(cp.algebra().star(t)));
    std::mt19937 rng(3);
    for (int n = 0; n < 40; ++n) {
        CrossedElement a = random_element(cp, rng), b = random_element(cp, rng);
        EXPECT_TRUE(cp.star(cp.star(a)) == a);
        EXPECT_TRUE(cp.star(cp.multiply(a, b)) == cp.multiply(cp.star(b), cp.star(a))) << n;
    }
}

TEST(Crossed, Covariance) {
    for (const char* p : {"teardrop:1,3:p=3", "lens:2,5", "su3-adjoint:p=2"}) {
        CrossedProduct cp(action_preset(p), 2);
        for (const auto& g : cp.group())
            for (const auto& t : cp.algebra().fundamental_coeffs()) {
                CrossedElement lhs =
                    cp.multiply(cp.multiply(cp.group_element(g), cp.embed(t)), cp.group_element(cp.inverse(g)));
                EXPECT_TRUE(lhs == cp.embed(cp.act(g, t))) << p;
            }
    }
}

TEST(Crossed, GroupMismatch) {
    CrossedProduct cp = teardrop();
    EXPECT_THROW(cp.group_element({1, 0}), std::invalid_argument);
    EXPECT_THROW(CrossedProduct(action_preset("sphere"), 2), std::invalid_argument);
    EXPECT_TRUE(cp.group_element({4}) == cp.group_element({1}));
}

TEST(Varpi, IdentityAndSlice) {
    CrossedProduct cp = teardrop();
    VarpiMatrix id = cp.varpi(cp.unit(), 2);
    EXPECT_TRUE(id.m == Matrix::identity(id.basis.size()));
    for (const auto& t : cp.algebra().fundamental_coeffs()) {
        VarpiMatrix v = cp.varpi(cp.embed(t), 2);
        GnsMatrix g = gns_matrix(RootDatum::A1(), t, 2);
        EXPECT_TRUE(v.m == g.m);
        EXPECT_EQ(v.overflow, g.overflow);
    }
}

TEST(Varpi, UnitColumn) {
    CrossedProduct cp = teardrop();
    VarpiMatrix v = cp.varpi(cp.element({1}, CoordElement(alpha)), 1);
    ASSERT_TRUE(v.basis[0] == MatrixCoeff({{0}, 0, 0}));
    for (std::size_t i = 0; i < v.basis.size(); ++i)
        EXPECT_TRUE(v.m(i, 0) == (v.basis[i] == alpha ? QScalar(1) : QScalar())) << i;
    // column at beta carries the phase of beta, which is 1; at alpha it is zeta_3^-1
    const auto& b = v.basis;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!(b[j] == alpha)) continue;
        VarpiMatrix plain = cp.varpi(cp.embed(CoordElement(alpha)), 1);
        for (std::size_t i = 0; i < b.size(); ++i) EXPECT_TRUE(v.m(i, j) == plain.m(i, j) * QScalar::zeta(2, 3));
    }
}

TEST(Varpi, Homomorphism) {
    CrossedProduct cp = teardrop();
    std::mt19937 rng(5);
    for (int n = 0; n < 15; ++n) {
        CrossedElement a = random_element(cp, rng), b = random_element(cp, rng);
        VarpiMatrix va = cp.varpi(a, 2), vb = cp.varpi(b, 2), vab = cp.varpi(cp.multiply(a, b), 2);
        Matrix prod = va.m * vb.m;
        for (std::size_t j = 0; j < vb.basis.size(); ++j) {
            if (vb.overflow[j]) continue;
            for (std::size_t i = 0; i < vb.basis.size(); ++i) EXPECT_TRUE(prod(i, j) == vab.m(i, j)) << n;
        }
    }
    // (sigma . 1)(e . t)
    for (const auto& t : cp.algebra().fundamental_coeffs()) {
        VarpiMatrix g = cp.varpi(cp.group_element({1}), 2), e = cp.varpi(cp.embed(t), 2);
        VarpiMatrix ge = cp.varpi(cp.multiply(cp.group_element({1}), cp.embed(t)), 2);
        Matrix prod = g.m * e.m;
        for (std::size_t j = 0; j < e.basis.size(); ++j) {
            if (e.overflow[j]) continue;
            for (std::size_t i = 0; i < e.basis.size(); ++i) EXPECT_TRUE(prod(i, j) == ge.m(i, j));
        }
    }
}

TEST(Effective, Examples) {
    Report triv = check_effective_faithful(action_preset("trivial:su2:p=3"), 1);
    EXPECT_FALSE(triv.checks[0].pass);
    Report td = check_effective_faithful(action_preset("teardrop:1,3:p=3"), 1);
    EXPECT_TRUE(td.checks[0].pass) << td.checks[0].detail;
    Report sp = check_effective_faithful(action_preset("sphere:p=2"), 1);
    EXPECT_TRUE(sp.checks[0].pass) << sp.checks[0].detail;
    EXPECT_TRUE(sp.checks[1].pass) << sp.checks[1].detail;
    EXPECT_EQ(sp.data["elements"].get<int>(), 10);
    // lens:1,4 has charge 1 on alpha: every non-identity residue moves it
    EXPECT_TRUE(check_effective_faithful(action_preset("weighted:1,1:p=4"), 1).checks[0].pass);
}
