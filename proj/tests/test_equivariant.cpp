#include <gtest/gtest.h>

#include <random>

#include "qorb/equivariant.hpp"

using namespace qorb;

namespace {

ActionSpec teardrop() { return action_preset("teardrop:1,3"); }

std::vector<MatrixCoeff> small_basis() { return gns_basis(RootDatum::A1(), 1); }

Monomial random_monomial(std::mt19937& rng, std::size_t n, const std::vector<MatrixCoeff>& basis) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(basis[pick(rng)]);
    return m;
}

// Finitely supported cochain with small integer values on every monomial of
// labels <= 2.
Cochain random_cochain(std::mt19937& rng, int degree) {
    const auto basis = gns_basis(RootDatum::A1(), 2);
    std::uniform_int_distribution<int> val(-2, 2);
    std::map<Monomial, QScalar> values;
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree + 1), 0);
    while (true) {
        Monomial m;
        for (auto i : idx) m.push_back(basis[i]);
        int v = val(rng);
        if (v != 0) values[m] = QScalar(v);
        std::size_t s = 0;
        while (s < idx.size() && ++idx[s] == basis.size()) idx[s++] = 0;
        if (s == idx.size()) break;
    }
    return Cochain::finite(degree, values);
}

}  // namespace

TEST(Projector, Su2Column) {
    EquivariantProjector p = corep_column_projector(teardrop(), {1}, 0);
    ASSERT_EQ(p.dim(), 2u);
    Report r = verify_projector(p);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    EXPECT_EQ(charge_str(p.charges[0]), "(-1)");
    EXPECT_EQ(charge_str(p.charges[1]), "(-3)");
    EquivariantProjector p1 = corep_column_projector(action_preset("sphere"), {1}, 1);
    EXPECT_TRUE(verify_projector(p1).all_pass());
}

TEST(Projector, Su3Column) {
    for (int c = 0; c < 3; ++c) {
        EquivariantProjector p = corep_column_projector(action_preset("su3-adjoint"), {1, 0}, c);
        Report r = verify_projector(p);
        EXPECT_TRUE(r.all_pass()) << c;
    }
}

TEST(Projector, Trivial) {
    EquivariantProjector p = trivial_projector(teardrop(), 3);
    EXPECT_TRUE(verify_projector(p).all_pass());
    Chain ch0 = chern_character(p, 0);
    EXPECT_TRUE(ch0 == tensor_chain({CoordAlgebra::su2().unit()}));
    Chain ch2 = chern_character(p, 1);
    EXPECT_TRUE(ch2 == tensor_chain({CoordAlgebra::su2().unit(), CoordAlgebra::su2().unit(), CoordAlgebra::su2().unit()}));
}

TEST(Projector, Errors) {
    EXPECT_THROW(corep_column_projector(teardrop(), {1}, 0, {Charge{0}, Charge{0}}), std::invalid_argument);
    EXPECT_THROW(corep_column_projector(teardrop(), {1}, 2), std::invalid_argument);
    EXPECT_THROW(projector_preset("su3-column", teardrop()), std::invalid_argument);
    EXPECT_THROW(projector_preset("bogus", teardrop()), std::invalid_argument);
    // charges shifted by a common constant are still consistent
    EXPECT_NO_THROW(corep_column_projector(teardrop(), {1}, 0, {Charge{5}, Charge{3}}));
}

TEST(Chern, Ch0IsTrace) {
    EquivariantProjector p = corep_column_projector(teardrop(), {1}, 0);
    Chain ch0 = chern_character(p, 0);
    EXPECT_TRUE(ch0 == tensor_chain({p.p[0][0] + p.p[1][1]}));
    ComplexMembership m = check_complex(p.action, ch0);
    EXPECT_TRUE(m.in_complex);
}

TEST(Chern, InvariantChainsAndWitness) {
    for (const char* preset : {"teardrop:1,3", "teardrop:1,2", "lens:3,5", "weighted:2,3"}) {
        ActionSpec a = action_preset(preset);
        EquivariantProjector p = corep_column_projector(a, {1}, 0);
        Report r = chern_report(p, {0, 1});
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << preset << " " << c.name << " " << c.detail;
        ASSERT_TRUE(r.data.contains("witness"));
    }
    // su3 projector under the adjoint torus and an su3 family member
    for (const char* preset : {"su3-adjoint", "su3-family:1,0,1,-1,0"}) {
        EquivariantProjector p = corep_column_projector(action_preset(preset), {1, 0}, 0);
        EXPECT_TRUE(check_complex(p.action, chern_character(p, 1)).in_complex) << preset;
    }
}

TEST(Chern, WitnessFactorsCharged) {
    EquivariantProjector p = corep_column_projector(teardrop(), {1}, 0);
    ComplexMembership m = check_complex(p.action, chern_character(p, 1));
    ASSERT_TRUE(m.witness.has_value());
    EXPECT_TRUE(is_invariant_charge(p.action.group, total_charge(p.action, *m.witness)));
    bool charged = false;
    for (const auto& t : *m.witness) charged |= !is_invariant(p.action, t);
    EXPECT_TRUE(charged);
    // a chain with a lone charged factor is not in the complex
    Chain bad = tensor_chain({CoordElement(MatrixCoeff{{1}, 0, 0})});
    EXPECT_FALSE(check_complex(p.action, bad).in_complex);
}

TEST(Cochain, DegreeZeroB) {
    CoordAlgebra alg = CoordAlgebra::su2(4);
    std::mt19937 rng(1);
    Cochain tau = random_cochain(rng, 0);
    Cochain b = hochschild_b(tau, alg);
    const auto basis = small_basis();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            CoordElement a(x), c(y);
            QScalar want = tau({alg.multiply(a, c)}) - tau({alg.multiply(c, a)});
            EXPECT_TRUE(b(Monomial{x, y}) == want);
        }
}

TEST(Cochain, BSquaredZero) {
    CoordAlgebra alg = CoordAlgebra::su2(4);
    std::mt19937 rng(9);
    const auto basis = small_basis();
    for (int k = 0; k <= 2; ++k) {
        Cochain tau = random_cochain(rng, k);
        Cochain bb = hochschild_b(hochschild_b(tau, alg), alg);
        for (int n = 0; n < 12; ++n) {
            Monomial m = random_monomial(rng, static_cast<std::size_t>(k + 3), basis);
            EXPECT_TRUE(bb(m).is_zero()) << k;
        }
    }
}

TEST(Cochain, LambdaOrder) {
    std::mt19937 rng(4);
    const auto basis = gns_basis(RootDatum::A1(), 2);
    for (int k = 0; k <= 3; ++k) {
        Cochain tau = random_cochain(rng, std::min(k, 2));
        if (k == 3) tau = Cochain::dual(random_monomial(rng, 4, basis));
        Cochain l = tau;
        for (int i = 0; i <= k; ++i) l = cyclic_lambda(l);
        for (int n = 0; n < 10; ++n) {
            Monomial m = random_monomial(rng, static_cast<std::size_t>(tau.degree() + 1), basis);
            EXPECT_TRUE(l(m) == tau(m));
        }
    }
}

TEST(Cochain, Pairing) {
    const auto basis = small_basis();
    std::mt19937 rng(2);
    Monomial m = random_monomial(rng, 3, basis);
    Chain c;
    c.degree = 2;
    c.add(m, QScalar(1));
    EXPECT_TRUE(pair_chain(Cochain::dual(m), c) == QScalar(1));
    EXPECT_THROW(pair_chain(Cochain::dual(m), tensor_chain({CoordElement(m[0])})), std::invalid_argument);
    // bilinearity
    Cochain t1 = random_cochain(rng, 1), t2 = random_cochain(rng, 1);
    Cochain sum(1, [&](const Monomial& x) { return t1(x) + QScalar(3) * t2(x); });
    Chain x1 = tensor_chain({CoordElement(basis[1]) + CoordElement(basis[2]), CoordElement(basis[3])});
    Chain x2 = tensor_chain({CoordElement(basis[4]), CoordElement(basis[0]) * QScalar(2)});
    Chain x12 = x1;
    for (const auto& [mm, v] : x2.terms) x12.add(mm, v);
    EXPECT_TRUE(pair_chain(sum, x12) == pair_chain(t1, x1) + pair_chain(t1, x2) + QScalar(3) * (pair_chain(t2, x1) + pair_chain(t2, x2)));
}

TEST(Cochain, CounitCocycleAndEquivalence) {
    CoordAlgebra alg = CoordAlgebra::su2(4);
    Cochain eps2 = Cochain::counit_power(2);
    Cochain b = hochschild_b(eps2, alg);
    std::mt19937 rng(6);
    const auto basis = small_basis();
    for (int n = 0; n < 10; ++n) {
        Monomial m = random_monomial(rng, 4, basis);
        EXPECT_TRUE(b(m).is_zero());
        Monomial m3(m.begin(), m.end() - 1);
        EXPECT_TRUE(cyclic_lambda(eps2)(m3) == eps2(m3));
    }
    // p' = u p u* for a diagonal unitary of units
    EquivariantProjector p = corep_column_projector(teardrop(), {1}, 0);
    std::vector<QScalar> u{QScalar::zeta(1, 3), QScalar(-1)};
    EquivariantProjector p2 = p;
    std::vector<std::vector<CoordElement>> g(2, std::vector<CoordElement>(2)), g2 = g;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            p2.p[i][j] = p.p[i][j] * (u[i] * u[j].conj());
            g[i][j] = p.p[i][j] * u[i];
            g2[i][j] = p.p[i][j] * u[j].conj();
        }
    Report eq = check_equivalence(p, p2, g, g2);
    for (const auto& c : eq.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    for (int k = 0; k <= 1; ++k) {
        Cochain e = Cochain::counit_power(2 * k);
        EXPECT_TRUE(pair_chain(e, chern_character(p, k)) == pair_chain(e, chern_character(p2, k))) << k;
    }
    EXPECT_TRUE(pair_chain(Cochain::counit_power(0), chern_character(p, 0)) == QScalar(1));
}

TEST(Cochain, RestrictsToComplex) {
    ActionSpec a = teardrop();
    CoordAlgebra alg = CoordAlgebra::su2(4);
    std::mt19937 rng(8);
    Cochain tau = random_cochain(rng, 1);
    Cochain restricted(1, [&](const Monomial& m) {
        return is_invariant_charge(a.group, total_charge(a, m)) ? tau(m) : QScalar();
    });
    Cochain b = hochschild_b(tau, alg), br = hochschild_b(restricted, alg);
    const auto basis = small_basis();
    int checked = 0;
    for (int n = 0; n < 400 && checked < 15; ++n) {
        Monomial m = random_monomial(rng, 3, basis);
        if (!is_invariant_charge(a.group, total_charge(a, m))) continue;
        ++checked;
        EXPECT_TRUE(b(m) == br(m));
    }
    EXPECT_GT(checked, 0);
}
