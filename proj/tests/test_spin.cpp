#include <gtest/gtest.h>

#include "qorb/spin.hpp"

using namespace qorb;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Spinor, Relations) {
    for (const auto* rd : {&RootDatum::A1(), &RootDatum::A2()}) {
        Report r = verify_spinor(*rd);
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << rd->name << " " << c.name << " " << c.detail;
    }
    EXPECT_EQ(spinor_module(lie_basis(RootDatum::A1())).dim(), 2u);
    EXPECT_EQ(spinor_module(lie_basis(RootDatum::A2())).dim(), 16u);
}

TEST(Spinor, AdTildeZero) {
    const auto& g = lie_basis(RootDatum::A2());
    EXPECT_EQ(max_abs(ad_tilde(g, CMatrix::Zero(3, 3))), 0.0);
}

TEST(Spinor, Chirality) {
    EXPECT_THROW(chirality(lie_basis(RootDatum::A1())), std::invalid_argument);
    Chirality c = chirality(lie_basis(RootDatum::A2()));
    EXPECT_NEAR(c.p_plus.trace().real(), 8.0, 1e-12);
    EXPECT_NEAR(c.p_minus.trace().real(), 8.0, 1e-12);
    EXPECT_LE(max_abs(c.p_plus * c.p_minus), 1e-12);
}

TEST(Spinor, ClassicalRepIsHomomorphism) {
    for (const auto* rd : {&RootDatum::A1(), &RootDatum::A2()}) {
        const auto& g = lie_basis(*rd);
        std::vector<Weight> ls = rd->rank == 1 ? std::vector<Weight>{{1}, {2}, {3}} : std::vector<Weight>{{1, 0}, {0, 1}, {1, 1}};
        for (const auto& l : ls)
            for (std::size_t k = 0; k < g.dim(); ++k)
                for (std::size_t m = 0; m < g.dim(); ++m) {
                    CMatrix a = classical_rep(g, l, g.x[k]), b = classical_rep(g, l, g.x[m]);
                    CMatrix br = classical_rep(g, l, g.x[k] * g.x[m] - g.x[m] * g.x[k]);
                    EXPECT_LE(max_abs(a * b - b * a - br), 1e-12) << weight_str(l);
                    EXPECT_LE(max_abs(a + a.adjoint()), 1e-12);
                }
    }
}

TEST(SpinLift, Examples) {
    Report r = spin_examples();
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(SpinLift, Failures) {
    SpinLift l = spin_lift_check(action_preset("su3-family:1,0,0,0,0"), {0}, LiftTarget::Fundamental);
    EXPECT_FALSE(l.pass);
    EXPECT_FALSE(l.periodic);
    EXPECT_NEAR(l.eigenvalue - std::floor(l.eigenvalue), 2.0 / 3.0, 1e-9);
    SpinLift odd = spin_lift_check(action_preset("teardrop:1,2"), {3});
    EXPECT_FALSE(odd.pass);
    EXPECT_THROW(spin_lift_check(action_preset("su3-adjoint"), {1, 2, 3}), std::invalid_argument);
    // a finite restriction of a passing action passes as well
    EXPECT_TRUE(spin_lift_check(action_preset("su3-family:2,1,0,-1,1:p=5"), {1, -1}).pass);
    EXPECT_TRUE(spin_lift_check(action_preset("su3-adjoint"), {0, 0, 2, 1}).pass);
}

TEST(Dirac, Su2Blocks) {
    auto blocks = dirac_blocks(RootDatum::A1(), {{0}, {1}, {2}});
    ASSERT_EQ(blocks.size(), 3u);
    for (const auto& b : blocks) {
        EXPECT_LE(b.hermiticity, 1e-10);
        EXPECT_LE(b.commutation, 1e-9);
        EXPECT_LE(b.solver_gap, 1e-9);
        EXPECT_EQ(b.spectrum.size(), 2 * (static_cast<std::size_t>(b.lambda[0]) + 1));
    }
}

TEST(Dirac, TrivialBlockIsSpinorTerm) {
    const auto& g = lie_basis(RootDatum::A1());
    const auto& s = spinor_module(g);
    CMatrix m = CMatrix::Zero(2, 2);
    for (std::size_t k = 0; k < g.dim(); ++k) m += 0.5 * s.gamma[k] * ad_tilde(g, g.x[k]);
    Eigen::ComplexEigenSolver<CMatrix> es(m);
    std::vector<double> want;
    for (Eigen::Index k = 0; k < 2; ++k) want.push_back(es.eigenvalues()[k].real());
    std::sort(want.begin(), want.end());
    DiracBlock b = dirac_block(RootDatum::A1(), {0});
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(b.spectrum[k], want[k], 1e-9);
    // the cubic term is central: 3 / (4 sqrt 2) on both spinor states
    EXPECT_NEAR(b.spectrum[0], 3.0 / (4.0 * std::sqrt(2.0)), 1e-12);
}

TEST(Dirac, Errors) {
    EXPECT_THROW(dirac_block(RootDatum::A1(), {-1}), std::invalid_argument);
    EXPECT_THROW(dirac_block(RootDatum::A2(), {1}), std::invalid_argument);
}
