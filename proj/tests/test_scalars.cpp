#include <gtest/gtest.h>

#include <cmath>

#include "qorb/qscalar.hpp"
#include "qorb/sampler.hpp"

using namespace qorb;

namespace {

QScalar q() { return QScalar::s_pow(2); }

double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

}  // namespace

TEST(QInt, SmallValues) {
    EXPECT_EQ(q_int(1), QScalar(1));
    EXPECT_EQ(q_int(2), QScalar::s_pow(2) + QScalar::s_pow(-2));
    EXPECT_EQ(q_int(3), QScalar::s_pow(4) + QScalar(1) + QScalar::s_pow(-4));
    EXPECT_EQ(q_int(-2), -q_int(2));
    EXPECT_EQ(q_int(0), QScalar());
    EXPECT_EQ(q_int(2, 2), QScalar::s_pow(4) + QScalar::s_pow(-4));
}

TEST(QInt, MatchesDefiningQuotient) {
    for (int n = -5; n <= 6; ++n) {
        for (int d = 1; d <= 2; ++d) {
            QScalar qd = QScalar::s_pow(2 * d);
            QScalar lhs = (QScalar::s_pow(2 * d * n) - QScalar::s_pow(-2 * d * n)) / (qd - qd.inv());
            EXPECT_EQ(q_int(n, d), lhs) << n << " " << d;
        }
    }
}

TEST(QBinom, Values) {
    EXPECT_EQ(q_binom(5, 0), QScalar(1));
    EXPECT_EQ(q_binom(2, 1), q() + q().inv());
    EXPECT_EQ(q_binom(4, 2), q_int(4) * q_int(3) / (q_int(2) * q_int(1)));
    EXPECT_TRUE(q_binom(4, 2).rational().den().is_monomial());
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k) EXPECT_EQ(q_binom(m, k), q_binom(m, m - k));
    EXPECT_THROW(q_binom(3, 4), std::invalid_argument);
    EXPECT_THROW(q_binom(3, -1), std::invalid_argument);
}

TEST(QBinom, NonnegativeIntegerCoefficients) {
    for (int m = 0; m <= 6; ++m) {
        for (int k = 0; k <= m; ++k) {
            RatFunc r = q_binom(m, k).rational();
            ASSERT_TRUE(r.den().is_monomial()) << m << " " << k << " " << r.to_string();
            for (const auto& c : r.num().coeffs()) {
                EXPECT_GE(c, 0);
                EXPECT_TRUE(c.get_den() == 1);
            }
        }
    }
}

TEST(Sqrt, RadicalProductIsPerfectSquare) {
    QScalar a = (q() / q_int(2)).sqrt();
    QScalar b = (QScalar(1) / (q() * q_int(2))).sqrt();
    EXPECT_EQ(a * b, QScalar(1) / q_int(2));
    EXPECT_EQ(a * a, q() / q_int(2));
    EXPECT_FALSE(a.is_rational());
}

TEST(Sqrt, SquaresBack) {
    std::vector<QScalar> xs = {QScalar(4), QScalar(mpq_class(9, 2)), q_int(3) / q_int(2), q() * q_int(2),
                               QScalar::s_pow(-3), q_int(2) * q_int(2) * q_int(3), QScalar(-2)};
    for (const auto& x : xs) {
        QScalar r = x.sqrt();
        EXPECT_EQ(r * r, x) << x.to_string();
    }
    EXPECT_EQ(QScalar(4).sqrt(), QScalar(2));
    EXPECT_EQ((q_int(2) * q_int(2)).sqrt(), q_int(2));
    EXPECT_EQ(QScalar::s_pow(4).sqrt(), QScalar::s_pow(2));
}

TEST(Sqrt, RejectsMultiTerm) {
    QScalar x = QScalar(1) + QScalar(2).sqrt();
    EXPECT_THROW(x.sqrt(), std::domain_error);
    EXPECT_THROW(QScalar::zeta(1, 3).sqrt(), std::domain_error);
}

TEST(Sqrt, PositiveBranch) {
    for (double qq : {0.1, 0.3, 0.5, 0.9}) {
        EXPECT_GT((q() / q_int(2)).sqrt().eval(qq).real(), 0);
        EXPECT_GT((q_int(3) / q_int(2)).sqrt().eval(qq).real(), 0);
    }
    QScalar x = q() / q_int(2);
    for (double qq : {0.3, 0.5, 0.9}) {
        Complex r = x.sqrt().eval(qq);
        EXPECT_LT(rel_err(r * r, x.eval(qq)), 1e-12);
    }
}

TEST(Zeta, CyclotomicReduction) {
    QScalar z = QScalar::zeta(1, 3);
    EXPECT_EQ(z * z * z, QScalar(1));
    EXPECT_EQ(QScalar(1) + z + z * z, QScalar());
    EXPECT_EQ(QScalar::zeta(2, 4), QScalar(-1));
    EXPECT_EQ(QScalar::zeta(3, 6), QScalar(-1));
    EXPECT_EQ(QScalar::zeta(2, 6), QScalar::zeta(1, 3));
    EXPECT_EQ(QScalar::zeta(1, 4) * QScalar::zeta(1, 3), QScalar::zeta(7, 12));
    EXPECT_EQ((z - z).order(), 1);
}

TEST(Conj, CyclotomicPart) {
    QScalar r = q_int(3) / q_int(2);
    for (int n : {3, 4, 5, 12}) {
        for (int j = 1; j < n; ++j) {
            QScalar x = QScalar::zeta(j, n) * r;
            EXPECT_EQ(x.conj(), QScalar::zeta(n - j, n) * r);
            EXPECT_EQ(x.conj().conj(), x);
            EXPECT_EQ(x * x.conj(), r * r);
        }
    }
    QScalar rad = (q() / q_int(2)).sqrt();
    EXPECT_EQ(rad.conj(), rad);
}

TEST(Inv, SingleAndMultiTerm) {
    QScalar z = QScalar::zeta(1, 5);
    EXPECT_EQ(z * z.inv(), QScalar(1));
    QScalar x = QScalar(1) + QScalar(2).sqrt();
    EXPECT_EQ(x * x.inv(), QScalar(1));
    QScalar y = QScalar(2).sqrt() + QScalar(3).sqrt() + QScalar::zeta(1, 3) * q_int(2);
    EXPECT_EQ(y * y.inv(), QScalar(1));
    EXPECT_THROW(QScalar().inv(), std::domain_error);
}

TEST(Eval, Values) {
    EXPECT_NEAR(QScalar(1).eval(0.4).real(), 1.0, 1e-15);
    // [2] = q + 1/q
    EXPECT_NEAR(q_int(2).eval(0.25).real(), 4.25, 1e-14);
    EXPECT_NEAR(QScalar::s_pow(1).eval(0.25).real(), 0.5, 1e-15);
    EXPECT_NEAR(QScalar::zeta(1, 4).eval(0.5).imag(), 1.0, 1e-15);
    EXPECT_THROW(q_int(2).eval(1.0), std::domain_error);
    EXPECT_THROW(q_int(2).eval(0.0), std::domain_error);
    EXPECT_THROW(QScalar(-2).sqrt().eval(0.5), std::domain_error);
}

TEST(ClassicalLimit, Values) {
    for (int n = -4; n <= 6; ++n) EXPECT_EQ(q_int(n).classical_limit(), QScalar(n));
    EXPECT_EQ(QScalar(mpq_class(3, 7)).classical_limit(), QScalar(mpq_class(3, 7)));
    EXPECT_THROW((q() - q().inv()).inv().classical_limit(), PoleAtOne);
    EXPECT_EQ((q() / q_int(2)).sqrt().classical_limit(), QScalar(mpq_class(1, 2)).sqrt());
    EXPECT_EQ(q_binom(4, 2).classical_limit(), QScalar(6));
}

TEST(FieldAxioms, RandomSamples) {
    ScalarSampler gen(12345);
    for (int i = 0; i < 200; ++i) {
        QScalar a = gen.sample(), b = gen.sample(), c = gen.sample();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_TRUE((a - a).terms().empty());
        if (!a.is_zero()) EXPECT_EQ(a * a.inv(), QScalar(1));
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(a.conj().conj(), a);
    }
}

TEST(Eval, RingHomomorphism) {
    ScalarSampler gen(777);
    for (int i = 0; i < 200; ++i) {
        QScalar a = gen.sample(), b = gen.sample();
        for (double qq : {0.3, 0.5, 0.9}) {
            Complex ea = a.eval(qq), eb = b.eval(qq);
            EXPECT_LT(rel_err((a * b).eval(qq), ea * eb), 1e-12);
            EXPECT_LT(rel_err((a + b).eval(qq), ea + eb), 1e-12);
            EXPECT_LT(rel_err(a.conj().eval(qq), std::conj(ea)), 1e-12);
        }
    }
}
