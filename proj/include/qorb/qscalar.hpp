#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qorb/ratfunc.hpp"

namespace qorb {

using Complex = std::complex<double>;

// Exact scalar: a finite sum of r(s) * sqrt(R) * zeta^j with r a reduced
// rational function in s = q^(1/2), R a canonical squarefree radicand and
// zeta = exp(2 pi i / N). For a given N the cyclotomic exponents are kept
// below phi(N), i.e. reduced modulo the N-th cyclotomic polynomial.
//
// A radicand is k * P with k a squarefree nonzero integer and P a primitive
// squarefree integer polynomial with positive leading coefficient. sqrt(R)
// denotes the branch that is positive (or principal) near s = 0.65.
class QScalar {
public:
    using Key = std::pair<Poly, int>;  // (radicand, zeta exponent)

    QScalar() = default;
    QScalar(long c) : QScalar(RatFunc(c)) {}                 // NOLINT
    QScalar(const mpq_class& c) : QScalar(RatFunc(c)) {}     // NOLINT
    QScalar(const RatFunc& r);                               // NOLINT

    static QScalar s_pow(int k, const mpq_class& c = 1) { return QScalar(RatFunc::s_pow(k, c)); }
    // q^(k/2) for integer k.
    static QScalar q_half_pow(int k) { return s_pow(k); }
    static QScalar zeta(int j, int n);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // One term, radicand 1 and no root of unity.
    bool is_rational() const;
    bool is_single_term() const { return terms_.size() == 1; }
    const RatFunc& rational() const;  // requires is_rational() or zero
    int order() const { return n_; }
    const std::map<Key, RatFunc>& terms() const { return terms_; }

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o) { return *this *= o.inv(); }
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inv(); }

    QScalar inv() const;
    QScalar conj() const;
    // Square root of a single rational term; throws std::domain_error otherwise.
    QScalar sqrt() const;

    // Value at s = sqrt(q), q in (0,1).
    Complex eval(double q) const;
    std::complex<long double> eval_s(long double s) const;
    // Value at s = 1; throws PoleAtOne.
    QScalar classical_limit() const;

    std::string to_string() const;

    friend bool operator==(const QScalar& a, const QScalar& b);

private:
    void add_term(const Poly& rad, int j, const RatFunc& c);
    void lift_to(int n);
    void finish();

    std::map<Key, RatFunc> terms_;
    int n_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QScalar& x);

inline QScalar conj(const QScalar& x) { return x.conj(); }
inline QScalar sqrt(const QScalar& x) { return x.sqrt(); }

// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
QScalar q_int(int n, int d = 1);
QScalar q_factorial(int n, int d = 1);
QScalar q_binom(int m, int k, int d = 1);

// Evaluation point used to fix square-root branches.
inline constexpr long double kBranchPoint = 0.65L;

}  // namespace qorb
