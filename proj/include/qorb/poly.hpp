#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qorb {

// Dense univariate polynomial over Q in the variable s. Coefficients are
// stored in ascending order with no trailing zeros; the zero polynomial has
// an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly constant(const mpq_class& c);
    static Poly monomial(const mpq_class& c, int degree);
    static Poly one() { return constant(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    // True when the polynomial is c * s^k for a single k.
    bool is_monomial() const;
    const mpq_class& lead() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    // Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int valuation() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }

    // Multiply by s^k, k >= 0.
    Poly shifted_up(int k) const;
    // Divide by s^k; requires valuation() >= k.
    Poly shifted_down(int k) const;

    // Euclidean division a = q*b + r with deg r < deg b.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Exact quotient; throws if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b);

    Poly derivative() const;
    Poly monic() const;
    // Integer-coefficient primitive associate with positive leading term.
    // `scale` receives the rational factor with *this == scale * result.
    Poly primitive(mpq_class* scale = nullptr) const;

    long double eval(long double s) const;
    mpq_class eval(const mpq_class& s) const;

    std::string to_string(const char* var = "s") const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

// Squarefree decomposition of a primitive polynomial with positive leading
// coefficient: p = square^2 * core, both primitive with positive leading
// coefficients and `core` squarefree.
void squarefree_split(const Poly& p, Poly& square, Poly& core);

}  // namespace qorb
