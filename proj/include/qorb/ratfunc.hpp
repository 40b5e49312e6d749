#pragma once

#include <stdexcept>
#include <string>

#include "qorb/poly.hpp"

namespace qorb {

// Raised when a value is requested at s = 1 but the reduced denominator
// vanishes there.
struct PoleAtOne : std::domain_error {
    PoleAtOne() : std::domain_error("rational function has a pole at s = 1") {}
};

// Reduced quotient num/den of polynomials over Q with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    RatFunc(long c) : num_(Poly::constant(c)), den_(Poly::one()) {}  // NOLINT
    RatFunc(const mpq_class& c) : num_(Poly::constant(c)), den_(Poly::one()) {}  // NOLINT
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);

    // c * s^k for any integer k.
    static RatFunc s_pow(int k, const mpq_class& c = 1);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc inv() const;

    long double eval(long double s) const;
    // Exact value at s = 1; throws PoleAtOne.
    mpq_class at_one() const;

    std::string to_string() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Poly num_;
    Poly den_;
};

}  // namespace qorb
