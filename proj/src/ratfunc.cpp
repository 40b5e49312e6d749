#include "qorb/ratfunc.hpp"

#include <utility>

namespace qorb {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::s_pow(int k, const mpq_class& c) {
    RatFunc r;
    if (k >= 0) {
        r.num_ = Poly::monomial(c, k);
    } else {
        r.num_ = Poly::constant(c);
        r.den_ = Poly::monomial(1, -k);
    }
    return r;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    if (den_.lead() != 1) {
        mpq_class l = den_.lead();
        num_ *= mpq_class(1 / l);
        den_ *= mpq_class(1 / l);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = Poly::one();
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly b1 = Poly::exact_div(den_, g);
    Poly d1 = Poly::exact_div(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = den_ * d1;
    if (num_.is_zero()) {
        den_ = Poly::one();
        return *this;
    }
    if (!g.is_one()) {
        Poly h = gcd(num_, g);
        if (!h.is_one()) {
            num_ = Poly::exact_div(num_, h);
            den_ = Poly::exact_div(den_, h);
        }
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly a = g1.is_one() ? num_ : Poly::exact_div(num_, g1);
    Poly d = g1.is_one() ? o.den_ : Poly::exact_div(o.den_, g1);
    Poly c = g2.is_one() ? o.num_ : Poly::exact_div(o.num_, g2);
    Poly b = g2.is_one() ? den_ : Poly::exact_div(den_, g2);
    num_ = a * c;
    den_ = b * d;
    if (den_.lead() != 1) {
        mpq_class l = den_.lead();
        num_ *= mpq_class(1 / l);
        den_ *= mpq_class(1 / l);
    }
    return *this;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc::inv: division by zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    mpq_class l = r.den_.lead();
    if (l != 1) {
        r.num_ *= mpq_class(1 / l);
        r.den_ *= mpq_class(1 / l);
    }
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inv(); }

long double RatFunc::eval(long double s) const { return num_.eval(s) / den_.eval(s); }

mpq_class RatFunc::at_one() const {
    mpq_class d = den_.eval(mpq_class(1));
    if (d == 0) throw PoleAtOne();
    mpq_class r = num_.eval(mpq_class(1)) / d;
    r.canonicalize();
    return r;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qorb
