#include "qorb/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorb {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    if (c != 0) {
        p.c_.push_back(c);
        p.c_.back().canonicalize();
    }
    return p;
}

Poly Poly::monomial(const mpq_class& c, int degree) {
    Poly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
        p.c_.back() = c;
        p.c_.back().canonicalize();
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw std::logic_error("Poly::shifted_down: not divisible by s^k");
    Poly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    r = a;
    q = Poly();
    const int db = b.degree();
    if (r.degree() < db) return;
    q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1, mpq_class(0));
    const mpq_class inv_lead = 1 / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        mpq_class f = r.lead() * inv_lead;
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (int j = 0; j <= db; ++j)
            r.c_[static_cast<std::size_t>(shift + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        r.trim();
    }
    q.trim();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    if (b.is_monomial()) {
        const int k = b.degree();
        Poly r = a.shifted_down(k);
        return r * (1 / b.lead());
    }
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: remainder is nonzero");
    return q;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return *this * mpq_class(1 / lead());
}

Poly Poly::primitive(mpq_class* scale) const {
    if (is_zero()) {
        if (scale) *scale = 0;
        return *this;
    }
    mpz_class den_lcm = 1;
    for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& x : c_) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (lead() < 0) factor = -factor;
    Poly r = *this * factor;
    if (scale) *scale = 1 / factor;
    return r;
}

long double Poly::eval(long double s) const {
    long double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i].get_d();
    return acc;
}

mpq_class Poly::eval(const mpq_class& s) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i];
    return acc;
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpq_class& x = c_[i];
        if (x == 0) continue;
        mpq_class ax = abs(x);
        if (!first) os << (x < 0 ? " - " : " + ");
        else if (x < 0) os << "-";
        first = false;
        if (i == 0 || ax != 1) os << ax.get_str();
        if (i > 0) {
            if (ax != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Pure powers of s are the common case for denominators.
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& m = a.is_monomial() ? a : b;
        const Poly& o = a.is_monomial() ? b : a;
        const int k = std::min(m.degree(), o.valuation());
        return Poly::monomial(1, k);
    }
    const int common_s = std::min(a.valuation(), b.valuation());
    a = a.shifted_down(a.valuation());
    b = b.shifted_down(b.valuation());
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly q, r;
        Poly::divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic().shifted_up(common_s);
}

void squarefree_split(const Poly& p, Poly& square, Poly& core) {
    square = Poly::one();
    core = Poly::one();
    if (p.is_constant()) return;
    // Yun's algorithm over Q.
    Poly c = gcd(p, p.derivative());
    Poly w = Poly::exact_div(p.monic(), c);
    int mult = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = Poly::exact_div(w, y);
        if (!z.is_one()) {
            Poly zp = z.primitive();
            for (int i = 0; i < mult / 2; ++i) square = square * zp;
            if (mult % 2 == 1) core = core * zp;
        }
        w = y;
        c = Poly::exact_div(c, y);
        ++mult;
    }
    square = square.primitive();
    core = core.primitive();
}

}  // namespace qorb
