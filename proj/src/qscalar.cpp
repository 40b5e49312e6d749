#include "qorb/qscalar.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qorb {

namespace {

using CLD = std::complex<long double>;

// x^m mod Phi_N for m in [0, N), as integer coefficient rows of length phi(N).
struct Cyclotomic {
    Poly phi;
    int degree = 0;
    std::vector<std::vector<mpz_class>> powers;
};

const Cyclotomic& cyclotomic(int n) {
    static std::mutex mu;
    static std::map<int, Cyclotomic> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::map<int, Poly> local;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Poly q = Poly::monomial(1, d) - Poly::one();
        for (int e = 1; e < d; ++e)
            if (d % e == 0) q = Poly::exact_div(q, local.at(e));
        local[d] = q;
    }
    Poly p = local.at(n);
    Cyclotomic c;
    c.phi = p;
    c.degree = p.degree();
    c.powers.resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        Poly q, r;
        Poly::divmod(Poly::monomial(1, m), p, q, r);
        std::vector<mpz_class> row(static_cast<std::size_t>(c.degree), mpz_class(0));
        for (int i = 0; i <= r.degree(); ++i) row[static_cast<std::size_t>(i)] = r.coeff(i).get_num();
        c.powers[static_cast<std::size_t>(m)] = std::move(row);
    }
    return cache.emplace(n, std::move(c)).first->second;
}

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// n = f^2 * k with k squarefree (sign kept in k).
void split_integer(const mpz_class& n, mpz_class& f, mpz_class& k) {
    f = 1;
    k = n < 0 ? -1 : 1;
    mpz_class m = abs(n);
    for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= m; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2 == 1) k *= p;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            f *= r;
        } else {
            k *= m;
        }
    }
}

CLD csqrt(long double x) { return std::sqrt(CLD(x, 0)); }

// Radicand R = k * P; returns k.
mpz_class radicand_content(const Poly& r) {
    mpq_class scale;
    r.primitive(&scale);
    return scale.get_num();
}

// sqrt(a) = coef * sqrt(rad) for a nonzero polynomial a, with rad canonical.
void canonical_root(const Poly& a, RatFunc& coef, Poly& rad) {
    mpq_class scale;
    Poly p = a.primitive(&scale);
    Poly square, core;
    squarefree_split(p, square, core);
    mpz_class f, k;
    split_integer(scale.get_num() * scale.get_den(), f, k);
    rad = core * mpq_class(k);
    mpq_class c(f, scale.get_den());
    c.canonicalize();
    coef = RatFunc(square * c);
    long double s0 = kBranchPoint;
    CLD want = csqrt(a.eval(s0));
    CLD got = coef.eval(s0) * csqrt(rad.eval(s0));
    if ((want / got).real() < 0) coef = -coef;
}

struct RadProduct {
    RatFunc coef;
    Poly rad;
};

struct PolyPairHash {
    std::size_t operator()(const std::pair<Poly, Poly>& p) const {
        std::size_t h = 1469598103934665603ULL;
        auto mix = [&](const Poly& x) {
            for (const auto& c : x.coeffs()) {
                h ^= std::hash<std::string>{}(c.get_str());
                h *= 1099511628211ULL;
            }
            h ^= 0x9e37;
        };
        mix(p.first);
        mix(p.second);
        return h;
    }
};

// sqrt(r1) * sqrt(r2) = coef * sqrt(rad).
const RadProduct& rad_mul(const Poly& r1, const Poly& r2) {
    static std::mutex mu;
    static std::unordered_map<std::pair<Poly, Poly>, RadProduct, PolyPairHash> cache;
    std::pair<Poly, Poly> key = r1 < r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RadProduct out;
    if (r1.is_one()) {
        out = {RatFunc(1), r2};
    } else if (r2.is_one()) {
        out = {RatFunc(1), r1};
    } else {
        mpz_class k1 = radicand_content(r1), k2 = radicand_content(r2);
        mpq_class i1(mpz_class(1), k1), i2(mpz_class(1), k2);
        i1.canonicalize();
        i2.canonicalize();
        Poly p1 = r1 * i1;
        Poly p2 = r2 * i2;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), k1.get_mpz_t(), k2.get_mpz_t());
        mpz_class kc = k1 * k2 / (g * g);
        Poly h = gcd(p1, p2).primitive();
        Poly q1 = Poly::exact_div(p1, h);
        Poly q2 = Poly::exact_div(p2, h);
        mpq_class sc;
        Poly core = (q1 * q2).primitive(&sc);
        out.coef = RatFunc(h * mpq_class(g) * sc);
        out.rad = core * mpq_class(kc);
        long double s0 = kBranchPoint;
        CLD want = csqrt(r1.eval(s0)) * csqrt(r2.eval(s0));
        CLD got = out.coef.eval(s0) * csqrt(out.rad.eval(s0));
        if ((want / got).real() < 0) out.coef = -out.coef;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

const RatFunc& zero_ratfunc() {
    static const RatFunc z;
    return z;
}

}  // namespace

QScalar::QScalar(const RatFunc& r) {
    if (!r.is_zero()) terms_.emplace(Key{Poly::one(), 0}, r);
}

QScalar QScalar::zeta(int j, int n) {
    if (n < 1) throw std::invalid_argument("QScalar::zeta: order must be positive");
    QScalar z;
    z.n_ = n;
    const Cyclotomic& c = cyclotomic(n);
    const auto& row = c.powers[static_cast<std::size_t>(mod(j, n))];
    for (int i = 0; i < c.degree; ++i)
        if (row[static_cast<std::size_t>(i)] != 0)
            z.add_term(Poly::one(), i, RatFunc(mpq_class(row[static_cast<std::size_t>(i)])));
    z.finish();
    return z;
}

bool QScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.first.is_one() && terms_.begin()->first.second == 0 &&
           terms_.begin()->second.is_one();
}

bool QScalar::is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.first.is_one() && terms_.begin()->first.second == 0);
}

const RatFunc& QScalar::rational() const {
    if (terms_.empty()) return zero_ratfunc();
    if (!is_rational()) throw std::domain_error("QScalar::rational: scalar has radical or cyclotomic part");
    return terms_.begin()->second;
}

void QScalar::add_term(const Poly& rad, int j, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{rad, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void QScalar::finish() {
    for (const auto& [k, v] : terms_)
        if (k.second != 0) return;
    n_ = 1;
}

void QScalar::lift_to(int n) {
    if (n == n_) return;
    if (n % n_ != 0) throw std::logic_error("QScalar::lift_to: order does not divide target");
    if (terms_.empty() || n_ == 1) {
        n_ = n;
        return;
    }
    const int f = n / n_;
    std::map<Key, RatFunc> old;
    old.swap(terms_);
    n_ = n;
    const Cyclotomic& c = cyclotomic(n);
    for (const auto& [k, v] : old) {
        const auto& row = c.powers[static_cast<std::size_t>(mod(static_cast<long>(k.second) * f, n))];
        for (int i = 0; i < c.degree; ++i)
            if (row[static_cast<std::size_t>(i)] != 0)
                add_term(k.first, i, v * RatFunc(mpq_class(row[static_cast<std::size_t>(i)])));
    }
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.terms_.empty()) return *this;
    if (o.n_ != n_) {
        const int n = std::lcm(n_, o.n_);
        lift_to(n);
        QScalar b = o;
        b.lift_to(n);
        for (const auto& [k, v] : b.terms_) add_term(k.first, k.second, v);
    } else {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
    }
    finish();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.is_rational() && b.n_ == 1) {
        r = b;
        const RatFunc& c = a.terms_.begin()->second;
        for (auto& [k, v] : r.terms_) v *= c;
        return r;
    }
    if (b.is_rational() && a.n_ == 1) {
        r = a;
        const RatFunc& c = b.terms_.begin()->second;
        for (auto& [k, v] : r.terms_) v *= c;
        return r;
    }
    const int n = std::lcm(a.n_, b.n_);
    const QScalar* pa = &a;
    const QScalar* pb = &b;
    QScalar la, lb;
    if (a.n_ != n) {
        la = a;
        la.lift_to(n);
        pa = &la;
    }
    if (b.n_ != n) {
        lb = b;
        lb.lift_to(n);
        pb = &lb;
    }
    r.n_ = n;
    const Cyclotomic* cyc = n > 1 ? &cyclotomic(n) : nullptr;
    for (const auto& [ka, va] : pa->terms_) {
        for (const auto& [kb, vb] : pb->terms_) {
            const RadProduct& rp = rad_mul(ka.first, kb.first);
            RatFunc c = va * vb;
            if (!rp.coef.is_one()) c *= rp.coef;
            const int m = ka.second + kb.second;
            if (cyc == nullptr || m < cyc->degree) {
                r.add_term(rp.rad, m, c);
                continue;
            }
            const auto& row = cyc->powers[static_cast<std::size_t>(m % n)];
            for (int i = 0; i < cyc->degree; ++i)
                if (row[static_cast<std::size_t>(i)] != 0)
                    r.add_term(rp.rad, i, c * RatFunc(mpq_class(row[static_cast<std::size_t>(i)])));
        }
    }
    r.finish();
    return r;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

namespace {

// Solve A y = rhs over rational functions by Gaussian elimination.
bool solve_ratfunc(std::vector<std::vector<RatFunc>> a, std::vector<RatFunc> rhs, std::vector<RatFunc>& y) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        RatFunc inv = a[col][col].inv();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RatFunc f = a[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[i][j] -= f * a[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    y = std::move(rhs);
    return true;
}

}  // namespace

QScalar QScalar::inv() const {
    if (terms_.empty()) throw std::domain_error("QScalar::inv: division by zero");
    if (terms_.size() == 1) {
        const auto& [k, v] = *terms_.begin();
        // (c sqrt(R) z^j)^{-1} = c^{-1} R^{-1} sqrt(R) z^{-j}
        QScalar r;
        RatFunc c = v.inv();
        if (!k.first.is_one()) c /= RatFunc(k.first);
        r.add_term(k.first, 0, c);
        if (k.second != 0) return r * zeta(-k.second, n_);
        return r;
    }
    // General case: linear algebra on the span of radical products times
    // powers of zeta.
    std::set<Poly> rads{Poly::one()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Poly> cur(rads.begin(), rads.end());
        for (const auto& t : cur) {
            for (const auto& [k, v] : terms_) {
                const Poly& p = rad_mul(t, k.first).rad;
                if (rads.insert(p).second) grew = true;
            }
        }
        if (rads.size() > 64) throw std::domain_error("QScalar::inv: radical tower too large");
    }
    const int deg = n_ > 1 ? cyclotomic(n_).degree : 1;
    std::vector<Key> basis;
    for (const auto& r : rads)
        for (int j = 0; j < deg; ++j) basis.emplace_back(r, j);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const std::size_t n = basis.size();
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n));
    for (std::size_t col = 0; col < n; ++col) {
        QScalar b;
        b.n_ = n_;
        b.add_term(basis[col].first, basis[col].second, RatFunc(1));
        QScalar prod = *this * b;
        for (const auto& [k, v] : prod.terms_) {
            auto it = index.find(k);
            if (it == index.end()) throw std::logic_error("QScalar::inv: product left the radical span");
            a[it->second][col] = v;
        }
    }
    std::vector<RatFunc> rhs(n);
    rhs[index.at(Key{Poly::one(), 0})] = RatFunc(1);
    std::vector<RatFunc> y;
    if (!solve_ratfunc(std::move(a), std::move(rhs), y))
        throw std::domain_error("QScalar::inv: scalar is a zero divisor in its radical span");
    QScalar r;
    r.n_ = n_;
    for (std::size_t i = 0; i < n; ++i) r.add_term(basis[i].first, basis[i].second, y[i]);
    r.finish();
    if (!(r * *this).is_one()) throw std::domain_error("QScalar::inv: dependent radicals");
    return r;
}

QScalar QScalar::conj() const {
    if (n_ == 1) return *this;
    QScalar r;
    r.n_ = n_;
    const Cyclotomic& c = cyclotomic(n_);
    for (const auto& [k, v] : terms_) {
        const auto& row = c.powers[static_cast<std::size_t>(mod(-k.second, n_))];
        for (int i = 0; i < c.degree; ++i)
            if (row[static_cast<std::size_t>(i)] != 0)
                r.add_term(k.first, i, v * RatFunc(mpq_class(row[static_cast<std::size_t>(i)])));
    }
    r.finish();
    return r;
}

QScalar QScalar::sqrt() const {
    if (terms_.empty()) return {};
    if (!is_rational()) throw std::domain_error("QScalar::sqrt: argument is not a single rational term");
    const RatFunc& x = terms_.begin()->second;
    RatFunc coef;
    Poly rad;
    canonical_root(x.num() * x.den(), coef, rad);
    QScalar r;
    r.add_term(rad, 0, coef / RatFunc(x.den()));
    return r;
}

std::complex<long double> QScalar::eval_s(long double s) const {
    CLD acc = 0;
    for (const auto& [k, v] : terms_) {
        CLD t = v.eval(s);
        if (!k.first.is_one()) {
            long double r = k.first.eval(s);
            if (r < 0) throw std::domain_error("QScalar::eval: negative radicand");
            t *= std::sqrt(r);
        }
        if (k.second != 0) {
            long double ang = 2.0L * 3.14159265358979323846264338327950288L * k.second / n_;
            t *= CLD(std::cos(ang), std::sin(ang));
        }
        acc += t;
    }
    return acc;
}

Complex QScalar::eval(double q) const {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("QScalar::eval: q must lie in (0,1)");
    CLD v = eval_s(std::sqrt(static_cast<long double>(q)));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

QScalar QScalar::classical_limit() const {
    QScalar r;
    for (const auto& [k, v] : terms_) {
        QScalar t(v.at_one());
        if (!k.first.is_one()) t *= QScalar(k.first.eval(mpq_class(1))).sqrt();
        if (k.second != 0) t *= zeta(k.second, n_);
        r += t;
    }
    return r;
}

std::string QScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << v.to_string();
        if (!k.first.is_one()) os << "*sqrt(" << k.first.to_string() << ")";
        if (k.second != 0) os << "*z" << n_ << "^" << k.second;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.to_string(); }

bool operator==(const QScalar& a, const QScalar& b) {
    if (a.n_ == b.n_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

QScalar q_int(int n, int d) {
    if (d < 1) throw std::invalid_argument("q_int: d must be positive");
    if (n == 0) return {};
    if (n < 0) return -q_int(-n, d);
    // sum_{j=0}^{n-1} s^{2d(n-1-2j)}
    const int top = 2 * d * (n - 1);
    std::vector<mpq_class> c(static_cast<std::size_t>(2 * top + 1), mpq_class(0));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(top + 2 * d * (n - 1 - 2 * j))] = 1;
    return QScalar(RatFunc(Poly(std::move(c)), Poly::monomial(1, top)));
}

QScalar q_factorial(int n, int d) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QScalar r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i, d);
    return r;
}

QScalar q_binom(int m, int k, int d) {
    if (m < 0 || k < 0 || k > m) throw std::invalid_argument("q_binom: need 0 <= k <= m");
    RatFunc num = q_factorial(m, d).rational();
    RatFunc den = (q_factorial(k, d) * q_factorial(m - k, d)).rational();
    return QScalar(num / den);
}

}  // namespace qorb
