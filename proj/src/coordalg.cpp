#include "qorb/coordalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace qorb {

std::string coeff_str(const MatrixCoeff& c) {
    return "t" + weight_str(c.lambda) + "_" + std::to_string(c.mu + 1) + "," + std::to_string(c.nu + 1);
}

CoordElement::CoordElement(const MatrixCoeff& c, const QScalar& v) { add(c, v); }

void CoordElement::add(const MatrixCoeff& c, const QScalar& v) {
    if (v.is_zero()) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
        terms.emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
}

CoordElement& CoordElement::operator+=(const CoordElement& o) {
    for (const auto& [c, v] : o.terms) add(c, v);
    return *this;
}

CoordElement& CoordElement::operator-=(const CoordElement& o) {
    for (const auto& [c, v] : o.terms) add(c, -v);
    return *this;
}

CoordElement& CoordElement::operator*=(const QScalar& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

int CoordElement::max_label() const {
    int m = 0;
    for (const auto& [c, v] : terms)
        for (int x : c.lambda) m = std::max(m, x);
    return m;
}

std::string CoordElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, v] : terms) {
        os << (first ? "" : " + ") << "(" << v.to_string() << ")*" << coeff_str(c);
        first = false;
    }
    return os.str();
}

UqWord UqWord::operator*(const UqWord& o) const {
    UqWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

std::string UqWord::to_string() const {
    if (letters.empty()) return "1";
    static const char* names[] = {"e", "f", "k", "kinv"};
    std::string s;
    for (const auto& l : letters) s += (s.empty() ? "" : "*") + std::string(names[l.kind]) + std::to_string(l.i + 1);
    return s;
}

std::vector<std::tuple<UqWord, UqWord, QScalar>> coproduct(const UqWord& x) {
    std::vector<std::tuple<UqWord, UqWord, QScalar>> out{{UqWord{}, UqWord{}, QScalar(1)}};
    for (const auto& l : x.letters) {
        std::vector<std::pair<UqWord, UqWord>> parts;
        switch (l.kind) {
            case 0: parts = {{UqWord::e(l.i), UqWord::k(l.i)}, {UqWord::kinv(l.i), UqWord::e(l.i)}}; break;
            case 1: parts = {{UqWord::f(l.i), UqWord::k(l.i)}, {UqWord::kinv(l.i), UqWord::f(l.i)}}; break;
            case 2: parts = {{UqWord::k(l.i), UqWord::k(l.i)}}; break;
            default: parts = {{UqWord::kinv(l.i), UqWord::kinv(l.i)}}; break;
        }
        std::vector<std::tuple<UqWord, UqWord, QScalar>> next;
        for (const auto& [a, b, c] : out)
            for (const auto& [pa, pb] : parts) next.emplace_back(a * pa, b * pb, c);
        out = std::move(next);
    }
    return out;
}

Matrix represent(const Rep& r, const UqWord& x) {
    Matrix m = Matrix::identity(r.dim());
    for (const auto& l : x.letters) m = m * r.generator(l.kind, l.i);
    return m;
}

const char* placement_name(Placement p) { return p == Placement::Direct ? "direct" : "opposite"; }

namespace {

struct BlockRows {
    Weight kappa;
    std::vector<std::vector<std::pair<int, QScalar>>> rows;
    QScalar norm_inv;
};

struct ProductCache {
    std::mutex mu;
    std::map<std::pair<Weight, Weight>, std::shared_ptr<const std::vector<BlockRows>>> blocks;
    std::map<Weight, std::shared_ptr<const std::pair<Matrix, Matrix>>> phi;
};

ProductCache& product_cache() {
    static ProductCache c;
    return c;
}

std::shared_ptr<const std::vector<BlockRows>> block_rows(const RootDatum& rd, const Weight& a, const Weight& b) {
    ProductCache& c = product_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.blocks.find({a, b});
        if (it != c.blocks.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<BlockRows>>();
    for (const auto& blk : pair_blocks(rd, a, b)) {
        BlockRows br;
        br.kappa = blk.kappa;
        br.norm_inv = blk.norm.inv();
        br.rows.resize(blk.e0.rows());
        for (std::size_t r = 0; r < blk.e0.rows(); ++r)
            for (std::size_t k = 0; k < blk.e0.cols(); ++k)
                if (!blk.e0(r, k).is_zero()) br.rows[r].emplace_back(static_cast<int>(k), blk.e0(r, k));
        out->push_back(std::move(br));
    }
    std::lock_guard<std::mutex> lock(c.mu);
    return c.blocks.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

// Phi: irrep(dual weight) -> dual(irrep(lambda)) with its inverse.
std::shared_ptr<const std::pair<Matrix, Matrix>> dual_iso(const RootDatum& rd, const Weight& lambda) {
    ProductCache& c = product_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.phi.find(lambda);
        if (it != c.phi.end()) return it->second;
    }
    Rep d = dual(irrep(rd, lambda));
    Weight lv = dual_weight(rd, lambda);
    auto hw = highest_weight_vectors(d);
    const std::vector<QScalar>* w0 = nullptr;
    for (const auto& h : hw)
        if (h.weight == lv) w0 = &h.v;
    if (w0 == nullptr) throw std::logic_error("dual_iso: dual module has no highest weight " + weight_str(lv));
    Matrix phi = intertwiner_from(d, lv, *w0);
    auto out = std::make_shared<std::pair<Matrix, Matrix>>(phi, inverse(phi));
    std::lock_guard<std::mutex> lock(c.mu);
    return c.phi.emplace(lambda, std::move(out)).first->second;
}

bool is_trivial(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

int max_of(const Weight& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

}  // namespace

void CoordAlgebra::check_cutoff(const Weight& lambda) const {
    if (max_of(lambda) > cutoff_)
        throw CutoffExceeded("weight " + weight_str(lambda) + " exceeds the cutoff " + std::to_string(cutoff_));
}

CoordElement CoordAlgebra::unit() const { return CoordElement(MatrixCoeff{Weight(rd_->rank, 0), 0, 0}); }

CoordElement CoordAlgebra::coeff(const Weight& lambda, int mu, int nu) const {
    check_cutoff(lambda);
    const int d = static_cast<int>(irrep(*rd_, lambda).dim());
    if (mu < 0 || nu < 0 || mu >= d || nu >= d) throw std::out_of_range("coeff: index out of range");
    return CoordElement(MatrixCoeff{lambda, mu, nu});
}

std::vector<std::pair<std::string, CoordElement>> CoordAlgebra::generators() const {
    std::vector<std::pair<std::string, CoordElement>> out;
    if (rd_->rank == 1) {
        out.emplace_back("alpha", coeff({1}, 0, 0));
        out.emplace_back("beta", coeff({1}, 0, 1));
        return out;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.emplace_back("t" + std::to_string(i + 1) + std::to_string(j + 1), coeff({1, 0}, i, j));
    return out;
}

std::vector<CoordElement> CoordAlgebra::fundamental_coeffs() const {
    Weight w(rd_->rank, 0);
    w[0] = 1;
    const int d = static_cast<int>(irrep(*rd_, w).dim());
    std::vector<CoordElement> out;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.push_back(coeff(w, i, j));
    return out;
}

CoordElement CoordAlgebra::multiply(const CoordElement& a, const CoordElement& b, Placement p) const {
    CoordElement out;
    for (const auto& [ca, va] : a.terms) {
        for (const auto& [cb, vb] : b.terms) {
            const QScalar v = va * vb;
            if (is_trivial(ca.lambda)) {
                out.add(cb, v);
                continue;
            }
            if (is_trivial(cb.lambda)) {
                out.add(ca, v);
                continue;
            }
            const MatrixCoeff& first = p == Placement::Direct ? ca : cb;
            const MatrixCoeff& second = p == Placement::Direct ? cb : ca;
            auto blocks = block_rows(*rd_, first.lambda, second.lambda);
            const std::size_t d2 = irrep(*rd_, second.lambda).dim();
            const std::size_t row = first.mu * d2 + second.mu;
            const std::size_t col = first.nu * d2 + second.nu;
            for (const auto& br : *blocks) {
                const auto& rr = br.rows[row];
                const auto& rc = br.rows[col];
                if (rr.empty() || rc.empty()) continue;
                check_cutoff(br.kappa);
                const QScalar w = v * br.norm_inv;
                for (const auto& [k, x] : rr)
                    for (const auto& [k2, y] : rc) out.add(MatrixCoeff{br.kappa, k, k2}, w * x * y.conj());
            }
        }
    }
    return out;
}

CoordElement CoordAlgebra::multiply(const std::vector<CoordElement>& factors, Placement p) const {
    CoordElement out = unit();
    for (const auto& f : factors) out = multiply(out, f, p);
    return out;
}

QScalar CoordAlgebra::pair(const CoordElement& t, const UqWord& x) const {
    QScalar out;
    for (const auto& [c, v] : t.terms) {
        const Rep& r = irrep(*rd_, c.lambda);
        std::vector<QScalar> u(r.dim());
        u[c.nu] = QScalar(1);
        for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it) u = r.generator(it->kind, it->i).apply(u);
        if (!u[c.mu].is_zero()) out += v * u[c.mu];
    }
    return out;
}

CoordTensor CoordAlgebra::coproduct(const CoordElement& t) const {
    CoordTensor out;
    for (const auto& [c, v] : t.terms) {
        const int d = static_cast<int>(irrep(*rd_, c.lambda).dim());
        for (int eta = 0; eta < d; ++eta) {
            auto key = std::make_pair(MatrixCoeff{c.lambda, c.mu, eta}, MatrixCoeff{c.lambda, eta, c.nu});
            QScalar& slot = out[key];
            slot += v;
            if (slot.is_zero()) out.erase(key);
        }
    }
    return out;
}

QScalar CoordAlgebra::counit(const CoordElement& t) const {
    QScalar out;
    for (const auto& [c, v] : t.terms)
        if (c.mu == c.nu) out += v;
    return out;
}

CoordElement CoordAlgebra::antipode(const CoordElement& t) const {
    CoordElement out;
    for (const auto& [c, v] : t.terms) {
        if (is_trivial(c.lambda)) {
            out.add(c, v);
            continue;
        }
        Weight lv = dual_weight(*rd_, c.lambda);
        check_cutoff(lv);
        auto iso = dual_iso(*rd_, c.lambda);
        const Matrix& phi = iso->first;
        const Matrix& phinv = iso->second;
        // rho(Sx)_{mu nu} = rho*(x)_{nu mu} = sum_ab Phi_{nu a} rho_v(x)_{ab} Phi^{-1}_{b mu}
        for (std::size_t a = 0; a < phi.cols(); ++a) {
            const QScalar& x = phi(c.nu, a);
            if (x.is_zero()) continue;
            for (std::size_t b = 0; b < phinv.rows(); ++b) {
                const QScalar& y = phinv(b, c.mu);
                if (y.is_zero()) continue;
                out.add(MatrixCoeff{lv, static_cast<int>(a), static_cast<int>(b)}, v * x * y);
            }
        }
    }
    return out;
}

CoordElement CoordAlgebra::star(const CoordElement& t) const {
    CoordElement out;
    for (const auto& [c, v] : t.terms) {
        CoordElement s = antipode(CoordElement(MatrixCoeff{c.lambda, c.nu, c.mu}));
        out += s * v.conj();
    }
    return out;
}

CoordElement CoordAlgebra::right_action(const UqWord& x, const CoordElement& t) const {
    CoordElement out;
    for (const auto& [c, v] : t.terms) {
        Matrix m = represent(irrep(*rd_, c.lambda), x);
        for (std::size_t eta = 0; eta < m.rows(); ++eta)
            if (!m(eta, c.nu).is_zero())
                out.add(MatrixCoeff{c.lambda, c.mu, static_cast<int>(eta)}, v * m(eta, c.nu));
    }
    return out;
}

CoordElement CoordAlgebra::left_action(const UqWord& x, const CoordElement& t) const {
    // S(theta(x)) is the reversed word with e_i -> q_i^{-1} f_i, f_i -> q_i e_i.
    UqWord y;
    QScalar scale(1);
    for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it) {
        const int di = rd_->d[it->i];
        switch (it->kind) {
            case 0: y.letters.push_back({1, it->i}); scale *= QScalar::s_pow(-2 * di); break;
            case 1: y.letters.push_back({0, it->i}); scale *= QScalar::s_pow(2 * di); break;
            default: y.letters.push_back(*it); break;
        }
    }
    CoordElement out;
    for (const auto& [c, v] : t.terms) {
        Matrix m = represent(irrep(*rd_, c.lambda), y);
        for (std::size_t eta = 0; eta < m.cols(); ++eta)
            if (!m(c.mu, eta).is_zero())
                out.add(MatrixCoeff{c.lambda, static_cast<int>(eta), c.nu}, v * scale * m(c.mu, eta));
    }
    return out;
}

CoordTensor CoordAlgebra::tensor_multiply(const CoordTensor& a, const CoordTensor& b) const {
    CoordTensor out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            CoordElement l = multiply(CoordElement(ka.first), CoordElement(kb.first));
            CoordElement r = multiply(CoordElement(ka.second), CoordElement(kb.second));
            const QScalar v = va * vb;
            for (const auto& [cl, xl] : l.terms)
                for (const auto& [cr, xr] : r.terms) {
                    auto key = std::make_pair(cl, cr);
                    QScalar& slot = out[key];
                    slot += v * xl * xr;
                    if (slot.is_zero()) out.erase(key);
                }
        }
    return out;
}

}  // namespace qorb
