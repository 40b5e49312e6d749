#include "qorb/rep.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qorb {

const RootDatum& RootDatum::A1() {
    static const RootDatum rd{"A1", 1, {{2}}, {1}};
    return rd;
}

const RootDatum& RootDatum::A2() {
    static const RootDatum rd{"A2", 2, {{2, -1}, {-1, 2}}, {1, 1}};
    return rd;
}

const RootDatum& RootDatum::by_name(const std::string& name) {
    if (name == "A1" || name == "su2") return A1();
    if (name == "A2" || name == "su3") return A2();
    throw std::invalid_argument("unknown root datum: " + name);
}

bool is_dominant(const Weight& w) {
    for (int x : w)
        if (x < 0) return false;
    return true;
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

Matrix Rep::k(int i) const {
    std::vector<QScalar> d;
    d.reserve(dim());
    for (const auto& w : weights) d.push_back(QScalar::s_pow(rd->d[i] * w[i]));
    return Matrix::diagonal(d);
}

Matrix Rep::kinv(int i) const {
    std::vector<QScalar> d;
    d.reserve(dim());
    for (const auto& w : weights) d.push_back(QScalar::s_pow(-rd->d[i] * w[i]));
    return Matrix::diagonal(d);
}

Matrix Rep::generator(int kind, int i) const {
    switch (kind) {
        case 0: return e[i];
        case 1: return f[i];
        case 2: return k(i);
        case 3: return kinv(i);
        default: throw std::invalid_argument("Rep::generator: bad kind");
    }
}

Rep trivial_rep(const RootDatum& rd) {
    Rep r;
    r.rd = &rd;
    r.name = "trivial";
    r.weights = {Weight(rd.rank, 0)};
    r.e.assign(rd.rank, Matrix(1, 1));
    r.f.assign(rd.rank, Matrix(1, 1));
    return r;
}

Rep su2_rep(int twice_j) {
    if (twice_j < 0) throw std::invalid_argument("su2_rep: negative spin");
    Rep r;
    r.rd = &RootDatum::A1();
    r.name = "su2:" + (twice_j % 2 == 0 ? std::to_string(twice_j / 2) : std::to_string(twice_j) + "/2");
    const int n = twice_j + 1;
    for (int idx = 0; idx < n; ++idx) r.weights.push_back({twice_j - 2 * idx});
    Matrix e(n, n);
    for (int idx = 1; idx < n; ++idx)
        e(idx - 1, idx) = (q_int(idx) * q_int(twice_j - idx + 1)).sqrt();
    r.e = {e};
    r.f = {e.transpose()};
    return r;
}

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j, const QScalar& c = QScalar(1)) {
    Matrix m(n, n);
    m(i - 1, j - 1) = c;
    return m;
}

Rep su3_builtin(const std::string& which) {
    Rep r;
    r.rd = &RootDatum::A2();
    QScalar r2 = q_int(2).sqrt();
    if (which == "l1") {
        r.name = "su3:λ1";
        r.weights = {{1, 0}, {-1, 1}, {0, -1}};
        r.e = {unit(3, 1, 2), unit(3, 2, 3)};
    } else if (which == "l1v") {
        r.name = "su3:λ1v";
        r.weights = {{-1, 0}, {1, -1}, {0, 1}};
        r.e = {unit(3, 2, 1), unit(3, 3, 2)};
    } else {
        r.name = "su3:λ2";
        r.weights = {{2, 0}, {0, 1}, {-2, 2}, {1, -1}, {-1, 0}, {0, -2}};
        r.e = {unit(6, 1, 2, r2) + unit(6, 2, 3, r2) + unit(6, 4, 5), unit(6, 2, 4) + unit(6, 3, 5, r2) + unit(6, 5, 6, r2)};
    }
    r.f = {r.e[0].transpose(), r.e[1].transpose()};
    return r;
}

}  // namespace

Rep builtin_rep(const std::string& name) {
    if (name == "trivial" || name == "trivial:su3") return trivial_rep(RootDatum::A2());
    if (name == "trivial:su2") return trivial_rep(RootDatum::A1());
    if (name == "su3:λ1" || name == "su3:l1") return su3_builtin("l1");
    if (name == "su3:λ1v" || name == "su3:l1v" || name == "su3:λ1∨") return su3_builtin("l1v");
    if (name == "su3:λ2" || name == "su3:l2") return su3_builtin("l2");
    if (name.rfind("su2:", 0) == 0) {
        std::string j = name.substr(4);
        try {
            std::size_t pos = 0;
            int twice = 0;
            auto slash = j.find('/');
            if (slash == std::string::npos) {
                twice = 2 * std::stoi(j, &pos);
                if (pos != j.size()) throw std::invalid_argument(j);
            } else {
                if (j.substr(slash + 1) != "2") throw std::invalid_argument(j);
                twice = std::stoi(j.substr(0, slash), &pos);
                if (pos != slash || twice % 2 == 0) throw std::invalid_argument(j);
            }
            if (twice < 0) throw std::invalid_argument(j);
            return su2_rep(twice);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("unknown representation: " + name);
        }
    }
    throw std::invalid_argument("unknown representation: " + name);
}

Report verify_defining_relations(const Rep& r) {
    Report rep;
    rep.suite = "uq-relations:" + r.name;
    const int n = r.rank();
    const std::size_t dim = r.dim();
    const Matrix id = Matrix::identity(dim);
    std::vector<Matrix> k(n), ki(n);
    for (int i = 0; i < n; ++i) {
        k[i] = r.k(i);
        ki[i] = r.kinv(i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
            if (i < j) rep.add("[k" + ij + "]=0", k[i] * k[j] == k[j] * k[i]);
            // k_i e_j k_i^{-1} = q_i^{a_ij/2} e_j with q_i^{1/2} = s^{d_i}
            QScalar c = QScalar::s_pow(r.rd->form(i, j));
            rep.add("k" + ij + " e", k[i] * r.e[j] * ki[i] == r.e[j] * c);
            rep.add("k" + ij + " f", k[i] * r.f[j] * ki[i] == r.f[j] * c.inv());
            Matrix comm = r.e[i] * r.f[j] - r.f[j] * r.e[i];
            if (i == j) {
                QScalar qi = QScalar::s_pow(2 * r.rd->d[i]);
                Matrix rhs = (k[i] * k[i] - ki[i] * ki[i]) * (qi - qi.inv()).inv();
                rep.add("[e" + ij + ",f]", comm == rhs);
            } else {
                rep.add("[e" + ij + ",f]", comm.is_zero());
            }
            if (i == j) continue;
            const int m = 1 - r.rd->a[i][j];
            Matrix se(dim, dim), sf(dim, dim);
            std::vector<Matrix> ep(m + 1, id), fp(m + 1, id);
            for (int p = 1; p <= m; ++p) {
                ep[p] = ep[p - 1] * r.e[i];
                fp[p] = fp[p - 1] * r.f[i];
            }
            for (int p = 0; p <= m; ++p) {
                QScalar c2 = q_binom(m, p, r.rd->d[i]);
                if (p % 2 == 1) c2 = -c2;
                se += ep[p] * r.e[j] * ep[m - p] * c2;
                sf += fp[p] * r.f[j] * fp[m - p] * c2;
            }
            rep.add("serre e" + ij, se.is_zero());
            rep.add("serre f" + ij, sf.is_zero());
        }
        rep.add("k" + std::to_string(i + 1) + " inverse", k[i] * ki[i] == id);
    }
    // Admissibility: k diagonal by construction; check weight labels are
    // consistent with e raising by alpha_i.
    bool weights_ok = true;
    for (int i = 0; i < n; ++i)
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                if (r.e[i](a, b).is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (r.weights[a][j] != r.weights[b][j] + r.rd->a[i][j]) weights_ok = false;
            }
    rep.add("weight grading", weights_ok);
    return rep;
}

bool is_star_rep(const Rep& r) {
    for (int i = 0; i < r.rank(); ++i)
        if (!(r.e[i].adjoint() == r.f[i])) return false;
    return true;
}

Rep tensor(const Rep& a, const Rep& b) {
    if (!(*a.rd == *b.rd)) throw std::invalid_argument("tensor: root datum mismatch");
    Rep r;
    r.rd = a.rd;
    r.name = a.name + "⊗" + b.name;
    for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) r.weights.push_back(wa + wb);
    for (int i = 0; i < a.rank(); ++i) {
        Matrix ka = a.k(i), kb = b.k(i), kia = a.kinv(i);
        r.e.push_back(kron(a.e[i], kb) + kron(kia, b.e[i]));
        r.f.push_back(kron(a.f[i], kb) + kron(kia, b.f[i]));
    }
    return r;
}

Rep dual(const Rep& r) {
    Rep d;
    d.rd = r.rd;
    d.name = r.name + "*";
    for (const auto& w : r.weights) d.weights.push_back(-w);
    for (int i = 0; i < r.rank(); ++i) {
        QScalar qi = QScalar::s_pow(2 * r.rd->d[i]);
        // S(e_i) = -q_i e_i, S(f_i) = -q_i^{-1} f_i
        d.e.push_back(r.e[i].transpose() * (-qi));
        d.f.push_back(r.f[i].transpose() * (-qi.inv()));
    }
    return d;
}

std::vector<std::size_t> weight_space(const Rep& r, const Weight& w) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r.dim(); ++i)
        if (r.weights[i] == w) idx.push_back(i);
    return idx;
}

namespace {

void fix_sign(std::vector<QScalar>& v) {
    for (auto& x : v) {
        if (x.is_zero()) continue;
        if (x.eval_s(kBranchPoint).real() < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

}  // namespace

std::vector<HighestWeightVector> highest_weight_vectors(const Rep& r) {
    std::vector<Weight> order;
    for (const auto& w : r.weights) {
        bool seen = false;
        for (const auto& o : order) seen = seen || o == w;
        if (!seen) order.push_back(w);
    }
    std::vector<HighestWeightVector> out;
    for (const auto& w : order) {
        std::vector<std::size_t> idx = weight_space(r, w);
        // Rows of the stacked e_i restricted to the weight space.
        std::vector<std::pair<int, std::size_t>> rows;
        for (int i = 0; i < r.rank(); ++i)
            for (std::size_t a = 0; a < r.dim(); ++a)
                for (std::size_t c : idx)
                    if (!r.e[i](a, c).is_zero()) {
                        rows.emplace_back(i, a);
                        break;
                    }
        Matrix m(rows.size(), idx.size());
        for (std::size_t p = 0; p < rows.size(); ++p)
            for (std::size_t c = 0; c < idx.size(); ++c) m(p, c) = r.e[rows[p].first](rows[p].second, idx[c]);
        Matrix ns = rows.empty() ? Matrix::identity(idx.size()) : nullspace(m);
        std::vector<std::vector<QScalar>> found;
        for (std::size_t c = 0; c < ns.cols(); ++c) {
            std::vector<QScalar> v(r.dim());
            for (std::size_t p = 0; p < idx.size(); ++p) v[idx[p]] = ns(p, c);
            for (const auto& u : found) {
                QScalar coef = inner(u, v) / inner(u, u);
                if (coef.is_zero()) continue;
                for (std::size_t t = 0; t < v.size(); ++t)
                    if (!u[t].is_zero()) v[t] -= coef * u[t];
            }
            fix_sign(v);
            found.push_back(v);
        }
        for (auto& v : found) out.push_back({w, std::move(v)});
    }
    return out;
}

}  // namespace qorb
