#include "qorb/equivariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace qorb {

namespace {

using Entries = std::vector<std::vector<CoordElement>>;

CoordAlgebra algebra_for(const ActionSpec& a, int label) { return CoordAlgebra(*a.rd, std::max(4, 4 * label)); }

int max_label(const Entries& m) {
    int l = 0;
    for (const auto& row : m)
        for (const auto& x : row) l = std::max(l, x.max_label());
    return l;
}

Entries matmul(const CoordAlgebra& alg, const Entries& a, const Entries& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    Entries out(n, std::vector<CoordElement>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < inner; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                out[i][j] += alg.multiply(a[i][k], b[k][j]);
            }
    return out;
}

Charge diff(const Charge& a, const Charge& b) {
    Charge c = a;
    for (std::size_t f = 0; f < c.size(); ++f) c[f] -= b[f];
    return c;
}

// First entry whose charge is not c_row(i) - c_col(j) modulo the group.
std::string charge_mismatch(const ActionSpec& a, const Entries& m, const std::vector<Charge>& rows,
                            const std::vector<Charge>& cols) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j].is_zero()) continue;
            auto c = charge_of(a, m[i][j]);
            if (!c) return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous";
            if (!is_invariant_charge(a.group, diff(*c, diff(rows[i], cols[j]))))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has charge " + charge_str(*c);
        }
    return {};
}

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " (x) " : "") + coeff_str(m[i]);
    return s;
}

void expand(const std::vector<CoordElement>& xs, std::size_t slot, Monomial& cur, const QScalar& coef,
            const std::function<void(const Monomial&, const QScalar&)>& sink) {
    if (slot == xs.size()) {
        sink(cur, coef);
        return;
    }
    for (const auto& [t, v] : xs[slot].terms) {
        cur.push_back(t);
        expand(xs, slot + 1, cur, coef * v, sink);
        cur.pop_back();
    }
}

std::vector<CoordElement> slots(const Monomial& m) {
    std::vector<CoordElement> xs;
    for (const auto& t : m) xs.emplace_back(t);
    return xs;
}

}  // namespace

EquivariantProjector corep_column_projector(const ActionSpec& a, const Weight& lambda, int column,
                                            const std::vector<Charge>& charges) {
    const Rep& r = irrep(*a.rd, lambda);
    if (column < 0 || static_cast<std::size_t>(column) >= r.dim())
        throw std::invalid_argument("column projector: column out of range");
    int label = 0;
    for (int x : lambda) label = std::max(label, x);
    CoordAlgebra alg = algebra_for(a, label);
    std::vector<CoordElement> v;
    for (std::size_t i = 0; i < r.dim(); ++i) v.push_back(alg.coeff(lambda, static_cast<int>(i), column));
    CoordElement norm;
    for (const auto& x : v) norm += alg.multiply(alg.star(x), x);
    if (!(norm == alg.unit()))
        throw std::invalid_argument("column projector: sum v_i* v_i = " + norm.to_string() + " is not the unit");
    EquivariantProjector p;
    p.action = a;
    p.name = "column " + std::to_string(column) + " of " + r.name;
    p.p.assign(v.size(), std::vector<CoordElement>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) p.p[i][j] = alg.multiply(v[i], alg.star(v[j]));
    if (charges.empty()) {
        for (const auto& x : v) p.charges.push_back(*charge_of(a, x));
    } else {
        if (charges.size() != v.size()) throw std::invalid_argument("column projector: wrong number of charges");
        p.charges = charges;
    }
    std::string bad = charge_mismatch(a, p.p, p.charges, p.charges);
    if (!bad.empty()) throw std::invalid_argument("column projector: declared charges disagree, " + bad);
    return p;
}

EquivariantProjector trivial_projector(const ActionSpec& a, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("trivial projector: dimension 0");
    EquivariantProjector p;
    p.action = a;
    p.name = "rank one trivial";
    p.p.assign(dim, std::vector<CoordElement>(dim));
    p.p[0][0] = CoordAlgebra(*a.rd).unit();
    p.charges.assign(dim, Charge(a.group.factors.size(), 0));
    return p;
}

EquivariantProjector projector_preset(const std::string& name, const ActionSpec& a) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    int arg = 0;
    if (colon != std::string::npos) {
        std::size_t pos = 0;
        try {
            arg = std::stoi(name.substr(colon + 1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid projector preset: " + name);
        }
        if (pos != name.size() - colon - 1) throw std::invalid_argument("invalid projector preset: " + name);
    }
    if (head == "su2-column" || head == "su3-column") {
        const bool su2 = head == "su2-column";
        if (su2 != (a.rd->rank == 1))
            throw std::invalid_argument("projector preset " + name + " does not match the action " + a.name);
        return corep_column_projector(a, su2 ? Weight{1} : Weight{1, 0}, arg);
    }
    if (head == "trivial") return trivial_projector(a, static_cast<std::size_t>(std::max(arg, 1)));
    throw std::invalid_argument("invalid projector preset: " + name);
}

Report verify_projector(const EquivariantProjector& p) {
    Report r;
    r.suite = "projector " + p.name;
    CoordAlgebra alg = algebra_for(p.action, max_label(p.p));
    r.add("p^2 = p", matmul(alg, p.p, p.p) == p.p);
    bool sa = true;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j)
            if (!(alg.star(p.p[j][i]) == p.p[i][j])) sa = false;
    r.add("p* = p", sa);
    std::string bad = charge_mismatch(p.action, p.p, p.charges, p.charges);
    r.add("charge(p_ij) = c_i - c_j", bad.empty(), bad);
    return r;
}

void Chain::add(const Monomial& m, const QScalar& v) {
    if (v.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
}

bool operator==(const Chain& a, const Chain& b) {
    if (a.degree != b.degree) return false;
    Chain d = a;
    for (const auto& [m, v] : b.terms) d.add(m, -v);
    return d.is_zero();
}

Chain tensor_chain(const std::vector<CoordElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("tensor_chain: no factors");
    Chain c;
    c.degree = static_cast<int>(xs.size()) - 1;
    Monomial cur;
    expand(xs, 0, cur, QScalar(1), [&](const Monomial& m, const QScalar& v) { c.add(m, v); });
    return c;
}

Charge total_charge(const ActionSpec& a, const Monomial& m) {
    Charge c(a.group.factors.size(), 0);
    for (const auto& t : m) {
        Charge ct = charge_of(a, t);
        for (std::size_t f = 0; f < c.size(); ++f) c[f] += ct[f];
    }
    return c;
}

ComplexMembership check_complex(const ActionSpec& a, const Chain& c) {
    ComplexMembership out;
    for (const auto& [m, v] : c.terms) {
        ++out.monomials;
        if (!is_invariant_charge(a.group, total_charge(a, m))) {
            if (out.in_complex) out.violation = m;
            out.in_complex = false;
            continue;
        }
        if (!out.witness)
            for (const auto& t : m)
                if (!is_invariant(a, t)) {
                    out.witness = m;
                    break;
                }
    }
    return out;
}

Chain chern_character(const EquivariantProjector& p, int k) {
    if (k < 0) throw std::invalid_argument("chern_character: negative degree");
    const std::size_t n = p.dim(), factors = static_cast<std::size_t>(2 * k + 1);
    Chain out;
    out.degree = 2 * k;
    std::vector<std::size_t> idx(factors, 0);
    while (true) {
        std::vector<CoordElement> xs;
        bool zero = false;
        for (std::size_t s = 0; s < factors && !zero; ++s) {
            const CoordElement& e = p.p[idx[s]][idx[(s + 1) % factors]];
            if (e.is_zero()) zero = true;
            xs.push_back(e);
        }
        if (!zero)
            for (const auto& [m, v] : tensor_chain(xs).terms) out.add(m, v);
        std::size_t s = 0;
        while (s < factors && ++idx[s] == n) idx[s++] = 0;
        if (s == factors) break;
    }
    return out;
}

Cochain Cochain::finite(int degree, std::map<Monomial, QScalar> values) {
    auto shared = std::make_shared<const std::map<Monomial, QScalar>>(std::move(values));
    return Cochain(degree, [shared](const Monomial& m) {
        auto it = shared->find(m);
        return it == shared->end() ? QScalar() : it->second;
    });
}

Cochain Cochain::dual(const Monomial& m) { return finite(static_cast<int>(m.size()) - 1, {{m, QScalar(1)}}); }

Cochain Cochain::counit_power(int degree) {
    return Cochain(degree, [](const Monomial& m) {
        for (const auto& t : m)
            if (t.mu != t.nu) return QScalar();
        return QScalar(1);
    });
}

QScalar Cochain::operator()(const Monomial& m) const {
    if (static_cast<int>(m.size()) != degree_ + 1)
        throw std::invalid_argument("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                                    std::to_string(m.size()) + " factors");
    return f_(m);
}

QScalar Cochain::operator()(const std::vector<CoordElement>& xs) const {
    if (static_cast<int>(xs.size()) != degree_ + 1)
        throw std::invalid_argument("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                                    std::to_string(xs.size()) + " factors");
    QScalar out;
    Monomial cur;
    expand(xs, 0, cur, QScalar(1), [&](const Monomial& m, const QScalar& v) {
        QScalar x = f_(m);
        if (!x.is_zero()) out += v * x;
    });
    return out;
}

Cochain hochschild_b(const Cochain& c, const CoordAlgebra& alg) {
    const int k = c.degree();
    return Cochain(k + 1, [c, alg, k](const Monomial& m) {
        std::vector<CoordElement> a = slots(m);
        QScalar out;
        for (int i = 0; i <= k; ++i) {
            std::vector<CoordElement> xs;
            for (int j = 0; j < i; ++j) xs.push_back(a[j]);
            xs.push_back(alg.multiply(a[i], a[i + 1]));
            for (int j = i + 2; j <= k + 1; ++j) xs.push_back(a[j]);
            QScalar v = c(xs);
            out += i % 2 == 0 ? v : -v;
        }
        std::vector<CoordElement> xs{alg.multiply(a[k + 1], a[0])};
        for (int j = 1; j <= k; ++j) xs.push_back(a[j]);
        QScalar v = c(xs);
        out += (k + 1) % 2 == 0 ? v : -v;
        return out;
    });
}

Cochain cyclic_lambda(const Cochain& c) {
    const int k = c.degree();
    return Cochain(k, [c, k](const Monomial& m) {
        Monomial r;
        r.push_back(m.back());
        r.insert(r.end(), m.begin(), m.end() - 1);
        QScalar v = c(r);
        return k % 2 == 0 ? v : -v;
    });
}

QScalar pair_chain(const Cochain& c, const Chain& x) {
    if (c.degree() != x.degree)
        throw std::invalid_argument("pair_chain: cochain degree " + std::to_string(c.degree()) + " against chain degree " +
                                    std::to_string(x.degree));
    QScalar out;
    for (const auto& [m, v] : x.terms) {
        QScalar y = c(m);
        if (!y.is_zero()) out += v * y;
    }
    return out;
}

Report check_equivalence(const EquivariantProjector& p, const EquivariantProjector& p2, const Entries& gamma,
                         const Entries& gamma2) {
    Report r;
    r.suite = "equivalence";
    if (gamma.size() != p2.dim() || gamma2.size() != p.dim())
        throw std::invalid_argument("check_equivalence: shapes do not match the projectors");
    CoordAlgebra alg = algebra_for(p.action, std::max(max_label(gamma), max_label(gamma2)));
    r.add("gamma gamma' = p'", matmul(alg, gamma, gamma2) == p2.p);
    r.add("gamma' gamma = p", matmul(alg, gamma2, gamma) == p.p);
    std::string b1 = charge_mismatch(p.action, gamma, p2.charges, p.charges);
    std::string b2 = charge_mismatch(p.action, gamma2, p.charges, p2.charges);
    r.add("gamma invariant", b1.empty(), b1);
    r.add("gamma' invariant", b2.empty(), b2);
    return r;
}

Report chern_report(const EquivariantProjector& p, const std::vector<int>& degrees) {
    Report r;
    r.suite = "chern " + p.name + " under " + p.action.name;
    r.merge(verify_projector(p));
    std::optional<Monomial> witness;
    Chain witness_chain;
    for (int k : degrees) {
        Chain ch = chern_character(p, k);
        ComplexMembership m = check_complex(p.action, ch);
        const std::string deg = std::to_string(2 * k);
        r.add("ch_" + deg + " in C_" + deg, m.in_complex,
              std::to_string(m.monomials) + " monomials" +
                  (m.violation ? "; violated by " + monomial_str(*m.violation) : std::string()));
        if (!witness && m.witness) witness = m.witness;
    }
    r.add("isotropy witness", witness.has_value(),
          witness ? monomial_str(*witness) : "every monomial has invariant tensor factors");
    if (witness) {
        auto& w = r.data["witness"];
        w["monomial"] = monomial_str(*witness);
        for (const auto& t : *witness) w["charges"].push_back(charge_str(charge_of(p.action, t)));
        w["total"] = charge_str(total_charge(p.action, *witness));
    }
    return r;
}

}  // namespace qorb
