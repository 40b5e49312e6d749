#include "qorb/crossedprod.hpp"

#include <sstream>
#include <stdexcept>

namespace qorb {

void CrossedElement::add(const Residues& g, const CoordElement& t) {
    if (t.is_zero()) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
        terms.emplace(g, t);
        return;
    }
    it->second += t;
    if (it->second.is_zero()) terms.erase(it);
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
    for (const auto& [g, t] : o.terms) add(g, t);
    return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
    for (const auto& [g, t] : o.terms) add(g, t * QScalar(-1));
    return *this;
}

CrossedElement& CrossedElement::operator*=(const QScalar& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [g, t] : terms) t *= c;
    return *this;
}

std::string residues_str(const Residues& g) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << "]";
    return os.str();
}

std::string CrossedElement::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [g, t] : terms) {
        if (!s.empty()) s += " + ";
        s += residues_str(g) + ".(" + t.to_string() + ")";
    }
    return s;
}

CrossedProduct::CrossedProduct(const ActionSpec& a, int cutoff) : a_(a), alg_(*a.rd, cutoff) {
    if (!a_.group.finite()) throw std::invalid_argument("crossed product: group of " + a_.name + " is not finite");
}

Residues CrossedProduct::checked(const Residues& g) const {
    if (g.size() != a_.group.factors.size())
        throw std::invalid_argument("crossed product: group mismatch for element " + residues_str(g));
    Residues r(g.size());
    for (std::size_t f = 0; f < g.size(); ++f) {
        long p = a_.group.factors[f].order;
        r[f] = ((g[f] % p) + p) % p;
    }
    return r;
}

Residues CrossedProduct::identity() const { return Residues(a_.group.factors.size(), 0); }

Residues CrossedProduct::inverse(const Residues& g) const {
    Residues r = checked(g);
    for (auto& x : r) x = -x;
    return checked(r);
}

Residues CrossedProduct::compose(const Residues& g, const Residues& h) const {
    Residues a = checked(g), b = checked(h);
    for (std::size_t f = 0; f < a.size(); ++f) a[f] += b[f];
    return checked(a);
}

CrossedElement CrossedProduct::unit() const { return embed(alg_.unit()); }

CrossedElement CrossedProduct::element(const Residues& g, const CoordElement& t) const {
    CrossedElement e;
    e.add(checked(g), t);
    return e;
}

CoordElement CrossedProduct::act(const Residues& g, const CoordElement& t) const {
    return qorb::act(a_, element_from_residues(a_.group, checked(g)), t);
}

CrossedElement CrossedProduct::multiply(const CrossedElement& a, const CrossedElement& b) const {
    CrossedElement out;
    for (const auto& [g1, t1] : a.terms)
        for (const auto& [g2, t2] : b.terms) out.add(compose(g1, g2), alg_.multiply(t1, act(g1, t2)));
    return out;
}

CrossedElement CrossedProduct::star(const CrossedElement& a) const {
    CrossedElement out;
    for (const auto& [g, t] : a.terms) {
        Residues gi = inverse(g);
        out.add(gi, act(gi, alg_.star(t)));
    }
    return out;
}

VarpiMatrix CrossedProduct::varpi(const CrossedElement& a, int cutoff) const {
    VarpiMatrix v;
    v.basis = gns_basis(*a_.rd, cutoff);
    const std::size_t n = v.basis.size();
    v.m = Matrix(n, n);
    v.overflow.assign(n, false);
    for (const auto& [g, t] : a.terms) {
        GnsMatrix pm = gns_matrix(*a_.rd, t, cutoff);
        GroupElement ge = element_from_residues(a_.group, checked(g));
        std::vector<QScalar> d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = phase(a_, ge, v.basis[j]);
        v.m += pm.m * Matrix::diagonal(d);
        for (std::size_t j = 0; j < n; ++j)
            if (pm.overflow[j]) v.overflow[j] = true;
    }
    return v;
}

namespace {

bool fixes(const ActionSpec& a, const GroupElement& g, const MatrixCoeff& t) {
    Charge c = charge_of(a, t);
    mpq_class turn = 0;
    for (std::size_t f = 0; f < c.size(); ++f) turn += g.turns[f] * c[f];
    return turn.get_den() == 1;
}

std::vector<MatrixCoeff> fundamental_labels(const CoordAlgebra& alg) {
    std::vector<MatrixCoeff> out;
    for (const auto& c : alg.fundamental_coeffs())
        for (const auto& [t, v] : c.terms) out.push_back(t);
    return out;
}

}  // namespace

Report check_effective_faithful(const ActionSpec& a, int cutoff, int space_cutoff) {
    if (space_cutoff < 0) space_cutoff = 2 * cutoff;
    Report r;
    r.suite = "effective-faithful " + a.name;
    CrossedProduct cp(a, std::max(cutoff, space_cutoff) * 2);
    const auto group = cp.group();
    const auto gens = fundamental_labels(cp.algebra());

    std::string fixed_by;
    long acting = 0;
    for (const auto& g : group) {
        if (g == cp.identity()) continue;
        GroupElement ge = element_from_residues(a.group, g);
        bool all_fixed = true;
        for (const auto& t : gens)
            if (!fixes(a, ge, t)) {
                all_fixed = false;
                break;
            }
        if (all_fixed) {
            if (fixed_by.empty()) fixed_by = residues_str(g);
        } else {
            ++acting;
        }
    }
    r.add("effective", fixed_by.empty(),
          fixed_by.empty() ? std::to_string(acting + 1) + " elements separated by the generator charges"
                           : residues_str(group[0]) + " and " + fixed_by + " act identically");
    r.data["effective"] = fixed_by.empty();

    const auto labels = gns_basis(*a.rd, cutoff);
    const std::size_t n = gns_basis(*a.rd, space_cutoff).size();
    Matrix cols(n * n, group.size() * labels.size());
    std::size_t c = 0;
    for (const auto& g : group)
        for (const auto& t : labels) {
            VarpiMatrix v = cp.varpi(cp.element(g, CoordElement(t)), space_cutoff);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) cols(i * n + j, c) = v.m(i, j);
            ++c;
        }
    const std::size_t rk = rank(cols);
    r.add("faithful up to cutoff " + std::to_string(cutoff), rk == cols.cols(),
          "rank " + std::to_string(rk) + " of " + std::to_string(cols.cols()) + " on a space of dimension " +
              std::to_string(n));
    r.data["rank"] = rk;
    r.data["elements"] = cols.cols();
    r.data["cutoff"] = cutoff;
    r.data["space_cutoff"] = space_cutoff;
    return r;
}

}  // namespace qorb
