#include "qorb/orbifold.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace qorb {

bool GroupSpec::finite() const {
    for (const auto& f : factors)
        if (f.continuous()) return false;
    return true;
}

long GroupSpec::size() const {
    if (!finite()) throw std::invalid_argument("GroupSpec::size: group is not finite");
    long n = 1;
    for (const auto& f : factors) n *= f.order;
    return n;
}

std::string charge_str(const Charge& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return s + ")";
}

namespace {

mpq_class pairing(const Weight& w, const RVec& y) {
    mpq_class s = 0;
    for (std::size_t b = 0; b < w.size(); ++b)
        if (w[b] != 0) s += mpq_class(w[b]) * y[b];
    return s;
}

bool is_integer(const mpq_class& x) { return x.get_den() == 1; }

const std::vector<std::pair<Weight, std::vector<Weight>>>& fundamental_weights(const RootDatum& rd) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::pair<Weight, std::vector<Weight>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rd.name);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<Weight, std::vector<Weight>>> out;
    for (int i = 0; i < rd.rank; ++i) {
        Weight w(rd.rank, 0);
        w[i] = 1;
        out.emplace_back(w, irrep(rd, w).weights);
    }
    return cache.emplace(rd.name, std::move(out)).first->second;
}

void check_shape(const RootDatum& rd, const std::vector<FactorAction>& y, const GroupSpec& g) {
    if (y.size() != g.factors.size()) throw std::invalid_argument("action: one y-pair per group factor required");
    for (const auto& f : y)
        if (static_cast<int>(f.y1.size()) != rd.rank || static_cast<int>(f.y2.size()) != rd.rank)
            throw std::invalid_argument("action: y-vectors must have one entry per Cartan generator");
    for (const auto& f : g.factors)
        if (f.order < 0) throw std::invalid_argument("action: negative group order");
}

}  // namespace

Charge charge_of(const ActionSpec& a, const MatrixCoeff& t) {
    const Rep& r = irrep(*a.rd, t.lambda);
    const Weight& mu = r.weights.at(t.mu);
    const Weight& nu = r.weights.at(t.nu);
    Charge c;
    for (const auto& f : a.y) c.push_back(pairing(mu, f.y1) + pairing(nu, f.y2));
    return c;
}

std::optional<Charge> charge_of(const ActionSpec& a, const CoordElement& x) {
    std::optional<Charge> c;
    for (const auto& [t, v] : x.terms) {
        Charge ct = charge_of(a, t);
        if (c && *c != ct) return std::nullopt;
        c = ct;
    }
    if (!c) c = Charge(a.y.size(), 0);
    return c;
}

GroupElement element_from_residues(const GroupSpec& g, const std::vector<long>& residues) {
    if (residues.size() != g.factors.size()) throw std::invalid_argument("group element: wrong number of residues");
    GroupElement e;
    for (std::size_t f = 0; f < residues.size(); ++f) {
        if (g.factors[f].continuous())
            throw std::invalid_argument("group element: residues need a finite factor; give turns for circles");
        mpq_class t(residues[f], g.factors[f].order);
        t.canonicalize();
        e.turns.push_back(t);
    }
    return e;
}

std::vector<std::vector<long>> group_residues(const GroupSpec& g) {
    std::vector<std::vector<long>> out{{}};
    for (const auto& f : g.factors) {
        if (f.continuous()) throw std::invalid_argument("group_residues: group is not finite");
        std::vector<std::vector<long>> next;
        for (const auto& r : out)
            for (long j = 0; j < f.order; ++j) {
                auto s = r;
                s.push_back(j);
                next.push_back(std::move(s));
            }
        out = std::move(next);
    }
    return out;
}

QScalar phase(const ActionSpec& a, const GroupElement& g, const MatrixCoeff& t) {
    Charge c = charge_of(a, t);
    if (g.turns.size() != c.size()) throw std::invalid_argument("act: group element does not match the action");
    mpq_class turn = 0;
    for (std::size_t f = 0; f < c.size(); ++f) turn += g.turns[f] * c[f];
    mpz_class num = turn.get_num(), den = turn.get_den();
    if (den == 1) return QScalar(1);
    if (!den.fits_sint_p()) throw std::invalid_argument("act: phase order too large");
    mpz_class r = num % den;
    if (r < 0) r += den;
    return QScalar::zeta(static_cast<int>(r.get_si()), static_cast<int>(den.get_si()));
}

CoordElement act(const ActionSpec& a, const GroupElement& g, const CoordElement& x) {
    CoordElement out;
    for (const auto& [t, v] : x.terms) out.add(t, v * phase(a, g, t));
    return out;
}

Validation validate_action(const RootDatum& rd, const std::vector<FactorAction>& y, const GroupSpec& group) {
    check_shape(rd, y, group);
    Validation v;
    const auto& fund = fundamental_weights(rd);
    for (std::size_t f = 0; f < y.size(); ++f) {
        for (const auto& [lambda, ws] : fund) {
            for (std::size_t m = 0; m < ws.size(); ++m) {
                const mpq_class a = pairing(ws[m], y[f].y1);
                for (std::size_t n = 0; n < ws.size(); ++n) {
                    mpq_class c = a + pairing(ws[n], y[f].y2);
                    if (is_integer(c)) continue;
                    MatrixCoeff t{lambda, static_cast<int>(m), static_cast<int>(n)};
                    std::ostringstream os;
                    os << "factor " << f + 1 << ": " << coeff_str(t) << " (row weight " << weight_str(ws[m])
                       << ", column weight " << weight_str(ws[n]) << ") has charge " << c.get_str()
                       << ", not an integer, so the action is not periodic modulo the centre";
                    v.certificate = os.str();
                    v.witness = t;
                    v.factor = static_cast<int>(f);
                    v.charge = c;
                    return v;
                }
            }
        }
    }
    v.valid = true;
    v.certificate = "all charges of the fundamental modules are integers";
    return v;
}

Validation validate_action(const ActionSpec& a) { return validate_action(*a.rd, a.y, a.group); }

FactorAction su3_family(int x, int k11, int k12, int k21, int k22) {
    FactorAction f{{mpq_class(3 * k11 + x, 3), mpq_class(3 * k12 + 2 * x, 3)},
                   {mpq_class(3 * k21 + 2 * x, 3), mpq_class(3 * k22 + x, 3)}};
    for (auto* v : {&f.y1[0], &f.y1[1], &f.y2[0], &f.y2[1]}) v->canonicalize();
    return f;
}

std::optional<int> su3_family_x(const FactorAction& y) {
    if (y.y1.size() != 2 || y.y2.size() != 2) return std::nullopt;
    for (int x = 0; x < 3; ++x) {
        mpq_class a(x, 3), b(2 * x, 3);
        a.canonicalize();
        b.canonicalize();
        if (is_integer(y.y1[0] - a) && is_integer(y.y1[1] - b) && is_integer(y.y2[0] - b) && is_integer(y.y2[1] - a))
            return x;
    }
    return std::nullopt;
}

std::vector<ActionSpec> enumerate_su3_actions(const std::vector<int>& xs, int kbox, int order) {
    std::vector<ActionSpec> out;
    for (int x : xs) {
        if (x < 0 || x > 2) throw std::invalid_argument("enumerate_su3_actions: x must be 0, 1 or 2");
        for (int a = -kbox; a <= kbox; ++a)
            for (int b = -kbox; b <= kbox; ++b)
                for (int c = -kbox; c <= kbox; ++c)
                    for (int d = -kbox; d <= kbox; ++d) {
                        ActionSpec s;
                        s.rd = &RootDatum::A2();
                        std::ostringstream os;
                        os << "su3-family:" << x << "," << a << "," << b << "," << c << "," << d;
                        if (order > 0) os << ":p=" << order;
                        s.name = os.str();
                        s.group.factors = {CircleFactor{order}};
                        s.y = {su3_family(x, a, b, c, d)};
                        out.push_back(std::move(s));
                    }
    }
    return out;
}

FamilyScan scan_su3_family(int kbox, int den) {
    FamilyScan s;
    const int lo = -den * kbox, hi = den * kbox + (4 * den + 2) / 3;
    GroupSpec circle{{CircleFactor{0}}};
    const RootDatum& rd = RootDatum::A2();
    FactorAction fa{{0, 0}, {0, 0}};
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b)
            for (int c = lo; c <= hi; ++c)
                for (int d = lo; d <= hi; ++d) {
                    fa.y1[0] = mpq_class(a, den);
                    fa.y1[1] = mpq_class(b, den);
                    fa.y2[0] = mpq_class(c, den);
                    fa.y2[1] = mpq_class(d, den);
                    for (auto* x : {&fa.y1[0], &fa.y1[1], &fa.y2[0], &fa.y2[1]}) x->canonicalize();
                    ++s.grid_points;
                    const bool brute = validate_action(rd, {fa}, circle).valid;
                    const bool fam = su3_family_x(fa).has_value();
                    s.brute_valid += brute;
                    s.family_members += fam;
                    s.false_accepts += brute && !fam;
                    s.false_rejects += fam && !brute;
                }
    for (const auto& spec : enumerate_su3_actions({0, 1, 2}, kbox)) {
        ++s.box_members;
        s.box_members_valid += validate_action(spec).valid;
    }
    return s;
}

std::vector<RVec> central_elements(const RootDatum& rd) {
    if (rd.rank == 1) return {{mpq_class(1, 2)}};
    return {{mpq_class(1, 3), mpq_class(2, 3)}, {mpq_class(2, 3), mpq_class(1, 3)}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> int_list(const std::string& s, std::size_t n, const std::string& preset) {
    std::vector<int> v;
    for (const auto& p : split(s, ',')) {
        std::size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(p, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid preset " + preset + ": bad integer '" + p + "'");
        }
        if (pos != p.size()) throw std::invalid_argument("invalid preset " + preset + ": bad integer '" + p + "'");
        v.push_back(x);
    }
    if (v.size() != n)
        throw std::invalid_argument("invalid preset " + preset + ": expected " + std::to_string(n) + " parameters");
    return v;
}

ActionSpec weighted(int k, int l, const std::string& name) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1)
        throw std::invalid_argument("invalid preset " + name + ": k and l must be positive coprime integers");
    ActionSpec a;
    a.rd = &RootDatum::A1();
    a.name = name;
    a.group.factors = {CircleFactor{0}};
    a.y = {{{mpq_class(l - k, 2)}, {mpq_class(-(l + k), 2)}}};
    for (auto& f : a.y) {
        f.y1[0].canonicalize();
        f.y2[0].canonicalize();
    }
    return a;
}

}  // namespace

ActionSpec action_preset(const std::string& full) {
    std::string name = full;
    int order = -1;
    auto pp = full.find(":p=");
    if (pp != std::string::npos) {
        name = full.substr(0, pp);
        std::string p = full.substr(pp + 3);
        std::size_t pos = 0;
        try {
            order = std::stoi(p, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != p.size() || order < 1) throw std::invalid_argument("invalid preset " + full + ": bad order p");
    }
    auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
    ActionSpec a;
    if (head == "weighted") {
        auto v = int_list(args, 2, full);
        a = weighted(v[0], v[1], full);
    } else if (head == "sphere" && args.empty()) {
        a = weighted(1, 1, full);
    } else if (head == "teardrop") {
        auto v = int_list(args, 2, full);
        if (v[0] != 1) throw std::invalid_argument("invalid preset " + full + ": a teardrop has k = 1");
        a = weighted(v[0], v[1], full);
    } else if (head == "lens") {
        auto v = int_list(args, 2, full);
        if (order > 0) throw std::invalid_argument("invalid preset " + full + ": lens already fixes p");
        if (v[1] < 1) throw std::invalid_argument("invalid preset " + full + ": p must be positive");
        a = weighted(1, v[0], full);
        order = v[1];
    } else if (head == "su3-adjoint" && args.empty()) {
        a.rd = &RootDatum::A2();
        a.group.factors = {CircleFactor{0}, CircleFactor{0}};
        a.y = {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}};
    } else if (head == "su3-family") {
        auto v = int_list(args, 5, full);
        if (v[0] < 0 || v[0] > 2) throw std::invalid_argument("invalid preset " + full + ": x must be 0, 1 or 2");
        a.rd = &RootDatum::A2();
        a.group.factors = {CircleFactor{0}};
        a.y = {su3_family(v[0], v[1], v[2], v[3], v[4])};
    } else if ((head == "trivial") && (args == "su2" || args == "su3")) {
        a.rd = args == "su2" ? &RootDatum::A1() : &RootDatum::A2();
        a.group.factors = {CircleFactor{0}};
        a.y = {{RVec(a.rd->rank, 0), RVec(a.rd->rank, 0)}};
    } else {
        throw std::invalid_argument("invalid preset: " + full);
    }
    a.name = full;
    if (order > 0)
        for (auto& f : a.group.factors) f.order = order;
    return a;
}

std::vector<std::string> action_preset_names() {
    return {"weighted:k,l", "sphere", "teardrop:1,l", "lens:l,p", "su3-adjoint", "su3-family:x,k11,k12,k21,k22",
            "trivial:su2", "trivial:su3", "<preset>:p=P"};
}

bool is_invariant_charge(const GroupSpec& g, const Charge& c) {
    for (std::size_t f = 0; f < c.size(); ++f) {
        const int p = g.factors[f].order;
        if (p == 0) {
            if (c[f] != 0) return false;
        } else {
            mpq_class r = c[f] / p;
            if (!is_integer(r)) return false;
        }
    }
    return true;
}

bool is_invariant(const ActionSpec& a, const MatrixCoeff& t) { return is_invariant_charge(a.group, charge_of(a, t)); }

std::vector<MatrixCoeff> invariant_basis(const ActionSpec& a, int cutoff) {
    std::vector<MatrixCoeff> out;
    for (const auto& t : gns_basis(*a.rd, cutoff))
        if (is_invariant(a, t)) out.push_back(t);
    return out;
}

}  // namespace qorb
