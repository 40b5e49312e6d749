#include <algorithm>
#include <functional>

#include "qorb/coordalg.hpp"

namespace qorb {

namespace {

// Accumulates one pass/fail entry over many samples, keeping the first
// failure as the detail.
struct Tally {
    std::string name;
    std::size_t checked = 0, failed = 0;
    std::string first{};

    void record(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first = what;
    }
    void flush(Report& r) const {
        if (checked == 0) return;
        std::string d = std::to_string(checked - failed) + "/" + std::to_string(checked);
        if (failed > 0) d += "; first failure: " + first;
        r.add(name, failed == 0, d);
    }
};

CoordElement contract(const CoordAlgebra& alg, const CoordTensor& t, bool antipode_left) {
    CoordElement out;
    for (const auto& [k, v] : t) {
        CoordElement a(k.first), b(k.second);
        if (antipode_left)
            a = alg.antipode(a);
        else
            b = alg.antipode(b);
        out += alg.multiply(a, b) * v;
    }
    return out;
}

CoordTensor3 delta_left(const CoordAlgebra& alg, const CoordTensor& t) {
    CoordTensor3 out;
    for (const auto& [k, v] : t)
        for (const auto& [k2, v2] : alg.coproduct(CoordElement(k.first))) {
            auto key = std::make_tuple(k2.first, k2.second, k.second);
            out[key] += v * v2;
            if (out[key].is_zero()) out.erase(key);
        }
    return out;
}

CoordTensor3 delta_right(const CoordAlgebra& alg, const CoordTensor& t) {
    CoordTensor3 out;
    for (const auto& [k, v] : t)
        for (const auto& [k2, v2] : alg.coproduct(CoordElement(k.second))) {
            auto key = std::make_tuple(k.first, k2.first, k2.second);
            out[key] += v * v2;
            if (out[key].is_zero()) out.erase(key);
        }
    return out;
}

bool tensor_equal(CoordTensor x, const CoordTensor& y) {
    for (const auto& [k, v] : y) x[k] -= v;
    return std::all_of(x.begin(), x.end(), [](const auto& e) { return e.second.is_zero(); });
}

std::vector<UqWord> generator_words(const RootDatum& rd) {
    std::vector<UqWord> out;
    for (int i = 0; i < rd.rank; ++i) {
        out.push_back(UqWord::e(i));
        out.push_back(UqWord::f(i));
        out.push_back(UqWord::k(i));
    }
    return out;
}

// sum over Delta x of action(x')a * action(x'')b
CoordElement split_action(const CoordAlgebra& alg, const UqWord& x, const CoordElement& a, const CoordElement& b,
                          bool left) {
    CoordElement out;
    for (const auto& [x1, x2, c] : coproduct(x)) {
        CoordElement l = left ? alg.left_action(x1, a) : alg.right_action(x1, a);
        CoordElement r = left ? alg.left_action(x2, b) : alg.right_action(x2, b);
        out += alg.multiply(l, r) * c;
    }
    return out;
}

}  // namespace

Report verify_hopf(const RootDatum& rd, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("verify_hopf: cutoff must be at least 1");
    const CoordAlgebra alg(rd, 2 * cutoff);
    Report rep;
    rep.suite = std::string("hopf:") + (rd.rank == 1 ? "su2" : "su3") + ":cutoff" + std::to_string(cutoff);
    std::vector<CoordElement> gens = alg.fundamental_coeffs();
    std::vector<std::pair<std::string, CoordElement>> samples;
    samples.emplace_back("1", alg.unit());
    for (const auto& g : gens) samples.emplace_back(g.to_string(), g);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size() && cutoff >= 2; ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            pairs.emplace_back(i, j);
            samples.emplace_back("(" + gens[i].to_string() + ")(" + gens[j].to_string() + ")",
                                 alg.multiply(gens[i], gens[j]));
        }

    Tally coassoc{"coassociativity"}, counit_l{"counit (eps x id)"}, counit_r{"counit (id x eps)"},
        anti_l{"antipode m(S x id)D = eps 1"}, anti_r{"antipode m(id x S)D = eps 1"}, star_inv{"star involutive"};
    const CoordElement one = alg.unit();
    for (const auto& [name, t] : samples) {
        CoordTensor d = alg.coproduct(t);
        coassoc.record(delta_left(alg, d) == delta_right(alg, d), name);
        CoordElement l, r;
        for (const auto& [k, v] : d) {
            l += CoordElement(k.second) * (alg.counit(CoordElement(k.first)) * v);
            r += CoordElement(k.first) * (alg.counit(CoordElement(k.second)) * v);
        }
        counit_l.record(l == t, name);
        counit_r.record(r == t, name);
        const CoordElement eps = one * alg.counit(t);
        anti_l.record(contract(alg, d, true) == eps, name);
        anti_r.record(contract(alg, d, false) == eps, name);
        star_inv.record(alg.star(alg.star(t)) == t, name);
    }

    Tally delta_mult{"coproduct multiplicative"}, star_anti{"star anti-multiplicative"},
        eq_right{"equivariance (right action)"}, eq_left{"equivariance (left action)"},
        commute{"left and right actions commute"};
    const std::vector<UqWord> words = generator_words(alg.root_datum());
    for (const auto& [i, j] : pairs) {
        const CoordElement& a = gens[i];
        const CoordElement& b = gens[j];
        const std::string name = "(" + a.to_string() + ", " + b.to_string() + ")";
        const CoordElement ab = alg.multiply(a, b);
        delta_mult.record(tensor_equal(alg.coproduct(ab), alg.tensor_multiply(alg.coproduct(a), alg.coproduct(b))),
                          name);
        star_anti.record(alg.star(ab) == alg.multiply(alg.star(b), alg.star(a)), name);
        for (const auto& x : words) {
            eq_right.record(alg.right_action(x, ab) == split_action(alg, x, a, b, false), x.to_string() + " on " + name);
            eq_left.record(alg.left_action(x, ab) == split_action(alg, x, a, b, true), x.to_string() + " on " + name);
        }
    }
    for (const auto& g : gens)
        for (const auto& x : words)
            for (const auto& y : words)
                commute.record(alg.left_action(x, alg.right_action(y, g)) == alg.right_action(y, alg.left_action(x, g)),
                               x.to_string() + "," + y.to_string() + " on " + g.to_string());

    for (const Tally* t : {&coassoc, &counit_l, &counit_r, &anti_l, &anti_r, &star_inv, &delta_mult, &star_anti,
                           &eq_right, &eq_left, &commute})
        t->flush(rep);
    rep.data["cutoff"] = cutoff;
    rep.data["samples"] = samples.size();
    rep.data["pairs"] = pairs.size();
    return rep;
}

Report verify_su2_relations(Placement p) {
    CoordAlgebra alg = CoordAlgebra::su2();
    Report rep;
    rep.suite = std::string("su2-relations:") + placement_name(p);
    auto g = alg.generators();
    const CoordElement& a = g[0].second;
    const CoordElement& b = g[1].second;
    const CoordElement as = alg.star(a), bs = alg.star(b);
    const QScalar q = QScalar::s_pow(2);
    auto mul = [&](const CoordElement& x, const CoordElement& y) { return alg.multiply(x, y, p); };
    auto check = [&](const std::string& name, const CoordElement& lhs, const CoordElement& rhs) {
        CoordElement diff = lhs - rhs;
        rep.add(name, diff.is_zero(), diff.is_zero() ? "" : "lhs - rhs = " + diff.to_string());
    };
    check("beta alpha = q alpha beta", mul(b, a), mul(a, b) * q);
    check("beta* alpha = q alpha beta*", mul(bs, a), mul(a, bs) * q);
    check("beta beta* = beta* beta", mul(b, bs), mul(bs, b));
    check("alpha alpha* + beta beta* = 1", mul(a, as) + mul(b, bs), alg.unit());
    check("alpha* alpha + q^2 beta* beta = 1", mul(as, a) + mul(bs, b) * (q * q), alg.unit());
    return rep;
}

PlacementAudit audit_placement() {
    PlacementAudit out;
    CoordAlgebra su2 = CoordAlgebra::su2();
    auto g = su2.generators();
    const CoordElement& a = g[0].second;
    const CoordElement& b = g[1].second;
    const QScalar q = QScalar::s_pow(2);
    std::vector<Placement> ok;
    for (Placement p : {Placement::Direct, Placement::Opposite}) {
        bool holds = su2.multiply(b, a, p) == su2.multiply(a, b, p) * q;
        out.report.add(std::string("beta alpha = q alpha beta under ") + placement_name(p) + " placement", true,
                       holds ? "holds" : "does not hold");
        if (holds) ok.push_back(p);
    }
    out.selected = ok.empty() ? kFrozenPlacement : ok.front();
    out.frozen_agrees = ok.size() == 1 && out.selected == kFrozenPlacement;
    out.report.add("audit selects exactly one placement", ok.size() == 1);
    out.report.add("selection equals frozen convention", out.frozen_agrees,
                   std::string("selected ") + placement_name(out.selected) + ", frozen " +
                       placement_name(kFrozenPlacement));
    CoordAlgebra su3 = CoordAlgebra::su3();
    CoordElement t11 = su3.coeff({1, 0}, 0, 0), t12 = su3.coeff({1, 0}, 0, 1);
    out.t11t12_direct = su3.multiply(t11, t12, Placement::Direct);
    out.t11t12_opposite = su3.multiply(t11, t12, Placement::Opposite);
    out.report.suite = "placement-audit";
    out.report.data["selected"] = placement_name(out.selected);
    out.report.data["frozen"] = placement_name(kFrozenPlacement);
    out.report.data["t11*t12 direct"] = out.t11t12_direct.to_string();
    out.report.data["t11*t12 opposite"] = out.t11t12_opposite.to_string();
    return out;
}

Report verify_su3_relations(Placement p) {
    CoordAlgebra alg = CoordAlgebra::su3();
    Report rep;
    rep.suite = std::string("su3-relations:") + placement_name(p);
    CoordElement t[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = alg.coeff({1, 0}, i, j);
    auto mul = [&](const CoordElement& x, const CoordElement& y) { return alg.multiply(x, y, p); };
    auto nm = [](int i, int j) { return "t" + std::to_string(i + 1) + std::to_string(j + 1); };
    const QScalar q = QScalar::s_pow(2);
    nlohmann::ordered_json fam;
    auto run = [&](const std::string& name, const std::function<void(std::vector<std::string>&, std::size_t&)>& body) {
        std::vector<std::string> failures;
        std::size_t checked = 0;
        body(failures, checked);
        rep.add(name, failures.empty() && checked > 0,
                std::to_string(checked - failures.size()) + "/" + std::to_string(checked));
        fam[name] = {{"checked", checked}, {"failed", failures}};
    };
    run("t_ij t_ik = q t_ik t_ij (j<k)", [&](auto& fails, auto& n) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = j + 1; k < 3; ++k, ++n)
                    if (!(mul(t[i][j], t[i][k]) == mul(t[i][k], t[i][j]) * q)) fails.push_back(nm(i, j) + " " + nm(i, k));
    });
    run("t_ik t_jk = q t_jk t_ik (i<j)", [&](auto& fails, auto& n) {
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j, ++n)
                    if (!(mul(t[i][k], t[j][k]) == mul(t[j][k], t[i][k]) * q)) fails.push_back(nm(i, k) + " " + nm(j, k));
    });
    run("t_ij t_kl = t_kl t_ij (i<k, j>l)", [&](auto& fails, auto& n) {
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < j; ++l, ++n)
                        if (!(mul(t[i][j], t[k][l]) == mul(t[k][l], t[i][j]))) fails.push_back(nm(i, j) + " " + nm(k, l));
    });
    run("[t_ij, t_kl] = (q - q^-1) t_il t_kj (i<k, j<l)", [&](auto& fails, auto& n) {
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int l = j + 1; l < 3; ++l, ++n) {
                        CoordElement lhs = mul(t[i][j], t[k][l]) - mul(t[k][l], t[i][j]);
                        CoordElement rhs = mul(t[i][l], t[k][j]) * (q - q.inv());
                        if (!(lhs == rhs)) fails.push_back(nm(i, j) + " " + nm(k, l));
                    }
    });
    CoordElement u = mul(alg.star(t[2][2]), t[2][2]) + mul(alg.star(t[2][1]), t[2][1]) * QScalar::s_pow(-4) +
                     mul(alg.star(t[2][0]), t[2][0]) * QScalar::s_pow(-8);
    CoordElement diff = u - alg.unit();
    rep.add("1 = t*33 t33 + q^-2 t*32 t32 + q^-4 t*31 t31", diff.is_zero(),
            diff.is_zero() ? "" : "rhs - 1 = " + diff.to_string());
    rep.data["families"] = fam;
    rep.data["placement"] = placement_name(p);
    return rep;
}

std::vector<MatrixCoeff> gns_basis(const RootDatum& rd, int cutoff) {
    std::vector<Weight> ws;
    if (rd.rank == 1) {
        for (int a = 0; a <= cutoff; ++a) ws.push_back({a});
    } else {
        for (int a = 0; a <= cutoff; ++a)
            for (int b = 0; b <= cutoff; ++b) ws.push_back({a, b});
    }
    std::stable_sort(ws.begin(), ws.end(), [](const Weight& x, const Weight& y) {
        int sx = 0, sy = 0;
        for (int v : x) sx += v;
        for (int v : y) sy += v;
        return sx < sy;
    });
    std::vector<MatrixCoeff> out;
    for (const auto& w : ws) {
        const int d = static_cast<int>(irrep(rd, w).dim());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out.push_back({w, i, j});
    }
    return out;
}

GnsMatrix gns_matrix(const RootDatum& rd, const CoordElement& t, int cutoff) {
    GnsMatrix g;
    g.basis = gns_basis(rd, cutoff);
    std::map<MatrixCoeff, std::size_t> index;
    for (std::size_t i = 0; i < g.basis.size(); ++i) index[g.basis[i]] = i;
    const std::size_t n = g.basis.size();
    g.m = Matrix(n, n);
    g.overflow.assign(n, false);
    CoordAlgebra alg(rd, cutoff + std::max(t.max_label(), 0));
    for (std::size_t j = 0; j < n; ++j) {
        CoordElement col = alg.multiply(t, CoordElement(g.basis[j]));
        for (const auto& [c, v] : col.terms) {
            auto it = index.find(c);
            if (it == index.end())
                g.overflow[j] = true;
            else
                g.m(it->second, j) = v;
        }
    }
    return g;
}

}  // namespace qorb
