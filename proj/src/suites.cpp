#include "qorb/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>

#include "qorb/crossedprod.hpp"
#include "qorb/equivariant.hpp"
#include "qorb/sampler.hpp"
#include "qorb/spin.hpp"

#ifndef QORB_DATA_DIR
#define QORB_DATA_DIR "data"
#endif

namespace qorb {

namespace {

using json = nlohmann::ordered_json;

const RootDatum& group_of(const RunConfig& cfg, const std::string& fallback) {
    const std::string g = cfg.group.empty() ? fallback : cfg.group;
    if (g == "su2") return RootDatum::A1();
    if (g == "su3") return RootDatum::A2();
    throw std::invalid_argument("unknown group " + g + " (expected su2 or su3)");
}

int or_default(int v, int d) { return v < 0 ? d : v; }

Report uq_relations() {
    Report r;
    r.suite = "uq-relations";
    for (const char* n : {"su3:λ1", "su3:λ1v", "su3:λ2"}) {
        Rep rep = builtin_rep(n);
        r.merge(verify_defining_relations(rep), std::string(n) + " ");
        r.add(std::string(n) + " is a *-module", is_star_rep(rep));
    }
    return r;
}

QScalar golden_symbol(const std::string& s) {
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg ? s.substr(1) : s;
    QScalar v;
    if (body == "a")
        v = (QScalar::s_pow(2) / q_int(2)).sqrt();
    else if (body == "b")
        v = (QScalar::s_pow(2) * q_int(2)).inv().sqrt();
    else if (body == "1")
        v = QScalar(1);
    else
        throw std::invalid_argument("golden file: unknown value " + s);
    return neg ? -v : v;
}

Report cg_golden(const std::string& path) {
    Report r;
    r.suite = "cg-golden";
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read golden file " + path);
    json g = json::parse(in);
    const RootDatum& a2 = RootDatum::A2();
    const Weight l1{1, 0};
    for (const auto& blk : g.at("blocks")) {
        Weight kappa = blk.at("kappa").get<Weight>();
        const int sign = blk.at("sign").get<int>();
        std::map<int, int> label;
        for (const auto& [k, v] : blk.at("label_map").items()) label[std::stoi(k)] = v.get<int>();
        std::map<std::tuple<int, int, int>, QScalar> want;
        for (const auto& e : blk.at("entries")) {
            int k = e[2].get<int>();
            if (label.count(k)) k = label[k];
            want[{e[0].get<int>(), e[1].get<int>(), k}] = golden_symbol(e[3].get<std::string>()) * QScalar(sign);
        }
        const int dk = static_cast<int>(irrep(a2, kappa).dim());
        int nonzero_ok = 0, zero_ok = 0, total_nonzero = 0, total_zero = 0;
        std::string first;
        for (int m = 1; m <= 3; ++m)
            for (int m2 = 1; m2 <= 3; ++m2)
                for (int k = 1; k <= dk; ++k) {
                    QScalar got = clebsch_gordan(a2, l1, l1, kappa, m, m2, k);
                    auto it = want.find({m, m2, k});
                    bool ok;
                    if (it == want.end()) {
                        ++total_zero;
                        ok = got.is_zero();
                        zero_ok += ok;
                    } else {
                        ++total_nonzero;
                        ok = got == it->second;
                        nonzero_ok += ok;
                    }
                    if (!ok && first.empty())
                        first = "(" + std::to_string(m) + "," + std::to_string(m2) + "," + std::to_string(k) +
                                ") = " + got.to_string();
                }
        const std::string name = blk.at("name").get<std::string>();
        r.add(name + " nonzero coefficients", nonzero_ok == total_nonzero,
              std::to_string(nonzero_ok) + "/" + std::to_string(total_nonzero) + (first.empty() ? "" : "; " + first));
        r.add(name + " remaining entries zero", zero_ok == total_zero,
              std::to_string(zero_ok) + "/" + std::to_string(total_zero));
        r.data["signs"][name] = sign;
    }
    r.data["golden"] = path;
    return r;
}

Report prop5(int kbox) {
    Report r;
    r.suite = "prop5";
    FamilyScan s = scan_su3_family(kbox);
    r.add("no false accepts", s.false_accepts == 0, std::to_string(s.false_accepts));
    r.add("no false rejects", s.false_rejects == 0, std::to_string(s.false_rejects));
    r.add("every boxed family member is valid", s.box_members_valid == s.box_members && s.box_members > 0,
          std::to_string(s.box_members_valid) + "/" + std::to_string(s.box_members));
    RVec half{mpq_class(1, 2), mpq_class(0)};
    Validation v = validate_action(RootDatum::A2(), {FactorAction{half, RVec{0, 0}}}, GroupSpec{{CircleFactor{0}}});
    r.add("y1 = (1/2, 0) rejected with a certificate", !v.valid && !v.certificate.empty(), v.certificate);
    r.data["kbox"] = kbox;
    r.data["grid_points"] = s.grid_points;
    r.data["brute_valid"] = s.brute_valid;
    r.data["family_members"] = s.family_members;
    r.data["box_members"] = s.box_members;
    r.data["certificate"] = v.certificate;
    return r;
}

Report adjoint_table() {
    Report r;
    r.suite = "adjoint-table";
    ActionSpec a = action_preset("su3-adjoint");
    const std::map<std::pair<int, int>, std::pair<int, int>> want{
        {{1, 1}, {0, 0}},  {{2, 2}, {0, 0}}, {{3, 3}, {0, 0}},   {{1, 2}, {2, -1}}, {{1, 3}, {1, 1}},
        {{2, 1}, {-2, 1}}, {{2, 3}, {-1, 2}}, {{3, 1}, {-1, -1}}, {{3, 2}, {1, -2}}};
    for (const auto& [ij, c] : want) {
        Charge got = charge_of(a, MatrixCoeff{{1, 0}, ij.first - 1, ij.second - 1});
        Charge exp{mpq_class(c.first), mpq_class(c.second)};
        const std::string n = "t" + std::to_string(ij.first) + std::to_string(ij.second);
        r.add(n + " charge " + charge_str(exp), got == exp, charge_str(got));
        r.data["charges"][n] = charge_str(got);
    }
    return r;
}

Report spin_suite(int window) {
    Report r;
    r.suite = "spin-examples";
    r.merge(verify_spinor(RootDatum::A1()), "su2 ");
    r.merge(verify_spinor(RootDatum::A2()), "su3 ");
    Report ex = spin_examples(window);
    r.merge(ex);
    r.data["window"] = window;
    return r;
}

Report dirac_suite(const RootDatum& rd, const std::vector<int>& lambdas) {
    Report r;
    r.suite = "dirac";
    std::vector<Weight> ws;
    for (int l : lambdas) ws.push_back(rd.rank == 1 ? Weight{l} : Weight{l, 0});
    for (const auto& b : dirac_blocks(rd, ws)) {
        const std::string n = "lambda " + weight_str(b.lambda);
        r.add(n + " self-adjoint", b.hermiticity <= 1e-10, std::to_string(b.hermiticity));
        r.add(n + " commutes with the lifted Cartan action", b.commutation <= 1e-9, std::to_string(b.commutation));
        r.add(n + " spectrum agrees with the general eigensolver", b.solver_gap <= 1e-9, std::to_string(b.solver_gap));
        r.data["spectra"][weight_str(b.lambda)] = b.spectrum;
    }
    r.data["note"] = "quantum block spectra are taken equal to these classical spectra by isospectrality";
    return r;
}

CrossedElement random_crossed(const CrossedProduct& cp, std::mt19937& rng) {
    const auto group = cp.group();
    auto basis = cp.algebra().fundamental_coeffs();
    basis.push_back(cp.algebra().unit());
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1), pick_t(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(1, 3), terms(1, 2);
    CrossedElement e;
    for (int n = terms(rng); n > 0; --n) e += cp.element(group[pick_g(rng)], basis[pick_t(rng)] * QScalar(coef(rng)));
    return e;
}

Report crossed_suite(const std::string& preset, int cutoff, unsigned seed) {
    Report r;
    r.suite = "crossed " + preset;
    ActionSpec a = action_preset(preset);
    CrossedProduct cp(a, 2 * cutoff);
    std::mt19937 rng(seed);
    auto tally = [&](const std::string& name, int n, const std::function<bool()>& body) {
        int ok = 0;
        for (int i = 0; i < n; ++i) ok += body();
        r.add(name, ok == n, std::to_string(ok) + "/" + std::to_string(n));
    };
    tally("associativity", 100, [&] {
        CrossedElement x = random_crossed(cp, rng), y = random_crossed(cp, rng), z = random_crossed(cp, rng);
        return cp.multiply(cp.multiply(x, y), z) == cp.multiply(x, cp.multiply(y, z));
    });
    tally("star involutive", 50, [&] {
        CrossedElement x = random_crossed(cp, rng);
        return cp.star(cp.star(x)) == x;
    });
    tally("star anti-multiplicative", 50, [&] {
        CrossedElement x = random_crossed(cp, rng), y = random_crossed(cp, rng);
        return cp.star(cp.multiply(x, y)) == cp.multiply(cp.star(y), cp.star(x));
    });
    {
        int ok = 0, n = 0;
        for (const auto& g : cp.group())
            for (const auto& t : cp.algebra().fundamental_coeffs()) {
                ++n;
                CrossedElement lhs =
                    cp.multiply(cp.multiply(cp.group_element(g), cp.embed(t)), cp.group_element(cp.inverse(g)));
                ok += lhs == cp.embed(cp.act(g, t));
            }
        r.add("covariance (s.1)(e.t)(s^-1.1) = e.(s|>t)", ok == n, std::to_string(ok) + "/" + std::to_string(n));
    }
    tally("varpi multiplicative on non-overflow columns", 20, [&] {
        CrossedElement x = random_crossed(cp, rng), y = random_crossed(cp, rng);
        VarpiMatrix vx = cp.varpi(x, cutoff), vy = cp.varpi(y, cutoff), vxy = cp.varpi(cp.multiply(x, y), cutoff);
        Matrix prod = vx.m * vy.m;
        for (std::size_t j = 0; j < vy.basis.size(); ++j) {
            if (vy.overflow[j]) continue;
            for (std::size_t i = 0; i < vy.basis.size(); ++i)
                if (!(prod(i, j) == vxy.m(i, j))) return false;
        }
        return true;
    });
    {
        bool ok = true;
        for (const auto& t : cp.algebra().fundamental_coeffs())
            ok = ok && cp.varpi(cp.embed(t), cutoff).m == gns_matrix(*a.rd, t, cutoff).m;
        ok = ok && cp.varpi(cp.unit(), cutoff).m == Matrix::identity(gns_basis(*a.rd, cutoff).size());
        r.add("identity slice equals the GNS matrices", ok);
    }
    Report f = check_effective_faithful(a, 1);
    r.merge(f);
    r.data["cutoff"] = cutoff;
    r.data["faithfulness"] = f.data;
    return r;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

Report scalar_suite(int n, const std::vector<double>& qs, unsigned seed) {
    Report r;
    r.suite = "scalars";
    ScalarSampler gen(seed);
    int assoc = 0, comm = 0, dist = 0, ident = 0, inv = 0, conj = 0;
    for (int i = 0; i < n; ++i) {
        QScalar a = gen.sample(), b = gen.sample(), c = gen.sample();
        assoc += (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c);
        comm += a * b == b * a && a + b == b + a;
        dist += a * (b + c) == a * b + a * c;
        ident += a * QScalar(1) == a && a + QScalar() == a && (a - a).is_zero();
        // single-term inverses every time, a multi-term one every tenth case
        QScalar x = i % 10 == 0 ? a : gen.atom();
        inv += x.is_zero() || x * x.inv() == QScalar(1);
        conj += (a * b).conj() == a.conj() * b.conj() && a.conj().conj() == a;
    }
    const std::string of = "/" + std::to_string(n);
    r.add("associativity", assoc == n, std::to_string(assoc) + of);
    r.add("commutativity", comm == n, std::to_string(comm) + of);
    r.add("distributivity", dist == n, std::to_string(dist) + of);
    r.add("identities and negation", ident == n, std::to_string(ident) + of);
    r.add("multiplicative inverse", inv == n, std::to_string(inv) + of);
    r.add("conjugation is an involutive automorphism", conj == n, std::to_string(conj) + of);
    for (double q : qs) {
        double worst = 0;
        int ok = 0;
        ScalarSampler hg(seed + 1);
        for (int i = 0; i < n; ++i) {
            QScalar a = hg.sample(), b = hg.sample();
            Complex ea = a.eval(q), eb = b.eval(q);
            double e = std::max({rel_err((a * b).eval(q), ea * eb), rel_err((a + b).eval(q), ea + eb),
                                 rel_err(a.conj().eval(q), std::conj(ea))});
            worst = std::max(worst, e);
            ok += e <= 1e-12;
        }
        r.add("evaluation homomorphism at q = " + std::to_string(q).substr(0, 3), ok == n,
              std::to_string(ok) + of + ", worst " + std::to_string(worst));
    }
    r.data["cases"] = n;
    r.data["tolerance"] = 1e-12;
    return r;
}

Report chern_suite(const std::string& preset, const std::string& projector, const std::vector<int>& degrees) {
    ActionSpec a = action_preset(preset);
    EquivariantProjector p = projector_preset(projector, a);
    return chern_report(p, degrees);
}

}  // namespace

std::string default_golden_path() { return std::string(QORB_DATA_DIR) + "/cg_golden.json"; }

std::vector<std::string> suite_names() {
    return {"uq-relations", "hopf",   "su2-relations", "su3-relations", "cg-golden", "prop5", "adjoint-table",
            "spin-examples", "dirac", "crossed",       "chern",         "scalars"};
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    if (name == "uq-relations") {
        r = uq_relations();
    } else if (name == "hopf") {
        const RootDatum& rd = group_of(cfg, "su2");
        r = verify_hopf(rd, or_default(cfg.cutoff, 2));
        r.suite = "hopf " + rd.name;
    } else if (name == "su2-relations") {
        r = verify_su2_relations();
        r.suite = "su2-relations";
    } else if (name == "su3-relations") {
        PlacementAudit audit = audit_placement();
        r = verify_su3_relations();
        r.suite = "su3-relations";
        r.data["audit"] = audit.report.data;
        r.data["audit"]["frozen_agrees"] = audit.frozen_agrees;
        Report opposite = verify_su3_relations(Placement::Opposite);
        for (const auto& c : opposite.checks) r.data["opposite_placement"][c.name] = c.detail.empty() ? (c.pass ? "pass" : "fail") : c.detail;
    } else if (name == "cg-golden") {
        r = cg_golden(cfg.golden.empty() ? default_golden_path() : cfg.golden);
    } else if (name == "prop5") {
        r = prop5(or_default(cfg.kbox, 2));
    } else if (name == "adjoint-table") {
        r = adjoint_table();
    } else if (name == "spin-examples") {
        r = spin_suite(or_default(cfg.window, 5));
    } else if (name == "dirac") {
        r = dirac_suite(group_of(cfg, "su2"), cfg.lambdas.empty() ? std::vector<int>{0, 1, 2} : cfg.lambdas);
    } else if (name == "crossed") {
        r = crossed_suite(cfg.preset.empty() ? "teardrop:1,3:p=3" : cfg.preset, or_default(cfg.cutoff, 2), cfg.seed);
    } else if (name == "chern") {
        r = chern_suite(cfg.preset.empty() ? "teardrop:1,3" : cfg.preset,
                        cfg.projector.empty() ? "su2-column" : cfg.projector,
                        cfg.degrees.empty() ? std::vector<int>{0, 1} : cfg.degrees);
    } else if (name == "scalars") {
        r = scalar_suite(or_default(cfg.samples, 1000), cfg.qs.empty() ? std::vector<double>{0.3, 0.5, 0.9} : cfg.qs,
                         cfg.seed);
    } else {
        throw std::invalid_argument("unknown suite " + name);
    }
    r.data["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace qorb
