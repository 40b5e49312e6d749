#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qorb/crossedprod.hpp"
#include "qorb/equivariant.hpp"
#include "qorb/json_io.hpp"
#include "qorb/spin.hpp"
#include "qorb/suites.hpp"

using namespace qorb;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw UsageError("not an integer: " + s);
    return v;
}

// "0,2,5" or "0..3"
std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int a = to_int(s.substr(0, dots)), b = to_int(s.substr(dots + 2));
        for (int i = a; i <= b; ++i) out.push_back(i);
        return out;
    }
    for (const auto& p : split(s, ',')) out.push_back(to_int(p));
    return out;
}

RVec rational_list(const std::string& s) {
    RVec out;
    for (const auto& p : split(s, ',')) {
        mpq_class r;
        if (r.set_str(p, 10) != 0) throw UsageError("not a rational: " + p);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

const RootDatum& group_named(const std::string& g) {
    if (g == "su2") return RootDatum::A1();
    if (g == "su3") return RootDatum::A2();
    throw UsageError("unknown group " + g + " (expected su2 or su3)");
}

// A generator name (alpha, beta, t11 ... t33), optionally followed by '*',
// "unit", or JSON: one {lambda, mu, nu, scalar} term or a list of them.
CoordElement parse_element(const CoordAlgebra& alg, const std::string& s) {
    if (!s.empty() && s[0] == '[') return coord_from_json(json::parse(s));
    if (!s.empty() && s[0] == '{') return coord_from_json(json::array({json::parse(s)}));
    if (s == "unit" || s == "1") return alg.unit();
    bool star = !s.empty() && s.back() == '*';
    std::string base = star ? s.substr(0, s.size() - 1) : s;
    for (const auto& [name, x] : alg.generators())
        if (name == base) return star ? alg.star(x) : x;
    throw UsageError("unknown element " + s);
}

json coord_json(const CoordElement& x, double q) {
    json j = to_json(x);
    if (q > 0)
        for (auto& t : j) {
            QScalar v = scalar_from_json(t["scalar"]);
            Complex c = v.eval(q);
            t["value_at_q"] = {c.real(), c.imag()};
        }
    return j;
}

json scalar_json(const QScalar& v, double q) {
    json j = {{"scalar", to_json(v)}, {"text", v.to_string()}};
    if (q > 0) {
        Complex c = v.eval(q);
        j["value_at_q"] = {c.real(), c.imag()};
    }
    return j;
}

UqWord parse_word(const std::string& s) {
    UqWord w;
    for (const auto& tok : split(s, ' ')) {
        int kind;
        std::string idx;
        if (tok.rfind("kinv", 0) == 0) {
            kind = 3;
            idx = tok.substr(4);
        } else if (!tok.empty() && (tok[0] == 'e' || tok[0] == 'f' || tok[0] == 'k')) {
            kind = tok[0] == 'e' ? 0 : tok[0] == 'f' ? 1 : 2;
            idx = tok.substr(1);
        } else {
            throw UsageError("bad letter " + tok + " (use e1, f2, k1, kinv2, ...)");
        }
        w.letters.push_back({kind, to_int(idx) - 1});
    }
    return w;
}

// "1,0:alpha" -> residues and element; a bare element sits at the identity.
CrossedElement parse_crossed(const CrossedProduct& cp, const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || (!s.empty() && (s[0] == '[' || s[0] == '{'))) return cp.embed(parse_element(cp.algebra(), s));
    std::vector<long> res;
    for (int v : int_list(s.substr(0, colon))) res.push_back(v);
    return cp.element(res, parse_element(cp.algebra(), s.substr(colon + 1)));
}

json crossed_json(const CrossedElement& x, double q) {
    json out = json::array();
    for (const auto& [g, t] : x.terms) out.push_back({{"group", g}, {"element", coord_json(t, q)}});
    return out;
}

json report_json(const Report& r) { return r.to_json(); }

json monomial_json(const ActionSpec& a, const Monomial& m, const QScalar& v) {
    json j;
    j["coefficient"] = v.to_string();
    json f = json::array(), ch = json::array();
    for (const auto& t : m) {
        f.push_back(coeff_str(t));
        ch.push_back(charge_str(charge_of(a, t)));
    }
    j["factors"] = f;
    j["charges"] = ch;
    j["total"] = charge_str(total_charge(a, m));
    return j;
}

struct Output {
    std::string path;
    void emit(const json& j) const {
        if (path.empty()) {
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write " + path);
        out << j.dump(2) << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum orbifold toolkit for C[SU(2)_q] and C[SU(3)_q]"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out", out.path, "write JSON here instead of stdout");
    int code = 0;

    // verify
    RunConfig cfg;
    std::string suite, lambdas, degrees, qs;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--group", cfg.group, "su2 or su3");
    verify->add_option("--preset", cfg.preset, "action preset");
    verify->add_option("--projector", cfg.projector, "projector preset (chern)");
    verify->add_option("--golden", cfg.golden, "CG golden file")->check(CLI::ExistingFile);
    verify->add_option("--cutoff", cfg.cutoff, "weight cutoff")->check(CLI::NonNegativeNumber);
    verify->add_option("--kbox", cfg.kbox, "k range for prop5")->check(CLI::NonNegativeNumber);
    verify->add_option("--window", cfg.window, "twist window for spin-examples")->check(CLI::NonNegativeNumber);
    verify->add_option("--lambda", lambdas, "Dynkin labels for dirac, e.g. 0..2");
    verify->add_option("--degree", degrees, "Chern degrees 2k, e.g. 0,2");
    verify->add_option("--q", qs, "evaluation points for scalars, e.g. 0.3,0.5");
    verify->add_option("--samples", cfg.samples, "random cases for scalars")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->callback([&] {
        if (!lambdas.empty()) cfg.lambdas = int_list(lambdas);
        for (int d : degrees.empty() ? std::vector<int>{} : int_list(degrees)) {
            if (d % 2 != 0) throw UsageError("Chern degrees are even");
            cfg.degrees.push_back(d / 2);
        }
        for (const auto& p : split(qs, ',')) cfg.qs.push_back(std::stod(p));
        Report r = run_suite(suite, cfg);
        out.emit(report_json(r));
        code = r.all_pass() ? 0 : 1;
    });

    // mul, pair
    std::string group = "su2";
    int cutoff = 4;
    double q = 0;
    std::vector<std::string> elements;
    auto* mul = app.add_subcommand("mul", "multiply coordinate elements");
    mul->add_option("--group", group, "su2 or su3");
    mul->add_option("--cutoff", cutoff, "weight cutoff")->check(CLI::NonNegativeNumber);
    mul->add_option("--q", q, "also evaluate at this q in (0,1)");
    mul->add_option("elements", elements, "generator names (alpha, beta*, t12, unit) or JSON term lists")->required();
    mul->callback([&] {
        CoordAlgebra alg(group_named(group), cutoff);
        std::vector<CoordElement> factors;
        for (const auto& e : elements) factors.push_back(parse_element(alg, e));
        out.emit({{"product", coord_json(alg.multiply(factors), q)}});
    });

    std::string word, element;
    auto* pair = app.add_subcommand("pair", "Hopf pairing <x, t>");
    pair->add_option("--group", group, "su2 or su3");
    pair->add_option("--q", q, "also evaluate at this q");
    pair->add_option("--word", word, "U_q word, e.g. \"e1 k1 f1\"")->required();
    pair->add_option("element", element, "coordinate element")->required();
    pair->callback([&] {
        CoordAlgebra alg(group_named(group), cutoff);
        out.emit({{"pairing", scalar_json(alg.pair(parse_element(alg, element), parse_word(word)), q)}});
    });

    // act, invariants, actions
    std::string preset, residues, turns;
    auto* act = app.add_subcommand("act", "charge of an element and its image under a group element");
    act->add_option("--preset", preset, "action preset")->required();
    act->add_option("--element", element, "coordinate element")->required();
    act->add_option("--residues", residues, "finite group element, e.g. 1 or 2,0");
    act->add_option("--turns", turns, "group element as rational turns, e.g. 1/4,0");
    act->callback([&] {
        ActionSpec a = action_preset(preset);
        CoordAlgebra alg(*a.rd, 8);
        CoordElement x = parse_element(alg, element);
        json j;
        j["preset"] = a.name;
        j["element"] = coord_json(x, 0);
        auto c = charge_of(a, x);
        j["charge"] = c ? json(charge_str(*c)) : json(nullptr);
        if (c) j["invariant"] = is_invariant_charge(a.group, *c);
        if (!residues.empty() || !turns.empty()) {
            GroupElement g;
            if (!residues.empty()) {
                std::vector<long> r;
                for (int v : int_list(residues)) r.push_back(v);
                g = element_from_residues(a.group, r);
            } else {
                g.turns = rational_list(turns);
            }
            j["image"] = coord_json(qorb::act(a, g, x), 0);
        }
        out.emit(j);
    });

    int inv_cutoff = 3;
    auto* invariants = app.add_subcommand("invariants", "invariant basis coefficients below a cutoff");
    invariants->add_option("--preset", preset, "action preset")->required();
    invariants->add_option("--cutoff", inv_cutoff, "weight cutoff")->check(CLI::NonNegativeNumber);
    invariants->callback([&] {
        ActionSpec a = action_preset(preset);
        json list = json::array();
        for (const auto& t : invariant_basis(a, inv_cutoff))
            list.push_back({{"coeff", coeff_str(t)}, {"lambda", t.lambda}, {"mu", t.mu}, {"nu", t.nu},
                            {"charge", charge_str(charge_of(a, t))}});
        out.emit({{"preset", a.name}, {"cutoff", inv_cutoff}, {"count", list.size()}, {"invariants", list}});
    });

    auto* actions = app.add_subcommand("actions", "su3 family tools");
    actions->require_subcommand(1);
    std::string xlist = "0,1,2";
    int kbox = 1, order = 0;
    auto* enumerate = actions->add_subcommand("enumerate", "list family members in a k-box");
    enumerate->add_option("--x", xlist, "x values");
    enumerate->add_option("--kbox", kbox, "k range")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--order", order, "restrict to Z_p (0 = circle)")->check(CLI::NonNegativeNumber);
    enumerate->callback([&] {
        auto list = enumerate_su3_actions(int_list(xlist), kbox, order);
        json j = json::array();
        for (const auto& a : list) {
            json y1 = json::array(), y2 = json::array();
            for (const auto& v : a.y[0].y1) y1.push_back(v.get_str());
            for (const auto& v : a.y[0].y2) y2.push_back(v.get_str());
            j.push_back({{"name", a.name}, {"y1", y1}, {"y2", y2}, {"valid", validate_action(a).valid}});
        }
        out.emit({{"count", j.size()}, {"actions", j}});
    });
    std::string y1s, y2s;
    auto* validate = actions->add_subcommand("validate", "check periodicity of an explicit su3 action");
    validate->add_option("--y1", y1s, "rationals, e.g. 1/2,0")->required();
    validate->add_option("--y2", y2s, "rationals")->required();
    validate->add_option("--order", order, "restrict to Z_p (0 = circle)")->check(CLI::NonNegativeNumber);
    validate->callback([&] {
        FactorAction fa{rational_list(y1s), rational_list(y2s)};
        Validation v = validate_action(RootDatum::A2(), {fa}, GroupSpec{{CircleFactor{order}}});
        auto fx = su3_family_x(fa);
        out.emit({{"valid", v.valid},
                  {"certificate", v.certificate},
                  {"family_x", fx ? json(*fx) : json(nullptr)}});
        code = v.valid ? 0 : 1;
    });

    // crossed
    auto* crossed = app.add_subcommand("crossed", "crossed product C[K x| G_q] for finite K");
    crossed->require_subcommand(1);
    int cp_cutoff = 2;
    std::string left, right;
    auto* cmul = crossed->add_subcommand("mul", "(s1 . t1)(s2 . t2)");
    cmul->add_option("--preset", preset, "action preset with finite group")->required();
    cmul->add_option("--cutoff", cp_cutoff, "weight cutoff")->check(CLI::NonNegativeNumber);
    cmul->add_option("left", left, "residues:element, e.g. 1:alpha")->required();
    cmul->add_option("right", right, "residues:element")->required();
    cmul->callback([&] {
        CrossedProduct cp(action_preset(preset), 2 * cp_cutoff);
        out.emit({{"product", crossed_json(cp.multiply(parse_crossed(cp, left), parse_crossed(cp, right)), 0)}});
    });
    auto* table = crossed->add_subcommand("table", "products of all s . t with t a unit or fundamental coefficient");
    table->add_option("--preset", preset, "action preset with finite group")->required();
    table->add_option("--cutoff", cp_cutoff, "weight cutoff")->check(CLI::NonNegativeNumber);
    table->callback([&] {
        CrossedProduct cp(action_preset(preset), 2 * std::max(cp_cutoff, 1));
        std::vector<std::pair<std::string, CoordElement>> basis{{"unit", cp.algebra().unit()}};
        for (const auto& g : cp.algebra().generators()) basis.push_back(g);
        json rows = json::array();
        for (const auto& g : cp.group())
            for (const auto& [n1, t1] : basis)
                for (const auto& h : cp.group())
                    for (const auto& [n2, t2] : basis) {
                        CrossedElement p = cp.multiply(cp.element(g, t1), cp.element(h, t2));
                        rows.push_back({{"left", residues_str(g) + "." + n1},
                                        {"right", residues_str(h) + "." + n2},
                                        {"product", crossed_json(p, 0)}});
                    }
        out.emit({{"preset", cp.action().name}, {"entries", rows.size()}, {"table", rows}});
    });

    // spin, dirac
    auto* spin = app.add_subcommand("spin", "spin lifts");
    spin->require_subcommand(1);
    std::string twists, target = "spinor";
    int family_x = -1;
    auto* check = spin->add_subcommand("check", "lift check for an action and central twists");
    check->add_option("--preset", preset, "action preset")->required();
    check->add_option("--x", family_x, "replace the action by the su3 family member with this x and k = 0")
        ->check(CLI::Range(0, 2));
    check->add_option("--twists", twists, "one integer per chirality block (per factor)");
    check->add_option("--target", target, "spinor or fundamental")->check(CLI::IsMember({"spinor", "fundamental"}));
    check->callback([&] {
        ActionSpec a = action_preset(preset);
        if (family_x >= 0) {
            if (a.rd->rank != 2) throw UsageError("--x needs an su3 preset");
            a = action_preset("su3-family:" + std::to_string(family_x) + ",0,0,0,0");
        }
        SpinLift l = spin_lift_check(a, twists.empty() ? std::vector<int>{} : int_list(twists),
                                     target == "spinor" ? LiftTarget::Spinor : LiftTarget::Fundamental);
        json j{{"action", a.name},           {"target", target},
               {"pass", l.pass},             {"periodic", l.periodic},
               {"homomorphism_residual", l.homomorphism_residual},
               {"conjugation_residual", l.conjugation_residual},
               {"detail", l.detail}};
        if (!l.periodic) j["violation"] = {{"factor", l.factor}, {"block", l.block}, {"eigenvalue", l.eigenvalue}};
        out.emit(j);
        code = l.pass ? 0 : 1;
    });

    auto* dirac = app.add_subcommand("dirac", "classical Dirac blocks");
    dirac->require_subcommand(1);
    std::string dl = "0..2";
    auto* spectrum = dirac->add_subcommand("spectrum", "sorted eigenvalues of D on M_lambda x Sigma");
    spectrum->add_option("--group", group, "su2 or su3");
    spectrum->add_option("--lambda", dl, "Dynkin labels (su2: 2j; su3: first label), e.g. 0..3");
    spectrum->callback([&] {
        const RootDatum& rd = group_named(group);
        std::vector<Weight> ws;
        for (int l : int_list(dl)) ws.push_back(rd.rank == 1 ? Weight{l} : Weight{l, 0});
        json blocks = json::array();
        bool ok = true;
        for (const auto& b : dirac_blocks(rd, ws)) {
            blocks.push_back({{"lambda", b.lambda},
                              {"spectrum", b.spectrum},
                              {"hermiticity", b.hermiticity},
                              {"commutation", b.commutation},
                              {"solver_gap", b.solver_gap}});
            ok = ok && b.hermiticity <= 1e-10 && b.commutation <= 1e-9 && b.solver_gap <= 1e-9;
        }
        out.emit({{"group", group}, {"blocks", blocks}});
        code = ok ? 0 : 1;
    });

    // chern
    std::string projector = "su2-column", action = "teardrop:1,3", chern_degrees = "0,2";
    auto* chern = app.add_subcommand("chern", "Chern characters of an equivariant projector");
    chern->add_option("--preset", projector, "projector preset: su2-column[:n], su3-column[:n], trivial:n");
    chern->add_option("--action", action, "action preset");
    chern->add_option("--degree", chern_degrees, "even degrees 2k");
    chern->callback([&] {
        ActionSpec a = action_preset(action);
        EquivariantProjector p = projector_preset(projector, a);
        std::vector<int> ks;
        for (int d : int_list(chern_degrees)) {
            if (d % 2 != 0 || d < 0) throw UsageError("Chern degrees are even and nonnegative");
            ks.push_back(d / 2);
        }
        Report r = chern_report(p, ks);
        json chains = json::object();
        for (int k : ks) {
            Chain c = chern_character(p, k);
            json mons = json::array();
            for (const auto& [m, v] : c.terms) mons.push_back(monomial_json(a, m, v));
            chains["ch_" + std::to_string(2 * k)] = mons;
        }
        json j = report_json(r);
        j["chains"] = chains;
        out.emit(j);
        code = r.all_pass() ? 0 : 1;
    });

    auto* presets = app.add_subcommand("presets", "list presets and suites");
    presets->callback([&] {
        out.emit({{"actions", action_preset_names()},
                  {"projectors", {"su2-column[:n]", "su3-column[:n]", "trivial:n"}},
                  {"suites", suite_names()}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CutoffExceeded& e) {
        std::cerr << json{{"error", "cutoff"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return code;
}
