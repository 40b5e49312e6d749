#include "qorb/spin.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qorb/decompose.hpp"

namespace qorb {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

CMatrix unit_matrix(int n, int j, int k) {
    CMatrix m = CMatrix::Zero(n, n);
    m(j, k) = 1;
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

LieAlgebraBasis build_basis(const RootDatum& rd) {
    LieAlgebraBasis g;
    g.rd = &rd;
    g.n = rd.rank + 1;
    const int n = g.n;
    const Cx i(0, 1);
    std::vector<CMatrix> raw;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            raw.push_back(unit_matrix(n, j, k) - unit_matrix(n, k, j));
            raw.push_back(i * (unit_matrix(n, j, k) + unit_matrix(n, k, j)));
        }
    std::vector<CMatrix> cartan;
    for (int j = 0; j + 1 < n; ++j) {
        CMatrix hj = unit_matrix(n, j, j) - unit_matrix(n, j + 1, j + 1);
        g.h.push_back(hj);
        cartan.push_back(i * hj);
    }
    for (std::size_t a = 0; a < cartan.size(); ++a) {
        CMatrix v = cartan[a];
        for (std::size_t b = 0; b < a; ++b) v -= (-g.killing(v, cartan[b]) / -g.killing(cartan[b], cartan[b])) * cartan[b];
        cartan[a] = v;
    }
    for (auto& c : cartan) raw.push_back(c);
    for (auto& v : raw) g.x.push_back(v / std::sqrt(-g.killing(v, v)));
    const std::size_t d = g.x.size();
    g.c.assign(d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            Eigen::VectorXcd v = g.coords(commutator(g.x[k], g.x[l]));
            for (std::size_t m = 0; m < d; ++m) g.c[k][l][m] = v[static_cast<Eigen::Index>(m)].real();
        }
    return g;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMatrix hermitian_exp(const CMatrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    Eigen::VectorXcd ph(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < ph.size(); ++k) ph[k] = std::exp(Cx(0, 2 * kPi * t * es.eigenvalues()[k]));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix to_cmatrix(const Matrix& m) {
    CMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) out(a, b) = Cx(m(a, b).classical_limit().eval_s(1.0L));
    return out;
}

struct ClassicalRep {
    std::vector<CMatrix> e, f, h;
};

const ClassicalRep& classical(const RootDatum& rd, const Weight& lambda) {
    static std::mutex mu;
    static std::map<std::pair<std::string, Weight>, ClassicalRep> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(rd.name, lambda);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const Rep& r = irrep(rd, lambda);
    ClassicalRep c;
    for (int i = 0; i < rd.rank; ++i) {
        c.e.push_back(to_cmatrix(r.e[i]));
        c.f.push_back(to_cmatrix(r.f[i]));
        CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(r.dim()), static_cast<Eigen::Index>(r.dim()));
        for (std::size_t m = 0; m < r.dim(); ++m) h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) = r.weights[m][i];
        c.h.push_back(h);
    }
    return memo.emplace(key, std::move(c)).first->second;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

}  // namespace

double LieAlgebraBasis::killing(const CMatrix& a, const CMatrix& b) const { return (2.0 * n * (a * b).trace()).real(); }

Eigen::VectorXcd LieAlgebraBasis::coords(const CMatrix& a) const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(x.size()));
    for (std::size_t k = 0; k < x.size(); ++k) v[static_cast<Eigen::Index>(k)] = -2.0 * n * (a * x[k]).trace();
    return v;
}

const LieAlgebraBasis& lie_basis(const RootDatum& rd) {
    static const LieAlgebraBasis a1 = build_basis(RootDatum::A1());
    static const LieAlgebraBasis a2 = build_basis(RootDatum::A2());
    if (rd.rank == 1) return a1;
    if (rd.rank == 2) return a2;
    throw std::invalid_argument("lie_basis: unsupported root datum " + rd.name);
}

StructureCheck check_structure(const LieAlgebraBasis& g) {
    StructureCheck s;
    const std::size_t d = g.dim();
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            s.orthonormality = std::max(s.orthonormality, std::abs(g.killing(g.x[k], g.x[l]) + (k == l ? 1.0 : 0.0)));
            for (std::size_t m = 0; m < d; ++m) {
                s.antisymmetry = std::max(s.antisymmetry, std::abs(g.c[k][l][m] + g.c[l][k][m]));
                for (std::size_t o = 0; o < d; ++o) {
                    double jac = 0;
                    for (std::size_t p = 0; p < d; ++p)
                        jac += g.c[l][m][p] * g.c[k][p][o] + g.c[m][k][p] * g.c[l][p][o] + g.c[k][l][p] * g.c[m][p][o];
                    s.jacobi = std::max(s.jacobi, std::abs(jac));
                }
            }
        }
    return s;
}

const SpinorModule& spinor_module(const LieAlgebraBasis& g) {
    static std::mutex mu;
    static std::map<std::size_t, SpinorModule> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(g.dim());
    if (it != memo.end()) return it->second;
    SpinorModule s;
    s.dim_g = g.dim();
    s.even = s.dim_g % 2 == 0;
    const std::size_t m = s.dim_g / 2;
    CMatrix id = CMatrix::Identity(2, 2), z(2, 2), x(2, 2), y(2, 2);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    y << 0, Cx(0, -1), Cx(0, 1), 0;
    auto string_of = [&](std::size_t pos, const CMatrix& op) {
        CMatrix out = CMatrix::Identity(1, 1);
        for (std::size_t q = 0; q < m; ++q) out = kron(out, q < pos ? z : (q == pos ? op : id));
        return out;
    };
    for (std::size_t j = 0; j < m; ++j) {
        s.gamma.push_back(Cx(0, 1) * string_of(j, x));
        s.gamma.push_back(Cx(0, 1) * string_of(j, y));
    }
    CMatrix all_z = CMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < m; ++q) all_z = kron(all_z, z);
    if (s.even) {
        s.omega = all_z;
        for (Eigen::Index k = 0; k < all_z.rows(); ++k) (all_z(k, k).real() > 0 ? s.plus : s.minus).push_back(static_cast<int>(k));
    } else {
        s.gamma.push_back(Cx(0, 1) * all_z);
    }
    return memo.emplace(g.dim(), std::move(s)).first->second;
}

CMatrix gamma_of(const SpinorModule& s, const Eigen::VectorXcd& coords) {
    const auto n = static_cast<Eigen::Index>(s.dim());
    CMatrix out = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < s.gamma.size(); ++k) out += coords[static_cast<Eigen::Index>(k)] * s.gamma[k];
    return out;
}

CMatrix ad_tilde(const LieAlgebraBasis& g, const SpinorModule& s, const Eigen::VectorXcd& coords) {
    const auto n = static_cast<Eigen::Index>(s.dim());
    const std::size_t d = g.dim();
    CMatrix out = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < d; ++k) {
        Eigen::VectorXcd br = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m) br[static_cast<Eigen::Index>(m)] += coords[static_cast<Eigen::Index>(l)] * g.c[l][k][m];
        out += s.gamma[k] * gamma_of(s, br);
    }
    return 0.25 * out;
}

CMatrix ad_tilde(const LieAlgebraBasis& g, const CMatrix& x) { return ad_tilde(g, spinor_module(g), g.coords(x)); }

Chirality chirality(const LieAlgebraBasis& g) {
    const SpinorModule& s = spinor_module(g);
    if (!s.even) throw std::invalid_argument("chirality: dim g = " + std::to_string(g.dim()) + " is odd");
    Chirality c;
    c.omega = s.omega;
    const auto n = static_cast<Eigen::Index>(s.dim());
    CMatrix id = CMatrix::Identity(n, n);
    c.p_plus = 0.5 * (id + s.omega);
    c.p_minus = 0.5 * (id - s.omega);
    return c;
}

Report verify_spinor(const RootDatum& rd, double tol) {
    const LieAlgebraBasis& g = lie_basis(rd);
    const SpinorModule& s = spinor_module(g);
    Report r;
    r.suite = "spinor " + rd.name;
    StructureCheck sc = check_structure(g);
    r.add("orthonormal basis", sc.orthonormality <= tol, "residual " + fmt(sc.orthonormality));
    r.add("structure constants antisymmetric", sc.antisymmetry <= tol, "residual " + fmt(sc.antisymmetry));
    r.add("Jacobi identity", sc.jacobi <= tol, "residual " + fmt(sc.jacobi));
    const auto n = static_cast<Eigen::Index>(s.dim());
    const CMatrix id = CMatrix::Identity(n, n);
    double cliff = 0, hom = 0, ident = 0, comm = 0;
    const std::size_t d = g.dim();
    std::vector<CMatrix> ad(d);
    for (std::size_t k = 0; k < d; ++k) ad[k] = ad_tilde(g, s, Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k)));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            cliff = std::max(cliff, max_abs(s.gamma[k] * s.gamma[l] + s.gamma[l] * s.gamma[k] + (k == l ? 2.0 : 0.0) * id));
            Eigen::VectorXcd br = g.coords(commutator(g.x[k], g.x[l]));
            hom = std::max(hom, max_abs(commutator(ad[k], ad[l]) - ad_tilde(g, s, br)));
            ident = std::max(ident, max_abs(gamma_of(s, br) - commutator(ad[k], s.gamma[l])));
        }
    r.add("Clifford relations", cliff <= tol, "residual " + fmt(cliff));
    r.add("ad~ homomorphism", hom <= tol, "residual " + fmt(hom));
    r.add("gamma([x,y]) = [ad~(x), gamma(y)]", ident <= tol, "residual " + fmt(ident));
    if (s.even) {
        double sq = max_abs(s.omega * s.omega - id), sa = max_abs(s.omega - s.omega.adjoint()), anti = 0;
        for (const auto& gk : s.gamma) anti = std::max(anti, max_abs(s.omega * gk + gk * s.omega));
        for (const auto& a : ad) comm = std::max(comm, max_abs(commutator(s.omega, a)));
        r.add("omega^2 = 1", sq <= tol, "residual " + fmt(sq));
        r.add("omega self-adjoint", sa <= tol, "residual " + fmt(sa));
        r.add("omega anticommutes with gamma", anti <= tol, "residual " + fmt(anti));
        r.add("[omega, ad~(x)] = 0", comm <= tol, "residual " + fmt(comm));
        const double tr = std::abs(s.omega.trace());
        r.add("tr omega = 0", tr <= tol, std::to_string(s.plus.size()) + " + " + std::to_string(s.minus.size()));
    }
    r.data["spinor_dim"] = s.dim();
    return r;
}

CMatrix restrict(const CMatrix& a, const std::vector<int>& idx) {
    CMatrix out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(idx[i], idx[j]);
    return out;
}

std::vector<std::vector<int>> joint_weights(const std::vector<CMatrix>& hs, double tol) {
    if (hs.empty()) return {};
    CMatrix mix = hs[0];
    for (std::size_t i = 1; i < hs.size(); ++i) mix += (0.7071067811865476 / static_cast<double>(i * i + 1)) * hs[i];
    Eigen::SelfAdjointEigenSolver<CMatrix> es(mix);
    std::vector<std::vector<int>> out;
    for (Eigen::Index k = 0; k < es.eigenvectors().cols(); ++k) {
        Eigen::VectorXcd v = es.eigenvectors().col(k);
        std::vector<int> w;
        for (const auto& h : hs) {
            double val = (v.adjoint() * h * v)(0, 0).real();
            double rounded = std::round(val);
            if (std::abs(val - rounded) > tol || (h * v - val * v).norm() > tol)
                throw std::domain_error("joint_weights: non-integer or non-joint eigenvalue " + fmt(val));
            w.push_back(static_cast<int>(rounded));
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CMatrix classical_rep(const LieAlgebraBasis& g, const Weight& lambda, const CMatrix& x) {
    const ClassicalRep& c = classical(*g.rd, lambda);
    const int n = g.n;
    const auto dim = c.h[0].rows();
    // rho(E_jk) for j != k from the simple root vectors through commutators.
    std::map<std::pair<int, int>, CMatrix> ev;
    for (int j = 0; j + 1 < n; ++j) {
        ev[{j, j + 1}] = c.e[static_cast<std::size_t>(j)];
        ev[{j + 1, j}] = c.f[static_cast<std::size_t>(j)];
    }
    for (int span = 2; span < n; ++span)
        for (int j = 0; j + span < n; ++j) {
            int k = j + span;
            ev[{j, k}] = commutator(ev[{j, k - 1}], ev[{k - 1, k}]);
            ev[{k, j}] = commutator(ev[{k, k - 1}], ev[{k - 1, j}]);
        }
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto& [jk, m] : ev) out += x(jk.first, jk.second) * m;
    Cx cum = 0;
    for (int j = 0; j + 1 < n; ++j) {
        cum += x(j, j);
        out += cum * c.h[static_cast<std::size_t>(j)];
    }
    return out;
}

SpinLift spin_lift_check(const ActionSpec& a, const std::vector<int>& twists, LiftTarget target) {
    const LieAlgebraBasis& g = lie_basis(*a.rd);
    const SpinorModule& s = spinor_module(g);
    const std::size_t nf = a.y.size();
    std::vector<std::vector<int>> blocks;
    if (target == LiftTarget::Fundamental) {
        blocks.push_back({});
    } else if (s.even) {
        blocks = {s.plus, s.minus};
    } else {
        std::vector<int> all(s.dim());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
        blocks.push_back(all);
    }
    const std::size_t nb = blocks.size();
    std::vector<std::vector<int>> tw(nf, std::vector<int>(nb, 0));
    if (twists.size() == nb || twists.size() == 1) {
        for (auto& row : tw)
            for (std::size_t b = 0; b < nb; ++b) row[b] = twists[twists.size() == 1 ? 0 : b];
    } else if (twists.size() == nb * nf) {
        for (std::size_t f = 0; f < nf; ++f)
            for (std::size_t b = 0; b < nb; ++b) tw[f][b] = twists[f * nb + b];
    } else if (!twists.empty()) {
        throw std::invalid_argument("spin lift: expected " + std::to_string(nb) + " or " + std::to_string(nb * nf) +
                                    " twists, got " + std::to_string(twists.size()));
    }

    // Generator of s_q(sigma_(2)) per factor and block: sigma_(2) = exp(2 pi i turn y2.h).
    const Weight fund = a.rd->rank == 1 ? Weight{1} : Weight{1, 0};
    std::vector<std::vector<CMatrix>> gen(nf), lifted(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        CMatrix y = CMatrix::Zero(g.n, g.n);
        for (int i = 0; i < a.rd->rank; ++i) y += a.y[f].y2[static_cast<std::size_t>(i)].get_d() * g.h[static_cast<std::size_t>(i)];
        for (std::size_t b = 0; b < nb; ++b) {
            CMatrix h = target == LiftTarget::Fundamental ? classical_rep(g, fund, y) : restrict(ad_tilde(g, y), blocks[b]);
            gen[f].push_back(h);
            lifted[f].push_back(h + static_cast<double>(tw[f][b]) * CMatrix::Identity(h.rows(), h.cols()));
        }
    }

    SpinLift out;
    out.periodic = true;
    for (std::size_t f = 0; f < nf && out.periodic; ++f)
        for (std::size_t b = 0; b < nb && out.periodic; ++b) {
            Eigen::SelfAdjointEigenSolver<CMatrix> es(lifted[f][b]);
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
                double v = es.eigenvalues()[k];
                if (std::abs(v - std::round(v)) > 1e-9) {
                    out.periodic = false;
                    out.factor = static_cast<int>(f);
                    out.block = static_cast<int>(b);
                    out.eigenvalue = v;
                    break;
                }
            }
        }

    // Samples: group elements for finite factors, a few angles on circles.
    std::vector<std::vector<double>> samples;
    std::vector<double> base{0.0, 0.125, 1.0 / 3.0, 0.5, 0.7};
    auto turns_for = [&](std::size_t f) {
        std::vector<double> t;
        int p = a.group.factors[f].order;
        if (p == 0) return base;
        for (int j = 0; j < p; ++j) t.push_back(static_cast<double>(j) / p);
        return t;
    };
    samples.push_back({});
    for (std::size_t f = 0; f < nf; ++f) {
        std::vector<std::vector<double>> next;
        for (const auto& sm : samples)
            for (double t : turns_for(f)) {
                auto v = sm;
                v.push_back(t);
                next.push_back(std::move(v));
            }
        samples = std::move(next);
        if (samples.size() > 64) samples.resize(64);
    }
    auto rho = [&](const std::vector<double>& t, std::size_t b, bool twisted) {
        CMatrix sum = CMatrix::Zero(gen[0][b].rows(), gen[0][b].cols());
        for (std::size_t f = 0; f < nf; ++f) sum += t[f] * (twisted ? lifted[f][b] : gen[f][b]);
        return hermitian_exp(sum, 1.0);
    };
    std::mt19937 rng(17);
    std::normal_distribution<double> nd;
    for (std::size_t b = 0; b < nb; ++b) {
        const auto dim = gen[0][b].rows();
        CMatrix x(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) x(i, j) = Cx(nd(rng), nd(rng));
        for (const auto& t1 : samples) {
            CMatrix r1 = rho(t1, b, true), s1 = rho(t1, b, false);
            out.conjugation_residual = std::max(
                out.conjugation_residual, max_abs(r1 * x * r1.adjoint() - s1 * x * s1.adjoint()));
            for (const auto& t2 : samples) {
                std::vector<double> t12(nf);
                for (std::size_t f = 0; f < nf; ++f) {
                    t12[f] = t1[f] + t2[f];
                    t12[f] -= std::floor(t12[f]);
                }
                out.homomorphism_residual =
                    std::max(out.homomorphism_residual, max_abs(rho(t12, b, true) - r1 * rho(t2, b, true)));
            }
        }
    }
    out.pass = out.periodic && out.homomorphism_residual <= 1e-9 && out.conjugation_residual <= 1e-9;
    std::ostringstream os;
    if (!out.periodic)
        os << "factor " << out.factor << " block " << out.block << ": eigenvalue " << fmt(out.eigenvalue)
           << " gives phase e^(2 pi i " << fmt(out.eigenvalue) << ") != 1 at a full turn";
    else
        os << "periodic; homomorphism residual " << fmt(out.homomorphism_residual) << ", conjugation residual "
           << fmt(out.conjugation_residual);
    out.detail = os.str();
    return out;
}

Report spin_examples(int window) {
    Report r;
    r.suite = "spin-examples";
    const double tol = 1e-9;

    // su(2): the Z family of twists on the sphere and two more weighted actions
    for (const char* preset : {"sphere", "weighted:1,3", "weighted:3,5"}) {
        ActionSpec a = action_preset(preset);
        int passed = 0, total = 0;
        std::string first_fail;
        for (int n = -window; n <= window; ++n) {
            SpinLift l = spin_lift_check(a, {n});
            ++total;
            if (l.pass)
                ++passed;
            else if (first_fail.empty())
                first_fail = "twist " + std::to_string(n) + ": " + l.detail;
        }
        r.add(std::string("su2 lift family ") + preset, passed == total,
              std::to_string(passed) + "/" + std::to_string(total) + (first_fail.empty() ? "" : "; " + first_fail));
    }
    {
        // distinct twists give distinct lifts
        const LieAlgebraBasis& g = lie_basis(RootDatum::A1());
        ActionSpec a = action_preset("sphere");
        CMatrix y = a.y[0].y2[0].get_d() * g.h[0];
        CMatrix h = ad_tilde(g, y);
        double min_gap = 1e9;
        for (int n = -window; n <= window; ++n)
            for (int m = n + 1; m <= window; ++m) {
                CMatrix id = CMatrix::Identity(h.rows(), h.cols());
                CMatrix rn = hermitian_exp(h + n * id, 0.0371), rm = hermitian_exp(h + m * id, 0.0371);
                min_gap = std::min(min_gap, max_abs(rn - rm));
            }
        r.add("su2 twists pairwise distinct", min_gap > 1e-3, "min gap " + fmt(min_gap));
    }

    // su(3): Cartan spectra on the chirality blocks
    const LieAlgebraBasis& g3 = lie_basis(RootDatum::A2());
    const SpinorModule& s3 = spinor_module(g3);
    const std::vector<int> want_h1{1, 2, -1, 0, 0, 1, -2, -1}, want_h2{1, -1, 2, 0, 0, -2, 1, -1};
    std::vector<std::vector<int>> adjoint;
    for (const auto& w : irrep(RootDatum::A2(), {1, 1}).weights) adjoint.push_back(w);
    std::sort(adjoint.begin(), adjoint.end());
    CMatrix a1 = ad_tilde(g3, g3.h[0]), a2 = ad_tilde(g3, g3.h[1]);
    const char* names[2] = {"Sigma+", "Sigma-"};
    const std::vector<int>* blocks[2] = {&s3.plus, &s3.minus};
    for (int b = 0; b < 2; ++b) {
        CMatrix h1 = restrict(a1, *blocks[b]), h2 = restrict(a2, *blocks[b]);
        for (int which = 0; which < 2; ++which) {
            Eigen::SelfAdjointEigenSolver<CMatrix> es(which == 0 ? h1 : h2);
            std::vector<int> got;
            double dev = 0;
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
                double v = es.eigenvalues()[k];
                dev = std::max(dev, std::abs(v - std::round(v)));
                got.push_back(static_cast<int>(std::round(v)));
            }
            std::vector<int> want = which == 0 ? want_h1 : want_h2;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            r.add(std::string("su3 ad~(h") + (which == 0 ? "1" : "2") + ") on " + names[b], dev <= tol && got == want,
                  "rounding residual " + fmt(dev));
        }
        std::vector<std::vector<int>> jw;
        std::string err;
        try {
            jw = joint_weights({h1, h2}, tol);
        } catch (const std::domain_error& e) {
            err = e.what();
        }
        r.add(std::string("su3 ") + names[b] + " has the weights of M_(1,1)", err.empty() && jw == adjoint, err);
    }

    // su3: s_q(sigma_(2)) on the blocks against the expected phases
    {
        bool ok = true;
        std::string detail;
        for (int x = 0; x <= 2 && ok; ++x)
            for (int k1 = -1; k1 <= 1 && ok; ++k1)
                for (int k2 = -1; k2 <= 1 && ok; ++k2) {
                    FactorAction fa = su3_family(x, 0, 0, k1, k2);
                    CMatrix y = fa.y2[0].get_d() * g3.h[0] + fa.y2[1].get_d() * g3.h[1];
                    CMatrix ad = ad_tilde(g3, y);
                    std::vector<double> want{double(k1 + k2 + x), double(2 * k1 - k2 + x), double(-k1 + 2 * k2), 0, 0,
                                             double(k1 - 2 * k2), double(-2 * k1 + k2 - x), double(-k1 - k2 - x)};
                    std::sort(want.begin(), want.end());
                    for (const auto* blk : blocks) {
                        Eigen::SelfAdjointEigenSolver<CMatrix> es(restrict(ad, *blk));
                        std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
                        for (std::size_t i = 0; i < got.size(); ++i)
                            if (std::abs(got[i] - want[i]) > tol) {
                                ok = false;
                                detail = "x=" + std::to_string(x) + " k2=(" + std::to_string(k1) + "," +
                                         std::to_string(k2) + ")";
                            }
                    }
                }
        r.add("su3 s_q(sigma_(2)) phases match the displayed diagonal", ok, detail);
    }

    // x = 0, 1, 2 untwisted lifts, the weight-(1,0) surrogate and the twist lattice
    for (int x = 0; x <= 2; ++x) {
        ActionSpec a = action_preset("su3-family:" + std::to_string(x) + ",0,0,0,0");
        SpinLift l = spin_lift_check(a, {0, 0});
        r.add("su3 x=" + std::to_string(x) + " untwisted lift on the spinor blocks", l.pass, l.detail);
        SpinLift sur = spin_lift_check(a, {0}, LiftTarget::Fundamental);
        const bool expect = x == 0;
        r.add("su3 x=" + std::to_string(x) + " weight-(1,0) surrogate " + (expect ? "passes" : "fails"),
              sur.pass == expect, sur.detail);
    }
    {
        ActionSpec a = action_preset("su3-family:1,0,0,0,0");
        int passed = 0, total = 0;
        for (int n1 = -2; n1 <= 2; ++n1)
            for (int n2 = -2; n2 <= 2; ++n2) {
                ++total;
                passed += spin_lift_check(a, {n1, n2}).pass ? 1 : 0;
            }
        r.add("su3 x=1 twist pairs form Z x Z", passed == total, std::to_string(passed) + "/" + std::to_string(total));
    }
    return r;
}

DiracBlock dirac_block(const RootDatum& rd, const Weight& lambda) {
    if (!is_dominant(lambda) || static_cast<int>(lambda.size()) != rd.rank)
        throw std::invalid_argument("dirac block: weight " + weight_str(lambda) + " is not dominant");
    const LieAlgebraBasis& g = lie_basis(rd);
    const SpinorModule& s = spinor_module(g);
    DiracBlock out;
    out.lambda = lambda;
    const std::size_t d = g.dim();
    const auto ns = static_cast<Eigen::Index>(s.dim());
    const CMatrix is = CMatrix::Identity(ns, ns);
    std::vector<CMatrix> rho(d);
    for (std::size_t k = 0; k < d; ++k) rho[k] = classical_rep(g, lambda, g.x[k]);
    const auto nm = rho[0].rows();
    const CMatrix im = CMatrix::Identity(nm, nm);
    out.d = CMatrix::Zero(nm * ns, nm * ns);
    for (std::size_t k = 0; k < d; ++k) {
        CMatrix adk = ad_tilde(g, s, Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k)));
        out.d += kron(rho[k], s.gamma[k]) + 0.5 * kron(im, s.gamma[k] * adk);
    }
    out.hermiticity = max_abs(out.d - out.d.adjoint());
    for (const auto& h : g.h) {
        CMatrix j = kron(classical_rep(g, lambda, h), is) + kron(im, ad_tilde(g, h));
        out.commutation = std::max(out.commutation, max_abs(commutator(out.d, j)));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(out.d);
    out.spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.spectrum.begin(), out.spectrum.end());
    Eigen::ComplexEigenSolver<CMatrix> ce(out.d);
    for (Eigen::Index k = 0; k < ce.eigenvalues().size(); ++k) out.spectrum_check.push_back(ce.eigenvalues()[k].real());
    std::sort(out.spectrum_check.begin(), out.spectrum_check.end());
    for (std::size_t k = 0; k < out.spectrum.size(); ++k)
        out.solver_gap = std::max(out.solver_gap, std::abs(out.spectrum[k] - out.spectrum_check[k]));
    return out;
}

std::vector<DiracBlock> dirac_blocks(const RootDatum& rd, const std::vector<Weight>& lambdas) {
    for (const auto& l : lambdas) irrep(rd, l);
    lie_basis(rd);
    spinor_module(lie_basis(rd));
    std::vector<std::future<DiracBlock>> fs;
    for (const auto& l : lambdas) fs.push_back(std::async(std::launch::async, [&rd, l] { return dirac_block(rd, l); }));
    std::vector<DiracBlock> out;
    for (auto& f : fs) out.push_back(f.get());
    return out;
}

}  // namespace qorb
