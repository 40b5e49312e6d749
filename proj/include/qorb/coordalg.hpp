#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qorb/decompose.hpp"
#include "qorb/report.hpp"

namespace qorb {

// Matrix coefficient t^lambda_{mu nu}; mu and nu are 0-based positions in the
// canonical basis of irrep(lambda).
struct MatrixCoeff {
    Weight lambda;
    int mu = 0, nu = 0;
    auto operator<=>(const MatrixCoeff&) const = default;
};

std::string coeff_str(const MatrixCoeff& c);

// Finite linear combination of matrix coefficients.
struct CoordElement {
    std::map<MatrixCoeff, QScalar> terms;

    CoordElement() = default;
    explicit CoordElement(const MatrixCoeff& c, const QScalar& v = QScalar(1));

    bool is_zero() const { return terms.empty(); }
    void add(const MatrixCoeff& c, const QScalar& v);
    CoordElement& operator+=(const CoordElement& o);
    CoordElement& operator-=(const CoordElement& o);
    CoordElement& operator*=(const QScalar& c);
    friend CoordElement operator+(CoordElement a, const CoordElement& b) { return a += b; }
    friend CoordElement operator-(CoordElement a, const CoordElement& b) { return a -= b; }
    friend CoordElement operator*(CoordElement a, const QScalar& c) { return a *= c; }
    friend CoordElement operator*(const QScalar& c, CoordElement a) { return a *= c; }
    friend bool operator==(const CoordElement& a, const CoordElement& b) { return (a - b).is_zero(); }
    // Largest Dynkin label among the terms.
    int max_label() const;
    std::string to_string() const;
};

// Element of C[G_q] (x) C[G_q] as a combination of pairs of basis coefficients.
using CoordTensor = std::map<std::pair<MatrixCoeff, MatrixCoeff>, QScalar>;
using CoordTensor3 = std::map<std::tuple<MatrixCoeff, MatrixCoeff, MatrixCoeff>, QScalar>;

// Word in e_i, f_i, k_i, k_i^{-1}; kind 0 = e, 1 = f, 2 = k, 3 = k^{-1}.
struct UqLetter {
    int kind = 0, i = 0;
    auto operator<=>(const UqLetter&) const = default;
};
struct UqWord {
    std::vector<UqLetter> letters;
    auto operator<=>(const UqWord&) const = default;
    static UqWord e(int i) { return {{{0, i}}}; }
    static UqWord f(int i) { return {{{1, i}}}; }
    static UqWord k(int i) { return {{{2, i}}}; }
    static UqWord kinv(int i) { return {{{3, i}}}; }
    UqWord operator*(const UqWord& o) const;
    std::string to_string() const;
};
// Delta of a word as sum of c * (x' (x) x'').
std::vector<std::tuple<UqWord, UqWord, QScalar>> coproduct(const UqWord& x);
// rho_lambda(x).
Matrix represent(const Rep& r, const UqWord& x);

struct CutoffExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which tensor slot the row pair (m, m') of a product is read from.
enum class Placement { Direct, Opposite };
const char* placement_name(Placement p);

// Placement used by multiply unless overridden; the audit reports whether the
// computed selection agrees with it.
inline constexpr Placement kFrozenPlacement = Placement::Direct;

// Products are memoized through pair_blocks; instances are cheap.
class CoordAlgebra {
public:
    explicit CoordAlgebra(const RootDatum& rd, int cutoff = 4) : rd_(&rd), cutoff_(cutoff) {}
    static CoordAlgebra su2(int cutoff = 4) { return CoordAlgebra(RootDatum::A1(), cutoff); }
    static CoordAlgebra su3(int cutoff = 4) { return CoordAlgebra(RootDatum::A2(), cutoff); }

    const RootDatum& root_datum() const { return *rd_; }
    int cutoff() const { return cutoff_; }

    CoordElement unit() const;
    CoordElement coeff(const Weight& lambda, int mu, int nu) const;
    // su2: alpha, beta; su3: t11 ... t33 (rows and columns 1-based in the names).
    std::vector<std::pair<std::string, CoordElement>> generators() const;
    // Every coefficient of the defining module.
    std::vector<CoordElement> fundamental_coeffs() const;

    CoordElement multiply(const CoordElement& a, const CoordElement& b, Placement p = kFrozenPlacement) const;
    CoordElement multiply(const std::vector<CoordElement>& factors, Placement p = kFrozenPlacement) const;

    QScalar pair(const CoordElement& t, const UqWord& x) const;
    CoordTensor coproduct(const CoordElement& t) const;
    QScalar counit(const CoordElement& t) const;
    CoordElement antipode(const CoordElement& t) const;
    CoordElement star(const CoordElement& t) const;

    CoordElement right_action(const UqWord& x, const CoordElement& t) const;
    CoordElement left_action(const UqWord& x, const CoordElement& t) const;

    CoordTensor tensor_multiply(const CoordTensor& a, const CoordTensor& b) const;

private:
    void check_cutoff(const Weight& lambda) const;

    const RootDatum* rd_;
    int cutoff_;
};

// Selects the placement reproducing beta alpha = q alpha beta on SU(2).
struct PlacementAudit {
    Placement selected = Placement::Direct;
    bool frozen_agrees = false;
    // t11 t12 under each placement, for the record.
    CoordElement t11t12_direct, t11t12_opposite;
    Report report;
};
PlacementAudit audit_placement();

// Coassociativity, counit, antipode axiom, star anti-multiplicativity and
// both equivariance identities on the fundamental coefficients and, for
// cutoff >= 2, their pairwise products. Samples stay within the cutoff;
// intermediate products (e.g. S(a) b) may reach twice it.
Report verify_hopf(const RootDatum& rd, int cutoff = 2);
// The five SU(2) relations, from contraction only.
Report verify_su2_relations(Placement p = kFrozenPlacement);
// The four t_ij families and the unit relation. `data` carries per-family
// counts and the failing index pairs.
Report verify_su3_relations(Placement p = kFrozenPlacement);

// Left multiplication by t on the coefficients with Dynkin labels <= cutoff.
struct GnsMatrix {
    std::vector<MatrixCoeff> basis;
    Matrix m;
    // Column j lost terms above the cutoff.
    std::vector<bool> overflow;
};
std::vector<MatrixCoeff> gns_basis(const RootDatum& rd, int cutoff);
GnsMatrix gns_matrix(const RootDatum& rd, const CoordElement& t, int cutoff);

}  // namespace qorb
