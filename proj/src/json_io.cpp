#include "qorb/json_io.hpp"

#include <stdexcept>

namespace qorb {

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) a.push_back(json::array({p.coeff(i).get_str(), i}));
    return a;
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& t : j) {
        mpq_class c(t.at(0).get<std::string>());
        c.canonicalize();
        p += Poly::monomial(c, t.at(1).get<int>());
    }
    return p;
}

json to_json(const QScalar& x) {
    json a = json::array();
    for (const auto& [k, v] : x.terms()) {
        json t;
        t["num"] = poly_to_json(v.num());
        t["den"] = poly_to_json(v.den());
        t["radicand"] = poly_to_json(k.first);
        t["zeta"] = k.second;
        t["order"] = x.order();
        a.push_back(std::move(t));
    }
    return a;
}

QScalar scalar_from_json(const json& j) {
    QScalar x;
    for (const auto& t : j) {
        RatFunc c(poly_from_json(t.at("num")), poly_from_json(t.at("den")));
        QScalar term(c);
        Poly rad = poly_from_json(t.at("radicand"));
        if (!rad.is_one()) {
            // sqrt(rad) is recovered from rad * sqrt(rad)^{-1} = sqrt(rad).
            QScalar r = QScalar(RatFunc(rad)).sqrt();
            term *= r;
        }
        int z = t.value("zeta", 0);
        if (z != 0) term *= QScalar::zeta(z, t.at("order").get<int>());
        x += term;
    }
    return x;
}

json to_json(const Matrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json e = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero()) e.push_back(json::array({i, k, to_json(m(i, k))}));
    j["entries"] = std::move(e);
    return j;
}

Matrix matrix_from_json(const json& j) {
    Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) m(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) = scalar_from_json(e.at(2));
    return m;
}

json to_json(const Rep& r) {
    json j;
    j["name"] = r.name;
    j["root_datum"] = r.rd->name;
    j["dim"] = r.dim();
    j["weights"] = r.weights;
    json e = json::array(), f = json::array();
    for (const auto& m : r.e) e.push_back(to_json(m));
    for (const auto& m : r.f) f.push_back(to_json(m));
    j["e"] = std::move(e);
    j["f"] = std::move(f);
    return j;
}

Rep rep_from_json(const json& j) {
    Rep r;
    r.rd = &RootDatum::by_name(j.at("root_datum").get<std::string>());
    r.name = j.at("name").get<std::string>();
    r.weights = j.at("weights").get<std::vector<Weight>>();
    for (const auto& m : j.at("e")) r.e.push_back(matrix_from_json(m));
    for (const auto& m : j.at("f")) r.f.push_back(matrix_from_json(m));
    if (r.e.size() != static_cast<std::size_t>(r.rd->rank) || r.f.size() != r.e.size())
        throw std::invalid_argument("rep_from_json: generator count does not match rank");
    return r;
}

json to_json(const IntertwinerBlock& b) {
    json j;
    j["kappa"] = b.kappa;
    j["norm"] = to_json(b.norm);
    j["e0"] = to_json(b.e0);
    return j;
}

IntertwinerBlock block_from_json(const json& j) {
    return {j.at("kappa").get<Weight>(), matrix_from_json(j.at("e0")), scalar_from_json(j.at("norm"))};
}

json to_json(const CoordElement& x) {
    json out = json::array();
    for (const auto& [c, v] : x.terms)
        out.push_back({{"lambda", c.lambda}, {"mu", c.mu}, {"nu", c.nu}, {"scalar", to_json(v)}, {"text", v.to_string()}});
    return out;
}

CoordElement coord_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coordinate element: expected a list of terms");
    CoordElement out;
    for (const auto& t : j) {
        MatrixCoeff c{t.at("lambda").get<Weight>(), t.at("mu").get<int>(), t.at("nu").get<int>()};
        QScalar v(1);
        if (t.contains("scalar")) {
            const json& s = t.at("scalar");
            if (s.is_number_integer()) {
                v = QScalar(s.get<long>());
            } else if (s.is_string()) {
                mpq_class r(s.get<std::string>());
                r.canonicalize();
                v = QScalar(r);
            } else {
                v = scalar_from_json(s);
            }
        }
        out.add(c, v);
    }
    return out;
}

}  // namespace qorb
