#pragma once

#include <json.hpp>

#include "qorb/coordalg.hpp"
#include "qorb/decompose.hpp"
#include "qorb/matrix.hpp"
#include "qorb/qscalar.hpp"
#include "qorb/rep.hpp"

namespace qorb {

using json = nlohmann::ordered_json;

// Coefficient-exponent pairs [["p/q", e], ...].
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// List of terms {num, den, radicand, zeta, order}.
json to_json(const QScalar& x);
QScalar scalar_from_json(const json& j);

// Sparse {rows, cols, entries: [[i, j, scalar], ...]}.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Rep& r);
Rep rep_from_json(const json& j);

json to_json(const IntertwinerBlock& b);
IntertwinerBlock block_from_json(const json& j);

// [{lambda, mu, nu, scalar, text}, ...]; on input the scalar may also be an
// integer or a "p/q" string and text is ignored.
json to_json(const CoordElement& x);
CoordElement coord_from_json(const json& j);

}  // namespace qorb
