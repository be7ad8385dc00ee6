#pragma once

// JSON encodings shared by the CLI and the certificate files. Integers that
// fit in 64 bits are plain JSON numbers; larger ones are decimal strings.
// Vectors are arrays, matrices row-major arrays of arrays, splittings
// {"V1": [[...], [...]], "V2": ..., "V3": ...} with basis vectors as rows.

#include "torelli/casson.hpp"
#include "torelli/euclid.hpp"
#include "torelli/quadratic_form.hpp"
#include "torelli/splitting.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/torus.hpp"

#include <json.hpp>

namespace torelli::json {

using Json = nlohmann::ordered_json;

Json encode(const Integer& x);
Integer decode_integer(const Json& j);

Json encode(const HVector& x);
HVector decode_vector(const Json& j);

Json encode(const IntMatrix& m);
IntMatrix decode_matrix(const Json& j);

Json encode(const Sl2Matrix& m);
Sl2Matrix decode_sl2(const Json& j);

Json encode(const GeneratorWord& w);

/// {"genus": g, "basis_values": [bits]}
Json encode(const SpQuadraticForm& form);
SpQuadraticForm decode_form(const Json& j);

Json encode(const OrthogonalSplitting& s);
OrthogonalSplitting decode_splitting(const Json& j);

/// Accepts an array of splittings or {"splittings": [...]}.
std::vector<OrthogonalSplitting> decode_family(const Json& j);

Json encode(const GenericClass& c);

Json encode(const torus::LatticeLine& line);

/// {"cycles": [splittings], "functionals": [matrices], "value_matrix": [[...]], "rank": r}
Json encode(const IndependenceCertificate& cert);
IndependenceCertificate decode_certificate(const Json& j);

}  // namespace torelli::json
