#pragma once

#include <string>

#include <json.hpp>

#include "dgalab/gallery.hpp"
#include "dgalab/mf.hpp"

namespace dgalab {

// ordered so emitted key order is exactly insertion order
using Json = nlohmann::ordered_json;

// Reads and parses a JSON file; unreadable files and parse errors both
// surface as InputError.
Json load_json_file(const std::string& path);

// Ring spec:
//   {"field":"Q"|"Fp:<p>", "kind":"monomial_quotient"|"table"|"trivial_extension", ...}
//   monomial_quotient: "vars": e, "ideal": ["x1^2","x1*x2",...]
//   table:             "basis": [names], "table": [[a,b,c,coeff],...],
//                      optional "generators": [names], "degrees": [ints];
//                      basis[0] is the unit, unlisted products are zero and a
//                      listed (a,b) fills an unlisted (b,a)
//   trivial_extension: "base": <ring spec>, "r": int
Algebra::Ptr ring_from_json(const Json& j);

// Graded algebra spec:
//   {"basis":[{"name":...,"degree":...}], "products":[[a,b,c,coeff],...],
//    optional "differential":[[src,tgt,coeff],...], "preferred":[u,v],
//    "field" (default "Q")}
// basis[0] is the unit (degree 0). Unlisted products default to zero; a
// listed (a,b) fills an unlisted (b,a) with the skew sign.
SkewAlgebra::Ptr skew_from_json(const Json& j);

// {"field","vars","f","phi":[[...]],"psi":[[...]]}, entries polynomial strings
MatrixFactorization mf_from_json(const Json& j);

// Spec JSON that regenerates a gallery descriptor: a ring spec for the
// commutative families, an algebra spec for the multiplication classes and
// the determinantal avatar (canonical witness pair included when the builder
// marked one).
Json spec_from_descriptor(const ExampleDescriptor& d, Field f);

// "[1,2,4]" with unbounded integers in decimal; nlohmann clamps to 64 bits,
// series coefficients may not fit
std::string decimal_array(const std::vector<BigInt>& v);

}  // namespace dgalab
