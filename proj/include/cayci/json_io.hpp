#pragma once

// JSON encodings of the library's values. Integers are JSON numbers when their
// magnitude is below 2^53 and decimal strings otherwise; both forms are
// accepted on input.

#include <json.hpp>

#include "cayci/abelian.hpp"
#include "cayci/cayley.hpp"
#include "cayci/decision.hpp"
#include "cayci/modmat.hpp"
#include "cayci/symmetry.hpp"

namespace cayci::json_io {

using Json = nlohmann::json;

/// Raised for input that does not match the expected schema.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json encode(const Integer& x);
Json encode(const IntVector& v);
Json encode(const IntMatrix& m);
Json encode(const ModMatrix& m);
Json encode(const LatticeIndex& k);
Json encode(const Element& x);
Json encode(const std::vector<Element>& xs);

Integer decode_integer(const Json& j, const char* what);
std::int64_t decode_int64(const Json& j, const char* what);
IntVector decode_vector(const Json& j, Index n, const char* what);
IntMatrix decode_matrix(const Json& j, const char* what);
Mode decode_mode(const Json& j);

/// {"n", "mode", "set"} as a validated connection set; `key` selects the list.
ConnectionSet decode_connection_set(const Json& payload, const char* key = "set");
/// {"n", "mode", "set"} with the normalized (sorted, closed) list.
Json encode_connection_set(const ConnectionSet& s);

Json encode(const CoverageCertificate& c);
Json encode(const CiVerdict& v);
Json encode(const IsoWitness& w);

const Json& require(const Json& payload, const char* key);

}  // namespace cayci::json_io
