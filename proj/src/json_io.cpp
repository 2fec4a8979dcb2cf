#include "cayci/json_io.hpp"

#include <string>

namespace cayci::json_io {

namespace {

const Integer kSafe = Integer(1) << 53;

}  // namespace

Json encode(const Integer& x) {
  if (abs(x) < kSafe) return static_cast<std::int64_t>(x);
  return x.str();
}

Json encode(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

Json encode(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(encode(IntVector(m.row(i).transpose())));
  return out;
}

Json encode(const ModMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Json encode(const LatticeIndex& k) { return k.is_finite() ? encode(k.value()) : Json("INFINITE"); }

Json encode(const Element& x) { return Json(x); }

Json encode(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

const Json& require(const Json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return payload.at(key);
}

Integer decode_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw SchemaError(std::string(what) + ": \"" + s + "\" is not an integer");
    return Integer(s);
  }
  throw SchemaError(std::string(what) + ": expected an integer");
}

std::int64_t decode_int64(const Json& j, const char* what) {
  try {
    return to_int64(decode_integer(j, what));
  } catch (const std::overflow_error&) {
    throw SchemaError(std::string(what) + ": integer out of range");
  }
}

IntVector decode_vector(const Json& j, Index n, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
  if (n >= 0 && static_cast<Index>(j.size()) != n)
    throw SchemaError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                      std::to_string(j.size()));
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = decode_integer(j[i], what);
  return v;
}

IntMatrix decode_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw SchemaError(std::string(what) + ": expected a nonempty array of rows");
  const Index cols = j[0].is_array() ? static_cast<Index>(j[0].size()) : -1;
  if (cols <= 0) throw SchemaError(std::string(what) + ": rows must be nonempty arrays");
  IntMatrix m(static_cast<Index>(j.size()), cols);
  for (std::size_t i = 0; i < j.size(); ++i) m.row(static_cast<Index>(i)) = decode_vector(j[i], cols, what).transpose();
  return m;
}

Mode decode_mode(const Json& j) {
  if (j == "directed") return Mode::Directed;
  if (j == "undirected") return Mode::Undirected;
  throw SchemaError("mode must be \"directed\" or \"undirected\"");
}

ConnectionSet decode_connection_set(const Json& payload, const char* key) {
  const Index n = decode_int64(require(payload, "n"), "n");
  if (n < 1) throw SchemaError("n must be positive");
  const Mode mode = payload.contains("mode") ? decode_mode(payload.at("mode")) : Mode::Undirected;
  const Json& list = require(payload, key);
  if (!list.is_array()) throw SchemaError(std::string(key) + ": expected an array of vectors");
  std::vector<IntVector> raw;
  for (const auto& item : list) {
    if (n == 1 && item.is_number_integer()) {
      raw.push_back(IntVector::Constant(1, decode_integer(item, key)));
      continue;
    }
    raw.push_back(decode_vector(item, n, key));
  }
  return ConnectionSet::validate(std::move(raw), n, mode);
}

Json encode_connection_set(const ConnectionSet& s) {
  Json set = Json::array();
  for (const auto& v : s.vectors()) set.push_back(encode(v));
  return {{"n", s.dim()}, {"mode", to_string(s.mode())}, {"set", set}};
}

Json encode(const CoverageCertificate& c) {
  Json out = {{"k", encode(c.k)},
              {"a_order", encode(c.a_order)},
              {"b_order", encode(c.b_order)},
              {"intersection_order", encode(c.intersection_order)},
              {"q_order", encode(c.q_order)},
              {"covered_order", encode(c.covered_order())},
              {"stabilizer_order", c.stabilizer_order},
              {"sigma", encode(c.sigma)}};
  Json b = Json::array();
  for (const auto& m : c.b_elements) b.push_back(encode(m));
  out["b_elements"] = b;
  if (c.uncovered) out["uncovered"] = encode(*c.uncovered);
  if (c.uncovered_lift) out["uncovered_lift"] = encode(*c.uncovered_lift);
  return out;
}

Json encode(const CiVerdict& v) {
  Json out = {{"is_ci", v.is_ci}, {"reason", to_string(v.reason)}, {"k", encode(v.components)}};
  if (v.coverage) out["certificate"] = encode(*v.coverage);
  if (v.index_bound)
    out["index_bound"] = {{"stabilizer_order", v.index_bound->first}, {"quotient_index", encode(v.index_bound->second)}};
  if (v.witness) {
    Json w = {{"set", encode_connection_set(v.witness->s_prime)["set"]},
              {"component_map", encode(v.witness->component_map)}};
    if (v.witness->non_extendable) w["non_extendable"] = encode(*v.witness->non_extendable);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json encode(const IsoWitness& w) {
  Json out = {{"kind", to_string(w.kind)},
              {"isomorphic", w.kind != IsoKind::None},
              {"components", encode(w.components)},
              {"components_prime", encode(w.components_prime)}};
  out["ambient"] = w.ambient ? encode(*w.ambient) : Json(nullptr);
  out["component_map"] = w.component_map ? encode(*w.component_map) : Json(nullptr);
  return out;
}

}  // namespace cayci::json_io
