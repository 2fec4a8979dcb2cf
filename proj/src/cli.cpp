#include "cayci/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "cayci/decision.hpp"
#include "cayci/intlin.hpp"
#include "cayci/json_io.hpp"
#include "cayci/oracle.hpp"

namespace cayci::cli {

namespace {

using json_io::Json;
using json_io::SchemaError;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string command;
  std::string input_file;
  std::string json_text;
  std::uint64_t seed = 1;
  int random = 0;
};

struct Outcome {
  Json result;
  Json normalized;  ///< normalization of the input, echoed next to it
  std::vector<std::string> flags;
  int exit_code = 0;
};

Json read_payload(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.json_text.empty()) {
    text = opt.json_text;
  } else if (!opt.input_file.empty()) {
    std::ifstream file(opt.input_file);
    if (!file) throw SchemaError("cannot open input file " + opt.input_file);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json encode_matrices(const std::vector<IntMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(json_io::encode(m));
  return out;
}

Outcome do_snf(const Json& payload) {
  const IntMatrix a = json_io::decode_matrix(json_io::require(payload, "matrix"), "matrix");
  const auto s = snf<Integer>(a);
  Json factors = Json::array();
  for (const auto& d : s.invariant_factors()) factors.push_back(json_io::encode(d));
  return {{{"U", json_io::encode(s.U)},
           {"D", json_io::encode(s.D)},
           {"V", json_io::encode(s.V)},
           {"rank", s.rank},
           {"invariant_factors", factors}},
          nullptr,
          {},
          0};
}

Outcome do_decide(const Json& payload) {
  const auto s = json_io::decode_connection_set(payload);
  const auto verdict = decide_ci(s);
  Outcome o{json_io::encode(verdict), json_io::encode_connection_set(s), {}, 0};
  if (verdict.uncertain) o.flags.push_back("UNCERTAIN");
  return o;
}

Outcome do_iso(const Json& payload) {
  const auto s = json_io::decode_connection_set(payload, "set");
  const auto s_prime = json_io::decode_connection_set(payload, "set_prime");
  const auto w = are_isomorphic(s, s_prime);
  Json normalized = json_io::encode_connection_set(s);
  normalized["set_prime"] = json_io::encode_connection_set(s_prime)["set"];
  return {json_io::encode(w), normalized, {}, w.kind == IsoKind::None ? 1 : 0};
}

Outcome do_stab(const Json& payload) {
  const auto s = json_io::decode_connection_set(payload);
  const Lattice h = generated_lattice(s);
  const auto group = set_stabilizer(h, s);
  return {{{"order", group.order()},
           {"lattice_basis", json_io::encode(h.basis())},
           {"elements", encode_matrices(group.elements)}},
          json_io::encode_connection_set(s),
          {},
          0};
}

ConnectionSet integer_set(const std::vector<std::int64_t>& values, Mode mode) {
  std::vector<IntVector> raw;
  for (auto v : values) raw.push_back(IntVector::Constant(1, Integer(v)));
  return ConnectionSet::validate(std::move(raw), 1, mode);
}

Json encode_integer_set(const ConnectionSet& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(json_io::encode(v(0)));
  return out;
}

Outcome do_z_random(const Json& payload, const Options& opt) {
  const Mode mode = payload.contains("mode") ? json_io::decode_mode(payload.at("mode")) : Mode::Directed;
  const int radius = payload.contains("radius") ? static_cast<int>(json_io::decode_int64(payload.at("radius"), "radius")) : 9;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> value(-10, 9);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> kind(0, 2);
  auto sample = [&] {
    std::vector<std::int64_t> values;
    for (int i = 0, c = size(rng); i < c; ++i) {
      int x = value(rng);
      values.push_back(x >= 0 ? x + 1 : x);
    }
    return integer_set(values, mode);
  };
  std::size_t signs = 0, agreements = 0;
  Json disagreements = Json::array();
  for (int i = 0; i < opt.random; ++i) {
    const auto s = sample();
    const int k = kind(rng);
    const auto s_prime = k == 0 ? s : k == 1 ? s.transformed(-identity_matrix(1)) : sample();
    const auto check = cross_check_z_iso(s, s_prime, radius);
    if (check.sign) ++signs;
    if (check.agrees) {
      ++agreements;
    } else {
      disagreements.push_back({{"set", encode_integer_set(s)}, {"set_prime", encode_integer_set(s_prime)}});
    }
  }
  Json result = {{"pairs", opt.random},
                 {"seed", opt.seed},
                 {"signs_returned", signs},
                 {"agreements", agreements},
                 {"disagreements", disagreements}};
  return {result, nullptr, {}, disagreements.empty() ? 0 : 1};
}

Outcome do_z_iso(const Json& payload, const Options& opt) {
  if (opt.random > 0) return do_z_random(payload, opt);
  const Mode mode = payload.contains("mode") ? json_io::decode_mode(payload.at("mode")) : Mode::Directed;
  auto read = [&](const char* key) {
    const Json& list = json_io::require(payload, key);
    if (!list.is_array()) throw SchemaError(std::string(key) + ": expected an array of integers");
    std::vector<std::int64_t> values;
    for (const auto& x : list) values.push_back(json_io::decode_int64(x, key));
    return integer_set(values, mode);
  };
  const auto s = read("set");
  const auto s_prime = read("set_prime");
  const auto sign = z_iso_decide(s, s_prime);
  Json normalized = {{"mode", to_string(mode)}, {"set", encode_integer_set(s)}, {"set_prime", encode_integer_set(s_prime)}};
  return {{{"sign", sign ? Json(*sign) : Json(nullptr)}, {"isomorphic", sign.has_value()}}, normalized, {}, sign ? 0 : 1};
}

FiniteAbelianGroup decode_group(const Json& payload) {
  const Json& moduli = json_io::require(payload, "moduli");
  if (!moduli.is_array()) throw SchemaError("moduli: expected an array of integers");
  std::vector<std::int64_t> m;
  for (const auto& x : moduli) m.push_back(json_io::decode_int64(x, "moduli"));
  return FiniteAbelianGroup(m);
}

Json encode_pairs(const std::vector<NonCiPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs)
    out.push_back({{"set", json_io::encode(p.s)}, {"set_prime", json_io::encode(p.s_prime)}, {"isomorphism", p.isomorphism}});
  return out;
}

Outcome do_scan(const Json& payload) {
  const auto g = decode_group(payload);
  const Mode mode = payload.contains("mode") ? json_io::decode_mode(payload.at("mode")) : Mode::Undirected;
  const auto pairs = finite_ci_group_scan(g, mode);
  return {{{"group", g.to_string()}, {"count", pairs.size()}, {"pairs", encode_pairs(pairs)}}, nullptr, {}, 0};
}

Outcome do_mod5(const Json& payload) {
  const std::int64_t n = payload.contains("N") ? json_io::decode_int64(payload.at("N"), "N") : 100;
  const auto r = mod5_demo(n);
  Json samples = Json::array();
  for (std::int64_t i : {0, 1, 2, 3, 4, 5, 7}) samples.push_back({i, mod5_map(i)});
  return {{{"verified", r.ok()},
           {"N", r.window},
           {"pairs_checked", r.pairs_checked},
           {"adjacency_preserved", r.adjacency_preserved},
           {"bijective", r.bijective},
           {"s_prime_differs_from_plus_minus_s", r.differs_from_plus_minus},
           {"samples", samples}},
          nullptr,
          {},
          r.ok() ? 0 : 1};
}

// verify: re-checks a document previously produced by this tool.

struct Checks {
  Json list = Json::array();
  bool all = true;
  void add(const std::string& name, bool ok) {
    list.push_back({{"check", name}, {"passed", ok}});
    all = all && ok;
  }
};

void verify_snf(const Json& input, const Json& result, Checks& c) {
  const IntMatrix a = json_io::decode_matrix(json_io::require(input, "matrix"), "matrix");
  const IntMatrix u = json_io::decode_matrix(json_io::require(result, "U"), "U");
  const IntMatrix d = json_io::decode_matrix(json_io::require(result, "D"), "D");
  const IntMatrix v = json_io::decode_matrix(json_io::require(result, "V"), "V");
  c.add("U unimodular", is_unimodular<Integer>(u));
  c.add("V unimodular", is_unimodular<Integer>(v));
  c.add("U A V = D", u.cols() == a.rows() && v.rows() == a.cols() && equal(IntMatrix(u * a * v), d));
  bool diagonal = true, chain = true;
  Integer previous = 1;
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) diagonal = false;
      if (i == j && d(i, i) != 0) {
        if (d(i, i) < 0 || d(i, i) % previous != 0) chain = false;
        previous = d(i, i);
      }
    }
  c.add("D diagonal", diagonal);
  c.add("divisibility chain", chain);
}

void verify_decide(const Json& input, const Json& result, Checks& c) {
  const auto s = json_io::decode_connection_set(input);
  const auto verdict = decide_ci(s);
  c.add("verdict reproduced", result.value("is_ci", !verdict.is_ci) == verdict.is_ci &&
                                  result.value("reason", std::string()) == to_string(verdict.reason));
  if (result.contains("witness") && !result.at("witness").is_null()) {
    Json witness_payload = {{"n", s.dim()}, {"mode", to_string(s.mode())}, {"set", result.at("witness").at("set")}};
    const auto s_prime = json_io::decode_connection_set(witness_payload);
    c.add("witness isomorphic without an ambient map", verify_non_ci_witness(s, s_prime));
  }
}

void verify_iso(const Json& input, const Json& result, Checks& c) {
  const auto s = json_io::decode_connection_set(input, "set");
  const auto s_prime = json_io::decode_connection_set(input, "set_prime");
  const auto w = are_isomorphic(s, s_prime);
  c.add("kind reproduced", result.value("kind", std::string()) == to_string(w.kind));
  if (result.contains("ambient") && !result.at("ambient").is_null()) {
    const IntMatrix m = json_io::decode_matrix(result.at("ambient"), "ambient");
    c.add("ambient unimodular", m.rows() == s.dim() && m.cols() == s.dim() && is_unimodular<Integer>(m));
    c.add("ambient maps S onto S'", m.rows() == s.dim() && s.transformed(m) == s_prime);
  }
}

void verify_stab(const Json& input, const Json& result, Checks& c) {
  const auto s = json_io::decode_connection_set(input);
  const Lattice h = generated_lattice(s);
  const auto group = set_stabilizer(h, s);
  std::vector<IntMatrix> claimed;
  for (const auto& m : json_io::require(result, "elements")) claimed.push_back(json_io::decode_matrix(m, "elements"));
  bool same = claimed.size() == group.order();
  for (std::size_t i = 0; same && i < claimed.size(); ++i) same = equal(claimed[i], group.elements[i]);
  c.add("stabilizer reproduced", same);
  bool closed = true;
  for (const auto& a : group.elements)
    for (const auto& b : group.elements) closed = closed && group.contains(IntMatrix(a * b));
  c.add("closed under composition", closed);
}

void verify_z(const Json& input, const Json& result, Checks& c, const Options& opt) {
  const auto redo = do_z_iso(input, opt);
  c.add("answer reproduced", redo.result == result);
}

void verify_scan(const Json& input, const Json& result, Checks& c) {
  const auto g = decode_group(input);
  const auto auts = automorphisms(g);
  bool ok = true;
  for (const auto& pair : json_io::require(result, "pairs")) {
    std::vector<Element> s, s_prime;
    for (const auto& x : pair.at("set")) s.push_back(g.reduce(x.get<Element>()));
    for (const auto& x : pair.at("set_prime")) s_prime.push_back(g.reduce(x.get<Element>()));
    const auto perm = pair.at("isomorphism").get<Permutation>();
    ok = ok && is_isomorphism(cayley_graph(g, s), cayley_graph(g, s_prime), perm);
    std::sort(s_prime.begin(), s_prime.end());
    for (const auto& a : auts) {
      std::vector<Element> image;
      for (const auto& x : s) image.push_back(a(x));
      std::sort(image.begin(), image.end());
      ok = ok && image != s_prime;
    }
  }
  c.add("pairs isomorphic and not related by Aut(G)", ok);
}

Outcome do_verify(const Json& document, const Options& opt) {
  const std::string command = json_io::require(document, "command").get<std::string>();
  const Json& input = json_io::require(document, "input");
  const Json& result = json_io::require(document, "result");
  Checks c;
  if (command == "snf") verify_snf(input, result, c);
  else if (command == "decide-ci") verify_decide(input, result, c);
  else if (command == "iso") verify_iso(input, result, c);
  else if (command == "stab") verify_stab(input, result, c);
  else if (command == "z-iso") {
    Options replay = opt;
    replay.random = 0;
    if (document.contains("options")) {
      replay.random = document.at("options").at("random").get<int>();
      replay.seed = document.at("options").at("seed").get<std::uint64_t>();
    }
    verify_z(input, result, c, replay);
  }
  else if (command == "scan-finite") verify_scan(input, result, c);
  else if (command == "demo-mod5") c.add("demo reproduced", do_mod5(input).result == result);
  else throw SchemaError("verify: unsupported command \"" + command + "\"");
  return {{{"verified", c.all}, {"verified_command", command}, {"checks", c.list}}, nullptr, {}, c.all ? 0 : 1};
}

Outcome dispatch(const Options& opt, const Json& payload) {
  if (opt.command == "snf") return do_snf(payload);
  if (opt.command == "decide-ci") return do_decide(payload);
  if (opt.command == "iso") return do_iso(payload);
  if (opt.command == "stab") return do_stab(payload);
  if (opt.command == "z-iso") return do_z_iso(payload, opt);
  if (opt.command == "scan-finite") return do_scan(payload);
  if (opt.command == "demo-mod5") return do_mod5(payload);
  return do_verify(payload, opt);
}

int emit_error(std::ostream& out, const std::string& command, const std::string& type, const std::string& message) {
  Json doc = {{"schema_version", kSchemaVersion},
              {"command", command},
              {"error", {{"type", type}, {"message", message}}}};
  out << doc.dump(2) << '\n';
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Options opt;
  CLI::App app{"Decision procedures for Cayley graphs on Z^n and small abelian groups"};
  app.add_option("command", opt.command, "snf | decide-ci | iso | stab | z-iso | scan-finite | demo-mod5 | verify")
      ->required()
      ->check(CLI::IsMember({"snf", "decide-ci", "iso", "stab", "z-iso", "scan-finite", "demo-mod5", "verify"}));
  app.add_option("--input", opt.input_file, "read the JSON payload from a file");
  app.add_option("--json", opt.json_text, "JSON payload given inline");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--random", opt.random, "z-iso: number of random pairs to cross-check")->check(CLI::NonNegativeNumber);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, opt.command, "usage", e.what());
  }

  Json payload;
  Outcome outcome;
  try {
    payload = read_payload(opt, in);
    outcome = dispatch(opt, payload);
  } catch (const std::domain_error& e) {
    return emit_error(out, opt.command, "unsupported", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(out, opt.command, "invalid_input", e.what());
  } catch (const Json::exception& e) {
    return emit_error(out, opt.command, "invalid_input", e.what());
  } catch (const std::overflow_error& e) {
    return emit_error(out, opt.command, "invalid_input", e.what());
  }

  Json doc = {{"schema_version", kSchemaVersion},
              {"command", opt.command},
              {"input", payload},
              {"result", outcome.result},
              {"flags", outcome.flags}};
  if (!outcome.normalized.is_null()) doc["normalized_input"] = outcome.normalized;
  if (opt.command == "z-iso" && opt.random > 0) doc["options"] = {{"random", opt.random}, {"seed", opt.seed}};
  out << doc.dump(2) << '\n';
  return outcome.exit_code;
}

}  // namespace cayci::cli
