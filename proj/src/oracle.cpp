#include "cayci/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "cayci/decision.hpp"

namespace cayci {

namespace {

using Mask = std::uint64_t;

void require_nonzero(const FiniteAbelianGroup& g, const std::vector<Element>& s) {
  for (const auto& x : s) {
    if (!g.contains(g.reduce(x))) throw std::invalid_argument("connection set element has the wrong length");
    if (g.reduce(x) == g.zero()) throw std::invalid_argument("connection set contains 0");
  }
}

/// Translation by every group element, as vertex permutations of cayley_graph.
std::vector<Permutation> translations(const FiniteAbelianGroup& g) {
  const auto elements = g.elements();
  std::vector<Permutation> out;
  for (const auto& t : elements) {
    Permutation p(elements.size());
    for (std::size_t v = 0; v < elements.size(); ++v) p[v] = static_cast<int>(g.encode(g.add(elements[v], t)));
    out.push_back(std::move(p));
  }
  return out;
}

bool fixed_point_free(const Permutation& p) {
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v] == static_cast<int>(v)) return false;
  return true;
}

Permutation power(const Permutation& p, std::int64_t e) {
  Permutation r = identity_permutation(static_cast<int>(p.size()));
  for (std::int64_t i = 0; i < e; ++i) r = compose(p, r);
  return r;
}

}  // namespace

FiniteCiResult ci_check_finite(const FiniteAbelianGroup& g, const std::vector<Element>& s, std::stop_token stop) {
  require_nonzero(g, s);
  const FiniteGraph graph = cayley_graph(g, s);
  const auto aut = automorphism_group(graph, stop);
  const int n = graph.order();
  const int d = g.rank();
  FiniteCiResult result;
  result.automorphism_order = aut.size();

  std::vector<std::vector<Permutation>> candidates(d);
  const Permutation id = identity_permutation(n);
  for (int i = 0; i < d; ++i)
    for (const auto& t : aut)
      if (fixed_point_free(t) && power(t, g.moduli()[i]) == id) candidates[i].push_back(t);

  const auto elements = g.elements();
  std::set<std::vector<Permutation>> regular;
  std::vector<Permutation> chosen(d);
  auto recurse = [&](auto&& self, int i) -> void {
    throw_if_stopped(stop);
    if (i == d) {
      std::vector<std::vector<Permutation>> powers(d);
      for (int j = 0; j < d; ++j)
        for (std::int64_t e = 0; e < g.moduli()[j]; ++e) powers[j].push_back(power(chosen[j], e));
      std::vector<Permutation> members;
      std::vector<bool> reached(n, false);
      for (const auto& x : elements) {
        Permutation p = id;
        for (int j = 0; j < d; ++j) p = compose(powers[j][x[j]], p);
        if (reached[p[0]]) return;
        reached[p[0]] = true;
        members.push_back(std::move(p));
      }
      std::sort(members.begin(), members.end());
      regular.insert(std::move(members));
      return;
    }
    for (const auto& t : candidates[i]) {
      bool commutes = true;
      for (int j = 0; j < i && commutes; ++j) commutes = compose(t, chosen[j]) == compose(chosen[j], t);
      if (!commutes) continue;
      chosen[i] = t;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  result.regular_subgroups = regular.size();

  auto base = translations(g);
  std::sort(base.begin(), base.end());
  result.is_ci = std::all_of(regular.begin(), regular.end(), [&](const std::vector<Permutation>& r) {
    return std::any_of(aut.begin(), aut.end(), [&](const Permutation& a) {
      const Permutation a_inv = inverse(a);
      std::vector<Permutation> conj;
      for (const auto& x : r) conj.push_back(compose(a, compose(x, a_inv)));
      std::sort(conj.begin(), conj.end());
      return conj == base;
    });
  });
  return result;
}

namespace {

std::vector<Element> elements_of(const FiniteAbelianGroup& g, Mask mask) {
  std::vector<Element> out;
  for (std::int64_t c = 0; c < g.order(); ++c)
    if (mask >> c & 1) out.push_back(g.decode(c));
  return out;
}

Mask image_mask(const std::vector<int>& code_map, Mask mask) {
  Mask out = 0;
  for (std::size_t c = 0; c < code_map.size(); ++c)
    if (mask >> c & 1) out |= Mask{1} << code_map[c];
  return out;
}

std::vector<std::int64_t> fingerprint(const FiniteAbelianGroup& g, Mask mask, const FiniteGraph& graph) {
  std::vector<std::int64_t> f{std::popcount(mask), graph.connected_components()};
  std::vector<int> distance(graph.order(), -1);
  std::deque<int> queue{0};
  distance[0] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : graph.out_neighbors(v))
      if (distance[w] < 0) {
        distance[w] = distance[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<std::int64_t> profile;
  for (int x : distance) profile.push_back(x);
  std::sort(profile.begin(), profile.end());
  f.insert(f.end(), profile.begin(), profile.end());
  std::vector<std::int64_t> common;
  const auto s = elements_of(g, mask);
  for (const auto& x : s) {
    std::int64_t c = 0;
    for (const auto& y : s)
      if (mask >> g.encode(g.add(x, y)) & 1) ++c;
    common.push_back(c);
  }
  std::sort(common.begin(), common.end());
  f.insert(f.end(), common.begin(), common.end());
  return f;
}

}  // namespace

std::vector<NonCiPair> finite_ci_group_scan(const FiniteAbelianGroup& g, Mode mode, std::stop_token stop) {
  if (g.order() > 64) throw std::invalid_argument("scan: group order must be at most 64");
  if (mode == Mode::Directed && g.order() > 20) throw std::invalid_argument("scan: directed scans need |G| <= 20");

  const auto auts = automorphisms(g);
  std::vector<std::vector<int>> code_maps;
  for (const auto& a : auts) {
    std::vector<int> m(g.order());
    for (std::int64_t c = 0; c < g.order(); ++c) m[c] = static_cast<int>(g.encode(a(g.decode(c))));
    code_maps.push_back(std::move(m));
  }

  // Blocks are the units a connection set is built from.
  std::vector<Mask> blocks;
  std::vector<bool> taken(g.order(), false);
  for (std::int64_t c = 1; c < g.order(); ++c) {
    if (taken[c]) continue;
    Mask block = Mask{1} << c;
    taken[c] = true;
    if (mode == Mode::Undirected) {
      const auto neg = g.encode(g.negate(g.decode(c)));
      block |= Mask{1} << neg;
      taken[neg] = true;
    }
    blocks.push_back(block);
  }

  std::map<std::vector<std::int64_t>, std::vector<std::vector<std::pair<Mask, Permutation>>>> buckets;
  const Mask subsets = Mask{1} << blocks.size();
  for (Mask choice = 1; choice < subsets; ++choice) {
    throw_if_stopped(stop);
    Mask mask = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (choice >> b & 1) mask |= blocks[b];
    const bool canonical =
        std::all_of(code_maps.begin(), code_maps.end(), [&](const auto& m) { return image_mask(m, mask) >= mask; });
    if (!canonical) continue;
    const FiniteGraph graph = cayley_graph(g, elements_of(g, mask));
    auto& classes = buckets[fingerprint(g, mask, graph)];
    bool placed = false;
    for (auto& cls : classes) {
      const FiniteGraph rep = cayley_graph(g, elements_of(g, cls.front().first));
      if (auto iso = graph_iso(rep, graph, stop)) {
        cls.emplace_back(mask, *iso);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({{mask, identity_permutation(static_cast<int>(g.order()))}});
  }

  std::vector<std::tuple<Mask, Mask, Permutation>> raw;
  for (auto& [key, classes] : buckets)
    for (auto& cls : classes)
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
          raw.emplace_back(cls[i].first, cls[j].first, compose(cls[j].second, inverse(cls[i].second)));
  std::sort(raw.begin(), raw.end());

  std::vector<NonCiPair> out;
  for (auto& [a, b, perm] : raw) {
    NonCiPair pair{elements_of(g, a), elements_of(g, b), perm};
    if (!is_isomorphism(cayley_graph(g, pair.s), cayley_graph(g, pair.s_prime), perm))
      throw std::logic_error("scan: isomorphism failed re-verification");
    for (const auto& m : code_maps)
      if (image_mask(m, a) == b) throw std::logic_error("scan: pair is related by a group automorphism");
    out.push_back(std::move(pair));
  }
  return out;
}

ZIsoCrossCheck cross_check_z_iso(const ConnectionSet& s, const ConnectionSet& s_prime, int radius,
                                 std::stop_token stop) {
  ZIsoCrossCheck check;
  check.sign = z_iso_decide(s, s_prime);
  check.modulus = to_int64(2 * std::max(s.max_abs_entry(), s_prime.max_abs_entry()) + 1);
  const FiniteGraph a = torus(s, check.modulus);
  const FiniteGraph b = torus(s_prime, check.modulus);
  if (check.sign) {
    Permutation perm(a.order());
    for (int v = 0; v < a.order(); ++v)
      perm[v] = static_cast<int>(((*check.sign * a.labels()[v][0]) % check.modulus + check.modulus) % check.modulus);
    check.map_verified = is_isomorphism(a, b, perm);
    check.agrees = check.map_verified;
    return check;
  }
  check.torus_isomorphic = graph_iso(a, b, stop).has_value();
  check.components_differ = !(component_count(s) == component_count(s_prime));
  if (!check.torus_isomorphic || check.components_differ) {
    check.agrees = true;
    return check;
  }
  const FiniteGraph ball_a = ball(s, radius);
  const FiniteGraph ball_b = ball(s_prime, radius);
  auto rooted = [](const FiniteGraph& g) {
    Colouring c(g.order(), 0);
    c[*g.find(Label(1, 0))] = 1;
    return c;
  };
  check.ball_isomorphic = graph_iso(ball_a, ball_b, rooted(ball_a), rooted(ball_b), stop).has_value();
  check.agrees = !check.ball_isomorphic;
  return check;
}

std::int64_t mod5_map(std::int64_t i) {
  static constexpr std::int64_t shift[5] = {0, 1, 2, -2, -1};
  return i + shift[((i % 5) + 5) % 5];
}

Mod5Report mod5_demo(std::int64_t window) {
  if (window < 10) throw std::invalid_argument("mod5_demo: window must be at least 10");
  Mod5Report report;
  report.window = window;
  const auto s = ResidueSet::make(5, {1, 4}, Mode::Undirected);
  const auto s_prime = ResidueSet::make(5, {2, 3}, Mode::Undirected);
  const FiniteGraph source = residue_window(s, window);
  const FiniteGraph target = residue_window(s_prime, window + 2);

  std::vector<int> image(source.order());
  for (int v = 0; v < source.order(); ++v) image[v] = *target.find({mod5_map(source.labels()[v][0])});
  report.adjacency_preserved = true;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b) {
      ++report.pairs_checked;
      if (source.has_arc(a, b) != target.has_arc(image[a], image[b])) report.adjacency_preserved = false;
    }

  report.bijective = true;
  for (std::int64_t q = -window / 5 - 1; q <= window / 5 + 1; ++q) {
    std::set<std::int64_t> block;
    for (std::int64_t r = 0; r < 5; ++r) block.insert(mod5_map(5 * q + r));
    if (block != std::set<std::int64_t>{5 * q, 5 * q + 1, 5 * q + 2, 5 * q + 3, 5 * q + 4}) report.bijective = false;
  }

  std::vector<std::int64_t> negated;
  for (auto c : s.classes()) negated.push_back((5 - c) % 5);
  std::sort(negated.begin(), negated.end());
  report.differs_from_plus_minus = s_prime.classes() != s.classes() && s_prime.classes() != negated;
  return report;
}

}  // namespace cayci
