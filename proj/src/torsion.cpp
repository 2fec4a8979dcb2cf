#include "cayci/torsion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cayci {

namespace {

std::int64_t smallest_prime(std::int64_t m) {
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return p;
  return m;
}

std::vector<int> factors_at(const FiniteAbelianGroup& g, std::int64_t p) {
  std::vector<int> out;
  for (int i = 0; i < g.rank(); ++i)
    if (smallest_prime(g.moduli()[i]) == p) out.push_back(i);
  return out;
}

std::int64_t order_of(const FiniteAbelianGroup& g, const std::vector<int>& factors) {
  std::int64_t order = 1;
  for (int i : factors) order *= g.moduli()[i];
  return order;
}

/// Elements of g supported on the given factors.
std::vector<Element> part_elements(const FiniteAbelianGroup& g, const std::vector<int>& factors) {
  std::vector<Element> out{g.zero()};
  for (int i : factors) {
    std::vector<Element> next;
    for (const auto& x : out)
      for (std::int64_t c = 0; c < g.moduli()[i]; ++c) {
        Element y = x;
        y[i] = c;
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

bool all_equal_to(const FiniteAbelianGroup& g, const std::vector<int>& factors, std::int64_t p) {
  return std::all_of(factors.begin(), factors.end(), [&](int i) { return g.moduli()[i] == p; });
}

}  // namespace

GroupHom inclusion(const FiniteAbelianGroup& from, const FiniteAbelianGroup& to) {
  std::vector<bool> used(to.rank(), false);
  std::vector<Element> images;
  for (int i = 0; i < from.rank(); ++i) {
    const std::int64_t m = from.moduli()[i];
    const std::int64_t p = smallest_prime(m);
    int match = -1;
    for (int k = 0; k < to.rank() && match < 0; ++k)
      if (!used[k] && smallest_prime(to.moduli()[k]) == p && to.moduli()[k] % m == 0) match = k;
    if (match < 0)
      throw std::invalid_argument("inclusion: no factor of " + to.to_string() + " receives Z" + std::to_string(m));
    used[match] = true;
    images.push_back(to.scale(to.moduli()[match] / m, to.generator(match)));
  }
  return GroupHom(from, to, std::move(images));
}

AbelianChain::AbelianChain(std::vector<FiniteAbelianGroup> groups, std::vector<GroupHom> embeddings)
    : groups_(std::move(groups)), embeddings_(std::move(embeddings)) {
  if (groups_.empty()) throw std::invalid_argument("chain: no groups");
  if (embeddings_.size() + 1 != groups_.size()) throw std::invalid_argument("chain: one embedding per step is required");
  for (const auto& g : groups_)
    if (!g.is_primary()) throw std::invalid_argument("chain: " + g.to_string() + " is not in primary form");
  for (std::size_t i = 0; i < embeddings_.size(); ++i) {
    if (!(embeddings_[i].source() == groups_[i]) || !(embeddings_[i].target() == groups_[i + 1]))
      throw std::invalid_argument("chain: embedding " + std::to_string(i) + " has the wrong groups");
    if (!embeddings_[i].is_injective())
      throw std::invalid_argument("chain: embedding " + std::to_string(i) + " is not injective");
  }
}

AbelianChain AbelianChain::by_inclusion(std::vector<FiniteAbelianGroup> groups) {
  std::vector<GroupHom> embeddings;
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) embeddings.push_back(inclusion(groups[i], groups[i + 1]));
  return AbelianChain(std::move(groups), std::move(embeddings));
}

GroupHom AbelianChain::embedding(std::size_t from, std::size_t to) const {
  if (from > to || to >= groups_.size()) throw std::out_of_range("chain: bad embedding range");
  GroupHom h = GroupHom::identity(groups_[from]);
  for (std::size_t i = from; i < to; ++i) h = compose(embeddings_[i], h);
  return h;
}

GroupHom extend_automorphism(const GroupHom& embedding, const GroupHom& alpha) {
  const auto& prev = embedding.source();
  const auto& next = embedding.target();
  if (!(alpha.source() == prev) || !(alpha.target() == prev))
    throw std::invalid_argument("extend_automorphism: automorphism is not on the embedded group");

  std::vector<Element> images(next.rank());
  std::set<std::int64_t> primes;
  for (auto m : next.moduli()) primes.insert(smallest_prime(m));
  for (auto m : prev.moduli()) primes.insert(smallest_prime(m));

  for (const std::int64_t p : primes) {
    const auto prev_part = factors_at(prev, p);
    const auto next_part = factors_at(next, p);
    const auto prev_order = order_of(prev, prev_part);
    const auto next_order = order_of(next, next_part);
    const auto domain = part_elements(prev, prev_part);
    const std::string where = "extend_automorphism: unsupported growth at prime " + std::to_string(p);

    if (next_order == prev_order) {
      for (int j : next_part)
        for (const auto& x : domain)
          if (embedding(x) == next.generator(j)) images[j] = embedding(alpha(x));
    } else if (next_order == prev_order * p && all_equal_to(prev, prev_part, p) && all_equal_to(next, next_part, p)) {
      std::set<Element> embedded;
      for (const auto& x : domain) embedded.insert(embedding(x));
      int complement = -1;
      for (int j : next_part)
        if (!embedded.count(next.generator(j))) {
          complement = j;
          break;
        }
      if (complement < 0) throw std::logic_error(where);
      const Element h = next.generator(complement);
      for (int j : next_part)
        for (std::int64_t c = 0; c < p && images[j].empty(); ++c)
          for (const auto& x : domain)
            if (next.add(embedding(x), next.scale(c, h)) == next.generator(j)) {
              images[j] = next.add(embedding(alpha(x)), next.scale(c, h));
              break;
            }
    } else if (p == 2 && next_part.size() == 1 && next.moduli()[next_part[0]] == 4 && prev_order <= 2) {
      images[next_part[0]] = next.generator(next_part[0]);
    } else {
      throw std::invalid_argument(where);
    }
    for (int j : next_part)
      if (images[j].empty()) throw std::logic_error(where + ": generator not reached");
  }

  GroupHom result(next, next, std::move(images));
  if (!result.is_bijective()) throw std::logic_error("extend_automorphism: result is not bijective");
  return result;
}

bool is_homomorphism_exhaustive(const GroupHom& h) {
  const auto elements = h.source().elements();
  std::vector<Element> image;
  for (const auto& x : elements) image.push_back(h(x));
  const auto& g = h.source();
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (image[g.encode(g.add(elements[a], elements[b]))] != h.target().add(image[a], image[b])) return false;
  return true;
}

bool restricts_to(const GroupHom& outer, const GroupHom& embedding, const GroupHom& inner) {
  for (const auto& x : inner.source().elements())
    if (outer(embedding(x)) != embedding(inner(x))) return false;
  return true;
}

std::vector<GroupHom> chain_extend(const AbelianChain& chain, const GroupHom& alpha) {
  if (!(alpha.source() == chain.groups().front()) || !(alpha.target() == chain.groups().front()))
    throw std::invalid_argument("chain_extend: automorphism is not on the first group");
  if (!alpha.is_bijective()) throw std::invalid_argument("chain_extend: map is not an automorphism");
  std::vector<GroupHom> stages{alpha};
  for (const auto& e : chain.embeddings()) stages.push_back(extend_automorphism(e, stages.back()));

  const std::size_t last = stages.size() - 1;
  if (chain.groups().back().order() <= 3000) {
    for (std::size_t i = 0; i <= last; ++i) {
      if (!is_homomorphism_exhaustive(stages[i]) || !stages[i].is_bijective())
        throw std::logic_error("chain_extend: stage " + std::to_string(i) + " is not an automorphism");
      if (!restricts_to(stages[last], chain.embedding(i, last), stages[i]))
        throw std::logic_error("chain_extend: restriction to stage " + std::to_string(i) + " differs");
    }
  }
  return stages;
}

}  // namespace cayci
