#include "cayci/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cayci {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t v = 0; v < q.size(); ++v) r[v] = p[q[v]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) r[p[v]] = static_cast<int>(v);
  return r;
}

bool is_isomorphism(const FiniteGraph& a, const FiniteGraph& b, const Permutation& perm) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(perm.size()) != n || a.arcs().size() != b.arcs().size()) return false;
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& arc : a.arcs())
    if (!b.has_arc(perm[arc.from], perm[arc.to])) return false;
  return true;
}

namespace {

/// Colour refinement on the disjoint union of two graphs of equal order.
class JointSearch {
 public:
  JointSearch(const FiniteGraph& a, const FiniteGraph& b, std::stop_token stop)
      : a_(a), b_(b), n_(a.order()), stop_(std::move(stop)) {}

  void run(Colouring colours, const std::function<bool(const Permutation&)>& visit) {
    visit_ = &visit;
    search(refine(std::move(colours)));
  }

 private:
  const std::vector<int>& out(int v) const { return v < n_ ? a_.out_neighbors(v) : b_.out_neighbors(v - n_); }
  const std::vector<int>& in(int v) const { return v < n_ ? a_.in_neighbors(v) : b_.in_neighbors(v - n_); }
  int offset(int v) const { return v < n_ ? 0 : n_; }

  Colouring refine(Colouring colours) const {
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::size_t classes = std::set<int>(colours.begin(), colours.end()).size();
    while (true) {
      std::vector<Signature> sig(2 * n_);
      for (int v = 0; v < 2 * n_; ++v) {
        std::vector<int> o, i;
        for (int w : out(v)) o.push_back(colours[w + offset(v)]);
        for (int w : in(v)) i.push_back(colours[w + offset(v)]);
        std::sort(o.begin(), o.end());
        std::sort(i.begin(), i.end());
        sig[v] = {colours[v], std::move(o), std::move(i)};
      }
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < 2 * n_; ++v)
        colours[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      if (distinct.size() == classes) return colours;
      classes = distinct.size();
    }
  }

  bool search(const Colouring& colours) {
    throw_if_stopped(stop_);
    const int palette = *std::max_element(colours.begin(), colours.end()) + 1;
    std::vector<int> count_a(palette, 0), count_b(palette, 0);
    for (int v = 0; v < n_; ++v) {
      ++count_a[colours[v]];
      ++count_b[colours[v + n_]];
    }
    if (count_a != count_b) return false;

    int target = -1;
    for (int c = 0; c < palette; ++c)
      if (count_a[c] > 1 && (target < 0 || count_a[c] < count_a[target])) target = c;

    if (target < 0) {
      std::vector<int> vertex_of(palette);
      for (int v = 0; v < n_; ++v) vertex_of[colours[v + n_]] = v;
      Permutation perm(n_);
      for (int v = 0; v < n_; ++v) perm[v] = vertex_of[colours[v]];
      if (!is_isomorphism(a_, b_, perm)) return false;
      return (*visit_)(perm);
    }

    int pivot = 0;
    while (colours[pivot] != target) ++pivot;
    for (int w = 0; w < n_; ++w) {
      if (colours[w + n_] != target) continue;
      Colouring next = colours;
      next[pivot] = palette;
      next[w + n_] = palette;
      if (search(refine(std::move(next)))) return true;
    }
    return false;
  }

  const FiniteGraph& a_;
  const FiniteGraph& b_;
  int n_;
  std::stop_token stop_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

Colouring joint_colouring(int n, const Colouring& colours_a, const Colouring& colours_b) {
  Colouring joint(2 * n, 0);
  if (colours_a.empty() && colours_b.empty()) return joint;
  if (static_cast<int>(colours_a.size()) != n || static_cast<int>(colours_b.size()) != n)
    throw std::invalid_argument("graph_iso: colouring size differs from the vertex count");
  std::copy(colours_a.begin(), colours_a.end(), joint.begin());
  std::copy(colours_b.begin(), colours_b.end(), joint.begin() + n);
  std::vector<int> distinct = joint;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& c : joint) c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
  return joint;
}

}  // namespace

void for_each_isomorphism(const FiniteGraph& a, const FiniteGraph& b, const Colouring& colours_a,
                          const Colouring& colours_b, const std::function<bool(const Permutation&)>& visit,
                          std::stop_token stop) {
  if (a.order() != b.order() || a.arcs().size() != b.arcs().size()) return;
  if (a.order() == 0) {
    visit({});
    return;
  }
  JointSearch(a, b, std::move(stop)).run(joint_colouring(a.order(), colours_a, colours_b), visit);
}

std::optional<Permutation> graph_iso(const FiniteGraph& a, const FiniteGraph& b, std::stop_token stop) {
  return graph_iso(a, b, {}, {}, std::move(stop));
}

std::optional<Permutation> graph_iso(const FiniteGraph& a, const FiniteGraph& b, const Colouring& colours_a,
                                     const Colouring& colours_b, std::stop_token stop) {
  std::optional<Permutation> found;
  for_each_isomorphism(
      a, b, colours_a, colours_b,
      [&](const Permutation& p) {
        found = p;
        return true;
      },
      std::move(stop));
  return found;
}

std::vector<Permutation> automorphism_group(const FiniteGraph& g, std::stop_token stop) {
  return automorphism_group(g, {}, std::move(stop));
}

std::vector<Permutation> automorphism_group(const FiniteGraph& g, const Colouring& colours, std::stop_token stop) {
  std::vector<Permutation> group;
  for_each_isomorphism(
      g, g, colours, colours,
      [&](const Permutation& p) {
        group.push_back(p);
        return false;
      },
      std::move(stop));
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace cayci
