#include "cayci/cayley.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayci {

const char* to_string(Mode mode) { return mode == Mode::Directed ? "directed" : "undirected"; }

ConnectionSet ConnectionSet::validate(std::vector<IntVector> raw, Index n, Mode mode) {
  if (n <= 0) throw std::invalid_argument("connection set: dimension must be positive");
  if (raw.empty()) throw std::invalid_argument("connection set: empty set");
  for (const auto& v : raw) {
    if (v.size() != n) throw std::invalid_argument("connection set: vector length differs from n");
    if (v.isZero()) throw std::invalid_argument("connection set: contains the zero vector");
  }
  if (mode == Mode::Undirected) {
    const std::size_t count = raw.size();
    for (std::size_t i = 0; i < count; ++i) raw.push_back(-raw[i]);
  }
  std::sort(raw.begin(), raw.end(), LexLess{});
  raw.erase(std::unique(raw.begin(), raw.end(), [](const IntVector& a, const IntVector& b) { return a == b; }),
            raw.end());
  return ConnectionSet(n, mode, std::move(raw));
}

bool ConnectionSet::contains(const IntVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v, LexLess{});
}

ConnectionSet ConnectionSet::transformed(const IntMatrix& m) const {
  if (m.cols() != dim_ || m.rows() != dim_) throw std::invalid_argument("transformed: matrix has wrong shape");
  std::vector<IntVector> image;
  image.reserve(vectors_.size());
  for (const auto& v : vectors_) image.push_back(m * v);
  auto out = validate(std::move(image), dim_, mode_);
  if (out.size() != size()) throw std::invalid_argument("transformed: matrix is not injective on S");
  return out;
}

Integer ConnectionSet::max_abs_entry() const {
  Integer best = 0;
  for (const auto& v : vectors_)
    for (Index i = 0; i < v.size(); ++i) best = std::max(best, Integer(abs(v(i))));
  return best;
}

bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
  return a.dim_ == b.dim_ && a.mode_ == b.mode_ && a.vectors_.size() == b.vectors_.size() &&
         std::equal(a.vectors_.begin(), a.vectors_.end(), b.vectors_.begin(),
                    [](const IntVector& x, const IntVector& y) { return x == y; });
}

Lattice generated_lattice(const ConnectionSet& s) { return Lattice::span(s.vectors(), s.dim()); }

LatticeIndex component_count(const ConnectionSet& s) { return index(generated_lattice(s)); }

FiniteGraph::FiniteGraph(std::vector<Label> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  const int n = order();
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end(),
                          [](const Arc& a, const Arc& b) { return a.from == b.from && a.to == b.to; }),
              arcs_.end());
  out_.assign(n, {});
  in_.assign(n, {});
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& a : arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw std::invalid_argument("FiniteGraph: arc references a missing vertex");
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
    adjacency_[static_cast<std::size_t>(a.from) * n + a.to] = 1;
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
  for (int v = 0; v < n; ++v) lookup_.emplace(labels_[v], v);
}

bool FiniteGraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return has_arc(a.to, a.from); });
}

std::optional<int> FiniteGraph::find(const Label& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FiniteGraph FiniteGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> position(order(), -1);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = static_cast<int>(i);
    labels.push_back(labels_[vertices[i]]);
  }
  std::vector<Arc> arcs;
  for (const auto& a : arcs_)
    if (position[a.from] >= 0 && position[a.to] >= 0) arcs.push_back({position[a.from], position[a.to], a.generator});
  return FiniteGraph(std::move(labels), std::move(arcs));
}

int FiniteGraph::connected_components() const {
  std::vector<int> parent(order());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = order();
  for (const auto& a : arcs_) {
    int x = root(a.from), y = root(a.to);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components;
}

namespace {

Label to_label(const IntVector& v) {
  Label l(v.size());
  for (Index i = 0; i < v.size(); ++i) l[i] = to_int64(v(i));
  return l;
}

std::vector<Label> generator_labels(const ConnectionSet& s) {
  std::vector<Label> g;
  for (const auto& v : s.vectors()) g.push_back(to_label(v));
  return g;
}

Label add(const Label& a, const Label& b) {
  Label c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

FiniteGraph ball(const ConnectionSet& s, int radius) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  const auto gens = generator_labels(s);
  std::vector<Label> steps = gens;
  for (const auto& g : gens) {
    Label neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    steps.push_back(neg);
  }
  std::map<Label, int> distance;
  std::vector<Label> order;
  std::deque<Label> queue;
  const Label origin(s.dim(), 0);
  distance[origin] = 0;
  order.push_back(origin);
  queue.push_back(origin);
  while (!queue.empty()) {
    Label x = queue.front();
    queue.pop_front();
    const int d = distance[x];
    if (d == radius) continue;
    for (const auto& st : steps) {
      Label y = add(x, st);
      if (distance.emplace(y, d + 1).second) {
        order.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  std::map<Label, int> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto it = position.find(add(order[i], gens[g]));
      if (it != position.end()) arcs.push_back({static_cast<int>(i), it->second, static_cast<int>(g)});
    }
  return FiniteGraph(std::move(order), std::move(arcs));
}

FiniteGraph torus(const ConnectionSet& s, std::int64_t modulus) {
  const Integer bound = 2 * s.max_abs_entry();
  if (Integer(modulus) <= bound)
    throw std::invalid_argument("torus: modulus " + std::to_string(modulus) + " must exceed 2*max|s| = " +
                                bound.str());
  const auto gens = generator_labels(s);
  const int n = static_cast<int>(s.dim());
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= modulus;
  auto encode = [&](const Label& x) {
    std::int64_t code = 0;
    for (int i = 0; i < n; ++i) code = code * modulus + ((x[i] % modulus) + modulus) % modulus;
    return static_cast<int>(code);
  };
  std::vector<Label> labels(count);
  for (std::int64_t c = 0; c < count; ++c) {
    Label x(n);
    std::int64_t rest = c;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = rest % modulus;
      rest /= modulus;
    }
    labels[c] = x;
  }
  std::vector<Arc> arcs;
  for (std::int64_t c = 0; c < count; ++c)
    for (std::size_t g = 0; g < gens.size(); ++g)
      arcs.push_back({static_cast<int>(c), encode(add(labels[c], gens[g])), static_cast<int>(g)});
  return FiniteGraph(std::move(labels), std::move(arcs));
}

ResidueSet ResidueSet::make(std::int64_t modulus, std::vector<std::int64_t> classes, Mode mode) {
  if (modulus < 1) throw std::invalid_argument("residue set: modulus must be positive");
  for (auto& c : classes) {
    if (c < 0 || c >= modulus) throw std::invalid_argument("residue set: class out of range");
  }
  if (mode == Mode::Undirected) {
    const std::size_t count = classes.size();
    for (std::size_t i = 0; i < count; ++i) classes.push_back((modulus - classes[i]) % modulus);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.empty() || (modulus == 1))
    throw std::invalid_argument("residue set: no nonzero elements");
  return ResidueSet(modulus, std::move(classes));
}

bool ResidueSet::contains(std::int64_t i) const {
  if (i == 0) return false;
  const std::int64_t r = ((i % modulus_) + modulus_) % modulus_;
  return std::binary_search(classes_.begin(), classes_.end(), r);
}

FiniteGraph residue_window(const ResidueSet& r, std::int64_t window) {
  if (window < r.modulus()) throw std::invalid_argument("residue_window: window must be at least the modulus");
  std::vector<Label> labels;
  for (std::int64_t i = -window; i <= window; ++i) labels.push_back({i});
  std::vector<Arc> arcs;
  const int size = static_cast<int>(labels.size());
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (r.contains(labels[b][0] - labels[a][0])) arcs.push_back({a, b, -1});
  return FiniteGraph(std::move(labels), std::move(arcs));
}

}  // namespace cayci
