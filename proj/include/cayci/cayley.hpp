#pragma once

// Connection sets on Z^n and finite pieces of their Cayley graphs.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cayci/lattice.hpp"
#include "cayci/scalar.hpp"

namespace cayci {

enum class Mode { Directed, Undirected };

const char* to_string(Mode mode);

/// A finite set of nonzero vectors in Z^n, deduplicated and sorted
/// lexicographically. Undirected sets are stored closed under negation.
class ConnectionSet {
 public:
  /// Normalizes raw input: rejects an empty set, zero vectors and wrong
  /// lengths, and closes undirected input under negation.
  static ConnectionSet validate(std::vector<IntVector> raw, Index n, Mode mode);

  Index dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const std::vector<IntVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool contains(const IntVector& v) const;

  /// {M s : s in S}; M must be injective on S (any nonsingular M is).
  ConnectionSet transformed(const IntMatrix& m) const;

  /// Largest absolute coordinate.
  Integer max_abs_entry() const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b);

 private:
  ConnectionSet(Index n, Mode mode, std::vector<IntVector> vectors)
      : dim_(n), mode_(mode), vectors_(std::move(vectors)) {}
  Index dim_;
  Mode mode_;
  std::vector<IntVector> vectors_;
};

/// <S>, the lattice whose cosets are the components of the underlying graph.
Lattice generated_lattice(const ConnectionSet& s);

/// Number of components of the underlying undirected graph of Cay(Z^n; S).
LatticeIndex component_count(const ConnectionSet& s);

using Label = std::vector<std::int64_t>;

struct Arc {
  int from;
  int to;
  int generator;  ///< index into the generating set, -1 when not applicable

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A finite digraph with labelled vertices. Arcs are unique and sorted.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(std::vector<Label> labels, std::vector<Arc> arcs);

  int order() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  bool has_arc(int u, int v) const { return adjacency_[static_cast<std::size_t>(u) * order() + v] != 0; }
  /// True when every arc has its reverse.
  bool is_symmetric() const;
  std::optional<int> find(const Label& label) const;

  /// Induced subgraph on the given vertex indices (in that order).
  FiniteGraph induced(const std::vector<int>& vertices) const;
  int connected_components() const;

 private:
  std::vector<Label> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::uint8_t> adjacency_;
  std::map<Label, int> lookup_;
};

/// Vertices within undirected distance `radius` of 0 (steps in S and -S),
/// labelled by coordinates, with every arc x -> x+s between retained vertices.
FiniteGraph ball(const ConnectionSet& s, int radius);

/// Cay((Z_m)^n; S mod m). Requires m > 2 * max |coordinate|.
FiniteGraph torus(const ConnectionSet& s, std::int64_t modulus);

/// The union of residue classes {i : i mod m in classes} as a connection set
/// on Z. Class 0 is allowed; the element 0 itself never is.
class ResidueSet {
 public:
  static ResidueSet make(std::int64_t modulus, std::vector<std::int64_t> classes, Mode mode);
  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& classes() const { return classes_; }
  bool contains(std::int64_t i) const;

 private:
  ResidueSet(std::int64_t m, std::vector<std::int64_t> c) : modulus_(m), classes_(std::move(c)) {}
  std::int64_t modulus_;
  std::vector<std::int64_t> classes_;
};

/// Induced sub(di)graph of Cay(Z; R) on {-N, ..., N}. Requires N >= m.
FiniteGraph residue_window(const ResidueSet& r, std::int64_t window);

}  // namespace cayci
