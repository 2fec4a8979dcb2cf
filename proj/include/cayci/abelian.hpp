#pragma once

// Finite abelian groups Z_{m_1} x ... x Z_{m_d} with elements as residue tuples.

#include <cstdint>
#include <string>
#include <vector>

#include "cayci/cayley.hpp"

namespace cayci {

using Element = std::vector<std::int64_t>;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// The direct product of cyclic groups of the given orders (each >= 2).
  /// An empty list is the trivial group.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  std::int64_t order() const { return order_; }
  /// True when every modulus is a prime power.
  bool is_primary() const;

  Element zero() const { return Element(moduli_.size(), 0); }
  Element generator(int i) const;
  bool contains(const Element& x) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(std::int64_t c, const Element& a) const;
  Element reduce(Element a) const;
  std::int64_t element_order(const Element& a) const;

  /// Mixed-radix code in [0, order).
  std::int64_t encode(const Element& a) const;
  Element decode(std::int64_t code) const;
  std::vector<Element> elements() const;

  std::string to_string() const;
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

/// A homomorphism given by the images of the standard generators.
class GroupHom {
 public:
  /// Throws std::invalid_argument when an image has the wrong shape or its
  /// order does not divide the order of the generator it replaces.
  GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<Element> images);
  static GroupHom identity(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& x) const;
  bool is_injective() const;
  bool is_bijective() const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FiniteAbelianGroup source_, target_;
  std::vector<Element> images_;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// All automorphisms, ordered by their generator images.
std::vector<GroupHom> automorphisms(const FiniteAbelianGroup& g);

/// Cay(G; S) with vertices in code order and arcs x -> x + s.
FiniteGraph cayley_graph(const FiniteAbelianGroup& g, const std::vector<Element>& s);

}  // namespace cayci
