#pragma once

// Finite-rank subgroups of Z^n.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayci/scalar.hpp"

namespace cayci {

/// |Z^n : L|, which is either a positive integer or infinite (rank < n).
class LatticeIndex {
 public:
  struct Infinite {
    friend bool operator==(Infinite, Infinite) { return true; }
  };

  explicit LatticeIndex(Integer finite) : value_(std::move(finite)) {}
  static LatticeIndex infinite() { return LatticeIndex(Infinite{}); }

  bool is_finite() const { return std::holds_alternative<Integer>(value_); }
  /// Throws std::logic_error when infinite.
  const Integer& value() const;
  std::string to_string() const;

  friend bool operator==(const LatticeIndex& a, const LatticeIndex& b) { return a.value_ == b.value_; }

 private:
  explicit LatticeIndex(Infinite) : value_(Infinite{}) {}
  std::variant<Integer, Infinite> value_;
};

/// A subgroup of Z^n with a canonical basis: the columns of basis() are in
/// column Hermite form (the transpose of the row HNF of the generators), so
/// two lattices are equal iff their bases are equal entry for entry.
class Lattice {
 public:
  /// The subgroup generated by `vectors`; throws when all of them are zero.
  static Lattice span(const std::vector<IntVector>& vectors, Index n);
  /// Lattice with the given (n x r) basis columns, which must be independent.
  static Lattice from_basis(const IntMatrix& basis);
  /// k*Z x Z^(n-1).
  static Lattice standard(Index n, const Integer& k);

  Index ambient_dim() const { return basis_.rows(); }
  Index rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  /// The lattice M*L for an n x n integer matrix M of full rank.
  Lattice image(const IntMatrix& m) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return equal(a.basis_, b.basis_); }

 private:
  explicit Lattice(IntMatrix canonical) : basis_(std::move(canonical)) {}
  IntMatrix basis_;
};

LatticeIndex index(const Lattice& lattice);

/// A basis Y of Z^n (columns y_i) and factors a_1 | a_2 | ... | a_r with
/// {a_i y_i} a basis of the lattice.
struct SimultaneousBasis {
  IntMatrix y;
  IntMatrix y_inverse;
  std::vector<Integer> factors;
};

SimultaneousBasis simultaneous_basis(const Lattice& lattice);

/// A unimodular sigma with sigma(L) = kZ x Z^(n-1). Requires n > 1 and a
/// finite square-free index k; returns the identity when L is already in that
/// form.
IntMatrix standardize(const Lattice& lattice);

/// Coordinates of v in the stored basis, or nullopt when v is not in L.
std::optional<IntVector> coordinates(const Lattice& lattice, const IntVector& v);

/// The saturation (Q L) intersected with Z^n.
Lattice saturation(const Lattice& lattice);

}  // namespace cayci
