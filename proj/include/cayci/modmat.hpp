#pragma once

// Small square matrices over Z_k and the finite matrix groups built from them.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayci/scalar.hpp"

namespace cayci {

/// An n x n matrix over Z_k with n <= 4 and k < 2^16.
class ModMatrix {
 public:
  static constexpr int kMaxDim = 4;

  ModMatrix(int n, std::uint32_t k);
  static ModMatrix identity(int n, std::uint32_t k);
  /// Entrywise reduction of an integer matrix.
  static ModMatrix reduce(const IntMatrix& m, std::uint32_t k);

  int dim() const { return n_; }
  std::uint32_t modulus() const { return k_; }
  std::uint32_t operator()(int i, int j) const { return e_[i * kMaxDim + j]; }
  void set(int i, int j, std::int64_t value);

  std::uint32_t det() const;
  bool is_identity() const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;
  friend auto operator<=>(const ModMatrix& a, const ModMatrix& b) = default;

  std::size_t hash() const;
  IntMatrix to_integer() const;

 private:
  int n_;
  std::uint32_t k_;
  std::array<std::uint16_t, kMaxDim * kMaxDim> e_{};
};

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const { return m.hash(); }
};

using ModMatrixSet = std::unordered_set<ModMatrix, ModMatrixHash>;

/// Closure of the generators under multiplication (a finite group, since
/// every generator is invertible). Throws std::length_error past `limit`.
ModMatrixSet generate_group(const std::vector<ModMatrix>& generators, int n, std::uint32_t k,
                            std::size_t limit = 4'000'000);

/// Sorted copy, for deterministic output.
std::vector<ModMatrix> sorted(const ModMatrixSet& set);

/// Breadth-first walk of {M in GL(n, Z_k) : det = +-1} by elementary integer
/// generators, carrying an integer unimodular lift of every element. The
/// visitor returns true to stop.
void walk_signed_quotient(int n, std::uint32_t k,
                          const std::function<bool(const ModMatrix&, const IntMatrix&)>& visit);

/// An integer unimodular matrix reducing to q (which must have det = +-1).
IntMatrix lift_to_gl(const ModMatrix& q);

/// |{M in GL(n, Z_k) : det M = +-1}| for square-free k.
Integer signed_quotient_order(int n, const Integer& k);

/// |{M in GL(n, Z_k) : det M = +-1, M(i,0) = 0 for i >= 1}| for square-free k.
Integer congruence_subgroup_order(int n, const Integer& k);

bool is_signed_unit_det(const ModMatrix& m);
/// det = +-1 and the first column below the diagonal vanishes.
bool in_congruence_subgroup(const ModMatrix& m);

}  // namespace cayci
