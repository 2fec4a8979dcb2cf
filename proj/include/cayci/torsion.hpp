#pragma once

// Extension of automorphisms along chains G_0 <= G_1 <= ... <= G_m of finite
// abelian groups in primary form.

#include <vector>

#include "cayci/abelian.hpp"

namespace cayci {

/// Groups with explicit embeddings; embeddings[i] : groups[i] -> groups[i+1].
class AbelianChain {
 public:
  /// Throws std::invalid_argument when a group is not in primary form or an
  /// embedding is not an injective homomorphism between consecutive groups.
  AbelianChain(std::vector<FiniteAbelianGroup> groups, std::vector<GroupHom> embeddings);
  /// Embeds each group in the next by matching every cyclic factor Z_{p^e} to
  /// the first unused factor Z_{p^f} (f >= e) of the next group.
  static AbelianChain by_inclusion(std::vector<FiniteAbelianGroup> groups);

  const std::vector<FiniteAbelianGroup>& groups() const { return groups_; }
  const std::vector<GroupHom>& embeddings() const { return embeddings_; }
  std::size_t length() const { return groups_.size(); }
  /// The composite embedding groups[from] -> groups[to], from <= to.
  GroupHom embedding(std::size_t from, std::size_t to) const;

 private:
  std::vector<FiniteAbelianGroup> groups_;
  std::vector<GroupHom> embeddings_;
};

/// Natural embedding used by AbelianChain::by_inclusion.
GroupHom inclusion(const FiniteAbelianGroup& from, const FiniteAbelianGroup& to);

/// Extends an automorphism of G across an embedding G -> G'. Each Sylow part
/// must be unchanged, grow by one Z_p factor while staying elementary, or grow
/// from a group of order at most 2 to Z_4; anything else is rejected with an
/// error naming the prime.
GroupHom extend_automorphism(const GroupHom& embedding, const GroupHom& alpha);

/// Stage automorphisms alpha_0, ..., alpha_m with alpha_0 = the given one and
/// each restricting to the previous. For |G_m| <= 3000 the homomorphism,
/// bijectivity and restriction properties are checked exhaustively.
std::vector<GroupHom> chain_extend(const AbelianChain& chain, const GroupHom& alpha);

/// Exhaustive checks used by chain_extend.
bool is_homomorphism_exhaustive(const GroupHom& h);
bool restricts_to(const GroupHom& outer, const GroupHom& embedding, const GroupHom& inner);

}  // namespace cayci
