#pragma once

// Setwise stabilizers of connection sets inside Aut(H), extension of
// H-automorphisms to Z^n, and the product condition
//     Aut(H) = Aut(H)_{Z^n} . Stab_{Aut(H)}(S)
// decided through the reduction mod k = |Z^n : H|.
//
// Automorphisms of a lattice are integer unimodular r x r matrices acting on
// coordinates with respect to the lattice's stored basis.

#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <vector>

#include "cayci/cancel.hpp"
#include "cayci/cayley.hpp"
#include "cayci/lattice.hpp"
#include "cayci/modmat.hpp"

namespace cayci {

/// An automorphism of a lattice: a unimodular r x r matrix acting on
/// coordinates in the lattice's stored basis.
using HAut = IntMatrix;

/// Row-major lexicographic order on same-shape matrices.
bool matrix_less(const IntMatrix& a, const IntMatrix& b);

struct SymmetryGroup {
  Lattice lattice;
  std::vector<IntMatrix> elements;  ///< sorted by matrix_less

  std::size_t order() const { return elements.size(); }
  bool contains(const IntMatrix& m) const;
};

/// Visits every f : from -> to (in basis coordinates, integral and
/// unimodular) with f(S) = S', in a deterministic order. The visitor returns
/// true to stop early. Both sets must span their lattices.
void for_each_transporter(const Lattice& from, const ConnectionSet& s, const Lattice& to,
                          const ConnectionSet& s_prime,
                          const std::function<bool(const IntMatrix&)>& visit,
                          std::stop_token stop = {});

/// {tau in Aut(L) : tau(S) = S}. Requires span(S) = L.
SymmetryGroup set_stabilizer(const Lattice& lattice, const ConnectionSet& s, std::stop_token stop = {});

/// Some tau in Aut(L) with tau(S) = S'. Requires span(S) = span(S') = L.
std::optional<IntMatrix> transporter(const Lattice& lattice, const ConnectionSet& s, const ConnectionSet& s_prime,
                                     std::stop_token stop = {});

/// Given f : from -> to in basis coordinates (from, to of equal rank), a
/// unimodular n x n M agreeing with f on `from`, if one exists.
std::optional<IntMatrix> ambient_extension(const Lattice& from, const Lattice& to, const IntMatrix& f);

/// The ambient matrix extending tau in Aut(L), when tau extends to Z^n.
/// For full-rank L this is B tau B^{-1} when that is integral and unimodular.
std::optional<IntMatrix> extends_to_ambient(const Lattice& lattice, const IntMatrix& tau);

/// The standardized H-basis {k e_1, e_2, ..., e_n} pulled back by sigma.
struct StandardFrame {
  Integer k;
  IntMatrix sigma;     ///< unimodular, sigma(H) = kZ x Z^(n-1)
  IntMatrix basis;     ///< columns sigma^{-1} k e_1, sigma^{-1} e_2, ...
  IntMatrix to_frame;  ///< coordinates change: stored-basis coords -> frame coords
  IntMatrix from_frame;
};

StandardFrame standard_frame(const Lattice& lattice);

/// Conjugates an automorphism from stored-basis coordinates into frame coordinates.
IntMatrix in_frame(const StandardFrame& frame, const IntMatrix& tau);
/// Inverse of in_frame.
IntMatrix out_of_frame(const StandardFrame& frame, const IntMatrix& t);

/// tau(S) for tau given in frame coordinates; every vector of S must lie in H.
ConnectionSet apply_in_frame(const StandardFrame& frame, const IntMatrix& t, const ConnectionSet& s);

/// Integer generators of the extendable subgroup in frame coordinates
/// (unimodular, first column below the diagonal divisible by k).
std::vector<IntMatrix> extendable_generators(int n, const Integer& k);

/// Image of the extendable subgroup in GL(n, Z_k).
struct QuotientGroup {
  int n = 0;
  std::uint32_t k = 0;
  bool explicit_elements = false;  ///< false when too large to enumerate
  ModMatrixSet elements;
  Integer order;            ///< |elements| when explicit, else the congruence count
  Integer described_order;  ///< |{det = +-1, first column below diagonal = 0}|
  bool uncertain = false;   ///< generated group not verified equal to the described set

  bool contains(const ModMatrix& m) const;
};

/// Subgroup generation from the reductions of extendable_generators, checked
/// against the congruence-described subgroup. Requires n in [2, 4] and k >= 2
/// square-free with k < 2^16.
QuotientGroup congruence_image(int n, const Integer& k, std::size_t enumeration_limit = 2'000'000);

struct CoverageCertificate {
  Integer k;
  Integer a_order;             ///< |A|, image of the extendable subgroup
  Integer b_order;             ///< |B|, image of the stabilizer
  Integer intersection_order;  ///< |A n B|
  Integer q_order;             ///< |{det = +-1}| in GL(n, Z_k)
  bool uncertain = false;
  IntMatrix sigma;
  std::vector<ModMatrix> b_elements;        ///< sorted
  std::optional<ModMatrix> uncovered;       ///< element of Q outside A.B
  std::optional<IntMatrix> uncovered_lift;  ///< integer lift, frame coordinates
  std::size_t stabilizer_order = 0;

  /// |A|.|B| / |A n B|
  Integer covered_order() const;
};

struct ProductConditionResult {
  bool holds = false;
  CoverageCertificate certificate;
};

/// Decides Aut(H) = Aut(H)_{Z^n} . Stab(S) with H = span(S). Requires n >= 2
/// and a finite square-free index; k = 1 holds trivially.
ProductConditionResult product_condition(const Lattice& lattice, const ConnectionSet& s, std::stop_token stop = {});

/// Finds some q in Q \ A.B (by a breadth-first walk of Q), with an integer lift.
std::optional<std::pair<ModMatrix, IntMatrix>> find_uncovered(const QuotientGroup& a,
                                                              const std::vector<ModMatrix>& b,
                                                              std::stop_token stop = {});

}  // namespace cayci
