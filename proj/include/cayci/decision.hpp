#pragma once

// CI verdicts for Cayley graphs on Z^n and isomorphism decisions with
// explicit, re-verified witnesses.

#include <map>
#include <optional>
#include <stop_token>

#include "cayci/cayley.hpp"
#include "cayci/symmetry.hpp"

namespace cayci {

enum class CiReason {
  N1Rigidity,
  ComponentsInfinite,
  ComponentsNotSquarefree,
  IndexObstruction,
  ProductConditionHolds,
  ProductConditionFails,
};

const char* to_string(CiReason reason);

/// Evidence that Cay(Z^n; S) is isomorphic to Cay(Z^n; S') although no
/// automorphism of Z^n maps S to S'.
struct NonCiWitness {
  ConnectionSet s_prime;
  /// Isomorphism of the spans in basis coordinates (the component map).
  IntMatrix component_map;
  /// For quotient failures: an automorphism of span(S), in basis
  /// coordinates, that does not factor through the product.
  std::optional<IntMatrix> non_extendable;
};

struct CiVerdict {
  bool is_ci = false;
  CiReason reason = CiReason::N1Rigidity;
  bool uncertain = false;
  LatticeIndex components = LatticeIndex(Integer(1));
  std::optional<CoverageCertificate> coverage;
  std::optional<NonCiWitness> witness;
  /// Set for the index pre-check: |Stab(S)| and the index of A in Q.
  std::optional<std::pair<std::size_t, Integer>> index_bound;
};

/// Decides whether Cay(Z^n; S) is a CI graph. n = 1 is always CI. For n >= 2
/// the quotient computations support n <= 4 and index k < 2^16 and throw
/// std::domain_error beyond that.
CiVerdict decide_ci(const ConnectionSet& s, std::stop_token stop = {});

/// A verified S' for a negative verdict, or nullopt when construction or
/// verification fails.
std::optional<NonCiWitness> non_ci_witness(const ConnectionSet& s, const CiVerdict& verdict,
                                           std::stop_token stop = {});

/// Checks the witness contract: span(S) and span(S') are isomorphic by a
/// linear map sending S to S', the component counts agree, and exhaustive
/// search finds no ambient automorphism sending S to S'.
bool verify_non_ci_witness(const ConnectionSet& s, const ConnectionSet& s_prime, std::stop_token stop = {});

enum class IsoKind { Ambient, Componentwise, None };

const char* to_string(IsoKind kind);

struct IsoWitness {
  IsoKind kind = IsoKind::None;
  std::optional<IntMatrix> ambient;        ///< unimodular, maps S onto S'
  std::optional<IntMatrix> component_map;  ///< span(S) -> span(S') in basis coordinates
  LatticeIndex components = LatticeIndex(Integer(1));
  LatticeIndex components_prime = LatticeIndex(Integer(1));
};

/// Decides Cay(Z^n; S) = Cay(Z^n; S') up to isomorphism. Sets must share n and
/// mode. Components of different rank are treated as non-isomorphic.
IsoWitness are_isomorphic(const ConnectionSet& s, const ConnectionSet& s_prime, std::stop_token stop = {});

/// For finite S, S' in Z: +1 when S' = S, -1 when S' = -S != S, else nullopt.
std::optional<int> z_iso_decide(const ConnectionSet& s, const ConnectionSet& s_prime);

enum class Linearity { Linear, NotLinear, NotDetermined };

const char* to_string(Linearity result);

using VertexMap = std::map<Label, Label>;

/// Checks that phi, a bijection of ball(S, radius) fixing 0, agrees on
/// ball(S, radius - 1) with the linear map it determines on S. Requires
/// radius >= 2.
Linearity verify_linearity(const ConnectionSet& s, const VertexMap& phi, int radius);

}  // namespace cayci
