#pragma once

// Brute-force checks on finite Cayley graphs: conjugacy of regular subgroups,
// exhaustive non-CI scans, and the mod-5 isomorphism on Z.

#include <cstdint>
#include <optional>
#include <stop_token>
#include <vector>

#include "cayci/abelian.hpp"
#include "cayci/graph_iso.hpp"

namespace cayci {

struct FiniteCiResult {
  bool is_ci = false;
  std::size_t automorphism_order = 0;
  std::size_t regular_subgroups = 0;  ///< regular subgroups isomorphic to G
};

/// Whether every regular subgroup of Aut(Cay(G; S)) isomorphic to G is
/// conjugate to the translation group. S must avoid 0.
FiniteCiResult ci_check_finite(const FiniteAbelianGroup& g, const std::vector<Element>& s, std::stop_token stop = {});

struct NonCiPair {
  std::vector<Element> s;
  std::vector<Element> s_prime;
  Permutation isomorphism;  ///< vertex codes of Cay(G; S) -> Cay(G; S')
};

/// Every pair of connection sets, one per Aut(G)-orbit, whose Cayley graphs
/// are isomorphic. Each pair is re-verified before it is returned. Undirected
/// scans range over inverse-closed sets. Requires |G| <= 64.
std::vector<NonCiPair> finite_ci_group_scan(const FiniteAbelianGroup& g, Mode mode, std::stop_token stop = {});

struct ZIsoCrossCheck {
  std::optional<int> sign;  ///< z_iso_decide(S, S')
  std::int64_t modulus = 0;
  bool map_verified = false;  ///< x -> sign * x is an isomorphism of the tori
  bool torus_isomorphic = false;
  bool components_differ = false;
  bool ball_isomorphic = false;  ///< rooted balls, checked only when nothing else refutes
  bool agrees = false;
};

/// Compares z_iso_decide with brute force on Cay(Z_m; S) and Cay(Z_m; S') for
/// m = 2 max|s| + 1. A sign must come with a verified map; a refusal must be
/// confirmed by torus non-isomorphism, differing component counts, or
/// non-isomorphic rooted balls of the given radius.
ZIsoCrossCheck cross_check_z_iso(const ConnectionSet& s, const ConnectionSet& s_prime, int radius = 9,
                                 std::stop_token stop = {});

/// Image of i under the five-case map i, i+1, i+2, i-2, i-1 by residue mod 5.
std::int64_t mod5_map(std::int64_t i);

struct Mod5Report {
  std::int64_t window = 0;
  std::size_t pairs_checked = 0;
  bool adjacency_preserved = false;  ///< arcs go to arcs and non-arcs to non-arcs
  bool bijective = false;            ///< the map permutes every block of five
  bool differs_from_plus_minus = false;
  bool ok() const { return adjacency_preserved && bijective && differs_from_plus_minus; }
};

/// Checks that mod5_map is an isomorphism from Cay(Z; +-1 mod 5) to
/// Cay(Z; +-2 mod 5) on [-N, N]. Requires N >= 10.
Mod5Report mod5_demo(std::int64_t window);

}  // namespace cayci
