#pragma once

// Isomorphism and automorphism search for small finite digraphs by colour
// refinement with individualization.

#include <functional>
#include <optional>
#include <stop_token>
#include <vector>

#include "cayci/cancel.hpp"
#include "cayci/cayley.hpp"

namespace cayci {

/// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (p after q)[v] = p[q[v]].
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// True when perm is a bijection with u -> v an arc of a iff perm[u] -> perm[v]
/// is an arc of b.
bool is_isomorphism(const FiniteGraph& a, const FiniteGraph& b, const Permutation& perm);

/// Vertex colours that isomorphisms must preserve; empty means uncoloured.
using Colouring = std::vector<int>;

std::optional<Permutation> graph_iso(const FiniteGraph& a, const FiniteGraph& b, std::stop_token stop = {});
std::optional<Permutation> graph_iso(const FiniteGraph& a, const FiniteGraph& b, const Colouring& colours_a,
                                     const Colouring& colours_b, std::stop_token stop = {});

/// Visits every colour-preserving isomorphism a -> b; the visitor returns
/// true to stop.
void for_each_isomorphism(const FiniteGraph& a, const FiniteGraph& b, const Colouring& colours_a,
                          const Colouring& colours_b, const std::function<bool(const Permutation&)>& visit,
                          std::stop_token stop = {});

/// The full automorphism group, sorted lexicographically.
std::vector<Permutation> automorphism_group(const FiniteGraph& g, std::stop_token stop = {});
std::vector<Permutation> automorphism_group(const FiniteGraph& g, const Colouring& colours,
                                            std::stop_token stop = {});

}  // namespace cayci
