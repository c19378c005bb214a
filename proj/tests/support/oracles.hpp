#pragma once

// Naive reference implementations, deliberately independent of the library's
// algorithms: dumb fixpoints and full sweeps only. Used to freeze expected
// values and as the second route in dual-route property tests.

#include <vector>

#include "skb/brace.hpp"
#include "skb/group.hpp"

namespace oracles {

using skb::Elem;

/// Fixpoint S := S u S.S u S^{-1} starting from gens u {0}.
std::vector<Elem> naive_span(const skb::Group& g, std::vector<Elem> gens);

std::vector<Elem> naive_normal_closure(const skb::Group& g,
                                       const std::vector<Elem>& xs);

/// Additive span of every commutator [a, b], all pairs.
std::vector<Elem> naive_derived(const skb::Group& g);

std::vector<Elem> naive_center(const skb::Group& g);

/// Additive span of {x * y} over full X x Y sweeps.
std::vector<Elem> naive_star_span(const skb::SkewBrace& b,
                                  const std::vector<Elem>& xs,
                                  const std::vector<Elem>& ys);

/// Counts bijections fixing 0 that are homomorphisms; brute force, n <= 6.
int brute_automorphism_count(const skb::Group& g);

bool naive_two_sided(const skb::SkewBrace& b);

/// Builds the operation table of a closed permutation list (composition
/// p after q) with the permutations as carrier, sorted lexicographically.
skb::Group group_from_permutations(std::vector<std::vector<int>> perms,
                                   std::string name);

/// Closes a generator list under composition and builds the group.
skb::Group group_from_perm_generators(const std::vector<std::vector<int>>& gens,
                                      std::string name);

}  // namespace oracles
