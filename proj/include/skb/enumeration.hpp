#pragma once

#include <vector>

#include "skb/brace.hpp"

namespace skb {

/// Permutations of [0, degree) with an eagerly closed element store (BFS over
/// generator products, capped).
struct PermGroup {
  int degree = 0;
  std::vector<std::vector<Elem>> generators;
  std::vector<std::vector<Elem>> elements;  // sorted, contains the identity
  bool complete = false;                    // closure finished under the cap

  std::size_t order() const { return elements.size(); }
};

/// All automorphisms of G by generator-image backtracking; every image is
/// re-verified as a bijective homomorphism. Throws OrderCapExceeded.
PermGroup automorphisms(const Group& g, int order_cap = 64);

/// The permutation group on the carrier generated by left translations and
/// automorphisms; |Hol(G)| = |G| |Aut(G)|.
PermGroup holomorph(const Group& g, int order_cap = 64,
                    std::size_t element_cap = 2'000'000);

/// One brace per isomorphism class with additive group G: backtracking over
/// the coset transversal {translation_a . Aut(G)} of the holomorph point
/// stabilizer (equivalently, lambda assignments with the cocycle constraint),
/// pruned by closure conflicts. Deduplicated with find_brace_isomorphism and
/// ordered by canonical form. Throws OrderCapExceeded.
std::vector<SkewBrace> enumerate_braces_on(const Group& g, int order_cap = 16);

/// Independent oracle: brute force over all group tables on the carrier with
/// identity 0 (Latin-square row backtracking + associativity filter) that
/// satisfy the left brace identity against G as addition; deduplicated up to
/// isomorphism. Throws OrderCapExceeded above order 6.
std::vector<SkewBrace> direct_search_braces(const Group& g, int order_cap = 6);

/// Lexicographically minimal multiplication table of the isomorphism class of
/// a brace whose additive table is fixed (minimum over Aut(B,+) relabelings).
std::vector<Elem> canonical_mul_table(const SkewBrace& b, int aut_order_cap = 64);

}  // namespace skb
