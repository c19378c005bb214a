#pragma once

#include <string>
#include <vector>

#include "skb/brace.hpp"
#include "skb/central_product.hpp"

namespace skb {

/// G = HK with H /\ K = {0}: every x factors uniquely as h(x) k(x).
struct ExactFactorization {
  Group g;
  ElementSet h;
  ElementSet k;
  std::vector<Elem> h_of;  // h(x)
  std::vector<Elem> k_of;  // k(x)
};

/// Verifies the factorization by sweeping H x K. Throws
/// NotExactFactorization when |H||K| != |G| or products collide.
ExactFactorization make_exact_factorization(const Group& g, const ElementSet& h,
                                            const ElementSet& k);

/// The brace with additive group G and multiplication x o y = h(x) y k(x).
SkewBrace exact_factorization_brace(const Group& g, const ElementSet& h,
                                    const ElementSet& k, std::string name = "");

/// The simple brace S from the exact factorization of the alternating group
/// on 5 points through a point stabilizer and the cycle (0 1 2 3 4).
SkewBrace example_a5_factorization();

/// The lift of S to SL(2,5): additive group SL(2,5), factored through the
/// preimage of the stabilizer (order 24) and the unique order-5 subgroup of
/// the preimage of the cycle subgroup. Quasi-simple, not two-sided.
SkewBrace example_sl25_lift();

/// The projection SL(2,5) -> A5 used by the lift (composition of the central
/// quotient with a fixed isomorphism onto the builtin a5 labels).
GroupMorphism sl25_to_a5_projection();

struct BilinearFormSpec {
  int p = 2;                            // prime
  int d = 1;                            // dimension of V
  std::vector<std::vector<int>> form;   // d x d entries in [0, p)
};

/// Left brace on V + F_p c of order p^(d+1): addition componentwise,
/// (x,k)(y,t) = (x+y, k+t+phi(x,y)). Elements are indexed lexicographically,
/// vector coordinates first, so c = (0,...,0,1) has index 1.
struct ExtraspecialBrace {
  SkewBrace brace;
  BilinearFormSpec spec;
  Elem c = 1;
};

/// Throws ZeroForm when the form vanishes identically; checks c in Z(E) and
/// E / <c> abelian after building.
ExtraspecialBrace extraspecial_brace(const BilinearFormSpec& spec);

struct OrthogonalDecomposition {
  InternalCPReport report;
  IdealHandle e_u;  // preimage of U
  IdealHandle e_w;  // preimage of W
};

/// For complementary phi-orthogonal subspaces U, W of V (given by basis
/// vectors over F_p): builds E_U, E_W and verifies E = E_U o E_W with
/// intersection <c>. Throws NotOrthogonal / NotComplementary.
OrthogonalDecomposition orthogonal_decomposition(
    const ExtraspecialBrace& e, const std::vector<std::vector<int>>& u_basis,
    const std::vector<std::vector<int>>& w_basis);

}  // namespace skb
