#pragma once

#include <utility>
#include <vector>

#include "skb/brace.hpp"

namespace skb {

/// Element pairing for amalgamating maps I1 -> I2, in carrier labels.
using AlphaMap = std::vector<std::pair<Elem, Elem>>;

struct CentralProductSpec {
  SkewBrace b1;
  SkewBrace b2;
  ElementSet i1;  // central ideal of b1
  ElementSet i2;  // central ideal of b2
  AlphaMap alpha; // bijective brace isomorphism i1 -> i2
};

struct ExternalCentralProduct {
  SkewBrace product;      // (B1 x B2) / N_alpha, N_alpha = {(i, -alpha(i))}
  BraceMorphism embed1;   // B1 -> product, b -> pi(b, 0)
  BraceMorphism embed2;   // B2 -> product, b -> pi(0, b)
};

/// Builds the external central product. Carrier: pairs with the I1-component
/// pushed into the second coordinate — index t * |B2| + b2 where t ranges over
/// the I1-cosets of B1 (minimal representatives, sorted). Dense tables are
/// materialized below the dense cap, otherwise the factored backend stays
/// lazy. N_alpha is verified central before quotienting.
/// Throws NotCentralIdeal / AlphaNotIso.
ExternalCentralProduct external_central_product(const CentralProductSpec& spec,
                                                const CheckOptions& opts = {});

struct InternalCPReport {
  bool sum_is_whole = false;          // B = I + J
  bool additive_commuting = false;    // [I, J]_+ = 0
  bool mixed_stars_vanish = false;    // I * J = J * I = 0
  bool intersection_central = false;  // I /\ J <= Z(B)
  ElementSet intersection;

  bool holds() const {
    return sum_is_whole && additive_commuting && mixed_stars_vanish &&
           intersection_central;
  }
};

/// Evaluates the four internal central product conditions exactly: additive
/// span of the union for B = I + J, full I x J sweeps for the commutator and
/// star conditions. Throws NotAnIdeal if I or J fails the ideal check.
InternalCPReport internal_central_product_check(const SkewBrace& b,
                                                const IdealHandle& i,
                                                const IdealHandle& j);

/// Realizes an internal central product as an external one: builds the
/// external product of sub_brace(I) and sub_brace(J) amalgamating I /\ J via
/// the identity and returns the verified isomorphism onto B induced by
/// (i, j) -> i + j. Throws CheckFailed if the internal conditions fail.
BraceMorphism internal_to_external(const SkewBrace& b, const IdealHandle& i,
                                   const IdealHandle& j,
                                   const CheckOptions& opts = {});

struct ExternalImagesReport {
  InternalCPReport internal;
  IdealHandle image1;
  IdealHandle image2;
  BraceMorphism intersection_iso1;  // sub(B1, I1) -> sub(product, image1 /\ image2)
  BraceMorphism intersection_iso2;  // sub(B2, I2) -> same
};

/// Verifies that the embedded images of an external product satisfy the
/// internal definition and that their intersection is isomorphic to I1 and I2
/// via i -> pi(i, 0). Failures are InternalInconsistency bug signals.
ExternalImagesReport external_images_check(const CentralProductSpec& spec,
                                           const ExternalCentralProduct& p);

/// Classical central product of groups over amalgamated central subgroups,
/// with the same representative scheme as the brace version, so that
/// triv(G1) o triv(G2) equals triv(group_central_product(...)) elementwise.
Group group_central_product(const Group& g1, const ElementSet& z1,
                            const Group& g2, const ElementSet& z2,
                            const AlphaMap& alpha);

/// All brace isomorphisms I1 -> I2 between central ideals, in carrier labels.
/// Refuses |I1| above the cap.
std::vector<AlphaMap> enumerate_central_ideal_isomorphisms(
    const SkewBrace& b1, const ElementSet& i1, const SkewBrace& b2,
    const ElementSet& i2, int cap = 64);

}  // namespace skb
