#pragma once

#include <optional>

#include "skb/brace.hpp"
#include "skb/central_product.hpp"

namespace skb {

/// [B,B]^B: the least ideal with abelian quotient, generated by additive
/// commutators, multiplicative commutators and the elements ab - (a + b).
/// The quotient is verified abelian.
IdealHandle commutator_ideal(const SkewBrace& b);

bool is_perfect_brace(const SkewBrace& b);   // B = [B,B]^B
/// |B| > 1 and the ideal closure of every non-zero element is the whole brace.
bool is_simple_brace(const SkewBrace& b);
/// Perfect with simple central quotient B / Z(B).
bool is_quasi_simple_brace(const SkewBrace& b, const CheckOptions& opts = {});
/// Perfect group with simple central quotient.
bool is_quasi_simple_group(const Group& g);

struct LemmaBstarBReport {
  bool b_star_b_is_whole = false;    // left side of the equivalence
  bool almost_trivial = false;       // right side, first conjunct
  bool additive_perfect = false;     // right side, second conjunct
  bool agree() const {
    return b_star_b_is_whole == (almost_trivial && additive_perfect);
  }
};

/// Evaluates both sides of "B*B = B iff B almost trivial and (B,+) perfect"
/// independently. Throws NotTwoSided on non-two-sided input and
/// ConclusionViolated if the sides disagree.
LemmaBstarBReport lemma_bstarb_check(const SkewBrace& b,
                                     const CheckOptions& opts = {});

struct DecompositionReport {
  IdealHandle square;
  IdealHandle square_op;
  InternalCPReport internal;
  bool square_almost_trivial = false;
  bool square_additive_perfect = false;
  bool square_op_trivial = false;
  bool square_op_additive_perfect = false;
  bool additive_group_perfect = false;   // supporting lemma on (B,+)
  bool square_star_square = false;       // B^2 = B^2 * B^2
  std::optional<BraceMorphism> iso;      // external(sub B^2, sub B^2op) -> B
  bool iso_verified = false;

  bool verdict() const {
    return internal.holds() && square_almost_trivial &&
           square_additive_perfect && square_op_trivial &&
           square_op_additive_perfect && additive_group_perfect &&
           square_star_square && iso_verified;
  }
};

/// The main decomposition B = B^2 o B^{2,op} for a perfect two-sided brace:
/// computes both squares, runs the internal central product check, classifies
/// the components as sub-braces and produces the verified isomorphism via
/// internal_to_external. Throws PreconditionFailed(not_two_sided|not_perfect).
DecompositionReport decompose_perfect_two_sided(const SkewBrace& b,
                                                const CheckOptions& opts = {});

struct PerfectnessReport {
  bool brace_perfect = false;
  bool additive_perfect = false;
  bool multiplicative_perfect = false;
  bool all_equal() const {
    return brace_perfect == additive_perfect &&
           additive_perfect == multiplicative_perfect;
  }
};

/// Computes the three perfectness booleans independently. Throws NotTwoSided;
/// disagreement is a ConclusionViolated hard failure.
PerfectnessReport perfectness_equivalence_check(const SkewBrace& b,
                                                const CheckOptions& opts = {});

struct CenterSplit {
  Group g;            // additive group of B^{2,op}
  Group h;            // additive group of B^2
  SkewBrace product;  // triv(G) x atriv(H)
  BraceMorphism iso;  // product -> target, canonical map (no search)
};

/// For perfect two-sided B with Z(B) = 0: the direct-product split
/// B ~ triv(G) x atriv(H) with a verified canonical witness.
/// Throws PreconditionFailed.
CenterSplit trivial_center_split(const SkewBrace& b,
                                 const CheckOptions& opts = {});

struct CentralQuotientSplit {
  SkewBrace quotient;  // B / Z(B), verified to have trivial center
  CenterSplit split;
};

/// For perfect two-sided B: applies trivial_center_split to B / Z(B) after
/// verifying Z(B/Z(B)) = 0 (a ConclusionViolated hard failure otherwise).
CentralQuotientSplit central_quotient_split(const SkewBrace& b,
                                            const CheckOptions& opts = {});

enum class QuasiSimpleHypothesis { brace, additive_group, multiplicative_group };
enum class QuasiSimpleConclusion { trivial, almost_trivial };

struct QuasiSimpleVerdict {
  QuasiSimpleHypothesis hypothesis;
  QuasiSimpleConclusion conclusion;
};

/// For a two-sided brace where B, (B,+) or (B,.) is quasi-simple: asserts B is
/// trivial or almost trivial and reports which. Throws PreconditionFailed when
/// no hypothesis holds and ConclusionViolated if the conclusion fails.
QuasiSimpleVerdict quasi_simple_classification(const SkewBrace& b,
                                               const CheckOptions& opts = {});

}  // namespace skb
