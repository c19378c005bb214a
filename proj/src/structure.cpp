#include "skb/structure.hpp"

#include <algorithm>

namespace skb {

IdealHandle commutator_ideal(const SkewBrace& b) {
  // Generating family, reduced to generator arguments: the ideal closure of
  // generator-pair commutators contains the full commutator subgroups, and
  // g * y over multiplicative generators spans B * B, which together with
  // additive conjugation covers every a b - (a + b) = a + (a * b) - a.
  std::vector<Elem> gens;
  for (Elem x : b.add().generators())
    for (Elem y : b.add().generators())
      gens.push_back(b.add_op(b.add_op(b.add_inv(x), b.add_inv(y)), b.add_op(x, y)));
  for (Elem x : b.mul().generators())
    for (Elem y : b.mul().generators())
      gens.push_back(b.mul_op(b.mul_op(b.mul_inv(x), b.mul_inv(y)), b.mul_op(x, y)));
  for (Elem g : b.mul().generators())
    for (Elem y = 0; y < b.order(); ++y) gens.push_back(star(b, g, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  IdealHandle h = ideal_closure(b, ElementSet::from_elements(b.order(), gens));
  if (!h.set.is_whole()) {
    auto [quot, proj] = quotient_brace(b, h);
    (void)proj;
    if (!classify(quot).abelian)
      fail(Errc::internal_inconsistency,
           "quotient by the commutator ideal is not abelian");
  }
  return h;
}

bool is_perfect_brace(const SkewBrace& b) {
  return commutator_ideal(b).set.is_whole();
}

bool is_simple_brace(const SkewBrace& b) {
  if (b.order() <= 1) return false;
  for (Elem x = 1; x < b.order(); ++x)
    if (!ideal_closure(b, ElementSet::from_elements(b.order(), {x})).set.is_whole())
      return false;
  return true;
}

bool is_quasi_simple_brace(const SkewBrace& b, const CheckOptions& opts) {
  if (!is_perfect_brace(b)) return false;
  IdealHandle z = make_ideal(b, center_brace(b));
  auto [quot, proj] = quotient_brace(b, z, opts);
  (void)proj;
  return is_simple_brace(quot);
}

bool is_quasi_simple_group(const Group& g) {
  if (!is_perfect_group(g)) return false;
  auto [quot, proj] = quotient_group(g, center_group(g));
  (void)proj;
  return is_simple_group(quot);
}

LemmaBstarBReport lemma_bstarb_check(const SkewBrace& b,
                                     const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::not_two_sided, "the lemma applies to two-sided braces");
  LemmaBstarBReport r;
  r.b_star_b_is_whole = square(b).set.is_whole();
  r.almost_trivial = is_almost_trivial(b);
  r.additive_perfect = is_perfect_group(b.add());
  if (!r.agree())
    fail(Errc::conclusion_violated,
         "B*B = B disagrees with (almost trivial and additively perfect) on " +
             b.name());
  return r;
}

DecompositionReport decompose_perfect_two_sided(const SkewBrace& b,
                                                const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::precondition_failed, "not_two_sided: " + b.name());
  if (!is_perfect_brace(b))
    fail(Errc::precondition_failed, "not_perfect: " + b.name());

  DecompositionReport rep;
  rep.square = square(b);
  rep.square_op = square_op(b);
  rep.internal = internal_central_product_check(b, rep.square, rep.square_op);

  SkewBrace comp2 = sub_brace(b, rep.square.set, b.name() + "|B2");
  SkewBrace comp2op = sub_brace(b, rep.square_op.set, b.name() + "|B2op");
  rep.square_almost_trivial = is_almost_trivial(comp2);
  rep.square_additive_perfect = is_perfect_group(comp2.add());
  rep.square_op_trivial = is_trivial(comp2op);
  rep.square_op_additive_perfect = is_perfect_group(comp2op.add());
  rep.additive_group_perfect = is_perfect_group(b.add());
  rep.square_star_square =
      star_span(b, rep.square.set, rep.square.set) == rep.square.set;

  if (rep.internal.holds()) {
    rep.iso = internal_to_external(b, rep.square, rep.square_op, opts);
    rep.iso_verified = true;
  }
  return rep;
}

PerfectnessReport perfectness_equivalence_check(const SkewBrace& b,
                                                const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::not_two_sided, "the corollary applies to two-sided braces");
  PerfectnessReport r;
  r.brace_perfect = is_perfect_brace(b);
  r.additive_perfect = is_perfect_group(b.add());
  r.multiplicative_perfect = is_perfect_group(b.mul());
  if (!r.all_equal())
    fail(Errc::conclusion_violated,
         "perfectness of the brace and of its groups disagree on " + b.name());
  return r;
}

CenterSplit trivial_center_split(const SkewBrace& b, const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::precondition_failed, "not_two_sided: " + b.name());
  if (!is_perfect_brace(b))
    fail(Errc::precondition_failed, "not_perfect: " + b.name());
  if (center_brace(b).size() != 1)
    fail(Errc::precondition_failed, "center_nonzero: " + b.name());

  IdealHandle i = square(b);      // almost trivial component
  IdealHandle j = square_op(b);   // trivial component
  Group g = restrict_to_subgroup(b.add(), j.set, b.name() + "|G");
  Group h = restrict_to_subgroup(b.add(), i.set, b.name() + "|H");
  SkewBrace product = direct_product_brace(triv(g), atriv(h), opts);
  if (product.order() != b.order())
    fail(Errc::internal_inconsistency,
         "|B^2| |B^2op| differs from |B| despite trivial center");

  // (u, v) -> j_u + (-i_v): the canonical internal-product map composed with
  // inversion on the almost trivial side.
  const std::vector<Elem>& je = j.set.elements();
  const std::vector<Elem>& ie = i.set.elements();
  const int nh = h.order();
  std::vector<Elem> map(static_cast<std::size_t>(product.order()));
  for (Elem u = 0; u < g.order(); ++u)
    for (Elem v = 0; v < nh; ++v)
      map[static_cast<std::size_t>(u * nh + v)] =
          b.add_op(je[static_cast<std::size_t>(u)],
                   b.add_inv(ie[static_cast<std::size_t>(v)]));

  BraceMorphism iso{product, b, std::move(map)};
  if (!is_brace_isomorphism(iso))
    fail(Errc::internal_inconsistency,
         "canonical split map is not an isomorphism on " + b.name());
  return CenterSplit{std::move(g), std::move(h), std::move(product),
                     std::move(iso)};
}

CentralQuotientSplit central_quotient_split(const SkewBrace& b,
                                            const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::precondition_failed, "not_two_sided: " + b.name());
  if (!is_perfect_brace(b))
    fail(Errc::precondition_failed, "not_perfect: " + b.name());
  IdealHandle z = make_ideal(b, center_brace(b));
  auto [quot, proj] = quotient_brace(b, z, opts);
  (void)proj;
  if (center_brace(quot).size() != 1)
    fail(Errc::conclusion_violated, "Z(B/Z(B)) != 0 on " + b.name());
  CentralQuotientSplit out{quot, trivial_center_split(quot, opts)};
  return out;
}

QuasiSimpleVerdict quasi_simple_classification(const SkewBrace& b,
                                               const CheckOptions& opts) {
  if (!is_two_sided(b, opts))
    fail(Errc::precondition_failed, "not_two_sided: " + b.name());
  QuasiSimpleVerdict v{};
  if (is_quasi_simple_brace(b, opts)) {
    v.hypothesis = QuasiSimpleHypothesis::brace;
  } else if (is_quasi_simple_group(b.add())) {
    v.hypothesis = QuasiSimpleHypothesis::additive_group;
  } else if (is_quasi_simple_group(b.mul())) {
    v.hypothesis = QuasiSimpleHypothesis::multiplicative_group;
  } else {
    fail(Errc::precondition_failed,
         "no quasi-simplicity hypothesis holds on " + b.name());
  }
  bool t = is_trivial(b);
  bool at = is_almost_trivial(b);
  if (!t && !at)
    fail(Errc::conclusion_violated,
         "quasi-simple two-sided brace " + b.name() +
             " is neither trivial nor almost trivial");
  v.conclusion = t ? QuasiSimpleConclusion::trivial
                   : QuasiSimpleConclusion::almost_trivial;
  return v;
}

}  // namespace skb
