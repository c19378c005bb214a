#include "skb/central_product.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "skb/detail/backends.hpp"

namespace skb {

namespace {

// z is central in the brace: additively central, multiplicatively central,
// and lambda_z = id (all pinned by generator checks).
bool central_in_brace(const SkewBrace& b, Elem z) {
  for (Elem g : b.add().generators())
    if (b.add_op(z, g) != b.add_op(g, z)) return false;
  for (Elem g : b.mul().generators())
    if (b.mul_op(z, g) != b.mul_op(g, z)) return false;
  for (Elem g : b.add().generators())
    if (b.lambda(z, g) != g) return false;
  return true;
}

void require_central_ideal(const SkewBrace& b, const ElementSet& i,
                           const char* which) {
  if (i.carrier() != b.order())
    fail(Errc::malformed_table, std::string(which) + ": carrier mismatch");
  if (!is_ideal(b, i))
    fail(Errc::not_central_ideal, std::string(which) + " is not an ideal");
  for (Elem z : i.elements())
    if (!central_in_brace(b, z))
      fail(Errc::not_central_ideal,
           std::string(which) + ": element " + std::to_string(z) +
               " is not central");
}

// Validated alpha as a dense lookup over the left carrier (-1 outside I1).
std::vector<Elem> check_alpha(const SkewBrace& b1, const ElementSet& i1,
                              const SkewBrace& b2, const ElementSet& i2,
                              const AlphaMap& alpha) {
  if (i1.size() != i2.size())
    fail(Errc::alpha_not_iso, "amalgamated ideals have different orders");
  if (static_cast<int>(alpha.size()) != i1.size())
    fail(Errc::alpha_not_iso, "alpha does not cover I1");
  std::vector<Elem> alpha_of(static_cast<std::size_t>(b1.order()), -1);
  std::vector<char> hit(static_cast<std::size_t>(b2.order()), 0);
  for (auto [src, dst] : alpha) {
    if (src < 0 || src >= b1.order() || !i1.contains(src))
      fail(Errc::alpha_not_iso, "alpha source outside I1");
    if (dst < 0 || dst >= b2.order() || !i2.contains(dst))
      fail(Errc::alpha_not_iso, "alpha image outside I2");
    if (alpha_of[static_cast<std::size_t>(src)] >= 0 || hit[static_cast<std::size_t>(dst)])
      fail(Errc::alpha_not_iso, "alpha is not a bijection");
    alpha_of[static_cast<std::size_t>(src)] = dst;
    hit[static_cast<std::size_t>(dst)] = 1;
  }
  if (alpha_of[0] != 0) fail(Errc::alpha_not_iso, "alpha must fix the identity");
  // Both operations are checked even though they coincide on central ideals.
  for (Elem x : i1.elements())
    for (Elem y : i1.elements()) {
      if (alpha_of[static_cast<std::size_t>(b1.add_op(x, y))] !=
          b2.add_op(alpha_of[static_cast<std::size_t>(x)], alpha_of[static_cast<std::size_t>(y)]))
        fail(Errc::alpha_not_iso, "alpha is not additive");
      if (alpha_of[static_cast<std::size_t>(b1.mul_op(x, y))] !=
          b2.mul_op(alpha_of[static_cast<std::size_t>(x)], alpha_of[static_cast<std::size_t>(y)]))
        fail(Errc::alpha_not_iso, "alpha is not multiplicative");
    }
  return alpha_of;
}

// Carrier scheme of (B1 x B2) / N_alpha: pairs with the I1-component pushed
// into the second coordinate. Index = coset(b1) * |B2| + b2.
struct CpScheme {
  Group add1, mul1, add2, mul2;
  std::vector<Elem> coset_of;  // b1 -> I1-coset index (min reps, sorted)
  std::vector<Elem> rep_of;    // coset index -> representative
  std::vector<Elem> delta_of;  // b1 -> -rep(b1) + b1, an element of I1
  std::vector<Elem> alpha_of;  // I1 -> I2 lookup
  int n2 = 0;
  int ncosets = 0;

  Elem encode(Elem b1, Elem b2) const {
    Elem t = coset_of[static_cast<std::size_t>(b1)];
    Elem shift = alpha_of[static_cast<std::size_t>(delta_of[static_cast<std::size_t>(b1)])];
    return t * n2 + add2.op(b2, shift);
  }
};

struct CpBackend final : detail::GroupBackend {
  std::shared_ptr<const CpScheme> s;
  bool multiplicative = false;
  std::vector<Elem> invs;

  int order() const override { return s->ncosets * s->n2; }
  Elem op(Elem a, Elem b) const override {
    Elem a1 = s->rep_of[static_cast<std::size_t>(a / s->n2)], a2 = a % s->n2;
    Elem b1 = s->rep_of[static_cast<std::size_t>(b / s->n2)], b2 = b % s->n2;
    if (multiplicative)
      return s->encode(s->mul1.op(a1, b1), s->mul2.op(a2, b2));
    return s->encode(s->add1.op(a1, b1), s->add2.op(a2, b2));
  }
  Elem inv(Elem a) const override { return invs[static_cast<std::size_t>(a)]; }
};

std::shared_ptr<CpScheme> build_scheme(const Group& add1, const Group& mul1,
                                       const Group& add2, const Group& mul2,
                                       const ElementSet& i1,
                                       std::vector<Elem> alpha_of) {
  auto s = std::make_shared<CpScheme>();
  s->add1 = add1;
  s->mul1 = mul1;
  s->add2 = add2;
  s->mul2 = mul2;
  s->alpha_of = std::move(alpha_of);
  s->n2 = add2.order();
  const int n1 = add1.order();
  s->coset_of.assign(static_cast<std::size_t>(n1), -1);
  s->delta_of.assign(static_cast<std::size_t>(n1), -1);
  for (Elem x = 0; x < n1; ++x) {
    if (s->coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    Elem idx = static_cast<Elem>(s->rep_of.size());
    s->rep_of.push_back(x);
    Elem xinv = add1.inv(x);
    for (Elem t : i1.elements()) {
      Elem member = add1.op(x, t);
      s->coset_of[static_cast<std::size_t>(member)] = idx;
      s->delta_of[static_cast<std::size_t>(member)] = add1.op(xinv, member);
    }
  }
  s->ncosets = static_cast<int>(s->rep_of.size());
  return s;
}

std::pair<Group, Group> scheme_groups(const std::shared_ptr<CpScheme>& s,
                                      const std::string& name) {
  const int n = s->ncosets * s->n2;
  auto addb = std::make_shared<CpBackend>();
  addb->s = s;
  addb->multiplicative = false;
  auto mulb = std::make_shared<CpBackend>();
  mulb->s = s;
  mulb->multiplicative = true;
  addb->invs.resize(static_cast<std::size_t>(n));
  mulb->invs.resize(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    Elem a1 = s->rep_of[static_cast<std::size_t>(a / s->n2)], a2 = a % s->n2;
    addb->invs[static_cast<std::size_t>(a)] = s->encode(s->add1.inv(a1), s->add2.inv(a2));
    mulb->invs[static_cast<std::size_t>(a)] = s->encode(s->mul1.inv(a1), s->mul2.inv(a2));
  }
  Group gadd = densify_group(make_group(n, std::move(addb), name + "+"));
  Group gmul = densify_group(make_group(n, std::move(mulb), name + "*"));
  return {std::move(gadd), std::move(gmul)};
}

}  // namespace

ExternalCentralProduct external_central_product(const CentralProductSpec& spec,
                                                const CheckOptions& opts) {
  require_central_ideal(spec.b1, spec.i1, "I1");
  require_central_ideal(spec.b2, spec.i2, "I2");
  std::vector<Elem> alpha_of =
      check_alpha(spec.b1, spec.i1, spec.b2, spec.i2, spec.alpha);

  // N_alpha = {(i, -alpha(i))} is central in B1 x B2: components are central
  // (checked above) and the set is closed because alpha is additive; the
  // closure is re-verified explicitly here.
  for (Elem x : spec.i1.elements())
    for (Elem y : spec.i1.elements()) {
      Elem sum = spec.b1.add_op(x, y);
      Elem second = spec.b2.add_op(spec.b2.add_inv(alpha_of[static_cast<std::size_t>(x)]),
                                   spec.b2.add_inv(alpha_of[static_cast<std::size_t>(y)]));
      if (second != spec.b2.add_inv(alpha_of[static_cast<std::size_t>(sum)]))
        fail(Errc::internal_inconsistency, "N_alpha is not closed");
    }

  auto scheme = build_scheme(spec.b1.add(), spec.b1.mul(), spec.b2.add(),
                             spec.b2.mul(), spec.i1, alpha_of);
  std::string name = spec.b1.name() + " o " + spec.b2.name();
  auto [gadd, gmul] = scheme_groups(scheme, name);

  const int n = gadd.order();
  if (static_cast<long>(n) * spec.i1.size() !=
      static_cast<long>(spec.b1.order()) * spec.b2.order())
    fail(Errc::internal_inconsistency, "central product order law violated");

  CentralProductData cp;
  cp.left = std::make_shared<SkewBrace>(spec.b1);
  cp.right = std::make_shared<SkewBrace>(spec.b2);
  cp.left_ideal = spec.i1.elements();
  cp.right_ideal = spec.i2.elements();
  cp.alpha = spec.alpha;

  CheckOptions local = opts;
  bool two_sided = spec.b1.inherited_two_sided() && spec.b2.inherited_two_sided();
  if (spec.b1.is_dense() && spec.b2.is_dense())
    two_sided = is_two_sided(spec.b1, local) && is_two_sided(spec.b2, local);

  SkewBrace product = make_brace(gadd, gmul, name, "central-product", two_sided,
                                 opts, std::move(cp));

  std::vector<Elem> e1map(static_cast<std::size_t>(spec.b1.order()));
  for (Elem x = 0; x < spec.b1.order(); ++x) e1map[static_cast<std::size_t>(x)] = scheme->encode(x, 0);
  std::vector<Elem> e2map(static_cast<std::size_t>(spec.b2.order()));
  for (Elem y = 0; y < spec.b2.order(); ++y) e2map[static_cast<std::size_t>(y)] = scheme->encode(0, y);

  ExternalCentralProduct out{std::move(product),
                             BraceMorphism{spec.b1, {}, std::move(e1map)},
                             BraceMorphism{spec.b2, {}, std::move(e2map)}};
  out.embed1.codomain = out.product;
  out.embed2.codomain = out.product;
  if (!is_brace_homomorphism(out.embed1) || !is_brace_homomorphism(out.embed2))
    fail(Errc::internal_inconsistency, "canonical embedding is not a morphism");
  return out;
}

InternalCPReport internal_central_product_check(const SkewBrace& b,
                                                const IdealHandle& i,
                                                const IdealHandle& j) {
  if (!is_ideal(b, i.set) || !is_ideal(b, j.set))
    fail(Errc::not_an_ideal, "internal central product needs two ideals");
  InternalCPReport r;

  std::vector<Elem> both = i.set.elements();
  both.insert(both.end(), j.set.elements().begin(), j.set.elements().end());
  r.sum_is_whole = subgroup_span(b.add(), both).is_whole();

  r.additive_commuting = true;
  for (Elem x : i.set.elements()) {
    for (Elem y : j.set.elements())
      if (b.add_op(x, y) != b.add_op(y, x)) {
        r.additive_commuting = false;
        break;
      }
    if (!r.additive_commuting) break;
  }

  r.mixed_stars_vanish = true;
  for (Elem x : i.set.elements()) {
    for (Elem y : j.set.elements())
      if (star(b, x, y) != 0 || star(b, y, x) != 0) {
        r.mixed_stars_vanish = false;
        break;
      }
    if (!r.mixed_stars_vanish) break;
  }

  r.intersection = i.set.intersect(j.set);
  r.intersection_central = true;
  for (Elem z : r.intersection.elements())
    if (!central_in_brace(b, z)) {
      r.intersection_central = false;
      break;
    }
  return r;
}

BraceMorphism internal_to_external(const SkewBrace& b, const IdealHandle& i,
                                   const IdealHandle& j,
                                   const CheckOptions& opts) {
  InternalCPReport r = internal_central_product_check(b, i, j);
  if (!r.holds())
    fail(Errc::check_failed, "internal central product conditions fail");

  SkewBrace sub_i = sub_brace(b, i.set, b.name() + "|I");
  SkewBrace sub_j = sub_brace(b, j.set, b.name() + "|J");
  const std::vector<Elem>& ie = i.set.elements();
  const std::vector<Elem>& je = j.set.elements();
  auto local_index = [](const std::vector<Elem>& v, Elem x) {
    return static_cast<Elem>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };

  std::vector<Elem> c_in_i, c_in_j;
  AlphaMap alpha;
  for (Elem z : r.intersection.elements()) {
    c_in_i.push_back(local_index(ie, z));
    c_in_j.push_back(local_index(je, z));
    alpha.push_back({local_index(ie, z), local_index(je, z)});
  }
  CentralProductSpec spec{sub_i, sub_j,
                          ElementSet::from_elements(sub_i.order(), c_in_i),
                          ElementSet::from_elements(sub_j.order(), c_in_j),
                          alpha};
  ExternalCentralProduct ext = external_central_product(spec, opts);

  // phi(pi(x, y)) = x + y: every product element is embed1(x) + embed2(y),
  // and the fill below also verifies phi is well defined on the fibers.
  std::vector<Elem> fill(static_cast<std::size_t>(ext.product.order()), -1);
  for (Elem x = 0; x < sub_i.order(); ++x)
    for (Elem y = 0; y < sub_j.order(); ++y) {
      Elem p = ext.product.add_op(ext.embed1.map[static_cast<std::size_t>(x)],
                                  ext.embed2.map[static_cast<std::size_t>(y)]);
      Elem target = b.add_op(ie[static_cast<std::size_t>(x)], je[static_cast<std::size_t>(y)]);
      if (fill[static_cast<std::size_t>(p)] >= 0 && fill[static_cast<std::size_t>(p)] != target)
        fail(Errc::internal_inconsistency, "phi(i, j) = i + j is not well defined");
      fill[static_cast<std::size_t>(p)] = target;
    }
  for (Elem v : fill)
    if (v < 0)
      fail(Errc::internal_inconsistency, "phi does not cover the product");

  BraceMorphism phi{ext.product, b, std::move(fill)};
  if (!is_brace_isomorphism(phi))
    fail(Errc::internal_inconsistency, "phi(i, j) = i + j is not an isomorphism");
  return phi;
}

ExternalImagesReport external_images_check(const CentralProductSpec& spec,
                                           const ExternalCentralProduct& p) {
  ExternalImagesReport out;
  ElementSet im1 = ElementSet::from_elements(p.product.order(), p.embed1.map);
  ElementSet im2 = ElementSet::from_elements(p.product.order(), p.embed2.map);
  if (!is_ideal(p.product, im1) || !is_ideal(p.product, im2))
    fail(Errc::internal_inconsistency, "embedded image is not an ideal");
  out.image1 = make_ideal(p.product, im1);
  out.image2 = make_ideal(p.product, im2);
  out.internal = internal_central_product_check(p.product, out.image1, out.image2);
  if (!out.internal.holds())
    fail(Errc::internal_inconsistency,
         "embedded images fail the internal central product conditions");

  // Intersection isomorphic to I1 and I2 via i -> pi(i, 0) and j -> pi(0, j).
  const ElementSet& inter = out.internal.intersection;
  if (inter.size() != spec.i1.size())
    fail(Errc::internal_inconsistency, "intersection size differs from |I1|");
  SkewBrace sub_inter = sub_brace(p.product, inter, "intersection");
  auto build_iso = [&](const SkewBrace& side, const ElementSet& ideal,
                       const BraceMorphism& embed) {
    SkewBrace dom = sub_brace(side, ideal);
    std::vector<Elem> map(static_cast<std::size_t>(dom.order()));
    const std::vector<Elem>& ide = ideal.elements();
    const std::vector<Elem>& ine = inter.elements();
    for (Elem k = 0; k < dom.order(); ++k) {
      Elem image = embed.map[static_cast<std::size_t>(ide[static_cast<std::size_t>(k)])];
      auto it = std::lower_bound(ine.begin(), ine.end(), image);
      if (it == ine.end() || *it != image)
        fail(Errc::internal_inconsistency,
             "embedded ideal misses the intersection");
      map[static_cast<std::size_t>(k)] = static_cast<Elem>(it - ine.begin());
    }
    BraceMorphism iso{dom, sub_inter, std::move(map)};
    if (!is_brace_isomorphism(iso))
      fail(Errc::internal_inconsistency,
           "intersection witness is not an isomorphism");
    return iso;
  };
  out.intersection_iso1 = build_iso(spec.b1, spec.i1, p.embed1);
  out.intersection_iso2 = build_iso(spec.b2, spec.i2, p.embed2);
  return out;
}

Group group_central_product(const Group& g1, const ElementSet& z1,
                            const Group& g2, const ElementSet& z2,
                            const AlphaMap& alpha) {
  auto require_central_subgroup = [](const Group& g, const ElementSet& z,
                                     const char* which) {
    if (!is_subgroup(g, z))
      fail(Errc::not_central_ideal, std::string(which) + " is not a subgroup");
    for (Elem e : z.elements())
      for (Elem c : g.generators())
        if (g.op(e, c) != g.op(c, e))
          fail(Errc::not_central_ideal,
               std::string(which) + " is not central in the group");
  };
  require_central_subgroup(g1, z1, "Z1");
  require_central_subgroup(g2, z2, "Z2");
  if (z1.size() != z2.size() || static_cast<int>(alpha.size()) != z1.size())
    fail(Errc::alpha_not_iso, "alpha must biject Z1 onto Z2");
  std::vector<Elem> alpha_of(static_cast<std::size_t>(g1.order()), -1);
  std::vector<char> hit(static_cast<std::size_t>(g2.order()), 0);
  for (auto [src, dst] : alpha) {
    if (!z1.contains(src) || !z2.contains(dst) ||
        alpha_of[static_cast<std::size_t>(src)] >= 0 || hit[static_cast<std::size_t>(dst)])
      fail(Errc::alpha_not_iso, "alpha is not a bijection Z1 -> Z2");
    alpha_of[static_cast<std::size_t>(src)] = dst;
    hit[static_cast<std::size_t>(dst)] = 1;
  }
  for (Elem x : z1.elements())
    for (Elem y : z1.elements())
      if (alpha_of[static_cast<std::size_t>(g1.op(x, y))] !=
          g2.op(alpha_of[static_cast<std::size_t>(x)], alpha_of[static_cast<std::size_t>(y)]))
        fail(Errc::alpha_not_iso, "alpha is not a homomorphism");

  auto scheme = build_scheme(g1, g1, g2, g2, z1, std::move(alpha_of));
  auto [gadd, gmul] = scheme_groups(scheme, g1.name() + " o " + g2.name());
  (void)gmul;  // identical to gadd for groups
  return gadd.with_name(g1.name() + " o " + g2.name());
}

std::vector<AlphaMap> enumerate_central_ideal_isomorphisms(
    const SkewBrace& b1, const ElementSet& i1, const SkewBrace& b2,
    const ElementSet& i2, int cap) {
  if (i1.size() > cap)
    fail(Errc::order_cap_exceeded,
         "central ideal isomorphism enumeration capped at " + std::to_string(cap));
  require_central_ideal(b1, i1, "I1");
  require_central_ideal(b2, i2, "I2");
  std::vector<AlphaMap> out;
  if (i1.size() != i2.size()) return out;
  Group sub1 = restrict_to_subgroup(b1.add(), i1);
  Group sub2 = restrict_to_subgroup(b2.add(), i2);
  const std::vector<Elem>& e1 = i1.elements();
  const std::vector<Elem>& e2 = i2.elements();
  for_each_group_isomorphism(sub1, sub2, cap, [&](const GroupMorphism& m) {
    // On central ideals both operations coincide; the multiplicative side is
    // still checked explicitly.
    for (Elem x = 0; x < sub1.order(); ++x)
      for (Elem y = 0; y < sub1.order(); ++y) {
        Elem lhs = b1.mul_op(e1[static_cast<std::size_t>(x)], e1[static_cast<std::size_t>(y)]);
        Elem lhs_local = static_cast<Elem>(
            std::lower_bound(e1.begin(), e1.end(), lhs) - e1.begin());
        if (e2[static_cast<std::size_t>(m.map[static_cast<std::size_t>(lhs_local)])] !=
            b2.mul_op(e2[static_cast<std::size_t>(m.map[static_cast<std::size_t>(x)])],
                      e2[static_cast<std::size_t>(m.map[static_cast<std::size_t>(y)])]))
          return true;  // not multiplicative; skip
      }
    AlphaMap a;
    for (Elem x = 0; x < sub1.order(); ++x)
      a.push_back({e1[static_cast<std::size_t>(x)], e2[static_cast<std::size_t>(m.map[static_cast<std::size_t>(x)])]});
    std::sort(a.begin(), a.end());
    out.push_back(std::move(a));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skb
