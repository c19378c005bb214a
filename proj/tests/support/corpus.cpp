#include "support/corpus.hpp"

#include "support/oracles.hpp"

#include "skb/enumeration.hpp"

namespace corpus {

using skb::Elem;
using skb::Group;
using skb::SkewBrace;

namespace {

Group make_q8() {
  // Elements (sign, basis) with basis 1, i, j, k; index = basis * 2 + (sign<0).
  // Quaternion products tracked with explicit signs.
  struct Q {
    int sign, basis;
  };
  auto mul = [](Q a, Q b) {
    static const int basis_mul[4][4] = {{0, 1, 2, 3},
                                        {1, 0, 3, 2},
                                        {2, 3, 0, 1},
                                        {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{1, 1, 1, 1},
                                       {1, -1, 1, -1},
                                       {1, -1, -1, 1},
                                       {1, 1, -1, -1}};
    return Q{a.sign * b.sign * sign_mul[a.basis][b.basis],
             basis_mul[a.basis][b.basis]};
  };
  auto index = [](Q q) { return q.basis * 2 + (q.sign < 0 ? 1 : 0); };
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Q qa{a % 2 == 0 ? 1 : -1, a / 2};
      Q qb{b % 2 == 0 ? 1 : -1, b / 2};
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index(mul(qa, qb));
    }
  return skb::validate_group(table, "Q8");
}

Corpus build() {
  Corpus c;
  c.c6 = skb::builtin_group("cyclic(6)");
  c.s3 = skb::builtin_group("s3");
  c.a4 = skb::builtin_group("a4");
  c.a5 = skb::builtin_group("a5");
  c.sl25 = skb::builtin_group("sl25");
  c.d4 = oracles::group_from_perm_generators({{1, 2, 3, 0}, {3, 2, 1, 0}}, "D4");
  c.q8 = make_q8();
  c.c8 = skb::builtin_group("cyclic(8)");
  c.c4xc2 = skb::direct_product_group(skb::builtin_group("cyclic(4)"),
                                      skb::builtin_group("cyclic(2)"));
  c.c2cubed = skb::builtin_group("elementary_abelian(2,3)");

  c.triv_c6 = skb::triv(c.c6);
  c.atriv_c6 = skb::atriv(c.c6);
  c.triv_s3 = skb::triv(c.s3);
  c.atriv_s3 = skb::atriv(c.s3);
  c.triv_a4 = skb::triv(c.a4);
  c.atriv_a4 = skb::atriv(c.a4);
  c.triv_a5 = skb::triv(c.a5);
  c.atriv_a5 = skb::atriv(c.a5);
  c.triv_sl25 = skb::triv(c.sl25);
  c.atriv_sl25 = skb::atriv(c.sl25);

  c.s_brace = skb::example_a5_factorization();
  c.s_tilde = skb::example_sl25_lift();
  c.prod3600 = skb::direct_product_brace(c.triv_a5, c.atriv_a5);
  c.mixed7200 = mixed7200_product().product.product;

  skb::BilinearFormSpec spec;
  spec.p = 2;
  spec.d = 4;
  spec.form = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  c.extraspecial32 = skb::extraspecial_brace(spec);
  return c;
}

}  // namespace

const Corpus& instance() {
  static const Corpus c = build();
  return c;
}

std::vector<SkewBrace> Corpus::dense_braces() const {
  return {triv_c6,  atriv_c6,  triv_s3,   atriv_s3,   triv_a4,
          atriv_a4, triv_a5,   atriv_a5,  triv_sl25,  atriv_sl25,
          s_brace,  s_tilde,   extraspecial32.brace};
}

std::vector<SkewBrace> Corpus::all_braces() const {
  std::vector<SkewBrace> out = dense_braces();
  out.push_back(prod3600);
  out.push_back(mixed7200);
  return out;
}

std::vector<Group> groups_up_to_6() {
  const Corpus& c = instance();
  return {skb::builtin_group("cyclic(1)"), skb::builtin_group("cyclic(2)"),
          skb::builtin_group("cyclic(3)"), skb::builtin_group("cyclic(4)"),
          skb::builtin_group("elementary_abelian(2,2)"),
          skb::builtin_group("cyclic(5)"), c.c6, c.s3};
}

std::vector<Group> groups_up_to_8() {
  const Corpus& c = instance();
  std::vector<Group> out = groups_up_to_6();
  out.push_back(skb::builtin_group("cyclic(7)"));
  // The five groups of order 8.
  out.push_back(c.c8);
  out.push_back(c.c4xc2);
  out.push_back(c.c2cubed);
  out.push_back(c.d4);
  out.push_back(c.q8);
  return out;
}

const std::vector<SkewBrace>& enumerated_braces_up_to_8() {
  static const std::vector<SkewBrace> braces = [] {
    std::vector<SkewBrace> out;
    for (const Group& g : groups_up_to_8())
      for (const SkewBrace& b : skb::enumerate_braces_on(g))
        out.push_back(b);
    return out;
  }();
  return braces;
}

const Mixed7200& mixed7200_product() {
  static const Mixed7200 data = [] {
    Mixed7200 d;
    Group sl25 = skb::builtin_group("sl25");
    d.spec.b1 = skb::triv(sl25);
    d.spec.b2 = skb::atriv(sl25);
    skb::ElementSet z = skb::center_group(sl25);
    d.spec.i1 = z;
    d.spec.i2 = z;
    for (Elem e : z.elements()) d.spec.alpha.push_back({e, e});
    d.product = skb::external_central_product(d.spec);
    return d;
  }();
  return data;
}

}  // namespace corpus
