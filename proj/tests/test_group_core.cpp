#include <doctest.h>

#include <algorithm>
#include <set>

#include "skb/group.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using skb::Elem;
using skb::ElementSet;
using skb::Errc;
using skb::Group;

namespace {

std::vector<Elem> elems(const ElementSet& s) { return s.elements(); }

skb::Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const skb::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return skb::Errc::malformed_table;
}

}  // namespace

TEST_CASE("validate_group accepts C2 and fills inverses") {
  Group c2 = skb::validate_group({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);
  CHECK(c2.op(1, 1) == 0);
}

TEST_CASE("validate_group error classes") {
  CHECK(error_code([] { skb::validate_group({{0, 1}, {1, 1}}); }) ==
        Errc::no_inverse);
  CHECK(error_code([] { skb::validate_group({{0, 1}, {1, 0}, {2, 2, 2}}); }) ==
        Errc::malformed_table);
  CHECK(error_code([] { skb::validate_group({{0, 9}, {1, 0}}); }) ==
        Errc::malformed_table);
  CHECK(error_code([] { skb::validate_group({{0, 0}, {0, 0}}); }) ==
        Errc::no_identity);
  // {{1,0},{0,1}} is C2 with the identity at index 1; it validates after the
  // recorded relocation.
  CHECK(skb::validate_group({{1, 0}, {0, 1}}).relabeling() ==
        std::vector<Elem>{1, 0});
  // A non-associative loop of order 5: identity plus a Latin square where
  // (1.1).2 != 1.(1.2).
  std::vector<std::vector<Elem>> loop{{0, 1, 2, 3, 4},
                                      {1, 0, 3, 4, 2},
                                      {2, 3, 4, 0, 1},
                                      {3, 4, 1, 2, 0},
                                      {4, 2, 0, 1, 3}};
  CHECK(error_code([&] { skb::validate_group(loop); }) == Errc::not_associative);
}

TEST_CASE("identity is relocated to index 0 and the relabeling is recorded") {
  // C3 with identity at position 2.
  std::vector<std::vector<Elem>> shifted{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  Group g = skb::validate_group(shifted);
  CHECK(g.op(0, 0) == 0);
  CHECK(g.order() == 3);
  REQUIRE(g.relabeling().size() == 3);
  const std::vector<Elem>& p = g.relabeling();
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      CHECK(g.op(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]) ==
            p[static_cast<std::size_t>(shifted[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]);
}

TEST_CASE("even permutations of 5 points validate as a group of order 60") {
  auto perms = [] {
    std::vector<int> p{0, 1, 2, 3, 4};
    std::vector<std::vector<int>> out;
    do {
      int inv = 0;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
      if (inv % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  REQUIRE(perms.size() == 60);
  Group a5_oracle = oracles::group_from_permutations(perms, "A5-oracle");
  CHECK(a5_oracle.order() == 60);
  // The builtin uses the same labeling.
  const Group& a5 = corpus::instance().a5;
  for (Elem a = 0; a < 60; ++a)
    for (Elem b = 0; b < 60; ++b) CHECK(a5.op(a, b) == a5_oracle.op(a, b));
}

TEST_CASE("builtin groups") {
  CHECK(skb::builtin_group("cyclic(1)").order() == 1);
  CHECK(skb::builtin_group("a5").order() == 60);
  CHECK(skb::builtin_group("a4").order() == 12);
  CHECK(skb::builtin_group("s3").order() == 6);
  CHECK(skb::builtin_group("elementary_abelian(2,2)").order() == 4);
  CHECK(error_code([] { skb::builtin_group("m11"); }) == Errc::unknown_name);

  // SL(2,5): the oracle counts determinant-1 matrices directly.
  int count = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          if (((a * d - b * c) % 5 + 5) % 5 == 1) ++count;
  CHECK(count == 120);
  CHECK(skb::builtin_group("sl25").order() == count);
}

TEST_CASE("subgroup_span") {
  const auto& c = corpus::instance();
  CHECK(elems(skb::subgroup_span(c.c6, {2})) == std::vector<Elem>{0, 2, 4});
  CHECK(elems(skb::subgroup_span(c.c6, std::vector<Elem>{})) ==
        std::vector<Elem>{0});
  // Two elements generating A5; the oracle agrees.
  std::vector<Elem> gens{1, 7};
  ElementSet span = skb::subgroup_span(c.a5, gens);
  CHECK(elems(span) == oracles::naive_span(c.a5, gens));
}

TEST_CASE("normal_closure") {
  const auto& c = corpus::instance();
  // A transposition-like element of S3 (any order-2 element) closes to S3.
  Elem t = -1;
  for (Elem e = 1; e < 6; ++e)
    if (c.s3.element_order(e) == 2) {
      t = e;
      break;
    }
  REQUIRE(t >= 0);
  CHECK(skb::normal_closure(c.s3, ElementSet::from_elements(6, {t})).size() == 6);
  CHECK(elems(skb::normal_closure(c.s3, ElementSet::from_elements(6, {t}))) ==
        oracles::naive_normal_closure(c.s3, {t}));
  CHECK(skb::normal_closure(c.c6, ElementSet::from_elements(6, {0})).size() == 1);
  // In an abelian group every subgroup is its own normal closure.
  ElementSet sub = skb::subgroup_span(c.c6, {3});
  CHECK(skb::normal_closure(c.c6, sub) == sub);
}

TEST_CASE("center and derived subgroup") {
  const auto& c = corpus::instance();
  CHECK(skb::center_group(c.sl25).size() == 2);
  CHECK(elems(skb::center_group(c.s3)) == std::vector<Elem>{0});
  CHECK(elems(skb::center_group(c.s3)) == oracles::naive_center(c.s3));

  CHECK(skb::derived_subgroup(c.a5).size() == 60);
  CHECK(elems(skb::derived_subgroup(c.a5)) == oracles::naive_derived(c.a5));
  CHECK(skb::derived_subgroup(skb::builtin_group("cyclic(5)")).size() == 1);
  CHECK(elems(skb::derived_subgroup(c.s3)) == oracles::naive_derived(c.s3));
  CHECK(skb::is_perfect_group(c.a5));
  CHECK(skb::is_perfect_group(c.sl25));
  CHECK(!skb::is_perfect_group(c.s3));
}

TEST_CASE("derived subgroup is the least normal subgroup with abelian quotient") {
  const auto& c = corpus::instance();
  for (const Group& g : {c.s3, c.a4, c.d4, c.q8, c.c8}) {
    ElementSet derived = skb::derived_subgroup(g);
    auto [dq, dproj] = skb::quotient_group(g, derived);
    (void)dproj;
    CHECK(skb::is_abelian_group(dq));
    for (const ElementSet& sub : skb::all_subgroups(g)) {
      if (!skb::is_normal_subgroup(g, sub)) continue;
      auto [q, proj] = skb::quotient_group(g, sub);
      (void)proj;
      if (skb::is_abelian_group(q)) CHECK(derived.subset_of(sub));
    }
  }
}

TEST_CASE("quotient_group") {
  const auto& c = corpus::instance();
  auto [psl, proj] = skb::quotient_group(c.sl25, skb::center_group(c.sl25));
  CHECK(psl.order() == 60);
  CHECK(skb::find_group_isomorphism(psl, c.a5).has_value());

  // Projection is a surjective morphism with kernel exactly the subgroup.
  CHECK(skb::is_group_homomorphism(proj));
  std::set<Elem> image(proj.map.begin(), proj.map.end());
  CHECK(static_cast<int>(image.size()) == psl.order());
  std::vector<Elem> kernel;
  for (Elem x = 0; x < c.sl25.order(); ++x)
    if (proj.map[static_cast<std::size_t>(x)] == 0) kernel.push_back(x);
  CHECK(kernel == elems(skb::center_group(c.sl25)));

  auto [q1, p1] = skb::quotient_group(c.c6, ElementSet::from_elements(6, {0}));
  (void)p1;
  CHECK(skb::find_group_isomorphism(q1, c.c6).has_value());
  auto [q2, p2] = skb::quotient_group(c.c6, ElementSet::from_elements(6, {0, 3}));
  (void)p2;
  CHECK(q2.order() == 3);
  CHECK(skb::find_group_isomorphism(q2, skb::builtin_group("cyclic(3)"))
            .has_value());

  // Quotient by a non-normal subgroup is rejected.
  Elem t = -1;
  for (Elem e = 1; e < 6; ++e)
    if (c.s3.element_order(e) == 2) {
      t = e;
      break;
    }
  ElementSet nn = skb::subgroup_span(c.s3, {t});
  CHECK(error_code([&] { skb::quotient_group(c.s3, nn); }) == Errc::not_normal);
}

TEST_CASE("direct products") {
  const auto& c = corpus::instance();
  Group c2xc3 = skb::direct_product_group(skb::builtin_group("cyclic(2)"),
                                          skb::builtin_group("cyclic(3)"));
  CHECK(c2xc3.order() == 6);
  CHECK(skb::find_group_isomorphism(c2xc3, c.c6).has_value());

  Group a4xc5 = skb::direct_product_group(c.a4, skb::builtin_group("cyclic(5)"));
  CHECK(a4xc5.order() == 60);
  CHECK(!skb::find_group_isomorphism(a4xc5, c.a5).has_value());
  // Independent reason: A4 x C5 has an element of order 15, A5 does not.
  auto max_order = [](const Group& g) {
    int m = 0;
    for (Elem e = 0; e < g.order(); ++e) m = std::max(m, g.element_order(e));
    return m;
  };
  CHECK(max_order(a4xc5) == 15);
  CHECK(max_order(c.a5) == 5);

  Group big = skb::direct_product_group(c.sl25, c.sl25);
  CHECK(big.order() == 14400);
  CHECK(!big.is_dense());
  skb::spot_check_group(big, {0x7357, 200000});
}

TEST_CASE("is_simple_group") {
  const auto& c = corpus::instance();
  CHECK(skb::is_simple_group(c.a5));
  CHECK(!skb::is_simple_group(c.sl25));
  CHECK(skb::is_simple_group(skb::builtin_group("cyclic(2)")));
  CHECK(!skb::is_simple_group(skb::builtin_group("cyclic(4)")));
  CHECK(!skb::is_simple_group(skb::builtin_group("cyclic(1)")));
}

TEST_CASE("isomorphism search returns verified witnesses") {
  const auto& c = corpus::instance();
  auto m = skb::find_group_isomorphism(
      c.c6, skb::direct_product_group(skb::builtin_group("cyclic(2)"),
                                      skb::builtin_group("cyclic(3)")));
  REQUIRE(m.has_value());
  CHECK(skb::is_group_isomorphism(*m));

  CHECK(error_code([&] {
          skb::IsoOptions opts;
          opts.order_cap = 50;
          skb::find_group_isomorphism(c.a5, c.a5, opts);
        }) == Errc::order_cap_exceeded);

  // Above the cap with explicit generators.
  skb::IsoOptions opts;
  opts.order_cap = 50;
  std::vector<Elem> gens = c.a5.generators();
  opts.domain_generators = &gens;
  CHECK(skb::find_group_isomorphism(c.a5, c.a5, opts).has_value());
}

TEST_CASE("restriction to a subgroup") {
  const auto& c = corpus::instance();
  ElementSet sub = skb::subgroup_span(c.c6, {2});
  Group g = skb::restrict_to_subgroup(c.c6, sub);
  CHECK(g.order() == 3);
  CHECK(g.op(1, 1) == 2);  // 2 + 2 = 4, the third element
  CHECK(error_code([&] {
          skb::restrict_to_subgroup(c.c6, ElementSet::from_elements(6, {0, 1, 2}));
        }) == Errc::not_closed);
}

TEST_CASE("all constructed groups satisfy the axioms on samples") {
  const auto& c = corpus::instance();
  for (const Group& g : {c.c6, c.s3, c.a4, c.a5, c.sl25, c.d4, c.q8})
    skb::spot_check_group(g, {1234, 20000});
}
