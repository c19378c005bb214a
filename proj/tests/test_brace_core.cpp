#include <doctest.h>

#include <algorithm>
#include <functional>

#include "skb/brace.hpp"
#include "skb/enumeration.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using skb::Elem;
using skb::ElementSet;
using skb::Errc;
using skb::SkewBrace;

namespace {

skb::Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const skb::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return skb::Errc::malformed_table;
}

const skb::CheckOptions kFast{0xfeed, 20000};

}  // namespace

TEST_CASE("validate_brace accepts the trivial brace over C6") {
  auto table = corpus::instance().c6.table();
  SkewBrace b = skb::validate_brace(table, table);
  CHECK(b.order() == 6);
  CHECK(skb::is_trivial(b));
}

TEST_CASE("validate_brace rejects tables with different identities") {
  auto add = corpus::instance().c6.table();
  // A C6 table whose identity sits at 1 instead of 0.
  std::vector<std::vector<Elem>> mul(6, std::vector<Elem>(6));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      mul[static_cast<std::size_t>((a + 1) % 6)][static_cast<std::size_t>((b + 1) % 6)] =
          (a + b + 1) % 6;
  CHECK(error_code([&] { skb::validate_brace(add, mul); }) ==
        Errc::identity_mismatch);
}

TEST_CASE("validate_brace names a violating triple") {
  const auto& c = corpus::instance();
  // S3 multiplication against C6 addition shares only the identity; the left
  // brace identity must fail somewhere.
  try {
    skb::validate_brace(c.c6.table(), c.s3.table());
    FAIL("expected LeftBraceIdentityFails");
  } catch (const skb::Error& e) {
    CHECK(e.code() == Errc::left_brace_identity_fails);
  }
}

TEST_CASE("C4 addition against the Klein four multiplication, all alignments") {
  // There is exactly one K4 table with identity 0; C4 has three labelings
  // with identity 0. The sweep must agree with the direct search oracle.
  skb::Group k4 = skb::builtin_group("elementary_abelian(2,2)");
  skb::Group c4 = skb::builtin_group("cyclic(4)");
  auto c4_tables = [&] {
    std::vector<std::vector<std::vector<Elem>>> out;
    std::vector<Elem> perm{0, 1, 2, 3};
    do {
      if (perm[0] != 0) continue;
      std::vector<std::vector<Elem>> t(4, std::vector<Elem>(4));
      for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
          t[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
           [static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] =
              perm[static_cast<std::size_t>(c4.op(a, b))];
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  CHECK(c4_tables.size() == 3);

  int valid = 0;
  for (const auto& add : c4_tables) {
    try {
      SkewBrace b = skb::validate_brace(add, k4.table());
      ++valid;
      CHECK(skb::classify(b).left_brace);
    } catch (const skb::Error& e) {
      CHECK(e.code() == Errc::left_brace_identity_fails);
    }
  }
  // Oracle: classes with additive group C4 and multiplicative group K4.
  int oracle_classes = 0;
  for (const SkewBrace& b : skb::direct_search_braces(c4))
    if (skb::find_group_isomorphism(b.mul(), k4).has_value()) ++oracle_classes;
  CHECK((oracle_classes > 0) == (valid > 0));
}

TEST_CASE("lambda maps") {
  const auto& c = corpus::instance();
  for (Elem b = 0; b < 6; ++b)
    for (Elem a = 0; a < 6; ++a) CHECK(c.triv_c6.lambda(b, a) == a);

  // aTriv(G): lambda_b is conjugation in the multiplicative group.
  for (Elem b = 0; b < 6; ++b)
    for (Elem a = 0; a < 6; ++a)
      CHECK(c.atriv_s3.lambda(b, a) == c.s3.op(c.s3.op(b, a), c.s3.inv(b)));

  // The factorization brace is non-trivial, so some lambda is not identity.
  bool nontrivial = false;
  for (Elem b = 0; b < c.s_brace.order() && !nontrivial; ++b)
    for (Elem a = 0; a < c.s_brace.order() && !nontrivial; ++a)
      nontrivial = c.s_brace.lambda(b, a) != a;
  CHECK(nontrivial);
}

TEST_CASE("lambda is a homomorphism into the additive automorphisms") {
  const auto& c = corpus::instance();
  for (const SkewBrace& b : {c.triv_s3, c.atriv_s3, c.s_brace}) {
    const int n = b.order();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        for (Elem a = 0; a < n; ++a)
          CHECK(b.lambda(b.mul_op(x, y), a) == b.lambda(x, b.lambda(y, a)));
        CHECK(b.mul_op(x, y) == b.add_op(x, b.lambda(x, y)));
      }
  }
}

TEST_CASE("star products") {
  const auto& c = corpus::instance();
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(skb::star(c.triv_c6, a, b) == 0);

  // aTriv: a * b = -a + (b + a) - b in the additive group.
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      const skb::Group& add = c.atriv_s3.add();
      Elem expected = add.op(add.op(add.inv(a), add.op(b, a)), add.inv(b));
      CHECK(skb::star(c.atriv_s3, a, b) == expected);
    }

  // Stars of aTriv(A5) span the whole carrier (A5 is perfect).
  CHECK(skb::star_span(c.atriv_a5, ElementSet::whole(60), ElementSet::whole(60))
            .is_whole());
}

TEST_CASE("star_span generator reduction agrees with the full sweep") {
  const auto& c = corpus::instance();
  for (const SkewBrace& b : c.dense_braces()) {
    ElementSet whole = ElementSet::whole(b.order());
    CHECK(skb::star_span(b, whole, whole, skb::SpanMethod::automatic) ==
          skb::star_span(b, whole, whole, skb::SpanMethod::full_sweep));
    // And against the naive oracle span.
    std::vector<Elem> all(static_cast<std::size_t>(b.order()));
    for (Elem e = 0; e < b.order(); ++e) all[static_cast<std::size_t>(e)] = e;
    CHECK(skb::star_span(b, whole, whole).elements() ==
          oracles::naive_star_span(b, all, all));
  }
}

TEST_CASE("squares and opposites") {
  const auto& c = corpus::instance();
  CHECK(skb::square(c.triv_a5).size() == 1);
  CHECK(skb::square_op(c.atriv_a5).size() == 1);
  CHECK(skb::square_op(c.triv_sl25).set.is_whole());
  CHECK(skb::is_trivial(c.triv_c6));
  CHECK(skb::is_almost_trivial(c.atriv_c6));
  // On an abelian group triv = atriv.
  CHECK(skb::is_trivial(c.atriv_c6));

  // Opposite duality: the direct star_op formula matches the opposite brace.
  for (const SkewBrace& b : {c.triv_s3, c.atriv_s3, c.s_brace, c.s_tilde}) {
    SkewBrace op = skb::opposite(b);
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem y = 0; y < b.order(); ++y)
        CHECK(skb::star_op(b, x, y) == skb::star(op, x, y));
    // B^{op,op} = B elementwise.
    SkewBrace opop = skb::opposite(op);
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem y = 0; y < b.order(); ++y) {
        CHECK(opop.add_op(x, y) == b.add_op(x, y));
        CHECK(opop.mul_op(x, y) == b.mul_op(x, y));
      }
  }
}

TEST_CASE("squares are verified ideals; quotient by B^2 is trivial") {
  const auto& c = corpus::instance();
  for (const SkewBrace& b : c.dense_braces()) {
    skb::IdealHandle sq = skb::square(b);
    CHECK(sq.holds());
    skb::IdealHandle sqop = skb::square_op(b);
    CHECK(sqop.holds());
    auto [q, proj] = skb::quotient_brace(b, sq, kFast);
    (void)proj;
    CHECK(skb::is_trivial(q));
  }
}

TEST_CASE("ideal closure") {
  const auto& c = corpus::instance();
  CHECK(skb::ideal_closure(c.s_brace, ElementSet::from_elements(60, {0})).size() ==
        1);
  // The factorization brace is simple: a non-zero element generates it.
  CHECK(skb::ideal_closure(c.s_brace, ElementSet::from_elements(60, {17}))
            .set.is_whole());
  // In Triv(SL(2,5)) the central involution generates the 2-element center.
  ElementSet z = skb::center_group(c.sl25);
  REQUIRE(z.size() == 2);
  Elem involution = z.elements()[1];
  CHECK(skb::ideal_closure(c.triv_sl25,
                           ElementSet::from_elements(120, {involution}))
            .set == z);
}

TEST_CASE("socle and center") {
  const auto& c = corpus::instance();
  CHECK(skb::center_brace(c.triv_c6) == skb::center_group(c.c6));
  CHECK(skb::center_brace(c.triv_sl25) == skb::center_group(c.sl25));
  CHECK(skb::socle(c.atriv_s3).size() == 1);
  CHECK(skb::center_brace(c.s_tilde).size() == 2);
}

TEST_CASE("quotient braces") {
  const auto& c = corpus::instance();
  skb::IdealHandle trivial_ideal =
      skb::make_ideal(c.s_brace, ElementSet::from_elements(60, {0}));
  auto [q, proj] = skb::quotient_brace(c.s_brace, trivial_ideal, kFast);
  CHECK(q.order() == 60);
  CHECK(skb::is_brace_homomorphism(proj));
  CHECK(skb::find_brace_isomorphism(q, c.s_brace).has_value());

  CHECK(error_code([&] {
          skb::IdealHandle bogus;
          bogus.set = ElementSet::from_elements(60, {0, 1});
          skb::quotient_brace(c.s_brace, bogus, kFast);
        }) == Errc::not_an_ideal);
}

TEST_CASE("sub braces") {
  const auto& c = corpus::instance();
  ElementSet z = skb::center_group(c.sl25);
  SkewBrace sub = skb::sub_brace(c.triv_sl25, z);
  CHECK(sub.order() == 2);
  CHECK(skb::is_trivial(sub));
  CHECK(error_code([&] {
          skb::sub_brace(c.triv_sl25, ElementSet::from_elements(120, {0, 1, 2}));
        }) == Errc::not_closed);
}

TEST_CASE("products and classification flags") {
  const auto& c = corpus::instance();
  SkewBrace t2 = skb::triv(skb::builtin_group("cyclic(2)"));
  SkewBrace p =
      skb::direct_product_brace(t2, skb::triv(skb::builtin_group("cyclic(3)")));
  CHECK(p.order() == 6);
  CHECK(skb::is_trivial(p));

  skb::BraceFlags f = skb::classify(c.triv_c6);
  CHECK(f.two_sided);
  CHECK(f.trivial);
  CHECK(f.left_brace);
  CHECK(f.abelian);
  CHECK(f.two_sided_mode == "exhaustive");

  f = skb::classify(c.atriv_a5);
  CHECK(f.two_sided);
  CHECK(f.almost_trivial);
  CHECK(!f.trivial);
  CHECK(!f.left_brace);

  // aTriv(A5) satisfies the two-sided identity exhaustively (oracle).
  CHECK(oracles::naive_two_sided(c.atriv_a5));

  f = skb::classify(c.s_tilde);
  CHECK(!f.two_sided);
  CHECK(!oracles::naive_two_sided(c.s_tilde));

  // The 3600-element product is lazy; flags come from provenance + samples.
  f = skb::classify(c.prod3600, kFast);
  CHECK(f.two_sided);
  CHECK(f.two_sided_mode == "sampled+provenance");
  CHECK(!f.trivial);
  CHECK(!f.almost_trivial);
}

TEST_CASE("find_brace_isomorphism") {
  const auto& c = corpus::instance();
  SkewBrace t_c2xc3 = skb::triv(skb::direct_product_group(
      skb::builtin_group("cyclic(2)"), skb::builtin_group("cyclic(3)")));
  auto m = skb::find_brace_isomorphism(c.triv_c6, t_c2xc3);
  REQUIRE(m.has_value());
  CHECK(skb::is_brace_isomorphism(*m));

  CHECK(!skb::find_brace_isomorphism(c.triv_a5, c.atriv_a5).has_value());

  // Candidate verification path: the identity is an isomorphism B -> B.
  std::vector<Elem> identity(static_cast<std::size_t>(c.s_brace.order()));
  for (Elem x = 0; x < c.s_brace.order(); ++x)
    identity[static_cast<std::size_t>(x)] = x;
  skb::BraceIsoOptions opts;
  opts.candidate = &identity;
  CHECK(skb::find_brace_isomorphism(c.s_brace, c.s_brace, opts).has_value());
  // A wrong candidate is rejected, not repaired.
  std::vector<Elem> wrong = identity;
  std::swap(wrong[1], wrong[2]);
  opts.candidate = &wrong;
  CHECK(!skb::find_brace_isomorphism(c.s_brace, c.s_brace, opts).has_value());
}

TEST_CASE("central-ideal homomorphism lemmas on Triv(SL(2,5))") {
  const auto& c = corpus::instance();
  // f_i(b) = i * b is additive for ideals inside Z(B,+); g_i(b) = b * i also,
  // because Triv(SL(2,5)) is two-sided.
  const SkewBrace& b = c.triv_sl25;
  ElementSet z = skb::center_group(c.sl25);
  for (Elem i : z.elements())
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem y = 0; y < b.order(); ++y) {
        Elem sum = b.add_op(x, y);
        CHECK(skb::star(b, i, sum) ==
              b.add_op(skb::star(b, i, x), skb::star(b, i, y)));
        CHECK(skb::star(b, sum, i) ==
              b.add_op(skb::star(b, x, i), skb::star(b, y, i)));
      }
}
