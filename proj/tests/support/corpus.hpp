#pragma once

// The shared desk-scale corpus: named groups, trivial and almost trivial
// braces over them, the two exact-factorization examples, the big central
// products and the order-32 extraspecial instance. Built once per process.

#include <vector>

#include "skb/brace.hpp"
#include "skb/central_product.hpp"
#include "skb/constructions.hpp"

namespace corpus {

struct Corpus {
  skb::Group c6, s3, a4, a5, sl25;
  skb::Group d4, q8, c8, c4xc2, c2cubed;

  skb::SkewBrace triv_c6, atriv_c6;
  skb::SkewBrace triv_s3, atriv_s3;
  skb::SkewBrace triv_a4, atriv_a4;
  skb::SkewBrace triv_a5, atriv_a5;
  skb::SkewBrace triv_sl25, atriv_sl25;

  skb::SkewBrace s_brace;        // the A5 = A4 C5 factorization brace
  skb::SkewBrace s_tilde;        // its SL(2,5) lift
  skb::SkewBrace prod3600;       // triv(A5) x atriv(A5)
  skb::SkewBrace mixed7200;      // triv(SL(2,5)) o atriv(SL(2,5)), centers amalgamated
  skb::ExtraspecialBrace extraspecial32;  // p = 2, d = 4, identity form

  /// The dense braces above (orders 6..120), for exhaustive sweeps.
  std::vector<skb::SkewBrace> dense_braces() const;
  /// Dense + the two lazy products.
  std::vector<skb::SkewBrace> all_braces() const;
};

const Corpus& instance();

/// All groups of order <= 8 (the classical list), keyed for enumeration runs.
std::vector<skb::Group> groups_up_to_8();

/// All groups of order <= 6.
std::vector<skb::Group> groups_up_to_6();

/// enumerate_braces_on over every group of order <= 8; cached.
const std::vector<skb::SkewBrace>& enumerated_braces_up_to_8();

/// The amalgamated central product triv(SL(2,5)) o atriv(SL(2,5)) with its
/// spec and embeddings.
struct Mixed7200 {
  skb::CentralProductSpec spec;
  skb::ExternalCentralProduct product;
};
const Mixed7200& mixed7200_product();

}  // namespace corpus
