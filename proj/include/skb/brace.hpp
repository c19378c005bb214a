#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skb/core.hpp"
#include "skb/element_set.hpp"
#include "skb/group.hpp"

namespace skb {

class SkewBrace;

/// Construction metadata for braces built as central products; enables the
/// factored serialization format and structural two-sidedness inheritance.
struct CentralProductData {
  std::shared_ptr<const SkewBrace> left;
  std::shared_ptr<const SkewBrace> right;
  std::vector<Elem> left_ideal;
  std::vector<Elem> right_ideal;
  std::vector<std::pair<Elem, Elem>> alpha;
};

namespace detail {

struct BraceData {
  Group add;
  Group mul;
  std::string name;
  /// How the brace was built ("validated", "triv", "product", ...).
  std::string provenance;
  /// Structural guarantee that the right brace identity holds (e.g. inherited
  /// from two-sided factors through products, quotients, sub-braces).
  bool inherited_two_sided = false;
  std::optional<CentralProductData> central_product;
};

}  // namespace detail

/// Two group structures on a shared carrier with identity 0 satisfying the
/// left brace identity a(b + c) = ab - a + ac. Immutable, cheaply copyable.
class SkewBrace {
 public:
  SkewBrace() = default;

  int order() const { return d_->add.order(); }
  const Group& add() const { return d_->add; }
  const Group& mul() const { return d_->mul; }
  const std::string& name() const { return d_->name; }
  const std::string& provenance() const { return d_->provenance; }
  bool inherited_two_sided() const { return d_->inherited_two_sided; }
  const std::optional<CentralProductData>& central_product_data() const {
    return d_->central_product;
  }

  bool is_dense() const { return d_->add.is_dense() && d_->mul.is_dense(); }
  bool valid() const { return d_ != nullptr; }

  Elem add_op(Elem a, Elem b) const { return d_->add.op(a, b); }
  Elem mul_op(Elem a, Elem b) const { return d_->mul.op(a, b); }
  Elem add_inv(Elem a) const { return d_->add.inv(a); }
  Elem mul_inv(Elem a) const { return d_->mul.inv(a); }

  /// lambda_b(a) = -b + b a.
  Elem lambda(Elem b, Elem a) const {
    return d_->add.op(d_->add.inv(b), d_->mul.op(b, a));
  }

  SkewBrace with_name(std::string name) const;

 private:
  friend SkewBrace make_brace_unchecked(Group, Group, std::string, std::string,
                                        bool, std::optional<CentralProductData>);
  std::shared_ptr<const detail::BraceData> d_;
};

/// Internal factory; callers are responsible for having run the appropriate
/// dense or sampled axiom checks.
SkewBrace make_brace_unchecked(Group add, Group mul, std::string name,
                               std::string provenance, bool inherited_two_sided,
                               std::optional<CentralProductData> cp = {});

/// An ideal of a brace together with the verified witness flags.
struct IdealHandle {
  ElementSet set;
  bool additively_normal = false;
  bool multiplicatively_normal = false;
  bool lambda_stable = false;

  bool holds() const {
    return additively_normal && multiplicatively_normal && lambda_stable;
  }
  int size() const { return set.size(); }
};

struct BraceMorphism {
  SkewBrace domain;
  SkewBrace codomain;
  std::vector<Elem> map;
};

// ---------------------------------------------------------------------------
// Validation and basic constructions

/// Validates both tables as groups sharing identity index (IdentityMismatch
/// otherwise; a common non-zero identity is relocated to 0 consistently) and
/// checks the left brace identity, brute force below kBruteTripleCap, by the
/// exact lambda-homomorphism reduction above. Throws
/// LeftBraceIdentityFails(a,b,c) naming the first violating triple.
SkewBrace validate_brace(const std::vector<std::vector<Elem>>& add_table,
                         const std::vector<std::vector<Elem>>& mul_table,
                         std::string name = "", const CheckOptions& opts = {});

/// Brace from two already-validated groups on the same carrier. Dense inputs
/// get the exact identity check; lazy ones the seeded sampled check.
SkewBrace make_brace(Group add, Group mul, std::string name,
                     std::string provenance, bool inherited_two_sided,
                     const CheckOptions& opts = {},
                     std::optional<CentralProductData> cp = {});

/// Triv(G): both operations equal G. aTriv(G) = Triv(G)^op: addition reversed.
SkewBrace triv(const Group& g);
SkewBrace atriv(const Group& g);

/// The brace with reversed addition on the same carrier (always a skew brace;
/// two-sidedness transfers).
SkewBrace opposite(const SkewBrace& b);

SkewBrace direct_product_brace(const SkewBrace& b1, const SkewBrace& b2,
                               const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// The lambda map and the star product

/// The full permutation a -> -b + b a.
std::vector<Elem> lambda_map(const SkewBrace& b, Elem x);

/// a * b = -a + a b - b.
Elem star(const SkewBrace& b, Elem x, Elem y);

/// a *_op b, the star of the opposite brace, computed directly: -b + a b - a.
Elem star_op(const SkewBrace& b, Elem x, Elem y);

enum class SpanMethod {
  /// Whole-carrier spans reduce to stars with generator left argument (exact:
  /// (x x') * y = x * lambda_{x'}(y) + x' * y); other spans sweep all pairs.
  automatic,
  /// Sweep every pair; the dual route used by property tests.
  full_sweep,
};

/// Additive span of {x * y : x in X, y in Y}, incremental with early exit
/// once the span reaches the whole carrier.
ElementSet star_span(const SkewBrace& b, const ElementSet& x,
                     const ElementSet& y,
                     SpanMethod method = SpanMethod::automatic);

/// B^2 = B * B as a verified ideal (InternalInconsistency if the span fails
/// the ideal check). square_op(B) = square of the opposite brace.
IdealHandle square(const SkewBrace& b);
IdealHandle square_op(const SkewBrace& b);

bool is_trivial(const SkewBrace& b);        // B^2 = 0
bool is_almost_trivial(const SkewBrace& b); // B^{2,op} = 0

// ---------------------------------------------------------------------------
// Ideals, socle, center

/// Exact witness check: additive subgroup + normal in both groups + stable
/// under every lambda_b (generator arguments suffice; conjugation and lambda
/// by a generating set iterate to the full conditions on finite carriers).
bool is_ideal(const SkewBrace& b, const ElementSet& s);

/// Verifies the conditions and returns the handle; throws NotAnIdeal.
IdealHandle make_ideal(const SkewBrace& b, const ElementSet& s);

/// Least ideal containing X: fixpoint of additive span, additive conjugation,
/// multiplicative conjugation and lambda images, run round-robin.
IdealHandle ideal_closure(const SkewBrace& b, const ElementSet& x);

/// Soc(B) = ker(lambda) /\ Z(B,+); verified to be an ideal.
ElementSet socle(const SkewBrace& b);
/// Z(B) = Soc(B) /\ Z(B,.); verified to be an ideal.
ElementSet center_brace(const SkewBrace& b);

/// Quotient on additive coset representatives (minimal index); additive and
/// multiplicative cosets are verified to coincide. Returns the quotient and
/// the projection. Throws NotAnIdeal.
std::pair<SkewBrace, BraceMorphism> quotient_brace(const SkewBrace& b,
                                                   const IdealHandle& ideal,
                                                   const CheckOptions& opts = {});

/// Restriction to a subset closed under both operations; throws NotClosed.
SkewBrace sub_brace(const SkewBrace& b, const ElementSet& s,
                    std::string name = "");

// ---------------------------------------------------------------------------
// Classification

struct BraceFlags {
  bool two_sided = false;
  bool trivial = false;
  bool almost_trivial = false;
  bool left_brace = false;
  bool abelian = false;
  /// "exhaustive" for dense carriers, "sampled+provenance" for lazy ones.
  std::string two_sided_mode;
  std::string provenance_note;
};

BraceFlags classify(const SkewBrace& b, const CheckOptions& opts = {});

/// The two-sided identity (a+b)c = ac - c + bc. Dense: exact (brute naming a
/// triple below kBruteTripleCap, structured above). Lazy: provenance plus
/// seeded samples; a sample violating a structural guarantee is an
/// InternalInconsistency.
bool is_two_sided(const SkewBrace& b, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Morphisms and isomorphism search

/// Exact, both operations: exhaustive below kExhaustivePairCap, otherwise
/// generator-complete per operation.
bool is_brace_homomorphism(const BraceMorphism& m);
bool is_brace_isomorphism(const BraceMorphism& m);

struct BraceIsoOptions {
  int order_cap = kDefaultIsoOrderCap;
  /// Verify this candidate map instead of searching.
  const std::vector<Elem>* candidate = nullptr;
};

/// Backtracking on additive generator images, pruned by paired element-order
/// profiles in both groups; every returned witness is re-verified.
std::optional<BraceMorphism> find_brace_isomorphism(
    const SkewBrace& b1, const SkewBrace& b2, const BraceIsoOptions& opts = {});

// ---------------------------------------------------------------------------
// Sampled verification

void spot_check_brace(const SkewBrace& b, const CheckOptions& opts);

}  // namespace skb
