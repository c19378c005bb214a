#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skb/core.hpp"
#include "skb/element_set.hpp"

namespace skb {

namespace detail {

struct GroupBackend {
  virtual ~GroupBackend() = default;
  virtual int order() const = 0;
  virtual Elem op(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  /// Non-null for materialized tables (row-major n*n).
  virtual const std::vector<Elem>* dense_table() const { return nullptr; }
};

struct GroupData {
  int order = 0;
  std::shared_ptr<const GroupBackend> backend;
  std::vector<Elem> generators;  // greedy small generating set
  std::string name;
  /// validate_group records the permutation (original index -> normalized
  /// index) when it relocates the identity; empty when untouched.
  std::vector<Elem> relabeling;
};

}  // namespace detail

/// A finite group on the carrier [0, n) with identity 0. Immutable and
/// cheaply copyable; safe to share read-only across threads.
class Group {
 public:
  Group() = default;

  int order() const { return d_->order; }
  Elem op(Elem a, Elem b) const { return d_->backend->op(a, b); }
  Elem inv(Elem a) const { return d_->backend->inv(a); }
  const std::vector<Elem>& generators() const { return d_->generators; }
  const std::string& name() const { return d_->name; }
  const std::vector<Elem>& relabeling() const { return d_->relabeling; }

  bool is_dense() const { return d_->backend->dense_table() != nullptr; }
  const std::vector<Elem>* dense_table() const {
    return d_->backend->dense_table();
  }

  bool valid() const { return d_ != nullptr; }

  Elem element_order(Elem a) const;
  /// op(a, op(b, c)) cubed etc. convenience: a^k.
  Elem power(Elem a, long k) const;

  /// Materializes the operation table (any order; callers watch the size).
  std::vector<std::vector<Elem>> table() const;

  Group with_name(std::string name) const;

 private:
  friend Group make_group(int, std::shared_ptr<const detail::GroupBackend>,
                          std::string, std::vector<Elem>);
  std::shared_ptr<const detail::GroupData> d_;
};

/// Internal factory: wraps a backend, computes the greedy generating set.
Group make_group(int order, std::shared_ptr<const detail::GroupBackend> backend,
                 std::string name = "", std::vector<Elem> relabeling = {});

// ---------------------------------------------------------------------------
// Validation and construction

/// Checks the group axioms on a raw table, relocates the identity to index 0
/// (recording the relabeling) and fills the inverse table.
/// Throws MalformedTable / NoIdentity / NoInverse / NotAssociative, naming the
/// first violating element or triple.
Group validate_group(const std::vector<std::vector<Elem>>& table,
                     std::string name = "");

/// Named groups: cyclic(k) (alias cK), elementary_abelian(p,k), s3, a4, a5,
/// sl25. a5 is the even permutations of 5 points in lexicographic order; a4
/// is its stabilizer of point 4; sl25 the determinant-1 2x2 matrices over F5.
Group builtin_group(const std::string& name);

/// Componentwise product; lazy backend above the dense cap. Index of (a, b)
/// is a * |H| + b.
Group direct_product_group(const Group& g, const Group& h);

/// Same carrier, op(a, b) = g.op(b, a).
Group opposite_group(const Group& g);

/// Group on the elements of a subgroup S (sorted by carrier index).
/// Throws NotClosed if S is not a subgroup containing 0.
Group restrict_to_subgroup(const Group& g, const ElementSet& s,
                           std::string name = "");

struct GroupMorphism {
  Group domain;
  Group codomain;
  std::vector<Elem> map;  // length |domain|
};

/// Quotient by a normal subgroup. Coset representatives are the minimal
/// element index of each coset, so the identity coset is 0. Returns the group
/// plus the projection morphism. Throws NotNormal.
std::pair<Group, GroupMorphism> quotient_group(const Group& g,
                                               const ElementSet& normal);

// ---------------------------------------------------------------------------
// Subgroup machinery

/// Smallest subgroup containing gens (monoid closure from 0; finite, so
/// inverses come for free). Result is flagged subgroup.
ElementSet subgroup_span(const Group& g, const ElementSet& gens);
ElementSet subgroup_span(const Group& g, const std::vector<Elem>& gens);

/// Smallest normal subgroup containing x.
ElementSet normal_closure(const Group& g, const ElementSet& x);

ElementSet center_group(const Group& g);
ElementSet derived_subgroup(const Group& g);
bool is_perfect_group(const Group& g);
bool is_abelian_group(const Group& g);

/// True iff |G| > 1 and the normal closure of every non-identity element is
/// the whole group.
bool is_simple_group(const Group& g);

/// Verifies S is closed under op and inv and contains 0.
bool is_subgroup(const Group& g, const ElementSet& s);
/// Subgroup + closed under conjugation.
bool is_normal_subgroup(const Group& g, const ElementSet& s);

/// All subgroups of g (BFS over the lattice). Intended for small orders; the
/// cap guards against accidental blowups.
std::vector<ElementSet> all_subgroups(const Group& g, int order_cap = 64);

/// Multiset of element orders; a cheap complete isomorphism invariant.
std::vector<int> element_order_profile(const Group& g);

/// Size of the conjugacy class of each element.
std::vector<int> conjugacy_class_sizes(const Group& g);

// ---------------------------------------------------------------------------
// Morphisms and isomorphism search

/// Exact check. Exhaustive on all pairs up to kExhaustivePairCap, otherwise
/// generator-complete: f(0) = 0 and f(g x) = f(g) f(x) for every generator g
/// and every x, which implies the property for all pairs by induction on the
/// word length of the left argument.
bool is_group_homomorphism(const GroupMorphism& m);
bool is_group_isomorphism(const GroupMorphism& m);

struct IsoOptions {
  int order_cap = kDefaultIsoOrderCap;
  /// Optional generating set of the domain; also lifts the order cap.
  const std::vector<Elem>* domain_generators = nullptr;
};

/// Backtracking on generator images, pruned by element orders and conjugacy
/// class sizes. Returns a fully verified witness or nullopt. Deterministic.
/// Throws OrderCapExceeded above the cap when no generators are supplied.
std::optional<GroupMorphism> find_group_isomorphism(const Group& g,
                                                    const Group& h,
                                                    const IsoOptions& opts = {});

/// Enumerates every isomorphism g -> h in a deterministic order; the sink
/// returns false to stop early. Intended for small orders (automorphism
/// groups, amalgamation maps).
void for_each_group_isomorphism(
    const Group& g, const Group& h, int order_cap,
    const std::function<bool(const GroupMorphism&)>& sink);

/// Materializes dense tables when the order fits the dense cap; returns the
/// group unchanged otherwise.
Group densify_group(const Group& g);

// ---------------------------------------------------------------------------
// Sampled verification (lazy backends)

/// Asserts associativity / identity / inverse axioms on seeded random
/// triples; exact exhaustive check for dense tables happens in validate_group.
void spot_check_group(const Group& g, const CheckOptions& opts);

}  // namespace skb
