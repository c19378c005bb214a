#pragma once

#include <vector>

#include "skb/group.hpp"

namespace skb::detail {

struct DenseBackend final : GroupBackend {
  int n = 0;
  std::vector<Elem> tab;  // row-major
  std::vector<Elem> invs;

  int order() const override { return n; }
  Elem op(Elem a, Elem b) const override {
    return tab[static_cast<std::size_t>(a) * n + b];
  }
  Elem inv(Elem a) const override { return invs[static_cast<std::size_t>(a)]; }
  const std::vector<Elem>* dense_table() const override { return &tab; }
};

struct ProductBackend final : GroupBackend {
  Group g1, g2;
  int n1 = 0, n2 = 0;

  int order() const override { return n1 * n2; }
  Elem op(Elem a, Elem b) const override {
    return g1.op(a / n2, b / n2) * n2 + g2.op(a % n2, b % n2);
  }
  Elem inv(Elem a) const override {
    return g1.inv(a / n2) * n2 + g2.inv(a % n2);
  }
};

struct OppositeBackend final : GroupBackend {
  Group g;
  int order() const override { return g.order(); }
  Elem op(Elem a, Elem b) const override { return g.op(b, a); }
  Elem inv(Elem a) const override { return g.inv(a); }
};

struct QuotientBackend final : GroupBackend {
  Group parent;
  std::vector<Elem> reps;      // sorted minimal coset representatives
  std::vector<Elem> coset_of;  // parent elem -> coset index

  int order() const override { return static_cast<int>(reps.size()); }
  Elem op(Elem a, Elem b) const override {
    return coset_of[static_cast<std::size_t>(
        parent.op(reps[static_cast<std::size_t>(a)],
                  reps[static_cast<std::size_t>(b)]))];
  }
  Elem inv(Elem a) const override {
    return coset_of[static_cast<std::size_t>(
        parent.inv(reps[static_cast<std::size_t>(a)]))];
  }
};

struct SubgroupBackend final : GroupBackend {
  Group parent;
  std::vector<Elem> elems;     // sorted
  std::vector<Elem> index_of;  // parent elem -> local index, -1 outside

  int order() const override { return static_cast<int>(elems.size()); }
  Elem op(Elem a, Elem b) const override {
    return index_of[static_cast<std::size_t>(
        parent.op(elems[static_cast<std::size_t>(a)],
                  elems[static_cast<std::size_t>(b)]))];
  }
  Elem inv(Elem a) const override {
    return index_of[static_cast<std::size_t>(
        parent.inv(elems[static_cast<std::size_t>(a)]))];
  }
};

}  // namespace skb::detail
