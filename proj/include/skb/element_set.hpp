#pragma once

#include <vector>

#include "skb/core.hpp"

namespace skb {

/// A subset of a carrier [0, n), kept both as a membership mask and as a
/// sorted element list. Used for subgroups, ideals, cosets and spans.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_elements(int carrier, std::vector<Elem> elems);
  static ElementSet from_mask(std::vector<char> mask);
  static ElementSet whole(int carrier);
  static ElementSet trivial(int carrier);  // {0}

  int carrier() const { return carrier_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(Elem e) const { return mask_[static_cast<std::size_t>(e)] != 0; }
  const std::vector<Elem>& elements() const { return elems_; }
  const std::vector<char>& mask() const { return mask_; }

  bool is_whole() const { return size() == carrier_; }

  /// Set by span/closure producers once closure under op and inv is known.
  bool subgroup_flag = false;

  ElementSet intersect(const ElementSet& other) const;
  bool subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.carrier_ == b.carrier_ && a.elems_ == b.elems_;
  }

 private:
  int carrier_ = 0;
  std::vector<char> mask_;
  std::vector<Elem> elems_;
};

}  // namespace skb
