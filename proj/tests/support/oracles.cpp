#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracles {

using skb::Elem;
using skb::Group;
using skb::SkewBrace;

std::vector<Elem> naive_span(const Group& g, std::vector<Elem> gens) {
  std::set<Elem> s(gens.begin(), gens.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> snapshot(s.begin(), s.end());
    for (Elem a : snapshot) {
      if (s.insert(g.inv(a)).second) grew = true;
      for (Elem b : snapshot)
        if (s.insert(g.op(a, b)).second) grew = true;
    }
  }
  return {s.begin(), s.end()};
}

std::vector<Elem> naive_normal_closure(const Group& g,
                                       const std::vector<Elem>& xs) {
  std::set<Elem> s(xs.begin(), xs.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> base = naive_span(g, {s.begin(), s.end()});
    if (base.size() > s.size()) {
      s = std::set<Elem>(base.begin(), base.end());
      grew = true;
    }
    std::vector<Elem> snapshot(s.begin(), s.end());
    for (Elem c = 0; c < g.order(); ++c)
      for (Elem e : snapshot)
        if (s.insert(g.op(g.op(c, e), g.inv(c))).second) grew = true;
  }
  return {s.begin(), s.end()};
}

std::vector<Elem> naive_derived(const Group& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      comms.push_back(g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b)));
  return naive_span(g, comms);
}

std::vector<Elem> naive_center(const Group& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem a = 0; a < g.order() && central; ++a)
      central = g.op(z, a) == g.op(a, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Elem> naive_star_span(const SkewBrace& b,
                                  const std::vector<Elem>& xs,
                                  const std::vector<Elem>& ys) {
  std::vector<Elem> stars;
  for (Elem x : xs)
    for (Elem y : ys) stars.push_back(skb::star(b, x, y));
  return naive_span(b.add(), stars);
}

int brute_automorphism_count(const Group& g) {
  const int n = g.order();
  std::vector<Elem> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (Elem a = 0; a < n && hom; ++a)
      for (Elem bb = 0; bb < n && hom; ++bb)
        hom = perm[static_cast<std::size_t>(g.op(a, bb))] ==
              g.op(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(bb)]);
    if (hom) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool naive_two_sided(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = b.mul_op(b.add_op(x, y), z);
        Elem rhs = b.add_op(b.add_op(b.mul_op(x, z), b.add_inv(z)),
                            b.mul_op(y, z));
        if (lhs != rhs) return false;
      }
  return true;
}

Group group_from_permutations(std::vector<std::vector<int>> perms,
                              std::string name) {
  std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, Elem> index;
  for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n),
                                       std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(perms[static_cast<std::size_t>(a)].size());
      for (std::size_t x = 0; x < c.size(); ++x)
        c[x] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            perms[static_cast<std::size_t>(b)][x])];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(c);
    }
  return skb::validate_group(table, std::move(name));
}

Group group_from_perm_generators(const std::vector<std::vector<int>>& gens,
                                 std::string name) {
  std::set<std::vector<int>> seen;
  std::vector<int> identity(gens.at(0).size());
  std::iota(identity.begin(), identity.end(), 0);
  seen.insert(identity);
  std::vector<std::vector<int>> queue{identity};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& gen : gens) {
      std::vector<int> c(gen.size());
      for (std::size_t x = 0; x < c.size(); ++x)
        c[x] = queue[i][static_cast<std::size_t>(gen[x])];
      if (seen.insert(c).second) queue.push_back(c);
    }
  return group_from_permutations({seen.begin(), seen.end()}, std::move(name));
}

}  // namespace oracles
