#include "skb/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skb {

PermGroup automorphisms(const Group& g, int order_cap) {
  if (g.order() > order_cap)
    fail(Errc::order_cap_exceeded, "automorphism search capped at order " +
                                       std::to_string(order_cap));
  PermGroup out;
  out.degree = g.order();
  for_each_group_isomorphism(g, g, order_cap, [&](const GroupMorphism& m) {
    out.elements.push_back(m.map);
    return true;
  });
  std::sort(out.elements.begin(), out.elements.end());
  out.generators = out.elements;
  out.complete = true;
  return out;
}

PermGroup holomorph(const Group& g, int order_cap, std::size_t element_cap) {
  PermGroup aut = automorphisms(g, order_cap);
  PermGroup out;
  out.degree = g.order();
  const int n = g.order();
  for (Elem t : g.generators()) {
    std::vector<Elem> translation(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) translation[static_cast<std::size_t>(x)] = g.op(t, x);
    out.generators.push_back(std::move(translation));
  }
  for (const auto& a : aut.elements) out.generators.push_back(a);

  std::set<std::vector<Elem>> seen;
  std::vector<Elem> identity(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) identity[static_cast<std::size_t>(x)] = x;
  seen.insert(identity);
  std::vector<std::vector<Elem>> queue{identity};
  out.complete = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& gen : out.generators) {
      std::vector<Elem> composed(static_cast<std::size_t>(n));
      for (Elem x = 0; x < n; ++x)
        composed[static_cast<std::size_t>(x)] =
            queue[i][static_cast<std::size_t>(gen[static_cast<std::size_t>(x)])];
      if (seen.insert(composed).second) {
        if (seen.size() > element_cap) {
          out.complete = false;
          break;
        }
        queue.push_back(std::move(composed));
      }
    }
    if (!out.complete) break;
  }
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

// --------------------------------------------------------------------------
// Enumeration via the holomorph transversal (lambda backtracking)

namespace {

struct LambdaSearch {
  const Group& g;
  const std::vector<std::vector<Elem>>& autos;
  std::map<std::vector<Elem>, int> auto_index;
  std::vector<std::vector<int>> compose;  // autos[i] after autos[j]
  std::vector<int> lam;                   // element -> auto index, -1 unset
  std::vector<Elem> trail;
  std::vector<SkewBrace>* out;

  LambdaSearch(const Group& g_, const std::vector<std::vector<Elem>>& a,
               std::vector<SkewBrace>* o)
      : g(g_), autos(a), out(o) {
    const int k = static_cast<int>(autos.size());
    const int n = g.order();
    for (int i = 0; i < k; ++i) auto_index[autos[static_cast<std::size_t>(i)]] = i;
    compose.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<Elem> c(static_cast<std::size_t>(n));
        for (Elem x = 0; x < n; ++x)
          c[static_cast<std::size_t>(x)] = autos[static_cast<std::size_t>(i)][static_cast<std::size_t>(
              autos[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
        compose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = auto_index.at(c);
      }
    lam.assign(static_cast<std::size_t>(n), -1);
  }

  bool assign(Elem e, int phi) {
    if (lam[static_cast<std::size_t>(e)] >= 0) return lam[static_cast<std::size_t>(e)] == phi;
    lam[static_cast<std::size_t>(e)] = phi;
    trail.push_back(e);
    return true;
  }

  // Cocycle closure: whenever lambda is known at a and b, it is forced at
  // a . b = a + lambda_a(b).
  bool propagate(std::size_t trail_start) {
    for (std::size_t i = trail_start; i < trail.size(); ++i) {
      Elem a = trail[i];
      for (std::size_t j = 0; j < trail.size(); ++j) {
        Elem b = trail[j];
        Elem ab = g.op(a, autos[static_cast<std::size_t>(lam[static_cast<std::size_t>(a)])]
                              [static_cast<std::size_t>(b)]);
        if (!assign(ab, compose[static_cast<std::size_t>(lam[static_cast<std::size_t>(a)])]
                               [static_cast<std::size_t>(lam[static_cast<std::size_t>(b)])]))
          return false;
        Elem ba = g.op(b, autos[static_cast<std::size_t>(lam[static_cast<std::size_t>(b)])]
                              [static_cast<std::size_t>(a)]);
        if (!assign(ba, compose[static_cast<std::size_t>(lam[static_cast<std::size_t>(b)])]
                               [static_cast<std::size_t>(lam[static_cast<std::size_t>(a)])]))
          return false;
      }
    }
    return true;
  }

  void rewind(std::size_t mark) {
    while (trail.size() > mark) {
      lam[static_cast<std::size_t>(trail.back())] = -1;
      trail.pop_back();
    }
  }

  void run() {
    const int n = g.order();
    Elem next = -1;
    for (Elem e = 0; e < n; ++e)
      if (lam[static_cast<std::size_t>(e)] < 0) {
        next = e;
        break;
      }
    if (next < 0) {
      emit();
      return;
    }
    for (int phi = 0; phi < static_cast<int>(autos.size()); ++phi) {
      std::size_t mark = trail.size();
      if (assign(next, phi) && propagate(mark)) run();
      rewind(mark);
    }
  }

  void emit() {
    const int n = g.order();
    std::vector<std::vector<Elem>> mul(static_cast<std::size_t>(n),
                                       std::vector<Elem>(static_cast<std::size_t>(n)));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            g.op(a, autos[static_cast<std::size_t>(lam[static_cast<std::size_t>(a)])]
                        [static_cast<std::size_t>(b)]);
    out->push_back(validate_brace(g.table(), mul, ""));
  }
};

// One representative per isomorphism class, deduplicated with
// find_brace_isomorphism inside invariant buckets.
std::vector<SkewBrace> dedup_brace_classes(const std::vector<SkewBrace>& raw) {
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  std::vector<SkewBrace> reps;
  for (const SkewBrace& b : raw) {
    std::vector<int> key;
    for (Elem e = 0; e < b.order(); ++e) {
      key.push_back(b.add().element_order(e));
      key.push_back(b.mul().element_order(e));
    }
    std::sort(key.begin(), key.end());
    key.push_back(square(b).size());
    key.push_back(square_op(b).size());
    key.push_back(socle(b).size());
    key.push_back(center_brace(b).size());
    auto& bucket = buckets[key];
    bool fresh = true;
    for (std::size_t idx : bucket)
      if (find_brace_isomorphism(b, reps[idx])) {
        fresh = false;
        break;
      }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(b);
    }
  }
  return reps;
}

}  // namespace

std::vector<Elem> canonical_mul_table(const SkewBrace& b, int aut_order_cap) {
  PermGroup aut = automorphisms(b.add(), aut_order_cap);
  const int n = b.order();
  std::vector<Elem> best;
  for (const auto& sigma : aut.elements) {
    std::vector<Elem> inverse(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])] = x;
    std::vector<Elem> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        flat[static_cast<std::size_t>(x) * n + y] = sigma[static_cast<std::size_t>(
            b.mul_op(inverse[static_cast<std::size_t>(x)], inverse[static_cast<std::size_t>(y)]))];
    if (best.empty() || flat < best) best = std::move(flat);
  }
  return best;
}

std::vector<SkewBrace> enumerate_braces_on(const Group& g, int order_cap) {
  if (g.order() > order_cap)
    fail(Errc::order_cap_exceeded, "brace enumeration capped at order " +
                                       std::to_string(order_cap));
  PermGroup aut = automorphisms(g, std::max(order_cap, 64));
  std::vector<SkewBrace> raw;
  LambdaSearch search(g, aut.elements, &raw);
  // lambda_0 = id is forced: lambda_0 is idempotent in Aut(G).
  std::vector<Elem> identity(static_cast<std::size_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x) identity[static_cast<std::size_t>(x)] = x;
  search.assign(0, search.auto_index.at(identity));
  search.run();
  std::vector<SkewBrace> classes = dedup_brace_classes(raw);
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const SkewBrace& a, const SkewBrace& b) {
                     return canonical_mul_table(a) < canonical_mul_table(b);
                   });
  for (std::size_t i = 0; i < classes.size(); ++i)
    classes[i] = classes[i].with_name(g.name() + " brace " + std::to_string(i));
  return classes;
}

// --------------------------------------------------------------------------
// Independent oracle: row-by-row Latin backtracking + associativity filter

namespace {

struct TableSearch {
  const Group& g;  // the fixed addition
  int n;
  std::vector<std::vector<Elem>> mul;
  std::vector<std::vector<char>> col_used;
  std::vector<SkewBrace>* out;

  TableSearch(const Group& g_, std::vector<SkewBrace>* o)
      : g(g_), n(g_.order()), out(o) {
    mul.assign(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n), -1));
    col_used.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (Elem x = 0; x < n; ++x) {
      mul[0][static_cast<std::size_t>(x)] = x;  // identity row
      mul[static_cast<std::size_t>(x)][0] = x;  // identity column
      col_used[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 1;
      if (x > 0) col_used[0][static_cast<std::size_t>(x)] = 1;
    }
    col_used[0][0] = 1;
  }

  void run(int r, int c) {
    if (r == n) {
      finish();
      return;
    }
    int nr = c + 1 == n ? r + 1 : r;
    int nc = c + 1 == n ? 1 : c + 1;
    std::vector<char> row_used(static_cast<std::size_t>(n), 0);
    for (int cc = 0; cc < c; ++cc)
      row_used[static_cast<std::size_t>(mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)])] = 1;
    for (Elem v = 0; v < n; ++v) {
      if (row_used[static_cast<std::size_t>(v)] || col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)])
        continue;
      mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
      run(nr, nc);
      col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 0;
      mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
    }
  }

  void finish() {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(mul[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])] !=
              mul[static_cast<std::size_t>(mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)])
            return;
    // The left brace identity against the fixed addition.
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          Elem lhs = mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(g.op(b, c))];
          Elem rhs = g.op(g.op(mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                               g.inv(a)),
                          mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
          if (lhs != rhs) return;
        }
    out->push_back(validate_brace(g.table(), mul, ""));
  }
};

}  // namespace

std::vector<SkewBrace> direct_search_braces(const Group& g, int order_cap) {
  if (order_cap > 6)
    fail(Errc::order_cap_exceeded, "direct table search is limited to order 6");
  if (g.order() > order_cap)
    fail(Errc::order_cap_exceeded, "direct table search capped at order " +
                                       std::to_string(order_cap));
  std::vector<SkewBrace> raw;
  TableSearch search(g, &raw);
  search.run(1, 1);
  std::vector<SkewBrace> classes = dedup_brace_classes(raw);
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const SkewBrace& a, const SkewBrace& b) {
                     return canonical_mul_table(a) < canonical_mul_table(b);
                   });
  for (std::size_t i = 0; i < classes.size(); ++i)
    classes[i] = classes[i].with_name(g.name() + " brace " + std::to_string(i));
  return classes;
}

}  // namespace skb
