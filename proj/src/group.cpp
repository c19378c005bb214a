#include "skb/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "skb/detail/backends.hpp"
#include "skb/detail/builtins.hpp"
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace skb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_table: return "MalformedTable";
    case Errc::no_identity: return "NoIdentity";
    case Errc::no_inverse: return "NoInverse";
    case Errc::not_associative: return "NotAssociative";
    case Errc::identity_mismatch: return "IdentityMismatch";
    case Errc::left_brace_identity_fails: return "LeftBraceIdentityFails";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_an_ideal: return "NotAnIdeal";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_central_ideal: return "NotCentralIdeal";
    case Errc::alpha_not_iso: return "AlphaNotIso";
    case Errc::not_exact_factorization: return "NotExactFactorization";
    case Errc::zero_form: return "ZeroForm";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::not_complementary: return "NotComplementary";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::unknown_name: return "UnknownName";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::not_two_sided: return "NotTwoSided";
    case Errc::check_failed: return "CheckFailed";
    case Errc::format_error: return "FormatError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::conclusion_violated: return "ConclusionViolated";
  }
  return "UnknownError";
}

// --------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::from_elements(int carrier, std::vector<Elem> elems) {
  ElementSet s;
  s.carrier_ = carrier;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.mask_.assign(static_cast<std::size_t>(carrier), 0);
  for (Elem e : elems) {
    if (e < 0 || e >= carrier)
      fail(Errc::malformed_table, "element " + std::to_string(e) +
                                      " outside carrier of order " +
                                      std::to_string(carrier));
    s.mask_[static_cast<std::size_t>(e)] = 1;
  }
  s.elems_ = std::move(elems);
  return s;
}

ElementSet ElementSet::from_mask(std::vector<char> mask) {
  ElementSet s;
  s.carrier_ = static_cast<int>(mask.size());
  s.mask_ = std::move(mask);
  for (int e = 0; e < s.carrier_; ++e)
    if (s.mask_[static_cast<std::size_t>(e)]) s.elems_.push_back(e);
  return s;
}

ElementSet ElementSet::whole(int carrier) {
  std::vector<char> m(static_cast<std::size_t>(carrier), 1);
  ElementSet s = from_mask(std::move(m));
  s.subgroup_flag = true;
  return s;
}

ElementSet ElementSet::trivial(int carrier) {
  ElementSet s = from_elements(carrier, {0});
  s.subgroup_flag = true;
  return s;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<Elem> common;
  for (Elem e : elems_)
    if (other.contains(e)) common.push_back(e);
  return from_elements(carrier_, std::move(common));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (Elem e : elems_)
    if (!other.contains(e)) return false;
  return true;
}

// --------------------------------------------------------------------------
// Backends



namespace {

// Monoid closure of `gens` from the identity; on a finite group this is the
// generated subgroup.
std::vector<Elem> closure_elems(int n, const detail::GroupBackend& backend,
                                const std::vector<Elem>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Elem> out;
  out.reserve(16);
  seen[0] = 1;
  out.push_back(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      Elem y = backend.op(out[i], g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> greedy_generators(int n, const detail::GroupBackend& backend) {
  std::vector<Elem> gens;
  std::vector<char> in_span(static_cast<std::size_t>(n), 0);
  in_span[0] = 1;
  int span_size = 1;
  for (Elem e = 1; e < n && span_size < n; ++e) {
    if (in_span[static_cast<std::size_t>(e)]) continue;
    gens.push_back(e);
    std::vector<Elem> span = closure_elems(n, backend, gens);
    std::fill(in_span.begin(), in_span.end(), 0);
    for (Elem x : span) in_span[static_cast<std::size_t>(x)] = 1;
    span_size = static_cast<int>(span.size());
  }
  return gens;
}

}  // namespace

Group make_group(int order, std::shared_ptr<const detail::GroupBackend> backend,
                 std::string name, std::vector<Elem> relabeling) {
  auto data = std::make_shared<detail::GroupData>();
  data->order = order;
  data->generators = greedy_generators(order, *backend);
  data->backend = std::move(backend);
  data->name = std::move(name);
  data->relabeling = std::move(relabeling);
  Group g;
  g.d_ = std::move(data);
  return g;
}

Group Group::with_name(std::string name) const {
  auto data = std::make_shared<detail::GroupData>(*d_);
  data->name = std::move(name);
  Group g;
  g.d_ = std::move(data);
  return g;
}

Elem Group::element_order(Elem a) const {
  Elem x = a;
  Elem k = 1;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

Elem Group::power(Elem a, long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = op(r, base);
    base = op(base, base);
    k >>= 1;
  }
  return r;
}

std::vector<std::vector<Elem>> Group::table() const {
  int n = order();
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    t[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(n));
    for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = op(a, b);
  }
  return t;
}

// --------------------------------------------------------------------------
// Validation

namespace {

std::string triple_str(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Light's associativity test: if T generates the magma and a(tc) = (at)c for
// every t in T, associativity holds for all triples.
void check_associative_dense(int n, const std::vector<Elem>& tab) {
  auto at = [&](Elem a, Elem b) { return tab[static_cast<std::size_t>(a) * n + b]; };
  if (n <= kBruteTripleCap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (at(a, at(b, c)) != at(at(a, b), c))
            fail(Errc::not_associative,
                 "first violating triple " + triple_str(a, b, c));
    return;
  }
  // Greedy magma generating set.
  std::vector<char> closed(static_cast<std::size_t>(n), 0);
  std::vector<Elem> elems{0};
  closed[0] = 1;
  std::vector<Elem> tgens;
  for (Elem e = 0; e < n; ++e) {
    if (closed[static_cast<std::size_t>(e)]) continue;
    tgens.push_back(e);
    elems.push_back(e);
    closed[static_cast<std::size_t>(e)] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        Elem p = at(elems[i], elems[j]);
        if (!closed[static_cast<std::size_t>(p)]) {
          closed[static_cast<std::size_t>(p)] = 1;
          elems.push_back(p);
        }
        p = at(elems[j], elems[i]);
        if (!closed[static_cast<std::size_t>(p)]) {
          closed[static_cast<std::size_t>(p)] = 1;
          elems.push_back(p);
        }
      }
    }
  }
  for (Elem t : tgens)
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c)
        if (at(a, at(t, c)) != at(at(a, t), c))
          fail(Errc::not_associative, "violating triple " + triple_str(a, t, c));
}

}  // namespace

Group validate_group(const std::vector<std::vector<Elem>>& table,
                     std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::malformed_table, "empty table");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[static_cast<std::size_t>(r)].size()) != n)
      fail(Errc::malformed_table, "row " + std::to_string(r) + " has " +
                                      std::to_string(table[static_cast<std::size_t>(r)].size()) +
                                      " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      Elem v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v < 0 || v >= n)
        fail(Errc::malformed_table, "entry [" + std::to_string(r) + "][" +
                                        std::to_string(c) + "] = " +
                                        std::to_string(v) + " out of range");
    }
  }

  Elem identity = -1;
  for (Elem e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      ok = table[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] == a &&
           table[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == a;
    if (ok) identity = e;
  }
  if (identity < 0) fail(Errc::no_identity, "no two-sided identity element");

  // Relocate the identity to index 0, preserving the relative order of the
  // other elements, and record the permutation.
  std::vector<Elem> relabel;
  auto backend = std::make_shared<detail::DenseBackend>();
  backend->n = n;
  backend->tab.resize(static_cast<std::size_t>(n) * n);
  if (identity != 0) {
    relabel.resize(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x)
      relabel[static_cast<std::size_t>(x)] = x < identity ? x + 1 : (x == identity ? 0 : x);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        backend->tab[static_cast<std::size_t>(relabel[static_cast<std::size_t>(a)]) * n +
                     relabel[static_cast<std::size_t>(b)]] =
            relabel[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
  } else {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        backend->tab[static_cast<std::size_t>(a) * n + b] = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  backend->invs.assign(static_cast<std::size_t>(n), -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (backend->tab[static_cast<std::size_t>(a) * n + b] == 0) {
        backend->invs[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (backend->invs[static_cast<std::size_t>(a)] < 0)
      fail(Errc::no_inverse, "element " + std::to_string(a) + " has no inverse");
  }

  check_associative_dense(n, backend->tab);

  // identity + associativity + right inverses force two-sided inverses.
  for (Elem a = 0; a < n; ++a)
    if (backend->op(backend->invs[static_cast<std::size_t>(a)], a) != 0)
      fail(Errc::internal_inconsistency, "one-sided inverse survived validation");

  return make_group(n, std::move(backend), std::move(name), std::move(relabel));
}

// --------------------------------------------------------------------------
// Builtin groups

namespace {

Group cyclic_group(int k) {
  if (k < 1) fail(Errc::unknown_name, "cyclic order must be positive");
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(k),
                                   std::vector<Elem>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  return validate_group(t, "C" + std::to_string(k));
}

Group elementary_abelian_group(int p, int k) {
  if (p < 2 || k < 1) fail(Errc::unknown_name, "bad elementary abelian parameters");
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n),
                                   std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, r = 0, place = 1;
      for (int i = 0; i < k; ++i) {
        r += ((x + y) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = r;
    }
  return validate_group(t, "E(" + std::to_string(p) + "^" + std::to_string(k) + ")");
}

}  // namespace

namespace detail {

// Even permutations of 5 points in lexicographic order; the identity is lex
// minimal, so labels need no relocation.
std::vector<std::array<int, 5>> a5_permutations() {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  std::vector<std::array<int, 5>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group a5_group() {
  auto perms = a5_permutations();
  const int n = static_cast<int>(perms.size());
  std::map<std::array<int, 5>, Elem> index;
  for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n),
                                   std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 5> c;
      for (int x = 0; x < 5; ++x)
        c[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(c);
    }
  return validate_group(t, "A5");
}

// Determinant-1 2x2 matrices over F5 with labels aligned to the validated
// group (identity relocated to 0 with the standard shift).
std::pair<Group, std::vector<std::array<int, 4>>> sl25_with_matrices() {
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          if (((a * d - b * c) % 5 + 5) % 5 == 1)
            mats.push_back({a, b, c, d});
  const int n = static_cast<int>(mats.size());
  std::map<std::array<int, 4>, Elem> index;
  for (int i = 0; i < n; ++i) index[mats[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n),
                                   std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& m1 = mats[static_cast<std::size_t>(i)];
      const auto& m2 = mats[static_cast<std::size_t>(j)];
      std::array<int, 4> p{(m1[0] * m2[0] + m1[1] * m2[2]) % 5,
                           (m1[0] * m2[1] + m1[1] * m2[3]) % 5,
                           (m1[2] * m2[0] + m1[3] * m2[2]) % 5,
                           (m1[2] * m2[1] + m1[3] * m2[3]) % 5};
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index.at(p);
    }
  Group g = validate_group(t, "SL(2,5)");
  // Align the matrix list with the relocated labels.
  std::vector<std::array<int, 4>> aligned(static_cast<std::size_t>(n));
  if (g.relabeling().empty()) {
    aligned = mats;
  } else {
    for (int i = 0; i < n; ++i)
      aligned[static_cast<std::size_t>(g.relabeling()[static_cast<std::size_t>(i)])] =
          mats[static_cast<std::size_t>(i)];
  }
  return {g, aligned};
}

}  // namespace detail

Group builtin_group(const std::string& name) {
  static const Group s3 = [] {
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = 6;
    std::map<std::array<int, 3>, Elem> index;
    for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<Elem>> t(6, std::vector<Elem>(6));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::array<int, 3> c;
        for (int x = 0; x < 3; ++x)
          c[static_cast<std::size_t>(x)] =
              perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                  perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(c);
      }
    return validate_group(t, "S3");
  }();
  static const Group a5 = detail::a5_group();
  static const Group a4 = [] {
    // Stabilizer of point 4 inside a5.
    auto perms = detail::a5_permutations();
    std::vector<Elem> fix;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i)
      if (perms[static_cast<std::size_t>(i)][4] == 4) fix.push_back(i);
    Group g = restrict_to_subgroup(a5, ElementSet::from_elements(60, fix), "A4");
    return g;
  }();
  static const Group sl25 = detail::sl25_with_matrices().first;

  if (name == "s3") return s3;
  if (name == "a4") return a4;
  if (name == "a5") return a5;
  if (name == "sl25") return sl25;
  if (name.rfind("cyclic(", 0) == 0 && name.back() == ')')
    return cyclic_group(std::stoi(name.substr(7, name.size() - 8)));
  if (name.size() >= 2 && name[0] == 'c' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return cyclic_group(std::stoi(name.substr(1)));
  if (name.rfind("elementary_abelian(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(19, name.size() - 20);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      fail(Errc::unknown_name, "expected elementary_abelian(p,k)");
    return elementary_abelian_group(std::stoi(inner.substr(0, comma)),
                                    std::stoi(inner.substr(comma + 1)));
  }
  fail(Errc::unknown_name, "no builtin group named '" + name + "'");
}

// --------------------------------------------------------------------------
// Derived constructions

Group densify_group(const Group& g) {
  if (g.is_dense() || g.order() > kDenseOrderCap) return g;
  const int n = g.order();
  auto backend = std::make_shared<detail::DenseBackend>();
  backend->n = n;
  backend->tab.resize(static_cast<std::size_t>(n) * n);
  backend->invs.resize(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) backend->tab[static_cast<std::size_t>(a) * n + b] = g.op(a, b);
    backend->invs[static_cast<std::size_t>(a)] = g.inv(a);
  }
  check_associative_dense(n, backend->tab);
  return make_group(n, std::move(backend), g.name());
}

Group direct_product_group(const Group& g, const Group& h) {
  auto backend = std::make_shared<detail::ProductBackend>();
  backend->g1 = g;
  backend->g2 = h;
  backend->n1 = g.order();
  backend->n2 = h.order();
  Group p = make_group(g.order() * h.order(), std::move(backend),
                       g.name() + " x " + h.name());
  return densify_group(p);
}

Group opposite_group(const Group& g) {
  auto backend = std::make_shared<detail::OppositeBackend>();
  backend->g = g;
  Group o = make_group(g.order(), std::move(backend), g.name() + "^op");
  return densify_group(o);
}

Group restrict_to_subgroup(const Group& g, const ElementSet& s,
                           std::string name) {
  if (s.carrier() != g.order())
    fail(Errc::malformed_table, "subset carrier does not match group order");
  if (!is_subgroup(g, s))
    fail(Errc::not_closed, "subset is not a subgroup");
  auto backend = std::make_shared<detail::SubgroupBackend>();
  backend->parent = g;
  backend->elems = s.elements();
  backend->index_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < s.size(); ++i)
    backend->index_of[static_cast<std::size_t>(backend->elems[static_cast<std::size_t>(i)])] = i;
  int m = s.size();
  Group sub = make_group(m, std::move(backend),
                         name.empty() ? g.name() + "|sub" : std::move(name));
  return densify_group(sub);
}

std::pair<Group, GroupMorphism> quotient_group(const Group& g,
                                               const ElementSet& normal) {
  if (!is_normal_subgroup(g, normal))
    fail(Errc::not_normal, "subset is not a normal subgroup");
  const int n = g.order();
  std::vector<Elem> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);  // minimal element of the coset, scan is ascending
    for (Elem s : normal.elements())
      coset_of[static_cast<std::size_t>(g.op(x, s))] = idx;
  }
  auto backend = std::make_shared<detail::QuotientBackend>();
  backend->parent = g;
  backend->reps = reps;
  backend->coset_of = coset_of;
  Group q = make_group(static_cast<int>(reps.size()), std::move(backend),
                       g.name() + "/N");
  q = densify_group(q);
  GroupMorphism proj{g, q, std::move(coset_of)};
  return {std::move(q), std::move(proj)};
}

// --------------------------------------------------------------------------
// Subgroup machinery

ElementSet subgroup_span(const Group& g, const std::vector<Elem>& gens) {
  struct Shim final : detail::GroupBackend {
    const Group* g;
    int order() const override { return g->order(); }
    Elem op(Elem a, Elem b) const override { return g->op(a, b); }
    Elem inv(Elem a) const override { return g->inv(a); }
  } shim;
  shim.g = &g;
  ElementSet s = ElementSet::from_elements(
      g.order(), closure_elems(g.order(), shim, gens));
  s.subgroup_flag = true;
  return s;
}

ElementSet subgroup_span(const Group& g, const ElementSet& gens) {
  if (gens.carrier() != g.order())
    fail(Errc::malformed_table, "generator carrier does not match group order");
  return subgroup_span(g, gens.elements());
}

ElementSet normal_closure(const Group& g, const ElementSet& x) {
  std::vector<Elem> gens = x.elements();
  std::erase(gens, 0);
  ElementSet s = subgroup_span(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> fresh;
    for (Elem c : g.generators()) {
      Elem ci = g.inv(c);
      for (Elem e : s.elements()) {
        Elem conj = g.op(g.op(c, e), ci);
        if (!s.contains(conj)) fresh.push_back(conj);
      }
    }
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      s = subgroup_span(g, gens);
      grew = true;
    }
  }
  return s;
}

ElementSet center_group(const Group& g) {
  std::vector<Elem> members;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem c : g.generators())
      if (g.op(z, c) != g.op(c, z)) {
        central = false;
        break;
      }
    if (central) members.push_back(z);
  }
  ElementSet s = ElementSet::from_elements(g.order(), std::move(members));
  s.subgroup_flag = true;
  return s;
}

ElementSet derived_subgroup(const Group& g) {
  // [G,G] is the normal closure of the commutators of a generating set.
  std::vector<Elem> comms;
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      comms.push_back(g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b)));
  return normal_closure(g, ElementSet::from_elements(g.order(), comms));
}

bool is_perfect_group(const Group& g) {
  return derived_subgroup(g).size() == g.order();
}

bool is_abelian_group(const Group& g) {
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

bool is_simple_group(const Group& g) {
  if (g.order() <= 1) return false;
  for (Elem x = 1; x < g.order(); ++x)
    if (normal_closure(g, ElementSet::from_elements(g.order(), {x})).size() !=
        g.order())
      return false;
  return true;
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.size() == 0 || !s.contains(0)) return false;
  // Exact: the span of the members equals the set itself.
  if (s.size() <= 512) {
    for (Elem a : s.elements()) {
      if (!s.contains(g.inv(a))) return false;
      for (Elem b : s.elements())
        if (!s.contains(g.op(a, b))) return false;
    }
    return true;
  }
  return subgroup_span(g, s.elements()) == s;
}

bool is_normal_subgroup(const Group& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem c : g.generators()) {
    Elem ci = g.inv(c);
    for (Elem e : s.elements())
      if (!s.contains(g.op(g.op(c, e), ci))) return false;
  }
  return true;
}

std::vector<ElementSet> all_subgroups(const Group& g, int order_cap) {
  if (g.order() > order_cap)
    fail(Errc::order_cap_exceeded,
         "subgroup lattice enumeration capped at order " +
             std::to_string(order_cap));
  std::vector<ElementSet> out{ElementSet::trivial(g.order())};
  std::map<std::vector<Elem>, bool> seen{{out[0].elements(), true}};
  // BFS: extend each known subgroup by one outside element.
  for (std::size_t i = 0; i < out.size(); ++i) {
    ElementSet current = out[i];
    for (Elem e = 1; e < g.order(); ++e) {
      if (current.contains(e)) continue;
      std::vector<Elem> gens = current.elements();
      gens.push_back(e);
      ElementSet bigger = subgroup_span(g, gens);
      if (!seen.count(bigger.elements())) {
        seen[bigger.elements()] = true;
        out.push_back(bigger);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<int> element_order_profile(const Group& g) {
  std::vector<int> orders(static_cast<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a) orders[static_cast<std::size_t>(a)] = g.element_order(a);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<int> conjugacy_class_sizes(const Group& g) {
  const int n = g.order();
  std::vector<int> class_id(static_cast<std::size_t>(n), -1);
  std::vector<int> class_size;
  for (Elem e = 0; e < n; ++e) {
    if (class_id[static_cast<std::size_t>(e)] >= 0) continue;
    int id = static_cast<int>(class_size.size());
    std::vector<Elem> orbit{e};
    class_id[static_cast<std::size_t>(e)] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem c : g.generators()) {
        Elem y = g.op(g.op(c, orbit[i]), g.inv(c));
        if (class_id[static_cast<std::size_t>(y)] < 0) {
          class_id[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    class_size.push_back(static_cast<int>(orbit.size()));
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Elem e = 0; e < n; ++e) out[static_cast<std::size_t>(e)] = class_size[static_cast<std::size_t>(class_id[static_cast<std::size_t>(e)])];
  return out;
}

// --------------------------------------------------------------------------
// Morphisms

bool is_group_homomorphism(const GroupMorphism& m) {
  const int n = m.domain.order();
  if (static_cast<int>(m.map.size()) != n) return false;
  for (Elem v : m.map)
    if (v < 0 || v >= m.codomain.order()) return false;
  if (m.map[0] != 0) return false;
  if (n <= kExhaustivePairCap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (m.map[static_cast<std::size_t>(m.domain.op(a, b))] !=
            m.codomain.op(m.map[static_cast<std::size_t>(a)], m.map[static_cast<std::size_t>(b)]))
          return false;
    return true;
  }
  // Generator-complete: f(g x) = f(g) f(x) for generators g and all x implies
  // the property for all pairs by induction on the word length of the left
  // argument.
  for (Elem g : m.domain.generators())
    for (Elem x = 0; x < n; ++x)
      if (m.map[static_cast<std::size_t>(m.domain.op(g, x))] !=
          m.codomain.op(m.map[static_cast<std::size_t>(g)], m.map[static_cast<std::size_t>(x)]))
        return false;
  return true;
}

bool is_group_isomorphism(const GroupMorphism& m) {
  if (m.domain.order() != m.codomain.order()) return false;
  std::vector<char> hit(static_cast<std::size_t>(m.codomain.order()), 0);
  for (Elem v : m.map) {
    if (v < 0 || v >= m.codomain.order() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return is_group_homomorphism(m);
}

// --------------------------------------------------------------------------
// Isomorphism search

namespace {

struct PartialMap {
  std::vector<Elem> img;        // -1 when unset
  std::vector<Elem> preimage;   // -1 when unused
  std::vector<Elem> trail;      // domain elements assigned, for undo

  explicit PartialMap(int n) : img(static_cast<std::size_t>(n), -1), preimage(static_cast<std::size_t>(n), -1) {}

  bool assign(Elem x, Elem y) {
    if (img[static_cast<std::size_t>(x)] >= 0) return img[static_cast<std::size_t>(x)] == y;
    if (preimage[static_cast<std::size_t>(y)] >= 0) return false;
    img[static_cast<std::size_t>(x)] = y;
    preimage[static_cast<std::size_t>(y)] = x;
    trail.push_back(x);
    return true;
  }

  std::size_t mark() const { return trail.size(); }

  void rewind(std::size_t mark) {
    while (trail.size() > mark) {
      Elem x = trail.back();
      trail.pop_back();
      preimage[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = -1;
      img[static_cast<std::size_t>(x)] = -1;
    }
  }
};

// Closes the partial map over products of assigned generators; returns false
// on a conflict. `assigned` lists the generator elements mapped so far.
bool close_partial(const Group& g, const Group& h, PartialMap& pm,
                   const std::vector<Elem>& assigned_gens) {
  std::vector<Elem> queue{0};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[0] = 1;
  if (!pm.assign(0, 0)) return false;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (Elem gen : assigned_gens) {
      Elem y = g.op(x, gen);
      Elem img = h.op(pm.img[static_cast<std::size_t>(x)], pm.img[static_cast<std::size_t>(gen)]);
      if (!pm.assign(y, img)) return false;
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

struct IsoSearcher {
  const Group& g;
  const Group& h;
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> candidates;  // per generator
  PartialMap pm;
  std::vector<Elem> assigned;

  IsoSearcher(const Group& g_, const Group& h_, std::vector<Elem> gens_)
      : g(g_), h(h_), gens(std::move(gens_)), pm(g_.order()) {}

  // sink(map) returns true to keep searching, false to stop.
  template <typename Sink>
  bool search(std::size_t depth, Sink&& sink) {
    if (depth == gens.size()) {
      for (Elem v : pm.img)
        if (v < 0) return true;  // generators do not span; keep searching
      GroupMorphism m{g, h, pm.img};
      if (is_group_isomorphism(m)) return sink(m);
      return true;
    }
    for (Elem cand : candidates[depth]) {
      std::size_t mark = pm.mark();
      if (pm.assign(gens[depth], cand)) {
        assigned.push_back(gens[depth]);
        if (close_partial(g, h, pm, assigned)) {
          if (!search(depth + 1, sink)) {
            assigned.pop_back();
            pm.rewind(mark);
            return false;
          }
        }
        assigned.pop_back();
      }
      pm.rewind(mark);
    }
    return true;
  }
};

}  // namespace

namespace {

// Shared driver: prunes by order and class-size profiles, then backtracks on
// generator images, feeding each verified isomorphism to the sink.
void iso_search(const Group& g, const Group& h, const std::vector<Elem>* gens_in,
                const std::function<bool(const GroupMorphism&)>& sink) {
  if (g.order() != h.order()) return;
  if (element_order_profile(g) != element_order_profile(h)) return;

  std::vector<Elem> gens = gens_in ? *gens_in : g.generators();
  if (gens.empty()) {
    sink(GroupMorphism{g, h, {0}});
    return;
  }

  std::vector<int> class_g = conjugacy_class_sizes(g);
  std::vector<int> class_h = conjugacy_class_sizes(h);
  IsoSearcher searcher(g, h, gens);
  searcher.candidates.resize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Elem gen = gens[i];
    int ord = g.element_order(gen);
    for (Elem c = 0; c < h.order(); ++c)
      if (h.element_order(c) == ord &&
          class_h[static_cast<std::size_t>(c)] == class_g[static_cast<std::size_t>(gen)])
        searcher.candidates[i].push_back(c);
    if (searcher.candidates[i].empty()) return;
  }
  searcher.search(0, sink);
}

}  // namespace

std::optional<GroupMorphism> find_group_isomorphism(const Group& g,
                                                    const Group& h,
                                                    const IsoOptions& opts) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > opts.order_cap && opts.domain_generators == nullptr)
    fail(Errc::order_cap_exceeded,
         "isomorphism search capped at order " + std::to_string(opts.order_cap) +
             " (supply generators to override)");
  std::optional<GroupMorphism> found;
  iso_search(g, h, opts.domain_generators, [&](const GroupMorphism& m) {
    found = m;
    return false;
  });
  return found;
}

void for_each_group_isomorphism(
    const Group& g, const Group& h, int order_cap,
    const std::function<bool(const GroupMorphism&)>& sink) {
  if (g.order() > order_cap)
    fail(Errc::order_cap_exceeded, "isomorphism enumeration capped at order " +
                                       std::to_string(order_cap));
  iso_search(g, h, nullptr, sink);
}

// --------------------------------------------------------------------------
// Sampled checks

void spot_check_group(const Group& g, const CheckOptions& opts) {
  const int n = g.order();
  Sampler rng(opts.seed);
  for (int i = 0; i < opts.samples; ++i) {
    Elem a = rng.next(n), b = rng.next(n), c = rng.next(n);
    if (g.op(a, g.op(b, c)) != g.op(g.op(a, b), c))
      fail(Errc::not_associative,
           "sampled triple " + triple_str(a, b, c) + " fails");
    if (i % 16 == 0) {
      if (g.op(0, a) != a || g.op(a, 0) != a)
        fail(Errc::no_identity, "identity fails at " + std::to_string(a));
      if (g.op(a, g.inv(a)) != 0)
        fail(Errc::no_inverse, "inverse fails at " + std::to_string(a));
    }
  }
}

}  // namespace skb
