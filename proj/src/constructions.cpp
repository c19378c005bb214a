#include "skb/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "skb/detail/builtins.hpp"

namespace skb {

ExactFactorization make_exact_factorization(const Group& g, const ElementSet& h,
                                            const ElementSet& k) {
  if (!is_subgroup(g, h) || !is_subgroup(g, k))
    fail(Errc::not_exact_factorization, "H and K must be subgroups");
  if (static_cast<long>(h.size()) * k.size() != g.order())
    fail(Errc::not_exact_factorization,
         "|H||K| = " + std::to_string(static_cast<long>(h.size()) * k.size()) +
             " differs from |G| = " + std::to_string(g.order()));
  if (h.intersect(k).size() != 1)
    fail(Errc::not_exact_factorization, "H and K intersect non-trivially");

  ExactFactorization f;
  f.g = g;
  f.h = h;
  f.k = k;
  f.h.subgroup_flag = f.k.subgroup_flag = true;
  f.h_of.assign(static_cast<std::size_t>(g.order()), -1);
  f.k_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (Elem x : h.elements())
    for (Elem y : k.elements()) {
      Elem prod = g.op(x, y);
      if (f.h_of[static_cast<std::size_t>(prod)] >= 0)
        fail(Errc::not_exact_factorization,
             "element " + std::to_string(prod) + " factors twice");
      f.h_of[static_cast<std::size_t>(prod)] = x;
      f.k_of[static_cast<std::size_t>(prod)] = y;
    }
  return f;
}

SkewBrace exact_factorization_brace(const Group& g, const ElementSet& h,
                                    const ElementSet& k, std::string name) {
  ExactFactorization f = make_exact_factorization(g, h, k);
  const int n = g.order();
  std::vector<std::vector<Elem>> mul(static_cast<std::size_t>(n),
                                     std::vector<Elem>(static_cast<std::size_t>(n)));
  for (Elem x = 0; x < n; ++x) {
    Elem hx = f.h_of[static_cast<std::size_t>(x)];
    Elem kx = f.k_of[static_cast<std::size_t>(x)];
    for (Elem y = 0; y < n; ++y)
      mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.op(g.op(hx, y), kx);
  }
  Group mul_group = validate_group(mul, name.empty() ? g.name() + " fact*" : name + "*");
  if (!mul_group.relabeling().empty())
    fail(Errc::internal_inconsistency,
         "factorization multiplication moved the identity");
  return make_brace(g, std::move(mul_group),
                    name.empty() ? "ExactFact(" + g.name() + ")" : std::move(name),
                    "exact-factorization", false);
}

namespace {

struct A5Factorization {
  Group a5;
  ElementSet stabilizer;  // A4, the point stabilizer of 4
  ElementSet cycle;       // <(0 1 2 3 4)>
};

const A5Factorization& a5_factorization_data() {
  static const A5Factorization data = [] {
    A5Factorization d;
    d.a5 = builtin_group("a5");
    auto perms = detail::a5_permutations();
    std::vector<Elem> fix;
    Elem cycle_idx = -1;
    const std::array<int, 5> cycle{1, 2, 3, 4, 0};
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
      if (perms[static_cast<std::size_t>(i)][4] == 4) fix.push_back(i);
      if (perms[static_cast<std::size_t>(i)] == cycle) cycle_idx = i;
    }
    d.stabilizer = ElementSet::from_elements(60, fix);
    d.stabilizer.subgroup_flag = true;
    d.cycle = subgroup_span(d.a5, {cycle_idx});
    return d;
  }();
  return data;
}

struct Sl25Lift {
  Group sl25;
  GroupMorphism pi;  // sl25 -> a5
  ElementSet x_tilde;
  ElementSet h_tilde;
};

const Sl25Lift& sl25_lift_data() {
  static const Sl25Lift data = [] {
    Sl25Lift d;
    d.sl25 = builtin_group("sl25");
    ElementSet z = center_group(d.sl25);
    if (z.size() != 2)
      fail(Errc::internal_inconsistency, "center of SL(2,5) has unexpected size");
    auto [psl, proj] = quotient_group(d.sl25, z);
    const A5Factorization& fact = a5_factorization_data();
    std::optional<GroupMorphism> iso = find_group_isomorphism(psl, fact.a5);
    if (!iso)
      fail(Errc::internal_inconsistency, "no isomorphism SL(2,5)/Z -> A5 found");
    std::vector<Elem> pi_map(static_cast<std::size_t>(d.sl25.order()));
    for (Elem x = 0; x < d.sl25.order(); ++x)
      pi_map[static_cast<std::size_t>(x)] =
          iso->map[static_cast<std::size_t>(proj.map[static_cast<std::size_t>(x)])];
    d.pi = GroupMorphism{d.sl25, fact.a5, std::move(pi_map)};

    std::vector<Elem> xt, yt;
    for (Elem g = 0; g < d.sl25.order(); ++g) {
      Elem image = d.pi.map[static_cast<std::size_t>(g)];
      if (fact.stabilizer.contains(image)) xt.push_back(g);
      if (fact.cycle.contains(image)) yt.push_back(g);
    }
    if (static_cast<int>(xt.size()) != 24)
      fail(Errc::internal_inconsistency, "|pi^{-1}(A4)| != 24");
    if (static_cast<int>(yt.size()) != 10)
      fail(Errc::internal_inconsistency, "|pi^{-1}(C5)| != 10");
    d.x_tilde = ElementSet::from_elements(d.sl25.order(), xt);

    // The unique order-5 subgroup of the order-10 preimage: the elements of
    // order dividing 5.
    std::vector<Elem> ht;
    for (Elem y : yt)
      if (d.sl25.element_order(y) == 1 || d.sl25.element_order(y) == 5)
        ht.push_back(y);
    d.h_tilde = ElementSet::from_elements(d.sl25.order(), ht);
    if (d.h_tilde.size() != 5 || !is_subgroup(d.sl25, d.h_tilde))
      fail(Errc::internal_inconsistency,
           "Sylow-5 subgroup of the lifted cycle is not a 5-element subgroup");
    return d;
  }();
  return data;
}

}  // namespace

SkewBrace example_a5_factorization() {
  const A5Factorization& d = a5_factorization_data();
  return exact_factorization_brace(d.a5, d.stabilizer, d.cycle, "S");
}

SkewBrace example_sl25_lift() {
  const Sl25Lift& d = sl25_lift_data();
  return exact_factorization_brace(d.sl25, d.x_tilde, d.h_tilde, "S~");
}

GroupMorphism sl25_to_a5_projection() { return sl25_lift_data().pi; }

// --------------------------------------------------------------------------
// Extraspecial braces

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

struct FormContext {
  int p, d, n;  // n = p^(d+1)
  const BilinearFormSpec& spec;

  // Index layout: vector coordinates (big-endian) then the c-coordinate.
  std::vector<int> coords(Elem e) const {
    std::vector<int> v(static_cast<std::size_t>(d + 1));
    for (int i = d; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = e % p;
      e /= p;
    }
    return v;
  }

  Elem index(const std::vector<int>& v) const {
    Elem e = 0;
    for (int i = 0; i <= d; ++i) e = e * p + v[static_cast<std::size_t>(i)];
    return e;
  }

  int phi(const std::vector<int>& x, const std::vector<int>& y) const {
    long acc = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        acc += static_cast<long>(x[static_cast<std::size_t>(i)]) *
               spec.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               y[static_cast<std::size_t>(j)];
    return static_cast<int>(acc % p);
  }
};

}  // namespace

ExtraspecialBrace extraspecial_brace(const BilinearFormSpec& spec) {
  if (!is_prime(spec.p)) fail(Errc::malformed_table, "p must be prime");
  if (spec.d < 1) fail(Errc::malformed_table, "dimension must be positive");
  if (static_cast<int>(spec.form.size()) != spec.d)
    fail(Errc::malformed_table, "form matrix must be d x d");
  bool nonzero = false;
  for (const auto& row : spec.form) {
    if (static_cast<int>(row.size()) != spec.d)
      fail(Errc::malformed_table, "form matrix must be d x d");
    for (int v : row) {
      if (v < 0 || v >= spec.p)
        fail(Errc::malformed_table, "form entries must lie in [0, p)");
      if (v != 0) nonzero = true;
    }
  }
  if (!nonzero) fail(Errc::zero_form, "the bilinear form must be non-zero");

  int n = 1;
  for (int i = 0; i <= spec.d; ++i) n *= spec.p;
  if (n > kDenseOrderCap)
    fail(Errc::order_cap_exceeded, "extraspecial brace exceeds the dense cap");
  FormContext ctx{spec.p, spec.d, n, spec};

  std::vector<std::vector<Elem>> add(static_cast<std::size_t>(n),
                                     std::vector<Elem>(static_cast<std::size_t>(n)));
  std::vector<std::vector<Elem>> mul(static_cast<std::size_t>(n),
                                     std::vector<Elem>(static_cast<std::size_t>(n)));
  for (Elem a = 0; a < n; ++a) {
    std::vector<int> x = ctx.coords(a);
    for (Elem b = 0; b < n; ++b) {
      std::vector<int> y = ctx.coords(b);
      std::vector<int> sum(static_cast<std::size_t>(spec.d + 1));
      for (int i = 0; i <= spec.d; ++i)
        sum[static_cast<std::size_t>(i)] =
            (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % spec.p;
      add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ctx.index(sum);
      sum[static_cast<std::size_t>(spec.d)] =
          (sum[static_cast<std::size_t>(spec.d)] + ctx.phi(x, y)) % spec.p;
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ctx.index(sum);
    }
  }

  std::string name = "E(" + std::to_string(spec.p) + "," + std::to_string(spec.d) + ")";
  SkewBrace e = validate_brace(add, mul, name);

  ExtraspecialBrace out{std::move(e), spec, 1};
  if (!center_brace(out.brace).contains(out.c))
    fail(Errc::internal_inconsistency, "c is not central in the brace");
  std::vector<Elem> c_span;
  for (int k = 0; k < spec.p; ++k) c_span.push_back(k);
  IdealHandle c_ideal = make_ideal(out.brace, ElementSet::from_elements(n, c_span));
  auto [quot, proj] = quotient_brace(out.brace, c_ideal);
  (void)proj;
  if (!classify(quot).abelian)
    fail(Errc::internal_inconsistency, "E / <c> is not an abelian brace");
  return out;
}

OrthogonalDecomposition orthogonal_decomposition(
    const ExtraspecialBrace& e, const std::vector<std::vector<int>>& u_basis,
    const std::vector<std::vector<int>>& w_basis) {
  const BilinearFormSpec& spec = e.spec;
  FormContext ctx{spec.p, spec.d, e.brace.order(), spec};
  auto check_vec = [&](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != spec.d)
      fail(Errc::malformed_table, "basis vector has wrong dimension");
    for (int x : v)
      if (x < 0 || x >= spec.p)
        fail(Errc::malformed_table, "basis entries must lie in [0, p)");
  };
  for (const auto& v : u_basis) check_vec(v);
  for (const auto& v : w_basis) check_vec(v);

  // Orthogonality on basis pairs extends bilinearly to the spans.
  for (const auto& u : u_basis)
    for (const auto& w : w_basis)
      if (ctx.phi(u, w) != 0 || ctx.phi(w, u) != 0)
        fail(Errc::not_orthogonal, "phi(U, W) = 0 = phi(W, U) fails");

  // Enumerate the spanned subspaces over F_p.
  auto span_subspace = [&](const std::vector<std::vector<int>>& basis) {
    std::vector<std::vector<int>> vectors{std::vector<int>(static_cast<std::size_t>(spec.d), 0)};
    std::map<std::vector<int>, bool> seen{{vectors[0], true}};
    for (std::size_t i = 0; i < vectors.size(); ++i)
      for (const auto& bvec : basis) {
        std::vector<int> next(static_cast<std::size_t>(spec.d));
        for (int j = 0; j < spec.d; ++j)
          next[static_cast<std::size_t>(j)] =
              (vectors[i][static_cast<std::size_t>(j)] + bvec[static_cast<std::size_t>(j)]) % spec.p;
        if (!seen.count(next)) {
          seen[next] = true;
          vectors.push_back(next);
        }
      }
    return vectors;
  };
  std::vector<std::vector<int>> u_span = span_subspace(u_basis);
  std::vector<std::vector<int>> w_span = span_subspace(w_basis);

  long dim_v = 1;
  for (int i = 0; i < spec.d; ++i) dim_v *= spec.p;
  std::map<std::vector<int>, bool> u_lookup;
  for (const auto& v : u_span) u_lookup[v] = true;
  int overlap = 0;
  for (const auto& v : w_span)
    if (u_lookup.count(v)) ++overlap;
  if (overlap != 1 ||
      static_cast<long>(u_span.size()) * static_cast<long>(w_span.size()) !=
          dim_v)
    fail(Errc::not_complementary, "U and W do not decompose V");

  auto preimage = [&](const std::vector<std::vector<int>>& vecs) {
    std::vector<Elem> elems;
    for (const auto& v : vecs)
      for (int k = 0; k < spec.p; ++k) {
        std::vector<int> full = v;
        full.push_back(k);
        elems.push_back(ctx.index(full));
      }
    return ElementSet::from_elements(e.brace.order(), elems);
  };
  ElementSet eu_set = preimage(u_span);
  ElementSet ew_set = preimage(w_span);
  if (!is_ideal(e.brace, eu_set) || !is_ideal(e.brace, ew_set))
    fail(Errc::internal_inconsistency, "subspace preimage is not an ideal");

  OrthogonalDecomposition out;
  out.e_u = make_ideal(e.brace, eu_set);
  out.e_w = make_ideal(e.brace, ew_set);
  out.report = internal_central_product_check(e.brace, out.e_u, out.e_w);
  ElementSet c_span = ElementSet::from_elements(
      e.brace.order(), [&] {
        std::vector<Elem> ks;
        for (int k = 0; k < spec.p; ++k) ks.push_back(k);
        return ks;
      }());
  if (!(out.report.intersection == c_span))
    fail(Errc::internal_inconsistency, "E_U /\\ E_W differs from <c>");
  return out;
}

}  // namespace skb
