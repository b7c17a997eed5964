#include "ncg/families.hpp"

#include <algorithm>
#include <numeric>
#include <map>

#include "ncg/group.hpp"

namespace ncg {

namespace {

long long checked_power(int base, int exp, int cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap)
      throw OrderCapExceeded("family order exceeds cap " + std::to_string(cap));
  }
  return v;
}

void require_matrix_params(int n, int m) {
  if (n < 1 || m < 2)
    throw MalformedTable("matrix families need n >= 1 and m >= 2");
}

}  // namespace

FiniteRing matrix_ring(int n, int m, int order_cap) {
  require_matrix_params(n, m);
  checked_power(m, n * n, order_cap);
  const int k = n * n;  // basis E_ij at index i*n + j
  AbelianShape shape{std::vector<int>(k, m)};
  std::vector<int> sc(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (j == p)  // E_ij E_pq = [j == p] E_iq
            sc[static_cast<size_t>(i * n + j) * k + (p * n + q)] =
                shape.generator_rank(i * n + q);
  return FiniteRing::from_structure_constants(
      std::move(shape), std::move(sc),
      "M" + std::to_string(n) + "(Z" + std::to_string(m) + ")", order_cap);
}

FiniteRing upper_triangular_ring(int n, int m, int order_cap) {
  require_matrix_params(n, m);
  const int k = n * (n + 1) / 2;
  checked_power(m, k, order_cap);
  std::vector<std::pair<int, int>> basis;  // (i, j), i <= j, lex order
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) basis.emplace_back(i, j);
  std::map<std::pair<int, int>, int> index_of;
  for (int t = 0; t < k; ++t) index_of[basis[t]] = t;

  AbelianShape shape{std::vector<int>(k, m)};
  std::vector<int> sc(static_cast<size_t>(k) * k, 0);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      auto [i, j] = basis[s];
      auto [p, q] = basis[t];
      if (j == p) sc[static_cast<size_t>(s) * k + t] = shape.generator_rank(index_of.at({i, q}));
    }
  return FiniteRing::from_structure_constants(
      std::move(shape), std::move(sc),
      "UT" + std::to_string(n) + "(Z" + std::to_string(m) + ")", order_cap);
}

FiniteRing row_ring(int m, int order_cap) {
  if (m < 2) throw MalformedTable("row_ring needs m >= 2");
  checked_power(m, 2, order_cap);
  AbelianShape shape{{m, m}};
  // (x,y)(x',y') = (xx', xy'): e0 e0 = e0, e0 e1 = e1, e1 * = 0.
  std::vector<int> sc = {shape.generator_rank(0), shape.generator_rank(1), 0, 0};
  return FiniteRing::from_structure_constants(std::move(shape), std::move(sc),
                                              "row_ring(" + std::to_string(m) + ")",
                                              order_cap);
}

FiniteRing zero_ring(AbelianShape shape, int order_cap) {
  shape.check(order_cap);
  const int k = shape.generator_count();
  std::string label = "zero[";
  for (int i = 0; i < k; ++i)
    label += (i ? "," : "") + std::to_string(shape.moduli[i]);
  label += "]";
  return FiniteRing::from_structure_constants(
      std::move(shape), std::vector<int>(static_cast<size_t>(k) * k, 0),
      std::move(label), order_cap);
}

FiniteRing modular_ring(int m, int order_cap) {
  if (m < 2) throw MalformedTable("modular ring needs m >= 2");
  AbelianShape shape{{m}};
  return FiniteRing::from_structure_constants(std::move(shape), {1},
                                              "Z" + std::to_string(m), order_cap);
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b, int order_cap) {
  if (static_cast<long long>(a.order()) * b.order() > order_cap)
    throw OrderCapExceeded("product order exceeds cap");
  const int ka = a.shape().generator_count();
  const int kb = b.shape().generator_count();
  const int k = ka + kb;
  AbelianShape shape;
  shape.moduli = a.shape().moduli;
  shape.moduli.insert(shape.moduli.end(), b.shape().moduli.begin(),
                      b.shape().moduli.end());

  auto embed_a = [&](int x) {
    std::vector<int> c = a.shape().coords(x);
    c.resize(k, 0);
    return shape.rank(c);
  };
  auto embed_b = [&](int x) {
    std::vector<int> c(ka, 0);
    std::vector<int> cb = b.shape().coords(x);
    c.insert(c.end(), cb.begin(), cb.end());
    return shape.rank(c);
  };

  std::vector<int> sc(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < ka; ++j)
      sc[static_cast<size_t>(i) * k + j] =
          embed_a(a.structure_constants()[static_cast<size_t>(i) * ka + j]);
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < kb; ++j)
      sc[static_cast<size_t>(ka + i) * k + (ka + j)] =
          embed_b(b.structure_constants()[static_cast<size_t>(i) * kb + j]);

  return FiniteRing::from_structure_constants(std::move(shape), std::move(sc),
                                              a.name() + " x " + b.name(),
                                              order_cap);
}

FiniteRing build_family(const FamilySpec& spec, int order_cap) {
  switch (spec.kind) {
    case FamilyKind::matrix:
      return matrix_ring(spec.n, spec.m, order_cap);
    case FamilyKind::upper_triangular:
      return upper_triangular_ring(spec.n, spec.m, order_cap);
    case FamilyKind::row_ring:
      return row_ring(spec.m, order_cap);
    case FamilyKind::zero_ring:
      return zero_ring(spec.shape, order_cap);
    case FamilyKind::modular:
      return modular_ring(spec.m, order_cap);
    case FamilyKind::direct_product: {
      if (spec.operands.size() < 2)
        throw MalformedTable("direct_product needs at least two operands");
      FiniteRing acc = build_family(spec.operands[0], order_cap);
      for (size_t i = 1; i < spec.operands.size(); ++i)
        acc = direct_product(acc, build_family(spec.operands[i], order_cap), order_cap);
      return acc;
    }
  }
  throw MalformedTable("unknown family kind");
}

FiniteRing opposite(const FiniteRing& R) {
  const int n = R.order();
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = R.mul(b, a);
  return FiniteRing::from_full_table(R.shape(), std::move(table),
                                     R.name() + "^op");
}

// --- census enumeration ---

namespace {

std::string shape_string(const AbelianShape& shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.moduli.size(); ++i)
    s += (i ? "," : "") + std::to_string(shape.moduli[i]);
  return s + "]";
}

// Backtracking over the k*k structure-constant slots in row-major order with
// ascending values, pruning by (a) the additive-order compatibility each
// slot needs for the biadditive extension to be well defined and (b) every
// generator triple that is decidable from the slots assigned so far.
// Surviving leaves go through the validating factory, which re-checks
// associativity and distributivity on all element triples.
struct CensusEnumerator {
  const CensusOptions& opts;
  const AbelianShape& shape;
  int n, k;
  std::vector<std::vector<int>> coords;
  std::vector<int> add;          // n*n
  std::vector<int> scalar_mult;  // max_mod * n
  int max_mod;
  std::vector<std::vector<int>> allowed;  // per slot, admissible ranks
  std::vector<int> sc;
  long long yielded = 0;
  const std::function<bool(FiniteRing&&)>& yield;
  std::vector<std::vector<int>> seen_canonical;  // dedupe keys
  bool stop = false;

  CensusEnumerator(const CensusOptions& o,
                   const std::function<bool(FiniteRing&&)>& y)
      : opts(o), shape(o.shape), yield(y) {
    shape.check(opts.enumeration_cap);
    n = shape.order();
    k = shape.generator_count();
    coords.resize(n);
    for (int r = 0; r < n; ++r) coords[r] = shape.coords(r);
    add.assign(static_cast<size_t>(n) * n, 0);
    std::vector<int> tmp(k);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int i = 0; i < k; ++i)
          tmp[i] = (coords[a][i] + coords[b][i]) % shape.moduli[i];
        add[static_cast<size_t>(a) * n + b] = shape.rank(tmp);
      }
    max_mod = *std::max_element(shape.moduli.begin(), shape.moduli.end());
    scalar_mult.assign(static_cast<size_t>(max_mod) * n, 0);
    for (int c = 0; c < max_mod; ++c)
      for (int e = 0; e < n; ++e) {
        for (int i = 0; i < k; ++i) tmp[i] = (c * coords[e][i]) % shape.moduli[i];
        scalar_mult[static_cast<size_t>(c) * n + e] = shape.rank(tmp);
      }

    // additive order of each element
    std::vector<int> elem_order(n);
    for (int e = 0; e < n; ++e) {
      int o = 1;
      for (int i = 0; i < k; ++i) {
        const int d = shape.moduli[i];
        const int oi = d / std::gcd(d, coords[e][i]);
        o = o / std::gcd(o, oi) * oi;
      }
      elem_order[e] = o;
    }
    allowed.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int g = std::gcd(shape.moduli[i], shape.moduli[j]);
        for (int v = 0; v < n; ++v)
          if (g % elem_order[v] == 0)
            allowed[static_cast<size_t>(i) * k + j].push_back(v);
      }
    sc.assign(static_cast<size_t>(k) * k, -1);
  }

  int scaled_add(int acc, int c, int e) const {
    return add[static_cast<size_t>(acc) * n +
               scalar_mult[static_cast<size_t>(c) * n + e]];
  }

  // 0 undecidable, 1 holds, 2 violated
  int check_triple(int p, int q, int r) const {
    const int spq = sc[static_cast<size_t>(p) * k + q];
    if (spq < 0) return 0;
    const int sqr = sc[static_cast<size_t>(q) * k + r];
    if (sqr < 0) return 0;
    int lhs = 0;
    for (int l = 0; l < k; ++l) {
      const int c = coords[spq][l];
      if (c == 0) continue;
      const int s = sc[static_cast<size_t>(l) * k + r];
      if (s < 0) return 0;
      lhs = scaled_add(lhs, c, s);
    }
    int rhs = 0;
    for (int m = 0; m < k; ++m) {
      const int c = coords[sqr][m];
      if (c == 0) continue;
      const int s = sc[static_cast<size_t>(p) * k + m];
      if (s < 0) return 0;
      rhs = scaled_add(rhs, c, s);
    }
    return lhs == rhs ? 1 : 2;
  }

  bool partial_ok() const {
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        for (int r = 0; r < k; ++r)
          if (check_triple(p, q, r) == 2) return false;
    return true;
  }

  void leaf() {
    FiniteRing ring = FiniteRing::from_structure_constants(
        shape, sc, "", opts.enumeration_cap);
    if (opts.require_noncommutative && ring.is_commutative()) return;
    if (opts.require_unital && !ring.unity()) return;
    if (opts.dedupe_isomorphism) {
      std::vector<int> canon = canonical_full_table(ring, opts.enumeration_cap);
      for (const auto& seen : seen_canonical)
        if (seen == canon) return;
      seen_canonical.push_back(std::move(canon));
    }
    ring.rename(shape_string(shape) + "#" + std::to_string(yielded));
    ++yielded;
    if (!yield(std::move(ring))) stop = true;
    if (opts.limit && yielded >= *opts.limit) stop = true;
  }

  void dfs(int slot) {
    if (stop) return;
    if (slot == k * k) {
      leaf();
      return;
    }
    for (int v : allowed[slot]) {
      sc[slot] = v;
      if (partial_ok()) dfs(slot + 1);
      sc[slot] = -1;
      if (stop) return;
    }
  }
};

}  // namespace

void enumerate_rings(const CensusOptions& opts,
                     const std::function<bool(FiniteRing&&)>& yield) {
  CensusEnumerator e(opts, yield);
  e.dfs(0);
}

std::vector<FiniteRing> enumerate_rings(const CensusOptions& opts) {
  std::vector<FiniteRing> out;
  enumerate_rings(opts, [&](FiniteRing&& r) {
    out.push_back(std::move(r));
    return true;
  });
  return out;
}

// --- isomorphism ---

namespace {

std::vector<int> centralizer_size_multiset(const FiniteRing& R) {
  std::vector<int> sizes(R.order(), 0);
  for (int r = 0; r < R.order(); ++r)
    for (int x = 0; x < R.order(); ++x)
      if (R.commutes(x, r)) ++sizes[r];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::optional<std::vector<int>> ring_isomorphic(const FiniteRing& r1,
                                                const FiniteRing& r2,
                                                int search_cap) {
  if (r1.order() != r2.order()) return std::nullopt;
  if (r1.order() > search_cap)
    throw OrderCapExceeded("ring order " + std::to_string(r1.order()) +
                           " exceeds isomorphism search cap " +
                           std::to_string(search_cap));
  // Cheap invariants first.
  if (r1.is_commutative() != r2.is_commutative()) return std::nullopt;
  if (r1.center_size() != r2.center_size()) return std::nullopt;
  if (r1.unity().has_value() != r2.unity().has_value()) return std::nullopt;
  if (centralizer_size_multiset(r1) != centralizer_size_multiset(r2))
    return std::nullopt;

  AddGroup g1 = AddGroup::of_shape(r1.shape());
  AddGroup g2 = AddGroup::of_shape(r2.shape());
  std::optional<std::vector<int>> found;
  for_each_additive_isomorphism(
      g1, g2,
      [&](const std::vector<int>& map) {
        for (int a = 0; a < r1.order(); ++a)
          for (int b = 0; b < r1.order(); ++b)
            if (map[r1.mul(a, b)] != r2.mul(map[a], map[b])) return true;
        found = map;
        return false;  // first witness, deterministic
      },
      search_cap);
  return found;
}

std::vector<int> canonical_full_table(const FiniteRing& R, int search_cap) {
  if (R.order() > search_cap)
    throw OrderCapExceeded("ring order exceeds canonical-form cap");
  const int n = R.order();
  AddGroup g = AddGroup::of_shape(R.shape());
  std::vector<int> best;
  std::vector<int> cur(static_cast<size_t>(n) * n);
  std::vector<int> inv(n);
  for_each_additive_isomorphism(
      g, g,
      [&](const std::vector<int>& sigma) {
        for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
        bool better = best.empty();
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const size_t idx = static_cast<size_t>(x) * n + y;
            const int v = inv[R.mul(sigma[x], sigma[y])];
            cur[idx] = v;
            if (!better) {
              if (v < best[idx]) better = true;
              else if (v > best[idx]) return true;  // lex worse, next sigma
            }
          }
        if (better) best = cur;
        return true;
      },
      search_cap);
  return best;
}

std::vector<AbelianShape> abelian_shapes_of_order(int order) {
  if (order < 2) return {};
  std::vector<AbelianShape> out;
  std::vector<int> chain;
  // Invariant-factor chains d_1 | d_2 | ... | d_k with product = order.
  auto rec = [&](auto&& self, int remaining, int prev) -> void {
    if (remaining == 1) {
      out.push_back(AbelianShape{chain});
      return;
    }
    for (int d = std::max(2, prev); d <= remaining; ++d) {
      if (remaining % d != 0) continue;
      if (prev > 1 && d % prev != 0) continue;
      chain.push_back(d);
      self(self, remaining / d, d);
      chain.pop_back();
    }
  };
  rec(rec, order, 1);
  std::sort(out.begin(), out.end(), [](const AbelianShape& a, const AbelianShape& b) {
    if (a.moduli.size() != b.moduli.size()) return a.moduli.size() < b.moduli.size();
    return a.moduli < b.moduli;
  });
  return out;
}

}  // namespace ncg
