#include "ncg/group.hpp"

#include <algorithm>
#include <map>

namespace ncg {

int AddGroup::times(int k, int x) const {
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = plus(acc, x);
  return acc;
}

int AddGroup::order_of(int x) const {
  int acc = x;
  int o = 1;
  while (acc != 0) {
    acc = plus(acc, x);
    ++o;
  }
  return o;
}

std::vector<int> AddGroup::element_orders() const {
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = order_of(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

AddGroup AddGroup::of_shape(const AbelianShape& shape) {
  AddGroup g;
  g.n = shape.order();
  const int k = shape.generator_count();
  std::vector<std::vector<int>> coords(g.n);
  for (int r = 0; r < g.n; ++r) coords[r] = shape.coords(r);
  g.add.assign(static_cast<size_t>(g.n) * g.n, 0);
  g.neg.assign(g.n, 0);
  std::vector<int> tmp(k);
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      for (int i = 0; i < k; ++i)
        tmp[i] = (coords[a][i] + coords[b][i]) % shape.moduli[i];
      g.add[static_cast<size_t>(a) * g.n + b] = shape.rank(tmp);
    }
    for (int i = 0; i < k; ++i)
      tmp[i] = (shape.moduli[i] - coords[a][i]) % shape.moduli[i];
    g.neg[a] = shape.rank(tmp);
  }
  return g;
}

AddGroup AddGroup::subgroup_of_ring(const FiniteRing& R,
                                    const std::vector<int>& members) {
  AddGroup g;
  g.n = static_cast<int>(members.size());
  std::map<int, int> index_of;
  for (int i = 0; i < g.n; ++i) index_of[members[i]] = i;
  if (!index_of.count(0) || index_of[0] != 0)
    throw MalformedTable("subgroup member list must be sorted and contain 0");
  g.add.assign(static_cast<size_t>(g.n) * g.n, 0);
  g.neg.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      auto it = index_of.find(R.add(members[i], members[j]));
      if (it == index_of.end())
        throw MalformedTable("member list is not additively closed");
      g.add[static_cast<size_t>(i) * g.n + j] = it->second;
    }
    g.neg[i] = index_of.at(R.neg(members[i]));
  }
  return g;
}

AddGroup AddGroup::of_quotient(const FiniteRing& R, const CentralQuotient& q) {
  AddGroup g;
  g.n = static_cast<int>(q.transversal.size());
  g.add.assign(static_cast<size_t>(g.n) * g.n, 0);
  g.neg.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j)
      g.add[static_cast<size_t>(i) * g.n + j] =
          q.coset_of[R.add(q.transversal[i], q.transversal[j])];
    g.neg[i] = q.coset_of[R.neg(q.transversal[i])];
  }
  return g;
}

GeneratingTuple generating_tuple(const AddGroup& g) {
  GeneratingTuple t;
  std::vector<char> in_span(g.n, 0);
  in_span[0] = 1;
  int span_size = 1;
  std::vector<int> span_elems = {0};

  std::vector<int> orders(g.n);
  for (int x = 0; x < g.n; ++x) orders[x] = g.order_of(x);

  while (span_size < g.n) {
    int best = -1;
    for (int x = 0; x < g.n; ++x)
      if (!in_span[x] && (best == -1 || orders[x] > orders[best])) best = x;
    t.generators.push_back(best);
    // Extend the span: add every multiple of best to every current element.
    std::vector<int> new_elems;
    int mult = best;
    while (mult != 0) {
      for (int s : span_elems) {
        const int y = g.plus(s, mult);
        if (!in_span[y]) {
          in_span[y] = 1;
          new_elems.push_back(y);
        }
      }
      mult = g.plus(mult, best);
    }
    span_elems.insert(span_elems.end(), new_elems.begin(), new_elems.end());
    span_size = static_cast<int>(span_elems.size());
    t.prefix_span_sizes.push_back(span_size);
  }

  // Coefficient representation of every element: walk the odometer over
  // c_i in [0, order(g_i)) and record the first expression that reaches
  // each element.  The generators generate, so every element is hit.
  const int m = static_cast<int>(t.generators.size());
  t.coefficients.assign(g.n, {});
  std::vector<int> gen_orders(m);
  for (int i = 0; i < m; ++i) gen_orders[i] = orders[t.generators[i]];
  std::vector<int> c(m, 0);
  int covered = 0;
  while (true) {
    int x = 0;
    for (int i = 0; i < m; ++i)
      for (int rep = 0; rep < c[i]; ++rep) x = g.plus(x, t.generators[i]);
    if (t.coefficients[x].empty()) {
      t.coefficients[x] = c;
      ++covered;
    }
    int i = 0;
    while (i < m) {
      if (++c[i] < gen_orders[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
  if (covered < g.n)
    throw Error("generating tuple failed to cover the group");
  return t;
}

bool is_additive_isomorphism(const AddGroup& a, const AddGroup& b,
                             const std::vector<int>& map) {
  if (a.n != b.n || static_cast<int>(map.size()) != a.n) return false;
  std::vector<char> hit(b.n, 0);
  for (int x = 0; x < a.n; ++x) {
    if (map[x] < 0 || map[x] >= b.n || hit[map[x]]) return false;
    hit[map[x]] = 1;
  }
  if (map[0] != 0) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (map[a.plus(x, y)] != b.plus(map[x], map[y])) return false;
  return true;
}

namespace {

struct IsoSearch {
  const AddGroup& a;
  const AddGroup& b;
  const GeneratingTuple& gens;
  std::vector<int> orders_b;
  std::vector<int> images;  // chosen generator images
  const std::function<bool(const std::vector<int>&)>& visit;
  bool stopped = false;

  int span_size(const std::vector<int>& hs) const {
    std::vector<char> in(b.n, 0);
    in[0] = 1;
    std::vector<int> elems = {0};
    for (int h : hs) {
      std::vector<int> fresh;
      int mult = h;
      while (mult != 0) {
        for (int s : elems) {
          int y = b.plus(s, mult);
          if (!in[y]) {
            in[y] = 1;
            fresh.push_back(y);
          }
        }
        mult = b.plus(mult, h);
      }
      elems.insert(elems.end(), fresh.begin(), fresh.end());
    }
    return static_cast<int>(elems.size());
  }

  void recurse(size_t depth) {
    if (stopped) return;
    const auto& g = gens.generators;
    if (depth == g.size()) {
      // Build the candidate map from coefficient expressions and verify.
      std::vector<int> map(a.n);
      const int m = static_cast<int>(g.size());
      for (int x = 0; x < a.n; ++x) {
        int y = 0;
        for (int i = 0; i < m; ++i)
          for (int rep = 0; rep < gens.coefficients[x][i]; ++rep)
            y = b.plus(y, images[i]);
        map[x] = y;
      }
      if (is_additive_isomorphism(a, b, map)) {
        if (!visit(map)) stopped = true;
      }
      return;
    }
    const int want_order = a.order_of(g[depth]);
    for (int h = 0; h < b.n && !stopped; ++h) {
      if (orders_b[h] != want_order) continue;
      images.push_back(h);
      if (span_size(images) == gens.prefix_span_sizes[depth]) recurse(depth + 1);
      images.pop_back();
    }
  }
};

}  // namespace

void for_each_additive_isomorphism(
    const AddGroup& a, const AddGroup& b,
    const std::function<bool(const std::vector<int>&)>& visit, int size_cap) {
  if (a.n != b.n) return;
  if (a.n > size_cap)
    throw SizeCapExceeded("group order " + std::to_string(a.n) +
                          " exceeds isomorphism search cap " +
                          std::to_string(size_cap));
  if (a.element_orders() != b.element_orders()) return;
  if (a.n == 1) {
    visit(std::vector<int>{0});
    return;
  }
  GeneratingTuple gens = generating_tuple(a);
  IsoSearch search{a, b, gens, {}, {}, visit};
  search.orders_b.resize(b.n);
  for (int x = 0; x < b.n; ++x) search.orders_b[x] = b.order_of(x);
  search.recurse(0);
}

std::vector<std::vector<int>> additive_isomorphisms(const AddGroup& a,
                                                    const AddGroup& b,
                                                    int size_cap) {
  std::vector<std::vector<int>> out;
  for_each_additive_isomorphism(
      a, b,
      [&](const std::vector<int>& map) {
        out.push_back(map);
        return true;
      },
      size_cap);
  return out;
}

}  // namespace ncg
