#include "ncg/ring.hpp"

#include <algorithm>
#include <queue>

namespace ncg {

// --- AbelianShape ---

int AbelianShape::order() const {
  long long n = 1;
  for (int d : moduli) n *= d;
  return static_cast<int>(n);
}

void AbelianShape::check(int order_cap) const {
  if (moduli.empty()) throw MalformedTable("shape needs at least one modulus");
  long long n = 1;
  for (int d : moduli) {
    if (d < 2) throw MalformedTable("shape modulus must be >= 2");
    n *= d;
    if (n > order_cap)
      throw OrderCapExceeded("shape order " + std::to_string(n) +
                             " exceeds cap " + std::to_string(order_cap));
  }
}

int AbelianShape::rank(std::span<const int> c) const {
  int r = 0;
  for (size_t i = 0; i < moduli.size(); ++i) r = r * moduli[i] + c[i];
  return r;
}

std::vector<int> AbelianShape::coords(int rank) const {
  std::vector<int> c(moduli.size());
  for (size_t i = moduli.size(); i-- > 0;) {
    c[i] = rank % moduli[i];
    rank /= moduli[i];
  }
  return c;
}

int AbelianShape::generator_rank(int i) const {
  std::vector<int> c(moduli.size(), 0);
  c[i] = 1;
  return rank(c);
}

// --- ElementSet ---

ElementSet ElementSet::of(std::vector<int> ranks) {
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  ElementSet s;
  s.ranks = std::move(ranks);
  return s;
}

bool ElementSet::contains(int r) const {
  return std::binary_search(ranks.begin(), ranks.end(), r);
}

// --- FiniteRing construction ---

namespace {

// Fills addition and negation tables for the shape (componentwise modular).
void build_additive_tables(const AbelianShape& shape, std::vector<int>& add,
                           std::vector<int>& neg) {
  const int n = shape.order();
  const int k = shape.generator_count();
  std::vector<std::vector<int>> coords(n);
  for (int r = 0; r < n; ++r) coords[r] = shape.coords(r);
  add.assign(static_cast<size_t>(n) * n, 0);
  neg.assign(n, 0);
  std::vector<int> tmp(k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i)
        tmp[i] = (coords[a][i] + coords[b][i]) % shape.moduli[i];
      add[static_cast<size_t>(a) * n + b] = shape.rank(tmp);
    }
    for (int i = 0; i < k; ++i)
      tmp[i] = (shape.moduli[i] - coords[a][i]) % shape.moduli[i];
    neg[a] = shape.rank(tmp);
  }
}

}  // namespace

FiniteRing FiniteRing::from_structure_constants(AbelianShape shape,
                                                std::vector<int> sc,
                                                std::string name,
                                                int order_cap) {
  shape.check(order_cap);
  const int n = shape.order();
  const int k = shape.generator_count();
  if (static_cast<int>(sc.size()) != k * k)
    throw MalformedTable("expected " + std::to_string(k * k) +
                         " structure constants, got " + std::to_string(sc.size()));
  for (int v : sc)
    if (v < 0 || v >= n) throw MalformedTable("structure constant rank out of range");

  FiniteRing R;
  R.shape_ = std::move(shape);
  R.n_ = n;
  R.name_ = std::move(name);
  R.sc_ = std::move(sc);
  build_additive_tables(R.shape_, R.add_, R.neg_);

  // Biadditive extension: with a = sum a_i e_i and b = sum b_j e_j the
  // product is sum_{i,j} (a_i b_j) * sc[i][j], and integer scalar multiples
  // act coordinatewise in the shape.
  std::vector<std::vector<int>> coords(n);
  for (int r = 0; r < n; ++r) coords[r] = R.shape_.coords(r);
  std::vector<std::vector<int>> sc_coords(static_cast<size_t>(k) * k);
  for (int i = 0; i < k * k; ++i) sc_coords[i] = R.shape_.coords(R.sc_[i]);

  R.mul_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> acc(k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int i = 0; i < k; ++i) {
        const int ai = coords[a][i];
        if (ai == 0) continue;
        for (int j = 0; j < k; ++j) {
          const int c = ai * coords[b][j];
          if (c == 0) continue;
          const auto& s = sc_coords[static_cast<size_t>(i) * k + j];
          for (int t = 0; t < k; ++t) acc[t] += c * s[t];
        }
      }
      for (int t = 0; t < k; ++t) acc[t] %= R.shape_.moduli[t];
      R.mul_[static_cast<size_t>(a) * n + b] = R.shape_.rank(acc);
    }
  }

  R.finish_validation();
  return R;
}

FiniteRing FiniteRing::from_full_table(AbelianShape shape,
                                       std::vector<int> table,
                                       std::string name, int order_cap) {
  shape.check(order_cap);
  const int n = shape.order();
  if (static_cast<long long>(table.size()) != static_cast<long long>(n) * n)
    throw MalformedTable("full table must have order^2 entries");
  for (int v : table)
    if (v < 0 || v >= n) throw MalformedTable("full table rank out of range");

  FiniteRing R;
  R.shape_ = std::move(shape);
  R.n_ = n;
  R.name_ = std::move(name);
  R.mul_ = std::move(table);
  build_additive_tables(R.shape_, R.add_, R.neg_);

  // Canonical structure constants; valid once distributivity has been
  // checked, which finish_validation does before anything else uses them.
  const int k = R.shape_.generator_count();
  R.sc_.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      R.sc_[static_cast<size_t>(i) * k + j] =
          R.mul(R.shape_.generator_rank(i), R.shape_.generator_rank(j));

  R.finish_validation();
  return R;
}

void FiniteRing::finish_validation() {
  const int n = n_;
  // Distributivity, both sides.  For structure-constant input this catches
  // mixed-moduli tables whose biadditive extension is not well defined.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw DistributivityViolation(
              a, b, c, true,
              "a(b+c) != ab+ac at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          throw DistributivityViolation(
              a, b, c, false,
              "(a+b)c != ac+bc at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
  // Associativity on every triple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw AssociativityViolation(
              a, b, c,
              "(ab)c != a(bc) at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
    }

  // Unity detection.
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      unity_ = e;
      break;
    }
  }

  // Center.
  central_.assign(n, 1);
  for (int r = 0; r < n; ++r) {
    for (int x = 0; x < n; ++x) {
      if (mul(r, x) != mul(x, r)) {
        central_[r] = 0;
        break;
      }
    }
    if (central_[r]) center_.push_back(r);
  }
  commutative_ = static_cast<int>(center_.size()) == n;
}

// --- structure operations ---

int commutator(const FiniteRing& R, int a, int b) { return R.commutator(a, b); }

ElementSet centralizer(const FiniteRing& R, int r) {
  std::vector<int> members;
  for (int x = 0; x < R.order(); ++x)
    if (R.commutes(x, r)) members.push_back(x);
  ElementSet s = ElementSet::of(std::move(members));
  s.additively_closed = true;
  s.multiplicatively_closed = true;
  return s;
}

ElementSet center(const FiniteRing& R) {
  ElementSet s = ElementSet::of(R.center_ranks());
  s.additively_closed = true;
  s.multiplicatively_closed = true;
  return s;
}

ElementSet generated_subring(const FiniteRing& R, const ElementSet& s) {
  const int n = R.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(0);
  for (int x : s.ranks) {
    if (x < 0 || x >= n) throw MalformedTable("element rank outside the ring");
    push(x);
  }
  // Fixed point under +, -, *.
  for (size_t head = 0; head < work.size(); ++head) {
    const int x = work[head];
    push(R.neg(x));
    for (size_t other = 0; other <= head; ++other) {
      const int y = work[other];
      push(R.add(x, y));
      push(R.mul(x, y));
      push(R.mul(y, x));
    }
  }
  ElementSet out = ElementSet::of(std::move(work));
  out.additively_closed = true;
  out.multiplicatively_closed = true;
  return out;
}

bool is_generating_set(const FiniteRing& R, const ElementSet& s) {
  return generated_subring(R, s).size() == R.order();
}

bool is_unital_generating_set(const FiniteRing& R, const ElementSet& s) {
  if (!R.unity()) throw MalformedTable("ring has no unity");
  ElementSet with_one = s;
  with_one.ranks.push_back(*R.unity());
  with_one = ElementSet::of(std::move(with_one.ranks));
  return generated_subring(R, with_one).size() == R.order();
}

ElementSet commutator_subgroup(const FiniteRing& R) {
  const int n = R.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) push(R.commutator(a, b));
  // Additive closure; the commutator set is already closed under negation
  // since -[a,b] = [b,a].
  for (size_t head = 0; head < work.size(); ++head) {
    const int x = work[head];
    push(R.neg(x));
    for (size_t other = 0; other <= head; ++other) push(R.add(x, work[other]));
  }
  ElementSet out = ElementSet::of(std::move(work));
  out.additively_closed = true;
  return out;
}

CentralQuotient central_quotient(const FiniteRing& R) {
  const int n = R.order();
  CentralQuotient q;
  q.coset_of.assign(n, -1);

  // Coset of 0 (the center itself) first, then cosets by minimal
  // representative rank; scanning ranks upward gives exactly that order.
  for (int r = 0; r < n; ++r) {
    if (q.coset_of[r] != -1) continue;
    const int idx = static_cast<int>(q.transversal.size());
    q.transversal.push_back(r);
    std::vector<int> members;
    for (int z : R.center_ranks()) {
      const int m = R.add(r, z);
      q.coset_of[m] = idx;
      members.push_back(m);
    }
    std::sort(members.begin(), members.end());
    q.cosets.push_back(std::move(members));
  }
  return q;
}

}  // namespace ncg
