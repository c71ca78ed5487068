#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oracle {

Adj::Adj(const Graph& g) : n(g.order()), a(static_cast<std::size_t>(g.order())) {
  for (int u = 0; u < n; ++u) {
    a[u].assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
}

bool clique(const Adj& g, std::uint32_t mask) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((mask >> u & 1) && (mask >> v & 1) && !g(u, v)) return false;
  return true;
}

bool stable(const Adj& g, std::uint32_t mask) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((mask >> u & 1) && (mask >> v & 1) && g(u, v)) return false;
  return true;
}

bool connected(const Adj& g, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < g.n; ++u)
      if (seen >> u & 1)
        for (int v = 0; v < g.n; ++v)
          if ((mask >> v & 1) && !(seen >> v & 1) && g(u, v)) {
            seen |= 1u << v;
            grew = true;
          }
  }
  return seen == mask;
}

static int components(const Adj& g, std::uint32_t mask) {
  int count = 0;
  std::uint32_t left = mask;
  while (left) {
    std::uint32_t seen = left & (~left + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u = 0; u < g.n; ++u)
        if (seen >> u & 1)
          for (int v = 0; v < g.n; ++v)
            if ((left >> v & 1) && !(seen >> v & 1) && g(u, v)) {
              seen |= 1u << v;
              grew = true;
            }
    }
    left &= ~seen;
    ++count;
  }
  return count;
}

bool dominating(const Adj& g, std::uint32_t mask) {
  for (int v = 0; v < g.n; ++v) {
    if (mask >> v & 1) continue;
    bool hit = false;
    for (int u = 0; u < g.n && !hit; ++u) hit = (mask >> u & 1) && g(u, v);
    if (!hit) return false;
  }
  return true;
}

namespace {

template <typename F>
void each_ordered_choice(int n, int k, F&& f) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      f(pick);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      pick[depth] = v;
      self(self, depth + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

bool preserves(const Adj& host, const Adj& pat, const std::vector<int>& pick) {
  for (int i = 0; i < pat.n; ++i)
    for (int j = i + 1; j < pat.n; ++j)
      if (pat(i, j) != host(pick[i], pick[j])) return false;
  return true;
}

}  // namespace

long count_embeddings(const Graph& host, const Graph& pattern) {
  const Adj h(host), p(pattern);
  if (p.n > h.n) return 0;
  long count = 0;
  each_ordered_choice(h.n, p.n, [&](const std::vector<int>& pick) {
    if (preserves(h, p, pick)) ++count;
  });
  return count;
}

bool contains_induced(const Graph& host, const Graph& pattern) { return count_embeddings(host, pattern) > 0; }

bool is_split(const Graph& g) {
  const Adj a(g);
  const std::uint32_t all = (1u << a.n) - 1;
  for (std::uint32_t k = 0; k <= all; ++k)
    if (clique(a, k) && stable(a, all & ~k)) return true;
  return false;
}

bool is_complete_split(const Graph& g) {
  const Adj a(g);
  const std::uint32_t all = (1u << a.n) - 1;
  for (std::uint32_t k = 0; k <= all; ++k) {
    if (!clique(a, k) || !stable(a, all & ~k)) continue;
    bool complete = true;
    for (int u = 0; u < a.n && complete; ++u)
      for (int v = 0; v < a.n && complete; ++v)
        if ((k >> u & 1) && !(k >> v & 1)) complete = a(u, v);
    if (complete) return true;
  }
  return false;
}

int clique_number(const Graph& g) {
  const Adj a(g);
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << a.n); ++m)
    if (clique(a, m)) best = std::max(best, std::popcount(m));
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (int w = 0; w < n; ++w)
      if (g.adjacent(v, w)) closed[v] |= 1u << w;
  }
  constexpr std::uint64_t kPrimes[2] = {1000000007ULL, 998244353ULL};
  std::vector<std::uint64_t> ind[2];
  for (int p = 0; p < 2; ++p) {
    ind[p].assign(size, 0);
    ind[p][0] = 1;
    for (std::size_t s = 1; s < size; ++s) {
      const int v = std::countr_zero(static_cast<std::uint32_t>(s));
      ind[p][s] = (ind[p][s & ~(std::size_t{1} << v)] + ind[p][s & ~static_cast<std::size_t>(closed[v])]) % kPrimes[p];
    }
  }
  std::vector<std::uint64_t> power[2] = {std::vector<std::uint64_t>(size, 1), std::vector<std::uint64_t>(size, 1)};
  for (int k = 1; k <= n; ++k) {
    bool positive = false;
    for (int p = 0; p < 2; ++p) {
      const std::uint64_t mod = kPrimes[p];
      std::uint64_t total = 0;
      for (std::size_t s = 0; s < size; ++s) {
        power[p][s] = power[p][s] * ind[p][s] % mod;
        const bool negative = (n - std::popcount(static_cast<std::uint32_t>(s))) % 2 == 1;
        total = (total + (negative ? mod - power[p][s] : power[p][s])) % mod;
      }
      positive = positive || total != 0;
    }
    if (positive) return k;
  }
  return n;
}

std::optional<VertexSet> min_dominating_split(const Graph& g, bool complete) {
  const Adj a(g);
  std::vector<VertexSet> sets;
  for (std::uint32_t m = 1; m < (1u << a.n); ++m) {
    VertexSet s;
    for (int v = 0; v < a.n; ++v)
      if (m >> v & 1) s.push_back(v);
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), [](const VertexSet& x, const VertexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (const VertexSet& s : sets) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << v;
    if (!dominating(a, m) || !connected(a, m)) continue;
    const Graph sub = strucgraph::induced_subgraph(g, s).graph;
    if (complete ? is_complete_split(sub) : is_split(sub)) return s;
  }
  return std::nullopt;
}

int min_clique_cutset_size(const Graph& g) {
  const Adj a(g);
  const std::uint32_t all = (1u << a.n) - 1;
  const int base = components(a, all);
  int best = -1;
  for (std::uint32_t k = 0; k < all; ++k) {
    if (!clique(a, k)) continue;
    if (components(a, all & ~k) > base) {
      const int size = std::popcount(k);
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

bool has_clique_cutset(const Graph& g) { return min_clique_cutset_size(g) >= 0; }

bool is_bisimplicial(const Graph& g, int v) {
  const Adj a(g);
  std::vector<int> nb;
  for (int w = 0; w < a.n; ++w)
    if (a(v, w)) nb.push_back(w);
  const int d = static_cast<int>(nb.size());
  for (std::uint32_t m = 0; m < (1u << d); ++m) {
    std::uint32_t one = 0, two = 0;
    for (int i = 0; i < d; ++i) ((m >> i & 1) ? one : two) |= 1u << nb[i];
    if (clique(a, one) && clique(a, two)) return true;
  }
  return false;
}

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t count_graphs(int n) {
  if (n <= 1) return 1;
  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  partitions(n, n, cur, types);
  std::uint64_t total = 0;  // sum over permutations of 2^(edge orbits)
  for (const auto& t : types) {
    // Permutations with this cycle type: n! / prod(l^m_l * m_l!).
    std::uint64_t denom = 1;
    for (int l = 1; l <= n; ++l) {
      const int m = static_cast<int>(std::count(t.begin(), t.end(), l));
      for (int i = 0; i < m; ++i) denom *= static_cast<std::uint64_t>(l);
      denom *= factorial(m);
    }
    int orbits = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      orbits += t[i] / 2;
      for (std::size_t j = i + 1; j < t.size(); ++j) orbits += std::gcd(t[i], t[j]);
    }
    total += factorial(n) / denom * (std::uint64_t{1} << orbits);
  }
  return total / factorial(n);
}

std::uint64_t count_connected_graphs(int n) {
  // a(x) = exp(sum_k c_k ...): with b_k = sum_{d | k} d c_d,
  // n a_n = sum_{k=1}^{n} b_k a_{n-k}.
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1), b(a.size()), c(a.size());
  for (int i = 0; i <= n; ++i) a[i] = static_cast<std::int64_t>(count_graphs(i));
  for (int k = 1; k <= n; ++k) {
    std::int64_t s = k * a[k];
    for (int j = 1; j < k; ++j) s -= b[j] * a[k - j];
    b[k] = s;
    std::int64_t rest = b[k];
    for (int d = 1; d < k; ++d)
      if (k % d == 0) rest -= d * c[d];
    c[k] = rest / k;
  }
  return static_cast<std::uint64_t>(c[n]);
}

bool isomorphic(const Graph& x, const Graph& y) {
  if (x.order() != y.order() || x.size() != y.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(x.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < x.order() && ok; ++i)
      for (int j = i + 1; j < x.order() && ok; ++j) ok = x.adjacent(i, j) == y.adjacent(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
