#pragma once

// Brute-force reference implementations. They only use GroupTable::multiply
// and order() so that they share no code path with the library algorithms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "comaxg/comax_graph.hpp"
#include "comaxg/group.hpp"

namespace oracle {

using comaxg::Element;
using comaxg::GroupTable;
using ElementSet = std::set<Element>;

inline ElementSet closure(const GroupTable& g, ElementSet s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> snapshot(s.begin(), s.end());
    for (Element a : snapshot) {
      for (Element b : snapshot) {
        if (s.insert(g.multiply(a, b)).second) grew = true;
      }
    }
  }
  return s;
}

inline std::size_t order_of(const GroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.multiply(y, x)) ++k;
  return k;
}

/// Every subgroup, found by an in/out decision over each element in index
/// order; including an element adds its closure, which must avoid every
/// element already excluded. Each leaf is a distinct subgroup.
inline std::set<ElementSet> all_subgroups(const GroupTable& g) {
  std::set<ElementSet> out;
  const std::size_t n = g.order();
  std::vector<bool> excluded(n, false);
  std::function<void(Element, const ElementSet&)> decide = [&](Element i, const ElementSet& current) {
    if (i == n) {
      out.insert(current);
      return;
    }
    if (current.count(i)) {
      decide(i + 1, current);
      return;
    }
    excluded[i] = true;
    decide(i + 1, current);
    excluded[i] = false;
    ElementSet with = current;
    with.insert(i);
    with = closure(g, with);
    if (std::none_of(with.begin(), with.end(), [&](Element x) { return excluded[x]; })) {
      decide(i + 1, with);
    }
  };
  decide(1, ElementSet{0});
  return out;
}

inline ElementSet set_product(const GroupTable& g, const ElementSet& h, const ElementSet& k) {
  ElementSet hk;
  for (Element a : h) {
    for (Element b : k) hk.insert(g.multiply(a, b));
  }
  return hk;
}

inline bool co_maximal(const GroupTable& g, const ElementSet& h, const ElementSet& k) {
  return set_product(g, h, k).size() == g.order();
}

inline bool is_normal(const GroupTable& g, const ElementSet& h) {
  for (Element x = 0; x < g.order(); ++x) {
    Element xinv = 0;
    while (g.multiply(x, xinv) != 0) ++xinv;
    for (Element a : h) {
      if (!h.count(g.multiply(g.multiply(x, a), xinv))) return false;
    }
  }
  return true;
}

inline ElementSet centre(const GroupTable& g) {
  ElementSet z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) {
      central = g.multiply(a, b) == g.multiply(b, a);
    }
    if (central) z.insert(a);
  }
  return z;
}

inline std::vector<ElementSet> maximal_subgroups(const std::set<ElementSet>& subgroups,
                                                 std::size_t n) {
  std::vector<ElementSet> out;
  for (const auto& h : subgroups) {
    if (h.size() == n) continue;
    bool maximal = true;
    for (const auto& k : subgroups) {
      if (k.size() > h.size() && k.size() < n &&
          std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

inline ElementSet frattini(const GroupTable& g, const std::set<ElementSet>& subgroups) {
  ElementSet phi;
  for (Element x = 0; x < g.order(); ++x) phi.insert(x);
  for (const auto& m : maximal_subgroups(subgroups, g.order())) {
    ElementSet keep;
    std::set_intersection(phi.begin(), phi.end(), m.begin(), m.end(),
                          std::inserter(keep, keep.end()));
    phi = std::move(keep);
  }
  return phi;
}

/// Nilpotent iff for every prime the Sylow subgroup is unique.
inline bool is_nilpotent(const GroupTable& g, const std::set<ElementSet>& subgroups) {
  std::size_t n = g.order();
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t pa = 1;
    while (n % p == 0) {
      n /= p;
      pa *= p;
    }
    const auto sylows = std::count_if(subgroups.begin(), subgroups.end(),
                                      [&](const ElementSet& h) { return h.size() == pa; });
    if (sylows != 1) return false;
  }
  return true;
}

inline bool is_solvable(const GroupTable& g) {
  ElementSet current;
  for (Element x = 0; x < g.order(); ++x) current.insert(x);
  while (current.size() > 1) {
    ElementSet commutators;
    for (Element a : current) {
      for (Element b : current) {
        const Element ab = g.multiply(a, b);
        Element inv = 0;
        while (g.multiply(g.multiply(b, a), inv) != 0) ++inv;
        commutators.insert(g.multiply(ab, inv));
      }
    }
    ElementSet next = closure(g, commutators);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

// Graph oracles on adjacency matrices.

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const comaxg::ComaxGraph& graph) {
  const std::size_t n = graph.vertex_count();
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m[u][v] = graph.adjacent(u, v);
  }
  return m;
}

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> distances(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[u][v]) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Shortest cycle: over every edge, the shortest detour once it is removed.
inline std::size_t girth(Matrix m) {
  std::size_t best = kInf;
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!m[u][v]) continue;
      m[u][v] = m[v][u] = false;
      const auto d = distances(m);
      if (d[u][v] < kInf) best = std::min(best, d[u][v] + 1);
      m[u][v] = m[v][u] = true;
    }
  }
  return best;
}

/// No vertex reaches itself by a walk of odd length.
inline bool is_bipartite(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix cover(2 * n, std::vector<bool>(2 * n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!m[u][v]) continue;
      cover[u][n + v] = cover[n + v][u] = true;
      cover[n + u][v] = cover[v][n + u] = true;
    }
  }
  const auto d = distances(cover);
  for (std::size_t u = 0; u < n; ++u) {
    if (d[u][n + u] < kInf) return false;
  }
  return true;
}

/// Lexicographically least upper triangle over every vertex ordering.
inline std::vector<bool> brute_canonical_form(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) bits.push_back(m[perm[i]][perm[j]]);
    }
    if (best.empty() || bits < best) best = std::move(bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
