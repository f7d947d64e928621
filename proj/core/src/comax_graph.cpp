#include "comaxg/comax_graph.hpp"

#include <algorithm>
#include <deque>

namespace comaxg {

std::string_view to_string(GraphVariant variant) {
  return variant == GraphVariant::Full ? "full" : "deleted";
}

std::string ExtendedLength::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::size_t ComaxGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

std::size_t ComaxGraph::position_of(SubgroupId id) const noexcept {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> ComaxGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = adjacency[u].find_next(u + 1); v < vertices.size();
         v = adjacency[u].find_next(v + 1)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

ComaxGraph ComaxGraph::from_edges(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                  std::string label) {
  ComaxGraph g;
  g.group_label = std::move(label);
  g.vertices.resize(n);
  g.vertex_orders.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) g.vertices[i] = i;
  g.adjacency.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adjacency[u].set(v);
    g.adjacency[v].set(u);
  }
  return g;
}

ComaxGraph build_gamma(const GroupTable& group, const SubgroupLattice& lattice) {
  ComaxGraph g;
  g.group_label = group.label();
  g.variant = GraphVariant::Full;
  const auto ids = lattice.proper_nontrivial_ids();
  g.vertices.assign(ids.begin(), ids.end());
  const std::size_t v = g.vertices.size();
  g.adjacency.assign(v, Bitset(v));
  for (SubgroupId id : g.vertices) g.vertex_orders.push_back(lattice[id].order());

  const std::size_t n = group.order();
  for (std::size_t a = 0; a < v; ++a) {
    const SubgroupMask& h = lattice[g.vertices[a]];
    for (std::size_t b = a + 1; b < v; ++b) {
      const SubgroupMask& k = lattice[g.vertices[b]];
      // HK = G  iff  |H||K| = |G||H meet K|.
      if (h.order() * k.order() == n * h.bits().intersection_count(k.bits())) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
    }
  }
  return g;
}

ComaxGraph build_gamma_star(const ComaxGraph& gamma) {
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < gamma.vertex_count(); ++u) {
    if (gamma.adjacency[u].any()) keep.push_back(u);
  }
  ComaxGraph g;
  g.group_label = gamma.group_label;
  g.variant = GraphVariant::Deleted;
  g.adjacency.assign(keep.size(), Bitset(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    g.vertices.push_back(gamma.vertices[keep[a]]);
    g.vertex_orders.push_back(gamma.vertex_orders[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (gamma.adjacency[keep[a]].test(keep[b])) g.adjacency[a].set(b);
    }
  }
  return g;
}

std::vector<SubgroupId> isolated_vertices(const ComaxGraph& graph) {
  std::vector<SubgroupId> out;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    if (graph.adjacency[u].none()) out.push_back(graph.vertices[u]);
  }
  return out;
}

namespace {

// Components as position lists, each sorted, ordered by smallest position.
std::vector<std::vector<std::size_t>> component_positions(const ComaxGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      graph.adjacency[comp[i]].for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const ComaxGraph& graph, std::size_t source) {
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(graph.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    graph.adjacency[u].for_each([&](std::size_t w) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

// Shortest cycle through BFS trees rooted at every vertex.
ExtendedLength girth_of(const ComaxGraph& graph) {
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  const std::size_t n = graph.vertex_count();
  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      graph.adjacency[u].for_each([&](std::size_t w) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == kUnreached ? ExtendedLength::infinite() : ExtendedLength::finite(best);
}

bool two_colourable(const ComaxGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      bool ok = true;
      graph.adjacency[u].for_each([&](std::size_t w) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<SubgroupId>> components(const ComaxGraph& graph) {
  std::vector<std::vector<SubgroupId>> out;
  for (const auto& comp : component_positions(graph)) {
    std::vector<SubgroupId> ids;
    for (std::size_t p : comp) ids.push_back(graph.vertices[p]);
    out.push_back(std::move(ids));
  }
  return out;
}

GraphMetrics metrics(const ComaxGraph& graph) {
  GraphMetrics m;
  const std::size_t n = graph.vertex_count();
  m.vertex_count = n;
  m.edge_count = graph.edge_count();

  std::size_t min_degree = n == 0 ? 0 : static_cast<std::size_t>(-1);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t d = graph.degree(u);
    min_degree = std::min(min_degree, d);
    if (d == 0) ++m.isolated_count;
    if (n >= 2 && d == n - 1) m.universal_vertices.push_back(graph.vertices[u]);
  }
  m.min_degree = min_degree;

  const auto comps = component_positions(graph);
  m.component_count = comps.size();
  std::size_t largest = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t diameter = 0;
    for (std::size_t u : comps[c]) {
      const auto dist = bfs_distances(graph, u);
      for (std::size_t w : comps[c]) diameter = std::max(diameter, dist[w]);
    }
    m.component_sizes.push_back(comps[c].size());
    m.component_diameters.push_back(diameter);
    if (comps[c].size() > comps[largest].size()) largest = c;
  }
  if (!comps.empty()) m.diameter_largest_component = m.component_diameters[largest];

  m.girth = girth_of(graph);
  m.is_bipartite = two_colourable(graph);

  const bool connected = m.component_count == 1;
  m.is_complete = n >= 2 && m.edge_count == n * (n - 1) / 2;
  m.is_tree = n >= 2 && connected && m.edge_count == n - 1;
  m.is_star = m.is_tree && !m.universal_vertices.empty();
  return m;
}

}  // namespace comaxg
