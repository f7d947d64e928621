#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "comaxg/bitset.hpp"
#include "comaxg/group.hpp"
#include "comaxg/lattice.hpp"

namespace comaxg {

enum class GraphVariant { Full, Deleted };

std::string_view to_string(GraphVariant variant);

/// Non-negative length that may be infinite (girth of an acyclic graph).
class ExtendedLength {
 public:
  static constexpr ExtendedLength infinite() noexcept { return ExtendedLength(true, 0); }
  static constexpr ExtendedLength finite(std::size_t value) noexcept {
    return ExtendedLength(false, value);
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Meaningful only when finite.
  constexpr std::size_t value() const noexcept { return value_; }

  std::string to_string() const;

  friend constexpr bool operator==(ExtendedLength, ExtendedLength) = default;
  friend constexpr std::strong_ordering operator<=>(ExtendedLength a, ExtendedLength b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr ExtendedLength(bool infinite, std::size_t value) noexcept
      : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::size_t value_;
};

/// Gamma(G) or Gamma*(G). Vertices are subgroup ids into the lattice the
/// graph was built from; adjacency rows are indexed by vertex position.
struct ComaxGraph {
  std::string group_label;
  GraphVariant variant = GraphVariant::Full;
  std::vector<SubgroupId> vertices;
  std::vector<std::size_t> vertex_orders;
  std::vector<Bitset> adjacency;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept;
  std::size_t degree(std::size_t position) const { return adjacency[position].count(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }

  /// Position of a subgroup id, or vertex_count() when absent.
  std::size_t position_of(SubgroupId id) const noexcept;

  /// Edges as pairs of vertex positions, u < v, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Builds a graph on positions 0..n-1 (vertex ids equal positions).
  static ComaxGraph from_edges(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                               std::string label = {});
};

struct GraphMetrics {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t isolated_count = 0;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;      // aligned with components()
  std::vector<std::size_t> component_diameters;  // aligned with components()
  /// Diameter of the largest component (first one on ties); 0 for the
  /// empty graph.
  std::size_t diameter_largest_component = 0;
  ExtendedLength girth = ExtendedLength::infinite();
  std::size_t min_degree = 0;
  bool is_bipartite = true;
  bool is_complete = false;
  bool is_star = false;
  bool is_tree = false;
  std::vector<SubgroupId> universal_vertices;
};

/// Vertices are the proper nontrivial subgroups; H ~ K iff |H||K| = |G||H meet K|.
ComaxGraph build_gamma(const GroupTable& group, const SubgroupLattice& lattice);

/// Drops the isolated vertices of a full graph.
ComaxGraph build_gamma_star(const ComaxGraph& gamma);

std::vector<SubgroupId> isolated_vertices(const ComaxGraph& graph);

/// Connected components as subgroup-id lists, ordered by smallest member.
std::vector<std::vector<SubgroupId>> components(const ComaxGraph& graph);

GraphMetrics metrics(const ComaxGraph& graph);

/// Canonical form: equal for two graphs iff they are isomorphic. Computed by
/// colour refinement plus individualisation search, keeping the
/// lexicographically least adjacency bit string. Throws
/// CertificateCapExceeded when vertex_count() > cap.
std::vector<std::uint8_t> canonical_certificate(const ComaxGraph& graph, std::size_t cap = 64);

}  // namespace comaxg
