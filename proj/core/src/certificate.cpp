#include <algorithm>
#include <numeric>

#include "comaxg/comax_graph.hpp"
#include "comaxg/error.hpp"

namespace comaxg {

namespace {

// Ordered partition of the vertex set. Cell order is part of the state:
// refinement splits a cell in place, so earlier singleton cells keep their
// positions in every leaf below a node.
using Cells = std::vector<std::vector<std::size_t>>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ComaxGraph& graph) : graph_(graph), n_(graph.vertex_count()) {}

  std::vector<std::uint8_t> run() {
    Cells root;
    if (n_ > 0) {
      root.emplace_back(n_);
      std::iota(root.front().begin(), root.front().end(), std::size_t{0});
    }
    refine(root);
    search(root, {});
    return encode(best_string_);
  }

 private:
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  // Splits cells by neighbour counts into every cell until stable.
  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t v : cells[c]) cell_of[v] = c;
      }
      const std::size_t k = cells.size();
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint16_t>, std::size_t>> keyed;
        keyed.reserve(cell.size());
        for (std::size_t v : cell) {
          std::vector<std::uint16_t> counts(k, 0);
          graph_.adjacency[v].for_each([&](std::size_t w) { ++counts[cell_of[w]]; });
          keyed.emplace_back(std::move(counts), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == k;
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::vector<std::uint8_t> leaf_string(const std::vector<std::size_t>& order) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        bits.push_back(graph_.adjacency[order[i]].test(order[j]) ? 1 : 0);
      }
    }
    return bits;
  }

  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& bits) const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n_ >> 8));
    out.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    std::uint8_t byte = 0;
    std::size_t filled = 0;
    for (std::uint8_t b : bits) {
      byte = static_cast<std::uint8_t>((byte << 1) | b);
      if (++filled == 8) {
        out.push_back(byte);
        byte = 0;
        filled = 0;
      }
    }
    if (filled != 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
    return out;
  }

  static std::size_t common_prefix(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Records the automorphism mapping `from` leaf order onto `to` leaf order.
  void record_automorphism(const std::vector<std::size_t>& from,
                           const std::vector<std::size_t>& to) {
    std::vector<std::size_t> perm(n_);
    for (std::size_t i = 0; i < n_; ++i) perm[from[i]] = to[i];
    automorphisms_.push_back(std::move(perm));
  }

  // Orbits of the group generated by the stored automorphisms that fix
  // every vertex of `prefix`; returns a representative per vertex.
  std::vector<std::size_t> orbits_fixing(const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& perm : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](std::size_t v) { return perm[v] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const std::size_t a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the depth to unwind to, or kNoJump to continue normally.
  std::size_t search(const Cells& cells, std::vector<std::size_t> prefix) {
    const std::size_t depth = prefix.size();
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& cell) { return cell.size() > 1; });
    if (target == cells.end()) return visit_leaf(cells, prefix);

    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<std::size_t> explored;
    for (std::size_t v : cells[target_index]) {
      const auto orbit = orbits_fixing(prefix);
      const bool redundant = std::any_of(explored.begin(), explored.end(),
                                         [&](std::size_t u) { return orbit[u] == orbit[v]; });
      if (redundant) continue;
      explored.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target_index) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      const std::size_t jump = search(child, prefix);
      prefix.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  std::size_t visit_leaf(const Cells& cells, const std::vector<std::size_t>& prefix) {
    std::vector<std::size_t> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = cells[i].front();
    auto str = leaf_string(order);

    if (!have_leaf_) {
      have_leaf_ = true;
      first_order_ = best_order_ = order;
      first_prefix_ = best_prefix_ = prefix;
      best_string_ = first_string_ = std::move(str);
      return kNoJump;
    }
    if (str == first_string_) {
      record_automorphism(first_order_, order);
      return common_prefix(first_prefix_, prefix);
    }
    if (str == best_string_) {
      record_automorphism(best_order_, order);
      return common_prefix(best_prefix_, prefix);
    }
    if (str < best_string_) {
      best_string_ = std::move(str);
      best_order_ = order;
      best_prefix_ = prefix;
    }
    return kNoJump;
  }

  const ComaxGraph& graph_;
  std::size_t n_;
  bool have_leaf_ = false;
  std::vector<std::size_t> first_order_, best_order_;
  std::vector<std::size_t> first_prefix_, best_prefix_;
  std::vector<std::uint8_t> first_string_, best_string_;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

}  // namespace

std::vector<std::uint8_t> canonical_certificate(const ComaxGraph& graph, std::size_t cap) {
  if (graph.vertex_count() > cap) throw CertificateCapExceeded(cap, graph.vertex_count());
  return CanonicalSearch(graph).run();
}

}  // namespace comaxg
