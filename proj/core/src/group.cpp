#include "comaxg/group.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

#include "comaxg/error.hpp"

namespace comaxg {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Element GroupTable::power(Element a, std::uint64_t k) const noexcept {
  Element result = identity();
  Element base = a;
  while (k != 0) {
    if (k & 1u) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

void GroupTable::relabel(std::string label, std::string presentation) {
  label_ = std::move(label);
  presentation_ = std::move(presentation);
}

bool GroupTable::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

GroupTable GroupTable::from_valid_table(std::size_t order, std::vector<Element> table,
                                        std::string label, std::string presentation) {
  GroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.presentation_ = std::move(presentation);
  g.inverse_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    const auto r = g.row(a);
    for (Element b = 0; b < order; ++b) {
      if (r[b] == identity()) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  g.element_orders_.assign(order, 1);
  for (Element a = 0; a < order; ++a) {
    std::uint32_t k = 1;
    for (Element x = a; x != identity(); x = g.multiply(x, a)) ++k;
    g.element_orders_[a] = k;
  }
  return g;
}

std::uint32_t element_order(const GroupTable& group, Element x) { return group.element_order(x); }

namespace {

// Throws on the first violated axiom; the table is row-major, n x n.
void check_table(std::size_t n, const std::vector<Element>& t, Element identity) {
  auto at = [&](std::size_t i, std::size_t j) { return t[i * n + j]; };

  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)] == stamp) throw AxiomViolation(AxiomKind::NotLatinSquare, {i, j});
      seen[at(i, j)] = stamp;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[at(i, j)] == stamp) throw AxiomViolation(AxiomKind::NotLatinSquare, {i, j});
      seen[at(i, j)] = stamp;
    }
  }

  if (n <= kExhaustiveAssociativityMaxOrder) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = at(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw AxiomViolation(AxiomKind::NotAssociative, {i, j, k});
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed'c0ffeeULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (at(at(i, j), k) != at(i, at(j, k))) {
        throw AxiomViolation(AxiomKind::NotAssociative, {i, j, k});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t inv = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) == identity) {
        inv = j;
        break;
      }
    }
    if (inv == n || at(inv, i) != identity) throw AxiomViolation(AxiomKind::NoInverse, {i});
  }
}

std::size_t find_identity(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = t[e * n + j] == j && t[j * n + e] == j;
    }
    if (ok) return e;
  }
  throw AxiomViolation(AxiomKind::NoIdentity, {});
}

}  // namespace

GroupTable from_mult_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw BadParameter("multiplication table is empty");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw BadParameter("multiplication table is not square");
    for (Element x : row) {
      if (x >= n) throw BadParameter("table entry " + std::to_string(x) + " out of range");
      flat.push_back(x);
    }
  }

  const std::size_t e = find_identity(n, flat);
  check_table(n, flat, static_cast<Element>(e));

  if (e != 0) {
    // Swap the labels 0 and e so the identity sits at index 0.
    auto swap_label = [e](Element x) -> Element {
      if (x == 0) return static_cast<Element>(e);
      if (x == e) return 0;
      return x;
    };
    std::vector<Element> relabelled(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        relabelled[swap_label(static_cast<Element>(i)) * n + swap_label(static_cast<Element>(j))] =
            swap_label(flat[i * n + j]);
      }
    }
    flat = std::move(relabelled);
  }
  return GroupTable::from_valid_table(n, std::move(flat), "custom");
}

void validate_axioms(const GroupTable& group) {
  const std::size_t n = group.order();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (Element a = 0; a < n; ++a) {
    const auto r = group.row(a);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (flat[j] != j || flat[j * n] != j) {
      throw AxiomViolation(AxiomKind::NoIdentity, {j});
    }
  }
  check_table(n, flat, GroupTable::identity());
}

GroupTable from_permutation_generators(std::span<const Permutation> generators,
                                       std::size_t closure_cap) {
  if (generators.empty()) throw EmptyGeneratorSet();
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw BadParameter("generators have different degrees");
  }

  const std::size_t gens = generators.size();
  std::vector<Permutation> elements;
  std::vector<std::size_t> parent;     // element = elements[parent] * generator
  std::vector<std::size_t> via;        // generator index used to reach the element
  std::vector<std::uint32_t> times_gen;  // right multiplication table, n x gens
  std::unordered_map<std::vector<std::uint32_t>, Element, ImagesHash> index;

  auto add = [&](Permutation p, std::size_t from, std::size_t gen) -> Element {
    std::vector<std::uint32_t> key(p.images().begin(), p.images().end());
    auto [it, inserted] = index.emplace(std::move(key), static_cast<Element>(elements.size()));
    if (inserted) {
      if (elements.size() >= closure_cap) throw ClosureCapExceeded(closure_cap);
      elements.push_back(std::move(p));
      parent.push_back(from);
      via.push_back(gen);
    }
    return it->second;
  };

  add(Permutation::identity(degree), 0, 0);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t g = 0; g < gens; ++g) {
      const Element y = add(elements[x].then(generators[g]), x, g);
      times_gen.push_back(y);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) {
      // x * (p * g) = (x * p) * g, and p was discovered before j.
      const Element left = table[i * n + parent[j]];
      table[i * n + j] = times_gen[left * gens + via[j]];
    }
  }

  std::ostringstream presentation;
  for (std::size_t g = 0; g < gens; ++g) {
    if (g != 0) presentation << ';';
    presentation << generators[g].to_cycle_string();
  }
  return GroupTable::from_valid_table(n, std::move(table), "perm" + std::to_string(degree),
                                      presentation.str());
}

}  // namespace comaxg
