#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "comaxg/group.hpp"
#include "comaxg/lattice.hpp"

namespace comaxg {

struct PrimePower {
  std::size_t prime = 0;
  std::size_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::vector<PrimePower> factorize(std::size_t n);

/// Group-side predicates and invariants that the theorem hypotheses use.
///
/// For the trivial group every flag is true except is_p_group (no prime
/// divides 1) and is_minimal_non_cyclic; intersection_number is empty.
struct GroupClassification {
  std::size_t order = 0;
  std::vector<PrimePower> prime_factorization;
  std::vector<std::size_t> primes;

  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_p_group = false;
  std::size_t p = 0;  // the prime when is_p_group
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_supersolvable = false;
  bool is_minimal_non_cyclic = false;
  bool sylow_elementary_abelian = false;

  std::size_t maximal_count = 0;
  std::size_t frattini_order = 0;
  std::optional<std::size_t> intersection_number;

  /// Multiset of element orders as sorted (order, count) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> element_order_counts;
  std::size_t subgroup_count = 0;
  std::size_t involution_count = 0;

  bool is_cyclic_p_group() const noexcept { return is_cyclic && is_p_group; }
};

GroupClassification classify(const GroupTable& group, const SubgroupLattice& lattice);

}  // namespace comaxg
