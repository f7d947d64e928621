#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comaxg/limits.hpp"
#include "comaxg/permutation.hpp"

namespace comaxg {

/// Dense element index into a GroupTable.
using Element = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Elements are 0..order()-1 and the identity is always element 0.
/// Instances are immutable once built, so they can be shared across
/// threads freely.
class GroupTable {
 public:
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element multiply(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  /// Least k >= 1 with a^k = e.
  std::uint32_t element_order(Element a) const noexcept { return element_orders_[a]; }
  std::span<const std::uint32_t> element_orders() const noexcept { return element_orders_; }

  Element power(Element a, std::uint64_t k) const noexcept;

  /// Short provenance label, e.g. "D8", "Z7:Z3(r=2)", "Z2 x Z4".
  const std::string& label() const noexcept { return label_; }
  /// Generator words of the defining presentation, when known.
  const std::string& presentation() const noexcept { return presentation_; }

  void relabel(std::string label, std::string presentation = {});

  bool is_abelian() const noexcept;

  /// Trusted constructor: `table` must already be a valid group table in
  /// row-major order with identity at index 0. Use from_mult_table for
  /// untrusted input.
  static GroupTable from_valid_table(std::size_t order, std::vector<Element> table,
                                     std::string label, std::string presentation = {});

 private:
  GroupTable() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_orders_;
  std::string label_;
  std::string presentation_;
};

/// Validates an arbitrary n x n table and returns it as a group labelled
/// "custom". The identity is moved to index 0 if it sits elsewhere.
/// Throws AxiomViolation naming the first failing witness.
GroupTable from_mult_table(const std::vector<std::vector<Element>>& table);

/// Breadth-first closure of the generators under composition. Elements are
/// indexed in discovery order, identity first. Throws EmptyGeneratorSet,
/// BadParameter (mixed degrees) or ClosureCapExceeded.
GroupTable from_permutation_generators(std::span<const Permutation> generators,
                                       std::size_t closure_cap = Limits{}.closure_cap);

/// Number of random triples checked for associativity above the
/// exhaustive-check threshold.
inline constexpr std::size_t kAssociativitySamples = 100'000;
inline constexpr std::size_t kExhaustiveAssociativityMaxOrder = 128;

/// Re-checks identity, Latin square, inverse and associativity axioms.
/// Associativity is exhaustive up to order 128 and sampled (fixed seed)
/// above. Throws AxiomViolation.
void validate_axioms(const GroupTable& group);

std::uint32_t element_order(const GroupTable& group, Element x);

}  // namespace comaxg
