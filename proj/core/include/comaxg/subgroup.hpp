#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comaxg/bitset.hpp"
#include "comaxg/group.hpp"

namespace comaxg {

/// A subgroup represented by its element-membership bitset.
class SubgroupMask {
 public:
  SubgroupMask() = default;
  /// `bits` must already describe a subgroup; use is_subgroup to check.
  explicit SubgroupMask(Bitset bits) : bits_(std::move(bits)), order_(bits_.count()) {}

  const Bitset& bits() const noexcept { return bits_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return bits_.test(x); }
  bool is_subgroup_of(const SubgroupMask& other) const noexcept {
    return bits_.is_subset_of(other.bits_);
  }
  std::vector<Element> elements() const;

  friend bool operator==(const SubgroupMask& a, const SubgroupMask& b) noexcept {
    return a.bits_ == b.bits_;
  }
  /// Canonical order: by order, then lexicographically by bitset.
  friend std::strong_ordering operator<=>(const SubgroupMask& a, const SubgroupMask& b) noexcept;

 private:
  Bitset bits_;
  std::size_t order_ = 0;
};

SubgroupMask trivial_subgroup(const GroupTable& group);
SubgroupMask whole_group(const GroupTable& group);

/// Identity present and closed under products and inverses.
bool is_subgroup(const GroupTable& group, const Bitset& bits);

/// Smallest subgroup containing `generators`.
SubgroupMask generated_subgroup(const GroupTable& group, std::span<const Element> generators);
SubgroupMask cyclic_subgroup(const GroupTable& group, Element x);

SubgroupMask meet(const SubgroupMask& h, const SubgroupMask& k);
/// Smallest subgroup containing H and K.
SubgroupMask join(const GroupTable& group, const SubgroupMask& h, const SubgroupMask& k);

/// |HK| = |H||K| / |H meet K|, the size of the set product whether or not
/// it is a subgroup.
std::size_t product_order(const SubgroupMask& h, const SubgroupMask& k);

bool is_normal(const GroupTable& group, const SubgroupMask& h);
bool is_abelian(const GroupTable& group, const SubgroupMask& h);
bool is_cyclic(const GroupTable& group, const SubgroupMask& h);
/// Abelian and every non-identity element has the same prime order.
/// The trivial subgroup counts as elementary abelian.
bool is_elementary_abelian(const GroupTable& group, const SubgroupMask& h);

/// Subgroup generated by all commutators [x, y] = x^-1 y^-1 x y with x, y in H.
SubgroupMask commutator_subgroup(const GroupTable& group, const SubgroupMask& h);

/// G, G', G'', ... Each step appends the next term; the series ends after
/// reaching the trivial subgroup or after a term equal to its predecessor
/// (so a perfect group yields [G, G]).
std::vector<SubgroupMask> derived_series(const GroupTable& group);

}  // namespace comaxg
