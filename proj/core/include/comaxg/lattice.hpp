#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "comaxg/group.hpp"
#include "comaxg/limits.hpp"
#include "comaxg/subgroup.hpp"

namespace comaxg {

using SubgroupId = std::size_t;

/// Every subgroup of a group, in canonical order (order ascending, then
/// bitset lexicographic), with normality, maximality and the Frattini
/// subgroup precomputed.
class SubgroupLattice {
 public:
  std::size_t size() const noexcept { return subgroups_.size(); }
  std::size_t group_order() const noexcept { return group_order_; }

  std::span<const SubgroupMask> subgroups() const noexcept { return subgroups_; }
  const SubgroupMask& operator[](SubgroupId id) const { return subgroups_[id]; }

  bool is_normal(SubgroupId id) const { return normal_[id]; }
  bool is_maximal(SubgroupId id) const;

  std::span<const SubgroupId> maximal_ids() const noexcept { return maximal_ids_; }
  std::span<const SubgroupId> proper_nontrivial_ids() const noexcept {
    return proper_nontrivial_ids_;
  }
  SubgroupId trivial_id() const noexcept { return 0; }
  SubgroupId full_id() const noexcept { return subgroups_.size() - 1; }
  SubgroupId frattini_id() const noexcept { return frattini_id_; }

  std::optional<SubgroupId> find(const SubgroupMask& h) const;

 private:
  friend SubgroupLattice all_subgroups(const GroupTable&, const Limits&);

  std::size_t group_order_ = 0;
  std::vector<SubgroupMask> subgroups_;
  std::vector<bool> normal_;
  std::vector<SubgroupId> maximal_ids_;
  std::vector<SubgroupId> proper_nontrivial_ids_;
  SubgroupId frattini_id_ = 0;
};

/// Enumerates all subgroups as the join-closure of the cyclic subgroups.
/// Throws SubgroupCapExceeded once more than limits.subgroup_cap distinct
/// subgroups are found.
SubgroupLattice all_subgroups(const GroupTable& group, const Limits& limits = {});

/// Proper subgroups contained in no other proper subgroup. For a group of
/// prime order this is just the trivial subgroup; for the trivial group it
/// is empty.
std::span<const SubgroupId> maximal_subgroups(const SubgroupLattice& lattice);

/// Intersection of the maximal subgroups; the whole group when there are none.
const SubgroupMask& frattini(const SubgroupLattice& lattice);

/// All maximal subgroups normal.
bool is_nilpotent(const GroupTable& group, const SubgroupLattice& lattice);
/// All maximal subgroups of prime index.
bool is_supersolvable(const GroupTable& group, const SubgroupLattice& lattice);
bool is_solvable(const GroupTable& group);

/// Canonically first subgroup of order p^a with p^a || |G|. Throws
/// NoSuchPrime when p does not divide |G|.
const SubgroupMask& sylow_subgroup(const SubgroupLattice& lattice, std::size_t p);

/// Least k such that some k maximal subgroups intersect in the Frattini
/// subgroup. Throws Undefined for the trivial group.
std::size_t intersection_number(const SubgroupLattice& lattice);

}  // namespace comaxg
