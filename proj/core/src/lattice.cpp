#include "comaxg/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "comaxg/error.hpp"

namespace comaxg {

namespace {

struct Candidate {
  Bitset bits;
  std::vector<Element> elements;
  std::vector<Element> gens;
};

// Closes `c` under right multiplication after appending generator x.
void adjoin(const GroupTable& group, Candidate& c, Element x) {
  c.gens.push_back(x);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const auto row = group.row(c.elements[i]);
    for (Element g : c.gens) {
      const Element y = row[g];
      if (!c.bits.test(y)) {
        c.bits.set(y);
        c.elements.push_back(y);
      }
    }
  }
}

bool search_intersection(const SubgroupLattice& lattice, const Bitset& target,
                         std::span<const SubgroupId> maximals, std::size_t start,
                         std::size_t remaining, const Bitset& running) {
  if (remaining == 0) return running == target;
  for (std::size_t i = start; i + remaining <= maximals.size(); ++i) {
    const Bitset next = running & lattice[maximals[i]].bits();
    if (search_intersection(lattice, target, maximals, i + 1, remaining - 1, next)) return true;
  }
  return false;
}

}  // namespace

bool SubgroupLattice::is_maximal(SubgroupId id) const {
  return std::binary_search(maximal_ids_.begin(), maximal_ids_.end(), id);
}

std::optional<SubgroupId> SubgroupLattice::find(const SubgroupMask& h) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h);
  if (it == subgroups_.end() || !(*it == h)) return std::nullopt;
  return static_cast<SubgroupId>(it - subgroups_.begin());
}

SubgroupLattice all_subgroups(const GroupTable& group, const Limits& limits) {
  const std::size_t n = group.order();

  // One representative generator per distinct cyclic subgroup.
  std::vector<std::pair<Element, Bitset>> atoms;
  {
    std::unordered_set<Bitset> seen;
    for (Element x = 1; x < n; ++x) {
      Bitset bits = cyclic_subgroup(group, x).bits();
      if (seen.insert(bits).second) atoms.emplace_back(x, std::move(bits));
    }
  }

  std::vector<Candidate> found;
  std::unordered_set<Bitset> known;
  {
    Candidate trivial{Bitset(n), {GroupTable::identity()}, {}};
    trivial.bits.set(GroupTable::identity());
    known.insert(trivial.bits);
    found.push_back(std::move(trivial));
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [x, atom_bits] : atoms) {
      if (atom_bits.is_subset_of(found[i].bits)) continue;
      Candidate next = found[i];
      adjoin(group, next, x);
      if (known.insert(next.bits).second) {
        if (found.size() >= limits.subgroup_cap) throw SubgroupCapExceeded(limits.subgroup_cap);
        found.push_back(std::move(next));
      }
    }
  }

  SubgroupLattice lattice;
  lattice.group_order_ = n;
  lattice.subgroups_.reserve(found.size());
  for (auto& c : found) lattice.subgroups_.emplace_back(std::move(c.bits));
  std::sort(lattice.subgroups_.begin(), lattice.subgroups_.end());

  const std::size_t m = lattice.subgroups_.size();
  lattice.normal_.resize(m);
  for (SubgroupId id = 0; id < m; ++id) {
    lattice.normal_[id] = is_normal(group, lattice.subgroups_[id]);
  }

  const SubgroupId full = m - 1;
  for (SubgroupId id = 0; id < full; ++id) {
    const SubgroupMask& h = lattice.subgroups_[id];
    if (id != 0) lattice.proper_nontrivial_ids_.push_back(id);
    bool maximal = true;
    for (SubgroupId other = id + 1; other < full && maximal; ++other) {
      const SubgroupMask& k = lattice.subgroups_[other];
      if (k.order() > h.order() && h.is_subgroup_of(k)) maximal = false;
    }
    if (maximal) lattice.maximal_ids_.push_back(id);
  }

  if (lattice.maximal_ids_.empty()) {
    lattice.frattini_id_ = full;
  } else {
    Bitset common = lattice.subgroups_[lattice.maximal_ids_.front()].bits();
    for (SubgroupId id : lattice.maximal_ids_) common &= lattice.subgroups_[id].bits();
    lattice.frattini_id_ = *lattice.find(SubgroupMask(std::move(common)));
  }
  return lattice;
}

std::span<const SubgroupId> maximal_subgroups(const SubgroupLattice& lattice) {
  return lattice.maximal_ids();
}

const SubgroupMask& frattini(const SubgroupLattice& lattice) {
  return lattice[lattice.frattini_id()];
}

bool is_nilpotent(const GroupTable& /*group*/, const SubgroupLattice& lattice) {
  return std::all_of(lattice.maximal_ids().begin(), lattice.maximal_ids().end(),
                     [&](SubgroupId id) { return lattice.is_normal(id); });
}

bool is_supersolvable(const GroupTable& group, const SubgroupLattice& lattice) {
  for (SubgroupId id : lattice.maximal_ids()) {
    const std::size_t index = group.order() / lattice[id].order();
    if (index < 2) return false;
    for (std::size_t d = 2; d * d <= index; ++d) {
      if (index % d == 0) return false;
    }
  }
  return true;
}

bool is_solvable(const GroupTable& group) { return derived_series(group).back().order() == 1; }

const SubgroupMask& sylow_subgroup(const SubgroupLattice& lattice, std::size_t p) {
  const std::size_t n = lattice.group_order();
  if (p < 2 || n % p != 0) throw NoSuchPrime(p);
  std::size_t power = 1;
  while (n % (power * p) == 0) power *= p;
  for (const SubgroupMask& h : lattice.subgroups()) {
    if (h.order() == power) return h;
  }
  throw NoSuchPrime(p);  // unreachable for a complete lattice (Sylow's theorem)
}

std::size_t intersection_number(const SubgroupLattice& lattice) {
  if (lattice.group_order() == 1) throw Undefined("intersection number of the trivial group");
  const auto maximals = lattice.maximal_ids();
  const Bitset& target = frattini(lattice).bits();
  const Bitset everything = lattice[lattice.full_id()].bits();
  for (std::size_t k = 1; k <= maximals.size(); ++k) {
    if (search_intersection(lattice, target, maximals, 0, k, everything)) return k;
  }
  throw Undefined("no set of maximal subgroups meets in the Frattini subgroup");
}

}  // namespace comaxg
