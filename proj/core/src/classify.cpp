#include "comaxg/classify.hpp"

#include <algorithm>
#include <map>

namespace comaxg {

std::vector<PrimePower> factorize(std::size_t n) {
  std::vector<PrimePower> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

GroupClassification classify(const GroupTable& group, const SubgroupLattice& lattice) {
  GroupClassification c;
  const std::size_t n = group.order();
  c.order = n;
  c.prime_factorization = factorize(n);
  for (const auto& pp : c.prime_factorization) c.primes.push_back(pp.prime);

  std::map<std::size_t, std::size_t> orders;
  for (std::uint32_t o : group.element_orders()) ++orders[o];
  c.element_order_counts.assign(orders.begin(), orders.end());
  c.involution_count = orders.count(2) ? orders[2] : 0;
  c.subgroup_count = lattice.size();

  c.is_cyclic = orders.count(n) != 0;
  c.is_abelian = group.is_abelian();
  c.is_p_group = c.prime_factorization.size() == 1;
  c.p = c.is_p_group ? c.prime_factorization.front().prime : 0;
  c.is_nilpotent = is_nilpotent(group, lattice);
  c.is_solvable = is_solvable(group);
  c.is_supersolvable = is_supersolvable(group, lattice);

  if (!c.is_cyclic) {
    c.is_minimal_non_cyclic = true;
    for (SubgroupId id = 0; id + 1 < lattice.size(); ++id) {
      if (!is_cyclic(group, lattice[id])) {
        c.is_minimal_non_cyclic = false;
        break;
      }
    }
  }

  c.sylow_elementary_abelian = std::all_of(c.primes.begin(), c.primes.end(), [&](std::size_t p) {
    return is_elementary_abelian(group, sylow_subgroup(lattice, p));
  });

  c.maximal_count = lattice.maximal_ids().size();
  c.frattini_order = frattini(lattice).order();
  if (n > 1) c.intersection_number = intersection_number(lattice);
  return c;
}

}  // namespace comaxg
