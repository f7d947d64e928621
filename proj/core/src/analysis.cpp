#include "comaxg/analysis.hpp"

namespace comaxg {

GroupAnalysis analyze(GroupTable group, const Limits& limits) {
  SubgroupLattice lattice = all_subgroups(group, limits);
  GroupClassification classification = classify(group, lattice);
  ComaxGraph gamma = build_gamma(group, lattice);
  ComaxGraph gamma_star = build_gamma_star(gamma);
  GraphMetrics gamma_metrics = metrics(gamma);
  GraphMetrics gamma_star_metrics = metrics(gamma_star);
  return GroupAnalysis{std::move(group),         std::move(lattice),       std::move(classification),
                       std::move(gamma),         std::move(gamma_star),    std::move(gamma_metrics),
                       std::move(gamma_star_metrics)};
}

}  // namespace comaxg
