#pragma once

#include "comaxg/classify.hpp"
#include "comaxg/comax_graph.hpp"
#include "comaxg/group.hpp"
#include "comaxg/lattice.hpp"
#include "comaxg/limits.hpp"

namespace comaxg {

/// Everything the verifiers read about one group, computed once.
struct GroupAnalysis {
  GroupTable group;
  SubgroupLattice lattice;
  GroupClassification classification;
  ComaxGraph gamma;
  ComaxGraph gamma_star;
  GraphMetrics gamma_metrics;
  GraphMetrics gamma_star_metrics;
};

GroupAnalysis analyze(GroupTable group, const Limits& limits = {});

}  // namespace comaxg
