#include "comaxg/theorems.hpp"

#include <algorithm>

namespace comaxg {

namespace {

using nlohmann::json;

class ReportBuilder {
 public:
  ReportBuilder(TheoremId id, const GroupAnalysis& a) {
    report_.theorem = id;
    report_.group_label = a.group.label();
  }

  void claim(const std::string& name, json predicted, json observed) {
    report_.predicted[name] = std::move(predicted);
    report_.observed[name] = std::move(observed);
  }
  void skip(const std::string& claim_name, const std::string& failed_hypothesis) {
    report_.skipped.push_back(claim_name + ": " + failed_hypothesis);
  }
  void observe(std::string note) { report_.observations.push_back(std::move(note)); }
  void not_applicable(const std::string& failed_hypothesis) {
    inapplicable_ = true;
    report_.skipped.push_back(failed_hypothesis);
  }

  TheoremReport finish() && {
    report_.applicable = !inapplicable_;
    if (!report_.applicable) {
      report_.verdict = Verdict::NotApplicable;
    } else {
      report_.verdict = report_.predicted == report_.observed ? Verdict::Pass : Verdict::Fail;
    }
    return std::move(report_);
  }

 private:
  TheoremReport report_;
  bool inapplicable_ = false;
};

json length_json(ExtendedLength length) {
  if (length.is_infinite()) return "inf";
  return length.value();
}

bool has_normal_maximal(const SubgroupLattice& lattice) {
  return std::any_of(lattice.maximal_ids().begin(), lattice.maximal_ids().end(),
                     [&](SubgroupId id) { return lattice.is_normal(id); });
}

// Largest diameter over components with at least two vertices.
std::size_t nonsingleton_diameter(const GraphMetrics& m) {
  std::size_t d = 0;
  for (std::size_t c = 0; c < m.component_sizes.size(); ++c) {
    if (m.component_sizes[c] > 1) d = std::max(d, m.component_diameters[c]);
  }
  return d;
}

std::size_t nonsingleton_count(const GraphMetrics& m) {
  return static_cast<std::size_t>(std::count_if(m.component_sizes.begin(), m.component_sizes.end(),
                                                [](std::size_t s) { return s > 1; }));
}

bool has_element_of_order(const GroupClassification& c, std::size_t order) {
  return std::any_of(c.element_order_counts.begin(), c.element_order_counts.end(),
                     [&](const auto& entry) { return entry.first == order; });
}

// Cyclic of order p^r q with r >= 2 (either prime may carry the exponent).
bool is_cyclic_prime_power_times_prime(const GroupClassification& c) {
  if (!c.is_cyclic || c.prime_factorization.size() != 2) return false;
  const std::size_t a = c.prime_factorization[0].exponent;
  const std::size_t b = c.prime_factorization[1].exponent;
  return std::min(a, b) == 1 && std::max(a, b) >= 2;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::IsolatedVertices: return "isolated";
    case TheoremId::Edgeless: return "edgeless";
    case TheoremId::Components: return "components";
    case TheoremId::ShapeFull: return "shape_full";
    case TheoremId::ShapeDeleted: return "shape_deleted";
    case TheoremId::BipartiteGirth: return "bipartite_girth";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "na";
  }
  return "unknown";
}

bool has_order_pq(const GroupClassification& c) {
  return c.prime_factorization.size() == 2 && c.prime_factorization[0].exponent == 1 &&
         c.prime_factorization[1].exponent == 1;
}

bool is_elementary_abelian_rank2(const GroupClassification& c) {
  return c.is_abelian && !c.is_cyclic && c.prime_factorization.size() == 1 &&
         c.prime_factorization[0].exponent == 2;
}

bool is_product_of_two_prime_cyclics(const GroupClassification& c) {
  return (has_order_pq(c) && c.is_cyclic) || is_elementary_abelian_rank2(c);
}

bool is_quaternion8(const GroupClassification& c) {
  return c.order == 8 && c.is_minimal_non_cyclic && c.involution_count == 1;
}

std::string universal_vertex_family(const GroupClassification& c) {
  if (has_order_pq(c)) return c.is_cyclic ? "Z_pq" : "Z_p:Z_q";
  if (!c.is_p_group || c.is_cyclic || c.order < c.p * c.p) return {};
  // Non-cyclic p-group with a cyclic subgroup of index p.
  if (!has_element_of_order(c, c.order / c.p)) return {};
  if (c.is_abelian) return "Z_p^(n-1) x Z_p";
  if (c.p != 2) return "M_p^n";
  // Non-abelian 2-groups with a cyclic maximal subgroup, told apart by
  // their number of involutions.
  if (c.involution_count == c.order / 2 + 1) return "D_2^n";
  if (c.involution_count == 1) return "Q_2^n";
  if (c.involution_count == c.order / 4 + 1) return "SD_2^n";
  if (c.involution_count == 3) return "M_p^n";
  return {};
}

TheoremReport verify_isolated(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::IsolatedVertices, a);
  const SubgroupMask& phi = frattini(a.lattice);
  std::vector<SubgroupId> inside_phi;
  for (SubgroupId id : a.lattice.proper_nontrivial_ids()) {
    if (a.lattice[id].is_subgroup_of(phi)) inside_phi.push_back(id);
  }
  const auto isolated = isolated_vertices(a.gamma);

  std::vector<SubgroupId> inside_phi_isolated;
  std::set_intersection(inside_phi.begin(), inside_phi.end(), isolated.begin(), isolated.end(),
                        std::back_inserter(inside_phi_isolated));
  b.claim("frattini_subgroups_isolated", inside_phi, inside_phi_isolated);

  if (a.classification.is_nilpotent) {
    b.claim("isolated_equals_frattini_subgroups", inside_phi, isolated);
  } else {
    b.skip("isolated_equals_frattini_subgroups", "non-nilpotent");
    if (phi.order() == 1 && !isolated.empty()) {
      b.observe("trivial Frattini subgroup with " + std::to_string(isolated.size()) +
                " isolated vertices");
    }
  }
  return std::move(b).finish();
}

TheoremReport verify_edgeless(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::Edgeless, a);
  const auto& c = a.classification;
  const std::size_t edges = a.gamma_metrics.edge_count;
  if (c.is_cyclic_p_group()) {
    b.claim("edge_count", 0, edges);
  } else {
    b.skip("edge_count", "not a cyclic p-group");
  }
  if (c.order == 1) {
    b.skip("cyclic_p_group", "trivial group");
  } else if (c.is_solvable && edges == 0) {
    b.claim("cyclic_p_group", true, c.is_cyclic_p_group());
  } else {
    b.skip("cyclic_p_group", c.is_solvable ? "has edges" : "non-solvable");
  }
  return std::move(b).finish();
}

TheoremReport verify_components(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::Components, a);
  const auto& c = a.classification;
  const auto& m = a.gamma_metrics;
  const bool normal_maximal = has_normal_maximal(a.lattice);

  if (normal_maximal) {
    b.claim("nonsingleton_components", c.is_cyclic_p_group() ? 0 : 1, nonsingleton_count(m));
  } else {
    b.skip("nonsingleton_components", "no normal maximal subgroup");
  }

  if (c.is_nilpotent) {
    b.claim("component_diameter_at_most_3", true, nonsingleton_diameter(m) <= 3);
    b.claim("gamma_star_diameter_at_most_3", true,
            a.gamma_star_metrics.component_count <= 1 &&
                a.gamma_star_metrics.diameter_largest_component <= 3);
    b.claim("gamma_star_equals_gamma", c.frattini_order == 1,
            a.gamma_star.vertex_count() == a.gamma.vertex_count());
  } else {
    b.skip("component_diameter_at_most_3", "non-nilpotent");
    b.skip("gamma_star_equals_gamma", "non-nilpotent");
  }

  if (m.vertex_count >= 2 && m.min_degree >= 1) {
    b.claim("positive_min_degree_diameter_at_most_3", true,
            m.component_count == 1 && m.diameter_largest_component <= 3);
  }

  if (c.is_solvable) {
    b.claim("gamma_star_connected", true, a.gamma_star_metrics.component_count <= 1);
  } else {
    b.skip("gamma_star_connected", "non-solvable");
    b.observe("gamma_star components: " + std::to_string(a.gamma_star_metrics.component_count));
  }

  if (!normal_maximal && !c.is_nilpotent && !c.is_solvable) {
    b.not_applicable("no normal maximal subgroup, non-solvable");
  }
  if (nonsingleton_count(m) > 0) {
    b.observe("largest non-singleton component diameter " +
              std::to_string(nonsingleton_diameter(m)));
  }
  return std::move(b).finish();
}

TheoremReport verify_shape_full(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::ShapeFull, a);
  const auto& c = a.classification;
  const auto& m = a.gamma_metrics;
  const bool order_pq = has_order_pq(c);

  b.claim("complete", is_product_of_two_prime_cyclics(c), m.is_complete);
  b.claim("star", order_pq, m.is_star);
  if (order_pq) {
    const std::size_t larger = c.prime_factorization[1].prime;
    b.claim("star_leaves", c.is_cyclic ? 1 : larger,
            m.is_star ? json(m.vertex_count - 1) : json(nullptr));
  }
  b.claim("universal_vertex", is_elementary_abelian_rank2(c) || order_pq,
          !m.universal_vertices.empty());
  b.claim("tree", order_pq, m.is_tree);
  return std::move(b).finish();
}

TheoremReport verify_shape_deleted(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::ShapeDeleted, a);
  const auto& c = a.classification;
  const auto& m = a.gamma_star_metrics;
  const std::string family = universal_vertex_family(c);
  const bool has_universal = !m.universal_vertices.empty();

  if (c.is_nilpotent) {
    b.claim("star", has_order_pq(c) || is_cyclic_prime_power_times_prime(c), m.is_star);
    const bool single_edge = has_order_pq(c) && c.is_cyclic;
    b.claim("complete", is_elementary_abelian_rank2(c) || is_quaternion8(c) || single_edge,
            m.is_complete);
    if (single_edge) b.observe("Gamma* is K2, both a star and complete");
  } else {
    b.skip("star", "non-nilpotent");
    b.skip("complete", "non-nilpotent");
  }

  if (!family.empty()) {
    b.claim("universal_vertex", true, has_universal);
    b.observe("recognised family " + family);
  } else if (has_universal) {
    b.observe("universal vertex present but group not in the listed families");
  }

  if (!c.is_nilpotent && family.empty()) b.not_applicable("non-nilpotent");
  return std::move(b).finish();
}

TheoremReport verify_bipartite_girth(const GroupAnalysis& a) {
  ReportBuilder b(TheoremId::BipartiteGirth, a);
  const auto& c = a.classification;
  if (!c.is_nilpotent) {
    b.not_applicable("non-nilpotent");
    return std::move(b).finish();
  }

  bool bipartite = false;
  ExtendedLength girth = ExtendedLength::finite(3);
  const auto& pf = c.prime_factorization;
  if (c.order == 1 || (c.is_cyclic && pf.size() == 1)) {
    bipartite = true;
    girth = ExtendedLength::infinite();
  } else if (c.is_cyclic && pf.size() == 2) {
    bipartite = true;
    girth = std::min(pf[0].exponent, pf[1].exponent) == 1 ? ExtendedLength::infinite()
                                                          : ExtendedLength::finite(4);
  }
  b.claim("bipartite", bipartite, a.gamma_metrics.is_bipartite);
  b.claim("girth", length_json(girth), length_json(a.gamma_star_metrics.girth));
  return std::move(b).finish();
}

TheoremReport verify(TheoremId id, const GroupAnalysis& analysis) {
  switch (id) {
    case TheoremId::IsolatedVertices: return verify_isolated(analysis);
    case TheoremId::Edgeless: return verify_edgeless(analysis);
    case TheoremId::Components: return verify_components(analysis);
    case TheoremId::ShapeFull: return verify_shape_full(analysis);
    case TheoremId::ShapeDeleted: return verify_shape_deleted(analysis);
    case TheoremId::BipartiteGirth: return verify_bipartite_girth(analysis);
  }
  return {};
}

std::vector<TheoremReport> verify_all(const GroupAnalysis& analysis) {
  std::vector<TheoremReport> out;
  for (TheoremId id : kAllTheorems) out.push_back(verify(id, analysis));
  return out;
}

}  // namespace comaxg
