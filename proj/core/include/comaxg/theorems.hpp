#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "comaxg/analysis.hpp"

namespace comaxg {

enum class TheoremId {
  IsolatedVertices,  // subgroups inside the Frattini subgroup are isolated
  Edgeless,          // Gamma edgeless <=> cyclic p-group (solvable case)
  Components,        // one non-trivial component; Gamma* connected
  ShapeFull,         // complete / star / universal vertex / tree for Gamma
  ShapeDeleted,      // star / complete / universal vertex for Gamma*
  BipartiteGirth,    // bipartiteness of Gamma and girth of Gamma*
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::IsolatedVertices, TheoremId::Edgeless,     TheoremId::Components,
    TheoremId::ShapeFull,        TheoremId::ShapeDeleted, TheoremId::BipartiteGirth,
};

std::string_view to_string(TheoremId id);

enum class Verdict { Pass, Fail, NotApplicable };

/// "pass", "fail" or "na".
std::string_view to_string(Verdict verdict);

/// Outcome of checking one theorem on one group.
///
/// `predicted` and `observed` are JSON objects with the same keys, one per
/// sub-claim that applied; the verdict is pass exactly when the report is
/// applicable and the two objects are equal.
struct TheoremReport {
  TheoremId theorem = TheoremId::IsolatedVertices;
  std::string group_label;
  bool applicable = false;
  nlohmann::json predicted = nlohmann::json::object();
  nlohmann::json observed = nlohmann::json::object();
  Verdict verdict = Verdict::NotApplicable;
  /// Hypotheses that failed, for sub-claims or whole reports marked na.
  std::vector<std::string> skipped;
  /// Informational findings that are not pass/fail claims.
  std::vector<std::string> observations;
};

TheoremReport verify_isolated(const GroupAnalysis& analysis);
TheoremReport verify_edgeless(const GroupAnalysis& analysis);
TheoremReport verify_components(const GroupAnalysis& analysis);
TheoremReport verify_shape_full(const GroupAnalysis& analysis);
TheoremReport verify_shape_deleted(const GroupAnalysis& analysis);
TheoremReport verify_bipartite_girth(const GroupAnalysis& analysis);

TheoremReport verify(TheoremId id, const GroupAnalysis& analysis);
std::vector<TheoremReport> verify_all(const GroupAnalysis& analysis);

// Group recognisers used by the predictions. Each works from invariants
// that pin down the family at the orders involved.

/// |G| = pq for distinct primes p, q.
bool has_order_pq(const GroupClassification& c);
/// Z_p x Z_q with p, q primes, not necessarily distinct.
bool is_product_of_two_prime_cyclics(const GroupClassification& c);
/// Z_p x Z_p: abelian, non-cyclic, order p^2.
bool is_elementary_abelian_rank2(const GroupClassification& c);
/// Q8: order 8, minimal non-cyclic, exactly one involution.
bool is_quaternion8(const GroupClassification& c);

/// Which of the seven families with a universal vertex in Gamma* the group
/// belongs to ("Z_pq", "Z_p:Z_q", "Z_p^(n-1) x Z_p", "M_p^n", "D_2^n",
/// "Q_2^n", "SD_2^n"), or empty.
std::string universal_vertex_family(const GroupClassification& c);

}  // namespace comaxg
