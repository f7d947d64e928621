// Acceptance gate: one PASS/FAIL line per criterion, with wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include "comaxg/analysis.hpp"
#include "comaxg/corpus.hpp"
#include "comaxg/families.hpp"
#include "comaxg/group_spec.hpp"
#include "comaxg/lattice.hpp"
#include "commands.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace comaxg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

GroupAnalysis A(const std::string& spec) { return analyze(group_from_spec(spec)); }

oracle::ElementSet as_set(const SubgroupMask& h) {
  const auto e = h.elements();
  return {e.begin(), e.end()};
}

std::multiset<std::size_t> degrees(const ComaxGraph& g) {
  std::multiset<std::size_t> d;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) d.insert(g.degree(v));
  return d;
}

// Degrees of Gamma recomputed from materialised set products.
std::multiset<std::size_t> oracle_degrees(const GroupTable& g) {
  std::vector<oracle::ElementSet> vs;
  for (const auto& h : oracle::all_subgroups(g))
    if (h.size() > 1 && h.size() < g.order()) vs.push_back(h);
  std::multiset<std::size_t> d;
  for (const auto& h : vs) {
    std::size_t k = 0;
    for (const auto& q : vs) k += h != q && oracle::co_maximal(g, h, q);
    d.insert(k);
  }
  return d;
}

bool is_star_shape(const ComaxGraph& g, std::size_t leaves) {
  if (g.vertex_count() != leaves + 1 || g.edge_count() != leaves) return false;
  auto d = degrees(g);
  if (leaves == 1) return d.count(1) == 2;
  return d.count(1) == leaves && d.count(leaves) == 1;
}

bool is_complete_shape(const ComaxGraph& g, std::size_t n) {
  return g.vertex_count() == n && g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::size_t> prime_exponents(std::size_t n) {
  std::vector<std::size_t> e;
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    std::size_t k = 0;
    while (n % p == 0) n /= p, ++k;
    e.push_back(k);
  }
  return e;
}

bool has_element_of_order(const GroupTable& g, std::size_t k) {
  for (Element x = 0; x < g.order(); ++x)
    if (oracle::order_of(g, x) == k) return true;
  return false;
}

std::vector<GroupAnalysis>& corpus_analyses() {
  static std::vector<GroupAnalysis> all = [] {
    std::vector<GroupAnalysis> v;
    for (const auto& e : default_corpus().entries) v.push_back(A(e.text));
    return v;
  }();
  return all;
}

std::size_t diameter_of(const oracle::Matrix& m, const std::vector<std::size_t>& vertices) {
  const auto d = oracle::distances(m);
  std::size_t best = 0;
  for (auto u : vertices)
    for (auto v : vertices) best = std::max(best, d[u][v]);
  return best;
}

// -------------------------------------------------------------------------

Outcome small_graph_shapes() {
  Outcome o;
  const auto k4 = A("elementary 2 2");
  o.require(is_complete_shape(k4.gamma, 3), "Gamma(Z2 x Z2) is not K3");
  const auto s3 = A("symmetric 3");
  o.require(is_star_shape(s3.gamma, 3), "Gamma(S3) is not K1,3");
  const auto q8 = A("quaternion 8");
  o.require(q8.gamma.vertex_count() == 4 && q8.gamma_metrics.isolated_count == 1 &&
                q8.gamma.edge_count() == 3,
            "Gamma(Q8) is not K3 plus an isolated vertex");
  o.require(is_complete_shape(q8.gamma_star, 3), "Gamma*(Q8) is not K3");
  const auto d8 = A("dihedral 8");
  const std::multiset<std::size_t> expected{6, 4, 4, 2, 2, 2, 2, 0};
  o.require(oracle_degrees(d8.group) == expected, "oracle degrees of D8 differ from {6,4,4,2,2,2,2,0}");
  o.require(degrees(d8.gamma) == expected, "degree multiset of Gamma(D8)");
  const auto iso = isolated_vertices(d8.gamma);
  const Element a2 = d8.group.multiply(1, 1);
  o.require(iso.size() == 1 && as_set(d8.lattice[iso[0]]) == oracle::ElementSet{0, a2},
            "isolated vertex of Gamma(D8) is not <a^2>");
  return o;
}

Outcome a4_shape() {
  Outcome o;
  const auto a = A("alternating 4");
  o.require(a.gamma.vertex_count() == 8, "Gamma(A4) vertex count");
  auto sizes = a.gamma_metrics.component_sizes;
  std::sort(sizes.begin(), sizes.end());
  o.require(sizes == std::vector<std::size_t>{1, 1, 1, 5}, "Gamma(A4) components");
  o.require(degrees(a.gamma) == std::multiset<std::size_t>{4, 1, 1, 1, 1, 0, 0, 0},
            "Gamma(A4) is not K1,4 plus three isolated vertices");
  o.require(oracle::frattini(a.group, oracle::all_subgroups(a.group)).size() == 1, "Phi(A4) not trivial");
  o.require(a.classification.frattini_order == 1, "library Phi(A4) not trivial");
  o.require(!a.classification.is_nilpotent && !oracle::is_nilpotent(a.group, oracle::all_subgroups(a.group)),
            "A4 nilpotent");
  o.require(!a.classification.is_supersolvable, "A4 supersolvable");
  return o;
}

Outcome edgeless() {
  Outcome o;
  for (auto [p, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {2, 6}, {7, 2}}) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= p;
    const auto a = A("cyclic " + std::to_string(n));
    o.require(a.gamma.vertex_count() == k - 1 && a.gamma.edge_count() == 0,
              "Gamma(Z" + std::to_string(n) + ") is not edgeless on k-1 vertices");
  }
  for (const auto& a : corpus_analyses()) {
    if (!a.classification.is_solvable || a.gamma.edge_count() == 0) continue;
    const bool cyclic_p = prime_exponents(a.group.order()).size() == 1 &&
                          has_element_of_order(a.group, a.group.order());
    o.require(!cyclic_p && !a.classification.is_cyclic_p_group(),
              a.group.label() + " has edges yet is a cyclic p-group");
  }
  for (const auto& a : corpus_analyses()) {
    if (a.classification.is_solvable && a.gamma.edge_count() == 0 && a.group.order() > 1)
      o.require(a.classification.is_cyclic_p_group(), a.group.label() + " edgeless but not a cyclic p-group");
  }
  return o;
}

Outcome complete() {
  Outcome o;
  for (std::size_t p : {2, 3, 5}) {
    const auto a = A("elementary " + std::to_string(p) + " 2");
    o.require(is_complete_shape(a.gamma, p + 1), "Gamma(Z" + std::to_string(p) + "^2) is not K_{p+1}");
  }
  for (const auto& a : corpus_analyses()) {
    if (a.gamma.vertex_count() < 2 || a.gamma.edge_count() != a.gamma.vertex_count() * (a.gamma.vertex_count() - 1) / 2)
      continue;
    const auto e = prime_exponents(a.group.order());
    const bool zp_zp = e == std::vector<std::size_t>{2} && !has_element_of_order(a.group, a.group.order());
    const bool zp_zq = e == std::vector<std::size_t>{1, 1} && has_element_of_order(a.group, a.group.order());
    o.require(zp_zp || zp_zq, a.group.label() + " has complete Gamma but is not Zp x Zq");
  }
  return o;
}

Outcome star() {
  Outcome o;
  o.require(is_star_shape(A("semidirect 7 3 2").gamma, 7), "Gamma(Z7:Z3) is not K1,7");
  o.require(is_star_shape(A("semidirect 3 2 2").gamma, 3), "Gamma(Z3:Z2) is not K1,3");
  o.require(is_star_shape(A("cyclic 15").gamma, 1), "Gamma(Z15) is not K2");
  for (const auto& a : corpus_analyses()) {
    const std::size_t n = a.gamma.vertex_count();
    if (n < 2 || !is_star_shape(a.gamma, n - 1)) continue;
    o.require(prime_exponents(a.group.order()) == std::vector<std::size_t>{1, 1},
              a.group.label() + " has a star Gamma outside order pq");
  }
  return o;
}

Outcome girth() {
  Outcome o;
  auto g = [](const char* spec) {
    const auto gi = oracle::girth(oracle::matrix_of(A(spec).gamma_star));
    return gi == oracle::kInf ? std::string("inf") : std::to_string(gi);
  };
  auto lib = [](const char* spec) { return A(spec).gamma_star_metrics.girth.to_string(); };
  for (auto [spec, want] : std::vector<std::pair<const char*, const char*>>{
           {"cyclic 24", "inf"}, {"cyclic 36", "4"}, {"abelian 4 2", "3"}, {"quaternion 16", "3"}}) {
    o.require(g(spec) == want, std::string("oracle girth of Gamma*(") + spec + ")");
    o.require(lib(spec) == want, std::string("girth of Gamma*(") + spec + ")");
  }
  return o;
}

Outcome bipartite() {
  Outcome o;
  o.require(A("cyclic 36").gamma_metrics.is_bipartite, "Gamma(Z36) not bipartite");
  o.require(!A("elementary 2 3").gamma_metrics.is_bipartite, "Gamma(Z2^3) bipartite");
  std::size_t nilpotent = 0;
  for (const auto& a : corpus_analyses()) {
    if (!oracle::is_nilpotent(a.group, oracle::all_subgroups(a.group))) continue;
    ++nilpotent;
    const bool cyclic = has_element_of_order(a.group, a.group.order());
    const bool predicted = cyclic && prime_exponents(a.group.order()).size() <= 2;
    const bool observed = oracle::is_bipartite(oracle::matrix_of(a.gamma));
    o.require(predicted == observed && observed == a.gamma_metrics.is_bipartite,
              "bipartite mismatch for " + a.group.label());
  }
  o.require(nilpotent > 40, "too few nilpotent corpus groups");
  return o;
}

Outcome deleted_shapes() {
  Outcome o;
  o.require(is_complete_shape(A("quaternion 8").gamma_star, 3), "Gamma*(Q8) not complete");
  o.require(is_star_shape(A("cyclic 12").gamma_star, 2), "Gamma*(Z12) not a star");
  o.require(is_star_shape(A("cyclic 18").gamma_star, 2), "Gamma*(Z18) not a star");
  for (const char* spec : {"abelian 8 2", "modular 2 4", "dihedral 16", "quaternion 16", "semidihedral 16"}) {
    const auto a = A(spec);
    o.require(!a.gamma_star_metrics.universal_vertices.empty(), std::string("no universal vertex in Gamma*(") + spec + ")");
    // <a>, generated by an element of order |G|/2, must itself be universal.
    bool found = false;
    for (Element x = 0; x < a.group.order() && !found; ++x) {
      if (oracle::order_of(a.group, x) != a.group.order() / 2) continue;
      const auto h = oracle::closure(a.group, {x});
      const std::size_t pos = [&] {
        for (std::size_t v = 0; v < a.gamma_star.vertex_count(); ++v)
          if (as_set(a.lattice[a.gamma_star.vertices[v]]) == h) return v;
        return a.gamma_star.vertex_count();
      }();
      if (pos < a.gamma_star.vertex_count() && a.gamma_star.degree(pos) + 1 == a.gamma_star.vertex_count())
        found = true;
    }
    o.require(found, std::string("<a> not universal in Gamma*(") + spec + ")");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& a : corpus_analyses()) {
    if (a.group.order() > 24) continue;
    ++groups;
    const auto subs = oracle::all_subgroups(a.group);
    std::set<oracle::ElementSet> lib;
    for (const auto& h : a.lattice.subgroups()) lib.insert(as_set(h));
    o.require(lib == subs, "subgroup set mismatch for " + a.group.label());
    const auto& g = a.gamma;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
        o.require(g.adjacent(u, v) == oracle::co_maximal(a.group, as_set(a.lattice[g.vertices[u]]),
                                                         as_set(a.lattice[g.vertices[v]])),
                  "adjacency mismatch for " + a.group.label());
  }
  o.require(groups >= 30, "too few groups of order <= 24");
  return o;
}

Outcome connectivity() {
  Outcome o;
  for (const auto& a : corpus_analyses()) {
    const auto full = oracle::matrix_of(a.gamma);
    const auto star = oracle::matrix_of(a.gamma_star);
    const auto dstar = oracle::distances(star);
    if (oracle::is_solvable(a.group)) {
      bool connected = true;
      for (const auto& row : dstar)
        for (auto d : row) connected = connected && d < oracle::kInf;
      o.require(connected, "Gamma* disconnected for solvable " + a.group.label());
    }
    const std::size_t n = a.gamma.vertex_count();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    if (n >= 2 && degrees(a.gamma).count(0) == 0)
      o.require(diameter_of(full, all) <= 3, "diameter > 3 with positive min degree for " + a.group.label());
    if (oracle::is_nilpotent(a.group, oracle::all_subgroups(a.group))) {
      std::vector<std::size_t> nonisolated;
      for (std::size_t v = 0; v < n; ++v)
        if (a.gamma.degree(v) > 0) nonisolated.push_back(v);
      o.require(diameter_of(full, nonisolated) <= 3, "non-singleton diameter > 3 for " + a.group.label());
    }
  }
  return o;
}

Outcome verify_builtin() {
  Outcome o;
  const char* argv[] = {"comaxg", "verify"};
  std::ostringstream out, err;
  const int status = cli::run(2, argv, out, err);
  o.require(status == 0, "verify exited " + std::to_string(status));
  o.require(out.str().find("VERDICT fail") == std::string::npos, "fail verdicts present");
  o.require(out.str().find("THEOREM ") != std::string::npos, "no report lines");
  return o;
}

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

Graph boost_graph(const ComaxGraph& g) {
  Graph b(g.vertex_count());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
  return b;
}

Outcome question3() {
  Outcome o;
  const auto r = cli::search_q3(default_corpus());
  bool found = false;
  for (const auto& cls : r.classes) {
    std::set<std::string> labels;
    for (const auto& m : cls.members) labels.insert(m.label);
    if (labels.count("Z6") && labels.count("Z15")) found = true;
    o.require(cls.members.size() >= 2, "class with fewer than two members");
    const auto first = A(cls.members.front().spec);
    const Graph g0 = boost_graph(first.gamma);
    for (const auto& m : cls.members) {
      const auto other = A(m.spec);
      const Graph g1 = boost_graph(other.gamma);
      const bool iso = boost::num_vertices(g0) == boost::num_vertices(g1) &&
                       boost::num_edges(g0) == boost::num_edges(g1) && boost::isomorphism(g0, g1);
      o.require(iso, "class member " + m.label + " not isomorphic to " + cls.members.front().label);
    }
  }
  o.require(found, "no class contains Z6 and Z15");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "small graphs: K3, K1,3, Q8, D8", 1.0, small_graph_shapes},
      {2, "A4: K1,4 plus three isolated, trivial Frattini", 1.0, a4_shape},
      {3, "edgeless cyclic p-groups and converse", 30.0, edgeless},
      {4, "complete Gamma only for Zp x Zq", 30.0, complete},
      {5, "star Gamma only for order pq", 30.0, star},
      {6, "girth trichotomy of Gamma*", 5.0, girth},
      {7, "bipartite iff cyclic of order p^a q^b (nilpotent)", 60.0, bipartite},
      {8, "Gamma* complete, star and universal-vertex families", 5.0, deleted_shapes},
      {9, "lattice and adjacency oracles for |G| <= 24", 60.0, oracle_equivalence},
      {10, "connectivity and diameter bounds", 60.0, connectivity},
      {11, "verify on the built-in corpus", 300.0, verify_builtin},
      {12, "Q3 collisions with isomorphism check", 60.0, question3},
  };
  // Shared corpus analysis is built once, outside any single criterion's budget.
  corpus_analyses();

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    failures += !o.ok;
    std::printf("CRITERION %2d %s %.3fs (limit %.0fs) %s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", seconds,
                c.limit_seconds, c.name, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
