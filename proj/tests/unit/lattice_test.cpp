#include <doctest.h>

#include <set>

#include "comaxg/error.hpp"
#include "comaxg/lattice.hpp"
#include "helpers.hpp"

using namespace comaxg;
using testing::as_set;
using testing::G;

namespace {

std::set<oracle::ElementSet> library_subgroups(const SubgroupLattice& l) {
  std::set<oracle::ElementSet> out;
  for (const auto& h : l.subgroups()) out.insert(as_set(h));
  return out;
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(G("quaternion 8")).size() == 6);
  CHECK(all_subgroups(G("quaternion 8")).proper_nontrivial_ids().size() == 4);
  CHECK(all_subgroups(G("dihedral 8")).size() == 10);
  CHECK(all_subgroups(G("cyclic 12")).size() == 6);
  CHECK(all_subgroups(G("cyclic 1")).size() == 1);
  CHECK(all_subgroups(G("alternating 5")).proper_nontrivial_ids().size() == 57);
}

TEST_CASE("lattice matches the decision-tree oracle") {
  for (const char* spec : {"cyclic 12", "dihedral 12", "quaternion 16", "symmetric 4",
                           "alternating 4", "elementary 2 3", "abelian 4 2", "semidirect 7 3 2",
                           "modular 2 4", "direct symmetric 3 cyclic 3"}) {
    const auto g = G(spec);
    CAPTURE(spec);
    CHECK(library_subgroups(all_subgroups(g)) == oracle::all_subgroups(g));
  }
}

TEST_CASE("canonical ordering: trivial first, whole group last, orders ascending") {
  const auto l = all_subgroups(G("symmetric 4"));
  CHECK(l[l.trivial_id()].order() == 1);
  CHECK(l[l.full_id()].order() == 24);
  for (SubgroupId i = 1; i < l.size(); ++i) CHECK(l[i - 1] < l[i]);
  for (SubgroupId i = 0; i < l.size(); ++i) CHECK(l.find(l[i]) == i);
}

TEST_CASE("maximal subgroups") {
  const auto z12 = all_subgroups(G("cyclic 12"));
  std::multiset<std::size_t> orders;
  for (SubgroupId id : maximal_subgroups(z12)) orders.insert(z12[id].order());
  CHECK(orders == std::multiset<std::size_t>{4, 6});

  const auto z7 = all_subgroups(G("cyclic 7"));
  REQUIRE(z7.maximal_ids().size() == 1);
  CHECK(z7[z7.maximal_ids()[0]].order() == 1);

  const auto d8 = all_subgroups(G("dihedral 8"));
  CHECK(d8.maximal_ids().size() == 3);
  for (SubgroupId id : d8.maximal_ids()) CHECK(d8[id].order() == 4);

  const auto g = G("symmetric 4");
  const auto s4 = all_subgroups(g);
  const auto expected = oracle::maximal_subgroups(oracle::all_subgroups(g), 24);
  std::set<oracle::ElementSet> got;
  for (SubgroupId id : s4.maximal_ids()) got.insert(as_set(s4[id]));
  CHECK(got == std::set<oracle::ElementSet>(expected.begin(), expected.end()));
}

TEST_CASE("Frattini subgroup") {
  const auto q8 = G("quaternion 8");
  const auto lq = all_subgroups(q8);
  CHECK(frattini(lq).order() == 2);
  CHECK(frattini(lq).contains(q8.multiply(1, 1)));
  CHECK(frattini(all_subgroups(G("elementary 2 2"))).order() == 1);
  const auto z12 = G("cyclic 12");
  CHECK(as_set(frattini(all_subgroups(z12))) == oracle::ElementSet{0, 6});
  CHECK(frattini(all_subgroups(G("cyclic 1"))).order() == 1);
  for (const char* spec : {"dihedral 16", "cyclic 36", "symmetric 4", "modular 3 3"}) {
    const auto g = G(spec);
    CHECK(as_set(frattini(all_subgroups(g))) == oracle::frattini(g, oracle::all_subgroups(g)));
  }
}

TEST_CASE("nilpotent, supersolvable, solvable") {
  for (const char* spec : {"quaternion 8", "cyclic 12", "dihedral 16", "symmetric 3",
                           "alternating 4", "dihedral 12", "direct quaternion 8 cyclic 3"}) {
    const auto g = G(spec);
    CAPTURE(spec);
    CHECK(is_nilpotent(g, all_subgroups(g)) == oracle::is_nilpotent(g, oracle::all_subgroups(g)));
    CHECK(is_solvable(g) == oracle::is_solvable(g));
  }
  const auto a4 = G("alternating 4");
  CHECK_FALSE(is_supersolvable(a4, all_subgroups(a4)));
  const auto s3 = G("symmetric 3");
  CHECK(is_supersolvable(s3, all_subgroups(s3)));
  CHECK_FALSE(is_nilpotent(s3, all_subgroups(s3)));
  CHECK_FALSE(is_solvable(G("alternating 5")));
  CHECK(oracle::is_solvable(G("symmetric 4")));
  CHECK_FALSE(oracle::is_solvable(G("alternating 5")));
}

TEST_CASE("Sylow subgroups") {
  const auto s3 = G("symmetric 3");
  const auto l3 = all_subgroups(s3);
  CHECK(sylow_subgroup(l3, 3).order() == 3);
  CHECK(is_elementary_abelian(s3, sylow_subgroup(l3, 3)));
  const auto z12 = G("cyclic 12");
  const auto l12 = all_subgroups(z12);
  const auto& p2 = sylow_subgroup(l12, 2);
  CHECK(p2.order() == 4);
  CHECK(as_set(p2) == oracle::ElementSet{0, 3, 6, 9});
  CHECK_FALSE(is_elementary_abelian(z12, p2));
  const auto k4 = G("elementary 2 2");
  const auto lk = all_subgroups(k4);
  CHECK(sylow_subgroup(lk, 2).order() == 4);
  CHECK_THROWS_AS(sylow_subgroup(lk, 3), NoSuchPrime);
}

TEST_CASE("intersection number") {
  CHECK(intersection_number(all_subgroups(G("cyclic 9"))) == 1);
  CHECK(intersection_number(all_subgroups(G("elementary 3 2"))) == 2);
  CHECK(intersection_number(all_subgroups(G("elementary 2 2"))) == 2);
  CHECK(intersection_number(all_subgroups(G("quaternion 8"))) == 2);
  CHECK(intersection_number(all_subgroups(G("elementary 2 3"))) == 3);
  CHECK_THROWS_AS(intersection_number(all_subgroups(G("cyclic 1"))), Undefined);
}

TEST_CASE("subgroup cap") {
  Limits tight;
  tight.subgroup_cap = 20;
  CHECK_THROWS_AS(all_subgroups(G("symmetric 4"), tight), SubgroupCapExceeded);
}
