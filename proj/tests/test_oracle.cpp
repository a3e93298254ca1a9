#include <doctest.h>

#include "support.hpp"
#include "wfomc/error.hpp"
#include "wfomc/oracle.hpp"

using namespace wfomc;

namespace {

Interpretation digraph(std::uint32_t n, std::initializer_list<std::pair<int, int>> edges, const char* sig = "R/2") {
  Interpretation omega(parse_signature(sig), n);
  for (auto [a, b] : edges) omega.set(0, a, b, true);
  return omega;
}

Interpretation undirected(std::uint32_t n, std::initializer_list<std::pair<int, int>> edges) {
  Interpretation omega(parse_signature("R/2"), n);
  for (auto [a, b] : edges) {
    omega.set(0, a, b, true);
    omega.set(0, b, a, true);
  }
  return omega;
}

}  // namespace

TEST_CASE("weighted enumeration") {
  CHECK(enumerate_weighted(test::problem("R/2", ""), 2) == 16);
  CHECK(enumerate_weighted(test::problem("R/2", "forall x y. ~R(x,x)", {"dag(R)"}), 3) == 25);
  CHECK(enumerate_weighted(test::problem("R/1", "", {}, {}, {{"R", "2", "1"}}), 2) == 9);
  CHECK(enumerate_weighted(test::problem("", ""), 0) == 1);
  CHECK(enumerate_weighted(test::problem("A/1", "forall x. exists y. A(y)"), 3) == 7);
  CHECK(enumerate_weighted(test::problem("R/2", "", {}, {"|R| = 1"}), 2) == 4);
}

TEST_CASE("the ground-atom cap is enforced") {
  CHECK_THROWS_AS(enumerate_weighted(test::problem("R/2", ""), 6), OracleCapExceeded);
  CHECK_THROWS_AS(enumerate_weighted(test::problem("R/2, B/2", ""), 4), OracleCapExceeded);
  CHECK_NOTHROW(enumerate_weighted(test::problem("R/2, B/2", ""), 3));
}

TEST_CASE("graph checks") {
  const AxiomSpec dag = parse_axiom("dag(R)");
  const AxiomSpec conn = parse_axiom("connected(R)");
  const AxiomSpec forest = parse_axiom("forest(R)");
  const AxiomSpec tree = parse_axiom("tree(R)");
  const AxiomSpec dforest = parse_axiom("directed_forest(R)");

  CHECK_FALSE(check_axiom(digraph(2, {{0, 1}, {1, 0}}), dag));
  CHECK(check_axiom(digraph(3, {{0, 1}, {1, 2}, {0, 2}}), dag));
  CHECK_FALSE(check_axiom(digraph(1, {{0, 0}}), dag));

  CHECK(check_axiom(undirected(1, {}), conn));
  CHECK_FALSE(check_axiom(undirected(0, {}), conn));
  CHECK_FALSE(check_axiom(digraph(2, {{0, 1}}), conn));  // not symmetric

  const Interpretation path = undirected(3, {{0, 1}, {1, 2}});
  CHECK(check_axiom(path, tree));
  CHECK(check_axiom(path, forest));
  CHECK(check_axiom(path, conn));
  const Interpretation triangle = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(check_axiom(triangle, forest));
  CHECK(check_axiom(undirected(3, {{0, 1}}), forest));
  CHECK_FALSE(check_axiom(undirected(3, {{0, 1}}), tree));

  CHECK(check_axiom(digraph(3, {{0, 1}, {0, 2}}), dforest));
  CHECK_FALSE(check_axiom(digraph(3, {{0, 2}, {1, 2}}), dforest));

  Interpretation rooted(parse_signature("R/2, Root/1"), 3);
  rooted.set(0, 0, 1, true);
  rooted.set(0, 1, 2, true);
  const AxiomSpec dtree = parse_axiom("directed_tree(R, Root)");
  CHECK_FALSE(check_axiom(rooted, dtree));  // Root must mark the indegree-0 node
  rooted.set(1, 0, 0, true);
  CHECK(check_axiom(rooted, dtree));

  Interpretation ss(parse_signature("R/2, Source/1, Sink/1"), 2);
  ss.set(0, 0, 1, true);
  ss.set(1, 0, 0, true);
  ss.set(2, 1, 0, true);
  CHECK(check_axiom(ss, parse_axiom("dag(R, Source, Sink)")));
  ss.set(2, 0, 0, true);
  CHECK_FALSE(check_axiom(ss, parse_axiom("dag(R, Source, Sink)")));
}

TEST_CASE("projection") {
  // Four nodes, red R and blue B: R(2,1), R(3,3), B(2,4), B(3,4) (1-based).
  Interpretation omega(parse_signature("R/2, B/2"), 4);
  omega.set(0, 1, 0, true);
  omega.set(0, 2, 2, true);
  omega.set(1, 1, 3, true);
  omega.set(1, 2, 3, true);

  const Interpretation first = project(omega, {0, 1});
  CHECK(first.domain_size() == 2);
  CHECK(first.holds(0, 1, 0));
  CHECK(first.cardinality(0) == 1);
  CHECK(first.cardinality(1) == 0);

  const Interpretation second = project(omega, {2, 3});
  CHECK(second.holds(0, 0, 0));
  CHECK(second.holds(1, 0, 1));

  const Interpretation all = project(omega, {0, 1, 2, 3});
  for (std::size_t a = 0; a < omega.atom_count(); ++a) CHECK(all.bit(a) == omega.bit(a));

  const Interpretation none = project(omega, {});
  CHECK(none.atom_count() == 0);
  WeightFunction wf;
  wf.set("R", Rational(2), Rational(3));
  CHECK(weight(none, wf) == 1);
}

TEST_CASE("interpretation weight and satisfaction") {
  const Signature sig = parse_signature("R/2");
  Interpretation omega(sig, 2);
  omega.set(0, 0, 1, true);
  WeightFunction wf;
  wf.set("R", Rational(2), Rational(3));
  CHECK(weight(omega, wf) == 2 * 27);
  CHECK(satisfies(omega, parse_sentence("forall x y. ~R(x,x)", sig)));
  CHECK_FALSE(satisfies(omega, parse_sentence("forall x y. R(x,y) -> R(y,x)", sig)));
  CHECK(satisfies(omega, parse_sentence("forall x. exists y. R(x,y) | R(y,x)", sig)));
  CHECK(satisfies(omega, CardinalityConstraint::parse("|R| = 1", sig)));
}

TEST_CASE("model enumeration visits each model once") {
  const Signature sig = parse_signature("R/2");
  std::size_t count = 0;
  for_each_model(sig, parse_sentence(test::kUndirected, sig), 4, [&](const Interpretation&) { ++count; });
  CHECK(count == 64);
}
