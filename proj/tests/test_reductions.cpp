#include <doctest.h>

#include "support.hpp"
#include "wfomc/error.hpp"
#include "wfomc/oracle.hpp"
#include "wfomc/reductions.hpp"

using namespace wfomc;

TEST_CASE("axiom parsing") {
  CHECK(parse_axiom("dag(R)").kind == AxiomKind::Dag);
  const AxiomSpec ss = parse_axiom("dag(R, Source, Sink)");
  CHECK(ss.kind == AxiomKind::SourceSinkDag);
  CHECK(ss.source == "Source");
  CHECK(ss.sink == "Sink");
  const AxiomSpec dt = parse_axiom(" directed_tree( E , Top ) ");
  CHECK(dt.kind == AxiomKind::DirectedTree);
  CHECK(dt.edge == "E");
  CHECK(dt.root == "Top");
  CHECK(parse_axiom("directed_forest(R)").kind == AxiomKind::DirectedForest);
  CHECK(parse_axiom("tree(R)").kind == AxiomKind::Tree);
  CHECK(to_string(parse_axiom("connected(R)")) == "connected(R)");
  CHECK_THROWS_AS(parse_axiom("cyclic(R)"), ParseError);
  CHECK_THROWS_AS(parse_axiom("dag(R"), ParseError);
  CHECK_THROWS_AS(parse_axiom("directed_tree(R)"), ParseError);
  const Signature sig = parse_signature("R/2, A/1");
  CHECK_THROWS_AS(check_axiom(parse_axiom("dag(A)"), sig), std::invalid_argument);
  CHECK_THROWS_AS(check_axiom(parse_axiom("directed_tree(R, R)"), sig), std::invalid_argument);
  CHECK_NOTHROW(check_axiom(parse_axiom("dag(R, Source, Sink)"), sig));
}

TEST_CASE("skolemization") {
  const Problem p = test::problem("R/2", "forall x. exists y. R(x,y)");
  const ReductionResult r = skolemize(initial_result(p));
  CHECK(r.sentence.universal());
  REQUIRE(r.fresh.size() == 1);
  const auto entry = r.weights.get(r.fresh[0]);
  CHECK(std::get<Rational>(entry.w) == 1);
  CHECK(std::get<Rational>(entry.wbar) == -1);
  CHECK(solve(p, 2) == 9);
  CHECK(solve(p, 3) == 343);  // (2^3 - 1)^3

  const Problem plain = test::problem("R/2", "forall x y. R(x,y) -> R(y,x)");
  const ReductionResult same = skolemize(initial_result(plain));
  CHECK(same.fresh.empty());
  CHECK(same.sentence == plain.sentence);

  const Problem ex9 = test::problem("R/2", "forall x. exists y. R(x,y)", {"forest(R)"});
  CHECK(solve(ex9, 3) == 3);
}

TEST_CASE("tree reduction") {
  const Problem p = test::problem("R/2", "", {"tree(R)"});
  CHECK(solve(p, 1) == 1);
  CHECK(solve(p, 2) == 1);
  CHECK(solve(p, 5) == 125);
  const ReductionResult r = reduce(p);
  CHECK(r.axiom == BaseAxiom::Connected);
  REQUIRE(r.constraints.size() == 1);
  CHECK(r.constraints[0].evaluate({{"R", 8}}, 5));
}

TEST_CASE("directed tree reduction") {
  const Problem p = test::problem("R/2, Root/1", "", {"directed_tree(R, Root)"});
  CHECK(solve(p, 1) == 1);
  CHECK(solve(p, 2) == 2);
  CHECK(solve(p, 3) == 9);
  CHECK(solve(p, 4) == 64);
  for (std::uint32_t n = 1; n <= 3; ++n) CHECK(solve(p, n) == enumerate_weighted(p, n));
}

TEST_CASE("directed forest reduction") {
  const Problem p = test::problem("R/2", "", {"directed_forest(R)"});
  CHECK(solve(p, 0) == 1);
  CHECK(solve(p, 2) == 3);
  CHECK(solve(p, 3) == 16);
  CHECK(solve(p, 4) == 125);
  for (std::uint32_t n = 0; n <= 4; ++n) CHECK(solve(p, n) == enumerate_weighted(p, n));
}

TEST_CASE("source/sink reduction") {
  const Problem one = test::problem("R/2", "", {"dag(R, Source, Sink)"}, {"|Source| = 1"});
  CHECK(solve(one, 2) == 2);
  CHECK(solve(one, 3) == 15);
  const Problem all = test::problem("R/2", "", {"dag(R, Source, Sink)"}, {"|Source| = n"});
  CHECK(solve(all, 2) == 1);
  // Unconstrained source/sink labelling is forced, so the count is the DAG count.
  const Problem free = test::problem("R/2", "", {"dag(R, Source, Sink)"});
  for (std::uint32_t n = 0; n <= 4; ++n) CHECK(solve(free, n) == count_dags(n));
  const Problem both = test::problem("R/2", "", {"dag(R, Source, Sink)"}, {"|Source| = 1", "|Sink| = 1"});
  for (std::uint32_t n = 1; n <= 4; ++n) CHECK(solve(both, n) == enumerate_weighted(both, n));
}

TEST_CASE("cardinality application") {
  const Problem und = test::problem("R/2", test::kUndirected);
  const long choose6[] = {1, 6, 15, 20, 15, 6, 1};
  for (int d = 0; d <= 6; ++d) {
    Problem q = und;
    q.constraints.push_back(CardinalityConstraint::parse("|R| = " + std::to_string(2 * d), q.signature));
    CHECK(solve(q, 4) == choose6[d]);
  }
  const Problem dag2 = test::problem("R/2", "", {"dag(R)"}, {"|R| = 2"});
  CHECK(solve(dag2, 3) == 12);  // brute force; see the fixture
  CHECK(enumerate_weighted(dag2, 3) == 12);

  const SymbolId wR = intern({"R", Polarity::Positive});
  WeightPolynomial p = WeightPolynomial::pow(WeightPolynomial::symbol(wR) + WeightPolynomial(1), 4);
  CHECK(apply_cardinality(p, CardinalityConstraint(), 4, {{wR, 1}}) == 16);
  CHECK(apply_cardinality(p, CardinalityConstraint::parse("|R| = 2"), 4, {{wR, 3}}) == 6 * 9);
  CHECK_THROWS_AS(apply_cardinality(p, CardinalityConstraint::parse("|R| = 2"), 4, {}), std::invalid_argument);
}

TEST_CASE("more than one base axiom is outside the fragment") {
  const Problem p = test::problem("R/2", "", {"dag(R)", "connected(R)"});
  CHECK_THROWS_AS(solve(p, 3), UnsupportedFragment);
  const Problem q = test::problem("R/2, B/2", "", {"dag(R)", "forest(B)"});
  CHECK_THROWS_AS(solve(q, 3), UnsupportedFragment);
}

TEST_CASE("precondition notes") {
  const ReductionResult missing = reduce(test::problem("R/2", "", {"connected(R)"}));
  CHECK_FALSE(missing.notes.empty());
  const ReductionResult present = reduce(test::problem("R/2", test::kUndirected, {"connected(R)"}));
  CHECK(present.notes.empty());
}

TEST_CASE("modularity: reductions stay exact under extra sentences (oracle)") {
  const Problem a = test::problem("R/2, A/1", "forall x y. A(x) & R(x,y) -> A(y)", {"directed_forest(R)"}, {},
                                  {{"A", "2", "1"}});
  const Problem b = test::problem("R/2, A/1", "forall x y. R(x,y) -> A(x) | A(y)", {"tree(R)"}, {},
                                  {{"A", "1/2", "3"}});
  const Problem c = test::problem("R/2, Root/1, A/1", "forall x y. Root(x) -> A(x)", {"directed_tree(R, Root)"});
  for (std::uint32_t n = 1; n <= 4; ++n) {
    CHECK(solve(a, n) == enumerate_weighted(a, n));
    CHECK(solve(b, n) == enumerate_weighted(b, n));
    if (n <= 3) CHECK(solve(c, n) == enumerate_weighted(c, n));
  }
}
