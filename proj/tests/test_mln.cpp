#include <doctest.h>

#include "support.hpp"
#include "wfomc/error.hpp"
#include "wfomc/mln.hpp"
#include "wfomc/oracle.hpp"

using namespace wfomc;

namespace {

const Rational kR = Rational(367879, 1000000);

Rational total(const Distribution& d) {
  Rational s(0);
  for (const auto& [_, p] : d.mass) s += p;
  return s;
}

bool symmetric(const Distribution& d, std::int64_t n) {
  for (std::int64_t s = 0; s <= n; ++s) {
    const auto a = d.mass.find(s), b = d.mass.find(n - s);
    const Rational pa = a == d.mass.end() ? Rational(0) : a->second;
    const Rational pb = b == d.mass.end() ? Rational(0) : b->second;
    if (pa != pb) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("compilation") {
  const MlnModel empty = parse_mln("sig: R/2\n");
  CHECK(partition(empty, 2) == 16);

  const MlnModel single = parse_mln("sig: R/2\n2 : R(x,y)\n");
  const Problem p = compile(single);
  CHECK(p.signature.size() == 2);
  CHECK(partition(single, 2) == 81);  // (2 + 1)^4

  const MlnModel smokers = preset("smokers");
  const Problem sp = compile(smokers);
  CHECK(sp.signature.size() == 5);
  CHECK(sp.sentence.clauses.size() == 4);
  for (const auto& pred : sp.signature.predicates())
    if (pred.name.rfind("@mln", 0) == 0) CHECK(std::get<Rational>(sp.weights.get(pred.name).wbar) == 1);
  CHECK(sp.signature[sp.signature.index_of("@mln0")].arity == 1);
  CHECK(sp.signature[sp.signature.index_of("@mln1")].arity == 2);
  CHECK(sp.signature[sp.signature.index_of("@mln2")].arity == 2);

  MlnModel bad = empty;
  bad.soft.push_back({Rational(2), Formula::top()});
  CHECK_THROWS_AS(compile(bad), std::invalid_argument);
}

TEST_CASE("partition functions") {
  CHECK(partition(parse_mln("sig: A/1"), 3) == 8);
  const MlnModel conn = parse_mln(std::string("sig: F/2\nhard: forall x y. ~F(x,x) & (F(x,y) -> F(y,x))\n") +
                                  "hard: axiom connected(F)\n");
  CHECK(partition(conn, 4) == 38);
  const MlnModel soft = parse_mln(std::string("sig: F/2\nhard: forall x y. ~F(x,x) & (F(x,y) -> F(y,x))\n") +
                                  "367879/1000000 : F(x,y)\n");
  CHECK(partition(soft, 2) == 1 + kR * kR);
}

TEST_CASE("soft formulas against brute force over the compiled problem") {
  const MlnModel m = parse_mln(
      "sig: S/1, F/2\n"
      "hard: forall x y. ~F(x,x) & (F(x,y) -> F(y,x))\n"
      "3/2 : S(x)\n"
      "1/3 : F(x,y)\n"
      "5 : S(x) & F(x,y) -> S(y)\n"
      "2 : S(y)\n");
  for (std::uint32_t n = 0; n <= 3; ++n) {
    // Oracle over the original signature: weight each world by the soft factors.
    Rational brute(0);
    for_each_model(m.signature, m.hard, n, [&](const Interpretation& omega) {
      Rational w(1);
      for (std::uint32_t a = 0; a < n; ++a) {
        if (omega.holds(0, a)) w *= Rational(3, 2) * 2;
        for (std::uint32_t b = 0; b < n; ++b) {
          if (omega.holds(1, a, b)) w *= Rational(1, 3);
          if (!(omega.holds(0, a) && omega.holds(1, a, b)) || omega.holds(0, b)) w *= 5;
        }
      }
      brute += w;
    });
    CHECK(partition(m, n) == brute);
  }
}

TEST_CASE("query probabilities") {
  const MlnModel graph = parse_mln(std::string("sig: F/2\nhard: forall x y. ~F(x,x) & (F(x,y) -> F(y,x))\n"));
  CHECK(query_probability(graph, MlnQuery{}, 4) == 1);
  MlnQuery same;
  same.sentence = parse_sentence("forall x y. ~F(x,x)", graph.signature);
  CHECK(query_probability(graph, same, 4) == 1);
  MlnQuery conn;
  conn.axioms.push_back(parse_axiom("connected(F)"));
  CHECK(query_probability(graph, conn, 4) == Rational(19, 32));

  const MlnModel contradiction = parse_mln("sig: A/1\nhard: forall x y. A(x) & ~A(x)\n");
  CHECK_THROWS_AS(query_probability(contradiction, MlnQuery{}, 2), ZeroPartition);
  // partition * probability = partition with the query
  const MlnModel sm = preset("smokers");
  MlnQuery q;
  q.constraints.push_back(CardinalityConstraint::parse("|S| >= 2", sm.signature));
  MlnModel with = sm;
  with.constraints.push_back(q.constraints[0]);
  CHECK(query_probability(sm, q, 4) * partition(sm, 4) == partition(with, 4));
}

TEST_CASE("statistic distributions") {
  const Distribution a = statistic_distribution(parse_mln("sig: A/1"), "A", 3);
  CHECK(a.mass.at(0) == Rational(1, 8));
  CHECK(a.mass.at(1) == Rational(3, 8));
  CHECK(a.mass.at(2) == Rational(3, 8));
  CHECK(a.mass.at(3) == Rational(1, 8));
  CHECK(a.expectation == Rational(3, 2));

  const Distribution s = statistic_distribution(preset("smokers"), "S", 6);
  CHECK(total(s) == 1);
  CHECK(symmetric(s, 6));

  // Binary statistic: undirected edges under a soft edge weight are binomial.
  const Distribution r =
      statistic_distribution(parse_mln(std::string("sig: R/2\nhard: ") + test::kUndirected + "\n1/2 : R(x,y)\n"), "R", 3);
  CHECK(total(r) == 1);
  CHECK(r.mass.at(2) == Rational(48, 125));  // 3 r^2 / (1 + r^2)^3 with r = 1/2
}

TEST_CASE("smokers symmetry is exact and matches the oracle at n = 3") {
  for (const char* name : {"smokers", "smokers-connected", "smokers-card"}) {
    const MlnModel m = preset(name);
    const Distribution d = statistic_distribution(m, "S", 3);
    CHECK(total(d) == 1);
    CHECK(symmetric(d, 3));
    // Brute force over the original signature with the soft factors applied by hand.
    Rational brute_z(0);
    std::map<std::int64_t, Rational> brute;
    for_each_model(m.signature, m.hard, 3, [&](const Interpretation& omega) {
      for (const auto& ax : m.axioms)
        if (!check_axiom(omega, ax)) return;
      for (const auto& c : m.constraints)
        if (!satisfies(omega, c)) return;
      Rational w(1);
      for (std::uint32_t a = 0; a < 3; ++a) {
        if (omega.holds(0, a)) w *= 1;
        for (std::uint32_t b = 0; b < 3; ++b) {
          if (omega.holds(1, a, b)) w *= kR;
          if (!(omega.holds(0, a) && omega.holds(1, a, b)) || omega.holds(0, b)) w *= Rational(20085537, 1000000);
        }
      }
      brute[omega.cardinality(0)] += w;
      brute_z += w;
    });
    for (const auto& [k, v] : brute) CHECK(d.mass.at(k) == v / brute_z);
  }
}

TEST_CASE("sparsity under graph axioms") {
  const std::uint32_t n = 8;
  auto edges = [&](const char* name) { return statistic_distribution(preset(name), "R", n).expectation; };
  const Rational undirected = edges("graph-undirected");
  CHECK(edges("graph-forest") < undirected);
  CHECK(edges("graph-connected") > undirected);
  CHECK(edges("graph-dag") < edges("graph-directed"));
}

TEST_CASE("MLN text format") {
  const MlnModel m = parse_mln(
      "# comment\n"
      "sig: S/1, F/2\n"
      "hard: forall x y. ~F(x,x)\n"
      "hard: axiom dag(F)\n"
      "hard: card |F| <= n\n"
      "hard: forest(F)\n"
      "hard: |S| >= 1\n"
      "0.5 : S(x) # trailing comment\n"
      "3/4 : F(x,y) -> S(y)\n");
  CHECK(m.hard.clauses.size() == 1);
  CHECK(m.axioms.size() == 2);
  CHECK(m.constraints.size() == 2);
  REQUIRE(m.soft.size() == 2);
  CHECK(m.soft[0].weight == Rational(1, 2));

  CHECK_THROWS_AS(parse_mln("1 : A(x)\n"), ParseError);
  try {
    parse_mln("sig: A/1\n\n2 : B(x)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_mln("sig: A/1\n0 : A(x)\n"), ParseError);
  CHECK_THROWS_AS(parse_mln("sig: A/1\nA(x)\n"), ParseError);
  for (const auto& name : preset_names()) CHECK_NOTHROW(preset(name));
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}
