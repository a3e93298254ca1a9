#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wfomc/fo2.hpp"
#include "wfomc/oracle.hpp"

using namespace wfomc;

namespace {

const SymbolId wR = intern({"R", Polarity::Positive});
const SymbolId bR = intern({"R", Polarity::Negative});

WeightFunction symbolic_r() {
  WeightFunction wf;
  wf.make_symbolic("R", Polarity::Positive);
  wf.make_symbolic("R", Polarity::Negative);
  return wf;
}

}  // namespace

TEST_CASE("vector iteration") {
  CHECK(compositions(2, 2) == std::vector<CardinalityVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(bounded_vectors({1, 1}) == std::vector<CardinalityVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(compositions(0, 3) == std::vector<CardinalityVector>{{0, 0, 0}});
  CHECK(compositions(0, 0) == std::vector<CardinalityVector>{{}});
  CHECK(compositions(2, 0).empty());
  // C(n + u - 1, u - 1) compositions
  CHECK(compositions(6, 4).size() == 84);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("r-matrix") {
  const Signature sig = parse_signature("R/2");
  const TypeSpace space(sig);
  const Formula undirected = parse_formula("~R(x,x) & (R(x,y) -> R(y,x))", sig);
  const auto wf = symbolic_r();
  const WeightPolynomial expected =
      WeightPolynomial::symbol(wR) * WeightPolynomial::symbol(wR) + WeightPolynomial::symbol(bR) * WeightPolynomial::symbol(bR);
  const RMatrix r = r_matrix(space, undirected, Formula::top(), wf);
  CHECK(r.at(0, 0) == expected);

  const RMatrix zero = r_matrix(space, undirected, Formula::bottom(), wf);
  for (const auto& e : zero.entries) CHECK(e.is_zero());

  const Formula loopless = parse_formula("~R(x,x)", sig);
  const RMatrix cross = r_matrix(space, loopless, parse_formula("~R(y,x)", sig), WeightFunction{}, {0});
  REQUIRE(cross.u == 1);
  CHECK(cross.at(0, 0) == WeightPolynomial(2));
}

TEST_CASE("wfomc_k closed form") {
  const Signature a = parse_signature("A/1");
  CHECK(wfomc_k(a, Formula::top(), {1, 1}, WeightFunction{}) == WeightPolynomial(2));

  const Signature r = parse_signature("R/2");
  const Formula undirected = parse_formula("~R(x,x) & (R(x,y) -> R(y,x))", r);
  CHECK(wfomc_k(r, undirected, {3, 0}, WeightFunction{}) == WeightPolynomial(8));
  CHECK(wfomc_k(r, undirected, {0, 3}, WeightFunction{}).is_zero());  // R(x,x) type is invalid

  WeightFunction wf;
  wf.set("A", Rational(5), Rational(7));
  CHECK(wfomc_k(a, Formula::top(), {0, 1}, wf) == WeightPolynomial(5));  // type 1 = A(x)
  CHECK(wfomc_k(a, Formula::top(), {1, 0}, wf) == WeightPolynomial(7));
}

TEST_CASE("wfomc_n") {
  CHECK(wfomc_n(parse_signature("A/1"), Formula::top(), 5, WeightFunction{}) == WeightPolynomial(32));
  CHECK(wfomc_n(parse_signature("R/2"), Formula::top(), 2, WeightFunction{}) == WeightPolynomial(16));
  const Signature r = parse_signature("R/2");
  CHECK(wfomc_n(r, parse_formula("~R(x,x) & (R(x,y) -> R(y,x))", r), 5, WeightFunction{}) ==
        WeightPolynomial(1024));
  CHECK(wfomc_n(r, Formula::top(), 0, WeightFunction{}) == WeightPolynomial(1));
  // Symbolic undirected graphs: (w^2 + wbar^2)^C(n,2)
  const auto p = wfomc_n(r, parse_formula("~R(x,x) & (R(x,y) -> R(y,x))", r), 4, symbolic_r());
  const auto base = WeightPolynomial::symbol(wR) * WeightPolynomial::symbol(wR) +
                    WeightPolynomial::symbol(bR) * WeightPolynomial::symbol(bR);
  CHECK(p == WeightPolynomial::pow(base, 6) * WeightPolynomial::pow(WeightPolynomial::symbol(bR), 4));
}

TEST_CASE("wfomc_n equals brute force on random sentences (property)") {
  const Signature sig = parse_signature("A/1, R/2");
  std::mt19937 rng(21);
  const char* atoms[] = {"A(x)", "A(y)", "R(x,y)", "R(y,x)", "R(x,x)", "~R(y,y)"};
  auto random_formula = [&](auto& self, int depth) -> std::string {
    if (depth == 0 || rng() % 3 == 0) return atoms[rng() % 6];
    const char* ops[] = {" & ", " | ", " -> ", " <-> "};
    return "(" + self(self, depth - 1) + ops[rng() % 4] + self(self, depth - 1) + ")";
  };
  const char* weights[][4] = {{"1", "1", "1", "1"}, {"2", "3", "1/2", "5"}, {"-1", "1", "3", "-2"}};
  for (int trial = 0; trial < 30; ++trial) {
    const std::string text = random_formula(random_formula, 3);
    const auto* w = weights[trial % 3];
    const auto p = test::problem("A/1, R/2", "forall x y. " + text, {}, {}, {{"A", w[0], w[1]}, {"R", w[2], w[3]}});
    const Formula phi = p.sentence.universal_matrix();
    for (std::uint32_t n = 0; n <= 3; ++n) {
      const Rational brute = enumerate_weighted(p, n);
      CHECK_MESSAGE(wfomc_n(sig, phi, n, p.weights) == WeightPolynomial(brute), text << " n=" << n);
    }
  }
}
