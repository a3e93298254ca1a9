#include <doctest.h>

#include <random>

#include "wfomc/cardinality.hpp"
#include "wfomc/error.hpp"
#include "wfomc/fo2.hpp"
#include "wfomc/polynomial.hpp"
#include "wfomc/weights.hpp"

using namespace wfomc;

namespace {

const SymbolId wR = intern({"R", Polarity::Positive});
const SymbolId bR = intern({"R", Polarity::Negative});
const SymbolId wS = intern({"S", Polarity::Positive});

WeightPolynomial P(SymbolId s) { return WeightPolynomial::symbol(s); }

WeightPolynomial random_poly(std::mt19937& rng) {
  std::vector<WeightPolynomial::Term> terms;
  const SymbolId syms[] = {wR, bR, wS};
  const int n = static_cast<int>(rng() % 4);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (auto s : syms)
      if (rng() % 2) m = m * Monomial::of(s, rng() % 3 + 1);
    terms.emplace_back(m, Rational(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(rng() % 3 + 1)));
  }
  return WeightPolynomial::from_terms(terms);
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(5)) == "5.000000");
}

TEST_CASE("polynomial arithmetic") {
  const WeightPolynomial s = P(wR) + P(bR);
  CHECK(s * s == P(wR) * P(wR) + WeightPolynomial(2) * P(wR) * P(bR) + P(bR) * P(bR));
  CHECK((s * WeightPolynomial()).is_zero());
  const WeightPolynomial sq = P(wR) * P(wR) + P(bR) * P(bR);
  CHECK(WeightPolynomial::pow(sq, 3).evaluate({{wR, 1}, {bR, 1}}) == 8);
  CHECK(WeightPolynomial::pow(s, 0) == WeightPolynomial(1));
  CHECK((s - s).is_zero());
  CHECK(s.scaled(Rational(1, 2)).evaluate({{wR, 1}, {bR, 1}}) == 1);
  CHECK(symbol_name(wR) == "w(R)");
  CHECK(symbol_name(bR) == "wbar(R)");
  CHECK_THROWS_AS(s.evaluate({{wR, 1}}), std::out_of_range);
  CHECK(s.substitute({{wR, 3}}) == WeightPolynomial(3) + P(bR));
}

TEST_CASE("evaluation") {
  CHECK((P(wR) + P(bR)).evaluate({{wR, 1}, {bR, 1}}) == 2);
  const SymbolId bS = intern({"S", Polarity::Negative});
  CHECK(P(bS).evaluate({{bS, -1}}) == -1);
  const WeightPolynomial p = WeightPolynomial(5) + P(wR) * P(bR);
  CHECK(p.evaluate({{wR, 0}, {bR, 0}}) == 5);
}

TEST_CASE("ring laws (property)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(WeightPolynomial::pow(a, 3) == a * a * a);
    const std::map<SymbolId, Rational> at = {{wR, Rational(2, 3)}, {bR, -2}, {wS, 5}};
    CHECK((a * b + c).evaluate(at) == a.evaluate(at) * b.evaluate(at) + c.evaluate(at));
  }
}

TEST_CASE("truncation is a ring homomorphism (property)") {
  std::mt19937 rng(12);
  const DegreeCaps caps = {{wR, 3}, {wS, 2}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK(WeightPolynomial::mul(a, b, &caps) == (a * b).truncated(caps));
    CHECK(WeightPolynomial::pow(a, 4, &caps) == WeightPolynomial::pow(a, 4).truncated(caps));
  }
}

TEST_CASE("extract and by_exponent partition the terms") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng);
    WeightPolynomial back;
    for (const auto& [e, coef] : a.by_exponent(wR)) {
      CHECK(coef == a.extract(wR, e));
      back += coef * WeightPolynomial::term(Monomial::of(wR, e), 1);
    }
    CHECK(back == a);
  }
}

TEST_CASE("monomial cardinality") {
  CHECK(monomial_cardinality(Monomial::of(wR, 4) * Monomial::of(bR, 8)) == PredicateCardinality{{"R", 4}});
  CHECK(monomial_cardinality(Monomial()).empty());
  CHECK(monomial_cardinality(Monomial::of(wR, 3) * Monomial::of(wS, 1)) ==
        PredicateCardinality{{"R", 3}, {"S", 1}});
}

TEST_CASE("cardinality constraints") {
  const Signature sig = parse_signature("R/2, A/1, B/1");
  const auto c = CardinalityConstraint::parse("|R| = 2*n - 2", sig);
  CHECK(c.evaluate({{"R", 8}}, 5));
  CHECK_FALSE(c.evaluate({{"R", 7}}, 5));
  const auto d = CardinalityConstraint::parse("|A| + |B| <= n and not (|A| = 0 or |B| = 0)", sig);
  CHECK(d.evaluate({{"A", 1}, {"B", 2}}, 3));
  CHECK_FALSE(d.evaluate({{"A", 0}, {"B", 2}}, 3));
  CHECK_FALSE(d.evaluate({{"A", 2}, {"B", 2}}, 3));
  CHECK(d.predicates() == std::set<std::string>{"A", "B"});
  CHECK(CardinalityConstraint::parse("|R| = |A|", sig).evaluate({{"R", 3}, {"A", 3}}, 9));
  CHECK(CardinalityConstraint::parse("3*|R| != n*2 + 1", sig).evaluate({{"R", 1}}, 2));
  CHECK(CardinalityConstraint::parse("(|R| >= 1) && (|R| < 3)", sig).evaluate({{"R", 2}}, 4));
  CHECK(CardinalityConstraint::parse("true", sig).is_true());
  CHECK_THROWS_AS(CardinalityConstraint::parse("|Q| = 1", sig), ParseError);
  CHECK_THROWS_AS(CardinalityConstraint::parse("|R| * |A| = 1", sig), ParseError);
  CHECK_THROWS_AS(CardinalityConstraint::parse("|R| = ", sig), ParseError);

  const auto bounds = CardinalityConstraint::parse("|R| <= 2*n - 2 & |A| = 1 & (|B| = 1 || |B| = 2)", sig)
                          .upper_bounds(sig, 5);
  CHECK(bounds.at("R") == 8);
  CHECK(bounds.at("A") == 1);
  CHECK_FALSE(bounds.count("B"));
}

TEST_CASE("filtering by cardinality") {
  const WeightPolynomial p = WeightPolynomial::pow(P(wR) * P(wR) + P(bR) * P(bR), 3);
  const auto two = CardinalityConstraint::parse("|R| = 2");
  CHECK(filter_cardinality(p, two, 3) ==
        WeightPolynomial::term(Monomial::of(wR, 2) * Monomial::of(bR, 4), 3));
  CHECK(filter_cardinality(p, CardinalityConstraint(), 3) == p);
  CHECK(filter_cardinality(p, CardinalityConstraint::parse("|R| = 1"), 3).is_zero());
  // Coefficients of the filtered undirected-graph polynomial are C(C(n,2), k).
  const WeightPolynomial p4 = WeightPolynomial::pow(P(wR) * P(wR) + P(bR) * P(bR), 6);
  for (long d = 0; d <= 6; ++d) {
    const auto f = filter_cardinality(p4, CardinalityConstraint::parse("|R| = " + std::to_string(2 * d)), 4);
    CHECK(f.evaluate({{wR, 1}, {bR, 1}}) == Rational(binomial(6, d)));
  }
}

TEST_CASE("weights of 1-types and 2-tables") {
  const Signature r = parse_signature("R/2");
  const TypeSpace sr(r);
  WeightFunction unit;
  CHECK(one_type_weight(sr, 1, unit) == WeightPolynomial(1));
  CHECK(unit.get("R").w == WeightValue(Rational(1)));

  const Signature a = parse_signature("A/1");
  const TypeSpace sa(a);
  WeightFunction neg;
  neg.set("A", Rational(1), Rational(-1));
  CHECK(one_type_weight(sa, 0, neg) == WeightPolynomial(-1));

  WeightFunction sym;
  sym.make_symbolic("R", Polarity::Positive);
  sym.make_symbolic("R", Polarity::Negative);
  CHECK(two_table_weight(sr, 2, sym) == P(wR) * P(bR));
  CHECK(two_table_weight(sr, 3, sym) == P(wR) * P(wR));
  CHECK_FALSE(sym.numeric());
  CHECK(neg.numeric());
}
