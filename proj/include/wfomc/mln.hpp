#pragma once

// Markov logic networks on top of the counting engine: partition functions,
// query probabilities and distributions of predicate cardinalities.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wfomc/axioms.hpp"
#include "wfomc/cardinality.hpp"
#include "wfomc/logic.hpp"
#include "wfomc/polynomial.hpp"
#include "wfomc/reductions.hpp"

namespace wfomc {

struct SoftFormula {
  Rational weight;  // multiplicative, i.e. exp of the usual log-weight
  Formula formula;  // free variables among x, y
};

struct MlnModel {
  Signature signature;
  std::vector<SoftFormula> soft;
  Sentence hard;
  std::vector<AxiomSpec> axioms;
  std::vector<CardinalityConstraint> constraints;
};

/// Extra hard knowledge whose probability is asked for.
struct MlnQuery {
  Sentence sentence;
  std::vector<AxiomSpec> axioms;
  std::vector<CardinalityConstraint> constraints;
};

struct Distribution {
  std::map<std::int64_t, Rational> mass;
  Rational expectation;
};

/// Each soft formula (r, phi) gets a fresh predicate P of arity #free
/// variables, the clause forall x y. P <-> phi and weights w(P) = r,
/// wbar(P) = 1. All other predicates weigh (1, 1).
Problem compile(const MlnModel& m);

Rational partition(const MlnModel& m, std::uint32_t n);
/// Throws ZeroPartition when no world satisfies the hard constraints.
Rational query_probability(const MlnModel& m, const MlnQuery& q, std::uint32_t n);
/// Distribution of |P| (P unary or binary) under the model.
Distribution statistic_distribution(const MlnModel& m, const std::string& predicate, std::uint32_t n);

/// Text format, one item per line ('#' starts a comment):
///   sig: S/1, F/2
///   hard: <sentence> | axiom <axiom> | card <constraint>
///   <weight> : <formula>
/// Hard lines without a keyword are classified by their shape.
MlnModel parse_mln(std::string_view text);

/// Built-in models; see `preset_names`.
MlnModel preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace wfomc
