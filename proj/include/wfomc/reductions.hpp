#pragma once

// WFOMC-preserving rewrites: skolemization of forall-exists clauses and the
// compilation of tree, directed tree, directed forest and source/sink axioms
// to a base axiom (DAG, Connected, Forest) plus cardinality constraints.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wfomc/axioms.hpp"
#include "wfomc/cardinality.hpp"
#include "wfomc/logic.hpp"
#include "wfomc/splitting.hpp"
#include "wfomc/weights.hpp"

namespace wfomc {

/// A counting problem as the user states it.
struct Problem {
  Signature signature;
  Sentence sentence;
  std::vector<AxiomSpec> axioms;
  std::vector<CardinalityConstraint> constraints;
  WeightFunction weights;
};

/// A problem after reduction. Once `skolemize` has run the sentence holds
/// only forall-x-y clauses.
struct ReductionResult {
  Signature signature;
  Sentence sentence;
  BaseAxiom axiom = BaseAxiom::None;
  std::string edge;  // predicate the base axiom is attached to
  std::vector<CardinalityConstraint> constraints;
  WeightFunction weights;
  std::vector<std::string> fresh;  // predicates added by the reductions
  std::vector<std::string> notes;  // auto-repairs and other remarks
};

/// Starting point for the rewrites: the problem without its axioms.
ReductionResult initial_result(const Problem& p);

/// Replaces each forall x. exists y. psi clause by forall x y. S(x) | ~psi
/// with a fresh S weighted (1, -1).
ReductionResult skolemize(ReductionResult r);

/// Base axioms attached as they are.
ReductionResult attach_axiom(ReductionResult r, BaseAxiom axiom, const std::string& edge);
/// Tree(R) becomes Connected(R) and |R| = 2n - 2.
ReductionResult reduce_tree(ReductionResult r, const std::string& edge);
/// DirectedTree(R, Root) becomes DAG(R) with Root(x) -> ~R(y,x),
/// forall x. exists y. Root(x) | R(y,x), |Root| = 1 and |R| = n - |Root|.
ReductionResult reduce_directed_tree(ReductionResult r, const std::string& edge, const std::string& root);
/// DirectedForest(R) becomes DAG(R) with a fresh P: R(y,x) -> P(x),
/// forall x. exists y. ~P(x) | R(y,x), and |R| = |P|.
ReductionResult reduce_directed_forest(ReductionResult r, const std::string& edge);
/// DAG(R) whose sources and sinks are exactly Source and Sink.
ReductionResult reduce_source_sink(ReductionResult r, const std::string& edge, const std::string& source,
                                   const std::string& sink);

/// Applies every axiom of the problem, then skolemizes. Throws
/// UnsupportedFragment when more than one base axiom would result.
ReductionResult reduce(const Problem& p);

/// Filters a symbolic count by gamma and evaluates it at `values`.
Rational apply_cardinality(const WeightPolynomial& result, const CardinalityConstraint& gamma, std::int64_t n,
                           const std::map<SymbolId, Rational>& values, const PredicateCardinality& fixed = {});

// ---------------------------------------------------------------- solving

struct SolveOptions {
  /// Binary predicates whose positive weight should stay symbolic in the
  /// result (their numeric value is not substituted).
  std::set<std::string> keep_symbolic;
};

/// Per-vector contribution after cardinality filtering: `unary` holds |P|
/// for every unary predicate, read off the 1-type vector.
struct TermVisitor {
  virtual ~TermVisitor() = default;
  virtual void visit(const PredicateCardinality& unary, const WeightPolynomial& value) = 0;
};

/// Runs the engine on a reduced problem and feeds each vector's filtered
/// contribution to the visitor. Numeric weights are substituted except for
/// symbols listed in `options.keep_symbolic` or already symbolic in the input.
void solve_terms(const ReductionResult& r, std::uint32_t n, TermVisitor& visitor, const SolveOptions& options = {});

/// Polynomial-valued WFOMC of a problem.
WeightPolynomial solve_polynomial(const Problem& p, std::uint32_t n, const SolveOptions& options = {});

/// WFOMC of a problem with numeric weights.
Rational solve(const Problem& p, std::uint32_t n);

}  // namespace wfomc
