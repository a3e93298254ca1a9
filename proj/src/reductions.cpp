#include "wfomc/reductions.hpp"

#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc {

namespace {

std::string fresh_name(const Signature& sig, const std::string& prefix) {
  for (std::size_t i = 0;; ++i) {
    std::string name = prefix + std::to_string(i);
    if (!sig.contains(name)) return name;
  }
}

std::size_t add_fresh(ReductionResult& r, const std::string& prefix, int arity) {
  const std::string name = fresh_name(r.signature, prefix);
  r.fresh.push_back(name);
  return r.signature.add({name, arity});
}

std::size_t require(const Signature& sig, const std::string& name, int arity) {
  auto i = sig.find(name);
  if (!i) throw std::invalid_argument("unknown predicate " + name);
  if (sig[*i].arity != arity)
    throw std::invalid_argument("predicate " + name + " must have arity " + std::to_string(arity));
  return *i;
}

Formula atom1(std::size_t p, Var v) { return Formula::atom(p, v); }
Formula atom2(std::size_t p, Var a, Var b) { return Formula::atom(p, a, b); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }

void add_forall(ReductionResult& r, Formula f) { r.sentence.clauses.push_back({Quantifier::ForallXY, std::move(f)}); }
void add_exists(ReductionResult& r, Formula f) {
  r.sentence.clauses.push_back({Quantifier::ForallXExistsY, std::move(f)});
}

void add_constraint(ReductionResult& r, const std::string& text) {
  r.constraints.push_back(CardinalityConstraint::parse(text));
}

}  // namespace

ReductionResult initial_result(const Problem& p) {
  ReductionResult r;
  r.signature = p.signature;
  r.sentence = p.sentence;
  r.constraints = p.constraints;
  r.weights = p.weights;
  return r;
}

ReductionResult skolemize(ReductionResult r) {
  Sentence out;
  std::vector<Clause> pending = std::move(r.sentence.clauses);
  for (auto& c : pending) {
    if (c.quantifier == Quantifier::ForallXY) {
      out.clauses.push_back(std::move(c));
      continue;
    }
    const std::size_t s = add_fresh(r, "@sk", 1);
    r.weights.set(r.signature[s].name, Rational(1), Rational(-1));
    out.clauses.push_back({Quantifier::ForallXY, Formula::disjunction({atom1(s, Var::X), neg(c.matrix)})});
  }
  r.sentence = std::move(out);
  return r;
}

ReductionResult attach_axiom(ReductionResult r, BaseAxiom axiom, const std::string& edge) {
  require(r.signature, edge, 2);
  if (r.axiom != BaseAxiom::None && !(r.axiom == axiom && r.edge == edge))
    throw UnsupportedFragment("at most one graph axiom per problem is supported");
  r.axiom = axiom;
  r.edge = edge;
  return r;
}

ReductionResult reduce_tree(ReductionResult r, const std::string& edge) {
  r = attach_axiom(std::move(r), BaseAxiom::Connected, edge);
  add_constraint(r, "|" + edge + "| = 2*n - 2");
  return r;
}

ReductionResult reduce_directed_tree(ReductionResult r, const std::string& edge, const std::string& root) {
  const std::size_t e = require(r.signature, edge, 2);
  const std::size_t rt = require(r.signature, root, 1);
  r = attach_axiom(std::move(r), BaseAxiom::Dag, edge);
  add_forall(r, Formula::implies(atom1(rt, Var::X), neg(atom2(e, Var::Y, Var::X))));
  add_exists(r, Formula::disjunction({atom1(rt, Var::X), atom2(e, Var::Y, Var::X)}));
  add_constraint(r, "|" + root + "| = 1");
  add_constraint(r, "|" + edge + "| = n - |" + root + "|");
  return r;
}

ReductionResult reduce_directed_forest(ReductionResult r, const std::string& edge) {
  const std::size_t e = require(r.signature, edge, 2);
  r = attach_axiom(std::move(r), BaseAxiom::Dag, edge);
  const std::size_t p = add_fresh(r, "@p", 1);
  add_forall(r, Formula::implies(atom2(e, Var::Y, Var::X), atom1(p, Var::X)));
  add_exists(r, Formula::disjunction({neg(atom1(p, Var::X)), atom2(e, Var::Y, Var::X)}));
  add_constraint(r, "|" + edge + "| = |" + r.signature[p].name + "|");
  return r;
}

ReductionResult reduce_source_sink(ReductionResult r, const std::string& edge, const std::string& source,
                                   const std::string& sink) {
  const std::size_t e = require(r.signature, edge, 2);
  for (const auto* name : {&source, &sink}) {
    if (!r.signature.contains(*name)) {
      r.signature.add({*name, 1});
      r.notes.push_back("added unary predicate " + *name + " to the signature");
    }
  }
  const std::size_t so = require(r.signature, source, 1);
  const std::size_t si = require(r.signature, sink, 1);
  r = attach_axiom(std::move(r), BaseAxiom::Dag, edge);
  add_forall(r, Formula::implies(atom2(e, Var::Y, Var::X), neg(atom1(so, Var::X))));
  add_exists(r, Formula::disjunction({atom1(so, Var::X), atom2(e, Var::Y, Var::X)}));
  add_forall(r, Formula::implies(atom2(e, Var::X, Var::Y), neg(atom1(si, Var::X))));
  add_exists(r, Formula::disjunction({atom1(si, Var::X), atom2(e, Var::X, Var::Y)}));
  return r;
}

namespace {

/// Remarks on preconditions the engine will conjoin on its own.
void precondition_notes(ReductionResult& r) {
  if (r.axiom == BaseAxiom::None) return;
  const std::size_t e = r.signature.index_of(r.edge);
  const TypeSpace space(r.signature);
  const Formula phi = r.sentence.universal_matrix();
  bool reflexive = false, asymmetric = false;
  for (std::size_t i = 0; i < space.u(); ++i) {
    if (!space.valid(i, phi)) continue;
    if (space.reflexive(i, e)) reflexive = true;
    if (r.axiom == BaseAxiom::Dag) continue;
    for (std::size_t j = 0; j < space.u() && !asymmetric; ++j) {
      if (!space.valid(j, phi)) continue;
      for (std::size_t l = 0; l < space.b(); ++l) {
        if (space.forward(l, e) != space.backward(l, e) && space.is_consistent({i, j, l}, phi)) {
          asymmetric = true;
          break;
        }
      }
    }
  }
  if (reflexive) r.notes.push_back("conjoined forall x y. ~" + r.edge + "(x,x)");
  if (asymmetric) r.notes.push_back("conjoined forall x y. " + r.edge + "(x,y) -> " + r.edge + "(y,x)");
}

}  // namespace

ReductionResult reduce(const Problem& p) {
  ReductionResult r = initial_result(p);
  for (const auto& a : p.axioms) {
    check_axiom(a, r.signature);
    switch (a.kind) {
      case AxiomKind::Dag: r = attach_axiom(std::move(r), BaseAxiom::Dag, a.edge); break;
      case AxiomKind::Connected: r = attach_axiom(std::move(r), BaseAxiom::Connected, a.edge); break;
      case AxiomKind::Forest: r = attach_axiom(std::move(r), BaseAxiom::Forest, a.edge); break;
      case AxiomKind::Tree: r = reduce_tree(std::move(r), a.edge); break;
      case AxiomKind::DirectedTree: r = reduce_directed_tree(std::move(r), a.edge, a.root); break;
      case AxiomKind::DirectedForest: r = reduce_directed_forest(std::move(r), a.edge); break;
      case AxiomKind::SourceSinkDag: r = reduce_source_sink(std::move(r), a.edge, a.source, a.sink); break;
    }
  }
  r = skolemize(std::move(r));
  precondition_notes(r);
  return r;
}

Rational apply_cardinality(const WeightPolynomial& result, const CardinalityConstraint& gamma, std::int64_t n,
                           const std::map<SymbolId, Rational>& values, const PredicateCardinality& fixed) {
  // Predicates not fixed by the caller are read from the monomials, so they
  // must have been run with a symbolic positive weight.
  for (const auto& p : gamma.predicates()) {
    if (fixed.count(p)) continue;
    if (!values.count(intern({p, Polarity::Positive})))
      throw std::invalid_argument("constrained predicate " + p + " was run with a numeric weight");
  }
  return filter_cardinality(result, gamma, n, fixed).evaluate(values);
}

}  // namespace wfomc
