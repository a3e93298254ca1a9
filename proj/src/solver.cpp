#include <stdexcept>

#include "wfomc/reductions.hpp"

namespace wfomc {

void solve_terms(const ReductionResult& r, std::uint32_t n, TermVisitor& visitor, const SolveOptions& options) {
  if (!r.sentence.universal()) throw std::logic_error("solve_terms needs a skolemized problem");
  const Signature& sig = r.signature;
  const Formula phi = r.sentence.universal_matrix();
  const CardinalityConstraint gamma = CardinalityConstraint::conjunction(r.constraints);

  WeightFunction wf = r.weights;
  std::map<SymbolId, Rational> values;
  DegreeCaps caps;
  const auto bounds = gamma.upper_bounds(sig, n);

  auto symbolize = [&](const std::string& p, bool substitute_back) {
    const SymbolId s = intern({p, Polarity::Positive});
    const auto entry = wf.get(p);
    if (const auto* q = std::get_if<Rational>(&entry.w)) {
      if (substitute_back) values[s] = *q;
      wf.set(p, WeightValue(s), entry.wbar);
    } else if (std::get<SymbolId>(entry.w) != s) {
      throw std::invalid_argument("symbolic weight of " + p + " must be w(" + p + ")");
    }
    return s;
  };

  for (const auto& p : gamma.predicates()) {
    auto i = sig.find(p);
    if (!i) throw std::invalid_argument("cardinality constraint mentions unknown predicate " + p);
    if (sig[*i].arity != 2) continue;  // unary cardinalities come from the 1-type vector
    const SymbolId s = symbolize(p, !options.keep_symbolic.count(p));
    if (auto b = bounds.find(p); b != bounds.end()) caps[s] = static_cast<std::uint32_t>(b->second);
  }
  for (const auto& p : options.keep_symbolic) {
    auto i = sig.find(p);
    if (!i) throw std::invalid_argument("unknown predicate " + p);
    if (sig[*i].arity == 2 && !gamma.predicates().count(p)) symbolize(p, false);
  }

  std::size_t edge = 0;
  if (r.axiom != BaseAxiom::None) edge = sig.index_of(r.edge);
  AxiomEngine engine(sig, phi, wf, r.axiom, edge, caps, n);

  const auto& types = engine.types();
  const TypeSpace& space = engine.space();
  std::vector<std::size_t> unary;
  for (std::size_t p = 0; p < sig.size(); ++p)
    if (sig[p].arity == 1) unary.push_back(p);

  bool unary_only = true;
  for (const auto& p : gamma.predicates())
    if (sig[sig.index_of(p)].arity != 1) unary_only = false;

  for (const auto& k : compositions(n, types.size())) {
    PredicateCardinality mu;
    for (auto p : unary) {
      std::int64_t c = 0;
      for (std::size_t a = 0; a < types.size(); ++a)
        if (space.unary(types[a], p)) c += k[a];
      mu[sig[p].name] = c;
    }
    if (unary_only && !gamma.evaluate(mu, n)) continue;
    WeightPolynomial value = engine.count_k(k);
    if (value.is_zero()) continue;
    value = filter_cardinality(value, gamma, n, mu);
    if (!values.empty()) value = value.substitute(values);
    visitor.visit(mu, value);
  }
}

namespace {

struct Summer : TermVisitor {
  WeightPolynomial sum;
  void visit(const PredicateCardinality&, const WeightPolynomial& v) override { sum += v; }
};

}  // namespace

WeightPolynomial solve_polynomial(const Problem& p, std::uint32_t n, const SolveOptions& options) {
  const ReductionResult r = reduce(p);
  Summer s;
  solve_terms(r, n, s, options);
  return s.sum;
}

Rational solve(const Problem& p, std::uint32_t n) {
  const WeightPolynomial poly = solve_polynomial(p, n);
  if (!poly.is_constant()) throw std::invalid_argument("result still depends on symbolic weights: " + poly.to_string());
  return poly.constant_term();
}

}  // namespace wfomc
