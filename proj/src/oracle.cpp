#include "wfomc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc {

Interpretation::Interpretation(Signature sig, std::uint32_t n) : sig_(std::move(sig)), n_(n) {
  std::size_t total = 0;
  for (const auto& p : sig_.predicates()) {
    offset_.push_back(total);
    total += p.arity == 1 ? n : std::size_t{n} * n;
  }
  truth_.assign(total, false);
}

std::size_t Interpretation::atom_index(std::size_t predicate, std::uint32_t a, std::uint32_t b) const {
  return offset_[predicate] + (sig_[predicate].arity == 1 ? a : std::size_t{a} * n_ + b);
}

std::int64_t Interpretation::cardinality(std::size_t predicate) const {
  const std::size_t size = sig_[predicate].arity == 1 ? n_ : std::size_t{n_} * n_;
  std::int64_t c = 0;
  for (std::size_t i = 0; i < size; ++i) c += truth_[offset_[predicate] + i];
  return c;
}

namespace {

bool ground_eval(const Interpretation& omega, const Formula& f, std::uint32_t a, std::uint32_t b) {
  return f.evaluate([&](const Atom& at) {
    const std::uint32_t e0 = at.args[0] == Var::X ? a : b;
    if (at.arity == 1) return omega.holds(at.predicate, e0);
    const std::uint32_t e1 = at.args[1] == Var::X ? a : b;
    return omega.holds(at.predicate, e0, e1);
  });
}

PredicateCardinality cardinalities(const Interpretation& omega) {
  PredicateCardinality mu;
  for (std::size_t p = 0; p < omega.signature().size(); ++p) mu[omega.signature()[p].name] = omega.cardinality(p);
  return mu;
}

struct Digraph {
  std::uint32_t n;
  std::vector<std::vector<bool>> adj;

  bool symmetric() const {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (adj[a][b] != adj[b][a]) return false;
    return true;
  }
  bool loopless() const {
    for (std::uint32_t a = 0; a < n; ++a)
      if (adj[a][a]) return false;
    return true;
  }
  std::uint32_t indegree(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (std::uint32_t a = 0; a < n; ++a) d += adj[a][v];
    return d;
  }
  std::uint32_t outdegree(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (std::uint32_t b = 0; b < n; ++b) d += adj[v][b];
    return d;
  }
  /// Kahn's algorithm.
  bool acyclic() const {
    std::vector<std::uint32_t> in(n);
    for (std::uint32_t v = 0; v < n; ++v) in[v] = indegree(v);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t v = 0; v < n; ++v)
      if (!in[v]) stack.push_back(v);
    std::uint32_t seen = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++seen;
      for (std::uint32_t w = 0; w < n; ++w)
        if (adj[v][w] && --in[w] == 0) stack.push_back(w);
    }
    return seen == n;
  }
  /// Components of the underlying undirected graph.
  std::uint32_t components() const {
    std::vector<bool> seen(n, false);
    std::uint32_t count = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++count;
      std::vector<std::uint32_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::uint32_t w = 0; w < n; ++w) {
          if ((adj[v][w] || adj[w][v]) && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    return count;
  }
  std::uint32_t undirected_edges() const {
    std::uint32_t e = 0;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b) e += adj[a][b];
    return e;
  }
};

Digraph graph_of(const Interpretation& omega, std::size_t edge) {
  const auto n = omega.domain_size();
  Digraph g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.adj[a][b] = omega.holds(edge, a, b);
  return g;
}

bool undirected(const Digraph& g) { return g.symmetric() && g.loopless(); }

bool forest(const Digraph& g) {
  // An undirected graph is a forest iff |E| = |V| - #components.
  return undirected(g) && g.undirected_edges() + g.components() == g.n;
}

bool connected(const Digraph& g) { return undirected(g) && g.components() == 1; }

}  // namespace

bool satisfies(const Interpretation& omega, const Sentence& s) {
  const auto n = omega.domain_size();
  for (const auto& c : s.clauses) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (c.quantifier == Quantifier::ForallXY) {
        for (std::uint32_t b = 0; b < n; ++b)
          if (!ground_eval(omega, c.matrix, a, b)) return false;
      } else {
        bool found = false;
        for (std::uint32_t b = 0; b < n && !found; ++b) found = ground_eval(omega, c.matrix, a, b);
        if (!found) return false;
      }
    }
  }
  return true;
}

bool satisfies(const Interpretation& omega, const CardinalityConstraint& gamma) {
  return gamma.evaluate(cardinalities(omega), omega.domain_size());
}

bool check_axiom(const Interpretation& omega, const AxiomSpec& a) {
  const Signature& sig = omega.signature();
  const Digraph g = graph_of(omega, sig.index_of(a.edge));
  switch (a.kind) {
    case AxiomKind::Dag: return g.acyclic();
    case AxiomKind::Connected: return connected(g);
    case AxiomKind::Forest: return forest(g);
    case AxiomKind::Tree: return forest(g) && connected(g);
    case AxiomKind::DirectedForest: {
      if (!g.acyclic()) return false;
      for (std::uint32_t v = 0; v < g.n; ++v)
        if (g.indegree(v) > 1) return false;
      return true;
    }
    case AxiomKind::DirectedTree: {
      if (!g.acyclic()) return false;
      const std::size_t root = sig.index_of(a.root);
      std::uint32_t roots = 0;
      for (std::uint32_t v = 0; v < g.n; ++v) {
        const auto d = g.indegree(v);
        if (d > 1) return false;
        if (omega.holds(root, v) != (d == 0)) return false;
        roots += d == 0;
      }
      return roots == 1;
    }
    case AxiomKind::SourceSinkDag: {
      if (!g.acyclic()) return false;
      const std::size_t so = sig.index_of(a.source), si = sig.index_of(a.sink);
      for (std::uint32_t v = 0; v < g.n; ++v) {
        if (omega.holds(so, v) != (g.indegree(v) == 0)) return false;
        if (omega.holds(si, v) != (g.outdegree(v) == 0)) return false;
      }
      return true;
    }
  }
  return false;
}

Rational weight(const Interpretation& omega, const WeightFunction& wf) {
  Rational w(1);
  const Signature& sig = omega.signature();
  for (std::size_t p = 0; p < sig.size(); ++p) {
    const auto e = wf.get(sig[p].name);
    const auto* pos = std::get_if<Rational>(&e.w);
    const auto* neg = std::get_if<Rational>(&e.wbar);
    if (!pos || !neg) throw std::invalid_argument("the oracle needs numeric weights");
    const std::int64_t t = omega.cardinality(p);
    const std::int64_t all = sig[p].arity == 1 ? omega.domain_size() : std::int64_t{omega.domain_size()} * omega.domain_size();
    for (std::int64_t i = 0; i < t; ++i) w *= *pos;
    for (std::int64_t i = t; i < all; ++i) w *= *neg;
  }
  return w;
}

Interpretation project(const Interpretation& omega, const std::vector<std::uint32_t>& subset) {
  Interpretation out(omega.signature(), static_cast<std::uint32_t>(subset.size()));
  const Signature& sig = omega.signature();
  for (std::size_t p = 0; p < sig.size(); ++p) {
    for (std::uint32_t a = 0; a < subset.size(); ++a) {
      if (sig[p].arity == 1) {
        out.set(p, a, 0, omega.holds(p, subset[a]));
      } else {
        for (std::uint32_t b = 0; b < subset.size(); ++b) out.set(p, a, b, omega.holds(p, subset[a], subset[b]));
      }
    }
  }
  return out;
}

namespace {

/// Largest ground-atom index that evaluating `f` at (a, b) reads, or -1.
long max_atom(const Interpretation& omega, const Formula& f, std::uint32_t a, std::uint32_t b) {
  if (f.kind() == Formula::Kind::Atom) {
    const Atom& at = f.as_atom();
    const std::uint32_t e0 = at.args[0] == Var::X ? a : b;
    const std::uint32_t e1 = at.arity == 2 ? (at.args[1] == Var::X ? a : b) : 0;
    return static_cast<long>(omega.atom_index(at.predicate, e0, e1));
  }
  long m = -1;
  for (const auto& c : f.children()) m = std::max(m, max_atom(omega, c, a, b));
  return m;
}

struct Check {
  const Formula* matrix;
  bool existential;
  std::uint32_t a, b;  // b unused for existential checks
};

}  // namespace

void for_each_model(const Signature& sig, const Sentence& s, std::uint32_t n,
                    const std::function<void(const Interpretation&)>& fn) {
  Interpretation omega(sig, n);
  const std::size_t atoms = omega.atom_count();
  if (atoms > kOracleAtomCap)
    throw OracleCapExceeded("oracle refuses " + std::to_string(atoms) + " ground atoms (cap " +
                            std::to_string(kOracleAtomCap) + ")");
  // Attach each grounding to the last atom it reads; groundings reading no
  // atom are checked before the search starts.
  std::vector<std::vector<Check>> at(atoms + 1);
  for (const auto& c : s.clauses) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (c.quantifier == Quantifier::ForallXY) {
        for (std::uint32_t b = 0; b < n; ++b) {
          const long m = max_atom(omega, c.matrix, a, b);
          at[m < 0 ? atoms : static_cast<std::size_t>(m)].push_back({&c.matrix, false, a, b});
        }
      } else {
        long m = -1;
        for (std::uint32_t b = 0; b < n; ++b) m = std::max(m, max_atom(omega, c.matrix, a, b));
        at[m < 0 ? atoms : static_cast<std::size_t>(m)].push_back({&c.matrix, true, a, 0});
      }
    }
  }
  auto ok = [&](const std::vector<Check>& checks) {
    for (const auto& ch : checks) {
      if (ch.existential) {
        bool found = false;
        for (std::uint32_t b = 0; b < n && !found; ++b) found = ground_eval(omega, *ch.matrix, ch.a, b);
        if (!found) return false;
      } else if (!ground_eval(omega, *ch.matrix, ch.a, ch.b)) {
        return false;
      }
    }
    return true;
  };
  if (!ok(at[atoms])) return;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == atoms) {
      fn(omega);
      return;
    }
    for (int v = 0; v < 2; ++v) {
      omega.set_bit(i, v == 1);
      if (ok(at[i])) dfs(i + 1);
    }
    omega.set_bit(i, false);
  };
  dfs(0);
}

Rational enumerate_weighted(const Signature& sig, const Sentence& s, const std::vector<AxiomSpec>& axioms,
                            const std::vector<CardinalityConstraint>& constraints, std::uint32_t n,
                            const WeightFunction& wf) {
  Signature full = sig;
  for (const auto& a : axioms) {
    if (a.kind != AxiomKind::SourceSinkDag) continue;
    if (!full.contains(a.source)) full.add({a.source, 1});
    if (!full.contains(a.sink)) full.add({a.sink, 1});
  }
  for (const auto& a : axioms) check_axiom(a, full);
  const auto gamma = CardinalityConstraint::conjunction(constraints);
  Rational sum(0);
  for_each_model(full, s, n, [&](const Interpretation& omega) {
    for (const auto& a : axioms)
      if (!check_axiom(omega, a)) return;
    if (!satisfies(omega, gamma)) return;
    sum += weight(omega, wf);
  });
  return sum;
}

Rational enumerate_weighted(const Problem& p, std::uint32_t n) {
  return enumerate_weighted(p.signature, p.sentence, p.axioms, p.constraints, n, p.weights);
}

}  // namespace wfomc
