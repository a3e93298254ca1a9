#pragma once

// Brute-force ground truth: enumerate every interpretation on a tiny domain.

#include <cstdint>
#include <functional>
#include <vector>

#include "wfomc/axioms.hpp"
#include "wfomc/cardinality.hpp"
#include "wfomc/logic.hpp"
#include "wfomc/reductions.hpp"
#include "wfomc/weights.hpp"

namespace wfomc {

/// Largest number of ground atoms the oracle will enumerate.
inline constexpr std::size_t kOracleAtomCap = 28;

/// Ground atoms are ordered by predicate, then lexicographically by arguments.
class Interpretation {
 public:
  Interpretation(Signature sig, std::uint32_t n);

  const Signature& signature() const { return sig_; }
  std::uint32_t domain_size() const { return n_; }
  std::size_t atom_count() const { return truth_.size(); }

  std::size_t atom_index(std::size_t predicate, std::uint32_t a, std::uint32_t b = 0) const;
  bool holds(std::size_t predicate, std::uint32_t a, std::uint32_t b = 0) const {
    return truth_[atom_index(predicate, a, b)];
  }
  void set(std::size_t predicate, std::uint32_t a, std::uint32_t b, bool v) { truth_[atom_index(predicate, a, b)] = v; }
  bool bit(std::size_t atom) const { return truth_[atom]; }
  void set_bit(std::size_t atom, bool v) { truth_[atom] = v; }

  /// Number of true ground atoms of a predicate.
  std::int64_t cardinality(std::size_t predicate) const;

 private:
  Signature sig_;
  std::uint32_t n_;
  std::vector<std::size_t> offset_;
  std::vector<bool> truth_;
};

bool satisfies(const Interpretation& omega, const Sentence& s);
bool satisfies(const Interpretation& omega, const CardinalityConstraint& gamma);
/// Graph-algorithmic check of an axiom on the edge predicate's digraph.
bool check_axiom(const Interpretation& omega, const AxiomSpec& a);
/// Product of per-literal weights; all weights must be numeric.
Rational weight(const Interpretation& omega, const WeightFunction& wf);
/// The interpretation induced on `subset`, relabeled 0..|subset|-1 in order.
Interpretation project(const Interpretation& omega, const std::vector<std::uint32_t>& subset);

/// Calls `fn` on every model of the sentence (forall-x-y clauses are used
/// to prune partial assignments). Throws OracleCapExceeded above the cap.
void for_each_model(const Signature& sig, const Sentence& s, std::uint32_t n,
                    const std::function<void(const Interpretation&)>& fn);

/// Weighted count of models satisfying the sentence, axioms and constraints.
Rational enumerate_weighted(const Signature& sig, const Sentence& s, const std::vector<AxiomSpec>& axioms,
                            const std::vector<CardinalityConstraint>& constraints, std::uint32_t n,
                            const WeightFunction& wf);
Rational enumerate_weighted(const Problem& p, std::uint32_t n);

}  // namespace wfomc
