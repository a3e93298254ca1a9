#pragma once

// Counting by splitting: memoized recursions over cardinality vectors for
// the DAG, connectivity and forest axioms, plus their pure-counting
// specializations used as cross-checks.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "wfomc/fo2.hpp"
#include "wfomc/logic.hpp"
#include "wfomc/weights.hpp"

namespace wfomc {

enum class BaseAxiom { None, Dag, Connected, Forest };

using VectorFn = std::function<WeightPolynomial(const CardinalityVector&)>;

/// For every m = 0..|k|: the sum over k' + k'' = k with |k'| = m of
/// f1(k') * f2(k'') * prod_{i,j} r_ij^(k'_i k''_j). Entry m of the result.
std::vector<WeightPolynomial> split_all(const VectorFn& f1, const VectorFn& f2, CrossFactor& cross,
                                        const CardinalityVector& k, const DegreeCaps* caps = nullptr);

/// Single block size m (1 <= m <= |k|).
WeightPolynomial split_sum(const VectorFn& f1, const VectorFn& f2, const RMatrix& r, const CardinalityVector& k,
                           std::uint32_t m);

/// WFOMC of forall x y. phi under one base axiom on `edge`, per cardinality
/// vector over the valid 1-types of phi. The antireflexivity (and, for
/// Connected/Forest, symmetry) precondition is conjoined to phi.
class AxiomEngine {
 public:
  /// `n_max` bounds the domain sizes that will be asked for; it is only used
  /// to size the degree caps of internal tracking symbols.
  AxiomEngine(const Signature& sig, const Formula& phi, const WeightFunction& wf, BaseAxiom axiom,
              std::size_t edge, DegreeCaps caps, std::uint32_t n_max);
  ~AxiomEngine();
  AxiomEngine(const AxiomEngine&) = delete;
  AxiomEngine& operator=(const AxiomEngine&) = delete;

  const TypeSpace& space() const;
  /// Valid 1-types; vectors passed to count_k are indexed by this list.
  const std::vector<std::size_t>& types() const;
  const Formula& phi() const;

  WeightPolynomial count_k(const CardinalityVector& k);
  WeightPolynomial count_n(std::uint32_t n);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrappers over the full list of 1-types of `sig`.
WeightPolynomial wfomc_dag_k(const Signature& sig, const Formula& phi, std::size_t edge,
                             const CardinalityVector& k, const WeightFunction& wf);
WeightPolynomial wfomc_connected_k(const Signature& sig, const Formula& phi, std::size_t edge,
                                   const CardinalityVector& k, const WeightFunction& wf);
WeightPolynomial wfomc_forest_k(const Signature& sig, const Formula& phi, std::size_t edge,
                                const CardinalityVector& k, const WeightFunction& wf);

/// Number of labeled DAGs on n nodes (bottom-up inclusion-exclusion).
Integer count_dags(std::uint32_t n);
/// Number of labeled connected graphs on n >= 1 nodes.
Integer count_connected(std::uint32_t n);
/// Number of labeled forests on n nodes.
Integer count_forests(std::uint32_t n);

/// Name of the internal symbol standing in for w(R) while trees are extracted.
std::string tracking_predicate(const std::string& edge);

}  // namespace wfomc
