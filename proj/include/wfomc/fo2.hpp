#pragma once

// Closed-form WFOMC of forall x y. phi(x,y) at a fixed 1-type cardinality
// vector, summation over vectors, and the r-matrix used when splitting.

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wfomc/polynomial.hpp"
#include "wfomc/types.hpp"
#include "wfomc/weights.hpp"

namespace wfomc {

using CardinalityVector = std::vector<std::uint32_t>;

struct VectorHash {
  std::size_t operator()(const CardinalityVector& v) const noexcept;
};

template <class T>
using VectorMap = std::unordered_map<CardinalityVector, T, VectorHash>;

std::uint32_t total(const CardinalityVector& k);

/// All compositions of n into u parts, in lexicographic order.
std::vector<CardinalityVector> compositions(std::uint32_t n, std::size_t u);
/// All p with 0 <= p <= k componentwise, in lexicographic order.
std::vector<CardinalityVector> bounded_vectors(const CardinalityVector& k);

Integer binomial(std::uint64_t n, std::uint64_t k);
Integer multinomial(const CardinalityVector& k);

/// u x u matrix of polynomials.
struct RMatrix {
  std::size_t u = 0;
  std::vector<WeightPolynomial> entries;

  const WeightPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * u + j]; }
  WeightPolynomial& at(std::size_t i, std::size_t j) { return entries[i * u + j]; }
};

/// Entry (a,b) sums the weights of 2-tables l such that the 2-type
/// (types[a], types[b], l) is consistent with phi and satisfies theta(x,y).
RMatrix r_matrix(const TypeSpace& space, const Formula& phi, const Formula& theta, const WeightFunction& wf,
                 const std::vector<std::size_t>& types);
/// Over all u 1-types.
RMatrix r_matrix(const TypeSpace& space, const Formula& phi, const Formula& theta, const WeightFunction& wf);

/// 1-types i with phi(x,x) true in i. Only these can occur in a model.
std::vector<std::size_t> valid_one_types(const TypeSpace& space, const Formula& phi);

/// wfomc(forall x y. phi, k) for vectors k indexed by the valid 1-types of
/// phi, memoized. Products are truncated at `caps` when given.
class Fo2Instance {
 public:
  Fo2Instance(const TypeSpace& space, const Formula& phi, const WeightFunction& wf,
              std::vector<std::size_t> types, DegreeCaps caps = {});

  const std::vector<std::size_t>& types() const { return types_; }
  const RMatrix& r() const { return r_; }
  const WeightPolynomial& one_type_weight(std::size_t a) const { return w_[a]; }

  /// Value at a vector over `types()`.
  const WeightPolynomial& wfomc_k(const CardinalityVector& k);

 private:
  const DegreeCaps* caps() const { return caps_.empty() ? nullptr : &caps_; }

  std::vector<std::size_t> types_;
  std::vector<WeightPolynomial> w_;
  RMatrix r_;
  DegreeCaps caps_;
  VectorMap<WeightPolynomial> memo_;
};

/// wfomc_k over the full list of 1-types of the signature (zero when k puts
/// an element on a 1-type that cannot satisfy phi(x,x)).
WeightPolynomial wfomc_k(const Signature& sig, const Formula& phi, const CardinalityVector& k,
                         const WeightFunction& wf);

/// Sum of wfomc_k over |k| = n, optionally restricted by `unary_filter`
/// (which sees k over the full list of 1-types).
WeightPolynomial wfomc_n(const Signature& sig, const Formula& phi, std::uint32_t n, const WeightFunction& wf,
                         const std::function<bool(const CardinalityVector&)>& unary_filter = {});

/// Cached products prod_{i,j} r_ij^(a_i * b_j) for a fixed r-matrix.
class CrossFactor {
 public:
  CrossFactor(RMatrix r, DegreeCaps caps) : r_(std::move(r)), caps_(std::move(caps)), powers_(r_.u * r_.u) {}

  WeightPolynomial operator()(const CardinalityVector& a, const CardinalityVector& b);
  const RMatrix& r() const { return r_; }

 private:
  const WeightPolynomial& power(std::size_t i, std::size_t j, std::uint64_t e);

  const DegreeCaps* caps() const { return caps_.empty() ? nullptr : &caps_; }

  RMatrix r_;
  DegreeCaps caps_;
  std::vector<std::vector<WeightPolynomial>> powers_;
};

}  // namespace wfomc
