#pragma once

// 1-types, 2-tables and 2-types over a signature.
//
// Index order is binary counting over atoms in predicate-declaration order,
// the first atom being the most significant bit and a negative literal bit 0.
// Single-variable atoms: P(x) for unary P, R(x,x) for binary R.
// Two-variable atoms: R(x,y) then R(y,x) for each binary R.

#include <cstddef>
#include <vector>

#include "wfomc/logic.hpp"

namespace wfomc {

struct OneType {
  std::size_t index = 0;
  std::vector<bool> literals;  // one per single-variable atom
};

struct TwoTable {
  std::size_t index = 0;
  std::vector<bool> literals;  // one per two-variable atom
};

struct TwoType {
  std::size_t i = 0, j = 0, l = 0;
};

class TypeSpace {
 public:
  explicit TypeSpace(const Signature& sig);

  const Signature& signature() const { return sig_; }
  std::size_t single_atoms() const { return a1_; }
  std::size_t pair_atoms() const { return a2_; }
  std::size_t u() const { return std::size_t{1} << a1_; }
  std::size_t b() const { return std::size_t{1} << a2_; }

  /// Truth of P(x) / R(x,x) in 1-type i.
  bool unary(std::size_t i, std::size_t predicate) const;
  bool reflexive(std::size_t i, std::size_t predicate) const;
  /// Truth of R(x,y) (forward) or R(y,x) (backward) in 2-table l.
  bool forward(std::size_t l, std::size_t predicate) const;
  bool backward(std::size_t l, std::size_t predicate) const;

  /// Evaluates phi with x bound to element `ex` and y to `ey`, where element 0
  /// has 1-type i, element 1 has 1-type j and the pair (0,1) realizes 2-table l.
  bool evaluate(const Formula& phi, TwoType t, int ex, int ey) const;

  /// Whether the 2-type entails phi(x,x) & phi(x,y) & phi(y,x) & phi(y,y).
  bool is_consistent(TwoType t, const Formula& phi) const;
  /// Whether 2-table l between i and j satisfies theta(x,y).
  bool satisfies(TwoType t, const Formula& theta) const { return evaluate(theta, t, 0, 1); }
  /// Whether phi(x,x) holds in 1-type i.
  bool valid(std::size_t i, const Formula& phi) const;

 private:
  bool bit1(std::size_t i, std::size_t pos) const { return (i >> (a1_ - 1 - pos)) & 1u; }
  bool bit2(std::size_t l, std::size_t pos) const { return (l >> (a2_ - 1 - pos)) & 1u; }

  Signature sig_;
  std::size_t a1_ = 0, a2_ = 0;
  std::vector<std::size_t> pos1_;  // per predicate: position among single-variable atoms
  std::vector<std::size_t> pos2_;  // per binary predicate: position of R(x,y); R(y,x) is next
};

std::vector<OneType> enumerate_one_types(const Signature& sig);
std::vector<TwoTable> enumerate_two_tables(const Signature& sig);
bool is_consistent(const TypeSpace& space, TwoType t, const Formula& phi);

}  // namespace wfomc
