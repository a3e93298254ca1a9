#pragma once

// Symmetric weight functions: one (w, wbar) pair per predicate, each entry
// either an exact rational or a weight symbol.

#include <map>
#include <string>
#include <utility>
#include <variant>

#include "wfomc/polynomial.hpp"
#include "wfomc/types.hpp"

namespace wfomc {

using WeightValue = std::variant<Rational, SymbolId>;

WeightPolynomial to_polynomial(const WeightValue& v);

class WeightFunction {
 public:
  struct Entry {
    WeightValue w = Rational(1);
    WeightValue wbar = Rational(1);
  };

  /// Predicates without an entry weigh (1, 1).
  void set(const std::string& predicate, WeightValue w, WeightValue wbar);
  void set(const std::string& predicate, const Rational& w, const Rational& wbar) {
    set(predicate, WeightValue(w), WeightValue(wbar));
  }
  /// Replaces one side with its symbol w(P) or wbar(P).
  void make_symbolic(const std::string& predicate, Polarity side);

  Entry get(const std::string& predicate) const;
  bool has(const std::string& predicate) const { return entries_.count(predicate) > 0; }
  const std::map<std::string, Entry>& entries() const { return entries_; }

  WeightPolynomial positive(const std::string& predicate) const { return to_polynomial(get(predicate).w); }
  WeightPolynomial negative(const std::string& predicate) const { return to_polynomial(get(predicate).wbar); }

  bool numeric() const;

 private:
  std::map<std::string, Entry> entries_;
};

/// Product over single-variable atoms of w or wbar according to the literal's sign.
WeightPolynomial one_type_weight(const TypeSpace& space, std::size_t i, const WeightFunction& wf);
/// Same over the two-variable atoms of a 2-table.
WeightPolynomial two_table_weight(const TypeSpace& space, std::size_t l, const WeightFunction& wf);

}  // namespace wfomc
