#pragma once

// Cardinality constraints: boolean combinations of linear comparisons over
// predicate cardinalities |P| and the domain size n, e.g. "|R| = 2*n - 2".

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wfomc/logic.hpp"
#include "wfomc/polynomial.hpp"

namespace wfomc {

/// Number of true ground atoms per predicate.
using PredicateCardinality = std::map<std::string, std::int64_t>;

struct LinearExpr {
  std::int64_t constant = 0;
  std::int64_t n = 0;  // coefficient of the domain size
  std::map<std::string, std::int64_t> coef;

  std::int64_t evaluate(const PredicateCardinality& mu, std::int64_t domain) const;
  LinearExpr operator-(const LinearExpr& o) const;
};

enum class CmpOp { Eq, Ne, Le, Ge, Lt, Gt };

class CardinalityConstraint {
 public:
  enum class Kind { True, Compare, And, Or, Not };

  CardinalityConstraint();  // true
  static CardinalityConstraint compare(LinearExpr lhs, CmpOp op, LinearExpr rhs);
  static CardinalityConstraint conjunction(std::vector<CardinalityConstraint> cs);
  static CardinalityConstraint disjunction(std::vector<CardinalityConstraint> cs);
  static CardinalityConstraint negation(CardinalityConstraint c);

  /// Throws ParseError; unknown predicates are rejected against `sig`.
  static CardinalityConstraint parse(std::string_view text, const Signature& sig);
  /// Variant without a signature check.
  static CardinalityConstraint parse(std::string_view text);

  Kind kind() const { return node_->kind; }
  bool is_true() const { return node_->kind == Kind::True; }
  bool evaluate(const PredicateCardinality& mu, std::int64_t n) const;
  std::set<std::string> predicates() const;
  std::string to_string() const;

  /// Upper bounds on |P| implied by top-level conjuncts, given each
  /// predicate's arity and the domain size.
  std::map<std::string, std::int64_t> upper_bounds(const Signature& sig, std::int64_t n) const;

 private:
  struct Node {
    Kind kind = Kind::True;
    LinearExpr lhs, rhs;
    CmpOp op = CmpOp::Eq;
    std::vector<CardinalityConstraint> children;
  };
  explicit CardinalityConstraint(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  void collect_conjuncts(std::vector<const Node*>& out) const;

  std::shared_ptr<const Node> node_;
};

/// mu_P = exponent of the positive symbol w(P) in m.
PredicateCardinality monomial_cardinality(const Monomial& m);

/// Keeps the terms of p whose cardinalities satisfy gamma. Cardinalities of
/// predicates listed in `fixed` (typically unary ones, known from the 1-type
/// vector) are taken from there; the rest are read from the monomial.
WeightPolynomial filter_cardinality(const WeightPolynomial& p, const CardinalityConstraint& gamma,
                                    std::int64_t n, const PredicateCardinality& fixed = {});

}  // namespace wfomc
