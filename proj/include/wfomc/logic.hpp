#pragma once

// Signatures, quantifier-free FO2 formulas and the clause-level sentence
// form accepted by the engine, plus the text DSL for all of them.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wfomc {

struct Predicate {
  std::string name;
  int arity = 1;  // 1 or 2

  bool operator==(const Predicate&) const = default;
};

/// Roles a predicate can play for a graph axiom.
enum class AxiomRole { Edge, Root, Source, Sink };

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Predicate> predicates);

  /// Appends a predicate; throws std::invalid_argument on duplicate name or bad arity.
  std::size_t add(Predicate p);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  std::size_t size() const { return predicates_.size(); }
  bool empty() const { return predicates_.empty(); }
  const Predicate& operator[](std::size_t i) const { return predicates_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws std::out_of_range
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// Marks `name` as the predicate playing `role`; checks the arity the role needs.
  void set_distinguished(AxiomRole role, const std::string& name);
  const std::map<AxiomRole, std::string>& distinguished() const { return distinguished_; }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Predicate> predicates_;
  std::map<AxiomRole, std::string> distinguished_;
};

/// "R/2, A/1" -> Signature. Whitespace or commas separate entries.
Signature parse_signature(std::string_view text);
std::string to_string(const Signature& sig);

enum class Var : std::uint8_t { X = 0, Y = 1 };

struct Atom {
  std::size_t predicate = 0;  // index into the signature
  std::uint8_t arity = 1;
  std::array<Var, 2> args{Var::X, Var::X};

  bool operator==(const Atom&) const = default;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff };

  Formula();  // true

  static Formula top();
  static Formula bottom();
  static Formula atom(std::size_t predicate, Var a);
  static Formula atom(std::size_t predicate, Var a, Var b);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const Atom& as_atom() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }

  /// Structural equality.
  bool operator==(const Formula& other) const;

  /// Renames variables: x becomes `x_to`, y becomes `y_to`.
  Formula substitute(Var x_to, Var y_to) const;

  /// Bit 0 set if x occurs, bit 1 if y occurs.
  unsigned free_variables() const;

  std::size_t size() const;

  /// Evaluates under a total valuation; `lookup(const Atom&) -> bool`.
  template <class Lookup>
  bool evaluate(Lookup&& lookup) const {
    return eval_node(*node_, lookup);
  }

 private:
  struct Node {
    Kind kind = Kind::True;
    Atom atom;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  template <class Lookup>
  static bool eval_node(const Node& n, Lookup& lookup) {
    switch (n.kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return lookup(n.atom);
      case Kind::Not: return !eval_node(*n.children[0].node_, lookup);
      case Kind::And:
        for (const auto& c : n.children)
          if (!eval_node(*c.node_, lookup)) return false;
        return true;
      case Kind::Or:
        for (const auto& c : n.children)
          if (eval_node(*c.node_, lookup)) return true;
        return false;
      case Kind::Implies:
        return !eval_node(*n.children[0].node_, lookup) || eval_node(*n.children[1].node_, lookup);
      case Kind::Iff:
        return eval_node(*n.children[0].node_, lookup) == eval_node(*n.children[1].node_, lookup);
    }
    return false;
  }

  std::shared_ptr<const Node> node_;
};

enum class Quantifier : std::uint8_t {
  ForallXY,       // forall x y. matrix
  ForallXExistsY  // forall x. exists y. matrix
};

struct Clause {
  Quantifier quantifier = Quantifier::ForallXY;
  Formula matrix;

  bool operator==(const Clause&) const = default;
};

struct Sentence {
  std::vector<Clause> clauses;

  bool operator==(const Sentence&) const = default;
  bool universal() const;
  /// Conjunction of the matrices of all forall-x-y clauses.
  Formula universal_matrix() const;
};

/// Parses a sentence in the clause DSL:
///   sentence := clause ("&" clause)*
///   clause   := "forall x y." qf | "forall x." qf | "forall x." "exists y." qf
/// `qf` uses ~ & | -> <->, parentheses, true/false and atoms P(x), R(x,y).
/// Throws ParseError with line/column.
Sentence parse_sentence(std::string_view text, const Signature& sig);

/// Parses a quantifier-free formula over x, y.
Formula parse_formula(std::string_view text, const Signature& sig);

std::string to_string(const Formula& f, const Signature& sig);
std::string to_string(const Sentence& s, const Signature& sig);

}  // namespace wfomc
