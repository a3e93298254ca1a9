#include "wfomc/logic.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc {

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<Predicate> predicates) {
  for (auto& p : predicates) add(std::move(p));
}

std::size_t Signature::add(Predicate p) {
  if (p.arity != 1 && p.arity != 2)
    throw std::invalid_argument("predicate " + p.name + " must have arity 1 or 2");
  if (p.name.empty()) throw std::invalid_argument("empty predicate name");
  if (contains(p.name)) throw std::invalid_argument("duplicate predicate " + p.name);
  predicates_.push_back(std::move(p));
  return predicates_.size() - 1;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < predicates_.size(); ++i)
    if (predicates_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown predicate " + std::string(name));
}

void Signature::set_distinguished(AxiomRole role, const std::string& name) {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown predicate " + name);
  const int want = role == AxiomRole::Edge ? 2 : 1;
  if (predicates_[*i].arity != want)
    throw std::invalid_argument("predicate " + name + " must have arity " + std::to_string(want));
  distinguished_[role] = name;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }

bool is_keyword(std::string_view s) {
  return s == "forall" || s == "exists" || s == "true" || s == "false";
}

}  // namespace

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    const std::size_t start = i;
    if (!ident_start(text[i])) throw ParseError("expected predicate name in signature", 1, i + 1);
    while (i < text.size() && ident_char(text[i])) ++i;
    std::string name(text.substr(start, i - start));
    if (name.find('@') != std::string::npos)
      throw ParseError("names containing '@' are reserved", 1, start + 1);
    if (is_keyword(name) || name == "x" || name == "y")
      throw ParseError("'" + name + "' is reserved", 1, start + 1);
    if (i >= text.size() || text[i] != '/')
      throw ParseError("expected '/arity' after " + name, 1, i + 1);
    ++i;
    if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
      throw ParseError("arity must be 1 or 2", 1, i + 1);
    int arity = text[i] - '0';
    ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("arity must be 1 or 2", 1, i + 1);
    if (sig.contains(name)) throw ParseError("duplicate predicate " + name, 1, start + 1);
    sig.add({name, arity});
    skip();
  }
  return sig;
}

std::string to_string(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ", ";
    out += sig[i].name + "/" + std::to_string(sig[i].arity);
  }
  return out;
}

// ---------------------------------------------------------------- Formula

Formula::Formula() : node_(std::make_shared<Node>()) {}

Formula Formula::top() { return Formula(); }

Formula Formula::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::False;
  return Formula(n);
}

Formula Formula::atom(std::size_t predicate, Var a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = Atom{predicate, 1, {a, a}};
  return Formula(n);
}

Formula Formula::atom(std::size_t predicate, Var a, Var b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = Atom{predicate, 2, {a, b}};
  return Formula(n);
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->children.push_back(std::move(f));
  return Formula(n);
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return fs.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children = std::move(fs);
  return Formula(n);
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  if (fs.empty()) return bottom();
  if (fs.size() == 1) return fs.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->children = std::move(fs);
  return Formula(n);
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->children = {std::move(lhs), std::move(rhs)};
  return Formula(n);
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->children = {std::move(lhs), std::move(rhs)};
  return Formula(n);
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->kind == Kind::Atom) return node_->atom == other.node_->atom;
  return node_->children == other.node_->children;
}

Formula Formula::substitute(Var x_to, Var y_to) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False:
      return *this;
    case Kind::Atom: {
      auto n = std::make_shared<Node>(*node_);
      for (auto& v : n->atom.args) v = (v == Var::X) ? x_to : y_to;
      return Formula(n);
    }
    default: {
      auto n = std::make_shared<Node>();
      n->kind = kind();
      for (const auto& c : children()) n->children.push_back(c.substitute(x_to, y_to));
      return Formula(n);
    }
  }
}

unsigned Formula::free_variables() const {
  if (kind() == Kind::Atom) {
    unsigned m = 0;
    for (int i = 0; i < as_atom().arity; ++i) m |= 1u << static_cast<unsigned>(as_atom().args[i]);
    return m;
  }
  unsigned m = 0;
  for (const auto& c : children()) m |= c.free_variables();
  return m;
}

std::size_t Formula::size() const {
  std::size_t s = 1;
  for (const auto& c : children()) s += c.size();
  return s;
}

bool Sentence::universal() const {
  for (const auto& c : clauses)
    if (c.quantifier != Quantifier::ForallXY) return false;
  return true;
}

Formula Sentence::universal_matrix() const {
  std::vector<Formula> parts;
  for (const auto& c : clauses)
    if (c.quantifier == Quantifier::ForallXY) parts.push_back(c.matrix);
  return Formula::conjunction(std::move(parts));
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Not, And, Or, Implies, Iff, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, k = col;
    auto push = [&](Tok t, std::size_t len) {
      out.push_back({t, std::string(s.substr(i, len)), l, k});
      advance(len);
    };
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Ident, j - i);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == ',') {
      push(Tok::Comma, 1);
    } else if (c == '.') {
      push(Tok::Dot, 1);
    } else if (c == '~' || c == '!') {
      push(Tok::Not, 1);
    } else if (c == '&') {
      push(Tok::And, (i + 1 < s.size() && s[i + 1] == '&') ? 2 : 1);
    } else if (c == '|') {
      push(Tok::Or, (i + 1 < s.size() && s[i + 1] == '|') ? 2 : 1);
    } else if (s.substr(i, 3) == "<->") {
      push(Tok::Iff, 3);
    } else if (s.substr(i, 2) == "->") {
      push(Tok::Implies, 2);
    } else if (c == '=' || s.substr(i, 2) == "!=") {
      push(Tok::Eq, 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : toks_(lex(text)), sig_(sig) {}

  Sentence sentence() {
    Sentence s;
    s.clauses.push_back(clause());
    while (peek().kind == Tok::And) {
      next();
      s.clauses.push_back(clause());
    }
    expect_end();
    return s;
  }

  Formula formula_only() {
    Formula f = iff_chain();
    expect_end();
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError(what, t.line, t.col);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    next();
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
  }

  bool is_word(const Token& t, std::string_view w) const { return t.kind == Tok::Ident && t.text == w; }

  Var variable() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected variable", t);
    if (t.text == "x") {
      next();
      return Var::X;
    }
    if (t.text == "y") {
      next();
      return Var::Y;
    }
    fail("variable " + t.text + " not allowed (only x and y)", t);
  }

  Clause clause() {
    const Token& start = peek();
    if (is_word(start, "exists"))
      fail("unsupported quantifier nesting; write 'forall x. exists y.' clauses (see skolemization docs)", start);
    if (!is_word(start, "forall")) fail("expected 'forall'", start);
    next();
    Var first = variable();
    if (first != Var::X) fail("the outer variable must be x", start);
    Clause c;
    if (is_word(peek(), "y")) {
      next();
      if (peek().kind == Tok::Ident) {
        fail("variable " + peek().text + " not allowed (only x and y)", peek());
      }
      expect(Tok::Dot, "'.'");
      c.quantifier = Quantifier::ForallXY;
      c.matrix = iff_chain();
      return c;
    }
    if (peek().kind == Tok::Ident && !is_word(peek(), "exists"))
      fail("variable " + peek().text + " not allowed (only x and y)", peek());
    expect(Tok::Dot, "'.'");
    if (is_word(peek(), "exists")) {
      next();
      const Token& vt = peek();
      if (variable() != Var::Y) fail("the existential variable must be y", vt);
      expect(Tok::Dot, "'.'");
      if (is_word(peek(), "forall") || is_word(peek(), "exists"))
        fail("unsupported quantifier nesting (see skolemization docs)", peek());
      c.quantifier = Quantifier::ForallXExistsY;
      c.matrix = iff_chain();
      return c;
    }
    const Token& body = peek();
    c.quantifier = Quantifier::ForallXY;
    c.matrix = iff_chain();
    if (c.matrix.free_variables() & 2u) fail("variable y is not bound by 'forall x.'", body);
    return c;
  }

  Formula iff_chain() {
    Formula lhs = implication();
    while (peek().kind == Tok::Iff) {
      next();
      lhs = Formula::iff(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      next();
      return Formula::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (peek().kind == Tok::Or) {
      next();
      parts.push_back(conjunction());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    // An '&' followed by 'forall' starts the next clause.
    while (peek().kind == Tok::And && !is_word(peek(1), "forall")) {
      next();
      parts.push_back(unary());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Not) {
      next();
      return Formula::negation(unary());
    }
    if (t.kind == Tok::LParen) {
      next();
      Formula f = iff_chain();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind != Tok::Ident) fail("expected formula", t);
    if (t.text == "true") {
      next();
      return Formula::top();
    }
    if (t.text == "false") {
      next();
      return Formula::bottom();
    }
    if (t.text == "forall" || t.text == "exists")
      fail("quantifiers may only appear at clause level (see skolemization docs)", t);
    if (t.text == "x" || t.text == "y") {
      if (peek(1).kind == Tok::Eq) fail("equality atoms are not supported", peek(1));
      fail("expected atom", t);
    }
    return atom();
  }

  Formula atom() {
    const Token name = next();
    if (name.text.find('@') != std::string::npos) fail("names containing '@' are reserved", name);
    auto idx = sig_.find(name.text);
    if (!idx) fail("unknown predicate " + name.text, name);
    expect(Tok::LParen, "'('");
    std::vector<Var> args{variable()};
    while (peek().kind == Tok::Comma) {
      next();
      args.push_back(variable());
    }
    if (peek().kind == Tok::Eq) fail("equality atoms are not supported", peek());
    expect(Tok::RParen, "')'");
    const int arity = sig_[*idx].arity;
    if (static_cast<int>(args.size()) != arity)
      fail("arity mismatch for " + name.text + ": expected " + std::to_string(arity) + ", got " +
               std::to_string(args.size()),
           name);
    return arity == 1 ? Formula::atom(*idx, args[0]) : Formula::atom(*idx, args[0], args[1]);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

const char* var_name(Var v) { return v == Var::X ? "x" : "y"; }

bool compound(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return true;
    default:
      return false;
  }
}

void print(std::ostream& os, const Formula& f, const Signature& sig) {
  auto child = [&](const Formula& c) {
    if (compound(c)) {
      os << '(';
      print(os, c, sig);
      os << ')';
    } else {
      print(os, c, sig);
    }
  };
  auto infix = [&](const char* op) {
    const auto& cs = f.children();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) os << ' ' << op << ' ';
      child(cs[i]);
    }
  };
  switch (f.kind()) {
    case Formula::Kind::True: os << "true"; break;
    case Formula::Kind::False: os << "false"; break;
    case Formula::Kind::Atom: {
      const Atom& a = f.as_atom();
      os << sig[a.predicate].name << '(' << var_name(a.args[0]);
      if (a.arity == 2) os << ',' << var_name(a.args[1]);
      os << ')';
      break;
    }
    case Formula::Kind::Not:
      os << '~';
      child(f.children()[0]);
      break;
    case Formula::Kind::And: infix("&"); break;
    case Formula::Kind::Or: infix("|"); break;
    case Formula::Kind::Implies: infix("->"); break;
    case Formula::Kind::Iff: infix("<->"); break;
  }
}

}  // namespace

Sentence parse_sentence(std::string_view text, const Signature& sig) {
  return Parser(text, sig).sentence();
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).formula_only();
}

std::string to_string(const Formula& f, const Signature& sig) {
  std::ostringstream os;
  print(os, f, sig);
  return os.str();
}

std::string to_string(const Sentence& s, const Signature& sig) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.clauses.size(); ++i) {
    if (i) os << " & ";
    const auto& c = s.clauses[i];
    os << (c.quantifier == Quantifier::ForallXY ? "forall x y. " : "forall x. exists y. ");
    print(os, c.matrix, sig);
  }
  return os.str();
}

}  // namespace wfomc
