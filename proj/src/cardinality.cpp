#include "wfomc/cardinality.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wfomc/error.hpp"

namespace wfomc {

std::int64_t LinearExpr::evaluate(const PredicateCardinality& mu, std::int64_t domain) const {
  std::int64_t v = constant + n * domain;
  for (const auto& [p, a] : coef) {
    auto it = mu.find(p);
    v += a * (it == mu.end() ? 0 : it->second);
  }
  return v;
}

LinearExpr LinearExpr::operator-(const LinearExpr& o) const {
  LinearExpr r = *this;
  r.constant -= o.constant;
  r.n -= o.n;
  for (const auto& [p, a] : o.coef) r.coef[p] -= a;
  for (auto it = r.coef.begin(); it != r.coef.end();) it = it->second == 0 ? r.coef.erase(it) : std::next(it);
  return r;
}

namespace {

LinearExpr scale(LinearExpr e, std::int64_t k) {
  e.constant *= k;
  e.n *= k;
  for (auto& [_, a] : e.coef) a *= k;
  return e;
}

LinearExpr add(LinearExpr a, const LinearExpr& b) {
  a.constant += b.constant;
  a.n += b.n;
  for (const auto& [p, c] : b.coef) a.coef[p] += c;
  for (auto it = a.coef.begin(); it != a.coef.end();) it = it->second == 0 ? a.coef.erase(it) : std::next(it);
  return a;
}

bool is_const(const LinearExpr& e) { return e.n == 0 && e.coef.empty(); }

std::string expr_string(const LinearExpr& e) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](std::int64_t a, const std::string& what) {
    if (a == 0) return;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    const std::int64_t m = a < 0 ? -a : a;
    if (what.empty()) {
      os << m;
    } else {
      if (m != 1) os << m << "*";
      os << what;
    }
    first = false;
  };
  for (const auto& [p, a] : e.coef) put(a, "|" + p + "|");
  put(e.n, "n");
  put(e.constant, "");
  if (first) os << "0";
  return os.str();
}

const char* op_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Le: return "<=";
    case CmpOp::Ge: return ">=";
    case CmpOp::Lt: return "<";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

class ConstraintParser {
 public:
  ConstraintParser(std::string_view s, const Signature* sig) : s_(s), sig_(sig) {}

  CardinalityConstraint parse() {
    auto c = disjunction();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, i_ + 1); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool word(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) != w) return false;
    const std::size_t e = i_ + w.size();
    if (std::isalpha(static_cast<unsigned char>(w[0])) && e < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_'))
      return false;
    i_ = e;
    return true;
  }

  bool sym(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }

  CardinalityConstraint disjunction() {
    std::vector<CardinalityConstraint> parts{conjunction()};
    while (word("or") || sym("||")) parts.push_back(conjunction());
    return CardinalityConstraint::disjunction(std::move(parts));
  }

  CardinalityConstraint conjunction() {
    std::vector<CardinalityConstraint> parts{negation()};
    while (word("and") || sym("&&") || sym("&")) parts.push_back(negation());
    return CardinalityConstraint::conjunction(std::move(parts));
  }

  CardinalityConstraint negation() {
    skip();
    if (word("not")) return CardinalityConstraint::negation(negation());
    if (s_.substr(i_, 1) == "!" && s_.substr(i_, 2) != "!=") {
      ++i_;
      return CardinalityConstraint::negation(negation());
    }
    if (word("true")) return CardinalityConstraint();
    if (word("false")) return CardinalityConstraint::negation(CardinalityConstraint());
    if (s_.substr(i_, 1) == "(") {
      // Either a parenthesized constraint or a comparison starting with "(expr)".
      const std::size_t save = i_;
      try {
        return comparison();
      } catch (const ParseError&) {
        i_ = save + 1;
        auto c = disjunction();
        if (!sym(")")) fail("expected ')'");
        return c;
      }
    }
    return comparison();
  }

  CardinalityConstraint comparison() {
    LinearExpr lhs = sum();
    CmpOp op;
    if (sym("==") || sym("=")) {
      op = CmpOp::Eq;
    } else if (sym("!=")) {
      op = CmpOp::Ne;
    } else if (sym("<=")) {
      op = CmpOp::Le;
    } else if (sym(">=")) {
      op = CmpOp::Ge;
    } else if (sym("<")) {
      op = CmpOp::Lt;
    } else if (sym(">")) {
      op = CmpOp::Gt;
    } else {
      fail("expected comparison operator");
    }
    LinearExpr rhs = sum();
    return CardinalityConstraint::compare(std::move(lhs), op, std::move(rhs));
  }

  LinearExpr sum() {
    LinearExpr e = product();
    while (true) {
      if (sym("+")) {
        e = add(e, product());
      } else if (s_.substr(i_, 1) == "-" ) {
        ++i_;
        e = add(e, scale(product(), -1));
      } else {
        return e;
      }
      skip();
    }
  }

  LinearExpr product() {
    LinearExpr e = factor();
    while (sym("*")) {
      LinearExpr f = factor();
      if (is_const(e)) {
        e = scale(f, e.constant);
      } else if (is_const(f)) {
        e = scale(e, f.constant);
      } else {
        fail("constraint is not linear");
      }
    }
    skip();
    return e;
  }

  LinearExpr factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of constraint");
    const char c = s_[i_];
    if (c == '-') {
      ++i_;
      return scale(factor(), -1);
    }
    if (c == '(') {
      ++i_;
      LinearExpr e = sum();
      if (!sym(")")) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
      LinearExpr e;
      e.constant = v;
      return e;
    }
    if (c == '|') {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '@'))
        ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (name.empty()) fail("expected predicate name");
      if (sig_ && !sig_->contains(name)) {
        i_ = start;
        fail("unknown predicate " + name);
      }
      if (!sym("|")) fail("expected '|'");
      LinearExpr e;
      e.coef[name] = 1;
      return e;
    }
    if (word("n")) {
      LinearExpr e;
      e.n = 1;
      return e;
    }
    fail("expected |P|, n or an integer");
  }

  std::string_view s_;
  const Signature* sig_;
  std::size_t i_ = 0;
};

}  // namespace

CardinalityConstraint::CardinalityConstraint() : node_(std::make_shared<Node>()) {}

CardinalityConstraint CardinalityConstraint::compare(LinearExpr lhs, CmpOp op, LinearExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compare;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->op = op;
  return CardinalityConstraint(n);
}

CardinalityConstraint CardinalityConstraint::conjunction(std::vector<CardinalityConstraint> cs) {
  cs.erase(std::remove_if(cs.begin(), cs.end(), [](const auto& c) { return c.is_true(); }), cs.end());
  if (cs.empty()) return {};
  if (cs.size() == 1) return cs.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children = std::move(cs);
  return CardinalityConstraint(n);
}

CardinalityConstraint CardinalityConstraint::disjunction(std::vector<CardinalityConstraint> cs) {
  if (cs.size() == 1) return cs.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->children = std::move(cs);
  return CardinalityConstraint(n);
}

CardinalityConstraint CardinalityConstraint::negation(CardinalityConstraint c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->children.push_back(std::move(c));
  return CardinalityConstraint(n);
}

CardinalityConstraint CardinalityConstraint::parse(std::string_view text, const Signature& sig) {
  return ConstraintParser(text, &sig).parse();
}

CardinalityConstraint CardinalityConstraint::parse(std::string_view text) {
  return ConstraintParser(text, nullptr).parse();
}

bool CardinalityConstraint::evaluate(const PredicateCardinality& mu, std::int64_t n) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::True: return true;
    case Kind::Compare: {
      const auto a = nd.lhs.evaluate(mu, n), b = nd.rhs.evaluate(mu, n);
      switch (nd.op) {
        case CmpOp::Eq: return a == b;
        case CmpOp::Ne: return a != b;
        case CmpOp::Le: return a <= b;
        case CmpOp::Ge: return a >= b;
        case CmpOp::Lt: return a < b;
        case CmpOp::Gt: return a > b;
      }
      return false;
    }
    case Kind::And:
      return std::all_of(nd.children.begin(), nd.children.end(), [&](const auto& c) { return c.evaluate(mu, n); });
    case Kind::Or:
      return std::any_of(nd.children.begin(), nd.children.end(), [&](const auto& c) { return c.evaluate(mu, n); });
    case Kind::Not: return !nd.children[0].evaluate(mu, n);
  }
  return false;
}

std::set<std::string> CardinalityConstraint::predicates() const {
  std::set<std::string> out;
  if (node_->kind == Kind::Compare) {
    for (const auto& [p, _] : node_->lhs.coef) out.insert(p);
    for (const auto& [p, _] : node_->rhs.coef) out.insert(p);
  }
  for (const auto& c : node_->children) {
    auto sub = c.predicates();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::string CardinalityConstraint::to_string() const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::True: return "true";
    case Kind::Compare: return expr_string(nd.lhs) + " " + op_string(nd.op) + " " + expr_string(nd.rhs);
    case Kind::Not: return "not (" + nd.children[0].to_string() + ")";
    case Kind::And:
    case Kind::Or: {
      std::string out;
      for (std::size_t i = 0; i < nd.children.size(); ++i) {
        if (i) out += nd.kind == Kind::And ? " and " : " or ";
        out += "(" + nd.children[i].to_string() + ")";
      }
      return out;
    }
  }
  return "";
}

void CardinalityConstraint::collect_conjuncts(std::vector<const Node*>& out) const {
  if (node_->kind == Kind::And) {
    for (const auto& c : node_->children) c.collect_conjuncts(out);
  } else if (node_->kind == Kind::Compare) {
    out.push_back(node_.get());
  }
}

std::map<std::string, std::int64_t> CardinalityConstraint::upper_bounds(const Signature& sig,
                                                                        std::int64_t n) const {
  std::map<std::string, std::int64_t> bounds;
  auto max_card = [&](const std::string& p) -> std::int64_t {
    auto i = sig.find(p);
    if (!i) return 0;
    return sig[*i].arity == 1 ? n : n * n;
  };
  // Each inequality is brought to the form L <= 0.
  auto use = [&](const LinearExpr& l) {
    const std::int64_t base = l.constant + l.n * n;
    for (const auto& [p, a] : l.coef) {
      if (a <= 0) continue;
      std::int64_t rhs = -base;
      for (const auto& [q, b] : l.coef)
        if (q != p && b < 0) rhs -= b * max_card(q);
      std::int64_t cap = rhs < 0 ? 0 : rhs / a;
      auto it = bounds.find(p);
      if (it == bounds.end() || cap < it->second) bounds[p] = cap;
    }
  };
  std::vector<const Node*> conjuncts;
  collect_conjuncts(conjuncts);
  for (const Node* c : conjuncts) {
    LinearExpr d = c->lhs - c->rhs;  // lhs op rhs  <=>  d op 0
    LinearExpr one;
    one.constant = 1;
    switch (c->op) {
      case CmpOp::Eq:
        use(d);
        use(scale(d, -1));
        break;
      case CmpOp::Le: use(d); break;
      case CmpOp::Lt: use(add(d, one)); break;
      case CmpOp::Ge: use(scale(d, -1)); break;
      case CmpOp::Gt: use(add(scale(d, -1), one)); break;
      case CmpOp::Ne: break;
    }
  }
  return bounds;
}

PredicateCardinality monomial_cardinality(const Monomial& m) {
  PredicateCardinality mu;
  for (const auto& [s, e] : m.factors()) {
    const auto info = symbol_info(s);
    if (info.polarity == Polarity::Positive) mu[info.predicate] = e;
  }
  return mu;
}

WeightPolynomial filter_cardinality(const WeightPolynomial& p, const CardinalityConstraint& gamma,
                                    std::int64_t n, const PredicateCardinality& fixed) {
  if (gamma.is_true()) return p;
  std::vector<WeightPolynomial::Term> kept;
  for (const auto& t : p.terms()) {
    PredicateCardinality mu = monomial_cardinality(t.first);
    for (const auto& [k, v] : fixed) mu[k] = v;
    if (gamma.evaluate(mu, n)) kept.push_back(t);
  }
  return WeightPolynomial::from_terms(std::move(kept));
}

}  // namespace wfomc
