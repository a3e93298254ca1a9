#include "wfomc/mln.hpp"

#include <sstream>
#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc {

Problem compile(const MlnModel& m) {
  Problem p;
  p.signature = m.signature;
  p.sentence = m.hard;
  p.axioms = m.axioms;
  p.constraints = m.constraints;
  for (std::size_t i = 0; i < m.soft.size(); ++i) {
    const auto& s = m.soft[i];
    if (s.weight <= 0) throw std::invalid_argument("soft weights must be positive");
    const unsigned vars = s.formula.free_variables();
    if (vars == 0) throw std::invalid_argument("soft formula " + std::to_string(i) + " has no free variables");
    std::string name;
    for (std::size_t k = i;; ++k) {
      name = "@mln" + std::to_string(k);
      if (!p.signature.contains(name)) break;
    }
    Formula phi = s.formula;
    Formula head;
    if (vars == 3u) {
      head = Formula::atom(p.signature.add({name, 2}), Var::X, Var::Y);
    } else {
      if (vars == 2u) phi = phi.substitute(Var::X, Var::X);  // only y occurs: rename it to x
      head = Formula::atom(p.signature.add({name, 1}), Var::X);
    }
    p.sentence.clauses.push_back({Quantifier::ForallXY, Formula::iff(head, phi)});
    p.weights.set(name, s.weight, Rational(1));
  }
  return p;
}

Rational partition(const MlnModel& m, std::uint32_t n) { return solve(compile(m), n); }

Rational query_probability(const MlnModel& m, const MlnQuery& q, std::uint32_t n) {
  const Rational z = partition(m, n);
  if (z == 0) throw ZeroPartition("the hard constraints admit no world");
  MlnModel with = m;
  for (const auto& c : q.sentence.clauses) with.hard.clauses.push_back(c);
  for (const auto& a : q.axioms) with.axioms.push_back(a);
  for (const auto& c : q.constraints) with.constraints.push_back(c);
  return partition(with, n) / z;
}

namespace {

struct Bucketer : TermVisitor {
  std::string predicate;
  std::map<std::int64_t, WeightPolynomial> buckets;
  void visit(const PredicateCardinality& unary, const WeightPolynomial& v) override {
    buckets[unary.at(predicate)] += v;
  }
};

}  // namespace

Distribution statistic_distribution(const MlnModel& m, const std::string& predicate, std::uint32_t n) {
  const Problem p = compile(m);
  const auto idx = p.signature.find(predicate);
  if (!idx) throw std::invalid_argument("unknown predicate " + predicate);
  std::map<std::int64_t, Rational> raw;
  const ReductionResult r = reduce(p);
  if (p.signature[*idx].arity == 1) {
    Bucketer b;
    b.predicate = predicate;
    solve_terms(r, n, b);
    for (auto& [s, v] : b.buckets) {
      if (!v.is_constant()) throw std::invalid_argument("symbolic weights remain");
      raw[s] = v.constant_term();
    }
  } else {
    const auto entry = p.weights.get(predicate);
    const auto* w = std::get_if<Rational>(&entry.w);
    if (!w) throw std::invalid_argument("statistic predicate needs a numeric weight");
    struct Summer : TermVisitor {
      WeightPolynomial sum;
      void visit(const PredicateCardinality&, const WeightPolynomial& v) override { sum += v; }
    } total;
    SolveOptions options;
    options.keep_symbolic.insert(predicate);
    solve_terms(r, n, total, options);
    const SymbolId s = intern({predicate, Polarity::Positive});
    for (auto& [e, coef] : total.sum.by_exponent(s)) {
      if (!coef.is_constant()) throw std::invalid_argument("symbolic weights remain");
      Rational scale(1);
      for (std::uint32_t k = 0; k < e; ++k) scale *= *w;
      raw[e] = coef.constant_term() * scale;
    }
  }
  Rational z(0);
  for (const auto& [_, v] : raw) z += v;
  if (z == 0) throw ZeroPartition("the hard constraints admit no world");
  Distribution d;
  d.expectation = 0;
  for (const auto& [s, v] : raw) {
    if (v == 0) continue;
    d.mass[s] = v / z;
    d.expectation += Rational(s) * v / z;
  }
  return d;
}

// ---------------------------------------------------------------- text format

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool starts_with_word(const std::string& s, std::string_view w) {
  return s.size() > w.size() && s.compare(0, w.size(), w) == 0 && std::isspace(static_cast<unsigned char>(s[w.size()]));
}

bool looks_like_axiom(const std::string& s) {
  for (const char* name : {"dag(", "connected(", "forest(", "tree(", "directed_tree(", "directed_forest("}) {
    if (s.rfind(name, 0) == 0) return true;
  }
  return false;
}

bool looks_like_constraint(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] == '|') return true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '=' || c == '>') {
      const bool arrow = c == '>' && i > 0 && s[i - 1] == '-';
      if (!arrow) return true;
    }
    if (c == '<' && !(i + 1 < s.size() && s[i + 1] == '-')) return true;
  }
  return false;
}

ParseError at_line(const ParseError& e, std::size_t line, std::size_t col_offset) {
  if (e.line() == 0) return ParseError(std::string(e.what()), line, 1);
  return ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line + e.line() - 1,
                    e.column() + (e.line() == 1 ? col_offset : 0));
}

}  // namespace

MlnModel parse_mln(std::string_view text) {
  MlnModel m;
  bool have_sig = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  struct Pending {
    std::size_t line, offset;
    std::string kind, body;
  };
  std::vector<Pending> items;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(raw.substr(0, hash));
    if (body.empty()) continue;
    const std::size_t offset = raw.find(body);
    if (body.rfind("sig:", 0) == 0) {
      try {
        m.signature = parse_signature(body.substr(4));
      } catch (const ParseError& e) {
        throw at_line(e, line, offset + 4);
      }
      have_sig = true;
      continue;
    }
    if (body.rfind("hard:", 0) == 0) {
      items.push_back({line, offset + 5, "hard", trim(body.substr(5))});
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'sig:', 'hard:' or '<weight> : <formula>'", line, 1);
    items.push_back({line, offset, "soft", body});
  }
  if (!have_sig) throw ParseError("missing 'sig:' line");
  for (const auto& it : items) {
    try {
      if (it.kind == "soft") {
        const auto colon = it.body.find(':');
        SoftFormula s{parse_rational(trim(it.body.substr(0, colon))),
                      parse_formula(it.body.substr(colon + 1), m.signature)};
        if (s.weight <= 0) throw ParseError("soft weights must be positive", it.line, 1);
        m.soft.push_back(std::move(s));
        continue;
      }
      std::string h = it.body;
      if (starts_with_word(h, "axiom")) {
        const AxiomSpec a = parse_axiom(trim(h.substr(5)));
        check_axiom(a, m.signature);
        m.axioms.push_back(a);
      } else if (starts_with_word(h, "card")) {
        m.constraints.push_back(CardinalityConstraint::parse(trim(h.substr(4)), m.signature));
      } else if (looks_like_axiom(h)) {
        const AxiomSpec a = parse_axiom(h);
        check_axiom(a, m.signature);
        m.axioms.push_back(a);
      } else if (looks_like_constraint(h)) {
        m.constraints.push_back(CardinalityConstraint::parse(h, m.signature));
      } else {
        for (auto& c : parse_sentence(h, m.signature).clauses) m.hard.clauses.push_back(std::move(c));
      }
    } catch (const ParseError& e) {
      throw at_line(e, it.line, it.offset);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), it.line, 1);
    }
  }
  return m;
}

// ---------------------------------------------------------------- presets

namespace {

// Rational stand-ins for exp(-1) and exp(3).
const char* kExpMinus1 = "367879/1000000";
const char* kExp3 = "20085537/1000000";

std::string smokers(const std::string& hard) {
  return std::string("sig: S/1, F/2\n") + "hard: forall x y. ~F(x,x) & (F(x,y) -> F(y,x))\n" + hard +
         "1 : S(x)\n" + kExpMinus1 + " : F(x,y)\n" + kExp3 + " : S(x) & F(x,y) -> S(y)\n";
}

std::string graph(const std::string& hard) {
  return std::string("sig: R/2\n") + hard + kExpMinus1 + " : R(x,y)\n";
}

const char* kUndirected = "hard: forall x y. ~R(x,x) & (R(x,y) -> R(y,x))\n";

const std::vector<std::pair<std::string, std::string>>& presets() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"smokers", smokers("")},
      {"smokers-connected", smokers("hard: axiom connected(F)\n")},
      {"smokers-card", smokers("hard: card |F| >= 2*n - 2\n")},
      {"smokers-dag", std::string("sig: S/1, F/2\nhard: axiom dag(F)\n1 : S(x)\n") + kExpMinus1 + " : F(x,y)\n" +
                          kExp3 + " : S(x) & F(x,y) -> S(y)\n"},
      {"smokers-forest", smokers("hard: axiom forest(F)\n")},
      {"graph-directed", graph("hard: forall x y. ~R(x,x)\n")},
      {"graph-dag", graph("hard: axiom dag(R)\n")},
      {"graph-dag-fo2", graph("hard: forall x y. ~R(x,x) & (R(x,y) -> ~R(y,x))\n")},
      {"graph-undirected", graph(kUndirected)},
      {"graph-connected", graph(std::string(kUndirected) + "hard: axiom connected(R)\n")},
      {"graph-connected-fo2", graph(std::string(kUndirected) + "hard: forall x. exists y. R(x,y)\n")},
      {"graph-connected-card",
       graph(std::string(kUndirected) + "hard: forall x. exists y. R(x,y)\nhard: card |R| >= 2*n - 2\n")},
      {"graph-forest", graph(std::string(kUndirected) + "hard: axiom forest(R)\n")},
      {"graph-forest-fo2", graph(kUndirected)},
      {"graph-forest-card", graph(std::string(kUndirected) + "hard: card |R| <= 2*n - 2\n")},
  };
  return table;
}

}  // namespace

MlnModel preset(const std::string& name) {
  for (const auto& [k, text] : presets())
    if (k == name) return parse_mln(text);
  throw std::invalid_argument("unknown preset " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : presets()) out.push_back(k);
  return out;
}

}  // namespace wfomc
