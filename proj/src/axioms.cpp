#include "wfomc/axioms.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "wfomc/error.hpp"

namespace wfomc {

AxiomSpec parse_axiom(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto ident = [&]() -> std::string {
    skip();
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) throw ParseError("expected a name in axiom", 1, i + 1);
    return std::string(text.substr(start, i - start));
  };
  const std::string name = ident();
  skip();
  if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' after " + name, 1, i + 1);
  ++i;
  std::vector<std::string> args{ident()};
  skip();
  while (i < text.size() && text[i] == ',') {
    ++i;
    args.push_back(ident());
    skip();
  }
  if (i >= text.size() || text[i] != ')') throw ParseError("expected ')' in axiom", 1, i + 1);
  ++i;
  skip();
  if (i != text.size()) throw ParseError("trailing text after axiom", 1, i + 1);

  AxiomSpec a;
  a.edge = args[0];
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw ParseError(name + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"), 1, 1);
  };
  if (name == "dag") {
    if (args.size() == 3) {
      a.kind = AxiomKind::SourceSinkDag;
      a.source = args[1];
      a.sink = args[2];
    } else {
      want(1);
      a.kind = AxiomKind::Dag;
    }
  } else if (name == "connected") {
    want(1);
    a.kind = AxiomKind::Connected;
  } else if (name == "forest") {
    want(1);
    a.kind = AxiomKind::Forest;
  } else if (name == "tree") {
    want(1);
    a.kind = AxiomKind::Tree;
  } else if (name == "directed_tree") {
    want(2);
    a.kind = AxiomKind::DirectedTree;
    a.root = args[1];
  } else if (name == "directed_forest") {
    want(1);
    a.kind = AxiomKind::DirectedForest;
  } else {
    throw ParseError("unknown axiom '" + name + "'", 1, 1);
  }
  return a;
}

std::string to_string(const AxiomSpec& a) {
  switch (a.kind) {
    case AxiomKind::Dag: return "dag(" + a.edge + ")";
    case AxiomKind::Connected: return "connected(" + a.edge + ")";
    case AxiomKind::Forest: return "forest(" + a.edge + ")";
    case AxiomKind::Tree: return "tree(" + a.edge + ")";
    case AxiomKind::DirectedTree: return "directed_tree(" + a.edge + ", " + a.root + ")";
    case AxiomKind::DirectedForest: return "directed_forest(" + a.edge + ")";
    case AxiomKind::SourceSinkDag: return "dag(" + a.edge + ", " + a.source + ", " + a.sink + ")";
  }
  return "";
}

void check_axiom(const AxiomSpec& a, const Signature& sig) {
  auto need = [&](const std::string& p, int arity, bool may_be_absent) {
    auto i = sig.find(p);
    if (!i) {
      if (may_be_absent) return;
      throw std::invalid_argument("axiom " + to_string(a) + ": unknown predicate " + p);
    }
    if (sig[*i].arity != arity)
      throw std::invalid_argument("axiom " + to_string(a) + ": " + p + " must have arity " + std::to_string(arity));
  };
  need(a.edge, 2, false);
  if (a.kind == AxiomKind::DirectedTree) need(a.root, 1, false);
  if (a.kind == AxiomKind::SourceSinkDag) {
    need(a.source, 1, true);
    need(a.sink, 1, true);
    if (a.source == a.sink) throw std::invalid_argument("source and sink predicates must differ");
  }
}

}  // namespace wfomc
