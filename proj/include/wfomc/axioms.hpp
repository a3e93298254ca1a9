#pragma once

#include <string>
#include <string_view>

#include "wfomc/logic.hpp"

namespace wfomc {

enum class AxiomKind { Dag, Connected, Forest, Tree, DirectedTree, DirectedForest, SourceSinkDag };

/// A graph axiom on a distinguished binary predicate (plus Root or
/// Source/Sink unary predicates where the kind needs them).
struct AxiomSpec {
  AxiomKind kind = AxiomKind::Dag;
  std::string edge;
  std::string root;    // DirectedTree
  std::string source;  // SourceSinkDag
  std::string sink;    // SourceSinkDag

  bool operator==(const AxiomSpec&) const = default;
};

/// "dag(R)", "connected(R)", "forest(R)", "tree(R)", "directed_tree(R, Root)",
/// "directed_forest(R)", "dag(R, Source, Sink)". Throws ParseError.
AxiomSpec parse_axiom(std::string_view text);
std::string to_string(const AxiomSpec& a);

/// Checks arities against the signature; throws std::invalid_argument.
/// Source/Sink predicates may be absent (they are added on reduction).
void check_axiom(const AxiomSpec& a, const Signature& sig);

}  // namespace wfomc
