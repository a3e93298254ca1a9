#pragma once

// Helpers shared by the test binaries.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wfomc/oracle.hpp"
#include "wfomc/reductions.hpp"

#ifndef WFOMC_FIXTURE_DIR
#error "WFOMC_FIXTURE_DIR must be defined"
#endif

namespace wfomc::test {

/// Rows of a fixture CSV (header dropped), each split on commas.
inline std::vector<std::vector<std::string>> read_fixture(const std::string& name) {
  std::ifstream in(std::string(WFOMC_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

/// n -> count from a two-column fixture.
inline std::map<std::uint32_t, Integer> sequence_fixture(const std::string& name) {
  std::map<std::uint32_t, Integer> out;
  for (const auto& r : read_fixture(name)) out[std::stoul(r.at(0))] = Integer(r.at(1));
  return out;
}

/// Builds a problem from text pieces; weights are (P, w, wbar) triples.
inline Problem problem(const std::string& sig, const std::string& sentence, const std::vector<std::string>& axioms = {},
                       const std::vector<std::string>& constraints = {},
                       const std::vector<std::tuple<std::string, std::string, std::string>>& weights = {}) {
  Problem p;
  p.signature = parse_signature(sig);
  for (const auto& a : axioms) {
    AxiomSpec spec = parse_axiom(a);
    if (spec.kind == AxiomKind::SourceSinkDag) {
      for (const auto& name : {spec.source, spec.sink})
        if (!p.signature.contains(name)) p.signature.add({name, 1});
    }
    p.axioms.push_back(spec);
  }
  if (!sentence.empty()) p.sentence = parse_sentence(sentence, p.signature);
  for (const auto& c : constraints) p.constraints.push_back(CardinalityConstraint::parse(c, p.signature));
  for (const auto& [pred, w, wbar] : weights) p.weights.set(pred, parse_rational(w), parse_rational(wbar));
  return p;
}

inline constexpr const char* kUndirected = "forall x y. ~R(x,x) & (R(x,y) -> R(y,x))";

}  // namespace wfomc::test
