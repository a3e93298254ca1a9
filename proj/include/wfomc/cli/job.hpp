#pragma once

// Job descriptions shared by the CLI subcommands, from flags or a JSON file.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfomc/reductions.hpp"

namespace wfomc::cli {

struct WeightEntry {
  std::string predicate;
  std::string w, wbar;  // rational literals
};

struct JobSpec {
  std::string signature;
  std::string sentence;  // empty means true
  std::vector<std::string> axioms;
  std::vector<std::string> constraints;
  std::vector<WeightEntry> weights;
  std::optional<std::uint32_t> n;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> range;
  std::string format = "json";
  unsigned jobs = 1;
  std::optional<double> budget_seconds;
};

/// "lo..hi" with 0 <= lo <= hi.
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text);

/// Flattened triples "P w wbar ..." from the --weight flag.
std::vector<WeightEntry> weight_triples(const std::vector<std::string>& flat);

/// Overwrites fields of `job` with those present in the JSON object.
/// Returns one warning per field that replaced a value given on the command line.
std::vector<std::string> merge_config(JobSpec& job, const nlohmann::json& config);

/// Parses everything. Source/Sink predicates named by a dag axiom but absent
/// from the signature are declared as unary predicates.
Problem build_problem(const JobSpec& job);

}  // namespace wfomc::cli
