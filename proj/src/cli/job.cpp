#include "wfomc/cli/job.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc::cli {

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::uint32_t parse_size(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad domain size '" + s + "'");
  const unsigned long v = std::stoul(s);
  if (v > 100000) throw ParseError("domain size too large: " + s);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like lo..hi");
  const auto lo = parse_size(text.substr(0, dots));
  const auto hi = parse_size(text.substr(dots + 2));
  if (lo > hi) throw ParseError("range lower bound exceeds upper bound");
  return {lo, hi};
}

std::vector<WeightEntry> weight_triples(const std::vector<std::string>& flat) {
  if (flat.size() % 3 != 0) throw ParseError("--weight takes a predicate and two rationals");
  std::vector<WeightEntry> out;
  for (std::size_t i = 0; i < flat.size(); i += 3) out.push_back({flat[i], flat[i + 1], flat[i + 2]});
  return out;
}

std::vector<std::string> merge_config(JobSpec& job, const nlohmann::json& config) {
  if (!config.is_object()) throw ParseError("config must be a JSON object");
  std::vector<std::string> warnings;
  auto note = [&](const char* key, bool given) {
    if (given) warnings.push_back(std::string("config value for '") + key + "' overrides the command line");
  };
  auto strings = [](const nlohmann::json& v) {
    std::vector<std::string> out;
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else {
      for (const auto& e : v) out.push_back(e.get<std::string>());
    }
    return out;
  };
  try {
    for (const auto& [key, v] : config.items()) {
      if (key == "sig" || key == "signature") {
        const auto s = v.get<std::string>();
        note("sig", !job.signature.empty() && job.signature != s);
        job.signature = s;
      } else if (key == "formula" || key == "sentence") {
        const auto s = v.get<std::string>();
        note("formula", !job.sentence.empty() && job.sentence != s);
        job.sentence = s;
      } else if (key == "axiom" || key == "axioms") {
        auto s = strings(v);
        note("axioms", !job.axioms.empty() && job.axioms != s);
        job.axioms = std::move(s);
      } else if (key == "card" || key == "cards" || key == "constraints") {
        auto s = strings(v);
        note("card", !job.constraints.empty() && job.constraints != s);
        job.constraints = std::move(s);
      } else if (key == "weight" || key == "weights") {
        std::vector<WeightEntry> ws;
        for (const auto& e : v) {
          if (!e.is_array() || e.size() != 3) throw ParseError("each weight must be [predicate, w, wbar]");
          ws.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
        }
        note("weight", !job.weights.empty());
        job.weights = std::move(ws);
      } else if (key == "n") {
        const auto n = v.get<std::uint32_t>();
        note("n", job.n && *job.n != n);
        job.n = n;
      } else if (key == "range") {
        const auto r = parse_range(v.get<std::string>());
        note("range", job.range && *job.range != r);
        job.range = r;
      } else if (key == "format") {
        const auto f = v.get<std::string>();
        note("format", job.format != f);
        job.format = f;
      } else if (key == "jobs") {
        const auto j = v.get<unsigned>();
        note("jobs", job.jobs != 1 && job.jobs != j);
        job.jobs = j;
      } else if (key == "budget") {
        const auto b = v.get<double>();
        note("budget", job.budget_seconds && *job.budget_seconds != b);
        job.budget_seconds = b;
      } else {
        throw ParseError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  }
  return warnings;
}

Problem build_problem(const JobSpec& job) {
  Problem p;
  p.signature = parse_signature(job.signature);
  for (const auto& text : job.axioms) {
    AxiomSpec a = parse_axiom(text);
    if (a.kind == AxiomKind::SourceSinkDag) {
      for (const auto& name : {a.source, a.sink})
        if (!p.signature.contains(name)) p.signature.add({name, 1});
    }
    check_axiom(a, p.signature);
    p.axioms.push_back(std::move(a));
  }
  if (!blank(job.sentence)) p.sentence = parse_sentence(job.sentence, p.signature);
  for (const auto& text : job.constraints) p.constraints.push_back(CardinalityConstraint::parse(text, p.signature));
  for (const auto& w : job.weights) {
    if (!p.signature.contains(w.predicate)) throw ParseError("weight for unknown predicate " + w.predicate);
    p.weights.set(w.predicate, parse_rational(w.w), parse_rational(w.wbar));
  }
  return p;
}

}  // namespace wfomc::cli
