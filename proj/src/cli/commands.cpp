#include "wfomc/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfomc/budget.hpp"
#include "wfomc/cli/job.hpp"
#include "wfomc/error.hpp"
#include "wfomc/mln.hpp"
#include "wfomc/oracle.hpp"

namespace wfomc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Clock::time_point> deadline_for(const std::optional<double>& seconds) {
  if (!seconds) return std::nullopt;
  if (*seconds <= 0) throw ParseError("--budget must be positive");
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t rounded_ms(Clock::time_point start) { return static_cast<std::int64_t>(elapsed_ms(start) + 0.5); }

void put_rational(Json& j, const char* key, const Rational& q) {
  j[key] = to_string(q);
  if (q.get_den() != 1) j[std::string(key) + "_decimal"] = to_decimal(q);
}

std::string csv_rational(const Rational& q) { return q.get_den() == 1 ? to_string(q) : to_string(q) + "," + to_decimal(q); }

// Flags shared by the job-driven subcommands.
struct JobFlags {
  JobSpec job;
  std::string formula_file;
  std::string config;
  std::vector<std::string> weight_flat;
  std::vector<std::string> oracle_weight_flat;
  std::string range;
  std::optional<std::uint32_t> n;
  std::optional<double> budget;
  bool no_timing = false;

  void attach(CLI::App* app, bool with_range, bool with_n = true) {
    app->add_option("--sig", job.signature, "signature, e.g. \"R/2, A/1\"");
    auto* f = app->add_option("--formula", job.sentence, "sentence, e.g. \"forall x y. ~R(x,x)\"");
    app->add_option("--file", formula_file, "read the sentence from a file")->excludes(f);
    app->add_option("--axiom", job.axioms, "graph axiom, e.g. \"dag(R)\" (repeatable)");
    app->add_option("--card", job.constraints, "cardinality constraint, e.g. \"|R| = 2*n - 2\" (repeatable)");
    app->add_option("--weight", weight_flat, "P w wbar (repeatable)")->expected(3)->allow_extra_args(false);
    if (with_n) app->add_option("-n", n, "domain size");
    if (with_range) app->add_option("--range", range, "domain sizes lo..hi");
    app->add_option("--format", job.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--budget", budget, "wall-clock budget in seconds");
    app->add_option("--config", config, "JSON job file; its values win over flags");
    app->add_flag("--no-timing", no_timing, "omit wall_time_ms for byte-stable output");
  }

  JobSpec resolve(std::ostream& err) {
    if (!formula_file.empty()) job.sentence = read_file(formula_file);
    job.weights = weight_triples(weight_flat);
    job.n = n;
    if (!range.empty()) job.range = parse_range(range);
    job.budget_seconds = budget;
    if (!config.empty()) {
      nlohmann::json cfg;
      try {
        cfg = nlohmann::json::parse(read_file(config));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad config: ") + e.what());
      }
      for (const auto& w : merge_config(job, cfg)) err << "warning: " << w << "\n";
    }
    return job;
  }
};

int cmd_count(JobFlags& flags, std::ostream& out, std::ostream& err) {
  const JobSpec job = flags.resolve(err);
  if (!job.n) throw ParseError("count needs -n");
  const Problem p = build_problem(job);
  const auto start = Clock::now();
  Rational value;
  {
    DeadlineScope scope(deadline_for(job.budget_seconds));
    value = solve(p, *job.n);
  }
  if (job.format == "csv") {
    out << "n,count\n" << *job.n << "," << csv_rational(value) << "\n";
  } else {
    Json j;
    j["n"] = *job.n;
    put_rational(j, "count", value);
    if (!flags.no_timing) j["wall_time_ms"] = rounded_ms(start);
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_sequence(JobFlags& flags, std::ostream& out, std::ostream& err) {
  JobSpec job = flags.resolve(err);
  if (!job.range) {
    if (!job.n) throw ParseError("sequence needs --range lo..hi");
    job.range = std::pair{*job.n, *job.n};
  }
  if (job.format.empty()) job.format = "csv";
  const Problem p = build_problem(job);
  const auto [lo, hi] = *job.range;
  const std::size_t count = hi - lo + 1;
  const auto deadline = deadline_for(job.budget_seconds);

  struct Row {
    std::optional<Rational> value;
    std::exception_ptr error;
    std::int64_t ms = 0;
  };
  std::vector<Row> rows(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    DeadlineScope scope(deadline);
    for (;;) {
      const std::size_t i = next++;
      if (i >= count || stop) return;
      const auto start = Clock::now();
      try {
        rows[i].value = solve(p, lo + static_cast<std::uint32_t>(i));
      } catch (...) {
        rows[i].error = std::current_exception();
        stop = true;  // later sizes are at least as hard
      }
      rows[i].ms = rounded_ms(start);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(job.jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json arr = Json::array();
  if (job.format == "csv") out << "n,count\n";
  std::exception_ptr failure;
  for (std::size_t i = 0; i < count; ++i) {
    if (!rows[i].value) {
      failure = rows[i].error;
      break;
    }
    const std::uint32_t n = lo + static_cast<std::uint32_t>(i);
    if (job.format == "csv") {
      out << n << "," << csv_rational(*rows[i].value) << "\n";
    } else {
      Json j;
      j["n"] = n;
      put_rational(j, "count", *rows[i].value);
      if (!flags.no_timing) j["wall_time_ms"] = rows[i].ms;
      arr.push_back(std::move(j));
    }
  }
  if (job.format == "json") out << arr.dump() << "\n";
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const BudgetExceeded&) {
      err << "budget exhausted; stopped before the first unfinished size\n";
      return kOk;
    }
  }
  return kOk;
}

int cmd_oracle(JobFlags& flags, std::ostream& out, std::ostream& err) {
  const JobSpec job = flags.resolve(err);
  if (!job.n) throw ParseError("oracle needs -n");
  const Problem p = build_problem(job);
  Problem brute = p;
  for (const auto& w : weight_triples(flags.oracle_weight_flat)) {
    if (!brute.signature.contains(w.predicate)) throw ParseError("weight for unknown predicate " + w.predicate);
    brute.weights.set(w.predicate, parse_rational(w.w), parse_rational(w.wbar));
  }
  const auto start = Clock::now();
  DeadlineScope scope(deadline_for(job.budget_seconds));
  const Rational oracle = enumerate_weighted(brute, *job.n);
  const Rational engine = solve(p, *job.n);
  const bool match = engine == oracle;
  if (job.format == "csv") {
    out << "n,engine,oracle,match\n"
        << *job.n << "," << to_string(engine) << "," << to_string(oracle) << "," << (match ? "true" : "false")
        << "\n";
  } else {
    Json j;
    j["n"] = *job.n;
    j["engine"] = to_string(engine);
    j["oracle"] = to_string(oracle);
    j["match"] = match;
    if (!flags.no_timing) j["wall_time_ms"] = rounded_ms(start);
    out << j.dump() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- mln

struct MlnFlags {
  std::string preset;
  std::string file;
  std::optional<std::uint32_t> n;
  std::string format = "json";
  std::optional<double> budget;
  bool no_timing = false;
  // query
  std::string query;
  std::vector<std::string> query_axioms;
  std::vector<std::string> query_cards;
  // dist
  std::string statistic;

  void attach(CLI::App* app) {
    auto* p = app->add_option("--preset", preset, "built-in model (see `mln presets`)");
    app->add_option("--file", file, "MLN file")->excludes(p);
    app->add_option("-n", n, "domain size")->required();
    app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--budget", budget, "wall-clock budget in seconds");
    app->add_flag("--no-timing", no_timing, "omit wall_time_ms");
  }

  MlnModel model() const {
    if (!preset.empty()) {
      try {
        return wfomc::preset(preset);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    if (file.empty()) throw ParseError("mln needs --preset or --file");
    return parse_mln(read_file(file));
  }
};

int cmd_mln(const std::string& which, MlnFlags& f, std::ostream& out) {
  const MlnModel m = f.model();
  const auto start = Clock::now();
  DeadlineScope scope(deadline_for(f.budget));
  Json j;
  j["n"] = *f.n;
  if (which == "partition") {
    const Rational z = partition(m, *f.n);
    if (f.format == "csv") {
      out << "n,partition\n" << *f.n << "," << csv_rational(z) << "\n";
      return kOk;
    }
    put_rational(j, "partition", z);
  } else if (which == "query") {
    MlnQuery q;
    if (!f.query.empty()) q.sentence = parse_sentence(f.query, m.signature);
    for (const auto& a : f.query_axioms) {
      q.axioms.push_back(parse_axiom(a));
      check_axiom(q.axioms.back(), m.signature);
    }
    for (const auto& c : f.query_cards) q.constraints.push_back(CardinalityConstraint::parse(c, m.signature));
    const Rational pr = query_probability(m, q, *f.n);
    if (f.format == "csv") {
      out << "n,probability,decimal\n" << *f.n << "," << to_string(pr) << "," << to_decimal(pr) << "\n";
      return kOk;
    }
    j["probability"] = to_string(pr);
    j["probability_decimal"] = to_decimal(pr);
  } else {
    if (f.statistic.empty()) throw ParseError("dist needs --stat P");
    if (!m.signature.contains(f.statistic)) throw ParseError("unknown predicate " + f.statistic);
    const Distribution d = statistic_distribution(m, f.statistic, *f.n);
    if (f.format == "csv") {
      out << "value,probability,decimal\n";
      for (const auto& [s, p] : d.mass) out << s << "," << to_string(p) << "," << to_decimal(p) << "\n";
      return kOk;
    }
    j["predicate"] = f.statistic;
    Json rows = Json::array();
    for (const auto& [s, p] : d.mass) rows.push_back({{"value", s}, {"probability", to_string(p)}, {"decimal", to_decimal(p)}});
    j["distribution"] = std::move(rows);
    j["expectation"] = to_string(d.expectation);
    j["expectation_decimal"] = to_decimal(d.expectation);
  }
  if (!f.no_timing) j["wall_time_ms"] = rounded_ms(start);
  out << j.dump() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weighted first-order model counting for two-variable sentences with graph axioms", "wfomc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wfomc 1.0.0");

  JobFlags count_flags, seq_flags, oracle_flags;
  auto* count = app.add_subcommand("count", "weighted model count for one domain size");
  count_flags.attach(count, false);
  auto* seq = app.add_subcommand("sequence", "counts over a range of domain sizes");
  seq_flags.job.format = "csv";
  seq_flags.attach(seq, true);
  seq->add_option("--jobs", seq_flags.job.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  auto* orc = app.add_subcommand("oracle", "engine against brute-force enumeration");
  oracle_flags.attach(orc, false);
  orc->add_option("--oracle-weight", oracle_flags.oracle_weight_flat)->expected(3)->group("");

  MlnFlags mf;
  auto* mln = app.add_subcommand("mln", "Markov logic network inference");
  mln->require_subcommand(1);
  auto* part = mln->add_subcommand("partition", "partition function");
  mf.attach(part);
  auto* query = mln->add_subcommand("query", "probability of extra hard knowledge");
  MlnFlags mq;
  mq.attach(query);
  query->add_option("--query", mq.query, "sentence");
  query->add_option("--query-axiom", mq.query_axioms, "axiom (repeatable)");
  query->add_option("--query-card", mq.query_cards, "cardinality constraint (repeatable)");
  auto* dist = mln->add_subcommand("dist", "distribution of a predicate's cardinality");
  MlnFlags md;
  md.attach(dist);
  dist->add_option("--stat", md.statistic, "predicate")->required();
  auto* presets = mln->add_subcommand("presets", "list built-in models");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (count->parsed()) return cmd_count(count_flags, out, err);
    if (seq->parsed()) return cmd_sequence(seq_flags, out, err);
    if (orc->parsed()) return cmd_oracle(oracle_flags, out, err);
    if (part->parsed()) return cmd_mln("partition", mf, out);
    if (query->parsed()) return cmd_mln("query", mq, out);
    if (dist->parsed()) return cmd_mln("dist", md, out);
    if (presets->parsed()) {
      for (const auto& name : preset_names()) out << name << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedFragment& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const OracleCapExceeded& e) {
    err << "oracle cap exceeded: " << e.what() << "\n";
    return kOracleCap;
  } catch (const ZeroPartition& e) {
    err << "zero partition: " << e.what() << "\n";
    return kFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace wfomc::cli
