#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "retro/reductions.hpp"
#include "retro/workload.hpp"

namespace retro::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RETRO_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return 42;
}

std::vector<Strategy> expand_strategies(const std::string& name) {
  if (name == "all") return {Strategy::Checkpoint, Strategy::Wbt, Strategy::Auto};
  return {*parse_strategy(name)};
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string instance;
  std::size_t ops = 1000;
  std::size_t queries = 200;
  std::uint64_t seed = 42;
  std::string strategy = "all";
};

template <BaseStructure Base>
bool verify_family(const VerifyOptions& opt, std::ostream& out) {
  bool ok = true;
  for (Strategy s : expand_strategies(opt.strategy)) {
    StrategyConfig config;
    config.strategy = s;
    std::mt19937_64 rng(opt.seed);
    FamilyTraits<Base> traits(rng);
    auto subject = make_full_retro<Base>(config, traits.empty());
    const auto report = run_equivalence(*subject, opt.ops, opt.queries, opt.seed, WorkloadShape{}, true);
    const bool pass = report.mismatches == 0 && report.purity_violations == 0;
    ok = ok && pass;
    out << opt.instance << ' ' << to_string(s) << ": edits=" << report.edits << " queries=" << report.queries
        << " mismatches=" << report.mismatches << " purity_violations=" << report.purity_violations << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return ok;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  bool ok = false;
  switch (*parse_family(opt.instance)) {
    case Family::MinPlus: ok = verify_family<MinPlusSum>(opt, out); break;
    case Family::ThreeSum: ok = verify_family<ThreeSum>(opt, out); break;
    case Family::Circuit: ok = verify_family<CircuitPair>(opt, out); break;
  }
  out << (ok ? "verify: all checks passed" : "verify: FAILED") << '\n';
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string instance;
  std::string range = "1024:4096";
  std::string strategy = "all";
  std::string out_path;
  std::uint64_t seed = 42;
  std::size_t n = 8;
  std::size_t jobs = 1;
};

bool power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--m-range expects LO:HI");
  std::size_t lo = 0;
  std::size_t hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw UsageError("bad LO");
    const std::string rest = text.substr(colon + 1);
    hi = std::stoull(rest, &used);
    if (used != rest.size()) throw UsageError("bad HI");
  } catch (const std::logic_error&) {
    throw UsageError("--m-range expects LO:HI integers");
  }
  if (!power_of_two(lo) || !power_of_two(hi) || lo > hi)
    throw UsageError("--m-range bounds must be powers of two with LO <= HI");
  return {lo, hi};
}

BenchRecord bench_cell(Family family, Strategy s, std::size_t n, std::size_t m, std::uint64_t seed) {
  switch (family) {
    case Family::MinPlus: return run_bench_cell<MinPlusSum>(s, n, m, seed);
    case Family::ThreeSum: return run_bench_cell<ThreeSum>(s, n, m, seed);
    case Family::Circuit: return run_bench_cell<CircuitPair>(s, n, m, seed);
  }
  return {};
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  const auto [lo, hi] = parse_range(opt.range);
  const Family family = *parse_family(opt.instance);

  struct Cell {
    Strategy strategy;
    std::size_t m;
  };
  std::vector<Cell> cells;
  for (Strategy s : expand_strategies(opt.strategy))
    for (std::size_t m = lo; m <= hi; m *= 2) cells.push_back({s, m});

  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(opt.out_path, ec) || fs::file_size(opt.out_path, ec) == 0;
  std::ofstream csv(opt.out_path, std::ios::app);
  if (!csv) throw IoError("cannot open " + opt.out_path + " for appending");
  if (fresh) csv << kBenchCsvHeader << '\n';

  // Cells run on worker threads; rows are written by this thread, in cell order.
  std::vector<BenchRecord> records(cells.size());
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == cells.size()) return;
        i = next++;
      }
      records[i] = bench_cell(family, cells[i].strategy, opt.n, cells[i].m, opt.seed);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(opt.jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : records) {
    csv << to_csv_row(r) << '\n';
    out << r.family << ' ' << r.strategy << " m=" << r.m << " calls/query="
        << (r.queries ? static_cast<double>(r.base_apply_calls + r.base_eval_calls) / static_cast<double>(r.queries) : 0.0)
        << '\n';
  }
  csv.flush();
  if (!csv) throw IoError("write to " + opt.out_path + " failed");
  return kOk;
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceOptions {
  std::string problem;
  std::string input;
  std::string strategy = "auto";
  bool check = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

IntVector parse_ints(const std::string& line) {
  IntVector out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(word, &used);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + word + "'");
    }
    if (used != word.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + word + "'");
    out.push_back(v);
  }
  return out;
}

MinPlusInstance parse_minplus(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "missing n");
  const IntVector header = parse_ints(lines[0]);
  if (header.size() != 1 || header[0] < 0) throw Error(ErrorCode::ParseError, "first line must be n");
  const auto n = static_cast<std::size_t>(header[0]);
  if (lines.size() != 1 + 2 * n) throw Error(ErrorCode::ParseError, "expected " + std::to_string(2 * n) + " rows after n");
  MinPlusInstance inst;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    IntVector row = parse_ints(lines[1 + i]);
    if (row.size() != n) throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 2) + " must have n entries");
    (i < n ? inst.matrix : inst.vectors).push_back(std::move(row));
  }
  return inst;
}

ThreeSumInstance parse_3sum(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.size() != 3) throw Error(ErrorCode::ParseError, "expected exactly three lines (A, B, C)");
  ThreeSumInstance inst{parse_ints(lines[0]), parse_ints(lines[1]), parse_ints(lines[2])};
  if (inst.b.size() != inst.a.size() || inst.c.size() != inst.a.size())
    throw Error(ErrorCode::ParseError, "A, B and C must have the same size");
  return inst;
}

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err) {
  StrategyConfig config;
  config.strategy = *parse_strategy(opt.strategy);
  const std::string text = read_file(opt.input);

  if (opt.problem == "minplus") {
    const MinPlusInstance inst = parse_minplus(text);
    VectorStream stream(inst.vectors);
    const IntMatrix products = solve_online_minplus(inst.matrix, stream, config);
    bool agree = true;
    for (std::size_t i = 0; i < products.size(); ++i) {
      for (std::size_t j = 0; j < products[i].size(); ++j) out << (j ? " " : "") << products[i][j];
      out << '\n';
      if (opt.check && products[i] != brute_minplus(inst.matrix, inst.vectors[i])) agree = false;
    }
    if (!agree) {
      err << "check failed: retroactive products differ from direct computation\n";
      return kCheckFailed;
    }
    return kOk;
  }

  if (opt.problem == "3sum") {
    const ThreeSumInstance inst = parse_3sum(text);
    const bool found = solve_3sum_retro(inst, config);
    out << (found ? "TRUE" : "FALSE") << '\n';
    if (opt.check && found != brute_3sum(inst)) {
      err << "check failed: brute force says " << (found ? "FALSE" : "TRUE") << '\n';
      return kCheckFailed;
    }
    return kOk;
  }

  const CircuitDesc circuit = CircuitDesc::parse(text);
  if (!circuit.well_formed()) throw Error(ErrorCode::MalformedCircuit, "netlist is not a well-formed circuit");
  const bool sat = solve_csat_retro(circuit, config);
  out << (sat ? "SAT" : "UNSAT") << '\n';
  if (opt.check && sat != brute_csat(circuit)) {
    err << "check failed: enumeration says " << (sat ? "UNSAT" : "SAT") << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Retroactive data-structure toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"minplus", "3sum", "csat"};

  VerifyOptions verify;
  verify.seed = default_seed();
  auto* v = app.add_subcommand("verify", "Check every strategy against replay on random edits");
  v->add_option("--instance", verify.instance, "Structure family")->required()->check(CLI::IsMember(families));
  v->add_option("--ops", verify.ops, "Random retroactive edits");
  v->add_option("--queries", verify.queries, "Random-time queries");
  v->add_option("--seed", verify.seed, "RNG seed (default: $RETRO_SEED or 42)");
  v->add_option("--strategy", verify.strategy)->check(CLI::IsMember({"checkpoint", "wbt", "auto", "all"}));

  BenchOptions bench;
  bench.seed = default_seed();
  auto* b = app.add_subcommand("bench", "Count partially retroactive calls per query and append CSV rows");
  b->add_option("--instance", bench.instance, "Structure family")->required()->check(CLI::IsMember(families));
  b->add_option("--m-range", bench.range, "LO:HI, powers of two; one row per doubling");
  b->add_option("--strategy", bench.strategy)->check(CLI::IsMember({"checkpoint", "wbt", "auto", "all"}));
  b->add_option("--out", bench.out_path, "CSV file (appended)")->required();
  b->add_option("--seed", bench.seed, "RNG seed (default: $RETRO_SEED or 42)");
  b->add_option("--n", bench.n, "Target structure size");
  b->add_option("--jobs", bench.jobs, "Worker threads");

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "Solve a problem instance through fully retroactive queries");
  r->add_option("problem", reduce.problem, "minplus | 3sum | csat")->required()->check(CLI::IsMember(families));
  r->add_option("--input", reduce.input, "Instance file")->required();
  r->add_option("--strategy", reduce.strategy)->check(CLI::IsMember({"checkpoint", "wbt", "auto", "oracle"}));
  r->add_flag("--check", reduce.check, "Cross-check against brute force");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out);
    if (b->parsed()) return cmd_bench(bench, out);
    return cmd_reduce(reduce, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::MalformedCircuit ||
                   e.code() == ErrorCode::OddInputCount || e.code() == ErrorCode::DimensionMismatch
               ? kUsage
               : kCheckFailed;
  }
}

}  // namespace retro::cli
