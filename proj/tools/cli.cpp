#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "domir/domir.hpp"

namespace domir::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// An emitted solution failed its independent re-check.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Problems reachable from the command line.
const std::vector<std::string> kProblems = {"cds", "ir-max", "ir-min"};

json vertex_list(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

int workers_from_env() {
  const char* raw = std::getenv(kWorkersEnv);
  if (raw == nullptr || *raw == '\0') return 1;
  try {
    return std::clamp(std::stoi(raw), 1, 256);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kWorkersEnv) + " must be a positive integer");
  }
}

json base_report(const std::string& problem, const std::string& name, const Graph& g) {
  return json{{"problem", problem}, {"instance", name}, {"n", g.n()}, {"m", g.m()}};
}

void finish_report(json& r, int size, const VertexSet& s, json witness, std::uint64_t explored, double elapsed_ms) {
  r["size"] = size;
  r["solution"] = vertex_list(s);
  r["witness"] = std::move(witness);
  r["explored"] = explored;
  r["elapsed_ms"] = elapsed_ms;
  r["version"] = kVersion;
}

json cds_witness_json(const DominationWitness& w) {
  json out = json::array();
  for (std::size_t v = 0; v < w.assignment.size(); ++v)
    if (w.assignment[v] != DominationWitness::kUnassigned)
      out.push_back({static_cast<int>(v) + 1, w.assignment[v] + 1});
  return out;
}

json ir_witness_json(const VertexSet& s, const IrredundantWitness& w) {
  json out = json::array();
  for (Vertex v : s) out.push_back({v + 1, w.unique_of[v] + 1});
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure("re-verification failed: " + what);
}

json run_cds(const std::string& name, const CapacitatedInstance& inst, const CdsResult& res, const std::string& tag) {
  require(static_cast<int>(res.witness.assignment.size()) == inst.n() &&
              check_domination_witness(inst, res.s, res.witness) && verify_capacitated(inst, res.s).has_value(),
          "capacitated dominating set");
  json r = base_report(tag, name, inst.graph);
  finish_report(r, res.s.count(), res.s, cds_witness_json(res.witness), res.subsets_examined, millis(res.elapsed));
  return r;
}

json solve_problem(const std::string& problem, const std::string& name, const CapacitatedInstance& inst,
                   int workers) {
  if (problem == "cds") {
    CdsOptions opts;
    opts.workers = workers;
    return run_cds(name, inst, solve_exact(inst, opts), "cds");
  }
  const Graph& g = inst.graph;
  const auto start = std::chrono::steady_clock::now();
  if (problem == "ir-max") {
    IrMaxResult res = solve_IR(g);
    const double ms = millis(std::chrono::steady_clock::now() - start);
    require(res.set.count() == res.size && check_irredundant_witness(g, res.set, res.witness), "irredundant set");
    json r = base_report("ir-max", name, g);
    finish_report(r, res.size, res.set, ir_witness_json(res.set, res.witness), res.stats.nodes, ms);
    return r;
  }
  if (problem == "ir-min") {
    IrMinResult res = solve_ir(g);
    const double ms = millis(std::chrono::steady_clock::now() - start);
    require(res.set.count() == res.size && check_irredundant_witness(g, res.set, res.witness) &&
                is_maximal_irredundant(g, res.set),
            "inclusion-maximal irredundant set");
    json r = base_report("ir-min", name, g);
    finish_report(r, res.size, res.set, ir_witness_json(res.set, res.witness), res.sets_visited, ms);
    return r;
  }
  throw std::invalid_argument("unknown problem '" + problem + "' (expected cds, ir-max or ir-min)");
}

json oracle_problem(const std::string& problem, const std::string& name, const CapacitatedInstance& inst,
                    const OracleOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult res;
  json witness;
  const Graph& g = inst.graph;
  if (problem == "cds") {
    res = brute_cds(inst, opts);
  } else if (problem == "ir-max") {
    res = brute_IR(g, opts);
  } else if (problem == "ir-min") {
    res = brute_ir(g, opts);
  } else {
    throw std::invalid_argument("unknown problem '" + problem + "' (expected cds, ir-max or ir-min)");
  }
  const double ms = millis(std::chrono::steady_clock::now() - start);
  const VertexSet& best = res.all_optima.front();
  if (problem == "cds") {
    auto w = verify_capacitated(inst, best);
    require(w.has_value(), "oracle capacitated dominating set");
    witness = cds_witness_json(*w);
  } else {
    auto w = is_irredundant(g, best);
    require(w.has_value(), "oracle irredundant set");
    witness = ir_witness_json(best, *w);
  }
  json r = base_report("oracle-" + problem, name, g);
  finish_report(r, res.size, best, std::move(witness), res.enumerated, ms);
  json optima = json::array();
  for (const auto& s : res.all_optima) optima.push_back(vertex_list(s));
  r["optima"] = std::move(optima);
  return r;
}

json recurrence_json(const RecurrenceReport& rep, bool all_cases) {
  auto case_json = [](const RecurrenceCase& c) {
    const char* verdict = c.verdict == RecurrenceCase::Verdict::kPass   ? "pass"
                          : c.verdict == RecurrenceCase::Verdict::kFail ? "fail"
                                                                        : "inconclusive";
    return json{{"case", c.label()}, {"margin", static_cast<double>(c.margin)}, {"verdict", verdict}};
  };
  json failures = json::array();
  for (const auto& c : rep.failures) failures.push_back(case_json(c));
  json r{{"alpha", static_cast<double>(rep.alpha)},
         {"all_pass", rep.all_pass},
         {"cases_checked", rep.cases_checked},
         {"min_margin", static_cast<double>(rep.min_margin)},
         {"binding_case", rep.binding_case},
         {"failures", std::move(failures)},
         {"version", kVersion}};
  if (all_cases) {
    json cases = json::array();
    for (const auto& c : rep.cases) cases.push_back(case_json(c));
    r["cases"] = std::move(cases);
  }
  return r;
}

std::string instance_name(const std::string& path) { return fs::path(path).filename().string(); }

bool is_instance_file(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".cds" || ext == ".graph";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Seeded G(n, p) corpus: capacities uniform in {0..3}, sizes small enough
// that every problem finishes well inside a minute per instance.
void generate_corpus(const fs::path& dir, std::uint64_t seed, int per_cell) {
  fs::create_directories(dir);
  InstanceGenerator gen(seed);
  for (int n : {10, 14, 18}) {
    for (int pct : {20, 50}) {
      for (int i = 0; i < per_cell; ++i) {
        CapacitatedInstance inst = gen.capacitated_gnp(n, pct / 100.0, 3);
        std::ostringstream name;
        name << "gnp_n" << std::setw(2) << std::setfill('0') << n << "_p" << pct << "_" << i << ".cds";
        std::ofstream out(dir / name.str());
        out << "c G(n,p) instance, n=" << n << " p=0." << pct << " seed=" << seed << " index=" << i << '\n';
        out << serialize_instance(inst);
      }
    }
  }
}

void bench_table_row(std::ostream& err, const json& r) {
  err << std::left << std::setw(28) << r["instance"].get<std::string>() << std::setw(8) << r["problem"].get<std::string>()
      << std::right << std::setw(4) << r["n"].get<int>() << std::setw(6) << r["m"].get<int>() << std::setw(6)
      << r["size"].get<int>() << std::setw(12) << r["explored"].get<std::uint64_t>() << std::setw(12) << std::fixed
      << std::setprecision(2) << r["elapsed_ms"].get<double>() << '\n';
}

int run_bench(const std::string& dir, std::optional<std::uint64_t> seed, int per_cell,
              const std::vector<std::string>& problems, std::ostream& out, std::ostream& err) {
  for (const auto& p : problems)
    if (std::find(kProblems.begin(), kProblems.end(), p) == kProblems.end())
      throw std::invalid_argument("unknown problem '" + p + "'");
  if (seed) generate_corpus(dir, *seed, per_cell);
  if (!fs::is_directory(dir)) throw std::runtime_error("bench directory '" + dir + "' does not exist");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && is_instance_file(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .cds or .graph instances in '" + dir + "'");

  struct Job {
    fs::path file;
    std::string problem;
  };
  std::vector<Job> jobs;
  for (const auto& f : files)
    for (const auto& p : problems) jobs.push_back({f, p});

  const int workers = workers_from_env();
  std::vector<std::promise<json>> promises(jobs.size());
  std::vector<std::future<json>> futures;
  for (auto& p : promises) futures.push_back(p.get_future());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const CapacitatedInstance inst = read_instance_file(jobs[i].file.string());
        promises[i].set_value(solve_problem(jobs[i].problem, instance_name(jobs[i].file.string()), inst, 1));
      } catch (const ParseError& e) {
        promises[i].set_exception(std::make_exception_ptr(std::runtime_error(jobs[i].file.string() + ": " + e.what())));
      } catch (...) {
        promises[i].set_exception(std::current_exception());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);

  // Single writer, input order.
  err << std::left << std::setw(28) << "instance" << std::setw(8) << "problem" << std::right << std::setw(4) << "n"
      << std::setw(6) << "m" << std::setw(6) << "size" << std::setw(12) << "explored" << std::setw(12) << "ms" << '\n';
  std::exception_ptr first_error;
  for (auto& f : futures) {
    try {
      json r = f.get();
      out << r.dump() << '\n';
      bench_table_row(err, r);
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for capacitated domination and irredundance", "domir"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string problem, file, c_text, dir, problems_csv = "cds,ir-max,ir-min";
  double alpha = 1.40202;
  bool all_cases = false;
  int oracle_limit = 16;
  int per_cell = 2;
  std::optional<std::uint64_t> seed;

  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("problem", problem, "cds | ir-max | ir-min")->required();
  solve->add_option("file", file, "Instance file")->required();

  auto* approx = app.add_subcommand("approx", "Approximate capacitated domination with forced sets up to c*n");
  approx->add_option("problem", problem, "cds")->required();
  approx->add_option("file", file, "Instance file")->required();
  approx->add_option("--c", c_text, "Fraction c in (0, 1/3), e.g. 1/6")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solver");
  oracle->add_option("problem", problem, "cds | ir-max | ir-min")->required();
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--limit", oracle_limit, "Refuse instances with more vertices")->capture_default_str();

  auto* verify = app.add_subcommand("verify-recurrences", "Check every branching inequality at alpha");
  verify->add_option("--alpha", alpha, "Branching constant")->capture_default_str();
  verify->add_flag("--all", all_cases, "List every case, not only failures");

  auto* bench = app.add_subcommand("bench", "Solve every instance in a directory");
  bench->add_option("dir", dir, "Instance directory")->required();
  bench->add_option("--seed", seed, "Generate a seeded G(n,p) corpus into dir first");
  bench->add_option("--count", per_cell, "Instances per (n, p) cell when generating")->capture_default_str();
  bench->add_option("--problems", problems_csv, "Comma-separated problems")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      const CapacitatedInstance inst = read_instance_file(file);
      out << solve_problem(problem, instance_name(file), inst, workers_from_env()).dump() << '\n';
    } else if (*approx) {
      if (problem != "cds") throw std::invalid_argument("approx supports only 'cds'");
      const Rational c = parse_rational(c_text);
      const ApproxBound bound = approx_ratio_bound(c);
      const CapacitatedInstance inst = read_instance_file(file);
      CdsOptions opts;
      opts.workers = workers_from_env();
      json r = run_cds(instance_name(file), inst, solve_approx(inst, c, opts), "cds-approx");
      r["c"] = c.str();
      r["scheme_ratio"] = bound.scheme_ratio.str();
      r["trivial_ratio"] = bound.trivial_ratio.str();
      out << r.dump() << '\n';
    } else if (*oracle) {
      const CapacitatedInstance inst = read_instance_file(file);
      OracleOptions opts;
      opts.max_n = oracle_limit;
      out << oracle_problem(problem, instance_name(file), inst, opts).dump() << '\n';
    } else if (*verify) {
      out << recurrence_json(verify_recurrences(alpha), all_cases).dump() << '\n';
    } else if (*bench) {
      return run_bench(dir, seed, per_cell, split_csv(problems_csv), out, err);
    }
  } catch (const VerificationFailure& e) {
    err << "domir: internal error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const ParseError& e) {
    err << "domir: " << file << ": " << e.what() << '\n';
    return kInputError;
  } catch (const OracleLimitError& e) {
    err << "domir: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "domir: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "domir: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "domir: internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

}  // namespace domir::cli
