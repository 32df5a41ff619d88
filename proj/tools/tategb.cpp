// tategb: Gröbner bases in Tate algebras from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or input error,
// 3 invalid header or parameters.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tategb/engine.hpp"
#include "tategb/errors.hpp"
#include "tategb/systems.hpp"
#include "tategb/text.hpp"
#include "tategb/verify.hpp"

namespace {

using namespace tategb;
using nlohmann::ordered_json;

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBadParameters = 3;

struct StatField {
  const char* name;
  std::size_t EngineStats::*member;
};

constexpr StatField kStatFields[] = {
    {"jpairs_created", &EngineStats::jpairs_created},
    {"jpairs_popped", &EngineStats::jpairs_popped},
    {"skipped_cover", &EngineStats::skipped_cover},
    {"skipped_sig", &EngineStats::skipped_sig},
    {"reductions", &EngineStats::reductions},
    {"zero_reductions", &EngineStats::zero_reductions},
    {"interrupted_reductions", &EngineStats::interrupted_reductions},
    {"diverted", &EngineStats::diverted},
    {"reduction_steps", &EngineStats::reduction_steps},
    {"increments", &EngineStats::increments},
};

double millis(std::chrono::nanoseconds t) { return std::chrono::duration<double, std::milli>(t).count(); }

ordered_json stats_json(const EngineStats& stats) {
  ordered_json out;
  for (const StatField& f : kStatFields) out[f.name] = stats.*f.member;
  out["wall_time_ms"] = millis(stats.wall_time);
  return out;
}

std::vector<std::string> basis_strings(const std::vector<TateSeries>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const TateSeries& g : basis) out.push_back(to_string(g));
  return out;
}

// Writes to `path`, or stdout when it is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  fn(out);
}

// Runs `fn` and maps library exceptions onto exit codes.
template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const HeaderError& e) {
    std::cerr << "invalid header: " << e.what() << '\n';
    return kBadParameters;
  } catch (const BadParameterError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kBadParameters;
  } catch (const ContextError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kBadParameters;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

struct GbArgs {
  std::string input;
  std::string output;
  std::string algo = "vapote";
  bool no_interreduce = false;
  bool interrupt = false;
  bool no_monic = false;
  bool debug_syzygies = false;
  bool json = false;
};

int run_gb(const GbArgs& args) {
  const SystemFile sys = read_system_file(args.input);
  const Algorithm algo = *parse_algorithm(args.algo);
  EngineOptions options;
  options.interreduce = !args.no_interreduce;
  options.interrupt_on_valuation_rise = args.interrupt;
  options.monic_signatures = !args.no_monic;
  options.debug_track_syzygies = args.debug_syzygies;

  const auto start = std::chrono::steady_clock::now();
  const GbResult result = reduced_gb(algo, sys.generators, options);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  with_output(args.output, [&](std::ostream& os) {
    if (args.json) {
      ordered_json doc;
      doc["p"] = sys.ctx->p();
      doc["prec"] = sys.ctx->prec();
      doc["vars"] = sys.ctx->var_names();
      doc["order"] = to_string(sys.ctx->order());
      doc["ring"] = to_string(sys.ctx->ring_mode());
      doc["algo"] = to_string(algo);
      doc["basis"] = basis_strings(result.basis);
      doc["stats"] = stats_json(result.stats);
      doc["time_ms"] = millis(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed));
      os << doc.dump(2) << '\n';
      return;
    }
    write_system(os, *sys.ctx, result.basis);
    os << "# algo " << to_string(algo) << '\n';
    for (const StatField& f : kStatFields) os << "# " << f.name << ' ' << result.stats.*f.member << '\n';
    os << "# wall_time_ms " << millis(result.stats.wall_time) << '\n';
  });
  return 0;
}

int run_verify(const std::string& system_path, const std::string& basis_path, bool membership) {
  const SystemFile sys = read_system_file(system_path);
  const SystemFile basis = read_system_file(basis_path);
  if (!(*sys.ctx == *basis.ctx)) {
    throw HeaderError("system and basis headers differ: '" + format_header(*sys.ctx) + "' vs '" +
                      format_header(*basis.ctx) + "'");
  }
  // Re-home the basis so both sides share one context object.
  std::vector<TateSeries> rehomed;
  std::vector<std::size_t> identity(sys.ctx->num_vars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  for (const TateSeries& g : basis.generators) rehomed.push_back(g.renamed(sys.ctx, identity));

  const VerifyReport report = verify_gb(sys.generators, rehomed, membership);
  if (!report.ok) {
    std::cout << "FAIL: " << report.counterexample << '\n';
    return kVerifyFailed;
  }
  std::cout << "OK: " << rehomed.size() << " elements form a Gröbner basis of " << sys.generators.size()
            << " generators\n";
  return 0;
}

struct BenchRow {
  std::string system;
  Algorithm algo;
  std::chrono::nanoseconds best{std::chrono::nanoseconds::max()};
  EngineStats stats;
};

int run_bench(const std::vector<std::string>& files, const std::vector<std::string>& algo_names,
              unsigned repeat) {
  std::vector<Algorithm> algos;
  for (const std::string& name : algo_names) algos.push_back(*parse_algorithm(name));

  std::cout << std::left << std::setw(28) << "system" << std::setw(12) << "algo" << std::right
            << std::setw(12) << "time_ms" << std::setw(10) << "created" << std::setw(10) << "popped"
            << std::setw(10) << "cover" << std::setw(10) << "sig" << std::setw(10) << "reduce"
            << std::setw(10) << "to_zero" << "\n";
  for (const std::string& file : files) {
    const SystemFile sys = read_system_file(file);
    std::vector<BenchRow> rows;
    for (Algorithm algo : algos) {
      BenchRow row{file, algo};
      for (unsigned r = 0; r < repeat; ++r) {
        const GbResult result = reduced_gb(algo, sys.generators);
        if (result.stats.wall_time < row.best) {
          row.best = result.stats.wall_time;
          row.stats = result.stats;
        }
      }
      rows.push_back(row);
    }
    const auto fastest = std::min_element(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
      return a.best < b.best;
    });
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      const EngineStats& s = it->stats;
      std::ostringstream time;
      time << std::fixed << std::setprecision(3) << millis(it->best) << (it == fastest ? "*" : " ");
      std::cout << std::left << std::setw(28) << it->system << std::setw(12) << to_string(it->algo)
                << std::right << std::setw(12) << time.str() << std::setw(10) << s.jpairs_created
                << std::setw(10) << s.jpairs_popped << std::setw(10) << s.skipped_cover << std::setw(10)
                << s.skipped_sig << std::setw(10) << s.reductions << std::setw(10) << s.zero_reductions
                << "\n";
    }
    const auto baseline = std::find_if(rows.begin(), rows.end(),
                                       [](const BenchRow& r) { return r.algo == Algorithm::buchberger; });
    if (baseline == rows.end()) continue;
    for (const BenchRow& row : rows) {
      if (row.algo != Algorithm::buchberger && baseline->stats.zero_reductions > 0 &&
          row.stats.zero_reductions >= baseline->stats.zero_reductions) {
        std::cerr << "warning: " << file << ": " << to_string(row.algo) << " made "
                  << row.stats.zero_reductions << " reductions to zero, buchberger made "
                  << baseline->stats.zero_reductions << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner bases of ideals in Tate algebras over Q_p, computed mod p^N"};
  app.require_subcommand(1);
  const std::vector<std::string> algo_names = {"buchberger", "pote", "vapote"};

  GbArgs gb;
  auto* gb_cmd = app.add_subcommand("gb", "compute the minimized reduced Gröbner basis of a system file");
  gb_cmd->add_option("input", gb.input, "system file")->required();
  gb_cmd->add_option("-o,--output", gb.output, "write the result here instead of stdout");
  gb_cmd->add_option("--algo", gb.algo, "engine")->check(CLI::IsMember(algo_names))->capture_default_str();
  gb_cmd->add_flag("--no-interreduce", gb.no_interreduce, "skip reduction of inputs and per-increment minimization");
  gb_cmd->add_flag("--interrupt", gb.interrupt, "vapote: stop reductions when the valuation rises");
  gb_cmd->add_flag("--no-monic-sig", gb.no_monic, "vapote: keep the valuation of seeded syzygy signatures");
  gb_cmd->add_flag("--debug-syzygies", gb.debug_syzygies, "carry full syzygy multipliers");
  gb_cmd->add_flag("--json", gb.json, "emit JSON");

  std::string verify_system;
  std::string verify_basis;
  bool membership = false;
  auto* verify_cmd = app.add_subcommand("verify", "check that a basis file is a Gröbner basis of a system file");
  verify_cmd->add_option("system", verify_system, "system file")->required();
  verify_cmd->add_option("basis", verify_basis, "basis file, e.g. the output of gb")->required();
  verify_cmd->add_flag("--membership", membership, "also check every basis element lies in the ideal");

  auto* gen_cmd = app.add_subcommand("gen", "generate a benchmark system file");
  gen_cmd->require_subcommand(1);
  std::string gen_output;

  TorsionSystemSpec torsion;
  auto* torsion_cmd = gen_cmd->add_subcommand("torsion", "common ell-torsion of two Tate curves");
  torsion_cmd->add_option("-o,--output", gen_output, "write here instead of stdout");
  torsion_cmd->add_option("--p", torsion.p, "prime p >= 5")->capture_default_str();
  torsion_cmd->add_option("--ell", torsion.ell, "odd ell >= 3")->capture_default_str();
  torsion_cmd->add_option("--prec", torsion.prec, "precision N")->capture_default_str();

  RandomSystemSpec random;
  std::uint64_t random_p = 5;
  unsigned random_prec = 4;
  std::size_t random_vars = 2;
  std::string random_order = "grevlex";
  auto* random_cmd = gen_cmd->add_subcommand("random", "seeded random system");
  random_cmd->add_option("-o,--output", gen_output, "write here instead of stdout");
  random_cmd->add_option("--seed", random.seed, "RNG seed")->capture_default_str();
  random_cmd->add_option("--p", random_p, "prime p")->capture_default_str();
  random_cmd->add_option("--prec", random_prec, "precision N")->capture_default_str();
  random_cmd->add_option("--vars", random_vars, "number of variables")->capture_default_str();
  random_cmd->add_option("--order", random_order, "grevlex or lex")->capture_default_str();
  random_cmd->add_option("--gens", random.n_gens, "number of generators")->capture_default_str();
  random_cmd->add_option("--terms", random.max_terms, "maximum terms per generator")->capture_default_str();
  random_cmd->add_option("--deg", random.max_deg, "maximum exponent per variable")->capture_default_str();
  random_cmd->add_option("--val", random.max_val, "maximum coefficient valuation")->capture_default_str();

  std::vector<std::string> bench_files;
  std::vector<std::string> bench_algos = algo_names;
  unsigned repeat = 1;
  auto* bench_cmd = app.add_subcommand("bench", "time engines on system files");
  bench_cmd->add_option("files", bench_files, "system files")->required();
  bench_cmd->add_option("--algos", bench_algos, "engines to run")
      ->delimiter(',')
      ->check(CLI::IsMember(algo_names))
      ->capture_default_str();
  bench_cmd->add_option("--repeat", repeat, "runs per engine; the minimum time is reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadParameters;
  }

  if (*gb_cmd) return guarded([&] { return run_gb(gb); });
  if (*verify_cmd) return guarded([&] { return run_verify(verify_system, verify_basis, membership); });
  if (*torsion_cmd) {
    return guarded([&] {
      const SystemFile sys = torsion_system(torsion);
      with_output(gen_output, [&](std::ostream& os) { write_system(os, *sys.ctx, sys.generators); });
      return 0;
    });
  }
  if (*random_cmd) {
    return guarded([&] {
      const auto order = parse_order(random_order);
      if (!order) throw BadParameterError("unknown monomial order '" + random_order + "'");
      const ContextPtr ctx = Context::create(random_p, random_prec, default_var_names(random_vars), *order);
      const std::vector<TateSeries> gens = random_system(random, ctx);
      with_output(gen_output, [&](std::ostream& os) { write_system(os, *ctx, gens); });
      return 0;
    });
  }
  if (*bench_cmd) return guarded([&] { return run_bench(bench_files, bench_algos, repeat); });
  return 0;
}
