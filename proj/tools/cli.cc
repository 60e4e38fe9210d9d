// Copyright 2026 The nashlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nashlab/affine_nash.h"
#include "nashlab/dynamics.h"
#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/game_io.h"
#include "nashlab/proving_game.h"
#include "nashlab/reductions.h"
#include "nashlab/rng.h"
#include "nashlab/simplex.h"
#include "nashlab/trajectory.h"

namespace nashlab {

namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

struct Context {
  fs::path outdir;
  std::uint64_t seed = 0;
  Execution exec = Execution::kParallel;
  Json params = Json::object();
  Json inputs = Json::array();
  Json outputs = Json::array();
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  int status = kExitOk;  // outputs are still written when this is nonzero

  fs::path output(const std::string& name) {
    outputs.push_back(name);
    return outdir / name;
  }
  Game load_game(const std::string& path) {
    inputs.push_back(path);
    return read_game(path);
  }
};

struct Options {
  // common
  std::string output = "out";
  int jobs = 0;
  std::optional<std::uint64_t> seed;
  // inputs
  std::string game;
  std::string subspace;
  std::string start = "random";
  std::string manifest;
  // game gen
  std::string builtin;
  int rows = 0;
  int cols = 0;
  // dynamics
  std::string type = "1";
  double k = kDefaultSlowdown;
  double alpha = kDefaultAlpha;
  double eta = 0.01;
  double eps_fix = kDefaultEpsFix;
  std::int64_t max_steps = kDefaultMaxSteps;
  std::size_t target = 0;
  int samples = 1000;
  // reductions
  int trials = 20;
  bool forward_ray = false;
  // proving game
  std::string bob = "grid";
  PgConfig pg;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("NDL_SEED")) {
    const std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      throw ArgumentError("NDL_SEED must be a non-negative integer");
    }
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw ArgumentError("NDL_SEED out of range");
    }
  }
  return 0;
}

Execution configure_jobs(int jobs) {
  if (jobs < 0) throw ArgumentError("--jobs must be >= 0");
  if (jobs > 0) omp_set_num_threads(jobs);
  return jobs == 1 ? Execution::kSerial : Execution::kParallel;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Output directory");
  cmd->add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)");
  cmd->add_option("--seed", o.seed, "Seed (falls back to NDL_SEED, then 0)");
}

// ---- commands ----

void cmd_game_gen(const Options& o, Context& ctx) {
  const bool sized = o.rows != 0 || o.cols != 0;
  if (o.builtin.empty() == !sized) {
    throw ArgumentError("give either --builtin or --rows/--cols");
  }
  Game g = builtin::matching_pennies();
  if (!o.builtin.empty()) {
    if (o.builtin == "matching-pennies") {
      g = builtin::matching_pennies();
    } else if (o.builtin == "battle-of-sexes") {
      g = builtin::battle_of_sexes();
    } else if (o.builtin == "degenerate") {
      g = builtin::degenerate_2x2();
    } else {
      throw ArgumentError("unknown builtin '" + o.builtin + "'");
    }
    ctx.params["builtin"] = o.builtin;
  } else {
    for (int n : {o.rows, o.cols}) {
      if (n < 2 || n > kMaxDeskStrategies) {
        throw ArgumentError("--rows and --cols must lie in [2, " +
                            std::to_string(kMaxDeskStrategies) + "]");
      }
    }
    g = random_nondegenerate_game(o.rows, o.cols, ctx.seed);
    ctx.params["rows"] = o.rows;
    ctx.params["cols"] = o.cols;
  }
  write_game(g, ctx.output("game.json"));
  *ctx.out << "game " << g.fingerprint() << '\n';
}

void cmd_solve_enum(const Options& o, Context& ctx) {
  const Game g = ctx.load_game(o.game);
  const auto set = enumerate_nash(g, ctx.exec);
  write_json(equilibrium_set_to_json(g, set), ctx.output("equilibria.json"));
  *ctx.out << set.size() << " equilibria\n";
}

void cmd_solve_subspace(const Options& o, Context& ctx, bool line) {
  const Game g = ctx.load_game(o.game);
  ctx.inputs.push_back(o.subspace);
  const auto space = subspace_from_json(g, read_json(o.subspace));
  const auto sol =
      line ? nash_on_line(g, space) : nash_on_affine(g, space, ctx.exec);
  const Json j = solution_to_json(space, sol);
  write_json(j, ctx.output("solution.json"));
  *ctx.out << j.size() << " solution pieces\n";
}

FloatProfile start_profile(const Options& o, const Game& g, Context& ctx) {
  if (o.start == "random") {
    CounterRng rng(ctx.seed, 1);
    return random_profile(g.strategy_counts(), rng);
  }
  ctx.inputs.push_back(o.start);
  FloatProfile x = float_profile_from_json(read_json(o.start));
  check_profile(x, g.strategy_counts());
  return x;
}

struct BuiltDynamic {
  StepFn step;
  LyapunovFn lyapunov;
  EquilibriumSet equilibria;
};

BuiltDynamic build_dynamic(const Options& o, const Game& g, Context& ctx) {
  ctx.params["type"] = o.type;
  if (o.type == "bnn") {
    ctx.params["eta"] = o.eta;
    const double eta = o.eta;
    return {[g, eta](const FloatProfile& x) { return bnn_step(g, x, eta); },
            {},
            {}};
  }
  auto eq = enumerate_nash(g, ctx.exec);
  ctx.params["k"] = o.k;
  if (o.type == "1") {
    ctx.params["target"] = o.target;
    Type1Dynamic d(eq, o.target, o.k);
    return {d.step_fn(), d.lyapunov_fn(), std::move(eq)};
  }
  if (o.type == "2") {
    ctx.params["alpha"] = o.alpha;
    Type2Dynamic d(eq, ctx.seed, o.alpha, o.k);
    return {d.step_fn(), d.lyapunov_fn(), std::move(eq)};
  }
  throw ArgumentError("--type must be 1, 2 or bnn");
}

void cmd_dyn_run(const Options& o, Context& ctx) {
  const Game g = ctx.load_game(o.game);
  const auto dyn = build_dynamic(o, g, ctx);
  const FloatProfile x0 = start_profile(o, g, ctx);
  TrajectoryOptions opts;
  opts.eps_fix = o.eps_fix;
  opts.max_steps = o.max_steps;
  ctx.params["start"] = o.start;
  ctx.params["eps_fix"] = o.eps_fix;
  ctx.params["max_steps"] = o.max_steps;
  const auto traj = run_trajectory(dyn.step, dyn.lyapunov, x0, opts);
  write_trajectory_csv(traj, ctx.output("trajectory.csv"));
  *ctx.out << to_string(traj.reason) << " after " << traj.total_steps
           << " steps\n";
  if (traj.reason == Termination::kLeftDomain) {
    // A dynamic that leaves X is broken, not misused.
    *ctx.err << "internal error: trajectory left the profile space\n";
    ctx.status = kExitInvariant;
  }
}

void cmd_dyn_verify(const Options& o, Context& ctx) {
  if (o.type != "1" && o.type != "2") {
    throw ArgumentError("verify-lyapunov needs --type 1 or 2");
  }
  const Game g = ctx.load_game(o.game);
  const auto dyn = build_dynamic(o, g, ctx);
  if (o.samples < 1) throw ArgumentError("--samples must be positive");
  ctx.params["samples"] = o.samples;
  int evaluated = 0;
  int decreased = 0;
  Json failures = Json::array();
  for (int i = 0; i < o.samples; ++i) {
    CounterRng rng(ctx.seed, static_cast<std::uint64_t>(i));
    const FloatProfile x = random_profile(g.strategy_counts(), rng);
    if (regret(g, x) <= 1e-9) continue;
    ++evaluated;
    const double before = dyn.lyapunov(x);
    const double after = dyn.lyapunov(dyn.step(x));
    if (after < before) {
      ++decreased;
    } else if (failures.size() < 20) {
      failures.push_back(
          {{"x", profile_to_json(x)}, {"before", before}, {"after", after}});
    }
  }
  Json j;
  j["type"] = o.type;
  j["evaluated"] = evaluated;
  j["decreased"] = decreased;
  j["fraction"] = evaluated ? static_cast<double>(decreased) / evaluated : 1.0;
  j["failures"] = std::move(failures);
  write_json(j, ctx.output("lyapunov.json"));
  *ctx.out << decreased << "/" << evaluated << " sampled steps decrease L\n";
}

void cmd_reduce_find(const Options& o, Context& ctx) {
  const Game g = ctx.load_game(o.game);
  Type1Dynamic d(enumerate_nash(g, ctx.exec), o.target, o.k);
  ctx.params["target"] = o.target;
  ctx.params["k"] = o.k;
  auto oracle = make_oracle(d);
  const auto r = find_nash_via_type1(g, oracle);
  Json j;
  j["profile"] = profile_to_json(r.profile);
  j["lambda"] = to_string(r.lambda);
  j["regret"] = to_string(regret(g, r.profile));
  j["queries"] = oracle.queries();
  write_json(j, ctx.output("find_nash.json"));
  *ctx.out << "regret " << j["regret"].get<std::string>() << " with "
           << oracle.queries() << " query\n";
}

void cmd_reduce_unique(const Options& o, Context& ctx) {
  const Game g = ctx.load_game(o.game);
  Type2Dynamic d(enumerate_nash(g, ctx.exec), splitmix64(ctx.seed), o.alpha,
                 o.k);
  ctx.params["trials"] = o.trials;
  ctx.params["forward_ray"] = o.forward_ray;
  ctx.params["alpha"] = o.alpha;
  ctx.params["k"] = o.k;
  auto oracle = make_oracle(d);
  UniquenessOptions opts;
  opts.trials = o.trials;
  opts.seed = ctx.seed;
  opts.forward_ray = o.forward_ray;
  opts.exec = ctx.exec;
  const auto v = uniqueness_test(g, oracle, opts);
  write_json(verdict_to_json(v), ctx.output("verdict.json"));
  *ctx.out << (v.unique ? "unique" : "multiple") << " (" << v.hits << "/"
           << v.trials << ")\n";
}

void cmd_pg_run(const Options& o, Context& ctx) {
  const Game g = ctx.load_game(o.game);
  PgConfig cfg = o.pg;
  cfg.seed = ctx.seed;
  auto bob = make_bob(o.bob);
  ctx.params["bob"] = o.bob;
  ctx.params["config"] = config_to_json(cfg);
  const auto t = run_match(g, *bob, cfg, ctx.exec);
  write_json(transcript_to_json(t), ctx.output("transcript.json"));
  *ctx.out << "prevail " << t.prevail << '\n';
}

// argv for replay: the original arguments with the seed pinned and the
// output directory replaced.
std::vector<std::string> replay_args(const std::vector<std::string>& argv,
                                     std::uint64_t seed) {
  std::vector<std::string> out;
  bool has_seed = false;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--output") {
      ++i;
      continue;
    }
    if (argv[i].rfind("--output=", 0) == 0) continue;
    if (argv[i] == "--seed" || argv[i].rfind("--seed=", 0) == 0) {
      has_seed = true;
    }
    out.push_back(argv[i]);
  }
  if (!has_seed) {
    out.push_back("--seed");
    out.push_back(std::to_string(seed));
  }
  return out;
}

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Nash equilibria, dynamics and the proving game"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  std::string command;
  std::function<void(const Options&, Context&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& desc,
                  std::function<void(const Options&, Context&)> fn) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    add_common(cmd, o);
    const std::string full =
        parent == &app ? name : parent->get_name() + " " + name;
    cmd->callback([&, full, fn] {
      command = full;
      action = fn;
    });
    return cmd;
  };

  auto* game = app.add_subcommand("game", "Game files")->require_subcommand(1);
  auto* gen = leaf(game, "gen", "Write a builtin or random game", cmd_game_gen);
  gen->add_option("--builtin", o.builtin,
                  "matching-pennies, battle-of-sexes or degenerate");
  gen->add_option("--rows", o.rows, "Row player strategies");
  gen->add_option("--cols", o.cols, "Column player strategies");

  auto* solve = app.add_subcommand("solve", "Exact solvers")->require_subcommand(1);
  auto* en = leaf(solve, "enum", "All equilibria by support enumeration",
                  cmd_solve_enum);
  en->add_option("--game", o.game, "Game JSON file")->required();
  auto* line = leaf(solve, "line", "Equilibria on a line",
                    [](const Options& op, Context& c) {
                      cmd_solve_subspace(op, c, true);
                    });
  line->add_option("--game", o.game, "Game JSON file")->required();
  line->add_option("--subspace", o.subspace, "Affine subspace JSON file")->required();
  auto* aff = leaf(solve, "affine", "Equilibria in an affine subspace",
                   [](const Options& op, Context& c) {
                     cmd_solve_subspace(op, c, false);
                   });
  aff->add_option("--game", o.game, "Game JSON file")->required();
  aff->add_option("--subspace", o.subspace, "Affine subspace JSON file")->required();

  auto* dyn = app.add_subcommand("dyn", "Dynamics")->require_subcommand(1);
  auto add_dyn = [&](CLI::App* cmd) {
    cmd->add_option("--game", o.game, "Game JSON file")->required();
    cmd->add_option("--type", o.type, "1, 2 or bnn");
    cmd->add_option("--k", o.k, "Slowdown constant");
    cmd->add_option("--alpha", o.alpha, "Slice contraction");
    cmd->add_option("--eta", o.eta, "BNN step scale");
    cmd->add_option("--target", o.target, "Type 1 target equilibrium index");
  };
  auto* run = leaf(dyn, "run", "Simulate one trajectory", cmd_dyn_run);
  add_dyn(run);
  run->add_option("--start", o.start, "random or a profile JSON file");
  run->add_option("--eps-fix", o.eps_fix, "Convergence threshold");
  run->add_option("--max-steps", o.max_steps, "Step limit");
  auto* ver = leaf(dyn, "verify-lyapunov", "Sampled Lyapunov decrease",
                   cmd_dyn_verify);
  add_dyn(ver);
  ver->add_option("--samples", o.samples, "Random profiles to test");

  auto* red = app.add_subcommand("reduce", "Black-box reductions")
                  ->require_subcommand(1);
  auto* fnd = leaf(red, "find-nash", "Equilibrium from one Type 1 query",
                   cmd_reduce_find);
  fnd->add_option("--game", o.game, "Game JSON file")->required();
  fnd->add_option("--target", o.target, "Equilibrium the oracle heads for");
  fnd->add_option("--k", o.k, "Slowdown constant");
  auto* uni = leaf(red, "uniqueness", "Randomized uniqueness test",
                   cmd_reduce_unique);
  uni->add_option("--game", o.game, "Game JSON file")->required();
  uni->add_option("--trials", o.trials, "Random starting points");
  uni->add_option("--alpha", o.alpha, "Slice contraction");
  uni->add_option("--k", o.k, "Slowdown constant");
  uni->add_flag("--forward-ray", o.forward_ray, "Only count lambda >= 0");

  auto* pg = app.add_subcommand("pg", "Proving game")->require_subcommand(1);
  auto* pgr = leaf(pg, "run", "Play one match", cmd_pg_run);
  pgr->add_option("--game", o.game, "Game JSON file")->required();
  pgr->add_option("--bob", o.bob, "grid, random or cheat");
  pgr->add_option("--budget", o.pg.budget, "Query rounds");
  pgr->add_option("--eta", o.pg.eta, "Alice's step scale");
  pgr->add_option("--rho", o.pg.rho, "Ball radius around each query");
  pgr->add_option("--eps-r", o.pg.eps_r, "Approximation bound for Bob's claim");
  pgr->add_option("--target", o.pg.target, "Equilibrium Phi heads for");
  pgr->add_option("--samples", o.pg.verify_samples, "Phi verification samples");

  auto* rep = app.add_subcommand("replay", "Re-run a manifest");
  rep->add_option("--manifest", o.manifest)->required();
  rep->add_option("--output", o.output, "Output directory for the rerun");
  bool replay = false;
  rep->callback([&] { replay = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  if (replay) {
    const Json m = read_json(o.manifest);
    std::vector<std::string> args{"nashlab"};
    for (const auto& a : m.at("replay_argv")) args.push_back(a.get<std::string>());
    args.push_back("--output");
    args.push_back(o.output);
    std::vector<const char*> cargs;
    for (const auto& a : args) cargs.push_back(a.c_str());
    return dispatch(static_cast<int>(cargs.size()), cargs.data(), out, err);
  }

  const auto t0 = std::chrono::steady_clock::now();
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  ctx.outdir = o.output;
  ctx.seed = resolve_seed(o.seed);
  ctx.exec = configure_jobs(o.jobs);
  fs::create_directories(ctx.outdir);
  action(o, ctx);

  std::vector<std::string> args(argv + 1, argv + argc);
  Json m;
  m["tool"] = "nashlab";
  m["version"] = kVersion;
  m["subcommand"] = command;
  m["argv"] = args;
  m["replay_argv"] = replay_args(args, ctx.seed);
  m["parameters"] = ctx.params;
  m["seed"] = ctx.seed;
  m["rng"] = std::string(CounterRng::kName);
  m["jobs"] = o.jobs;
  m["inputs"] = ctx.inputs;
  m["outputs"] = ctx.outputs;
  m["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_json(m, ctx.outdir / "manifest.json");
  return ctx.status;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace nashlab
