#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hanabi_tom/belief.h"
#include "hanabi_tom/encoding.h"
#include "hanabi_tom/harness.h"
#include "hanabi_tom/json_io.h"
#include "hanabi_tom/logging.h"
#include "hanabi_tom/oracle.h"

namespace {

using namespace hanabi_tom;

constexpr int kExitOk = 0;
constexpr int kExitFlagError = 2;
constexpr int kExitDataError = 3;
constexpr int kExitCheckFailure = 4;

struct SimulateArgs {
  int players = 2;
  int episodes = 1;
  uint64_t seed = 0;
  std::string policy = "random";
  double beta = 0.0;
  int belief_level = 0;
  std::string method = "map";
  int samples = 100;
  int parallelism = 1;
  std::string out;
  std::string trajectory;
};

int RunSimulate(const SimulateArgs& args) {
  EpisodeConfig cfg;
  cfg.num_players = args.players;
  cfg.seed = args.seed;
  cfg.belief_level = args.belief_level;
  cfg.method = BeliefMethodFromString(args.method);
  cfg.mc_samples = args.samples;
  cfg.reward.beta = args.beta;
  cfg.policies = {PolicySpec::Parse(args.policy)};

  BatchOptions options;
  options.episodes = args.episodes;
  options.parallelism = args.parallelism;
  options.keep_trajectories = !args.trajectory.empty();

  BatchResult result = RunBatch(cfg, options);

  StatsCsvRow row;
  row.players = args.players;
  row.policy = args.policy;
  row.beta = args.beta;
  row.level = args.belief_level;
  row.n = args.episodes;
  row.median = result.stats.median;
  row.mean = result.stats.mean;
  row.sem = result.stats.sem;
  std::string csv = StatsCsvHeader() + StatsCsvLine(row);

  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "cannot open output file: " << args.out << "\n";
      return kExitDataError;
    }
    out << csv;
  }
  if (!args.trajectory.empty()) {
    std::ofstream out(args.trajectory);
    if (!out) {
      std::cerr << "cannot open trajectory file: " << args.trajectory << "\n";
      return kExitDataError;
    }
    for (size_t e = 0; e < result.trajectories.size(); ++e) {
      out << TrajectoryToJsonl(result.trajectories[e], static_cast<int>(e));
    }
  }

  std::cout << csv;
  std::printf("median %.2f  mean %.4f  sem %.4f  (N=%d)\n",
              result.stats.median, result.stats.mean, result.stats.sem,
              args.episodes);
  return kExitOk;
}

struct BeliefArgs {
  std::string state_json;
  int viewer = 0;
  int level = 0;
  std::string method = "map";
  int samples = 1000;
  std::string format = "json";
};

int RunBelief(const BeliefArgs& args) {
  std::ifstream in(args.state_json);
  if (!in) {
    std::cerr << "cannot open state file: " << args.state_json << "\n";
    return kExitDataError;
  }
  GameState state;
  try {
    Json j = Json::parse(in);
    j.get_to(state);
  } catch (const std::exception& e) {
    std::cerr << "malformed state file: " << e.what() << "\n";
    return kExitDataError;
  }

  if (args.viewer < 0 || args.viewer >= state.num_players) {
    std::cerr << "viewer out of range\n";
    return kExitDataError;
  }
  if (args.level == 1 && state.num_players < 2) {
    std::cerr << "belief level 1 requires at least two players\n";
    return kExitDataError;
  }

  Observation obs = Observe(state, args.viewer);
  BeliefMatrix b0 = SlotMarginalsB0(obs);

  Json output{{"viewer", args.viewer}, {"b0", BeliefMatrixToJson(b0)}};
  std::string csv = "matrix,b0\n" + BeliefMatrixToCsv(b0);
  if (args.level == 1) {
    int target = obs.others_hands.front().player;
    Rng rng(state.rng_seed);
    BeliefMatrix b1 =
        args.method == "map"
            ? NestedBeliefMap(obs, target)
            : NestedBeliefMc(obs, target, args.samples, rng);
    output["b1_target"] = target;
    output["b1"] = BeliefMatrixToJson(b1);
    csv += "matrix,b1 (target " + std::to_string(target) + ")\n" +
           BeliefMatrixToCsv(b1);
  }

  if (args.format == "json") {
    std::cout << output.dump(2) << "\n";
  } else {
    std::cout << csv;
  }
  return kExitOk;
}

struct OracleArgs {
  int colors = 2;
  int ranks = 3;
  std::string counts = "2,1,1";
  int hand_size = 3;
  int trials = 100;
  uint64_t seed = 0;
};

std::vector<int> ParseCounts(const std::string& s) {
  std::vector<int> counts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) counts.push_back(std::stoi(item));
  return counts;
}

int RunOracleCheck(const OracleArgs& args) {
  DeckSpec deck;
  deck.num_colors = args.colors;
  deck.num_ranks = args.ranks;
  deck.rank_counts = ParseCounts(args.counts);
  try {
    deck.Validate();
  } catch (const std::exception& e) {
    std::cerr << "bad deck spec: " << e.what() << "\n";
    return kExitFlagError;
  }

  Rng rng(args.seed);
  int failures = 0;
  int degenerate = 0;
  for (int trial = 0; trial < args.trials; ++trial) {
    OracleTrial result;
    try {
      result = RunOracleTrial(deck, args.hand_size, rng);
    } catch (const BudgetExceededError& e) {
      std::cerr << "trial " << trial << ": " << e.what() << "\n";
      return kExitFlagError;
    }
    switch (result.outcome) {
      case OracleTrial::Outcome::kExact:
        std::printf("trial %3d: %6lld hands, sum = %s  pass\n", trial,
                    result.hands_enumerated, result.sum.ToString().c_str());
        break;
      case OracleTrial::Outcome::kMismatch:
        ++failures;
        std::printf("trial %3d: %6lld hands, sum = %s  FAIL\n", trial,
                    result.hands_enumerated, result.sum.ToString().c_str());
        break;
      case OracleTrial::Outcome::kDegenerate:
        ++degenerate;
        std::printf("trial %3d: degenerate (no consistent hand)\n", trial);
        break;
    }
  }

  std::printf("%d/%d exact, %d degenerate, %d failures\n",
              args.trials - failures - degenerate, args.trials, degenerate,
              failures);
  return failures == 0 ? kExitOk : kExitCheckFailure;
}

struct RewardTraceArgs {
  std::string trajectory;
  bool recompute = false;
};

int RunRewardTrace(const RewardTraceArgs& args) {
  std::ifstream in(args.trajectory);
  if (!in) {
    std::cerr << "cannot open trajectory file: " << args.trajectory << "\n";
    return kExitDataError;
  }
  std::vector<Trajectory> trajectories;
  try {
    trajectories = ReadTrajectoriesJsonl(in);
  } catch (const std::exception& e) {
    std::cerr << "corrupt trajectory: " << e.what() << "\n";
    return kExitDataError;
  }

  double max_deviation = 0;
  std::printf("%-8s %-6s %-6s %-18s %12s %12s %12s\n", "episode", "turn",
              "actor", "action", "extrinsic", "intrinsic", "combined");
  for (size_t e = 0; e < trajectories.size(); ++e) {
    const Trajectory& traj = trajectories[e];
    RewardConfig reward;
    reward.beta = traj.beta;
    reward.p = traj.wasserstein_p;
    for (const TurnRecord& turn : traj.turns) {
      std::printf("%-8zu %-6d %-6d %-18s %12.6f %12.6f %12.6f\n", e, turn.turn,
                  turn.actor, turn.action.ToString().c_str(), turn.extrinsic,
                  turn.intrinsic, turn.combined);
      if (args.recompute) {
        double again = RecomputeIntrinsic(turn, reward);
        max_deviation = std::max(max_deviation,
                                 std::abs(again - turn.intrinsic));
      }
    }
  }
  if (args.recompute) {
    std::printf("max recompute deviation: %.3g\n", max_deviation);
    if (max_deviation > 1e-9) {
      std::cerr << "recomputed intrinsic rewards deviate beyond 1e-9\n";
      return kExitCheckFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hanabi engine with hint-conditional hand posteriors, nested beliefs, "
      "and a Wasserstein communication reward"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run self-play episodes");
  simulate->add_option("--players", sim.players, "number of players (2-5)")
      ->check(CLI::Range(2, 5));
  simulate->add_option("--episodes", sim.episodes, "episode count")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "master seed");
  simulate->add_option("--policy", sim.policy,
                       "random | belief_greedy | external:<command>");
  simulate->add_option("--beta", sim.beta, "intrinsic reward weight")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--belief-level", sim.belief_level, "0 or 1")
      ->check(CLI::Range(0, 1));
  simulate->add_option("--method", sim.method, "map | mc")
      ->check(CLI::IsMember({"map", "mc"}));
  simulate->add_option("--samples", sim.samples, "MC sample count")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--parallelism", sim.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim.out, "stats CSV path");
  simulate->add_option("--trajectory", sim.trajectory,
                       "trajectory JSONL path");

  BeliefArgs bel;
  CLI::App* belief =
      app.add_subcommand("belief", "print belief matrices for a state");
  belief->add_option("--state-json", bel.state_json, "GameState JSON file")
      ->required();
  belief->add_option("--viewer", bel.viewer, "viewing player");
  belief->add_option("--level", bel.level, "0 or 1")->check(CLI::Range(0, 1));
  belief->add_option("--method", bel.method, "map | mc")
      ->check(CLI::IsMember({"map", "mc"}));
  belief->add_option("--samples", bel.samples, "MC sample count")
      ->check(CLI::PositiveNumber);
  belief->add_option("--format", bel.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  OracleArgs ora;
  CLI::App* oracle = app.add_subcommand(
      "oracle_check", "verify the posterior sums to 1 on reduced decks");
  oracle->add_option("--colors", ora.colors, "deck colors")
      ->check(CLI::Range(1, 5));
  oracle->add_option("--ranks", ora.ranks, "deck ranks")
      ->check(CLI::Range(1, 5));
  oracle->add_option("--counts", ora.counts, "per-rank copies, e.g. 2,1,1");
  oracle->add_option("--hand-size", ora.hand_size, "slots per trial")
      ->check(CLI::Range(1, 5));
  oracle->add_option("--trials", ora.trials, "number of random trials")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", ora.seed, "trial seed");

  RewardTraceArgs tr;
  CLI::App* trace =
      app.add_subcommand("reward_trace", "per-turn intrinsic reward table");
  trace->add_option("--trajectory", tr.trajectory, "trajectory JSONL file")
      ->required();
  trace->add_flag("--recompute", tr.recompute,
                  "re-derive intrinsic rewards from logged beliefs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/message
    return e.get_exit_code() == 0 ? kExitOk : kExitFlagError;
  }

  try {
    if (simulate->parsed()) return RunSimulate(sim);
    if (belief->parsed()) return RunBelief(bel);
    if (oracle->parsed()) return RunOracleCheck(ora);
    if (trace->parsed()) return RunRewardTrace(tr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlagError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitFlagError;
}
