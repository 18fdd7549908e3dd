#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hanabi_tom/encoding.h"
#include "hanabi_tom/game.h"
#include "hanabi_tom/policy.h"
#include "hanabi_tom/reward.h"

namespace hanabi_tom {

struct EpisodeConfig {
  int num_players = 2;
  uint64_t seed = 0;
  int belief_level = 0;
  BeliefMethod method = BeliefMethod::kMap;
  int mc_samples = 100;
  RewardConfig reward;
  // One spec per seat, or a single spec replicated for self-play.
  std::vector<PolicySpec> policies = {PolicySpec{}};
  double gamma = 0.99;  // carried into logs only; stats stay undiscounted
  GameConfig game;

  void Validate() const;
};

struct TurnRecord {
  int turn = 0;
  int actor = 0;
  uint64_t state_hash = 0;  // hash of the state the actor faced
  Action action;
  double extrinsic = 0;  // official score delta (bomb rule applied at the end)
  double intrinsic = 0;
  double combined = 0;
  bool map_hand_changed = false;  // actor's MAP hand across the action
  std::vector<int> hint_touched_slots;
  std::map<int, std::vector<Card>> true_hands;   // teammates at time t
  std::map<int, BeliefMatrix> beliefs_before;    // actor's nested beliefs
  std::map<int, BeliefMatrix> beliefs_after;
  int score_after = 0;
};

struct Trajectory {
  int num_players = 0;
  uint64_t seed = 0;
  int belief_level = 0;
  BeliefMethod method = BeliefMethod::kMap;
  int mc_samples = 0;
  double beta = 0;
  double wasserstein_p = 2;
  std::string policy;
  double gamma = 0.99;
  std::vector<TurnRecord> turns;
  int final_score = 0;
  TerminalCause cause = TerminalCause::kNone;
  uint64_t final_hash = 0;
  double discounted_return = 0;  // gamma-discounted combined rewards
};

Trajectory RunEpisode(const EpisodeConfig& cfg);

struct EpisodeStats {
  std::vector<int> scores;
  double median = 0;
  double mean = 0;
  double sem = 0;  // stddev (n-1 denominator) / sqrt(n)
};

EpisodeStats ComputeStats(std::vector<int> scores);

struct BatchOptions {
  int episodes = 1;
  int parallelism = 1;
  bool keep_trajectories = false;
};

struct BatchResult {
  EpisodeStats stats;
  std::vector<Trajectory> trajectories;  // empty unless requested
};

// Episode e runs with seed MixSeed(base.seed, e); results are accumulated by
// index, so statistics do not depend on the parallelism degree.
BatchResult RunBatch(const EpisodeConfig& base, const BatchOptions& options);

struct StatsCsvRow {
  int players = 0;
  std::string policy;
  double beta = 0;
  int level = 0;
  int n = 0;
  double median = 0;
  double mean = 0;
  double sem = 0;
};

std::string StatsCsvHeader();
std::string StatsCsvLine(const StatsCsvRow& row);

// One JSON object per line: a meta line, one line per turn, a result line.
std::string TrajectoryToJsonl(const Trajectory& t, int episode_index = 0);
std::vector<Trajectory> ReadTrajectoriesJsonl(std::istream& in);

// Offline application of the intrinsic-reward definition to a logged turn.
double RecomputeIntrinsic(const TurnRecord& turn, const RewardConfig& reward);

}  // namespace hanabi_tom
