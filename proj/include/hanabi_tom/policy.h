#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hanabi_tom/encoding.h"
#include "hanabi_tom/game.h"
#include "hanabi_tom/reward.h"
#include "hanabi_tom/rng.h"

namespace hanabi_tom {

// Everything a seat sees when choosing an action. External policies receive
// only the encoded vector, its layout, and the legal action list (the wire
// protocol); built-in policies may also use the structured observation.
struct PolicyContext {
  const Observation& obs;
  const EncodedObservation& encoded;
  const std::vector<Action>& legal;
  const RewardConfig& reward;
  BeliefMethod method = BeliefMethod::kMap;
  int mc_samples = 100;
  Rng& rng;
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual Action Act(const PolicyContext& ctx) = 0;
  virtual std::string Name() const = 0;
};

class RandomPolicy : public Policy {
 public:
  Action Act(const PolicyContext& ctx) override;
  std::string Name() const override { return "random"; }
};

struct BeliefGreedyThresholds {
  double play_p = 0.8;     // min mass on playable cards to play a slot
  double discard_p = 0.0;  // min dead mass to prefer a slot when discarding
};

// Plays a slot whose own-belief mass on currently playable cards clears the
// threshold; otherwise, with tokens available, gives the hint with the
// largest one-step simulated intrinsic reward; otherwise discards the slot
// with the most mass on dead cards (lowest index on ties). Falls through to
// the next branch when a branch has no legal move.
class BeliefGreedyPolicy : public Policy {
 public:
  explicit BeliefGreedyPolicy(BeliefGreedyThresholds thresholds = {})
      : thresholds_(thresholds) {}
  Action Act(const PolicyContext& ctx) override;
  std::string Name() const override { return "belief_greedy"; }

 private:
  BeliefGreedyThresholds thresholds_;
};

struct PolicySpec {
  enum class Kind { kRandom, kBeliefGreedy, kExternal };

  Kind kind = Kind::kRandom;
  BeliefGreedyThresholds thresholds;
  std::string endpoint;  // external: command line spawned per worker

  // "random", "belief_greedy", or "external:<command>".
  static PolicySpec Parse(const std::string& s);
  std::string ToString() const;
};

std::unique_ptr<Policy> MakePolicy(const PolicySpec& spec);

// One-step simulated intrinsic reward of a hint, from the actor's own
// observation: the target's nested belief is recomputed under the knowledge
// the hint would leave behind and scored against the target's visible hand.
double SimulatedHintGain(const Observation& obs, const Action& hint,
                         const RewardConfig& reward);

}  // namespace hanabi_tom
