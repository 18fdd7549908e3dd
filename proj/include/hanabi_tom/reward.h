#pragma once

#include <map>
#include <vector>

#include "hanabi_tom/linalg.h"
#include "hanabi_tom/types.h"

namespace hanabi_tom {

enum class GroundMetric { kDiscrete };

struct RewardConfig {
  double p = 2.0;      // Wasserstein order
  double beta = 0.0;   // intrinsic reward weight
  GroundMetric ground_metric = GroundMetric::kDiscrete;

  void Validate() const;  // p >= 1, beta >= 0
};

// Wasserstein distance between the point mass on the true card and a belief
// row. Under the discrete 0/1 ground metric every feasible plan moves the
// off-truth mass a unit distance, so W_p = (1 - b(truth))^(1/p).
// Throws std::invalid_argument if the marginal is not a distribution
// (row sum within 1e-6 of 1, entries non-negative).
double SlotDistance(Card truth, const Eigen::Ref<const BeliefRow>& marginal,
                    const RewardConfig& cfg);

// Largest per-teammate decrease, summed over hand slots, in Wasserstein
// distance between the teammate's belief rows and their true hand. Belief
// maps are keyed by player; rows align per slot at both times (the shorter
// hand wins if a hand shrank). May be negative.
double IntrinsicReward(
    const std::map<int, BeliefMatrix>& beliefs_before,
    const std::map<int, BeliefMatrix>& beliefs_after,
    const std::map<int, std::vector<Card>>& true_hands,
    const RewardConfig& cfg);

double CombinedReward(double extrinsic, double intrinsic,
                      const RewardConfig& cfg);

}  // namespace hanabi_tom
