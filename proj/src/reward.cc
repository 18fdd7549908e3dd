#include "hanabi_tom/reward.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hanabi_tom {

void RewardConfig::Validate() const {
  if (p < 1.0) throw std::invalid_argument("Wasserstein order p must be >= 1");
  if (beta < 0.0) throw std::invalid_argument("beta must be non-negative");
}

double SlotDistance(Card truth, const Eigen::Ref<const BeliefRow>& marginal,
                    const RewardConfig& cfg) {
  cfg.Validate();
  double sum = marginal.sum();
  if (std::abs(sum - 1.0) > 1e-6 || marginal.minCoeff() < -1e-12) {
    throw std::invalid_argument("malformed marginal: sum " +
                                std::to_string(sum));
  }
  double moved = std::clamp(1.0 - marginal(truth.Index()), 0.0, 1.0);
  // sqrt is correctly rounded, which keeps the distance monotone in b(truth);
  // p=2 is the default order.
  if (cfg.p == 2.0) return std::sqrt(moved);
  if (cfg.p == 1.0) return moved;
  return std::pow(moved, 1.0 / cfg.p);
}

double IntrinsicReward(
    const std::map<int, BeliefMatrix>& beliefs_before,
    const std::map<int, BeliefMatrix>& beliefs_after,
    const std::map<int, std::vector<Card>>& true_hands,
    const RewardConfig& cfg) {
  cfg.Validate();
  if (beliefs_before.size() != beliefs_after.size()) {
    throw std::invalid_argument("belief maps must share key sets");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [player, before] : beliefs_before) {
    auto after_it = beliefs_after.find(player);
    auto hand_it = true_hands.find(player);
    if (after_it == beliefs_after.end() || hand_it == true_hands.end()) {
      throw std::invalid_argument("belief maps must share key sets");
    }
    const BeliefMatrix& after = after_it->second;
    const std::vector<Card>& hand = hand_it->second;
    Eigen::Index slots = std::min(before.rows(), after.rows());
    if (static_cast<Eigen::Index>(hand.size()) < slots) {
      throw std::invalid_argument("true hand shorter than belief rows");
    }
    double gain = 0;
    for (Eigen::Index k = 0; k < slots; ++k) {
      gain += SlotDistance(hand[k], before.row(k), cfg) -
              SlotDistance(hand[k], after.row(k), cfg);
    }
    best = std::max(best, gain);
  }
  if (beliefs_before.empty()) {
    throw std::invalid_argument("intrinsic reward needs at least one teammate");
  }
  return best;
}

double CombinedReward(double extrinsic, double intrinsic,
                      const RewardConfig& cfg) {
  cfg.Validate();
  return extrinsic + cfg.beta * intrinsic;
}

}  // namespace hanabi_tom
