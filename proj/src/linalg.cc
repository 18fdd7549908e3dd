#include "hanabi_tom/linalg.h"

namespace hanabi_tom {

BeliefRow OneHotCard(Card c) {
  BeliefRow row = BeliefRow::Zero();
  row(c.Index()) = 1.0;
  return row;
}

double TotalVariation(const Eigen::Ref<const BeliefRow>& a,
                      const Eigen::Ref<const BeliefRow>& b) {
  return 0.5 * (a - b).cwiseAbs().sum();
}

}  // namespace hanabi_tom
