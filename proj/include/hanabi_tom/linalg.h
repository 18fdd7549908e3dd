#pragma once

#include <Eigen/Core>

#include "hanabi_tom/types.h"

namespace hanabi_tom {

// Per-slot card marginals: one row per hand slot, one column per card type in
// canonical order. Row-major so .data() is already the flattened vector the
// encoders and the JSON/CSV emitters expose.
using BeliefMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, kNumCardTypes, Eigen::RowMajor>;

using BeliefRow = Eigen::Matrix<double, 1, kNumCardTypes>;

using FeatureVector = Eigen::VectorXd;

// One-hot row for a card type in canonical order.
BeliefRow OneHotCard(Card c);

// Total variation distance between two rows: (1/2) sum |a - b|.
double TotalVariation(const Eigen::Ref<const BeliefRow>& a,
                      const Eigen::Ref<const BeliefRow>& b);

}  // namespace hanabi_tom
