#pragma once

#include <vector>

#include "hanabi_tom/belief.h"
#include "hanabi_tom/rng.h"
#include "hanabi_tom/types.h"

namespace hanabi_tom {

// One normalization trial: a random sub-pool of the deck and hint states
// derived as true marks on a hand drawn from that pool, so the configuration
// is feasible whenever the pool can cover the hand at all.
struct OracleTrial {
  enum class Outcome {
    kExact,       // enumerated probabilities summed to exactly 1
    kMismatch,    // they did not (a real failure)
    kDegenerate,  // no consistent hand exists; nothing to sum
  };

  Outcome outcome = Outcome::kDegenerate;
  Rational sum;
  long long hands_enumerated = 0;
  CardMultiset pool;
  std::vector<SlotKnowledge> knowledge;
};

OracleTrial RunOracleTrial(const DeckSpec& deck, int hand_size, Rng& rng,
                           long long budget = kDefaultEnumerationBudget);

}  // namespace hanabi_tom
