#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hanabi_tom/game.h"
#include "hanabi_tom/linalg.h"
#include "hanabi_tom/rational.h"
#include "hanabi_tom/rng.h"
#include "hanabi_tom/types.h"

namespace hanabi_tom {

// Exact rational hand probability with a floating-point view via AsDouble().
using HandProbability = Rational;

// The pool of card copies a viewer has not seen, with lazily cached
// restrictions to each hint state.
class UnseenPool {
 public:
  UnseenPool(CardMultiset base, DeckSpec deck)
      : base_(std::move(base)), deck_(std::move(deck)) {}

  const CardMultiset& base() const { return base_; }
  const DeckSpec& deck() const { return deck_; }

  // Sub-multiset of the pool consistent with hint state h.
  const CardMultiset& Restriction(SlotKnowledge h) const;
  int RestrictedCount(Card c, SlotKnowledge h) const {
    return h.Admits(c) ? base_.Count(c) : 0;
  }
  int RestrictedSize(SlotKnowledge h) const;

 private:
  CardMultiset base_;
  DeckSpec deck_;
  mutable std::array<std::optional<CardMultiset>, SlotKnowledge::kNumKeys>
      restriction_cache_;
  mutable std::array<int, SlotKnowledge::kNumKeys> size_cache_{};
  mutable std::array<bool, SlotKnowledge::kNumKeys> size_cached_{};
};

// Base deck minus other players' visible hands, the discard pile, and the
// cards sitting on the fireworks. Throws std::invalid_argument if the
// observation implies a negative count.
UnseenPool MakeUnseenPool(const Observation& obs);

// Pairing structure of a hand hypothesis against its hint states: delta
// multiplicities per (card, hint), lambda multiplicities per hint, and the
// set of distinct hints.
struct KnowledgeSummary {
  // (card index, hint key) -> multiplicity. Ordered for deterministic walks.
  std::map<std::pair<int, int>, int> delta;
  std::map<int, int> lambda;  // hint key -> multiplicity
  std::vector<SlotKnowledge> unique_hints;
};

KnowledgeSummary SummarizeKnowledge(std::span<const Card> hand,
                                    std::span<const SlotKnowledge> knowledge);

// Hint-only summary: lambda and the distinct hints, no card pairing.
KnowledgeSummary SummarizeHints(std::span<const SlotKnowledge> knowledge);

// Sequential draw without replacement: the product over (card, hint) pairs of
// falling factorials of restricted counts, over the product per distinct hint
// of falling factorials of restricted pool sizes. Impossible hands get 0.
// Throws std::domain_error when some hint class is larger than its restricted
// pool (the denominator would be zero: no hand is consistent).
HandProbability ExactHandProbability(std::span<const Card> hand,
                                     std::span<const SlotKnowledge> knowledge,
                                     const UnseenPool& pool);

// With-replacement approximation: plain product of restricted counts over the
// restricted pool size once per slot.
HandProbability ApproxHandProbability(std::span<const Card> hand,
                                      std::span<const SlotKnowledge> knowledge,
                                      const UnseenPool& pool);

// Row k is the normalized restriction of the pool to knowledge[k]. Throws
// std::domain_error if some row has an empty restriction.
BeliefMatrix SlotMarginals(std::span<const SlotKnowledge> knowledge,
                           const UnseenPool& pool);

// Own-hand belief b0 for the viewer.
BeliefMatrix SlotMarginalsB0(const Observation& obs);

// Most probable hand under the exact posterior. Greedy per hint class in
// decreasing-count order with pool decrements; ties broken toward the
// lexicographically smaller card, class slots filled in ascending card order.
// Exhaustive enumeration confirms this is the exact argmax (see tests).
std::vector<Card> MapHandFor(std::span<const SlotKnowledge> knowledge,
                             const UnseenPool& pool);
std::vector<Card> MapHand(const Observation& obs);

struct WeightedHand {
  std::vector<Card> hand;
  HandProbability weight;  // exact probability of the accepted hand
};

// Slot-wise draws from the per-slot marginals, rejecting hands whose exact
// probability is zero, until n hands are accepted. Throws
// BudgetExceededError after 1000 * n attempts.
std::vector<WeightedHand> SampleHandsFor(
    std::span<const SlotKnowledge> knowledge, const UnseenPool& pool, int n,
    Rng& rng);
std::vector<WeightedHand> SampleHands(const Observation& obs, int n, Rng& rng);

struct PerspectiveCounts {
  CardMultiset adjusted;  // the target's unseen pool under the hypothesis
  bool clamped = false;   // some count went negative and was clamped to zero
};

// The target's unseen pool as modeled by the viewer: viewer's pool plus the
// target's visible hand minus the hypothesized own hand.
PerspectiveCounts BuildPerspectiveCounts(const Observation& obs,
                                         std::span<const Card> hypothesized,
                                         int target);

// Level-1 belief about `target`'s own-hand marginals, marginalizing the
// viewer's own hand with its single MAP value.
BeliefMatrix NestedBeliefMap(const Observation& obs, int target);

// Monte-Carlo variant: weighted average of the target's marginals over
// sampled own hands, weights equal to the exact hand probability, rows
// renormalized. Throws std::domain_error if all weights are zero.
BeliefMatrix NestedBeliefMc(const Observation& obs, int target, int n_samples,
                            Rng& rng);

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// Visits every hand in the per-slot cross product of pool restrictions with
// its exact probability. The probabilities sum to exactly 1 (see the
// normalization property tests). Throws BudgetExceededError if the product
// space exceeds the budget before visiting anything.
void EnumerateHands(
    std::span<const SlotKnowledge> knowledge, const UnseenPool& pool,
    const std::function<void(std::span<const Card>, const HandProbability&)>&
        visit,
    long long budget = kDefaultEnumerationBudget);

// Number of hands EnumerateHands would visit.
long long EnumerationSpaceSize(std::span<const SlotKnowledge> knowledge,
                               const UnseenPool& pool);

}  // namespace hanabi_tom
