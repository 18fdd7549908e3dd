#include "hanabi_tom/belief.h"

#include <algorithm>
#include <numeric>

namespace hanabi_tom {

const CardMultiset& UnseenPool::Restriction(SlotKnowledge h) const {
  int key = h.Key();
  if (!restriction_cache_[key]) {
    CardMultiset m;
    for (int i = 0; i < kNumCardTypes; ++i) {
      Card c = Card::FromIndex(i);
      if (h.Admits(c) && base_.CountAt(i) > 0) m.Add(c, base_.CountAt(i));
    }
    restriction_cache_[key] = std::move(m);
  }
  return *restriction_cache_[key];
}

int UnseenPool::RestrictedSize(SlotKnowledge h) const {
  int key = h.Key();
  if (!size_cached_[key]) {
    size_cache_[key] = Restriction(h).TotalSize();
    size_cached_[key] = true;
  }
  return size_cache_[key];
}

UnseenPool MakeUnseenPool(const Observation& obs) {
  CardMultiset pool = FullDeckMultiset(obs.config.deck);
  auto remove = [&pool](Card c, const char* what) {
    if (pool.Count(c) <= 0) {
      throw std::invalid_argument(std::string("inconsistent observation: ") +
                                  what + " holds " + c.ToString() +
                                  " beyond the deck supply");
    }
    pool.Remove(c);
  };
  for (const Observation::VisibleHand& hand : obs.others_hands) {
    for (const HandSlot& slot : hand.slots) remove(slot.card, "visible hand");
  }
  for (int i = 0; i < kNumCardTypes; ++i) {
    Card c = Card::FromIndex(i);
    for (int n = 0; n < obs.discard_pile.CountAt(i); ++n) {
      remove(c, "discard pile");
    }
  }
  for (int c = 0; c < obs.config.deck.num_colors; ++c) {
    for (int r = 1; r <= obs.fireworks[c]; ++r) {
      remove(Card{static_cast<Color>(c), static_cast<int8_t>(r)}, "fireworks");
    }
  }
  return UnseenPool(std::move(pool), obs.config.deck);
}

KnowledgeSummary SummarizeKnowledge(std::span<const Card> hand,
                                    std::span<const SlotKnowledge> knowledge) {
  if (hand.size() != knowledge.size()) {
    throw std::invalid_argument("hand and knowledge lengths differ");
  }
  KnowledgeSummary summary = SummarizeHints(knowledge);
  for (size_t k = 0; k < hand.size(); ++k) {
    ++summary.delta[{hand[k].Index(), knowledge[k].Key()}];
  }
  return summary;
}

KnowledgeSummary SummarizeHints(std::span<const SlotKnowledge> knowledge) {
  KnowledgeSummary summary;
  for (const SlotKnowledge& h : knowledge) {
    if (summary.lambda[h.Key()]++ == 0) summary.unique_hints.push_back(h);
  }
  std::sort(summary.unique_hints.begin(), summary.unique_hints.end(),
            [](const SlotKnowledge& a, const SlotKnowledge& b) {
              return a.Key() < b.Key();
            });
  return summary;
}

namespace {

SlotKnowledge KnowledgeFromKey(int key) {
  SlotKnowledge h;
  int c = key / (kMaxRanks + 1);
  int r = key % (kMaxRanks + 1);
  if (c > 0) h.hinted_color = static_cast<Color>(c - 1);
  if (r > 0) h.hinted_rank = static_cast<int8_t>(r);
  return h;
}

// Denominator of the sampling-without-replacement probability; zero means no
// hand is consistent with the hints at all.
BigInt ExactDenominator(const KnowledgeSummary& summary,
                        const UnseenPool& pool) {
  BigInt den = 1;
  for (const auto& [key, lambda] : summary.lambda) {
    den *= Rational::FallingFactorial(
        pool.RestrictedSize(KnowledgeFromKey(key)), lambda);
  }
  return den;
}

BigInt ExactNumerator(const KnowledgeSummary& summary, const UnseenPool& pool) {
  BigInt num = 1;
  for (const auto& [pair, delta] : summary.delta) {
    const auto& [card_index, key] = pair;
    num *= Rational::FallingFactorial(
        pool.RestrictedCount(Card::FromIndex(card_index),
                             KnowledgeFromKey(key)),
        delta);
    if (num == 0) break;
  }
  return num;
}

}  // namespace

HandProbability ExactHandProbability(std::span<const Card> hand,
                                     std::span<const SlotKnowledge> knowledge,
                                     const UnseenPool& pool) {
  KnowledgeSummary summary = SummarizeKnowledge(hand, knowledge);
  BigInt den = ExactDenominator(summary, pool);
  if (den == 0) {
    throw std::domain_error(
        "no hand is consistent: a hint class exceeds its restricted pool");
  }
  return Rational(ExactNumerator(summary, pool), std::move(den));
}

HandProbability ApproxHandProbability(std::span<const Card> hand,
                                      std::span<const SlotKnowledge> knowledge,
                                      const UnseenPool& pool) {
  if (hand.size() != knowledge.size()) {
    throw std::invalid_argument("hand and knowledge lengths differ");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (size_t k = 0; k < hand.size(); ++k) {
    num *= pool.RestrictedCount(hand[k], knowledge[k]);
    den *= pool.RestrictedSize(knowledge[k]);
  }
  if (den == 0) {
    throw std::domain_error(
        "no hand is consistent: a slot has an empty restricted pool");
  }
  return Rational(std::move(num), std::move(den));
}

BeliefMatrix SlotMarginals(std::span<const SlotKnowledge> knowledge,
                           const UnseenPool& pool) {
  BeliefMatrix m(static_cast<Eigen::Index>(knowledge.size()), kNumCardTypes);
  m.setZero();
  for (size_t k = 0; k < knowledge.size(); ++k) {
    int size = pool.RestrictedSize(knowledge[k]);
    if (size == 0) {
      throw std::domain_error("impossible knowledge state: slot " +
                              std::to_string(k) + " (" +
                              knowledge[k].ToString() +
                              ") has an empty restricted pool");
    }
    const CardMultiset& restriction = pool.Restriction(knowledge[k]);
    for (int i = 0; i < kNumCardTypes; ++i) {
      if (restriction.CountAt(i) > 0) {
        m(static_cast<Eigen::Index>(k), i) =
            static_cast<double>(restriction.CountAt(i)) / size;
      }
    }
  }
  return m;
}

BeliefMatrix SlotMarginalsB0(const Observation& obs) {
  return SlotMarginals(obs.own_knowledge, MakeUnseenPool(obs));
}

std::vector<Card> MapHandFor(std::span<const SlotKnowledge> knowledge,
                             const UnseenPool& pool) {
  // Hint classes do not interact in the posterior numerator, so the argmax
  // decomposes per class; within a class, taking the largest remaining count
  // first maximizes the product of falling-factorial terms.
  std::vector<Card> hand(knowledge.size());
  std::map<int, std::vector<size_t>> class_slots;
  for (size_t k = 0; k < knowledge.size(); ++k) {
    class_slots[knowledge[k].Key()].push_back(k);
  }
  for (const auto& [key, slots] : class_slots) {
    CardMultiset working = pool.Restriction(KnowledgeFromKey(key));
    std::vector<Card> chosen;
    for (size_t pick = 0; pick < slots.size(); ++pick) {
      int best = -1;
      for (int i = 0; i < kNumCardTypes; ++i) {
        if (working.CountAt(i) > 0 &&
            (best < 0 || working.CountAt(i) > working.CountAt(best))) {
          best = i;
        }
      }
      if (best < 0) {
        throw std::domain_error(
            "no consistent hand: hint class larger than its restricted pool");
      }
      Card card = Card::FromIndex(best);
      chosen.push_back(card);
      working.Remove(card);
    }
    std::sort(chosen.begin(), chosen.end());
    for (size_t i = 0; i < slots.size(); ++i) hand[slots[i]] = chosen[i];
  }
  return hand;
}

std::vector<Card> MapHand(const Observation& obs) {
  return MapHandFor(obs.own_knowledge, MakeUnseenPool(obs));
}

std::vector<WeightedHand> SampleHandsFor(
    std::span<const SlotKnowledge> knowledge, const UnseenPool& pool, int n,
    Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  for (size_t k = 0; k < knowledge.size(); ++k) {
    if (pool.RestrictedSize(knowledge[k]) == 0) {
      throw std::domain_error("impossible knowledge state: slot " +
                              std::to_string(k) +
                              " has an empty restricted pool");
    }
  }

  std::vector<WeightedHand> accepted;
  accepted.reserve(n);
  std::vector<Card> hand(knowledge.size());
  long long budget = 1000LL * n;
  for (long long attempt = 0; attempt < budget; ++attempt) {
    for (size_t k = 0; k < knowledge.size(); ++k) {
      const CardMultiset& restriction = pool.Restriction(knowledge[k]);
      auto r = static_cast<int64_t>(
          rng.UniformInt(pool.RestrictedSize(knowledge[k])));
      for (int i = 0; i < kNumCardTypes; ++i) {
        r -= restriction.CountAt(i);
        if (r < 0) {
          hand[k] = Card::FromIndex(i);
          break;
        }
      }
    }
    HandProbability p = ExactHandProbability(hand, knowledge, pool);
    if (p.IsZero()) continue;
    accepted.push_back({hand, std::move(p)});
    if (static_cast<int>(accepted.size()) == n) return accepted;
  }
  throw BudgetExceededError(
      "rejection sampling exhausted its attempt budget (" +
      std::to_string(budget) + " attempts for " + std::to_string(n) +
      " samples)");
}

std::vector<WeightedHand> SampleHands(const Observation& obs, int n,
                                      Rng& rng) {
  return SampleHandsFor(obs.own_knowledge, MakeUnseenPool(obs), n, rng);
}

PerspectiveCounts BuildPerspectiveCounts(const Observation& obs,
                                         std::span<const Card> hypothesized,
                                         int target) {
  if (target == obs.viewer) {
    throw std::invalid_argument("perspective target must differ from viewer");
  }
  const Observation::VisibleHand* target_hand = nullptr;
  for (const Observation::VisibleHand& h : obs.others_hands) {
    if (h.player == target) target_hand = &h;
  }
  if (target_hand == nullptr) {
    throw std::invalid_argument("target player not visible in observation");
  }
  if (hypothesized.size() != obs.own_knowledge.size()) {
    throw std::invalid_argument(
        "hypothesized hand length differs from own knowledge");
  }
  for (size_t k = 0; k < hypothesized.size(); ++k) {
    if (!obs.own_knowledge[k].Admits(hypothesized[k])) {
      throw std::invalid_argument("hypothesized card " +
                                  hypothesized[k].ToString() +
                                  " violates slot knowledge");
    }
  }

  PerspectiveCounts result;
  result.adjusted = MakeUnseenPool(obs).base();
  for (const HandSlot& slot : target_hand->slots) {
    result.adjusted.Add(slot.card);
  }
  for (const Card& c : hypothesized) {
    if (result.adjusted.RemoveClamped(c)) result.clamped = true;
  }
  return result;
}

namespace {

std::span<const SlotKnowledge> TargetKnowledge(
    const Observation& obs, int target,
    std::vector<SlotKnowledge>& storage) {
  for (const Observation::VisibleHand& h : obs.others_hands) {
    if (h.player == target) {
      storage.clear();
      for (const HandSlot& slot : h.slots) storage.push_back(slot.knowledge);
      return storage;
    }
  }
  throw std::invalid_argument("target player not visible in observation");
}

}  // namespace

BeliefMatrix NestedBeliefMap(const Observation& obs, int target) {
  std::vector<SlotKnowledge> knowledge;
  std::span<const SlotKnowledge> target_knowledge =
      TargetKnowledge(obs, target, knowledge);
  PerspectiveCounts pc =
      BuildPerspectiveCounts(obs, MapHand(obs), target);
  return SlotMarginals(target_knowledge,
                       UnseenPool(std::move(pc.adjusted), obs.config.deck));
}

BeliefMatrix NestedBeliefMc(const Observation& obs, int target, int n_samples,
                            Rng& rng) {
  std::vector<SlotKnowledge> knowledge;
  std::span<const SlotKnowledge> target_knowledge =
      TargetKnowledge(obs, target, knowledge);

  std::vector<WeightedHand> samples = SampleHands(obs, n_samples, rng);
  BeliefMatrix accum(static_cast<Eigen::Index>(target_knowledge.size()),
                     kNumCardTypes);
  accum.setZero();
  double total_weight = 0;
  for (const WeightedHand& sample : samples) {
    PerspectiveCounts pc = BuildPerspectiveCounts(obs, sample.hand, target);
    UnseenPool pool(std::move(pc.adjusted), obs.config.deck);
    double w = sample.weight.AsDouble();
    total_weight += w;
    for (size_t k = 0; k < target_knowledge.size(); ++k) {
      int size = pool.RestrictedSize(target_knowledge[k]);
      if (size == 0) continue;  // contributes nothing to this row
      const CardMultiset& restriction = pool.Restriction(target_knowledge[k]);
      for (int i = 0; i < kNumCardTypes; ++i) {
        if (restriction.CountAt(i) > 0) {
          accum(static_cast<Eigen::Index>(k), i) +=
              w * restriction.CountAt(i) / size;
        }
      }
    }
  }
  if (total_weight <= 0) {
    throw std::domain_error("all sampled hands carried zero weight");
  }
  for (Eigen::Index k = 0; k < accum.rows(); ++k) {
    double row_sum = accum.row(k).sum();
    if (row_sum <= 0) {
      throw std::domain_error(
          "nested belief row " + std::to_string(k) +
          " is empty under every sampled hypothesis");
    }
    accum.row(k) /= row_sum;
  }
  return accum;
}

long long EnumerationSpaceSize(std::span<const SlotKnowledge> knowledge,
                               const UnseenPool& pool) {
  long long size = 1;
  for (const SlotKnowledge& h : knowledge) {
    const CardMultiset& restriction = pool.Restriction(h);
    long long support = 0;
    for (int i = 0; i < kNumCardTypes; ++i) {
      if (restriction.CountAt(i) > 0) ++support;
    }
    size *= support;
    if (size == 0) return 0;
    if (size > kDefaultEnumerationBudget * 100) return size;  // avoid overflow
  }
  return size;
}

void EnumerateHands(
    std::span<const SlotKnowledge> knowledge, const UnseenPool& pool,
    const std::function<void(std::span<const Card>, const HandProbability&)>&
        visit,
    long long budget) {
  long long space = EnumerationSpaceSize(knowledge, pool);
  if (space > budget) {
    throw BudgetExceededError("enumeration space of " + std::to_string(space) +
                              " hands exceeds the budget of " +
                              std::to_string(budget));
  }
  if (space == 0) return;

  std::vector<std::vector<Card>> supports;
  for (const SlotKnowledge& h : knowledge) {
    const CardMultiset& restriction = pool.Restriction(h);
    std::vector<Card> support;
    for (int i = 0; i < kNumCardTypes; ++i) {
      if (restriction.CountAt(i) > 0) support.push_back(Card::FromIndex(i));
    }
    supports.push_back(std::move(support));
  }

  // The denominator depends only on the hints; reuse it across the space.
  KnowledgeSummary hint_summary = SummarizeHints(knowledge);
  BigInt den = ExactDenominator(hint_summary, pool);
  if (den == 0) {
    throw std::domain_error(
        "no hand is consistent: a hint class exceeds its restricted pool");
  }

  std::vector<size_t> odometer(knowledge.size(), 0);
  std::vector<Card> hand(knowledge.size());
  for (size_t k = 0; k < hand.size(); ++k) hand[k] = supports[k][0];
  for (;;) {
    KnowledgeSummary summary = SummarizeKnowledge(hand, knowledge);
    visit(hand, Rational(ExactNumerator(summary, pool), den));

    size_t k = 0;
    while (k < odometer.size()) {
      if (++odometer[k] < supports[k].size()) {
        hand[k] = supports[k][odometer[k]];
        break;
      }
      odometer[k] = 0;
      hand[k] = supports[k][0];
      ++k;
    }
    if (k == odometer.size()) break;
  }
}

}  // namespace hanabi_tom
