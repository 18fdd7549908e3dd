#include "hanabi_tom/oracle.h"

namespace hanabi_tom {

OracleTrial RunOracleTrial(const DeckSpec& deck, int hand_size, Rng& rng,
                           long long budget) {
  OracleTrial trial;

  // Keep each deck copy with probability 3/4.
  std::vector<Card> pool_cards;
  for (int c = 0; c < deck.num_colors; ++c) {
    for (int r = 1; r <= deck.num_ranks; ++r) {
      Card card{static_cast<Color>(c), static_cast<int8_t>(r)};
      for (int copy = 0; copy < deck.CountOf(card); ++copy) {
        if (rng.UniformInt(4) != 0) {
          trial.pool.Add(card);
          pool_cards.push_back(card);
        }
      }
    }
  }

  if (static_cast<int>(pool_cards.size()) < hand_size) {
    trial.outcome = OracleTrial::Outcome::kDegenerate;
    return trial;
  }

  // True marks on a hand drawn without replacement from the pool.
  rng.Shuffle(pool_cards);
  for (int k = 0; k < hand_size; ++k) {
    Card card = pool_cards[k];
    SlotKnowledge h;
    switch (rng.UniformInt(4)) {
      case 1:
        h.hinted_color = card.color;
        break;
      case 2:
        h.hinted_rank = card.rank;
        break;
      case 3:
        h.hinted_color = card.color;
        h.hinted_rank = card.rank;
        break;
      default:
        break;
    }
    trial.knowledge.push_back(h);
  }

  UnseenPool pool(trial.pool, deck);
  KnowledgeSummary hints = SummarizeHints(trial.knowledge);
  for (const SlotKnowledge& h : hints.unique_hints) {
    if (pool.RestrictedSize(h) < hints.lambda.at(h.Key())) {
      trial.outcome = OracleTrial::Outcome::kDegenerate;
      return trial;
    }
  }

  EnumerateHands(
      trial.knowledge, pool,
      [&trial](std::span<const Card>, const HandProbability& p) {
        trial.sum += p;
        ++trial.hands_enumerated;
      },
      budget);
  trial.outcome = trial.sum == Rational(1) ? OracleTrial::Outcome::kExact
                                           : OracleTrial::Outcome::kMismatch;
  return trial;
}

}  // namespace hanabi_tom
