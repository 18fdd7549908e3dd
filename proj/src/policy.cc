#include "hanabi_tom/policy.h"

#include <algorithm>
#include <limits>

#include "hanabi_tom/belief.h"
#include "hanabi_tom/external_policy.h"

namespace hanabi_tom {

Action RandomPolicy::Act(const PolicyContext& ctx) {
  if (ctx.legal.empty()) throw std::logic_error("no legal actions");
  return ctx.legal[ctx.rng.UniformInt(ctx.legal.size())];
}

namespace {

bool IsPlayableNow(Card c, const Observation& obs) {
  return obs.fireworks[static_cast<int>(c.color)] + 1 == c.rank;
}

// A card is dead when its pile already passed it or the pile can no longer
// reach it because every copy of an intermediate rank is in the discards.
bool IsDeadCard(Card c, const Observation& obs) {
  int top = obs.fireworks[static_cast<int>(c.color)];
  if (c.rank <= top) return true;
  for (int r = top + 1; r < c.rank; ++r) {
    Card step{c.color, static_cast<int8_t>(r)};
    if (obs.discard_pile.Count(step) >= obs.config.deck.CountOf(step)) {
      return true;
    }
  }
  return false;
}

Observation WithHintApplied(const Observation& obs, const Action& hint) {
  Observation after = obs;
  for (Observation::VisibleHand& hand : after.others_hands) {
    if (hand.player != hint.target_player) continue;
    for (HandSlot& slot : hand.slots) {
      if (hint.variant == ActionType::kHintColor &&
          slot.card.color == hint.color) {
        slot.knowledge.hinted_color = hint.color;
      } else if (hint.variant == ActionType::kHintRank &&
                 slot.card.rank == hint.rank) {
        slot.knowledge.hinted_rank = static_cast<int8_t>(hint.rank);
      }
    }
  }
  --after.info_tokens;
  return after;
}

}  // namespace

double SimulatedHintGain(const Observation& obs, const Action& hint,
                         const RewardConfig& reward) {
  if (hint.variant != ActionType::kHintColor &&
      hint.variant != ActionType::kHintRank) {
    throw std::invalid_argument("not a hint action");
  }
  int target = hint.target_player;
  const Observation::VisibleHand* hand = nullptr;
  for (const Observation::VisibleHand& h : obs.others_hands) {
    if (h.player == target) hand = &h;
  }
  if (hand == nullptr) {
    throw std::invalid_argument("hint target not visible");
  }

  BeliefMatrix before = NestedBeliefMap(obs, target);
  BeliefMatrix after = NestedBeliefMap(WithHintApplied(obs, hint), target);
  double gain = 0;
  for (Eigen::Index k = 0;
       k < std::min(before.rows(), after.rows()) &&
       k < static_cast<Eigen::Index>(hand->slots.size());
       ++k) {
    gain += SlotDistance(hand->slots[k].card, before.row(k), reward) -
            SlotDistance(hand->slots[k].card, after.row(k), reward);
  }
  return gain;
}

Action BeliefGreedyPolicy::Act(const PolicyContext& ctx) {
  if (ctx.legal.empty()) throw std::logic_error("no legal actions");
  const Observation& obs = ctx.obs;
  BeliefMatrix b0 = SlotMarginalsB0(obs);

  int num_slots = static_cast<int>(obs.own_knowledge.size());
  int best_play_slot = -1;
  double best_play_mass = -1;
  for (int k = 0; k < num_slots; ++k) {
    double mass = 0;
    for (int i = 0; i < kNumCardTypes; ++i) {
      if (b0(k, i) > 0 && IsPlayableNow(Card::FromIndex(i), obs)) {
        mass += b0(k, i);
      }
    }
    if (mass > best_play_mass) {
      best_play_mass = mass;
      best_play_slot = k;
    }
  }
  if (best_play_slot >= 0 && best_play_mass > thresholds_.play_p) {
    return Action::Play(best_play_slot);
  }

  Action best_hint;
  double best_gain = -std::numeric_limits<double>::infinity();
  bool have_hint = false;
  for (const Action& a : ctx.legal) {
    if (a.variant != ActionType::kHintColor &&
        a.variant != ActionType::kHintRank) {
      continue;
    }
    double gain = SimulatedHintGain(obs, a, ctx.reward);
    if (!have_hint || gain > best_gain) {
      have_hint = true;
      best_gain = gain;
      best_hint = a;
    }
  }
  if (have_hint) return best_hint;

  bool can_discard =
      std::any_of(ctx.legal.begin(), ctx.legal.end(), [](const Action& a) {
        return a.variant == ActionType::kDiscard;
      });
  if (can_discard) {
    int best_slot = 0;
    double best_mass = -1;
    for (int k = 0; k < num_slots; ++k) {
      double mass = 0;
      for (int i = 0; i < kNumCardTypes; ++i) {
        if (b0(k, i) > 0 && IsDeadCard(Card::FromIndex(i), obs)) {
          mass += b0(k, i);
        }
      }
      if (mass > best_mass + 1e-12 && mass >= thresholds_.discard_p) {
        best_mass = mass;
        best_slot = k;
      }
    }
    return Action::Discard(best_slot);
  }

  if (best_play_slot >= 0) return Action::Play(best_play_slot);
  return ctx.legal.front();
}

PolicySpec PolicySpec::Parse(const std::string& s) {
  PolicySpec spec;
  if (s == "random") {
    spec.kind = Kind::kRandom;
  } else if (s == "belief_greedy") {
    spec.kind = Kind::kBeliefGreedy;
  } else if (s.rfind("external:", 0) == 0) {
    spec.kind = Kind::kExternal;
    spec.endpoint = s.substr(9);
    if (spec.endpoint.empty()) {
      throw std::invalid_argument("external policy needs a command");
    }
  } else {
    throw std::invalid_argument("unknown policy: " + s);
  }
  return spec;
}

std::string PolicySpec::ToString() const {
  switch (kind) {
    case Kind::kRandom:
      return "random";
    case Kind::kBeliefGreedy:
      return "belief_greedy";
    case Kind::kExternal:
      return "external:" + endpoint;
  }
  return "?";
}

std::unique_ptr<Policy> MakePolicy(const PolicySpec& spec) {
  switch (spec.kind) {
    case PolicySpec::Kind::kRandom:
      return std::make_unique<RandomPolicy>();
    case PolicySpec::Kind::kBeliefGreedy:
      return std::make_unique<BeliefGreedyPolicy>(spec.thresholds);
    case PolicySpec::Kind::kExternal:
      return std::make_unique<ExternalPolicy>(spec.endpoint);
  }
  throw std::logic_error("unreachable");
}

}  // namespace hanabi_tom
