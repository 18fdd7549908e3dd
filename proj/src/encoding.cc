#include "hanabi_tom/encoding.h"

#include <numeric>
#include <stdexcept>

namespace hanabi_tom {

std::string ToString(BeliefMethod method) {
  return method == BeliefMethod::kMap ? "map" : "mc";
}

BeliefMethod BeliefMethodFromString(const std::string& s) {
  if (s == "map") return BeliefMethod::kMap;
  if (s == "mc") return BeliefMethod::kMc;
  throw std::invalid_argument("unknown belief method: " + s);
}

const LayoutSegment& ObservationLayout::Segment(
    const std::string& name) const {
  for (const LayoutSegment& s : segments) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("no layout segment named " + name);
}

namespace {

int LastActionLength(int num_players, int hand_size) {
  // actor seat + action type + target seat + color + rank + touched slots +
  // source slot + moved card + success bit.
  return num_players + 4 + num_players + kMaxColors + kMaxRanks +
         2 * hand_size + kNumCardTypes + 1;
}

int RelativeSeat(int player, int viewer, int num_players) {
  return (player - viewer + num_players) % num_players;
}

}  // namespace

ObservationLayout BuildLayout(int num_players, const DeckSpec& deck, int level,
                              bool all_teammates) {
  if (level != 0 && level != 1) {
    throw std::invalid_argument("belief level must be 0 or 1");
  }
  int eta = HandSizeForPlayers(num_players);
  int nested = level == 0 ? 0 : (all_teammates ? num_players - 1 : 1);

  ObservationLayout layout;
  auto add = [&layout](const std::string& name, int length) {
    layout.segments.push_back({name, layout.total_length, length});
    layout.total_length += length;
  };
  add("others_hands", (num_players - 1) * eta * kNumCardTypes);
  add("hand_missing", num_players);
  add("deck_size", deck.TotalCards() - num_players * eta);
  add("fireworks", deck.num_colors * deck.num_ranks);
  add("info_tokens", 8);
  add("life_tokens", 3);
  add("discards", deck.TotalCards());
  add("last_action", LastActionLength(num_players, eta));
  add("belief", (1 + nested) * eta * kNumCardTypes);
  return layout;
}

EncodedObservation Encode(const Observation& obs,
                          const EncodeOptions& options) {
  if (options.level == 1 && obs.others_hands.empty()) {
    throw std::invalid_argument("belief level 1 requires at least 2 players");
  }
  if (options.method == BeliefMethod::kMc && options.rng == nullptr) {
    throw std::invalid_argument("MC belief method requires an RNG");
  }

  const DeckSpec& deck = obs.config.deck;
  int num_players = obs.num_players;
  int eta = HandSizeForPlayers(num_players);

  EncodedObservation enc;
  enc.layout =
      BuildLayout(num_players, deck, options.level, options.all_teammates);
  enc.values = FeatureVector::Zero(enc.layout.total_length);

  // others_hands: one-hot per visible card, players in turn order.
  {
    int base = enc.layout.Segment("others_hands").offset;
    for (size_t p = 0; p < obs.others_hands.size(); ++p) {
      const auto& slots = obs.others_hands[p].slots;
      for (size_t k = 0; k < slots.size(); ++k) {
        enc.values[base + (static_cast<int>(p) * eta + static_cast<int>(k)) *
                              kNumCardTypes +
                   slots[k].card.Index()] = 1;
      }
    }
  }

  // hand_missing: relative seat order, viewer first.
  {
    int base = enc.layout.Segment("hand_missing").offset;
    if (static_cast<int>(obs.own_knowledge.size()) < eta) {
      enc.values[base] = 1;
    }
    for (const Observation::VisibleHand& h : obs.others_hands) {
      if (static_cast<int>(h.slots.size()) < eta) {
        enc.values[base + RelativeSeat(h.player, obs.viewer, num_players)] = 1;
      }
    }
  }

  // deck_size thermometer.
  {
    const LayoutSegment& seg = enc.layout.Segment("deck_size");
    for (int i = 0; i < std::min(obs.deck_size, seg.length); ++i) {
      enc.values[seg.offset + i] = 1;
    }
  }

  // fireworks: one-hot of the top rank per color.
  {
    int base = enc.layout.Segment("fireworks").offset;
    for (int c = 0; c < deck.num_colors; ++c) {
      if (obs.fireworks[c] > 0) {
        enc.values[base + c * deck.num_ranks + obs.fireworks[c] - 1] = 1;
      }
    }
  }

  // Token thermometers.
  {
    int base = enc.layout.Segment("info_tokens").offset;
    for (int i = 0; i < obs.info_tokens; ++i) enc.values[base + i] = 1;
    base = enc.layout.Segment("life_tokens").offset;
    for (int i = 0; i < obs.life_tokens; ++i) enc.values[base + i] = 1;
  }

  // discards: per card type, thermometer over the deck's copies.
  {
    int base = enc.layout.Segment("discards").offset;
    for (int c = 0; c < deck.num_colors; ++c) {
      for (int r = 1; r <= deck.num_ranks; ++r) {
        Card card{static_cast<Color>(c), static_cast<int8_t>(r)};
        int copies = deck.CountOf(card);
        int discarded = obs.discard_pile.Count(card);
        for (int i = 0; i < std::min(discarded, copies); ++i) {
          enc.values[base + i] = 1;
        }
        base += copies;
      }
    }
  }

  if (options.last_action) {
    const LastActionInfo& la = *options.last_action;
    int base = enc.layout.Segment("last_action").offset;
    enc.values[base + RelativeSeat(la.actor, obs.viewer, num_players)] = 1;
    base += num_players;
    enc.values[base + static_cast<int>(la.action.variant)] = 1;
    base += 4;
    if (la.action.variant == ActionType::kHintColor ||
        la.action.variant == ActionType::kHintRank) {
      enc.values[base +
                 RelativeSeat(la.action.target_player, obs.viewer,
                              num_players)] = 1;
    }
    base += num_players;
    if (la.action.variant == ActionType::kHintColor) {
      enc.values[base + static_cast<int>(la.action.color)] = 1;
    }
    base += kMaxColors;
    if (la.action.variant == ActionType::kHintRank) {
      enc.values[base + la.action.rank - 1] = 1;
    }
    base += kMaxRanks;
    for (int s : la.touched_slots) {
      if (s < eta) enc.values[base + s] = 1;
    }
    base += eta;
    if (la.action.variant == ActionType::kPlay ||
        la.action.variant == ActionType::kDiscard) {
      if (la.action.slot < eta) enc.values[base + la.action.slot] = 1;
    }
    base += eta;
    if (la.moved_card) enc.values[base + la.moved_card->Index()] = 1;
    base += kNumCardTypes;
    if (la.successful_play) enc.values[base] = 1;
  }

  // Belief block: own marginals, then nested beliefs at level 1.
  {
    int base = enc.layout.Segment("belief").offset;
    BeliefMatrix b0 = SlotMarginalsB0(obs);
    for (Eigen::Index k = 0; k < b0.rows(); ++k) {
      for (int i = 0; i < kNumCardTypes; ++i) {
        enc.values[base + static_cast<int>(k) * kNumCardTypes + i] = b0(k, i);
      }
    }
    base += eta * kNumCardTypes;
    if (options.level == 1) {
      std::vector<int> targets;
      if (options.all_teammates) {
        for (const auto& h : obs.others_hands) targets.push_back(h.player);
      } else {
        targets.push_back(obs.others_hands.front().player);
      }
      for (int target : targets) {
        BeliefMatrix b1 =
            options.method == BeliefMethod::kMap
                ? NestedBeliefMap(obs, target)
                : NestedBeliefMc(obs, target, options.mc_samples,
                                 *options.rng);
        for (Eigen::Index k = 0; k < b1.rows(); ++k) {
          for (int i = 0; i < kNumCardTypes; ++i) {
            enc.values[base + static_cast<int>(k) * kNumCardTypes + i] =
                b1(k, i);
          }
        }
        base += eta * kNumCardTypes;
      }
    }
  }

  return enc;
}

Json EncodedObservationToJson(const EncodedObservation& enc) {
  Json segments = Json::array();
  for (const LayoutSegment& s : enc.layout.segments) {
    segments.push_back(
        Json{{"name", s.name}, {"offset", s.offset}, {"length", s.length}});
  }
  Json values = Json::array();
  for (Eigen::Index i = 0; i < enc.values.size(); ++i) {
    values.push_back(enc.values[i]);
  }
  return Json{{"values", values},
              {"layout", Json{{"segments", segments},
                              {"total_length", enc.layout.total_length}}}};
}

EncodedObservation EncodedObservationFromJson(const Json& j) {
  EncodedObservation enc;
  const Json& layout = j.at("layout");
  for (const Json& s : layout.at("segments")) {
    enc.layout.segments.push_back({s.at("name").get<std::string>(),
                                   s.at("offset").get<int>(),
                                   s.at("length").get<int>()});
  }
  enc.layout.total_length = layout.at("total_length").get<int>();
  const Json& values = j.at("values");
  enc.values = FeatureVector::Zero(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const Json& v : values) enc.values[i++] = v.get<double>();
  return enc;
}

}  // namespace hanabi_tom
