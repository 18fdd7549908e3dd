#include "hanabi_tom/json_io.h"

namespace hanabi_tom {

void to_json(Json& j, const Card& card) { j = card.ToString(); }
void from_json(const Json& j, Card& card) {
  card = Card::FromString(j.get<std::string>());
}

void to_json(Json& j, const SlotKnowledge& k) {
  j = Json::object();
  j["hinted_color"] =
      k.hinted_color ? Json(std::string(1, ColorChar(*k.hinted_color)))
                     : Json(nullptr);
  j["hinted_rank"] = k.hinted_rank ? Json(int(*k.hinted_rank)) : Json(nullptr);
}
void from_json(const Json& j, SlotKnowledge& k) {
  k = SlotKnowledge{};
  const Json& c = j.at("hinted_color");
  if (!c.is_null()) k.hinted_color = ColorFromChar(c.get<std::string>().at(0));
  const Json& r = j.at("hinted_rank");
  if (!r.is_null()) k.hinted_rank = static_cast<int8_t>(r.get<int>());
}

void to_json(Json& j, const HandSlot& slot) {
  j = Json{{"card", slot.card}, {"knowledge", slot.knowledge}};
}
void from_json(const Json& j, HandSlot& slot) {
  j.at("card").get_to(slot.card);
  j.at("knowledge").get_to(slot.knowledge);
}

void to_json(Json& j, const PlayerHand& hand) {
  j = Json{{"slots", hand.slots}};
}
void from_json(const Json& j, PlayerHand& hand) {
  j.at("slots").get_to(hand.slots);
}

void to_json(Json& j, const CardMultiset& m) {
  j = Json::object();
  for (int i = 0; i < kNumCardTypes; ++i) {
    if (m.CountAt(i) > 0) j[Card::FromIndex(i).ToString()] = m.CountAt(i);
  }
}
void from_json(const Json& j, CardMultiset& m) {
  m = CardMultiset{};
  for (auto it = j.begin(); it != j.end(); ++it) {
    m.Add(Card::FromString(it.key()), it.value().get<int>());
  }
}

void to_json(Json& j, const DeckSpec& deck) {
  j = Json{{"num_colors", deck.num_colors},
           {"num_ranks", deck.num_ranks},
           {"rank_counts", deck.rank_counts}};
}
void from_json(const Json& j, DeckSpec& deck) {
  j.at("num_colors").get_to(deck.num_colors);
  j.at("num_ranks").get_to(deck.num_ranks);
  j.at("rank_counts").get_to(deck.rank_counts);
  deck.Validate();
}

void to_json(Json& j, const GameConfig& config) {
  j = Json{{"deck", config.deck},
           {"bomb_zero_score", config.bomb_zero_score}};
}
void from_json(const Json& j, GameConfig& config) {
  j.at("deck").get_to(config.deck);
  j.at("bomb_zero_score").get_to(config.bomb_zero_score);
}

void to_json(Json& j, const Action& action) {
  switch (action.variant) {
    case ActionType::kPlay:
      j = Json{{"variant", "play"}, {"slot", action.slot}};
      break;
    case ActionType::kDiscard:
      j = Json{{"variant", "discard"}, {"slot", action.slot}};
      break;
    case ActionType::kHintColor:
      j = Json{{"variant", "hint_color"},
               {"target_player", action.target_player},
               {"color", std::string(1, ColorChar(action.color))}};
      break;
    case ActionType::kHintRank:
      j = Json{{"variant", "hint_rank"},
               {"target_player", action.target_player},
               {"rank", action.rank}};
      break;
  }
}
void from_json(const Json& j, Action& action) {
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "play") {
    action = Action::Play(j.at("slot").get<int>());
  } else if (variant == "discard") {
    action = Action::Discard(j.at("slot").get<int>());
  } else if (variant == "hint_color") {
    action = Action::HintColor(
        j.at("target_player").get<int>(),
        ColorFromChar(j.at("color").get<std::string>().at(0)));
  } else if (variant == "hint_rank") {
    action = Action::HintRank(j.at("target_player").get<int>(),
                              j.at("rank").get<int>());
  } else {
    throw std::invalid_argument("unknown action variant: " + variant);
  }
}

namespace {

Json FireworksToJson(const std::array<int, kMaxColors>& fireworks,
                     int num_colors) {
  Json j = Json::object();
  for (int c = 0; c < num_colors; ++c) {
    j[std::string(1, ColorChar(static_cast<Color>(c)))] = fireworks[c];
  }
  return j;
}

void FireworksFromJson(const Json& j, std::array<int, kMaxColors>& fireworks) {
  fireworks.fill(0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    Color c = ColorFromChar(it.key().at(0));
    fireworks[static_cast<int>(c)] = it.value().get<int>();
  }
}

}  // namespace

void to_json(Json& j, const GameState& state) {
  j = Json{{"config", state.config},
           {"num_players", state.num_players},
           {"hands", state.hands},
           {"draw_pile", state.draw_pile},
           {"discard_pile", state.discard_pile},
           {"fireworks",
            FireworksToJson(state.fireworks, state.config.deck.num_colors)},
           {"info_tokens", state.info_tokens},
           {"life_tokens", state.life_tokens},
           {"current_player", state.current_player},
           {"turns_after_deck_empty", state.turns_after_deck_empty},
           {"rng_seed", state.rng_seed}};
}
void from_json(const Json& j, GameState& state) {
  state = GameState{};
  j.at("config").get_to(state.config);
  j.at("num_players").get_to(state.num_players);
  j.at("hands").get_to(state.hands);
  j.at("draw_pile").get_to(state.draw_pile);
  j.at("discard_pile").get_to(state.discard_pile);
  FireworksFromJson(j.at("fireworks"), state.fireworks);
  j.at("info_tokens").get_to(state.info_tokens);
  j.at("life_tokens").get_to(state.life_tokens);
  j.at("current_player").get_to(state.current_player);
  j.at("turns_after_deck_empty").get_to(state.turns_after_deck_empty);
  j.at("rng_seed").get_to(state.rng_seed);
}

void to_json(Json& j, const Observation& obs) {
  Json hands = Json::array();
  for (const Observation::VisibleHand& h : obs.others_hands) {
    hands.push_back(Json{{"player", h.player}, {"slots", h.slots}});
  }
  j = Json{{"config", obs.config},
           {"num_players", obs.num_players},
           {"viewer", obs.viewer},
           {"others_hands", hands},
           {"own_knowledge", obs.own_knowledge},
           {"discard_pile", obs.discard_pile},
           {"fireworks",
            FireworksToJson(obs.fireworks, obs.config.deck.num_colors)},
           {"info_tokens", obs.info_tokens},
           {"life_tokens", obs.life_tokens},
           {"current_player", obs.current_player},
           {"deck_size", obs.deck_size}};
}
void from_json(const Json& j, Observation& obs) {
  obs = Observation{};
  j.at("config").get_to(obs.config);
  j.at("num_players").get_to(obs.num_players);
  j.at("viewer").get_to(obs.viewer);
  for (const Json& h : j.at("others_hands")) {
    Observation::VisibleHand hand;
    h.at("player").get_to(hand.player);
    h.at("slots").get_to(hand.slots);
    obs.others_hands.push_back(std::move(hand));
  }
  j.at("own_knowledge").get_to(obs.own_knowledge);
  j.at("discard_pile").get_to(obs.discard_pile);
  FireworksFromJson(j.at("fireworks"), obs.fireworks);
  j.at("info_tokens").get_to(obs.info_tokens);
  j.at("life_tokens").get_to(obs.life_tokens);
  j.at("current_player").get_to(obs.current_player);
  j.at("deck_size").get_to(obs.deck_size);
}

Json BeliefMatrixToJson(const BeliefMatrix& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) j.push_back(m(r, c));
  }
  return j;
}

BeliefMatrix BeliefMatrixFromJson(const Json& j) {
  if (j.size() % kNumCardTypes != 0) {
    throw std::invalid_argument("belief array length not a multiple of 25");
  }
  Eigen::Index rows = static_cast<Eigen::Index>(j.size()) / kNumCardTypes;
  BeliefMatrix m(rows, kNumCardTypes);
  Eigen::Index i = 0;
  for (const Json& v : j) {
    m(i / kNumCardTypes, i % kNumCardTypes) = v.get<double>();
    ++i;
  }
  return m;
}

std::string BeliefMatrixToCsv(const BeliefMatrix& m) {
  std::string out = "slot";
  for (int i = 0; i < kNumCardTypes; ++i) {
    out += "," + Card::FromIndex(i).ToString();
  }
  out += "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += std::to_string(r);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), ",%.9g", m(r, c));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string CanonicalDump(const Json& j) { return j.dump(); }

uint64_t Fnv1a64(const std::string& bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

uint64_t StateHash(const GameState& state) {
  return Fnv1a64(CanonicalDump(Json(state)));
}

}  // namespace hanabi_tom
