#include "hanabi_tom/game.h"

#include <algorithm>
#include <numeric>

#include "hanabi_tom/rng.h"

namespace hanabi_tom {

std::string Action::ToString() const {
  switch (variant) {
    case ActionType::kPlay:
      return "play " + std::to_string(slot);
    case ActionType::kDiscard:
      return "discard " + std::to_string(slot);
    case ActionType::kHintColor:
      return std::string("hint ") + ColorChar(color) + " to " +
             std::to_string(target_player);
    case ActionType::kHintRank:
      return "hint " + std::to_string(rank) + " to " +
             std::to_string(target_player);
  }
  return "?";
}

std::string ToString(TerminalCause cause) {
  switch (cause) {
    case TerminalCause::kNone:
      return "none";
    case TerminalCause::kComplete:
      return "complete";
    case TerminalCause::kBombed:
      return "bombed";
    case TerminalCause::kDeckExhausted:
      return "deck_exhausted";
  }
  return "?";
}

TerminalCause TerminalCauseFromString(const std::string& s) {
  if (s == "none") return TerminalCause::kNone;
  if (s == "complete") return TerminalCause::kComplete;
  if (s == "bombed") return TerminalCause::kBombed;
  if (s == "deck_exhausted") return TerminalCause::kDeckExhausted;
  throw std::invalid_argument("unknown terminal cause: " + s);
}

int HandSizeForPlayers(int num_players) {
  return num_players <= 3 ? 5 : 4;
}

int GameState::Score() const {
  return std::accumulate(fireworks.begin(), fireworks.end(), 0);
}

GameState NewGame(int num_players, uint64_t seed, GameConfig config) {
  if (num_players < 2 || num_players > 5) {
    throw std::invalid_argument("num_players must be in 2..5");
  }
  config.deck.Validate();

  GameState state;
  state.config = config;
  state.num_players = num_players;
  state.rng_seed = seed;

  for (int c = 0; c < config.deck.num_colors; ++c) {
    for (int r = 1; r <= config.deck.num_ranks; ++r) {
      for (int n = 0; n < config.deck.rank_counts[r - 1]; ++n) {
        state.draw_pile.push_back(
            Card{static_cast<Color>(c), static_cast<int8_t>(r)});
      }
    }
  }
  Rng rng(seed);
  rng.Shuffle(state.draw_pile);

  int hand_size = HandSizeForPlayers(num_players);
  if (static_cast<int>(state.draw_pile.size()) < num_players * hand_size) {
    throw std::invalid_argument("deck too small to deal hands");
  }
  state.hands.resize(num_players);
  for (int k = 0; k < hand_size; ++k) {
    for (int p = 0; p < num_players; ++p) {
      state.hands[p].slots.push_back({state.draw_pile.back(), {}});
      state.draw_pile.pop_back();
    }
  }
  return state;
}

namespace {

bool HandMatchesColor(const PlayerHand& hand, Color c) {
  return std::any_of(hand.slots.begin(), hand.slots.end(),
                     [c](const HandSlot& s) { return s.card.color == c; });
}

bool HandMatchesRank(const PlayerHand& hand, int rank) {
  return std::any_of(hand.slots.begin(), hand.slots.end(),
                     [rank](const HandSlot& s) { return s.card.rank == rank; });
}

// Returns an empty string if legal, otherwise the reason.
std::string CheckLegal(const GameState& state, const Action& action) {
  if (ScoreAndTerminal(state).terminal) return "game is over";
  int actor = state.current_player;
  const PlayerHand& own = state.hands[actor];
  switch (action.variant) {
    case ActionType::kPlay:
      if (action.slot < 0 || action.slot >= static_cast<int>(own.slots.size()))
        return "play slot out of range";
      return "";
    case ActionType::kDiscard:
      if (action.slot < 0 || action.slot >= static_cast<int>(own.slots.size()))
        return "discard slot out of range";
      if (state.info_tokens >= 8) return "cannot discard at 8 info tokens";
      return "";
    case ActionType::kHintColor:
    case ActionType::kHintRank: {
      if (state.info_tokens <= 0) return "no info tokens";
      if (action.target_player < 0 ||
          action.target_player >= state.num_players)
        return "hint target out of range";
      if (action.target_player == actor) return "cannot hint self";
      const PlayerHand& target = state.hands[action.target_player];
      if (action.variant == ActionType::kHintColor) {
        if (static_cast<int>(action.color) >= state.config.deck.num_colors)
          return "hint color outside deck";
        if (!HandMatchesColor(target, action.color))
          return "hint matches no card";
      } else {
        if (action.rank < 1 || action.rank > state.config.deck.num_ranks)
          return "hint rank outside deck";
        if (!HandMatchesRank(target, action.rank))
          return "hint matches no card";
      }
      return "";
    }
  }
  return "unknown action";
}

void DrawCard(GameState& state, int player, std::vector<GameEvent>& events) {
  if (state.draw_pile.empty()) return;
  Card card = state.draw_pile.back();
  state.draw_pile.pop_back();
  state.hands[player].slots.push_back({card, {}});
  GameEvent ev{GameEvent::Type::kCardDrawn, player};
  ev.slot = static_cast<int>(state.hands[player].slots.size()) - 1;
  ev.card = card;
  events.push_back(ev);
}

}  // namespace

std::vector<Action> LegalActions(const GameState& state) {
  std::vector<Action> actions;
  if (ScoreAndTerminal(state).terminal) return actions;

  int actor = state.current_player;
  int num_slots = static_cast<int>(state.hands[actor].slots.size());
  for (int s = 0; s < num_slots; ++s) actions.push_back(Action::Play(s));
  if (state.info_tokens < 8) {
    for (int s = 0; s < num_slots; ++s) actions.push_back(Action::Discard(s));
  }
  if (state.info_tokens > 0) {
    for (int offset = 1; offset < state.num_players; ++offset) {
      int target = (actor + offset) % state.num_players;
      const PlayerHand& hand = state.hands[target];
      for (int c = 0; c < state.config.deck.num_colors; ++c) {
        if (HandMatchesColor(hand, static_cast<Color>(c))) {
          actions.push_back(Action::HintColor(target, static_cast<Color>(c)));
        }
      }
      for (int r = 1; r <= state.config.deck.num_ranks; ++r) {
        if (HandMatchesRank(hand, r)) {
          actions.push_back(Action::HintRank(target, r));
        }
      }
    }
  }
  return actions;
}

ApplyResult ApplyAction(const GameState& state, const Action& action) {
  if (std::string reason = CheckLegal(state, action); !reason.empty()) {
    throw IllegalActionError("illegal action (" + action.ToString() +
                             "): " + reason);
  }

  ApplyResult result{state, {}};
  GameState& next = result.state;
  std::vector<GameEvent>& events = result.events;
  int actor = next.current_player;
  bool deck_was_empty = next.draw_pile.empty();

  switch (action.variant) {
    case ActionType::kPlay: {
      Card card = next.hands[actor].slots[action.slot].card;
      next.hands[actor].slots.erase(next.hands[actor].slots.begin() +
                                    action.slot);
      int& pile = next.fireworks[static_cast<int>(card.color)];
      GameEvent ev{GameEvent::Type::kCardPlayed, actor};
      ev.slot = action.slot;
      ev.card = card;
      if (card.rank == pile + 1) {
        pile = card.rank;
        ev.successful_play = true;
        events.push_back(ev);
        if (card.rank == next.config.deck.num_ranks && next.info_tokens < 8) {
          ++next.info_tokens;
          events.push_back({GameEvent::Type::kInfoTokenGained, actor});
        }
      } else {
        next.discard_pile.Add(card);
        --next.life_tokens;
        events.push_back(ev);
        events.push_back({GameEvent::Type::kLifeLost, actor});
      }
      DrawCard(next, actor, events);
      break;
    }
    case ActionType::kDiscard: {
      Card card = next.hands[actor].slots[action.slot].card;
      next.hands[actor].slots.erase(next.hands[actor].slots.begin() +
                                    action.slot);
      next.discard_pile.Add(card);
      ++next.info_tokens;
      GameEvent ev{GameEvent::Type::kCardDiscarded, actor};
      ev.slot = action.slot;
      ev.card = card;
      events.push_back(ev);
      DrawCard(next, actor, events);
      break;
    }
    case ActionType::kHintColor:
    case ActionType::kHintRank: {
      --next.info_tokens;
      PlayerHand& target = next.hands[action.target_player];
      GameEvent ev{GameEvent::Type::kHintGiven, action.target_player};
      for (int s = 0; s < static_cast<int>(target.slots.size()); ++s) {
        HandSlot& slot = target.slots[s];
        if (action.variant == ActionType::kHintColor) {
          if (slot.card.color == action.color) {
            slot.knowledge.hinted_color = action.color;
            ev.touched_slots.push_back(s);
          }
        } else {
          if (slot.card.rank == action.rank) {
            slot.knowledge.hinted_rank = static_cast<int8_t>(action.rank);
            ev.touched_slots.push_back(s);
          }
        }
      }
      events.push_back(ev);
      break;
    }
  }

  next.current_player = (actor + 1) % next.num_players;
  if (deck_was_empty) ++next.turns_after_deck_empty;

  if (ScoreInfo info = ScoreAndTerminal(next); info.terminal) {
    GameEvent ev{GameEvent::Type::kGameEnded};
    ev.cause = info.cause;
    events.push_back(ev);
  }
  return result;
}

Observation Observe(const GameState& state, int player) {
  if (player < 0 || player >= state.num_players) {
    throw std::invalid_argument("invalid player index");
  }
  Observation obs;
  obs.config = state.config;
  obs.num_players = state.num_players;
  obs.viewer = player;
  for (int offset = 1; offset < state.num_players; ++offset) {
    int other = (player + offset) % state.num_players;
    obs.others_hands.push_back({other, state.hands[other].slots});
  }
  for (const HandSlot& slot : state.hands[player].slots) {
    obs.own_knowledge.push_back(slot.knowledge);
  }
  obs.discard_pile = state.discard_pile;
  obs.fireworks = state.fireworks;
  obs.info_tokens = state.info_tokens;
  obs.life_tokens = state.life_tokens;
  obs.current_player = state.current_player;
  obs.deck_size = static_cast<int>(state.draw_pile.size());
  return obs;
}

ScoreInfo ScoreAndTerminal(const GameState& state) {
  ScoreInfo info;
  info.score = state.Score();
  if (state.life_tokens <= 0) {
    info.terminal = true;
    info.cause = TerminalCause::kBombed;
    if (state.config.bomb_zero_score) info.score = 0;
    return info;
  }
  bool complete = true;
  for (int c = 0; c < state.config.deck.num_colors; ++c) {
    if (state.fireworks[c] < state.config.deck.num_ranks) complete = false;
  }
  if (complete) {
    info.terminal = true;
    info.cause = TerminalCause::kComplete;
    return info;
  }
  if (state.turns_after_deck_empty >= state.num_players) {
    info.terminal = true;
    info.cause = TerminalCause::kDeckExhausted;
  }
  return info;
}

}  // namespace hanabi_tom
