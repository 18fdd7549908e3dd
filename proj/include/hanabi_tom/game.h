#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hanabi_tom/types.h"

namespace hanabi_tom {

struct HandSlot {
  Card card;
  SlotKnowledge knowledge;

  friend bool operator==(const HandSlot&, const HandSlot&) = default;
};

struct PlayerHand {
  std::vector<HandSlot> slots;

  friend bool operator==(const PlayerHand&, const PlayerHand&) = default;
};

enum class ActionType { kPlay, kDiscard, kHintColor, kHintRank };

struct Action {
  ActionType variant = ActionType::kPlay;
  int slot = -1;           // kPlay / kDiscard
  int target_player = -1;  // kHintColor / kHintRank
  Color color = Color::kRed;
  int rank = 0;

  static Action Play(int slot) { return {ActionType::kPlay, slot}; }
  static Action Discard(int slot) { return {ActionType::kDiscard, slot}; }
  static Action HintColor(int target, Color c) {
    Action a{ActionType::kHintColor};
    a.target_player = target;
    a.color = c;
    return a;
  }
  static Action HintRank(int target, int rank) {
    Action a{ActionType::kHintRank};
    a.target_player = target;
    a.rank = rank;
    return a;
  }

  std::string ToString() const;

  friend bool operator==(const Action&, const Action&) = default;
};

enum class TerminalCause { kNone, kComplete, kBombed, kDeckExhausted };

std::string ToString(TerminalCause cause);
TerminalCause TerminalCauseFromString(const std::string& s);

struct GameConfig {
  DeckSpec deck;
  // Score 0 when the third life is lost; when false, the fireworks stand.
  bool bomb_zero_score = true;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// Hand size: 5 for 2-3 players, 4 for 4-5 players.
int HandSizeForPlayers(int num_players);

struct GameState {
  GameConfig config;
  int num_players = 0;
  std::vector<PlayerHand> hands;
  std::vector<Card> draw_pile;  // back() is drawn next
  CardMultiset discard_pile;
  std::array<int, kMaxColors> fireworks{};  // highest played rank per color
  int info_tokens = 8;
  int life_tokens = 3;
  int current_player = 0;
  int turns_after_deck_empty = 0;
  uint64_t rng_seed = 0;

  int Score() const;  // sum of firework tops (running score, bomb rule aside)

  friend bool operator==(const GameState&, const GameState&) = default;
};

struct GameEvent {
  enum class Type {
    kHintGiven,
    kCardPlayed,
    kCardDiscarded,
    kCardDrawn,
    kLifeLost,
    kInfoTokenGained,
    kGameEnded,
  };

  Type type;
  int player = -1;                 // hand owner / actor, as applicable
  int slot = -1;                   // play/discard source, draw destination
  Card card{};                     // card moved or drawn
  bool successful_play = false;    // kCardPlayed
  std::vector<int> touched_slots;  // kHintGiven: slots matching the hint
  TerminalCause cause = TerminalCause::kNone;  // kGameEnded
};

struct Observation {
  struct VisibleHand {
    int player = -1;
    std::vector<HandSlot> slots;

    friend bool operator==(const VisibleHand&, const VisibleHand&) = default;
  };

  GameConfig config;
  int num_players = 0;
  int viewer = -1;
  std::vector<VisibleHand> others_hands;  // turn order starting after viewer
  std::vector<SlotKnowledge> own_knowledge;
  CardMultiset discard_pile;
  std::array<int, kMaxColors> fireworks{};
  int info_tokens = 0;
  int life_tokens = 0;
  int current_player = 0;
  int deck_size = 0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct ScoreInfo {
  int score = 0;
  bool terminal = false;
  TerminalCause cause = TerminalCause::kNone;
};

struct ApplyResult {
  GameState state;
  std::vector<GameEvent> events;
};

GameState NewGame(int num_players, uint64_t seed, GameConfig config = {});

// Empty on terminal states. Hints require an info token and at least one
// matching card in the target hand; Discard is excluded at 8 tokens.
std::vector<Action> LegalActions(const GameState& state);

// Pure: returns the successor state, never mutates the input. Throws
// IllegalActionError (with a reason) for actions not in LegalActions.
ApplyResult ApplyAction(const GameState& state, const Action& action);

Observation Observe(const GameState& state, int player);

ScoreInfo ScoreAndTerminal(const GameState& state);

}  // namespace hanabi_tom
