#include <doctest.h>

#include <algorithm>
#include <set>

#include "hanabi_tom/game.h"
#include "hanabi_tom/json_io.h"
#include "test_util.h"

using namespace hanabi_tom;
using namespace hanabi_tom::testing;

TEST_CASE("card order and parsing") {
  CHECK(C("R1") < C("R2"));
  CHECK(C("R5") < C("G1"));  // color-major
  CHECK(C("G3") < C("B1"));
  CHECK(C("B2") < C("W1"));
  CHECK(C("W5") < C("Y1"));
  CHECK(C("Y3").Index() == 22);
  CHECK(Card::FromIndex(22) == C("Y3"));
  CHECK(C("W4").ToString() == "W4");
  CHECK_THROWS_AS(Card::FromString("Z3"), std::invalid_argument);
  CHECK_THROWS_AS(Card::FromString("R6"), std::invalid_argument);
}

TEST_CASE("new game deals and determinism") {
  GameState s2 = NewGame(2, 42);
  CHECK(s2.hands.size() == 2);
  for (const PlayerHand& h : s2.hands) CHECK(h.slots.size() == 5);
  CHECK(s2.draw_pile.size() == 40);
  CHECK(s2.info_tokens == 8);
  CHECK(s2.life_tokens == 3);
  CHECK(s2.Score() == 0);
  for (const PlayerHand& h : s2.hands) {
    for (const HandSlot& slot : h.slots) {
      CHECK(slot.knowledge == SlotKnowledge{});
    }
  }

  GameState s4 = NewGame(4, 42);
  for (const PlayerHand& h : s4.hands) CHECK(h.slots.size() == 4);
  CHECK(s4.draw_pile.size() == 50 - 16);

  CHECK(NewGame(2, 7) == NewGame(2, 7));
  CHECK(StateHash(NewGame(2, 7)) == StateHash(NewGame(2, 7)));
  CHECK(NewGame(2, 7) != NewGame(2, 8));

  CHECK_THROWS_AS(NewGame(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(NewGame(6, 0), std::invalid_argument);
}

TEST_CASE("full deck composition") {
  GameState s = NewGame(2, 0);
  CardMultiset all = AllCardsInPlay(s);
  CHECK(all == FullDeckMultiset(DeckSpec{}));
  CHECK(all.TotalSize() == 50);
  CHECK(all.Count(C("R1")) == 3);
  CHECK(all.Count(C("R2")) == 2);
  CHECK(all.Count(C("R4")) == 2);
  CHECK(all.Count(C("R5")) == 1);
}

TEST_CASE("legal actions") {
  GameState s = NewGame(2, 11);

  SUBCASE("fresh state: plays, hints, no discards at 8 tokens") {
    std::vector<Action> legal = LegalActions(s);
    int plays = 0, discards = 0, hints = 0;
    for (const Action& a : legal) {
      if (a.variant == ActionType::kPlay) ++plays;
      if (a.variant == ActionType::kDiscard) ++discards;
      if (a.variant == ActionType::kHintColor ||
          a.variant == ActionType::kHintRank)
        ++hints;
    }
    CHECK(plays == 5);
    CHECK(discards == 0);

    std::set<int> colors, ranks;
    for (const HandSlot& slot : s.hands[1].slots) {
      colors.insert(static_cast<int>(slot.card.color));
      ranks.insert(slot.card.rank);
    }
    CHECK(hints == static_cast<int>(colors.size() + ranks.size()));
  }

  SUBCASE("no tokens means no hints") {
    s.info_tokens = 0;
    for (const Action& a : LegalActions(s)) {
      CHECK(a.variant != ActionType::kHintColor);
      CHECK(a.variant != ActionType::kHintRank);
      CHECK(a.variant != ActionType::kPlay ? a.variant == ActionType::kDiscard
                                           : true);
    }
  }

  SUBCASE("hints must match a card") {
    // Force a known partner hand.
    s.hands[1].slots.clear();
    for (const char* c : {"G1", "G2", "B3"}) s.hands[1].slots.push_back({C(c), {}});
    std::vector<Action> legal = LegalActions(s);
    auto has = [&legal](const Action& a) {
      return std::find(legal.begin(), legal.end(), a) != legal.end();
    };
    CHECK_FALSE(has(Action::HintColor(1, Color::kRed)));
    CHECK(has(Action::HintColor(1, Color::kGreen)));
    CHECK(has(Action::HintColor(1, Color::kBlue)));
    CHECK_FALSE(has(Action::HintRank(1, 5)));
    CHECK(has(Action::HintRank(1, 3)));
  }

  SUBCASE("terminal state yields no actions") {
    s.life_tokens = 0;
    CHECK(LegalActions(s).empty());
  }
}

TEST_CASE("hints mark exactly the matching slots") {
  GameState s = NewGame(2, 3);
  s.hands[1].slots.clear();
  for (const char* c : {"R3", "G3", "R4", "W1", "W2"}) {
    s.hands[1].slots.push_back({C(c), {}});
  }

  ApplyResult r = ApplyAction(s, Action::HintColor(1, Color::kRed));
  const std::vector<HandSlot>& slots = r.state.hands[1].slots;
  CHECK(slots[0].knowledge.hinted_color == Color::kRed);
  CHECK(slots[2].knowledge.hinted_color == Color::kRed);
  CHECK_FALSE(slots[1].knowledge.hinted_color.has_value());
  CHECK_FALSE(slots[3].knowledge.hinted_color.has_value());
  CHECK_FALSE(slots[4].knowledge.hinted_color.has_value());
  CHECK(r.state.info_tokens == 7);
  CHECK(r.state.current_player == 1);

  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].type == GameEvent::Type::kHintGiven);
  CHECK(r.events[0].touched_slots == std::vector<int>{0, 2});

  // Rank hint on top of a color hint completes the knowledge.
  GameState s2 = r.state;
  s2.current_player = 0;
  ApplyResult r2 = ApplyAction(s2, Action::HintRank(1, 3));
  CHECK(r2.state.hands[1].slots[0].knowledge == K("R3"));
  CHECK(r2.state.hands[1].slots[1].knowledge == K("?3"));
  CHECK(r2.state.hands[1].slots[2].knowledge == K("R?"));
}

TEST_CASE("plays and discards") {
  GameState s = NewGame(2, 9);
  s.hands[0].slots.clear();
  for (const char* c : {"R1", "R3", "W1", "B5", "Y2"}) {
    s.hands[0].slots.push_back({C(c), {}});
  }

  SUBCASE("successful play builds the pile and draws") {
    ApplyResult r = ApplyAction(s, Action::Play(0));
    CHECK(r.state.fireworks[static_cast<int>(Color::kRed)] == 1);
    CHECK(r.state.life_tokens == 3);
    CHECK(r.state.hands[0].slots.size() == 5);  // replacement drawn
    CHECK(r.state.draw_pile.size() == s.draw_pile.size() - 1);
    CHECK(r.state.hands[0].slots.back().knowledge == SlotKnowledge{});
    CHECK(r.events[0].successful_play);
  }

  SUBCASE("failed play burns a life and discards the card") {
    ApplyResult r = ApplyAction(s, Action::Play(1));  // R3 on empty pile
    CHECK(r.state.fireworks[static_cast<int>(Color::kRed)] == 0);
    CHECK(r.state.life_tokens == 2);
    CHECK(r.state.discard_pile.Count(C("R3")) == 1);
    CHECK_FALSE(r.events[0].successful_play);
    CHECK(r.events[1].type == GameEvent::Type::kLifeLost);
  }

  SUBCASE("discard returns a token") {
    s.info_tokens = 4;
    ApplyResult r = ApplyAction(s, Action::Discard(2));
    CHECK(r.state.info_tokens == 5);
    CHECK(r.state.discard_pile.Count(C("W1")) == 1);
    CHECK(r.state.hands[0].slots.size() == 5);
  }

  SUBCASE("illegal actions are rejected") {
    s.hands[1].slots.clear();
    for (const char* c : {"G1", "G2", "B3", "B4", "Y5"}) {
      s.hands[1].slots.push_back({C(c), {}});
    }
    CHECK_THROWS_AS(ApplyAction(s, Action::Discard(0)),
                    IllegalActionError);  // 8 tokens
    CHECK_THROWS_AS(ApplyAction(s, Action::Play(9)), IllegalActionError);
    CHECK_THROWS_AS(ApplyAction(s, Action::HintColor(0, Color::kRed)),
                    IllegalActionError);  // self-hint
    CHECK_THROWS_AS(ApplyAction(s, Action::HintColor(1, Color::kRed)),
                    IllegalActionError);  // no red in target hand
  }

  SUBCASE("completing a pile restores an info token") {
    s.info_tokens = 3;
    s.fireworks[static_cast<int>(Color::kBlue)] = 4;
    ApplyResult r = ApplyAction(s, Action::Play(3));  // B5
    CHECK(r.state.fireworks[static_cast<int>(Color::kBlue)] == 5);
    CHECK(r.state.info_tokens == 4);
  }
}

TEST_CASE("observation hides the viewer's hand") {
  GameState s = NewGame(3, 21);
  ApplyResult r = ApplyAction(s, Action::HintColor(
                                     1, s.hands[1].slots[0].card.color));
  Observation obs0 = Observe(r.state, 0);

  CHECK(obs0.viewer == 0);
  CHECK(obs0.others_hands.size() == 2);
  for (const Observation::VisibleHand& h : obs0.others_hands) {
    CHECK(h.player != 0);
  }
  // Turn order after the viewer.
  CHECK(obs0.others_hands[0].player == 1);
  CHECK(obs0.others_hands[1].player == 2);

  Observation obs1 = Observe(r.state, 1);
  CHECK(obs1.own_knowledge.size() == 5);
  for (size_t k = 0; k < obs1.own_knowledge.size(); ++k) {
    CHECK(obs1.own_knowledge[k] == r.state.hands[1].slots[k].knowledge);
  }
  CHECK(obs1.deck_size == 35);
  CHECK_THROWS_AS(Observe(r.state, 5), std::invalid_argument);
}

TEST_CASE("terminal conditions and scoring") {
  GameState s = NewGame(2, 5);

  SUBCASE("fresh game is live") {
    ScoreInfo info = ScoreAndTerminal(s);
    CHECK(info.score == 0);
    CHECK_FALSE(info.terminal);
    CHECK(info.cause == TerminalCause::kNone);
  }

  SUBCASE("bombing zeroes the score by default") {
    s.fireworks = {3, 2, 0, 0, 1};
    s.life_tokens = 0;
    ScoreInfo info = ScoreAndTerminal(s);
    CHECK(info.terminal);
    CHECK(info.cause == TerminalCause::kBombed);
    CHECK(info.score == 0);

    s.config.bomb_zero_score = false;
    info = ScoreAndTerminal(s);
    CHECK(info.score == 6);
  }

  SUBCASE("all piles complete") {
    s.fireworks = {5, 5, 5, 5, 5};
    ScoreInfo info = ScoreAndTerminal(s);
    CHECK(info.terminal);
    CHECK(info.cause == TerminalCause::kComplete);
    CHECK(info.score == 25);
  }

  SUBCASE("every player acts once after the deck empties") {
    GameState state = NewGame(2, 5);
    state.draw_pile.clear();
    int extra_turns = 0;
    while (!ScoreAndTerminal(state).terminal) {
      std::vector<Action> legal = LegalActions(state);
      REQUIRE_FALSE(legal.empty());
      // Hint to avoid shrinking hands in this walk.
      Action hint = legal.back();
      if (state.info_tokens == 0) hint = legal.front();
      state = ApplyAction(state, hint).state;
      ++extra_turns;
      REQUIRE(extra_turns < 10);
    }
    CHECK(extra_turns == 2);
    CHECK(ScoreAndTerminal(state).cause == TerminalCause::kDeckExhausted);
  }
}

TEST_CASE("conservation and token bounds under random play") {
  Rng rng(2024);
  for (int game = 0; game < 20; ++game) {
    int players = 2 + static_cast<int>(rng.UniformInt(4));
    GameState s = NewGame(players, rng.NextU64());
    int steps = 0;
    GameState final_state = RandomPlayout(
        std::move(s), rng, players * (50 + 8 * 25),
        [&steps, players](const GameState& state,
                          const std::vector<Action>&) {
          ++steps;
          CHECK(AllCardsInPlay(state) == FullDeckMultiset(state.config.deck));
          CHECK(state.info_tokens >= 0);
          CHECK(state.info_tokens <= 8);
          CHECK(state.life_tokens >= 0);
          CHECK(state.life_tokens <= 3);
          CHECK(state.Score() >= 0);
          CHECK(state.Score() <= 25);
          for (const PlayerHand& hand : state.hands) {
            CHECK(static_cast<int>(hand.slots.size()) <=
                  HandSizeForPlayers(players));
          }
        });
    // The loose turn bound must see every game to completion.
    CHECK(ScoreAndTerminal(final_state).terminal);
    CHECK(steps < players * (50 + 8 * 25));
  }
}

TEST_CASE("determinism: identical seed and actions give identical states") {
  Rng action_rng(77);
  std::vector<Action> script;
  GameState a = NewGame(3, 99);
  GameState cursor = a;
  for (int i = 0; i < 25; ++i) {
    std::vector<Action> legal = LegalActions(cursor);
    if (legal.empty()) break;
    Action action = legal[action_rng.UniformInt(legal.size())];
    script.push_back(action);
    cursor = ApplyAction(cursor, action).state;
  }

  GameState b = NewGame(3, 99);
  for (const Action& action : script) b = ApplyAction(b, action).state;
  CHECK(b == cursor);
  CHECK(CanonicalDump(Json(b)) == CanonicalDump(Json(cursor)));
  CHECK(StateHash(b) == StateHash(cursor));
}

TEST_CASE("reduced decks play through") {
  GameConfig config;
  config.deck.num_colors = 2;
  config.deck.num_ranks = 3;
  config.deck.rank_counts = {3, 2, 2};
  GameState s = NewGame(2, 1, config);
  CHECK(s.draw_pile.size() == 14 - 10);

  Rng rng(5);
  GameState done = RandomPlayout(std::move(s), rng, 500,
                                 [](const GameState&, const auto&) {});
  ScoreInfo info = ScoreAndTerminal(done);
  CHECK(info.terminal);
  CHECK(info.score <= 6);
}
