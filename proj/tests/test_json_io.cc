#include <doctest.h>

#include "hanabi_tom/json_io.h"
#include "test_util.h"

using namespace hanabi_tom;
using namespace hanabi_tom::testing;

TEST_CASE("card and knowledge serialization") {
  CHECK(Json(C("R3")).dump() == "\"R3\"");
  CHECK(Json(C("Y5")).get<Card>() == C("Y5"));

  SlotKnowledge k = K("R?");
  Json j(k);
  CHECK(j["hinted_color"] == "R");
  CHECK(j["hinted_rank"].is_null());
  CHECK(j.get<SlotKnowledge>() == k);
  CHECK(Json(K("??")).get<SlotKnowledge>() == SlotKnowledge{});
  CHECK(Json(K("W4")).get<SlotKnowledge>() == K("W4"));
}

TEST_CASE("action serialization uses spec field names") {
  Json play(Action::Play(2));
  CHECK(play["variant"] == "play");
  CHECK(play["slot"] == 2);

  Json hint(Action::HintColor(1, Color::kWhite));
  CHECK(hint["variant"] == "hint_color");
  CHECK(hint["target_player"] == 1);
  CHECK(hint["color"] == "W");

  Json rank(Action::HintRank(3, 4));
  CHECK(rank["variant"] == "hint_rank");
  CHECK(rank["rank"] == 4);

  for (const Action& a :
       {Action::Play(0), Action::Discard(3), Action::HintColor(2, Color::kRed),
        Action::HintRank(1, 5)}) {
    CHECK(Json(a).get<Action>() == a);
  }
  CHECK_THROWS_AS(Json{{"variant", "fold"}}.get<Action>(),
                  std::invalid_argument);
}

TEST_CASE("game state round trip is exact and canonical") {
  GameState s = NewGame(3, 123);
  s = ApplyAction(s, LegalActions(s).back()).state;
  s = ApplyAction(s, LegalActions(s).front()).state;

  Json j(s);
  GameState back = j.get<GameState>();
  CHECK(back == s);
  CHECK(CanonicalDump(Json(back)) == CanonicalDump(j));

  // Canonical dumps of equal values are byte-identical.
  GameState again = NewGame(3, 123);
  again = ApplyAction(again, LegalActions(again).back()).state;
  again = ApplyAction(again, LegalActions(again).front()).state;
  CHECK(CanonicalDump(Json(again)) == CanonicalDump(j));
  CHECK(StateHash(again) == StateHash(s));

  // Spec field names are present.
  for (const char* field :
       {"num_players", "hands", "draw_pile", "discard_pile", "fireworks",
        "info_tokens", "life_tokens", "current_player",
        "turns_after_deck_empty", "rng_seed"}) {
    CHECK(j.contains(field));
  }
}

TEST_CASE("observation round trip") {
  GameState s = NewGame(2, 55);
  s = ApplyAction(s, LegalActions(s).back()).state;
  Observation obs = Observe(s, 1);

  Json j(obs);
  CHECK(j.get<Observation>() == obs);
  for (const char* field :
       {"viewer", "others_hands", "own_knowledge", "discard_pile", "fireworks",
        "info_tokens", "life_tokens", "current_player", "deck_size"}) {
    CHECK(j.contains(field));
  }
  // Own slots expose hint state only, never card identities.
  for (const Json& k : j["own_knowledge"]) {
    CHECK_FALSE(k.contains("card"));
  }
  CHECK(j["others_hands"].size() == 1);
  CHECK(j["others_hands"][0]["player"] == 0);
}

TEST_CASE("multiset serialization skips zero counts") {
  CardMultiset m;
  m.Add(C("R3"), 2);
  m.Add(C("Y1"), 1);
  Json j(m);
  CHECK(j.size() == 2);
  CHECK(j["R3"] == 2);
  CHECK(j.get<CardMultiset>() == m);
}

TEST_CASE("belief matrix json and csv") {
  BeliefMatrix m(2, kNumCardTypes);
  m.setZero();
  m(0, C("R3").Index()) = 0.4;
  m(0, C("R4").Index()) = 0.4;
  m(0, C("R5").Index()) = 0.2;
  m(1, C("G1").Index()) = 1.0;

  Json j = BeliefMatrixToJson(m);
  CHECK(j.size() == 50);
  CHECK(j[C("R3").Index()] == 0.4);
  BeliefMatrix back = BeliefMatrixFromJson(j);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

  std::string csv = BeliefMatrixToCsv(m);
  CHECK(csv.find("slot,R1,R2,R3") == 0);
  CHECK(csv.find("\n0,") != std::string::npos);

  CHECK_THROWS_AS(BeliefMatrixFromJson(Json::array({1.0, 2.0})),
                  std::invalid_argument);
}
