#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hanabi_tom/game.h"
#include "hanabi_tom/linalg.h"

namespace hanabi_tom {

using Json = nlohmann::json;

// Cards serialize as two-character strings ("R3"). Objects use nlohmann's
// sorted-key representation, so dumps are canonical: equal values produce
// byte-identical text.
void to_json(Json& j, const Card& card);
void from_json(const Json& j, Card& card);

void to_json(Json& j, const SlotKnowledge& k);
void from_json(const Json& j, SlotKnowledge& k);

void to_json(Json& j, const HandSlot& slot);
void from_json(const Json& j, HandSlot& slot);

void to_json(Json& j, const PlayerHand& hand);
void from_json(const Json& j, PlayerHand& hand);

void to_json(Json& j, const CardMultiset& m);
void from_json(const Json& j, CardMultiset& m);

void to_json(Json& j, const DeckSpec& deck);
void from_json(const Json& j, DeckSpec& deck);

void to_json(Json& j, const GameConfig& config);
void from_json(const Json& j, GameConfig& config);

void to_json(Json& j, const Action& action);
void from_json(const Json& j, Action& action);

void to_json(Json& j, const GameState& state);
void from_json(const Json& j, GameState& state);

void to_json(Json& j, const Observation& obs);
void from_json(const Json& j, Observation& obs);

// Flat row-major array of rows x 25 numbers in canonical card order.
Json BeliefMatrixToJson(const BeliefMatrix& m);
BeliefMatrix BeliefMatrixFromJson(const Json& j);
std::string BeliefMatrixToCsv(const BeliefMatrix& m);

std::string CanonicalDump(const Json& j);

// FNV-1a 64-bit over the canonical dump.
uint64_t StateHash(const GameState& state);
uint64_t Fnv1a64(const std::string& bytes);

}  // namespace hanabi_tom
