#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hanabi_tom/belief.h"
#include "hanabi_tom/game.h"
#include "hanabi_tom/json_io.h"
#include "hanabi_tom/linalg.h"
#include "hanabi_tom/rng.h"

namespace hanabi_tom {

enum class BeliefMethod { kMap, kMc };

std::string ToString(BeliefMethod method);
BeliefMethod BeliefMethodFromString(const std::string& s);

struct LayoutSegment {
  std::string name;
  int offset = 0;
  int length = 0;

  friend bool operator==(const LayoutSegment&, const LayoutSegment&) = default;
};

struct ObservationLayout {
  std::vector<LayoutSegment> segments;
  int total_length = 0;

  const LayoutSegment& Segment(const std::string& name) const;

  friend bool operator==(const ObservationLayout&,
                         const ObservationLayout&) = default;
};

// What the previous action looked like to everyone at the table; fills the
// last-action segment. Absent at the first turn (segment stays zero).
struct LastActionInfo {
  int actor = -1;
  Action action;
  std::vector<int> touched_slots;  // hint matches in the target hand
  bool successful_play = false;
  std::optional<Card> moved_card;  // identity of the played/discarded card
};

struct EncodeOptions {
  int level = 0;  // 0: own belief only; 1: own + nested teammate belief
  BeliefMethod method = BeliefMethod::kMap;
  int mc_samples = 100;
  Rng* rng = nullptr;  // required for the MC method
  // Level 1 encodes the next player in turn order unless this asks for all.
  bool all_teammates = false;
  std::optional<LastActionInfo> last_action;
};

struct EncodedObservation {
  FeatureVector values;
  ObservationLayout layout;
};

// Fixed-size layout for a given table; belief block is eta*25 per encoded
// belief level. Segment order: others_hands, hand_missing, deck_size,
// fireworks, info_tokens, life_tokens, discards, last_action, belief.
ObservationLayout BuildLayout(int num_players, const DeckSpec& deck, int level,
                              bool all_teammates = false);

EncodedObservation Encode(const Observation& obs,
                          const EncodeOptions& options = {});

Json EncodedObservationToJson(const EncodedObservation& enc);
EncodedObservation EncodedObservationFromJson(const Json& j);

}  // namespace hanabi_tom
