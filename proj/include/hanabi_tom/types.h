#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanabi_tom {

// Colors in canonical order. The canonical card order everywhere in this
// library is color-major, rank-minor over the fixed 5x5 type grid; reduced
// decks occupy a prefix of colors/ranks and leave the rest at count zero.
enum class Color : int8_t {
  kRed = 0,
  kGreen = 1,
  kBlue = 2,
  kWhite = 3,
  kYellow = 4,
};

inline constexpr int kMaxColors = 5;
inline constexpr int kMaxRanks = 5;
inline constexpr int kNumCardTypes = kMaxColors * kMaxRanks;

inline constexpr char kColorChars[kMaxColors + 1] = "RGBWY";

char ColorChar(Color c);
Color ColorFromChar(char ch);  // throws std::invalid_argument

struct Card {
  Color color = Color::kRed;
  int8_t rank = 1;  // 1..5

  int Index() const { return static_cast<int>(color) * kMaxRanks + rank - 1; }
  static Card FromIndex(int index);

  std::string ToString() const;             // e.g. "R3"
  static Card FromString(const std::string& s);

  friend auto operator<=>(const Card&, const Card&) = default;
};

// Positive hint marks on one hand slot. (nullopt, nullopt) is the state of a
// freshly drawn card. Negative information implied by hints is intentionally
// not stored here; it is recoverable from the trajectory log.
struct SlotKnowledge {
  std::optional<Color> hinted_color;
  std::optional<int8_t> hinted_rank;

  bool Admits(Card c) const {
    return (!hinted_color || *hinted_color == c.color) &&
           (!hinted_rank || *hinted_rank == c.rank);
  }
  bool IsFullyHinted() const { return hinted_color && hinted_rank; }

  // Dense key in [0, 36): 6 color states x 6 rank states.
  int Key() const {
    int c = hinted_color ? static_cast<int>(*hinted_color) + 1 : 0;
    int r = hinted_rank ? *hinted_rank : 0;
    return c * (kMaxRanks + 1) + r;
  }
  static constexpr int kNumKeys = (kMaxColors + 1) * (kMaxRanks + 1);

  std::string ToString() const;  // e.g. "R?", "?3", "R3", "??"

  friend bool operator==(const SlotKnowledge&, const SlotKnowledge&) = default;
};

// Deck composition: num_colors suits, ranks 1..num_ranks, rank_counts[r-1]
// copies of each rank per suit. Defaults to the standard 50-card deck.
struct DeckSpec {
  int num_colors = 5;
  int num_ranks = 5;
  std::vector<int> rank_counts = {3, 2, 2, 2, 1};

  bool Contains(Card c) const {
    return static_cast<int>(c.color) < num_colors && c.rank >= 1 &&
           c.rank <= num_ranks;
  }
  int CountOf(Card c) const {
    return Contains(c) ? rank_counts[c.rank - 1] : 0;
  }
  int CardsPerColor() const;
  int TotalCards() const { return num_colors * CardsPerColor(); }
  void Validate() const;  // throws std::invalid_argument

  friend bool operator==(const DeckSpec&, const DeckSpec&) = default;
};

// Integer multiset over the 25 card types.
class CardMultiset {
 public:
  CardMultiset() : counts_{} {}

  int Count(Card c) const { return counts_[c.Index()]; }
  int CountAt(int index) const { return counts_[index]; }

  void Add(Card c, int n = 1) { counts_[c.Index()] += n; }
  // Throws std::invalid_argument if the multiset would go negative.
  void Remove(Card c, int n = 1);
  // Subtracts up to n copies, clamping at zero. Returns true if clamped.
  bool RemoveClamped(Card c, int n = 1);

  int TotalSize() const;
  bool Empty() const { return TotalSize() == 0; }

  const std::array<int32_t, kNumCardTypes>& counts() const { return counts_; }

  friend bool operator==(const CardMultiset&, const CardMultiset&) = default;

 private:
  std::array<int32_t, kNumCardTypes> counts_;
};

CardMultiset FullDeckMultiset(const DeckSpec& deck);

// All card types of a deck in canonical order.
std::vector<Card> DeckCardTypes(const DeckSpec& deck);

struct IllegalActionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hanabi_tom
