#include "hanabi_tom/types.h"

#include <numeric>

namespace hanabi_tom {

char ColorChar(Color c) { return kColorChars[static_cast<int>(c)]; }

Color ColorFromChar(char ch) {
  for (int i = 0; i < kMaxColors; ++i) {
    if (kColorChars[i] == ch) return static_cast<Color>(i);
  }
  throw std::invalid_argument(std::string("unknown color character: ") + ch);
}

Card Card::FromIndex(int index) {
  if (index < 0 || index >= kNumCardTypes) {
    throw std::invalid_argument("card index out of range: " +
                                std::to_string(index));
  }
  return Card{static_cast<Color>(index / kMaxRanks),
              static_cast<int8_t>(index % kMaxRanks + 1)};
}

std::string Card::ToString() const {
  return std::string{ColorChar(color), static_cast<char>('0' + rank)};
}

Card Card::FromString(const std::string& s) {
  if (s.size() != 2 || s[1] < '1' || s[1] > '5') {
    throw std::invalid_argument("malformed card string: " + s);
  }
  return Card{ColorFromChar(s[0]), static_cast<int8_t>(s[1] - '0')};
}

std::string SlotKnowledge::ToString() const {
  std::string s;
  s += hinted_color ? ColorChar(*hinted_color) : '?';
  s += hinted_rank ? static_cast<char>('0' + *hinted_rank) : '?';
  return s;
}

int DeckSpec::CardsPerColor() const {
  return std::accumulate(rank_counts.begin(), rank_counts.end(), 0);
}

void DeckSpec::Validate() const {
  if (num_colors < 1 || num_colors > kMaxColors) {
    throw std::invalid_argument("num_colors must be in 1..5");
  }
  if (num_ranks < 1 || num_ranks > kMaxRanks) {
    throw std::invalid_argument("num_ranks must be in 1..5");
  }
  if (static_cast<int>(rank_counts.size()) != num_ranks) {
    throw std::invalid_argument("rank_counts size must equal num_ranks");
  }
  for (int n : rank_counts) {
    if (n < 1) throw std::invalid_argument("rank counts must be positive");
  }
}

void CardMultiset::Remove(Card c, int n) {
  int32_t& slot = counts_[c.Index()];
  if (slot < n) {
    throw std::invalid_argument("multiset count would go negative for " +
                                c.ToString());
  }
  slot -= n;
}

bool CardMultiset::RemoveClamped(Card c, int n) {
  int32_t& slot = counts_[c.Index()];
  bool clamped = slot < n;
  slot = clamped ? 0 : slot - n;
  return clamped;
}

int CardMultiset::TotalSize() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

CardMultiset FullDeckMultiset(const DeckSpec& deck) {
  CardMultiset m;
  for (int c = 0; c < deck.num_colors; ++c) {
    for (int r = 1; r <= deck.num_ranks; ++r) {
      m.Add(Card{static_cast<Color>(c), static_cast<int8_t>(r)},
            deck.rank_counts[r - 1]);
    }
  }
  return m;
}

std::vector<Card> DeckCardTypes(const DeckSpec& deck) {
  std::vector<Card> cards;
  cards.reserve(deck.num_colors * deck.num_ranks);
  for (int c = 0; c < deck.num_colors; ++c) {
    for (int r = 1; r <= deck.num_ranks; ++r) {
      cards.push_back(Card{static_cast<Color>(c), static_cast<int8_t>(r)});
    }
  }
  return cards;
}

}  // namespace hanabi_tom
