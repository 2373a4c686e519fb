#include "simonk/word.hpp"

namespace simonk {

Alphabet::Alphabet(std::string_view letters) {
  index_.fill(-1);
  letters_.reserve(letters.size());
  for (char c : letters) {
    const auto b = static_cast<unsigned char>(c);
    if (index_[b] >= 0) {
      throw std::invalid_argument("alphabet letters must be pairwise distinct");
    }
    index_[b] = static_cast<std::int16_t>(letters_.size());
    letters_.push_back(c);
  }
}

Alphabet Alphabet::occurring_in(std::string_view text) {
  std::array<bool, 256> seen{};
  for (char c : text) seen[static_cast<unsigned char>(c)] = true;
  std::string letters;
  for (int b = 0; b < 256; ++b) {
    if (seen[b]) letters.push_back(static_cast<char>(b));
  }
  return Alphabet(letters);
}

Word::Word(std::string symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
  for (char c : symbols_) {
    if (!alphabet_.contains(c)) {
      throw std::invalid_argument("word contains a letter outside its alphabet");
    }
  }
}

char Word::at(Position i) const {
  if (i < 1 || i > symbols_.size()) {
    throw std::out_of_range("position out of range");
  }
  return symbols_[i - 1];
}

bool is_subword(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument("is_subword: words over different alphabets");
  }
  const std::string& a = u.symbols();
  const std::string& b = v.symbols();
  std::size_t i = 0;
  for (std::size_t j = 0; i < a.size() && j < b.size(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.size();
}

bool lex_less(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw std::invalid_argument("lex_less: words over different alphabets");
  }
  if (u.size() != v.size()) {
    throw std::invalid_argument("lex_less compares equal-length words only");
  }
  const Alphabet& alpha = u.alphabet();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = alpha.index_of(u.symbols()[i]);
    const int b = alpha.index_of(v.symbols()[i]);
    if (a != b) return a < b;
  }
  return false;
}

Word reversed(const Word& u) {
  std::string s(u.symbols().rbegin(), u.symbols().rend());
  return Word(std::move(s), u.alphabet());
}

}  // namespace simonk
