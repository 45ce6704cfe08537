#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfree {

// A generator label 1..9, possibly inverted (written i' in text).
struct Letter {
  std::uint8_t gen = 0;
  bool inverted = false;

  constexpr Letter inverse() const { return {gen, !inverted}; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  bool has_inverses() const;
  std::uint8_t max_gen() const;

  // Subword [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend Word operator*(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// word := ( digit "'"? )*  with digits 1..9.
Word parse_word(std::string_view text);

// Canonical text: digits with primes, empty string for the identity.
std::string to_string(const Word& w);

// Reverse and toggle every inversion flag.
Word invert_word(const Word& w);

// Cancel adjacent s s' and s' s pairs until none remain.
Word free_reduce(const Word& w);

}  // namespace hfree
