#include "word.hpp"

#include <algorithm>

namespace hfree {

bool Word::has_inverses() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l.inverted; });
}

std::uint8_t Word::max_gen() const {
  std::uint8_t m = 0;
  for (Letter l : letters_) m = std::max(m, l.gen);
  return m;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '1' && c <= '9') {
      out.push_back({static_cast<std::uint8_t>(c - '0'), false});
    } else if (c == '\'') {
      if (out.empty() || out.back().inverted) {
        throw SyntaxError("misplaced prime", i);
      }
      out.back().inverted = true;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(2 * w.size());
  for (Letter l : w) {
    s.push_back(static_cast<char>('0' + l.gen));
    if (l.inverted) s.push_back('\'');
  }
  return s;
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

}  // namespace hfree
