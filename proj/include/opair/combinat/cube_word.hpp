#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opair::combinat {

// A face of the cube I^m as a word of length m over {a, b, c}:
// a = {0}, b = [0,1], c = {1}. The empty word (the point I^0) prints as "-".
class CubeWord {
 public:
  CubeWord() = default;
  explicit CubeWord(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
      if (ch != 'a' && ch != 'b' && ch != 'c')
        throw std::invalid_argument("cube word '" + letters_ + "': letters must be a, b or c");
  }
  static CubeWord parse(std::string_view s) {
    if (s == "-") return {};
    return CubeWord(std::string(s));
  }

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::size_t dimension() const {
    std::size_t d = 0;
    for (char ch : letters_) d += ch == 'b';
    return d;
  }
  std::string str() const { return letters_.empty() ? "-" : letters_; }

  bool operator==(const CubeWord&) const = default;
  auto operator<=>(const CubeWord&) const = default;

 private:
  std::string letters_;
};

inline std::vector<CubeWord> enumerate_cube_words(std::size_t m) {
  std::vector<CubeWord> out{CubeWord()};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<CubeWord> next;
    for (const auto& w : out)
      for (char ch : {'a', 'b', 'c'}) next.emplace_back(w.letters() + ch);
    out = std::move(next);
  }
  return out;
}

// Each b replaced by a and by c.
inline std::vector<CubeWord> cube_boundary(const CubeWord& w) {
  std::vector<CubeWord> out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w.letters()[i] != 'b') continue;
    for (char ch : {'a', 'c'}) {
      std::string s = w.letters();
      s[i] = ch;
      out.emplace_back(std::move(s));
    }
  }
  return out;
}

}  // namespace opair::combinat
