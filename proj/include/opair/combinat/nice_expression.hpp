#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opair::combinat {

using Stretch = std::vector<std::size_t>;

// A face of the freehedron F_n: stretches s_0..s_k with max s_i = min s_{i+1},
// a bar index l, every stretch other than s_l of size at least two,
// min s_0 = 0 and max s_k = n. Printed as s_l..s_k, then "|", then s_0..s_{l-1};
// s_l has no opening bracket.
class NiceExpression {
 public:
  NiceExpression(std::vector<Stretch> stretches, std::size_t bar)
      : stretches_(std::move(stretches)), bar_(bar) {
    if (auto why = violation(); !why.empty())
      throw std::invalid_argument("nice expression: " + why);
  }

  // Comma-separated numerals: "2]|[0,1,2]".
  static NiceExpression parse(std::string_view s) { return parse_impl(s, false); }
  // One digit per symbol, no commas: "2]|[012]".
  static NiceExpression parse_compact(std::string_view s) { return parse_impl(s, true); }

  // The top cell "0,1,...,n]|".
  static NiceExpression top(std::size_t n) {
    Stretch s(n + 1);
    for (std::size_t i = 0; i <= n; ++i) s[i] = i;
    return NiceExpression({s}, 0);
  }

  const std::vector<Stretch>& stretches() const { return stretches_; }
  const Stretch& stretch(std::size_t i) const { return stretches_.at(i); }
  std::size_t bar() const { return bar_; }
  // k: index of the last stretch.
  std::size_t last() const { return stretches_.size() - 1; }
  std::size_t n() const { return stretches_.back().back(); }

  // L: symbols of 0..n missing from every stretch.
  std::size_t missing() const {
    std::vector<bool> seen(n() + 1, false);
    for (const auto& s : stretches_)
      for (auto x : s) seen[x] = true;
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), false));
  }
  std::size_t codimension() const { return last() + missing(); }
  std::size_t dimension() const { return n() - codimension(); }

  std::string str(bool compact = false) const {
    std::string out;
    auto put = [&](const Stretch& s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !compact) out += ',';
        out += std::to_string(s[i]);
      }
      out += ']';
    };
    put(stretches_[bar_]);
    for (std::size_t i = bar_ + 1; i < stretches_.size(); ++i) {
      out += '[';
      put(stretches_[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < bar_; ++i) {
      out += '[';
      put(stretches_[i]);
    }
    return out;
  }

  bool operator==(const NiceExpression&) const = default;
  auto operator<=>(const NiceExpression&) const = default;

 private:
  std::string violation() const {
    if (stretches_.empty()) return "no stretches";
    if (bar_ >= stretches_.size()) return "bar index out of range";
    for (std::size_t i = 0; i < stretches_.size(); ++i) {
      const auto& s = stretches_[i];
      if (s.empty()) return "empty stretch";
      if (!std::is_sorted(s.begin(), s.end()) ||
          std::adjacent_find(s.begin(), s.end()) != s.end())
        return "stretch not strictly increasing";
      if (i != bar_ && s.size() < 2) return "stretch off the bar with fewer than two symbols";
      if (i + 1 < stretches_.size() && s.back() != stretches_[i + 1].front())
        return "consecutive stretches do not share an endpoint";
    }
    if (stretches_.front().front() != 0) return "first stretch does not start at 0";
    return "";
  }

  static NiceExpression parse_impl(std::string_view s, bool compact) {
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("nice expression '" + std::string(s) + "': " + what);
    };
    std::size_t pos = 0;
    auto read_stretch = [&]() {
      Stretch out;
      std::string num;
      auto flush = [&]() {
        if (num.empty()) fail("empty symbol");
        out.push_back(std::stoul(num));
        num.clear();
      };
      while (pos < s.size() && s[pos] != ']') {
        const char c = s[pos++];
        if (c >= '0' && c <= '9') {
          num += c;
          if (compact) flush();
        } else if (c == ',' && !compact) {
          flush();
        } else {
          fail(std::string("unexpected character '") + c + "'");
        }
      }
      if (pos >= s.size()) fail("missing ']'");
      if (!compact) flush();
      ++pos;
      if (out.empty()) fail("empty stretch");
      return out;
    };
    std::vector<Stretch> left, right;
    left.push_back(read_stretch());
    while (pos < s.size() && s[pos] == '[') {
      ++pos;
      left.push_back(read_stretch());
    }
    if (pos >= s.size() || s[pos] != '|') fail("missing '|'");
    ++pos;
    while (pos < s.size()) {
      if (s[pos] != '[') fail("expected '['");
      ++pos;
      right.push_back(read_stretch());
    }
    const std::size_t bar = right.size();
    right.insert(right.end(), left.begin(), left.end());
    return NiceExpression(std::move(right), bar);
  }

  std::vector<Stretch> stretches_;
  std::size_t bar_ = 0;
};

namespace detail {

inline Stretch up_to(const Stretch& s, std::size_t x) {
  Stretch out;
  for (auto v : s)
    if (v <= x) out.push_back(v);
  return out;
}

inline Stretch from(const Stretch& s, std::size_t x) {
  Stretch out;
  for (auto v : s)
    if (v >= x) out.push_back(v);
  return out;
}

}  // namespace detail

// All codimension-one subfaces: Drop, Inner break, Right outer break, Left outer break.
inline std::vector<NiceExpression> face_transformations(const NiceExpression& e) {
  std::vector<NiceExpression> out;
  const auto& ss = e.stretches();
  const std::size_t l = e.bar();
  for (std::size_t j = 0; j < ss.size(); ++j) {
    const auto& s = ss[j];
    for (std::size_t p = 1; p + 1 < s.size(); ++p) {
      const std::size_t x = s[p];
      auto dropped = ss;
      dropped[j].erase(dropped[j].begin() + static_cast<long>(p));
      out.emplace_back(std::move(dropped), l);
      if (j == l) continue;
      auto broken = ss;
      broken[j] = detail::from(s, x);
      broken.insert(broken.begin() + static_cast<long>(j), detail::up_to(s, x));
      out.emplace_back(std::move(broken), j < l ? l + 1 : l);
    }
  }
  const auto& bar = ss[l];
  for (std::size_t p = 0; p < bar.size(); ++p) {
    const std::size_t x = bar[p];
    if (p + 1 < bar.size()) {
      // Right outer break: s_l keeps the part up to x, the rest becomes s_{l+1}.
      auto v = ss;
      v[l] = detail::up_to(bar, x);
      v.insert(v.begin() + static_cast<long>(l) + 1, detail::from(bar, x));
      out.emplace_back(std::move(v), l);
    }
    if (p > 0) {
      // Left outer break: the part up to x moves in front, s_l keeps the rest.
      auto v = ss;
      v[l] = detail::from(bar, x);
      v.insert(v.begin() + static_cast<long>(l), detail::up_to(bar, x));
      out.emplace_back(std::move(v), l + 1);
    }
  }
  return out;
}

// Every nice n-expression, built from endpoint sequences
// 0 = e_0 <= e_1 <= ... <= e_{k+1} = n (strict except around the bar) and a
// free choice of interior symbols per stretch.
inline std::vector<NiceExpression> enumerate_nice_expressions(std::size_t n) {
  std::vector<NiceExpression> out;
  std::vector<std::size_t> ends{0};
  std::vector<Stretch> stretches;

  auto emit_interiors = [&](auto&& self, std::size_t i, std::size_t bar) -> void {
    if (i == ends.size() - 1) {
      out.emplace_back(stretches, bar);
      return;
    }
    const std::size_t lo = ends[i], hi = ends[i + 1];
    const std::size_t inner = hi > lo ? hi - lo - 1 : 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner); ++mask) {
      Stretch s{lo};
      for (std::size_t b = 0; b < inner; ++b)
        if (mask >> b & 1) s.push_back(lo + 1 + b);
      if (hi != lo) s.push_back(hi);
      stretches.push_back(std::move(s));
      self(self, i + 1, bar);
      stretches.pop_back();
    }
  };

  // `bar` is the index of the bar stretch or npos while still unplaced.
  auto walk = [&](auto&& self, std::size_t bar) -> void {
    const std::size_t here = ends.back();
    const std::size_t idx = ends.size() - 1;  // index of the next stretch
    if (here == n && bar != std::string::npos) emit_interiors(emit_interiors, 0, bar);
    for (std::size_t next = here; next <= n; ++next) {
      const bool is_bar = next == here;
      if (is_bar && bar != std::string::npos) continue;
      if (!is_bar) {
        // Non-bar stretch, or bar stretch with at least two symbols.
        ends.push_back(next);
        self(self, bar);
        if (bar == std::string::npos) self(self, idx);
        ends.pop_back();
      } else {
        ends.push_back(next);
        self(self, idx);
        ends.pop_back();
      }
    }
  };
  walk(walk, std::string::npos);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opair::combinat
