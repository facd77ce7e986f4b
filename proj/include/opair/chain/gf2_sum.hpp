#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <type_traits>
#include <utility>

namespace opair::chain {

// Formal sum of basis elements with coefficients in GF(2). Adding an element
// that is already present cancels it.
template <class Basis>
class Gf2Sum {
 public:
  using value_type = Basis;
  using const_iterator = typename std::set<Basis>::const_iterator;

  Gf2Sum() = default;
  Gf2Sum(std::initializer_list<Basis> terms) {
    for (const auto& t : terms) toggle(t);
  }
  explicit Gf2Sum(const Basis& b) { terms_.insert(b); }

  void toggle(const Basis& b) {
    auto [it, inserted] = terms_.insert(b);
    if (!inserted) terms_.erase(it);
  }

  Gf2Sum& operator+=(const Gf2Sum& other) {
    for (const auto& t : other.terms_) toggle(t);
    return *this;
  }
  friend Gf2Sum operator+(Gf2Sum lhs, const Gf2Sum& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Basis& b) const { return terms_.count(b) != 0; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  bool operator==(const Gf2Sum&) const = default;

  // Extends `f : Basis -> Gf2Sum<U>` linearly.
  template <class F>
  auto map(F&& f) const {
    using Out = std::invoke_result_t<F&, const Basis&>;
    Out out;
    for (const auto& t : terms_) out += f(t);
    return out;
  }

 private:
  std::set<Basis> terms_;
};

}  // namespace opair::chain
