#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <vector>

#include "roots/reduction_system.hpp"

// Admissibility of sphere-graph intersection profiles for orbifold-style
// colorings: colors are integers >= 2, an intersection carries at most three
// of them (as a multiset). No single color is allowed, pairs must agree, and
// triples must match (2,2,n) with n >= 2 or (2,3,k) with 3 <= k <= 5.

namespace roots {

class InvalidColorError : public Error {
 public:
  explicit InvalidColorError(int value)
      : Error("color " + std::to_string(value) + " is not an integer >= 2") {}
};

class ProfileTooLargeError : public Error {
 public:
  explicit ProfileTooLargeError(std::size_t size)
      : Error("intersection profile has " + std::to_string(size) +
              " colors; at most three are allowed") {}
};

struct Color {
  explicit Color(int v) : value(v) {
    if (v < 2) throw InvalidColorError(v);
  }
  int value;
  friend auto operator<=>(Color, Color) = default;
};

class IntersectionProfile {
 public:
  IntersectionProfile() = default;
  IntersectionProfile(std::initializer_list<int> colors)
      : IntersectionProfile(std::vector<int>(colors)) {}
  explicit IntersectionProfile(const std::vector<int>& colors) {
    for (int c : colors) colors_.push_back(Color(c));
    std::sort(colors_.begin(), colors_.end());
  }

  std::size_t size() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  std::vector<Color> colors_;  // sorted
};

inline bool pair_admissible(Color a, Color b) { return a == b; }

inline bool triple_admissible(Color a, Color b, Color c) {
  std::array<int, 3> t{a.value, b.value, c.value};
  std::sort(t.begin(), t.end());
  if (t[0] == 2 && t[1] == 2) return true;           // (2,2,n), n >= 2
  return t[0] == 2 && t[1] == 3 && t[2] <= 5;        // (2,3,k), 3 <= k <= 5
}

inline bool profile_admissible(const IntersectionProfile& p) {
  const auto& c = p.colors();
  switch (c.size()) {
    case 0:
      return true;  // clean intersection
    case 1:
      return false;  // no single colors
    case 2:
      return pair_admissible(c[0], c[1]);
    case 3:
      return triple_admissible(c[0], c[1], c[2]);
    default:
      throw ProfileTooLargeError(c.size());
  }
}

}  // namespace roots
