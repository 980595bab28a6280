#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oscspec {

/// Finite word over {-1, +1} addressing a block of the nested tree;
/// '-' sorts before '+', so lexicographic order matches left-to-right
/// block order at every level.
class SignWord {
public:
  SignWord() = default;
  explicit SignWord(std::vector<int> signs);

  static SignWord from_string(std::string_view s);  // e.g. "-+-"
  /// Word of the given length whose lexicographic rank at that level is
  /// `index` (0-based, '-' = 0 bit, leftmost letter is the high bit).
  static SignWord from_index(std::size_t length, std::uint64_t index);

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  int sign(std::size_t i) const { return signs_.at(i); }

  SignWord prefix(std::size_t k) const;
  SignWord extended(int sign) const;
  std::uint64_t index() const;

  std::string str() const;

  friend bool operator==(const SignWord& a, const SignWord& b) = default;
  /// Orders by length first, then lexicographically.
  friend std::strong_ordering operator<=>(const SignWord& a, const SignWord& b);

private:
  std::vector<std::int8_t> signs_;
};

}  // namespace oscspec
