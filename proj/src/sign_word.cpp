#include "oscspec/sign_word.hpp"

#include <stdexcept>

namespace oscspec {

SignWord::SignWord(std::vector<int> signs) {
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignWord: entries must be +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

SignWord SignWord::from_string(std::string_view s) {
  SignWord w;
  w.signs_.reserve(s.size());
  for (char ch : s) {
    if (ch == '-')
      w.signs_.push_back(-1);
    else if (ch == '+')
      w.signs_.push_back(1);
    else
      throw std::invalid_argument(std::string("SignWord: bad character '") + ch + "'");
  }
  return w;
}

SignWord SignWord::from_index(std::size_t length, std::uint64_t index) {
  if (length > 63) throw std::invalid_argument("SignWord: length too large");
  if (index >= (std::uint64_t{1} << length))
    throw std::invalid_argument("SignWord: index out of range");
  SignWord w;
  w.signs_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    bool bit = (index >> (length - 1 - i)) & 1;
    w.signs_[i] = bit ? 1 : -1;
  }
  return w;
}

SignWord SignWord::prefix(std::size_t k) const {
  if (k > size()) throw std::out_of_range("SignWord: prefix longer than word");
  SignWord w;
  w.signs_.assign(signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(k));
  return w;
}

SignWord SignWord::extended(int sign) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("SignWord: sign must be +1 or -1");
  SignWord w = *this;
  w.signs_.push_back(static_cast<std::int8_t>(sign));
  return w;
}

std::uint64_t SignWord::index() const {
  std::uint64_t idx = 0;
  for (std::int8_t s : signs_) idx = (idx << 1) | (s > 0 ? 1u : 0u);
  return idx;
}

std::string SignWord::str() const {
  std::string out;
  out.reserve(size());
  for (std::int8_t s : signs_) out += (s > 0 ? '+' : '-');
  return out;
}

std::strong_ordering operator<=>(const SignWord& a, const SignWord& b) {
  if (auto c = a.signs_.size() <=> b.signs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.signs_.size(); ++i)
    if (auto c = a.signs_[i] <=> b.signs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace oscspec
