#pragma once

#include "oscspec/generators.hpp"
#include "oscspec/rational.hpp"
#include "oscspec/sign_word.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace oscspec {

/// Finitely supported coefficient vector; entry i (0-based) multiplies the
/// level-(i+1) generator. Trailing zeros are legal and meaningful for the
/// sign word.
class CoeffVector {
public:
  CoeffVector() = default;
  explicit CoeffVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  /// One rational per line; blank lines and '#' comments ignored.
  static CoeffVector parse(std::istream& in);
  static CoeffVector parse_text(std::string_view text);

  std::size_t support_bound() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& coeff(std::size_t level) const;  // 1-based level

  Rational l1_norm() const;
  /// Signs of the entries with sign(0) = +1; length == support_bound().
  SignWord signs() const;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

private:
  std::vector<Rational> entries_;
};

/// Exact synthesis sum(a_m * phi_m) over the generator set.
/// Requires support_bound() <= max_level.
PiecewiseLinear synthesize(const CoeffVector& a, const GeneratorSet& gens);

/// Midpoint of the block addressed by signs(a); every generator of level
/// <= support_bound() is constant there with value signs(a)[m]. For the
/// empty vector returns 1/2.
Rational witness_point(const CoeffVector& a, const BlockTree& tree);

struct IsometryCheck {
  Rational l1;
  Rational sup;
  Rational witness;
  Rational value_at_witness;
  bool equal = false;  // sup == l1 and the witness attains it
};

IsometryCheck check_isometry(const CoeffVector& a, const GeneratorSet& gens);

}  // namespace oscspec
