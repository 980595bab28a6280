#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace oscspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always held in canonical form:
/// denominator > 0, gcd(|numerator|, denominator) == 1, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p/q" or a bare integer "p"; throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rational parse(std::string_view text);

  // 2^exponent for any sign of exponent.
  static Rational pow2(long exponent);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }
  Rational reciprocal() const;
  BigInt floor_int() const;
  BigInt ceil_int() const;

  /// Canonical serialization, always "p/q" (e.g. "0/1", "-1/2").
  std::string str() const;
  /// Decimal rendering truncated to `digits` fractional digits.
  std::string decimal(int digits) const;

  Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct no_normalize {};
  Rational(BigInt num, BigInt den, no_normalize)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace oscspec
