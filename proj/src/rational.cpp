#include "oscspec/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <stdexcept>

namespace oscspec {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw std::invalid_argument("Rational: empty input");
  text = text.substr(begin, end - begin + 1);

  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("Rational: malformed integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational: malformed integer");
    for (size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
    return BigInt(std::string(s));
  };

  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::pow2(long exponent) {
  BigInt p = BigInt(1) << static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), std::move(p), no_normalize{})
                      : Rational(std::move(p), BigInt(1), no_normalize{});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

BigInt Rational::floor_int() const {
  BigInt q = num_ / den_;
  if (num_ < 0 && num_ % den_ != 0) --q;
  return q;
}

BigInt Rational::ceil_int() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && num_ % den_ != 0) ++q;
  return q;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("Rational: negative digit count");
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  std::string out = (num_ < 0) ? "-" : "";
  out += BigInt(n / den_).str();
  if (digits == 0) return out;
  out += '.';
  BigInt rem = n % den_;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace oscspec
