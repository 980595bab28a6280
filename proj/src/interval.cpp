#include "oscspec/interval.hpp"

#include <stdexcept>

namespace oscspec {

Interval::Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo_ > hi_)
    throw std::invalid_argument("Interval: lo > hi (" + lo_.str() + " > " + hi_.str() + ")");
  if (lo_ == hi_ && !(lo_closed_ && hi_closed_))
    throw std::invalid_argument("Interval: degenerate interval must be closed");
}

bool Interval::contains(const Rational& t) const {
  if (t < lo_ || t > hi_) return false;
  if (t == lo_ && !lo_closed_) return false;
  if (t == hi_ && !hi_closed_) return false;
  return true;
}

bool Interval::contains_interval(const Interval& other) const {
  bool left_ok = lo_ < other.lo_ || (lo_ == other.lo_ && (lo_closed_ || !other.lo_closed_));
  bool right_ok = other.hi_ < hi_ || (other.hi_ == hi_ && (hi_closed_ || !other.hi_closed_));
  return left_ok && right_ok;
}

bool Interval::strictly_inside(const Interval& outer) const {
  return outer.lo_ < lo_ && hi_ < outer.hi_;
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  Rational lo = lo_;
  bool lc = lo_closed_;
  if (other.lo_ > lo) {
    lo = other.lo_;
    lc = other.lo_closed_;
  } else if (other.lo_ == lo) {
    lc = lc && other.lo_closed_;
  }
  Rational hi = hi_;
  bool hc = hi_closed_;
  if (other.hi_ < hi) {
    hi = other.hi_;
    hc = other.hi_closed_;
  } else if (other.hi_ == hi) {
    hc = hc && other.hi_closed_;
  }
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lc && hc)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi), lc, hc);
}

std::string Interval::str() const {
  return std::string(lo_closed_ ? "[" : "(") + lo_.str() + ", " + hi_.str() +
         (hi_closed_ ? "]" : ")");
}

}  // namespace oscspec
