#include "oscspec/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace oscspec {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) throw std::invalid_argument("PiecewiseLinear: xs/ys size mismatch");
  if (xs_.size() < 2) throw std::invalid_argument("PiecewiseLinear: need at least two breakpoints");
  if (!xs_.front().is_zero() || xs_.back() != Rational(1))
    throw std::invalid_argument("PiecewiseLinear: domain must span [0,1]");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (!(xs_[i] < xs_[i + 1]))
      throw std::invalid_argument("PiecewiseLinear: breakpoints must be strictly increasing");
}

PiecewiseLinear PiecewiseLinear::constant(const Rational& value) {
  return PiecewiseLinear({Rational(0), Rational(1)}, {value, value});
}

namespace {

Rational interpolate(const Rational& x0, const Rational& y0, const Rational& x1,
                     const Rational& y1, const Rational& t) {
  if (y0 == y1) return y0;
  return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
}

}  // namespace

Rational PiecewiseLinear::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw std::domain_error("PiecewiseLinear: point " + t.str() + " outside [0,1]");
  auto it = std::lower_bound(xs_.begin(), xs_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (it != xs_.end() && *it == t) return ys_[i];
  return interpolate(xs_[i - 1], ys_[i - 1], xs_[i], ys_[i], t);
}

std::vector<Rational> PiecewiseLinear::evaluate_sorted(std::span<const Rational> ts) const {
  std::vector<Rational> out;
  out.reserve(ts.size());
  std::size_t seg = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const Rational& t = ts[k];
    if (k > 0 && t < ts[k - 1])
      throw std::invalid_argument("evaluate_sorted: points must be non-decreasing");
    if (t < Rational(0) || t > Rational(1))
      throw std::domain_error("evaluate_sorted: point outside [0,1]");
    while (seg + 2 < xs_.size() && xs_[seg + 1] <= t) ++seg;
    if (t == xs_[seg])
      out.push_back(ys_[seg]);
    else if (t == xs_[seg + 1])
      out.push_back(ys_[seg + 1]);
    else
      out.push_back(interpolate(xs_[seg], ys_[seg], xs_[seg + 1], ys_[seg + 1], t));
  }
  return out;
}

Rational PiecewiseLinear::sup_norm() const {
  Rational best(0);
  for (const Rational& y : ys_) {
    Rational a = y.abs();
    if (a > best) best = a;
  }
  return best;
}

Rational PiecewiseLinear::oscillation(const Interval& window) const {
  Rational a = oscspec::max(window.lo(), Rational(0));
  Rational b = oscspec::min(window.hi(), Rational(1));
  if (a > b) throw std::domain_error("oscillation: window " + window.str() + " misses [0,1]");
  Rational lo = evaluate(a);
  Rational hi = lo;
  Rational fb = evaluate(b);
  if (fb < lo) lo = fb;
  if (fb > hi) hi = fb;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), a);
  for (; it != xs_.end() && *it < b; ++it) {
    const Rational& y = ys_[static_cast<std::size_t>(it - xs_.begin())];
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  }
  return hi - lo;
}

std::vector<Interval> PiecewiseLinear::variation_support() const {
  std::vector<Interval> out;
  std::size_t i = 0;
  while (i + 1 < xs_.size()) {
    if (ys_[i] == ys_[i + 1]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < xs_.size() && ys_[j] != ys_[j + 1]) ++j;
    out.push_back(Interval::closed(xs_[i], xs_[j]));
    i = j;
  }
  return out;
}

PiecewiseLinear linear_combine(std::span<const Rational> coeffs,
                               std::span<const PiecewiseLinear> fs) {
  if (coeffs.size() != fs.size())
    throw std::invalid_argument("linear_combine: coefficient/function count mismatch");

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) active.push_back(i);
  if (active.empty()) return PiecewiseLinear::constant(Rational(0));

  // k-way merge of the active breakpoint grids.
  std::vector<Rational> grid;
  {
    std::vector<std::size_t> pos(active.size(), 0);
    for (;;) {
      const Rational* next = nullptr;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const auto& xs = fs[active[k]].xs();
        if (pos[k] < xs.size() && (!next || xs[pos[k]] < *next)) next = &xs[pos[k]];
      }
      if (!next) break;
      grid.push_back(*next);
      for (std::size_t k = 0; k < active.size(); ++k) {
        const auto& xs = fs[active[k]].xs();
        if (pos[k] < xs.size() && xs[pos[k]] == grid.back()) ++pos[k];
      }
    }
  }

  std::vector<Rational> values(grid.size(), Rational(0));
  for (std::size_t k : active) {
    std::vector<Rational> part = fs[k].evaluate_sorted(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] += coeffs[k] * part[i];
  }
  return PiecewiseLinear(std::move(grid), std::move(values));
}

}  // namespace oscspec
