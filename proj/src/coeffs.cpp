#include "oscspec/coeffs.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace oscspec {

CoeffVector CoeffVector::parse(std::istream& in) {
  std::vector<Rational> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    try {
      entries.push_back(Rational::parse(line.substr(begin, end - begin + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("coefficient line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return CoeffVector(std::move(entries));
}

CoeffVector CoeffVector::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

const Rational& CoeffVector::coeff(std::size_t level) const {
  if (level < 1 || level > entries_.size())
    throw std::out_of_range("CoeffVector: level out of range");
  return entries_[level - 1];
}

Rational CoeffVector::l1_norm() const {
  Rational sum(0);
  for (const Rational& a : entries_) sum += a.abs();
  return sum;
}

SignWord CoeffVector::signs() const {
  std::vector<int> s;
  s.reserve(entries_.size());
  for (const Rational& a : entries_) s.push_back(a.sign() < 0 ? -1 : 1);
  return SignWord(std::move(s));
}

PiecewiseLinear synthesize(const CoeffVector& a, const GeneratorSet& gens) {
  if (a.support_bound() > static_cast<std::size_t>(gens.max_level()))
    throw std::invalid_argument("synthesize: support exceeds built levels");
  std::span<const PiecewiseLinear> fs(gens.functions().data(), a.support_bound());
  return linear_combine(a.entries(), fs);
}

Rational witness_point(const CoeffVector& a, const BlockTree& tree) {
  if (a.support_bound() == 0) return Rational(1, 2);
  if (a.support_bound() > static_cast<std::size_t>(tree.max_level()))
    throw std::invalid_argument("witness_point: support exceeds built levels");
  return tree.block(a.signs()).midpoint();
}

IsometryCheck check_isometry(const CoeffVector& a, const GeneratorSet& gens) {
  IsometryCheck out;
  out.l1 = a.l1_norm();
  PiecewiseLinear f = synthesize(a, gens);
  out.sup = f.sup_norm();
  out.witness = witness_point(a, gens.tree());
  out.value_at_witness = f.evaluate(out.witness);
  out.equal = (out.sup == out.l1) && (out.value_at_witness == out.l1);
  return out;
}

}  // namespace oscspec
