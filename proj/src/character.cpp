#include "lps/character.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lps/errors.hpp"

namespace lps {

TurnCoord TurnCoord::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("turn coordinate: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;  // reduce into [0, den)
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  TurnCoord tc;
  tc.rational_ = true;
  tc.num_ = num / g;
  tc.den_ = den / g;
  return tc;
}

TurnCoord TurnCoord::decimal(double value) {
  if (!std::isfinite(value)) throw ParseError("turn coordinate: non-finite value");
  value -= std::floor(value);  // fold into [0, 1)
  TurnCoord tc;
  tc.rational_ = false;
  tc.decimal_ = value;
  return tc;
}

TurnCoord TurnCoord::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t num = 0, den = 0;
    const auto* nb = text.data();
    const auto* ne = text.data() + slash;
    auto r1 = std::from_chars(nb, ne, num);
    const auto* db = text.data() + slash + 1;
    const auto* de = text.data() + text.size();
    auto r2 = std::from_chars(db, de, den);
    if (r1.ec != std::errc{} || r1.ptr != ne || r2.ec != std::errc{} || r2.ptr != de) {
      throw ParseError("turn coordinate: cannot parse rational '" + std::string(text) + "'");
    }
    return rational(num, den);
  }
  // Integer literals are exact turns (0, 1, -2 all mean the trivial
  // coordinate); anything with a decimal point or exponent is a double.
  if (text.find_first_of(".eE") == std::string_view::npos) {
    std::int64_t whole = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), whole);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
      throw ParseError("turn coordinate: cannot parse '" + std::string(text) + "'");
    }
    return rational(whole, 1);
  }
  double v = 0.0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
    throw ParseError("turn coordinate: cannot parse '" + std::string(text) + "'");
  }
  return decimal(v);
}

double TurnCoord::value() const {
  if (rational_) return static_cast<double>(num_) / static_cast<double>(den_);
  return decimal_;
}

double TurnCoord::circular_distance_to_zero() const {
  const double x = value();
  return std::min(x, 1.0 - x);
}

std::string TurnCoord::str() const {
  if (rational_) {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  std::ostringstream os;
  os.precision(17);
  os << decimal_;
  return os.str();
}

Character Character::trivial(int num_vars) {
  return Character(std::vector<TurnCoord>(static_cast<std::size_t>(num_vars)));
}

Character Character::parse(std::string_view text) {
  std::vector<TurnCoord> turns;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    // trim spaces
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty()) throw ParseError("character: empty coordinate in '" + std::string(text) + "'");
    turns.push_back(TurnCoord::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Character(std::move(turns));
}

bool Character::is_torsion() const {
  for (const auto& tc : turns_) {
    if (!tc.is_rational()) return false;
  }
  return true;
}

bool Character::is_trivial() const {
  for (const auto& tc : turns_) {
    if (tc.is_rational() ? tc.num() != 0 : tc.value() != 0.0) return false;
  }
  return true;
}

double Character::distance_to_trivial() const {
  double d = 0.0;
  for (const auto& tc : turns_) d = std::max(d, tc.circular_distance_to_zero());
  return d;
}

std::string Character::str() const {
  std::string out;
  for (std::size_t j = 0; j < turns_.size(); ++j) {
    if (j > 0) out += ",";
    out += turns_[j].str();
  }
  return out;
}

}  // namespace lps
