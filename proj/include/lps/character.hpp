#ifndef LPS_CHARACTER_HPP
#define LPS_CHARACTER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lps {

// One coordinate of a character of the torus, measured in turns (fractions
// of a full rotation). A coordinate is either an exact rational p/q in
// lowest terms with 0 <= p/q < 1 (a torsion coordinate) or a plain double
// in [0,1) (a non-torsion probe).
class TurnCoord {
 public:
  TurnCoord() = default;  // rational 0

  static TurnCoord rational(std::int64_t num, std::int64_t den);
  static TurnCoord decimal(double value);

  // Accepts "p/q" (rational) or a decimal literal such as "0.25".
  static TurnCoord parse(std::string_view text);

  bool is_rational() const { return rational_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Numeric value in [0,1) regardless of representation.
  double value() const;

  // Circular distance to 0 in turns: min(x, 1-x).
  double circular_distance_to_zero() const;

  std::string str() const;

  bool operator==(const TurnCoord& other) const = default;

 private:
  bool rational_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double decimal_ = 0.0;
};

// A point of Hom(H, S^1): one turn coordinate per Laurent variable.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<TurnCoord> turns) : turns_(std::move(turns)) {}

  // The trivial character phi_0 (all coordinates zero).
  static Character trivial(int num_vars);

  // Parses a comma-separated coordinate list, e.g. "1/3,0" or "0.618".
  static Character parse(std::string_view text);

  int num_vars() const { return static_cast<int>(turns_.size()); }
  const TurnCoord& coord(int j) const { return turns_[static_cast<std::size_t>(j)]; }
  const std::vector<TurnCoord>& turns() const { return turns_; }

  // Torsion iff every coordinate is rational.
  bool is_torsion() const;
  bool is_trivial() const;

  // Sup over coordinates of the circular distance to 0, in turns.
  double distance_to_trivial() const;

  std::string str() const;

  bool operator==(const Character& other) const = default;

 private:
  std::vector<TurnCoord> turns_;
};

}  // namespace lps

#endif  // LPS_CHARACTER_HPP
