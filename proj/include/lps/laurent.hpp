#ifndef LPS_LAURENT_HPP
#define LPS_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lps/character.hpp"

namespace lps {

using Coeff = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::int32_t>;

// Terms keyed by exponent vector; std::map's lexicographic vector order is
// the canonical term order, so iteration and serialization are deterministic.
using TermMap = std::map<Exponents, Coeff>;

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Invariants: no stored coefficient is zero; every exponent vector has
// length num_vars(). Immutable after construction apart from compound
// assignment operators, which replace the value.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial in zero variables
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}
  LaurentPoly(int num_vars, TermMap terms);

  static LaurentPoly constant(int num_vars, Coeff c);
  static LaurentPoly monomial(int num_vars, Exponents exps, Coeff c);
  static LaurentPoly variable(int num_vars, int var, std::int32_t power = 1);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const = default;

  // Coefficient-wise absolute value |p|.
  LaurentPoly abs_coeffs() const;

  // Exact sum of all coefficients (the value of p at the trivial character).
  Coeff coefficient_sum() const;

  std::string str(std::span<const std::string> names = {}) const;

 private:
  int num_vars_ = 0;
  TermMap terms_;
};

// The invertible elements of the Laurent ring: +-t^a.
struct UnitMonomial {
  int sign = 1;  // +1 or -1
  Exponents exponents;

  LaurentPoly to_poly() const;
  bool operator==(const UnitMonomial& other) const = default;
};

struct UnitNormalForm {
  UnitMonomial unit;
  LaurentPoly normal;  // min exponent 0 in every variable, positive leading coefficient
};

// Difference between highest and lowest exponent of `var` over the terms.
// Throws MathError for the zero polynomial or a var index out of range.
int spread(const LaurentPoly& p, int var);

// Substitutes t_j -> exp(2*pi*i*turn_j). Rational turns are accumulated and
// reduced exactly before any trigonometric call; phases 0, 1/4, 1/2, 3/4
// produce exact 1, i, -1, -i.
std::complex<double> eval_character(const LaurentPoly& p, const Character& chi);

// Substitutes t_j -> exp(xi_j) on the positive-real locus. Throws
// NumericError if the value overflows the double range.
double eval_positive(const LaurentPoly& p, std::span<const double> xi);

// Factors p = unit * normal with normal's minimal exponent 0 in every
// variable and positive leading coefficient in canonical term order.
// Two polynomials are equal up to a unit iff their normal parts are equal.
UnitNormalForm unit_normal_form(const LaurentPoly& p);

// True iff p is nonzero and every stored coefficient is positive.
bool is_positive(const LaurentPoly& p);

// Exact division in the Laurent ring: returns q with p = d*q, or nullopt
// if d does not divide p. d must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

// Substitutes every variable by one common variable t (exponents add).
LaurentPoly collapse_variables(const LaurentPoly& p);

}  // namespace lps

#endif  // LPS_LAURENT_HPP
