#ifndef LPS_LPMAT_HPP
#define LPS_LPMAT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lps/laurent.hpp"

namespace lps {

// Square matrix over the Laurent ring. Entries are stored row-major and all
// share the same number of variables; dim >= 1.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int dim, int num_vars);
  LaurentMatrix(int dim, int num_vars, std::vector<LaurentPoly> entries);

  static LaurentMatrix identity(int dim, int num_vars);

  int dim() const { return dim_; }
  int num_vars() const { return num_vars_; }

  const LaurentPoly& at(int i, int j) const { return entries_[idx(i, j)]; }
  LaurentPoly& at(int i, int j) { return entries_[idx(i, j)]; }

  bool operator==(const LaurentMatrix& other) const = default;

  std::string str() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  int num_vars_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Outcome of the Perron-Frobenius primitivity certification.
struct PFReport {
  bool primitive = false;
  // Least k such that every entry of M^k is a nonzero polynomial with
  // positive coefficients; present iff primitive. Always <= Wielandt bound.
  std::optional<int> exponent;
  // 1-based (row, col) of an entry of M^k that is still zero at the Wielandt
  // bound; present iff not primitive.
  std::optional<std::pair<int, int>> failure_witness;
};

// Polynomial in the distinguished variable u with Laurent-polynomial
// coefficients. coeffs()[k] multiplies u^k; the leading coefficient is
// nonzero (the zero polynomial has an empty coefficient list).
class UPoly {
 public:
  UPoly() = default;  // zero polynomial in zero variables
  explicit UPoly(int num_vars) : num_vars_(num_vars) {}
  UPoly(int num_vars, std::vector<LaurentPoly> coeffs);

  static UPoly from_int_coeffs(const std::vector<long long>& coeffs, int num_vars = 0);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  // Coefficient of u^k; zero polynomial for k beyond the degree.
  LaurentPoly coeff(int k) const;
  const LaurentPoly& leading() const;
  bool is_monic() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;

  bool operator==(const UPoly& other) const = default;

  // Substitutes u := value (a Laurent polynomial in the same variables).
  LaurentPoly eval_at(const LaurentPoly& value) const;

  std::string str(std::span<const std::string> names = {}) const;

 private:
  int num_vars_ = 0;
  std::vector<LaurentPoly> coeffs_;
};

struct UPolyDivMod {
  UPoly quotient;
  UPoly remainder;
};

// Classical sharp primitivity cutoff for n x n boolean matrices.
constexpr int wielandt_bound(int n) { return (n - 1) * (n - 1) + 1; }

LaurentPoly trace(const LaurentMatrix& m);
LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix mat_pow(const LaurentMatrix& a, int k);  // k >= 1, binary powering

// Exact determinant by cofactor expansion along the first row. Exponential
// in dim; intended for the small matrices that arise here (braid generator
// images, test cross-checks).
LaurentPoly det_cofactor(const LaurentMatrix& m);

// Exact inverse for matrices whose determinant is a unit +-t^a, via the
// adjugate. Throws MathError if the determinant is not a unit.
LaurentMatrix inverse_unit_det(const LaurentMatrix& m);

// Certifies primitivity of the support pattern of M, searching powers up to
// the Wielandt bound. Requires every entry to be zero or to have strictly
// positive coefficients, so that support powering sees no cancellation;
// mixed- or negative-sign entries are rejected with the offending position.
PFReport primitivity(const LaurentMatrix& m);

// Least k <= 3 * wielandt_bound(dim) such that every entry of M^k is nonzero
// with spread >= 1 in the given variable. Requires a primitive matrix.
// Throws MathError("spread never uniform ...") when the bound is exhausted.
int uniform_spread_exponent(const LaurentMatrix& m, int var);

// Monic characteristic polynomial det(u*I - M) of degree dim, computed by
// the Faddeev-LeVerrier recurrence; every intermediate division by an
// integer is asserted exact.
UPoly char_poly(const LaurentMatrix& m);

// Polynomial division T = Q*D + R with deg R < deg D, valid whenever the
// leading coefficient of D is a unit of the Laurent ring. Throws MathError
// otherwise.
UPolyDivMod upoly_divmod(const UPoly& t, const UPoly& d);

// Exact division in UPoly over the Laurent ring: returns Q with T = D*Q, or
// nullopt when no such Q exists. Sound and complete because the coefficient
// ring is an integral domain.
std::optional<UPoly> upoly_divide_exact(const UPoly& t, const UPoly& d);

}  // namespace lps

#endif  // LPS_LPMAT_HPP
