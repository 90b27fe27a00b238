#ifndef LPS_FIBERPOLY_HPP
#define LPS_FIBERPOLY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lps/lpmat.hpp"

namespace lps {

// Edge/vertex transition data for one fibered face, with the derived
// Teichmuller polynomial theta = char_poly(P_E) / char_poly(P_V).
struct FiberedFaceData {
  LaurentMatrix p_e;
  LaurentMatrix p_v;
  UPoly theta;
  std::optional<UPoly> alexander;
};

// Exact quotient char_poly(P_E) / char_poly(P_V); the divisor is monic, so
// the division runs to completion and the remainder decides success. Throws
// MathError ("not a fibered-face pair", remainder attached) when the
// characteristic polynomials do not divide.
UPoly teichmuller(const LaurentMatrix& p_e, const LaurentMatrix& p_v);

// Validates and assembles the face data (computes theta).
FiberedFaceData make_fibered_face(LaurentMatrix p_e, LaurentMatrix p_v,
                                  std::optional<UPoly> alexander = std::nullopt);

struct DividesReport {
  bool divides = false;
  // Non-empty explanation when the exact check fails.
  std::string diagnostic;
  // Torsion-specialization corroborations (only run when the exact check
  // succeeds): every root of the specialized divisor must match a root of
  // the specialized dividend within 1e-8.
  int corroborations_passed = 0;
  int corroborations_total = 0;
  std::optional<UPoly> quotient;
};

// Does A divide T up to a unit of the Laurent ring? Decided by exact
// division over ZZ[H] (units absorb into the quotient, so up-to-unit
// divisibility coincides with plain divisibility); the exact check governs
// the verdict and random torsion specializations corroborate it. The seed
// fixes the corroboration sample.
DividesReport divides_up_to_unit(const UPoly& a, const UPoly& t, unsigned seed = 0);

struct ThetaDiagnostics {
  // Per variable: the spread of the variable across all terms of all
  // u-coefficients, and whether that spread is >= 1 (the polynomial depends
  // on the variable).
  std::vector<int> joint_spread;
  std::vector<bool> dependent;
  // Variable indices where dependence fails, i.e. degenerate input data.
  std::vector<int> flagged;
  bool all_dependent() const { return flagged.empty(); }
};

// Reports, per variable, whether theta depends on it (joint spread >= 1
// across the terms of all coefficients; unit normalization cannot change
// this). Flags independent variables.
ThetaDiagnostics validate_theta(const UPoly& t);

// Largest nonnegative real root of T specialized at t_j -> exp(xi_j):
// complex root run plus bisection refinement of the dominant real root.
// Throws MathError when the specialization has no nonnegative real root or
// degenerates below degree 1.
double dilatation(const UPoly& t, std::span<const double> xi);

}  // namespace lps

#endif  // LPS_FIBERPOLY_HPP
