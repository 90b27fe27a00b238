#ifndef LPS_CHARVARIETY_HPP
#define LPS_CHARVARIETY_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lps/character.hpp"
#include "lps/lpmat.hpp"

namespace lps {

// Dense complex matrix (rows of equal length) produced by specialization.
using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;
// Complex univariate polynomial, coefficients ascending in the power of u.
using ComplexPoly = std::vector<std::complex<double>>;

// Entrywise / coefficientwise eval_character. At the trivial character the
// result is the matrix/polynomial of exact coefficient sums.
ComplexMatrix specialize_matrix(const LaurentMatrix& m, const Character& chi);
ComplexPoly specialize_upoly(const UPoly& p, const Character& chi);

struct RootOptions {
  double residual_tol = 1e-10;  // certificate: |p(r)| <= residual_tol * (1 + max|c_i|)
  int max_sweeps = 400;
};

// All complex roots with multiplicity via the Aberth-Ehrlich simultaneous
// iteration. Deterministic: fixed initialization on a circle of radius
// 1 + max|c_i / c_deg|, fixed sweep order, no randomness. Roots are sorted
// by descending modulus, ties by ascending argument in [0, 2*pi). Exact zero
// trailing coefficients yield exact zero roots; conjugated inputs yield
// bitwise-conjugated outputs. Throws NumericError (with the best residual)
// if the residual certificate cannot be met.
std::vector<std::complex<double>> roots(const ComplexPoly& coeffs,
                                        const RootOptions& options = {});

// Spectral radius estimate by scaled repeated squaring of the matrix
// (36 squarings, i.e. the 2^36-th power with per-step normalization).
// Independent of the root finder; used as a cross-check.
double spectral_radius_by_powers(const ComplexMatrix& m);

struct SpectrumReport {
  Character character;
  // Sorted descending; ties broken by ascending argument of the root.
  std::vector<double> eigenvalue_moduli;
  double rho = 0.0;
  double gamma = 0.0;  // rho minus second-largest modulus; 0 if degree 1
};

// Roots of the exact characteristic polynomial, specialized at chi. The
// matrix form cross-checks rho against spectral_radius_by_powers of the
// specialized matrix at 1e-6 relative agreement and throws NumericError on
// disagreement.
SpectrumReport spectrum(const LaurentMatrix& m, const Character& chi);
SpectrumReport spectrum(const UPoly& p, const Character& chi);

// The constant C = max_ij |chi(m_ij)| / phi_0(m_ij) in [0, 1]. Requires
// every entry nonzero with positive coefficients. Entrywise this certifies
// |chi(M^n)_ij| <= C^n * phi_0(M^n)_ij for all n >= 1, hence
// rho(chi(M)) <= C * rho(phi_0(M)).
double gap_certificate(const LaurentMatrix& m, const Character& chi);

struct ScanReport {
  int grid = 0;                 // points per dimension g
  double exclusion_radius = 0;  // r, in the per-coordinate circular sup metric
  double K = 0.0;               // rho at the trivial character
  // K minus the max rho over grid points at distance > r from phi_0;
  // empty when no grid point lies outside the excluded neighborhood.
  std::optional<double> delta;
  std::vector<SpectrumReport> points;       // g^h entries in grid order
  std::vector<std::size_t> failed_points;   // grid indices whose evaluation failed
};

// Evaluates the spectrum on the g^h grid of rational-turn characters
// (coordinates k/g, last coordinate fastest). Points are independent and may
// be evaluated on `jobs` worker threads; assembly is by grid index, so the
// report is identical for any jobs value. Per-point root-finder failures are
// recorded in failed_points (rho = NaN) instead of aborting the scan.
ScanReport rho_scan(const LaurentMatrix& m, int grid, double exclusion_radius, int jobs = 1);
ScanReport rho_scan(const UPoly& p, int grid, double exclusion_radius, int jobs = 1);

// All characters of the given rank whose coordinates are reduced fractions
// a/b with b <= max_order, in canonical order: per coordinate by (denominator,
// numerator), first coordinate slowest.
std::vector<Character> torsion_characters(int rank, int max_order);

// CSV: header turn_1,...,turn_h,rho,gamma; one row per grid point in grid
// order; 12 significant digits; LF line endings.
void write_scan_csv(const ScanReport& report, std::ostream& os);

}  // namespace lps

#endif  // LPS_CHARVARIETY_HPP
