#include "lps/fiberpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <utility>

#include "lps/charvariety.hpp"
#include "lps/errors.hpp"

namespace lps {

UPoly teichmuller(const LaurentMatrix& p_e, const LaurentMatrix& p_v) {
  if (p_e.num_vars() != p_v.num_vars()) {
    throw MathError("teichmuller: edge/vertex matrices disagree on variable count");
  }
  const UPoly ce = char_poly(p_e);
  const UPoly cv = char_poly(p_v);
  UPolyDivMod dm = upoly_divmod(ce, cv);  // divisor monic: division is exact-or-fails
  if (!dm.remainder.is_zero()) {
    throw MathError("teichmuller: not a fibered-face pair; remainder " + dm.remainder.str());
  }
  return std::move(dm.quotient);
}

FiberedFaceData make_fibered_face(LaurentMatrix p_e, LaurentMatrix p_v,
                                  std::optional<UPoly> alexander) {
  UPoly theta = teichmuller(p_e, p_v);
  if (alexander && alexander->num_vars() != theta.num_vars()) {
    throw MathError("make_fibered_face: Alexander polynomial variable count mismatch");
  }
  return FiberedFaceData{std::move(p_e), std::move(p_v), std::move(theta),
                         std::move(alexander)};
}

namespace {

// One specialized corroboration: every root of a_chi must match a distinct
// root of t_chi within 1e-8. Degenerate specializations (either polynomial
// loses all degree, or a_chi vanishes identically) are vacuously accepted.
bool corroborate_at(const UPoly& a, const UPoly& t, const Character& chi) {
  const ComplexPoly ac = specialize_upoly(a, chi);
  const ComplexPoly tc = specialize_upoly(t, chi);
  const auto effectively_constant = [](const ComplexPoly& c) {
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k] != std::complex<double>{0.0, 0.0}) return false;
    }
    return true;
  };
  if (effectively_constant(ac)) return true;  // no roots to match
  if (effectively_constant(tc) && (tc.empty() || tc[0] == std::complex<double>{0.0, 0.0})) {
    return true;  // t_chi identically zero: everything divides it
  }
  if (effectively_constant(tc)) return false;  // nonzero constant has no roots

  std::vector<std::complex<double>> ra;
  std::vector<std::complex<double>> rt;
  try {
    ra = roots(ac);
    rt = roots(tc);
  } catch (const NumericError&) {
    return false;
  }
  std::vector<char> used(rt.size(), 0);
  for (const auto& r : ra) {
    const double tol = 1e-8 * (1.0 + std::abs(r));
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < rt.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(rt[j] - r);
      if (best < 0.0 || d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best < 0.0 || best > tol) return false;
    used[best_j] = 1;
  }
  return true;
}

}  // namespace

DividesReport divides_up_to_unit(const UPoly& a, const UPoly& t, unsigned seed) {
  if (a.is_zero()) throw MathError("divides_up_to_unit: divisor is zero");
  DividesReport report;

  // Any unit multiple of a quotient is again a UPoly, so divisibility up to
  // unit is plain divisibility; exact stepwise division decides it with no
  // false positives or negatives over the integral domain ZZ[H].
  std::optional<UPoly> q = upoly_divide_exact(t, a);
  if (!q) {
    report.divides = false;
    report.diagnostic =
        "exact division failed: no Laurent-polynomial quotient exists (leading-term "
        "reduction obstructed or nonzero remainder)";
    return report;
  }
  report.divides = true;
  report.quotient = std::move(*q);

  // Corroborate at 25 seeded random torsion characters.
  constexpr int kCorroborations = 25;
  constexpr int kMaxDenominator = 8;
  report.corroborations_total = kCorroborations;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, kMaxDenominator);
  const int h = std::max(1, a.num_vars());
  for (int c = 0; c < kCorroborations; ++c) {
    std::vector<TurnCoord> turns;
    turns.reserve(static_cast<std::size_t>(h));
    for (int j = 0; j < h; ++j) {
      const int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(0, den - 1);
      turns.push_back(TurnCoord::rational(num_dist(rng), den));
    }
    Character chi = a.num_vars() == 0 ? Character::trivial(0) : Character(std::move(turns));
    if (corroborate_at(a, t, chi)) ++report.corroborations_passed;
  }
  return report;
}

ThetaDiagnostics validate_theta(const UPoly& t) {
  if (t.is_zero()) throw MathError("validate_theta: zero polynomial");
  const int h = t.num_vars();
  ThetaDiagnostics diag;
  diag.joint_spread.assign(static_cast<std::size_t>(h), 0);
  diag.dependent.assign(static_cast<std::size_t>(h), false);
  for (int v = 0; v < h; ++v) {
    bool seen = false;
    std::int32_t lo = 0, hi = 0;
    for (const auto& coeff : t.coeffs()) {
      for (const auto& [e, c] : coeff.terms()) {
        if (!seen) {
          lo = hi = e[static_cast<std::size_t>(v)];
          seen = true;
        } else {
          lo = std::min(lo, e[static_cast<std::size_t>(v)]);
          hi = std::max(hi, e[static_cast<std::size_t>(v)]);
        }
      }
    }
    diag.joint_spread[static_cast<std::size_t>(v)] = seen ? hi - lo : 0;
    const bool dep = diag.joint_spread[static_cast<std::size_t>(v)] >= 1;
    diag.dependent[static_cast<std::size_t>(v)] = dep;
    if (!dep) diag.flagged.push_back(v);
  }
  return diag;
}

double dilatation(const UPoly& t, std::span<const double> xi) {
  if (t.is_zero()) throw MathError("dilatation: zero polynomial");
  if (static_cast<int>(xi.size()) != t.num_vars()) {
    throw MathError("dilatation: direction vector has " + std::to_string(xi.size()) +
                    " coordinates, polynomial has " + std::to_string(t.num_vars()));
  }
  ComplexPoly pc(t.coeffs().size());
  for (std::size_t k = 0; k < t.coeffs().size(); ++k) {
    pc[k] = {t.coeffs()[k].is_zero() ? 0.0 : eval_positive(t.coeffs()[k], xi), 0.0};
  }
  while (pc.size() > 1 && pc.back() == std::complex<double>{0.0, 0.0}) pc.pop_back();
  if (pc.size() < 2) {
    throw MathError("dilatation: specialization is constant (degenerate direction)");
  }

  const auto rs = roots(pc);
  bool found = false;
  double best = 0.0;
  for (const auto& z : rs) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) continue;
    if (z.real() < -1e-12) continue;
    if (!found || z.real() > best) best = std::max(0.0, z.real());
    found = true;
  }
  if (!found) {
    throw MathError("dilatation: specialized polynomial has no nonnegative real root");
  }

  // Bisection refinement around the dominant real root when a sign change
  // brackets it (odd multiplicity); otherwise the polished root stands.
  const auto eval_real = [&pc](double x) {
    double p = pc.back().real();
    for (std::size_t k = pc.size() - 1; k-- > 0;) p = p * x + pc[k].real();
    return p;
  };
  const double width = 1e-6 * (1.0 + std::abs(best));
  double lo = best - width;
  double hi = best + width;
  double flo = eval_real(lo);
  double fhi = eval_real(hi);
  for (int grow = 0; grow < 8 && flo * fhi > 0.0; ++grow) {
    lo -= width;
    hi += width;
    flo = eval_real(lo);
    fhi = eval_real(hi);
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi < 0.0) {
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = eval_real(mid);
      if (fmid == 0.0) return mid;
      if ((flo < 0.0) == (fmid < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  return best;
}

}  // namespace lps
