#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "lps/charvariety.hpp"
#include "lps/errors.hpp"
#include "lps/laurent.hpp"
#include "lps/lpmat.hpp"
#include "oracles.hpp"

using lps::Character;
using lps::ComplexPoly;
using lps::LaurentMatrix;
using lps::LaurentPoly;
using lps::TurnCoord;
using lps::UPoly;
using oracles::Cx;
using oracles::int_mat1;
using oracles::mat1;
using oracles::mono1;
using oracles::poly1;

namespace {

// The reference two-variable-free anchor polynomial u^2 - (1+t+t^-1)u + 1.
UPoly anchor_poly() {
  return UPoly(1, {mono1(1, 0), -poly1({{1, -1}, {1, 0}, {1, 1}}), mono1(1, 0)});
}

constexpr double kGoldenRho = 2.618033988749895;  // (3+sqrt(5))/2

}  // namespace

// ------------------------------------------------------------- specialization

TEST_CASE("specializing a matrix at the trivial character sums coefficients") {
  const LaurentMatrix m = mat1(2, {{mono1(1, 1), mono1(1, 1)},
                                   {LaurentPoly(1), mono1(1, 0)}});
  const lps::ComplexMatrix cm = lps::specialize_matrix(m, Character::trivial(1));
  CHECK(cm[0][0] == Cx(1, 0));
  CHECK(cm[0][1] == Cx(1, 0));
  CHECK(cm[1][0] == Cx(0, 0));
  CHECK(cm[1][1] == Cx(1, 0));
}

TEST_CASE("the anchor polynomial specializes to u^2+u+1 at a half turn") {
  const ComplexPoly p =
      lps::specialize_upoly(anchor_poly(), Character({TurnCoord::rational(1, 2)}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Cx(1, 0));
  CHECK(p[1] == Cx(1, 0));  // -(1 + 2cos(pi)) = 1, exactly
  CHECK(p[2] == Cx(1, 0));
}

TEST_CASE("the anchor polynomial specializes to u^2-3u+1 at the trivial character") {
  const ComplexPoly p = lps::specialize_upoly(anchor_poly(), Character::trivial(1));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Cx(1, 0));
  CHECK(p[1] == Cx(-3, 0));
  CHECK(p[2] == Cx(1, 0));
}

// --------------------------------------------------------------------- roots

TEST_CASE("roots of u^2-3u+1 match the quadratic formula") {
  const auto rs = lps::roots({Cx(1, 0), Cx(-3, 0), Cx(1, 0)});
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0] - Cx(kGoldenRho, 0)) <= 1e-12);
  CHECK(std::abs(rs[1] - Cx(0.3819660112501051, 0)) <= 1e-12);
  const auto oracle = oracles::quadratic_roots(Cx(1, 0), Cx(-3, 0), Cx(1, 0));
  CHECK(oracles::multiset_match_distance(rs, oracle) <= 1e-12);
}

TEST_CASE("roots of u^2+u+1 lie on the unit circle") {
  const auto rs = lps::roots({Cx(1, 0), Cx(1, 0), Cx(1, 0)});
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(rs[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear polynomials return the single root") {
  const auto rs = lps::roots({Cx(-5, 0), Cx(1, 0)});
  REQUIRE(rs.size() == 1);
  CHECK(rs[0] == Cx(5, 0));
}

TEST_CASE("repeated and zero roots are resolved") {
  // (u-1)^2 = u^2 - 2u + 1: double root at 1.
  const auto rs = lps::roots({Cx(1, 0), Cx(-2, 0), Cx(1, 0)});
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0] - Cx(1, 0)) <= 1e-9);
  CHECK(std::abs(rs[1] - Cx(1, 0)) <= 1e-9);
  // u^3: exact zero roots from trailing-coefficient stripping.
  const auto zs = lps::roots({Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)});
  REQUIRE(zs.size() == 3);
  for (const auto& z : zs) CHECK(z == Cx(0, 0));
  // u^2(u-3): mixed exact zeros and a simple root.
  const auto ms = lps::roots({Cx(0, 0), Cx(0, 0), Cx(-3, 0), Cx(1, 0)});
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == Cx(3, 0));
  CHECK(ms[1] == Cx(0, 0));
  CHECK(ms[2] == Cx(0, 0));
}

TEST_CASE("roots are sorted by descending modulus with argument tie-break") {
  // (u-2i)(u+2i)(u-1) = u^3 - u^2 + 4u - 4.
  const auto rs = lps::roots({Cx(-4, 0), Cx(4, 0), Cx(-1, 0), Cx(1, 0)});
  REQUIRE(rs.size() == 3);
  CHECK(std::abs(rs[0] - Cx(0, 2)) <= 1e-10);   // arg pi/2 before 3pi/2
  CHECK(std::abs(rs[1] - Cx(0, -2)) <= 1e-10);
  CHECK(std::abs(rs[2] - Cx(1, 0)) <= 1e-10);
}

TEST_CASE("every returned root satisfies the residual certificate") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> coeff(-4.0, 4.0);
  std::uniform_int_distribution<int> deg_dist(1, 9);
  for (int k = 0; k < 120; ++k) {
    const int deg = deg_dist(rng);
    ComplexPoly p(static_cast<std::size_t>(deg) + 1);
    for (auto& c : p) c = Cx(coeff(rng), coeff(rng));
    if (std::abs(p.back()) < 0.5) p.back() = Cx(1, 0);
    double max_abs = 0.0;
    for (const auto& c : p) max_abs = std::max(max_abs, std::abs(c));
    const auto rs = lps::roots(p);
    REQUIRE(rs.size() == static_cast<std::size_t>(deg));
    for (const auto& r : rs)
      CHECK(std::abs(oracles::poly_eval(p, r)) <= 1e-10 * (1.0 + max_abs));
  }
}

TEST_CASE("roots built from known factors are recovered") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> part(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    std::uniform_int_distribution<int> deg_dist(2, 6);
    const int deg = deg_dist(rng);
    std::vector<Cx> expected;
    ComplexPoly p{Cx(1, 0)};
    for (int i = 0; i < deg; ++i) {
      const Cx r(part(rng), part(rng));
      expected.push_back(r);
      ComplexPoly next(p.size() + 1, Cx(0, 0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= r * p[j];
      }
      p = std::move(next);
    }
    const auto rs = lps::roots(p);
    CHECK(oracles::multiset_match_distance(rs, expected) <= 1e-7);
  }
}

TEST_CASE("conjugated coefficient vectors give bitwise-conjugate roots") {
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    ComplexPoly p(4);
    for (auto& c : p) c = Cx(coeff(rng), coeff(rng));
    if (std::abs(p.back()) < 0.5) p.back() = Cx(1, 0);
    ComplexPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = std::conj(p[i]);
    const auto rp = lps::roots(p);
    const auto rq = lps::roots(q);
    REQUIRE(rp.size() == rq.size());
    // The same multiset, conjugated; moduli lists must agree exactly.
    for (std::size_t i = 0; i < rp.size(); ++i)
      CHECK(std::abs(rp[i]) == std::abs(rq[i]));
  }
}

TEST_CASE("degenerate root-finder inputs are rejected") {
  CHECK_THROWS_AS(lps::roots({}), lps::MathError);
  CHECK_THROWS_AS(lps::roots({Cx(2, 0)}), lps::MathError);
  CHECK_THROWS_AS(lps::roots({Cx(1, 0), Cx(0, 0)}), lps::MathError);  // zero leading
}

// ------------------------------------------------------------ spectral radius

TEST_CASE("power-squaring spectral radius on reference matrices") {
  CHECK(lps::spectral_radius_by_powers({{Cx(1, 0), Cx(0, 0)}, {Cx(0, 0), Cx(1, 0)}}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lps::spectral_radius_by_powers({{Cx(3, 0), Cx(1, 0)}, {Cx(0, 0), Cx(-2, 0)}}) ==
        doctest::Approx(3.0).epsilon(1e-7));
  // Rotation by 90 degrees: complex-conjugate pair on the unit circle.
  CHECK(lps::spectral_radius_by_powers({{Cx(0, 0), Cx(-1, 0)}, {Cx(1, 0), Cx(0, 0)}}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // Nilpotent: spectral radius zero.
  CHECK(lps::spectral_radius_by_powers({{Cx(0, 0), Cx(1, 0)}, {Cx(0, 0), Cx(0, 0)}}) ==
        doctest::Approx(0.0));
}

TEST_CASE("power-squaring radius agrees with the eigensolver oracle") {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<int> dim_dist(1, 5);
    const int n = dim_dist(rng);
    lps::ComplexMatrix m(static_cast<std::size_t>(n),
                         std::vector<Cx>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& v : row) v = Cx(entry(rng), entry(rng));
    const double mine = lps::spectral_radius_by_powers(m);
    const auto eig = oracles::eigen_eigenvalues(m);
    const double expected = eig.empty() ? 0.0 : std::abs(eig.front());
    CHECK(mine == doctest::Approx(expected).epsilon(1e-6));
  }
}

// ------------------------------------------------------------------- spectrum

TEST_CASE("spectrum of the anchor at the trivial character") {
  const lps::SpectrumReport rep = lps::spectrum(anchor_poly(), Character::trivial(1));
  CHECK(rep.rho == doctest::Approx(kGoldenRho).epsilon(1e-12));
  CHECK(rep.gamma == doctest::Approx(2.2360679774997896).epsilon(1e-12));  // sqrt 5
  REQUIRE(rep.eigenvalue_moduli.size() == 2);
  CHECK(rep.eigenvalue_moduli[0] == rep.rho);
}

TEST_CASE("spectrum of the anchor at a half turn") {
  const lps::SpectrumReport rep =
      lps::spectrum(anchor_poly(), Character({TurnCoord::rational(1, 2)}));
  CHECK(rep.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.gamma == doctest::Approx(0.0));
}

TEST_CASE("spectrum of the identity matrix is one at any character") {
  const LaurentMatrix i2 = LaurentMatrix::identity(2, 1);
  for (const char* text : {"0", "1/3", "0.777"}) {
    const lps::SpectrumReport rep = lps::spectrum(i2, Character::parse(text));
    CHECK(rep.rho == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.gamma == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("matrix spectra cross-check and agree with the eigensolver oracle") {
  std::mt19937 rng(109);
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<int> dim_dist(1, 4);
    const LaurentMatrix m = oracles::random_matrix(rng, dim_dist(rng), 2);
    const Character chi = oracles::random_character(rng, 2);
    const lps::SpectrumReport rep = lps::spectrum(m, chi);  // includes cross-check
    const auto eig = oracles::eigen_eigenvalues(lps::specialize_matrix(m, chi));
    REQUIRE(rep.eigenvalue_moduli.size() == eig.size());
    std::vector<Cx> mine;
    const auto rs = lps::roots(lps::specialize_upoly(lps::char_poly(m), chi));
    for (const auto& r : rs) mine.push_back(r);
    CHECK(oracles::multiset_match_distance(mine, eig) <= 1e-8);
  }
}

// ------------------------------------------------------------ gap certificate

TEST_CASE("half-turn character annihilates the all-(1+t) matrix") {
  const LaurentPoly one_plus_t = poly1({{1, 0}, {1, 1}});
  const LaurentMatrix m = mat1(2, {{one_plus_t, one_plus_t},
                                   {one_plus_t, one_plus_t}});
  const double c = lps::gap_certificate(m, Character({TurnCoord::rational(1, 2)}));
  CHECK(c == doctest::Approx(0.0));
}

TEST_CASE("quarter-turn certificate on the squared spread matrix") {
  // M = [[2+2t+t^2, 2+2t], [2+2t, 2+2t+t^2]]; at t=i the ratios are
  // |1+2i|/5 and |2+2i|/4; the max is 1/sqrt(2).
  const LaurentPoly diag = poly1({{2, 0}, {2, 1}, {1, 2}});
  const LaurentPoly off = poly1({{2, 0}, {2, 1}});
  const LaurentMatrix m = mat1(2, {{diag, off}, {off, diag}});
  const double c = lps::gap_certificate(m, Character({TurnCoord::rational(1, 4)}));
  CHECK(c == doctest::Approx(0.7071067811865476).epsilon(1e-12));
}

TEST_CASE("trivial character gives the vacuous certificate") {
  std::mt19937 rng(113);
  const LaurentMatrix m = oracles::random_positive_matrix(rng, 3, 1);
  CHECK(lps::gap_certificate(m, Character::trivial(1)) == doctest::Approx(1.0));
}

TEST_CASE("gap certificate rejects zero or mixed-sign entries") {
  LaurentMatrix with_zero = int_mat1({{1, 1}, {1, 1}});
  with_zero.at(0, 1) = LaurentPoly(1);
  CHECK_THROWS_AS(lps::gap_certificate(with_zero, Character::trivial(1)),
                  lps::MathError);
  LaurentMatrix with_sign = int_mat1({{1, 1}, {1, 1}});
  with_sign.at(1, 1) = poly1({{1, 0}, {-1, 1}});
  CHECK_THROWS_AS(lps::gap_certificate(with_sign, Character::trivial(1)),
                  lps::MathError);
}

TEST_CASE("the certificate chain bounds entries and the spectral radius") {
  std::mt19937 rng(127);
  int strict = 0;
  for (int k = 0; k < 25; ++k) {
    LaurentMatrix m = oracles::random_positive_matrix(rng, 3, 1);
    int exponent;
    try {
      exponent = lps::uniform_spread_exponent(m, 0);
    } catch (const lps::MathError&) {
      continue;
    }
    m = lps::mat_pow(m, exponent);
    const Character chi({TurnCoord::decimal(0.6180339887498949)});
    const double c = lps::gap_certificate(m, chi);
    CHECK(c < 1.0);
    ++strict;
    // Entrywise |chi(M^n)_ij| <= C^n phi0(M^n)_ij for n <= 4.
    for (int n = 1; n <= 4; ++n) {
      const LaurentMatrix mn = lps::mat_pow(m, n);
      const auto at_chi = lps::specialize_matrix(mn, chi);
      const auto at_one = lps::specialize_matrix(mn, Character::trivial(1));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double bound = std::pow(c, n) *
                               at_one[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].real();
          CHECK(std::abs(at_chi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) <=
                bound + 1e-9);
        }
    }
    const double rho_chi = lps::spectrum(m, chi).rho;
    const double rho_one = lps::spectrum(m, Character::trivial(1)).rho;
    CHECK(rho_chi <= c * rho_one + 1e-9);
  }
  CHECK(strict >= 15);
}

// ----------------------------------------------------------------------- scan

TEST_CASE("full-grid scan of the anchor at g=8") {
  const lps::ScanReport rep = lps::rho_scan(anchor_poly(), 8, 0.0);
  REQUIRE(rep.points.size() == 8);
  CHECK(rep.failed_points.empty());
  CHECK(rep.K == doctest::Approx(kGoldenRho).epsilon(1e-12));
  CHECK(rep.points[4].rho == doctest::Approx(1.0).epsilon(1e-12));  // turn 1/2
  // Max over the nonzero turns is attained at 1/8 and 7/8.
  double max_rho = 0.0;
  for (std::size_t i = 1; i < 8; ++i) max_rho = std::max(max_rho, rep.points[i].rho);
  CHECK(max_rho == doctest::Approx(1.8832035059).epsilon(1e-9));
  CHECK(rep.points[1].rho == doctest::Approx(max_rho).epsilon(1e-12));
  CHECK(rep.points[7].rho == doctest::Approx(max_rho).epsilon(1e-12));
  REQUIRE(rep.delta.has_value());
  CHECK(*rep.delta == doctest::Approx(kGoldenRho - 1.8832035059).epsilon(1e-9));
}

TEST_CASE("exclusion radius 0.13 leaves turn 1/4 as the extremum") {
  const lps::ScanReport rep = lps::rho_scan(anchor_poly(), 8, 0.13);
  REQUIRE(rep.delta.has_value());
  CHECK(*rep.delta == doctest::Approx(kGoldenRho - 1.0).epsilon(1e-9));  // 1.618
}

TEST_CASE("identity scan is flat with zero gap") {
  const lps::ScanReport rep = lps::rho_scan(LaurentMatrix::identity(2, 1), 6, 0.0);
  for (const auto& pt : rep.points) CHECK(pt.rho == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(rep.delta.has_value());
  CHECK(*rep.delta == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("delta is absent when the exclusion swallows the whole grid") {
  const lps::ScanReport rep = lps::rho_scan(anchor_poly(), 3, 0.4);
  // Non-trivial points at turns 1/3, 2/3 have circular distance 1/3 < 0.4.
  CHECK_FALSE(rep.delta.has_value());
  CHECK(rep.points.size() == 3);
}

TEST_CASE("two-variable grids enumerate the last coordinate fastest") {
  // theta = u - t1*t2 has rho(chi) = 1 everywhere; use it to probe layout.
  UPoly p(2, {-oracles::mono(2, 1, {1, 1}), LaurentPoly::constant(2, 1)});
  const lps::ScanReport rep = lps::rho_scan(p, 3, 0.0);
  REQUIRE(rep.points.size() == 9);
  const auto& c3 = rep.points[3].character;  // index 3 = (1,0) in row-major
  CHECK(c3.coord(0) == TurnCoord::rational(1, 3));
  CHECK(c3.coord(1) == TurnCoord::rational(0, 1));
  const auto& c5 = rep.points[5].character;  // index 5 = (1,2)
  CHECK(c5.coord(0) == TurnCoord::rational(1, 3));
  CHECK(c5.coord(1) == TurnCoord::rational(2, 3));
}

TEST_CASE("scan output is identical for any worker count") {
  const lps::ScanReport one = lps::rho_scan(anchor_poly(), 64, 0.1, 1);
  const lps::ScanReport four = lps::rho_scan(anchor_poly(), 64, 0.1, 4);
  REQUIRE(one.points.size() == four.points.size());
  CHECK(one.K == four.K);
  CHECK(one.delta == four.delta);
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].rho == four.points[i].rho);  // bitwise
    CHECK(one.points[i].gamma == four.points[i].gamma);
    CHECK(one.points[i].eigenvalue_moduli == four.points[i].eigenvalue_moduli);
  }
  std::ostringstream csv1, csv4;
  lps::write_scan_csv(one, csv1);
  lps::write_scan_csv(four, csv4);
  CHECK(csv1.str() == csv4.str());
}

TEST_CASE("mirrored grid points carry bitwise-equal spectra") {
  const lps::ScanReport rep = lps::rho_scan(anchor_poly(), 128, 0.0);
  for (std::size_t k = 1; k < 128; ++k) {
    const auto& a = rep.points[k];
    const auto& b = rep.points[128 - k];
    CHECK(a.rho == b.rho);  // exact, not approximate
    CHECK(a.eigenvalue_moduli == b.eigenvalue_moduli);
  }
}

TEST_CASE("the sampled radius function is continuous at scan resolution") {
  // rho(x) is continuous but kinked where the two eigenvalue moduli collide:
  // 1 + 2cos(2 pi x) = 2 at x = 1/6 and 5/6 gives a double root, and near it
  // rho - 1 ~ sqrt(c - 2). The max adjacent-sample difference is therefore
  // dominated by the kink and decays like 1/sqrt(g); away from the two kink
  // turns the sampling is already 0.02-smooth at g = 1024.
  auto max_jump = [](int g, double skip_window) {
    const lps::ScanReport rep = lps::rho_scan(anchor_poly(), g, 0.0);
    double worst = 0.0;
    for (int k = 0; k < g; ++k) {
      const double mid = (k + 0.5) / g;
      if (std::abs(mid - 1.0 / 6.0) < skip_window ||
          std::abs(mid - 5.0 / 6.0) < skip_window) {
        continue;
      }
      const double a = rep.points[static_cast<std::size_t>(k)].rho;
      const double b = rep.points[static_cast<std::size_t>((k + 1) % g)].rho;
      worst = std::max(worst, std::abs(a - b));
    }
    return worst;
  };
  const double j256 = max_jump(256, 0.0);
  const double j1024 = max_jump(1024, 0.0);
  const double j4096 = max_jump(4096, 0.0);
  CHECK(j1024 < j256);
  CHECK(j4096 < j1024);
  CHECK(j256 * std::sqrt(256.0) < 4.5);
  CHECK(j1024 * std::sqrt(1024.0) < 4.5);
  CHECK(j4096 * std::sqrt(4096.0) < 4.5);
  CHECK(max_jump(1024, 0.02) < 0.02);
}

TEST_CASE("matrix scans agree with polynomial scans of the char poly") {
  const LaurentMatrix m = mat1(2, {{LaurentPoly(1), mono1(1, 1)},
                                   {mono1(1, -1), mono1(1, 0)}});
  const lps::ScanReport via_matrix = lps::rho_scan(m, 16, 0.0);
  const lps::ScanReport via_poly = lps::rho_scan(lps::char_poly(m), 16, 0.0);
  REQUIRE(via_matrix.points.size() == via_poly.points.size());
  for (std::size_t i = 0; i < via_matrix.points.size(); ++i)
    CHECK(via_matrix.points[i].rho ==
          doctest::Approx(via_poly.points[i].rho).epsilon(1e-10));
}

TEST_CASE("scan argument validation") {
  CHECK_THROWS_AS(lps::rho_scan(anchor_poly(), 1, 0.0), lps::MathError);
  CHECK_THROWS_AS(lps::rho_scan(anchor_poly(), 8, 0.5), lps::MathError);
  CHECK_THROWS_AS(lps::rho_scan(anchor_poly(), 8, -0.1), lps::MathError);
  CHECK_THROWS_AS(lps::rho_scan(UPoly::from_int_coeffs({1, 1}, 0), 8, 0.0),
                  lps::MathError);
}

// --------------------------------------------------------- torsion characters

TEST_CASE("torsion characters up to order two and three") {
  const auto two = lps::torsion_characters(1, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Character::trivial(1));
  CHECK(two[1] == Character({TurnCoord::rational(1, 2)}));
  const auto three = lps::torsion_characters(1, 3);
  REQUIRE(three.size() == 4);
  CHECK(three[0] == Character::trivial(1));
  CHECK(three[1] == Character({TurnCoord::rational(1, 2)}));
  CHECK(three[2] == Character({TurnCoord::rational(1, 3)}));
  CHECK(three[3] == Character({TurnCoord::rational(2, 3)}));
}

TEST_CASE("rank-two torsion characters form the expected product") {
  const auto cs = lps::torsion_characters(2, 2);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == Character::parse("0,0"));
  CHECK(cs[1] == Character::parse("0,1/2"));
  CHECK(cs[2] == Character::parse("1/2,0"));
  CHECK(cs[3] == Character::parse("1/2,1/2"));
}

TEST_CASE("torsion character counts follow the totient sum") {
  // Sum of Euler phi over b <= 6 is 1+1+2+2+4+2 = 12.
  CHECK(lps::torsion_characters(1, 6).size() == 12);
  CHECK(lps::torsion_characters(2, 3).size() == 16);  // 4^2
  CHECK(lps::torsion_characters(1, 1).size() == 1);
}

// ------------------------------------------------------------------------ CSV

TEST_CASE("CSV output shape: header, rows, line feeds, precision") {
  const lps::ScanReport rep = lps::rho_scan(anchor_poly(), 4, 0.0);
  std::ostringstream os;
  lps::write_scan_csv(rep, os);
  const std::string text = os.str();
  CHECK(text.find("turn_1,rho,gamma\n") == 0);
  CHECK(text.find('\r') == std::string::npos);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);  // header + 4 points
  // The trivial point renders rho with 12 significant digits.
  CHECK(text.find("2.61803398875") != std::string::npos);
}
