#include "lps/charvariety.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <thread>

#include "lps/errors.hpp"

namespace lps {

ComplexMatrix specialize_matrix(const LaurentMatrix& m, const Character& chi) {
  if (chi.num_vars() != m.num_vars()) {
    throw MathError("specialize_matrix: character/matrix variable-count mismatch");
  }
  ComplexMatrix out(static_cast<std::size_t>(m.dim()),
                    std::vector<std::complex<double>>(static_cast<std::size_t>(m.dim())));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          eval_character(m.at(i, j), chi);
    }
  }
  return out;
}

ComplexPoly specialize_upoly(const UPoly& p, const Character& chi) {
  if (chi.num_vars() != p.num_vars()) {
    throw MathError("specialize_upoly: character/polynomial variable-count mismatch");
  }
  ComplexPoly out(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    out[k] = eval_character(p.coeffs()[k], chi);
  }
  return out;
}

namespace {

constexpr std::complex<double> kZero{0.0, 0.0};

// p(z) and p'(z) by Horner's scheme; coefficients ascending.
std::pair<std::complex<double>, std::complex<double>> horner(const ComplexPoly& c,
                                                             std::complex<double> z) {
  std::complex<double> p = c.back();
  std::complex<double> dp = kZero;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

double arg_in_turn_range(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

void sort_roots(std::vector<std::complex<double>>& rs) {
  std::sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return arg_in_turn_range(a) < arg_in_turn_range(b);
  });
}

}  // namespace

std::vector<std::complex<double>> roots(const ComplexPoly& coeffs, const RootOptions& options) {
  ComplexPoly c = coeffs;
  while (c.size() > 1 && c.back() == kZero) c.pop_back();
  if (c.empty() || (c.size() == 1 && c[0] == kZero)) {
    throw MathError("roots: zero polynomial");
  }
  if (c.size() == 1) {
    throw MathError("roots: degree must be at least 1");
  }
  double max_abs = 0.0;
  for (const auto& x : c) max_abs = std::max(max_abs, std::abs(x));
  if (!std::isfinite(max_abs)) throw NumericError("roots: non-finite coefficient");
  const double tol = options.residual_tol * (1.0 + max_abs);

  // Exact zero constant terms are exact roots at the origin.
  std::size_t zeros_at_origin = 0;
  while (c.size() > 1 && c.front() == kZero) {
    c.erase(c.begin());
    ++zeros_at_origin;
  }

  std::vector<std::complex<double>> rs;
  if (c.size() > 1) {
    // Canonicalize under conjugation: conjugated coefficient vectors then run
    // through bitwise-identical arithmetic, so mirrored characters produce
    // exactly mirrored spectra.
    bool conjugated = false;
    for (const auto& x : c) {
      if (x.imag() != 0.0) {
        conjugated = x.imag() < 0.0;
        break;
      }
    }
    if (conjugated) {
      for (auto& x : c) x = std::conj(x);
    }

    const std::size_t deg = c.size() - 1;
    rs.resize(deg);
    if (deg == 1) {
      rs[0] = -c[0] / c[1];
    } else {
      double radius = 0.0;
      for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::abs(c[k] / c[deg]));
      radius += 1.0;
      for (std::size_t k = 0; k < deg; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
        rs[k] = std::polar(radius, angle);
      }
      bool certified = false;
      for (int sweep = 0; sweep < options.max_sweeps && !certified; ++sweep) {
        for (std::size_t k = 0; k < deg; ++k) {
          const auto [p, dp] = horner(c, rs[k]);
          if (std::abs(p) <= tol) continue;
          if (dp == kZero) {
            // Stationary point of p: nudge deterministically off it.
            rs[k] += std::complex<double>(1e-6, 1e-6) * (1.0 + std::abs(rs[k]));
            continue;
          }
          const std::complex<double> w = p / dp;
          std::complex<double> repel = kZero;
          for (std::size_t j = 0; j < deg; ++j) {
            if (j == k) continue;
            std::complex<double> diff = rs[k] - rs[j];
            if (diff == kZero) diff = std::complex<double>(1e-12, 1e-12);
            repel += 1.0 / diff;
          }
          const std::complex<double> denom = 1.0 - w * repel;
          rs[k] -= (std::abs(denom) < 1e-30) ? w : w / denom;
        }
        certified = true;
        for (std::size_t k = 0; certified && k < deg; ++k) {
          if (std::abs(horner(c, rs[k]).first) > tol) certified = false;
        }
      }
      if (!certified) {
        double best = 0.0;
        for (std::size_t k = 0; k < deg; ++k) best = std::max(best, std::abs(horner(c, rs[k]).first));
        throw NumericError("roots: no convergence after " + std::to_string(options.max_sweeps) +
                           " sweeps; worst residual " + std::to_string(best) + " > " +
                           std::to_string(tol));
      }
    }

    // Newton polish (simple roots gain quadratic accuracy; harmless on
    // clusters since steps are accepted only when the residual improves).
    for (auto& z : rs) {
      for (int it = 0; it < 3; ++it) {
        const auto [p, dp] = horner(c, z);
        if (dp == kZero) break;
        const std::complex<double> z2 = z - p / dp;
        if (std::abs(horner(c, z2).first) < std::abs(p)) {
          z = z2;
        } else {
          break;
        }
      }
    }

    // Multiple roots emerge as tight clusters whose mean is far more accurate
    // than any member; replace each cluster by its centroid when the residual
    // certificate still holds there.
    if (rs.size() > 1) {
      std::vector<std::size_t> group(rs.size());
      std::iota(group.begin(), group.end(), 0);
      const auto find = [&group](std::size_t x) {
        while (group[x] != x) x = group[x] = group[group[x]];
        return x;
      };
      for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          const double limit = 1e-4 * (1.0 + std::max(std::abs(rs[i]), std::abs(rs[j])));
          if (std::abs(rs[i] - rs[j]) <= limit) group[find(i)] = find(j);
        }
      }
      for (std::size_t rep = 0; rep < rs.size(); ++rep) {
        if (find(rep) != rep) continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < rs.size(); ++i) {
          if (find(i) == rep) members.push_back(i);
        }
        if (members.size() < 2) continue;
        std::complex<double> centroid = kZero;
        for (std::size_t i : members) centroid += rs[i];
        centroid /= static_cast<double>(members.size());
        // Multiplicity-aware Newton from the centroid: for an m-fold root
        // the step m*p/p' converges quadratically, unlike the plain centroid
        // whose members' errors need not cancel.
        const double mult = static_cast<double>(members.size());
        std::complex<double> best = centroid;
        double best_res = std::abs(horner(c, centroid).first);
        std::complex<double> z = centroid;
        for (int it = 0; it < 6; ++it) {
          const auto [pv, dpv] = horner(c, z);
          if (dpv == kZero) break;
          const std::complex<double> step = mult * pv / dpv;
          if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) ||
              std::abs(step) > 0.5 * (1.0 + std::abs(z))) {
            break;
          }
          z -= step;
          const double res = std::abs(horner(c, z).first);
          if (res < best_res) {
            best_res = res;
            best = z;
          }
        }
        if (best_res <= tol) {
          for (std::size_t i : members) rs[i] = best;
        }
      }
    }

    if (conjugated) {
      for (auto& z : rs) z = std::conj(z);
    }
  }

  rs.insert(rs.end(), zeros_at_origin, kZero);

  // Final certificate against the original polynomial (zero roots reinstate
  // the stripped constant terms).
  ComplexPoly orig = coeffs;
  while (orig.size() > 1 && orig.back() == kZero) orig.pop_back();
  for (auto& z : rs) {
    double res = std::abs(horner(orig, z).first);
    if (res > tol) {
      for (int it = 0; it < 3 && res > tol; ++it) {
        const auto [p, dp] = horner(orig, z);
        if (dp == kZero) break;
        const std::complex<double> z2 = z - p / dp;
        const double res2 = std::abs(horner(orig, z2).first);
        if (res2 < res) {
          z = z2;
          res = res2;
        } else {
          break;
        }
      }
      if (res > tol) {
        throw NumericError("roots: residual certificate failed (" + std::to_string(res) + " > " +
                           std::to_string(tol) + ")");
      }
    }
  }

  sort_roots(rs);
  return rs;
}

double spectral_radius_by_powers(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw MathError("spectral_radius_by_powers: empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw MathError("spectral_radius_by_powers: matrix not square");
  }
  const auto inf_norm = [n](const ComplexMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(a[i][j]);
      best = std::max(best, s);
    }
    return best;
  };
  const auto scale_by = [n](ComplexMatrix& a, double f) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] *= f;
    }
  };

  double nrm = inf_norm(m);
  if (!std::isfinite(nrm)) throw NumericError("spectral_radius_by_powers: non-finite entry");
  if (nrm == 0.0) return 0.0;

  // Maintain M^(2^s) = B * exp(l) with B normalized; after kSquarings
  // squarings, rho ~= exp(l / 2^kSquarings) by Gelfand's formula. The
  // truncation error in log rho is O((log cond)/2^kSquarings).
  ComplexMatrix b = m;
  scale_by(b, 1.0 / nrm);
  double l = std::log(nrm);
  constexpr int kSquarings = 36;
  ComplexMatrix next(n, std::vector<std::complex<double>>(n));
  for (int s = 0; s < kSquarings; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = kZero;
        for (std::size_t k = 0; k < n; ++k) acc += b[i][k] * b[k][j];
        next[i][j] = acc;
      }
    }
    std::swap(b, next);
    const double nb = inf_norm(b);
    if (nb == 0.0) return 0.0;
    scale_by(b, 1.0 / nb);
    l = 2.0 * l + std::log(nb);
  }
  return std::exp(l * 0x1p-36);
}

namespace {

SpectrumReport spectrum_from(const UPoly& p, const LaurentMatrix* m, const Character& chi) {
  const ComplexPoly pc = specialize_upoly(p, chi);
  const auto rs = roots(pc);
  SpectrumReport rep;
  rep.character = chi;
  rep.eigenvalue_moduli.reserve(rs.size());
  for (const auto& z : rs) rep.eigenvalue_moduli.push_back(std::abs(z));
  rep.rho = rep.eigenvalue_moduli.empty() ? 0.0 : rep.eigenvalue_moduli.front();
  rep.gamma =
      rep.eigenvalue_moduli.size() >= 2 ? rep.rho - rep.eigenvalue_moduli[1] : 0.0;
  if (m != nullptr) {
    const double by_powers = spectral_radius_by_powers(specialize_matrix(*m, chi));
    const double slack = 1e-6 * std::max({1.0, rep.rho, by_powers});
    if (std::abs(rep.rho - by_powers) > slack) {
      throw NumericError("spectrum: root-finder rho " + std::to_string(rep.rho) +
                         " disagrees with matrix-power estimate " + std::to_string(by_powers));
    }
  }
  return rep;
}

Character grid_character(std::size_t index, int g, int h) {
  std::vector<TurnCoord> turns(static_cast<std::size_t>(h));
  for (int j = h - 1; j >= 0; --j) {
    turns[static_cast<std::size_t>(j)] =
        TurnCoord::rational(static_cast<std::int64_t>(index % static_cast<std::size_t>(g)), g);
    index /= static_cast<std::size_t>(g);
  }
  return Character(std::move(turns));
}

ScanReport scan_impl(const UPoly& p, const LaurentMatrix* m, int grid, double exclusion_radius,
                     int jobs) {
  const int h = p.num_vars();
  if (h < 1) throw MathError("rho_scan: object has no Laurent variables");
  if (grid < 2) throw MathError("rho_scan: grid must be >= 2");
  if (!(exclusion_radius >= 0.0 && exclusion_radius < 0.5)) {
    throw MathError("rho_scan: exclusion radius must lie in [0, 1/2)");
  }
  std::size_t total = 1;
  for (int j = 0; j < h; ++j) {
    if (total > (std::size_t{1} << 24) / static_cast<std::size_t>(grid)) {
      throw MathError("rho_scan: grid has too many points");
    }
    total *= static_cast<std::size_t>(grid);
  }

  ScanReport report;
  report.grid = grid;
  report.exclusion_radius = exclusion_radius;
  report.points.resize(total);
  std::vector<char> failed(total, 0);

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;
  const auto worker = [&]() {
    try {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= total) break;
        const Character chi = grid_character(i, grid, h);
        try {
          report.points[i] = spectrum_from(p, m, chi);
        } catch (const MathError&) {
          report.points[i].character = chi;
          report.points[i].rho = std::numeric_limits<double>::quiet_NaN();
          report.points[i].gamma = std::numeric_limits<double>::quiet_NaN();
          failed[i] = 1;
        } catch (const NumericError&) {
          report.points[i].character = chi;
          report.points[i].rho = std::numeric_limits<double>::quiet_NaN();
          report.points[i].gamma = std::numeric_limits<double>::quiet_NaN();
          failed[i] = 1;
        }
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(fatal_mutex);
      if (!fatal) fatal = std::current_exception();
    }
  };

  const int nthreads = std::max(1, jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  for (std::size_t i = 0; i < total; ++i) {
    if (failed[i]) report.failed_points.push_back(i);
  }
  if (failed[0]) {
    throw NumericError("rho_scan: evaluation failed at the trivial character");
  }
  report.K = report.points[0].rho;  // grid index 0 is phi_0

  bool found = false;
  double max_outside = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    if (failed[i]) continue;
    const double dist = report.points[i].character.distance_to_trivial();
    if (dist > exclusion_radius) {
      if (!found || report.points[i].rho > max_outside) max_outside = report.points[i].rho;
      found = true;
    }
  }
  if (found) report.delta = report.K - max_outside;
  return report;
}

}  // namespace

SpectrumReport spectrum(const LaurentMatrix& m, const Character& chi) {
  return spectrum_from(char_poly(m), &m, chi);
}

SpectrumReport spectrum(const UPoly& p, const Character& chi) {
  return spectrum_from(p, nullptr, chi);
}

double gap_certificate(const LaurentMatrix& m, const Character& chi) {
  if (chi.num_vars() != m.num_vars()) {
    throw MathError("gap_certificate: character/matrix variable-count mismatch");
  }
  double c = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      const LaurentPoly& e = m.at(i, j);
      if (e.is_zero() || !is_positive(e)) {
        throw MathError("gap_certificate: entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") must be nonzero with positive coefficients");
      }
      const double num = std::abs(eval_character(e, chi));
      const double den = e.coefficient_sum().convert_to<double>();
      c = std::max(c, num / den);
    }
  }
  return std::min(c, 1.0);
}

ScanReport rho_scan(const LaurentMatrix& m, int grid, double exclusion_radius, int jobs) {
  const UPoly p = char_poly(m);
  return scan_impl(p, &m, grid, exclusion_radius, jobs);
}

ScanReport rho_scan(const UPoly& p, int grid, double exclusion_radius, int jobs) {
  return scan_impl(p, nullptr, grid, exclusion_radius, jobs);
}

std::vector<Character> torsion_characters(int rank, int max_order) {
  if (rank < 1) throw MathError("torsion_characters: rank must be >= 1");
  if (max_order < 1) throw MathError("torsion_characters: max_order must be >= 1");
  std::vector<TurnCoord> coords;
  for (int b = 1; b <= max_order; ++b) {
    for (int a = 0; a < b; ++a) {
      if (std::gcd(a, b) == 1) coords.push_back(TurnCoord::rational(a, b));
    }
  }
  std::size_t total = 1;
  for (int j = 0; j < rank; ++j) {
    if (total > 5'000'000 / coords.size()) {
      throw MathError("torsion_characters: too many characters requested");
    }
    total *= coords.size();
  }
  std::vector<Character> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<TurnCoord> turns(static_cast<std::size_t>(rank));
    std::size_t rest = idx;
    for (int j = rank - 1; j >= 0; --j) {
      turns[static_cast<std::size_t>(j)] = coords[rest % coords.size()];
      rest /= coords.size();
    }
    out.emplace_back(std::move(turns));
  }
  return out;
}

void write_scan_csv(const ScanReport& report, std::ostream& os) {
  const int h = report.points.empty() ? 0 : report.points.front().character.num_vars();
  for (int j = 1; j <= h; ++j) os << "turn_" << j << ",";
  os << "rho,gamma\n";
  const auto saved_precision = os.precision(12);
  for (const auto& pt : report.points) {
    for (int j = 0; j < h; ++j) os << pt.character.coord(j).value() << ",";
    os << pt.rho << "," << pt.gamma << "\n";
  }
  os.precision(saved_precision);
}

}  // namespace lps
