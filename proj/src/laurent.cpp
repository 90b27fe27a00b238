#include "lps/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "lps/errors.hpp"

namespace lps {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    throw MathError(std::string(op) + ": variable-count mismatch (" +
                    std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
  }
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars, TermMap terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.size()) != num_vars_) {
      throw MathError("LaurentPoly: exponent vector length " + std::to_string(it->first.size()) +
                      " does not match num_vars " + std::to_string(num_vars_));
    }
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPoly LaurentPoly::constant(int num_vars, Coeff c) {
  LaurentPoly p(num_vars);
  if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, Exponents exps, Coeff c) {
  TermMap m;
  m.emplace(std::move(exps), std::move(c));
  return LaurentPoly(num_vars, std::move(m));
}

LaurentPoly LaurentPoly::variable(int num_vars, int var, std::int32_t power) {
  if (var < 0 || var >= num_vars) {
    throw MathError("LaurentPoly::variable: index " + std::to_string(var) + " out of range");
  }
  Exponents e(num_vars, 0);
  e[var] = power;
  return monomial(num_vars, std::move(e), 1);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_vars(*this, rhs, "add");
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_vars(*this, rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b, "mul");
  TermMap out;
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int j = 0; j < a.num_vars(); ++j) e[j] = ea[j] + eb[j];
      auto [it, inserted] = out.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return LaurentPoly(a.num_vars(), std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::abs_coeffs() const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, abs(c));
  return out;
}

Coeff LaurentPoly::coefficient_sum() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Coeff mag = abs(c);
    std::string vars;
    for (int j = 0; j < num_vars_; ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      if (j < static_cast<int>(names.size())) {
        vars += names[j];
      } else if (num_vars_ == 1) {
        vars += "t";
      } else {
        vars += "t" + std::to_string(j + 1);
      }
      if (e[j] != 1) vars += "^" + std::to_string(e[j]);
    }
    if (vars.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << vars;
    }
  }
  return os.str();
}

LaurentPoly UnitMonomial::to_poly() const {
  return LaurentPoly::monomial(static_cast<int>(exponents.size()), exponents, sign);
}

int spread(const LaurentPoly& p, int var) {
  if (p.is_zero()) throw MathError("spread: undefined for the zero polynomial");
  if (var < 0 || var >= p.num_vars()) {
    throw MathError("spread: variable index " + std::to_string(var) + " out of range");
  }
  std::int32_t lo = p.terms().begin()->first[var];
  std::int32_t hi = lo;
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, e[var]);
    hi = std::max(hi, e[var]);
  }
  return hi - lo;
}

namespace {

// Value of exp(2*pi*i * num/den) for an exact fraction already reduced into
// [0, 1). The angle is folded into [0, 1/4] with exact integer comparisons so
// that conjugate turns r and 1-r yield bitwise-conjugate results, and the
// axis points 0, 1/4, 1/2, 3/4 are returned exactly.
std::complex<double> unit_at_turn(const Coeff& num, const Coeff& den) {
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (4 * num == 3 * den) return {0.0, -1.0};

  const auto angle_of = [](const Coeff& n, const Coeff& d) {
    return 2.0 * std::numbers::pi * (n.convert_to<double>() / d.convert_to<double>());
  };
  if (4 * num < den) {  // first quadrant
    const double a = angle_of(num, den);
    return {std::cos(a), std::sin(a)};
  }
  if (2 * num < den) {  // second quadrant, reflect to 1/2 - r
    const double a = angle_of(den - 2 * num, 2 * den);
    return {-std::cos(a), std::sin(a)};
  }
  if (4 * num < 3 * den) {  // third quadrant, shift to r - 1/2
    const double a = angle_of(2 * num - den, 2 * den);
    return {-std::cos(a), -std::sin(a)};
  }
  // fourth quadrant, reflect to 1 - r
  const double a = angle_of(den - num, den);
  return {std::cos(a), -std::sin(a)};
}

}  // namespace

std::complex<double> eval_character(const LaurentPoly& p, const Character& chi) {
  if (chi.num_vars() != p.num_vars()) {
    throw MathError("eval_character: character has " + std::to_string(chi.num_vars()) +
                    " coordinates, polynomial has " + std::to_string(p.num_vars()));
  }
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) {
    // Exact rational phase accumulation; decimal coordinates fall back to a
    // double-precision phase contribution.
    Coeff num = 0, den = 1;
    double extra = 0.0;
    bool has_extra = false;
    for (int j = 0; j < p.num_vars(); ++j) {
      if (e[j] == 0) continue;
      const TurnCoord& tc = chi.coord(j);
      if (tc.is_rational()) {
        num = num * tc.den() + Coeff(e[j]) * tc.num() * den;
        den *= tc.den();
        const Coeff g = gcd(num, den);
        if (g > 1) {
          num /= g;
          den /= g;
        }
      } else {
        extra += static_cast<double>(e[j]) * tc.value();
        has_extra = true;
      }
    }
    std::complex<double> w;
    if (!has_extra) {
      Coeff r = num % den;  // fold into [0, den)
      if (r < 0) r += den;
      w = unit_at_turn(r, den);
    } else {
      double total = num.convert_to<double>() / den.convert_to<double>() + extra;
      total -= std::floor(total);
      w = std::polar(1.0, 2.0 * std::numbers::pi * total);
    }
    sum += c.convert_to<double>() * w;
  }
  return sum;
}

double eval_positive(const LaurentPoly& p, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != p.num_vars()) {
    throw MathError("eval_positive: class has " + std::to_string(xi.size()) +
                    " coordinates, polynomial has " + std::to_string(p.num_vars()));
  }
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double dot = 0.0;
    for (int j = 0; j < p.num_vars(); ++j) dot += static_cast<double>(e[j]) * xi[j];
    sum += c.convert_to<double>() * std::exp(dot);
  }
  if (!std::isfinite(sum)) {
    throw NumericError("eval_positive: value exceeds double range");
  }
  return sum;
}

UnitNormalForm unit_normal_form(const LaurentPoly& p) {
  if (p.is_zero()) throw MathError("unit_normal_form: undefined for the zero polynomial");
  Exponents shift(p.num_vars());
  for (int j = 0; j < p.num_vars(); ++j) {
    std::int32_t lo = p.terms().begin()->first[j];
    for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[j]);
    shift[j] = lo;
  }
  TermMap shifted;
  for (const auto& [e, c] : p.terms()) {
    Exponents f(p.num_vars());
    for (int j = 0; j < p.num_vars(); ++j) f[j] = e[j] - shift[j];
    shifted.emplace(std::move(f), c);
  }
  // Leading term = lexicographically greatest exponent vector.
  const int sign = shifted.rbegin()->second > 0 ? 1 : -1;
  if (sign < 0) {
    for (auto& [e, c] : shifted) c = -c;
  }
  return UnitNormalForm{UnitMonomial{sign, std::move(shift)},
                        LaurentPoly(p.num_vars(), std::move(shifted))};
}

bool is_positive(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  for (const auto& [e, c] : p.terms()) {
    if (c <= 0) return false;
  }
  return true;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  check_same_vars(p, d, "divide_exact");
  if (d.is_zero()) throw MathError("divide_exact: division by zero");
  if (p.is_zero()) return LaurentPoly(p.num_vars());

  // Reduce to ordinary polynomial division: strip units so both operands have
  // minimal exponent 0 in each variable. Because ZZ[H] is a domain, minimal
  // exponents are additive under multiplication, so any Laurent quotient of
  // the normalized pair is itself an ordinary polynomial.
  const UnitNormalForm np = unit_normal_form(p);
  const UnitNormalForm nd = unit_normal_form(d);

  const int n = p.num_vars();
  TermMap rem = np.normal.terms();
  const TermMap& div = nd.normal.terms();
  const Exponents& lead_e = div.rbegin()->first;
  const Coeff& lead_c = div.rbegin()->second;

  TermMap quot;
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    // The leading term of the remainder must be reducible by the leading term
    // of the divisor, or divisibility fails.
    Exponents qe(n);
    for (int j = 0; j < n; ++j) {
      if (re[j] < lead_e[j]) return std::nullopt;
      qe[j] = re[j] - lead_e[j];
    }
    if (rc % lead_c != 0) return std::nullopt;
    Coeff qc = rc / lead_c;
    // rem -= (qc * t^qe) * div
    Exponents f(n);
    for (const auto& [de, dc] : div) {
      for (int j = 0; j < n; ++j) f[j] = de[j] + qe[j];
      auto [it, inserted] = rem.emplace(f, -qc * dc);
      if (!inserted) {
        it->second -= qc * dc;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.emplace(std::move(qe), std::move(qc));
  }

  // Reapply the stripped units: p = mu_p * np, d = mu_d * nd, np = nd * q0,
  // so p / d = (mu_p / mu_d) * q0.
  LaurentPoly q0(n, std::move(quot));
  Exponents ue(n);
  for (int j = 0; j < n; ++j) ue[j] = np.unit.exponents[j] - nd.unit.exponents[j];
  const UnitMonomial u{np.unit.sign * nd.unit.sign, std::move(ue)};
  return u.to_poly() * q0;
}

LaurentPoly collapse_variables(const LaurentPoly& p) {
  TermMap out;
  for (const auto& [e, c] : p.terms()) {
    std::int32_t total = 0;
    for (std::int32_t x : e) total += x;
    Exponents f{total};
    auto [it, inserted] = out.emplace(std::move(f), c);
    if (!inserted) it->second += c;
  }
  return LaurentPoly(1, std::move(out));
}

}  // namespace lps
