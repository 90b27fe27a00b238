#include "lps/lpmat.hpp"

#include <sstream>
#include <utility>

#include "lps/errors.hpp"

namespace lps {

LaurentMatrix::LaurentMatrix(int dim, int num_vars)
    : dim_(dim),
      num_vars_(num_vars),
      entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
               LaurentPoly(num_vars)) {
  if (dim < 1) throw MathError("LaurentMatrix: dim must be >= 1");
}

LaurentMatrix::LaurentMatrix(int dim, int num_vars, std::vector<LaurentPoly> entries)
    : dim_(dim), num_vars_(num_vars), entries_(std::move(entries)) {
  if (dim < 1) throw MathError("LaurentMatrix: dim must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw MathError("LaurentMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (e.num_vars() != num_vars_) {
      throw MathError("LaurentMatrix: entry variable count " + std::to_string(e.num_vars()) +
                      " does not match matrix " + std::to_string(num_vars_));
    }
  }
}

LaurentMatrix LaurentMatrix::identity(int dim, int num_vars) {
  LaurentMatrix m(dim, num_vars);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(num_vars, 1);
  return m;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < dim_; ++j) {
      if (j > 0) os << ", ";
      os << at(i, j).str();
    }
    os << "]" << (i + 1 == dim_ ? "]" : "\n");
  }
  return os.str();
}

LaurentPoly trace(const LaurentMatrix& m) {
  LaurentPoly t(m.num_vars());
  for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim() != b.dim() || a.num_vars() != b.num_vars()) {
    throw MathError("mat_mul: dimension or variable-count mismatch");
  }
  LaurentMatrix c(a.dim(), a.num_vars());
  for (int i = 0; i < a.dim(); ++i) {
    for (int k = 0; k < a.dim(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.dim(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

LaurentMatrix mat_pow(const LaurentMatrix& a, int k) {
  if (k < 1) throw MathError("mat_pow: exponent must be >= 1");
  LaurentMatrix base = a;
  LaurentMatrix result = LaurentMatrix::identity(a.dim(), a.num_vars());
  int e = k;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  const int n = m.dim();
  if (n == 1) return m.at(0, 0);
  LaurentPoly det(m.num_vars());
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    LaurentMatrix minor(n - 1, m.num_vars());
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    LaurentPoly term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

namespace {

// Is p a unit +-t^a of the Laurent ring? If so report sign and exponents.
std::optional<UnitMonomial> as_unit(const LaurentPoly& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return UnitMonomial{c > 0 ? 1 : -1, e};
}

}  // namespace

LaurentMatrix inverse_unit_det(const LaurentMatrix& m) {
  const LaurentPoly det = det_cofactor(m);
  const auto unit = as_unit(det);
  if (!unit) {
    throw MathError("inverse_unit_det: determinant " + det.str() + " is not a unit");
  }
  // det^-1 = sign * t^-a
  Exponents inv_e = unit->exponents;
  for (auto& x : inv_e) x = -x;
  const LaurentPoly det_inv =
      LaurentPoly::monomial(m.num_vars(), std::move(inv_e), unit->sign);

  const int n = m.dim();
  LaurentMatrix inv(n, m.num_vars());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Cofactor expansion: inv[i][j] = det^-1 * (-1)^(i+j) * minor(j, i).
      LaurentMatrix minor(n > 1 ? n - 1 : 1, m.num_vars());
      if (n == 1) {
        inv.at(0, 0) = det_inv;
        continue;
      }
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      LaurentPoly cof = det_cofactor(minor) * det_inv;
      inv.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return inv;
}

PFReport primitivity(const LaurentMatrix& m) {
  const int n = m.dim();
  // Entries must be zero or have strictly positive coefficients so that
  // support powering is free of cancellation.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LaurentPoly& e = m.at(i, j);
      if (!e.is_zero() && !is_positive(e)) {
        throw MathError("primitivity: entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") has a non-positive coefficient; mixed-sign matrices are not "
                        "certified by support powering");
      }
    }
  }

  std::vector<char> base(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) base[static_cast<std::size_t>(i) * n + j] = !m.at(i, j).is_zero();
  }
  const auto all_ones = [n](const std::vector<char>& p) {
    for (char x : p) {
      if (!x) return false;
    }
    return true;
  };
  const auto bool_mul = [n](const std::vector<char>& a, const std::vector<char>& b) {
    std::vector<char> c(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (!a[static_cast<std::size_t>(i) * n + k]) continue;
        for (int j = 0; j < n; ++j) {
          if (b[static_cast<std::size_t>(k) * n + j]) c[static_cast<std::size_t>(i) * n + j] = 1;
        }
      }
    }
    return c;
  };

  const int bound = wielandt_bound(n);
  std::vector<char> power = base;
  for (int k = 1; k <= bound; ++k) {
    if (all_ones(power)) {
      return PFReport{true, k, std::nullopt};
    }
    if (k < bound) power = bool_mul(power, base);
  }
  // Not primitive: witness the first entry (row-major) still zero at the
  // Wielandt bound.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!power[static_cast<std::size_t>(i) * n + j]) {
        return PFReport{false, std::nullopt, std::make_pair(i + 1, j + 1)};
      }
    }
  }
  return PFReport{false, std::nullopt, std::nullopt};  // unreachable
}

int uniform_spread_exponent(const LaurentMatrix& m, int var) {
  if (var < 0 || var >= m.num_vars()) {
    throw MathError("uniform_spread_exponent: variable index out of range");
  }
  const PFReport pf = primitivity(m);
  if (!pf.primitive) {
    throw MathError("uniform_spread_exponent: matrix is not primitive");
  }
  const int bound = 3 * wielandt_bound(m.dim());
  LaurentMatrix power = m;
  for (int k = 1; k <= bound; ++k) {
    bool uniform = true;
    for (int i = 0; uniform && i < m.dim(); ++i) {
      for (int j = 0; uniform && j < m.dim(); ++j) {
        const LaurentPoly& e = power.at(i, j);
        if (e.is_zero() || spread(e, var) < 1) uniform = false;
      }
    }
    if (uniform) return k;
    if (k < bound) power = mat_mul(power, m);
  }
  throw MathError("uniform_spread_exponent: spread never uniform within " +
                  std::to_string(bound) + " powers (all entries constant in the variable?)");
}

namespace {

// Divides every coefficient of p by the integer k, asserting exactness.
LaurentPoly divide_by_int_exact(const LaurentPoly& p, int k) {
  TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (c % k != 0) {
      throw MathError("char_poly: integrality assertion failed (coefficient " + c.str() +
                      " not divisible by " + std::to_string(k) + ")");
    }
    out.emplace(e, c / k);
  }
  return LaurentPoly(p.num_vars(), std::move(out));
}

}  // namespace

UPoly char_poly(const LaurentMatrix& m) {
  const int n = m.dim();
  const int h = m.num_vars();
  // Faddeev-LeVerrier: N_0 = I, M_k = M * N_{k-1}, c_k = -tr(M_k)/k,
  // N_k = M_k + c_k * I. Then det(uI - M) = u^n + c_1 u^(n-1) + ... + c_n.
  std::vector<LaurentPoly> c(static_cast<std::size_t>(n) + 1, LaurentPoly(h));
  c[0] = LaurentPoly::constant(h, 1);
  LaurentMatrix nmat = LaurentMatrix::identity(n, h);
  for (int k = 1; k <= n; ++k) {
    LaurentMatrix mk = mat_mul(m, nmat);
    c[static_cast<std::size_t>(k)] = -divide_by_int_exact(trace(mk), k);
    nmat = mk;
    for (int i = 0; i < n; ++i) nmat.at(i, i) += c[static_cast<std::size_t>(k)];
  }
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(n) + 1, LaurentPoly(h));
  for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(n - k)] = c[static_cast<std::size_t>(k)];
  return UPoly(h, std::move(coeffs));
}

UPoly::UPoly(int num_vars, std::vector<LaurentPoly> coeffs)
    : num_vars_(num_vars), coeffs_(std::move(coeffs)) {
  for (const auto& p : coeffs_) {
    if (p.num_vars() != num_vars_) {
      throw MathError("UPoly: coefficient variable count mismatch");
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::from_int_coeffs(const std::vector<long long>& coeffs, int num_vars) {
  std::vector<LaurentPoly> cs;
  cs.reserve(coeffs.size());
  for (long long v : coeffs) cs.push_back(LaurentPoly::constant(num_vars, v));
  return UPoly(num_vars, std::move(cs));
}

LaurentPoly UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return LaurentPoly(num_vars_);
  return coeffs_[static_cast<std::size_t>(k)];
}

const LaurentPoly& UPoly::leading() const {
  if (coeffs_.empty()) throw MathError("UPoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool UPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == LaurentPoly::constant(num_vars_, 1);
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (num_vars_ != rhs.num_vars_) throw MathError("UPoly add: variable-count mismatch");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), LaurentPoly(num_vars_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (num_vars_ != rhs.num_vars_) throw MathError("UPoly sub: variable-count mismatch");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), LaurentPoly(num_vars_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.num_vars() != b.num_vars()) throw MathError("UPoly mul: variable-count mismatch");
  if (a.is_zero() || b.is_zero()) return UPoly(a.num_vars());
  std::vector<LaurentPoly> out(a.coeffs().size() + b.coeffs().size() - 1,
                               LaurentPoly(a.num_vars()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return UPoly(a.num_vars(), std::move(out));
}

UPoly UPoly::operator-() const {
  std::vector<LaurentPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& p : coeffs_) out.push_back(-p);
  return UPoly(num_vars_, std::move(out));
}

LaurentPoly UPoly::eval_at(const LaurentPoly& value) const {
  if (value.num_vars() != num_vars_) throw MathError("UPoly eval: variable-count mismatch");
  LaurentPoly acc(num_vars_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * value + *it;
  }
  return acc;
}

std::string UPoly::str(std::span<const std::string> names) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const LaurentPoly& p = coeffs_[static_cast<std::size_t>(k)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool needs_parens = p.term_count() > 1;
    if (k == 0) {
      os << (needs_parens ? "(" + p.str(names) + ")" : p.str(names));
      continue;
    }
    if (p == LaurentPoly::constant(num_vars_, 1)) {
      os << "u";
    } else if (needs_parens) {
      os << "(" << p.str(names) << ")*u";
    } else {
      os << p.str(names) << "*u";
    }
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPolyDivMod upoly_divmod(const UPoly& t, const UPoly& d) {
  if (t.num_vars() != d.num_vars()) throw MathError("upoly_divmod: variable-count mismatch");
  if (d.is_zero()) throw MathError("upoly_divmod: division by zero polynomial");
  const auto lead_unit = as_unit(d.leading());
  if (!lead_unit) {
    throw MathError("upoly_divmod: leading coefficient " + d.leading().str() +
                    " is not a unit of the Laurent ring");
  }
  Exponents inv_e = lead_unit->exponents;
  for (auto& x : inv_e) x = -x;
  const LaurentPoly lead_inv =
      LaurentPoly::monomial(d.num_vars(), std::move(inv_e), lead_unit->sign);

  UPoly rem = t;
  std::vector<LaurentPoly> quot;
  if (rem.degree() >= d.degree()) {
    quot.assign(static_cast<std::size_t>(rem.degree() - d.degree()) + 1,
                LaurentPoly(t.num_vars()));
  }
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    LaurentPoly q = rem.leading() * lead_inv;
    std::vector<LaurentPoly> sub(static_cast<std::size_t>(shift + d.degree()) + 1,
                                 LaurentPoly(t.num_vars()));
    for (int k = 0; k <= d.degree(); ++k) {
      sub[static_cast<std::size_t>(k + shift)] = q * d.coeff(k);
    }
    rem -= UPoly(t.num_vars(), std::move(sub));
    quot[static_cast<std::size_t>(shift)] = std::move(q);
  }
  return UPolyDivMod{UPoly(t.num_vars(), std::move(quot)), std::move(rem)};
}

std::optional<UPoly> upoly_divide_exact(const UPoly& t, const UPoly& d) {
  if (t.num_vars() != d.num_vars()) throw MathError("upoly_divide_exact: variable-count mismatch");
  if (d.is_zero()) throw MathError("upoly_divide_exact: division by zero polynomial");
  if (t.is_zero()) return UPoly(t.num_vars());
  if (t.degree() < d.degree()) return std::nullopt;

  // Stepwise reduction by the leading term. Over an integral domain this is
  // complete: if d*q = t then lead(d)*lead(q) = lead(t), so every step's
  // Laurent division succeeds exactly when divisibility holds.
  UPoly rem = t;
  std::vector<LaurentPoly> quot(static_cast<std::size_t>(t.degree() - d.degree()) + 1,
                                LaurentPoly(t.num_vars()));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto q = divide_exact(rem.leading(), d.leading());
    if (!q) return std::nullopt;
    const int shift = rem.degree() - d.degree();
    std::vector<LaurentPoly> sub(static_cast<std::size_t>(shift + d.degree()) + 1,
                                 LaurentPoly(t.num_vars()));
    for (int k = 0; k <= d.degree(); ++k) {
      sub[static_cast<std::size_t>(k + shift)] = *q * d.coeff(k);
    }
    rem -= UPoly(t.num_vars(), std::move(sub));
    quot[static_cast<std::size_t>(shift)] = *q;
  }
  if (!rem.is_zero()) return std::nullopt;
  return UPoly(t.num_vars(), std::move(quot));
}

}  // namespace lps
