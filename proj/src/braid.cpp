#include "lps/braid.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "lps/errors.hpp"

namespace lps {

namespace {

void check_strands(int strands) {
  if (strands < 2) throw ParseError("braid: strand count must be >= 2");
}

// Calibrated reduced-Burau generator image of sigma_i (1 <= i <= n-1) as a
// (n-1)x(n-1) matrix over num_vars variables, with the crossing variable at
// index var. Identity except row i-1 (0-based):
//   column i-2 -> -t_var, column i-1 -> t_var, column i -> 1.
LaurentMatrix burau_generator(int strands, int i, int num_vars, int var) {
  const int m = strands - 1;
  LaurentMatrix g = LaurentMatrix::identity(m, num_vars);
  const int r = i - 1;
  const LaurentPoly tv = LaurentPoly::variable(num_vars, var);
  g.at(r, r) = tv;
  if (r - 1 >= 0) g.at(r, r - 1) = -tv;
  if (r + 1 < m) g.at(r, r + 1) = LaurentPoly::constant(num_vars, 1);
  return g;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  check_strands(strands);
  BraidWord w;
  w.strands = strands;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n') {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    bool inverse = false;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      inverse = true;
      token.remove_suffix(3);
    }
    if (token.size() < 2 || token[0] != 's') {
      throw ParseError("braid: unknown token '" + std::string(token) + "'");
    }
    int k = 0;
    const auto r = std::from_chars(token.data() + 1, token.data() + token.size(), k);
    if (r.ec != std::errc{} || r.ptr != token.data() + token.size()) {
      throw ParseError("braid: unknown token '" + std::string(token) + "'");
    }
    if (k < 1 || k > strands - 1) {
      throw ParseError("braid: generator s" + std::to_string(k) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
    w.letters.push_back(inverse ? -k : k);
  }
  return w;
}

std::vector<int> strand_permutation(const BraidWord& w) {
  check_strands(w.strands);
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 1);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i > w.strands - 1) {
      throw ParseError("braid: letter " + std::to_string(letter) + " out of range");
    }
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  }
  return perm;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  check_strands(w.strands);
  const int m = w.strands - 1;
  LaurentMatrix result = LaurentMatrix::identity(m, 1);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i > w.strands - 1) {
      throw ParseError("braid: letter " + std::to_string(letter) + " out of range");
    }
    const LaurentMatrix g = burau_generator(w.strands, i, 1, 0);
    result = mat_mul(result, letter > 0 ? g : inverse_unit_det(g));
  }
  return result;
}

LaurentMatrix gassner(const BraidWord& w) {
  check_strands(w.strands);
  {
    const std::vector<int> perm = strand_permutation(w);
    bool pure = true;
    for (std::size_t p = 0; p < perm.size(); ++p) {
      if (perm[p] != static_cast<int>(p) + 1) pure = false;
    }
    if (!pure) {
      std::string images;
      for (std::size_t p = 0; p < perm.size(); ++p) {
        if (!images.empty()) images += " ";
        images += std::to_string(p + 1) + "->" + std::to_string(perm[p]);
      }
      throw MathError("gassner: word is not a pure braid; strand permutation is " + images);
    }
  }

  const int n = w.strands;
  const int m = n - 1;
  // Colored-Burau groupoid: walk the word tracking which strand occupies
  // each position; a positive crossing sigma_i at state rho contributes the
  // generator in the variable of the strand at position i, an inverse letter
  // contributes the exact inverse of the generator the forward crossing
  // would use (so that s_i s_i^-1 cancels exactly).
  std::vector<int> state(static_cast<std::size_t>(n));
  std::iota(state.begin(), state.end(), 1);
  LaurentMatrix result = LaurentMatrix::identity(m, n);
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (letter > 0) {
      const int color = state[static_cast<std::size_t>(i - 1)];
      result = mat_mul(result, burau_generator(n, i, n, color - 1));
    } else {
      const int color = state[static_cast<std::size_t>(i)];
      result = mat_mul(result, inverse_unit_det(burau_generator(n, i, n, color - 1)));
    }
    std::swap(state[static_cast<std::size_t>(i - 1)], state[static_cast<std::size_t>(i)]);
  }
  return result;
}

LaurentMatrix specialize_variables_equal(const LaurentMatrix& m) {
  LaurentMatrix out(m.dim(), 1);
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = collapse_variables(m.at(i, j));
  }
  return out;
}

}  // namespace lps
