#ifndef LPS_BRAID_HPP
#define LPS_BRAID_HPP

#include <string_view>
#include <vector>

#include "lps/lpmat.hpp"

namespace lps {

// The reduced-Burau generator images used here are the standard ones with
// the variable negated (t replaced by -t). This is the calibration choice
// fixed by the requirement that for n = 3 the word s1 s2^-1 has
// characteristic polynomial u^2 - (1+t+t^-1)u + 1 exactly; with the
// substitution baked into the generators, no output post-processing is
// needed. See README for the convention note.
inline constexpr bool kBurauConventionNegatesVariable = true;

struct BraidWord {
  int strands = 2;
  // Signed generator indices, +-1 ... +-(strands-1); applied left to right.
  std::vector<int> letters;

  bool operator==(const BraidWord& other) const = default;
};

// Parses whitespace-separated tokens `s<k>` / `s<k>^-1` with 1 <= k <= n-1.
// Throws ParseError on unknown tokens or out-of-range generators.
BraidWord parse_braid(std::string_view text, int strands);

// The induced permutation of strands: result[p-1] is the starting strand
// that ends at position p (1-based). Identity permutation iff pure.
std::vector<int> strand_permutation(const BraidWord& w);

// Reduced Burau matrix: 1 variable, dimension n-1, product of calibrated
// generator images (inverse letters via exact adjugate inverse).
LaurentMatrix reduced_burau(const BraidWord& w);

// Reduced Gassner matrix of a pure braid: n variables t_1..t_n, dimension
// n-1, via the colored-Burau groupoid (each crossing uses the variable of
// the strand currently in the left position of the crossing). Substituting
// every t_i by one variable t recovers reduced_burau(w) exactly. Throws
// MathError naming the permutation when w is not pure.
LaurentMatrix gassner(const BraidWord& w);

// Entrywise substitution of all variables by a single variable t (the
// all-equal specialization used to compare gassner with reduced_burau).
LaurentMatrix specialize_variables_equal(const LaurentMatrix& m);

}  // namespace lps

#endif  // LPS_BRAID_HPP
