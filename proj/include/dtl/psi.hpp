#ifndef DTL_PSI_HPP
#define DTL_PSI_HPP

#include <cstdint>
#include <vector>

#include "dtl/polynomial.hpp"

namespace dtl {

// Validated input of the multilinear pairing: e polynomials of degree d
// in X(n) and d polynomials of degree e in Y(m). The slot counts are tied
// to the degrees of the opposite family.
struct PsiInput {
  std::vector<Polynomial> xs;
  std::vector<Polynomial> ys;

  PsiInput(std::vector<Polynomial> xs_, std::vector<Polynomial> ys_);

  std::uint32_t e() const { return static_cast<std::uint32_t>(xs.size()); }
  std::uint32_t d() const { return static_cast<std::uint32_t>(ys.size()); }
};

// One basis choice per slot, as raw index rows: row a of xrows is the
// sorted index sequence of the a-th x-monomial (e rows of length d), row b
// of yrows that of the b-th y-monomial (d rows of length e).
struct MonomialGrid {
  std::vector<std::vector<std::uint32_t>> xrows;
  std::vector<std::vector<std::uint32_t>> yrows;
};

// The grid rule: position b of x-copy a pairs with position a of y-copy b,
//
//   prod_{a=1..e} prod_{b=1..d} z[xrows[a][b], yrows[b][a]]
//
// giving a degree d*e monomial in the z variables.
Monomial psi_monomial(const MonomialGrid& grid, const VariableSpace& zspace);

// Full multilinear expansion over one monomial choice per slot.
Polynomial psi(const PsiInput& input, std::uint64_t term_cap = kDefaultTermCap);

// The divisor pairing: psi on e copies of f and d copies of g, where
// d = deg f and e = deg g. Naive expansion; this is the reference path.
Polynomial tensor_divisor(const Polynomial& f, const Polynomial& g,
                          std::uint64_t term_cap = kDefaultTermCap);

// Same value as tensor_divisor, computed by expanding only the x slots
// and factoring each choice into a product of d column polynomials.
Polynomial tensor_fast(const Polynomial& f, const Polynomial& g,
                       std::uint64_t term_cap = kDefaultTermCap);

// For linear f, the pairing as an iterated suspension: substitutes
// y_j -> f(z[0,j], ..., z[n-1,j]) into g. Equals tensor_divisor(f, g);
// the equality is asserted by tests, not assumed here.
Polynomial suspend_linear(const Polynomial& f, const Polynomial& g,
                          std::uint64_t term_cap = kDefaultTermCap);

}  // namespace dtl

#endif
