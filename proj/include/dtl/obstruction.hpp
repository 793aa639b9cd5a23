#ifndef DTL_OBSTRUCTION_HPP
#define DTL_OBSTRUCTION_HPP

#include "dtl/chern.hpp"

namespace dtl {

// One row of the coefficient comparison: for the named monomial,
//   lhs = c0 + ca*a + cb*b
struct CoefficientRow {
  std::string monomial;
  mpq_class lhs;
  mpq_class c0;
  mpq_class ca;
  mpq_class cb;

  // "lhs 0 = rhs 2b" style rendering of the row.
  std::string str() const;
};

struct ObstructionSolution {
  mpq_class a;
  mpq_class b;
  std::vector<CoefficientRow> rows;  // every monomial of either side
  GradedClass side_one;              // sum of the two rank-2 tensor classes
  GradedClass side_two_base;         // a/b independent part of side two
  GradedClass side_two_a;            // class multiplied by a
  GradedClass side_two_b;            // class multiplied by b
};

// Replays the degree-4 coefficient comparison between the two compositions
// of the restriction diagram in Q[l1, l2, e1, e2]: side one is the rank-2
// tensor formula instantiated for the two line factors, side two is the
// projection pullback with unknowns a, b placed by the pullback equations
// phi*(i4) = w^2(x)1 + 1(x)w^2 and phi*(i2)^2. Solves the resulting linear
// system exactly; the solution is (1, 0). Throws InternalError if the
// system is inconsistent or underdetermined.
ObstructionSolution obstruction_solve();

struct MembershipReport {
  bool member;
  GradedClass target;
  std::vector<GradedClass> image_basis;
  // Zero iff member; otherwise the witness part outside the image.
  GradedClass residual;
  // Coordinates of target in image_basis when member.
  std::vector<mpq_class> combination;
};

// Decides membership of a weight-2 class of kclass_ring(n, 2) in the image
// of the projection pullback, i.e. in the span of the weight-2 monomials
// that avoid every left generator above i2. Exact rational elimination.
MembershipReport membership_in_projection_image(const GradedClass& target);

// Membership test for the pulled-back class
//   a*(i4(x)1) + b*(i2^2(x)1) + i2(x)i2~ + 1(x)i4~
// with n >= 2 left generators. The solved values (1, 0) make it fail —
// the i4(x)1 coordinate is the witness; (0, 1) makes it pass.
MembershipReport obstruction_membership(std::uint32_t n, const mpq_class& a = 1,
                                        const mpq_class& b = 0);

}  // namespace dtl

#endif
