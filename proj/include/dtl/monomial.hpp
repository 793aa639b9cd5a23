#ifndef DTL_MONOMIAL_HPP
#define DTL_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dtl/space.hpp"

namespace dtl {

using IndexSeq = std::vector<VarIndex>;

// A monomial in canonical form: the sequence of variable indices of a
// fixed length (the degree), sorted non-decreasing. Degree 0 is the
// constant monomial. The order used everywhere is the basis order of the
// degree-d monomials: lexicographic on the sorted index sequence.
class Monomial {
 public:
  // Canonicalizes (sorts) and bounds-checks the given index sequence.
  Monomial(VariableSpace space, IndexSeq indices);

  const VariableSpace& space() const { return space_; }
  const IndexSeq& indices() const { return indices_; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(indices_.size()); }

  bool operator==(const Monomial& o) const {
    return space_ == o.space_ && indices_ == o.indices_;
  }

  // Exponent view: the run-length encoding of the sorted index sequence.
  struct VarPower {
    VarIndex var;
    std::uint32_t exp;
  };
  std::vector<VarPower> powers() const;

  std::string str() const;

 private:
  VariableSpace space_;
  IndexSeq indices_;
};

// Total order on same-space, same-degree monomials: lexicographic on the
// sorted index sequences. Throws ShapeError on space or degree mismatch.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

}  // namespace dtl

#endif
