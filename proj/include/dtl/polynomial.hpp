#ifndef DTL_POLYNOMIAL_HPP
#define DTL_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dtl/monomial.hpp"

namespace dtl {

// Expanded intermediates above this many terms abort with ResourceError.
inline constexpr std::uint64_t kDefaultTermCap = 1'000'000;

// Sparse homogeneous polynomial with exact integer coefficients.
// Term keys are canonical (sorted) index sequences, so the term map order
// is the basis order and equality is equality of term tables. The zero
// polynomial keeps an explicit degree so homogeneity checks stay total.
// Values are immutable after construction; all operations are pure.
class Polynomial {
 public:
  using TermMap = std::map<IndexSeq, mpz_class>;

  // The zero polynomial of the given degree.
  Polynomial(VariableSpace space, std::uint32_t degree)
      : space_(space), degree_(degree) {}

  // Validates homogeneity, bounds and canonical keys; drops zero coefficients.
  static Polynomial from_terms(VariableSpace space, std::uint32_t degree, TermMap terms);

  // Single-term polynomial coeff * m.
  static Polynomial term(Monomial m, mpz_class coeff);

  // The degree-1 polynomial for one variable of the space.
  static Polynomial variable(VariableSpace space, VarIndex v);

  const VariableSpace& space() const { return space_; }
  std::uint32_t degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Monomial term_monomial(const IndexSeq& key) const { return Monomial(space_, key); }

  bool operator==(const Polynomial& o) const {
    return space_ == o.space_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  Polynomial negated() const;

  // Re-house in a larger space of the same family; the term table is
  // unchanged since variables are named by their indices.
  Polynomial stabilized(VariableSpace larger) const;

  // Canonical text rendering: terms in decreasing lex order (x0-heavy
  // monomials first), coefficient then '*'-separated variables with '^'
  // powers. The golden-file format.
  std::string str() const;

 private:
  VariableSpace space_;
  std::uint32_t degree_;
  TermMap terms_;
};

// Coefficient-wise sum. Operands must share space and degree; a zero
// operand adopts the other's degree.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);

Polynomial mul(const Polynomial& p, const Polynomial& q,
               std::uint64_t term_cap = kDefaultTermCap);
Polynomial mul(const Polynomial& p, const mpz_class& c);

// Replaces variable t of g by images[t], expanded and canonicalized.
// images must be one homogeneous polynomial per variable of g's space,
// all of one degree in one common space.
Polynomial substitute(const Polynomial& g, const std::vector<Polynomial>& images,
                      std::uint64_t term_cap = kDefaultTermCap);

}  // namespace dtl

#endif
