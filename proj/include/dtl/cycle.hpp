#ifndef DTL_CYCLE_HPP
#define DTL_CYCLE_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "dtl/psi.hpp"

namespace dtl {

// A degree-1 form designated as basepoint for the reduced pairing.
class Hyperplane {
 public:
  explicit Hyperplane(Polynomial form);
  const Polynomial& form() const { return form_; }

 private:
  Polynomial form_;
};

// Formal integer-weighted sum of homogeneous polynomials of degree >= 1
// in a common space. Components with the same polynomial are merged and
// zero multiplicities dropped; negative multiplicities are allowed
// everywhere (group completion), effectivity is a predicate.
class Cycle {
 public:
  using Component = std::pair<Polynomial, mpz_class>;

  explicit Cycle(VariableSpace space) : space_(space) {}
  Cycle(VariableSpace space, std::vector<Component> components);

  static Cycle single(Polynomial p, mpz_class multiplicity = 1);

  const VariableSpace& space() const { return space_; }
  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  bool effective() const;

  bool operator==(const Cycle& o) const {
    return space_ == o.space_ && components_ == o.components_;
  }

  Cycle stabilized(VariableSpace larger) const;

  // Text format: `2*[x0^2 - 3*x1*x2] + -1*[x0]`. The empty cycle is `0`.
  std::string str() const;

 private:
  VariableSpace space_;
  std::vector<Component> components_;  // canonically sorted, merged
};

// Sum of multiplicity * deg(polynomial); 0 for the empty cycle.
mpz_class degree(const Cycle& c);

Cycle cycle_add(const Cycle& a, const Cycle& b);
Cycle cycle_neg(const Cycle& a);

// Biadditive extension of the divisor pairing: sum over component pairs
// of (a_i * b_j) * [f_i (x) g_j].
Cycle tensor_cycles(const Cycle& eta, const Cycle& xi,
                    std::uint64_t term_cap = kDefaultTermCap);

// True iff representing [f1] + [f2] by the product polynomial f1*f2 pairs
// consistently: tensor(f1*f2, g) == tensor(f1, g) * tensor(f2, g).
bool well_definedness_check(const Polynomial& f1, const Polynomial& f2,
                            const Polynomial& g,
                            std::uint64_t term_cap = kDefaultTermCap);

// The reduced pairing: eta(x)xi + eta(x)[xi0] + [eta0](x)xi.
Cycle reduced_tensor(const Cycle& eta, const Cycle& xi, const Hyperplane& eta0,
                     const Hyperplane& xi0, std::uint64_t term_cap = kDefaultTermCap);

}  // namespace dtl

#endif
