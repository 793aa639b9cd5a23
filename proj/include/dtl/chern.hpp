#ifndef DTL_CHERN_HPP
#define DTL_CHERN_HPP

#include "dtl/graded.hpp"

namespace dtl {

// Ring Q[c1(L), c1(E), ..., cr(E)] with weight(cj(E)) = j, truncated at r.
Ring chern_ring(std::uint32_t rank);
// Ring Q[t1..tr, u] of formal roots (r roots of E plus the root of L).
Ring chern_root_ring(std::uint32_t rank);
// Ring Q[t1..tr], the domain of the symmetric reduction.
Ring symmetric_ring(std::uint32_t rank);
// Ring Q[e1..er] of elementary symmetric generators, weight(ej) = j.
Ring elementary_ring(std::uint32_t rank);
// Ring Q[w] truncated at weight n (the cohomology of projective n-space).
Ring omega_ring(std::uint32_t n);
// Bigraded ring Q[i2..i_{2p}] (x) Q[i2~..i_{2q}~], weight(i_{2j}) = j.
Ring kclass_ring(std::uint32_t p, std::uint32_t q);

// The weight-i class sum_j C(r-j, i-j) * cj(E) * c1(L)^(i-j), 1 <= i <= r.
GradedClass chern_tensor_formula(std::uint32_t rank, std::uint32_t index);

// Splitting-principle route to the same class: expand prod_k (1 + t_k + u),
// take the weight-i part, reduce the symmetric t-part to elementary
// symmetric generators, and substitute ej -> cj(E), u -> c1(L). Verifies
// its own reductions by back-substitution.
GradedClass chern_tensor_oracle(std::uint32_t rank, std::uint32_t index);

// e_j(t1..tr) expanded in symmetric_ring(rank).
GradedClass elementary_symmetric(std::uint32_t rank, std::uint32_t j);

// Unique representation of a symmetric polynomial in elementary symmetric
// generators, by leading-term subtraction with graded-lex leading terms.
// Throws DomainError if the input is not symmetric.
GradedClass reduce_to_elementary(const GradedClass& p);

// The weight-k class sum_j C(p-j, k-j) * i_{2j} (x) i~_{2(k-j)} in
// kclass_ring(p, k); asserts its coefficients match
// chern_tensor_formula(p, k) under i_{2j} -> cj(E), i~_{2l} -> c1(L)^l.
GradedClass pairing_pullback_coefficients(std::uint32_t p, std::uint32_t k);

// w^k in omega_ring(n). k > n is a domain error (the truncation kills the
// class; reported, not silently zeroed).
GradedClass hurewicz_pullback(std::uint32_t k, std::uint32_t n);

// C(n, k) as an exact rational.
mpq_class binomial(std::uint32_t n, std::uint32_t k);

}  // namespace dtl

#endif
