#ifndef DTL_GRADED_HPP
#define DTL_GRADED_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dtl/errors.hpp"

namespace dtl {

struct Generator {
  std::string name;
  std::uint32_t weight;
};

// A truncated graded polynomial ring over the rationals. The declaration
// order of the generators fixes the lex order used for rendering. Products
// whose weight would exceed the truncation weight raise an error rather
// than silently vanishing. A ring may be split into a left and a right
// block of generators; such rings render monomials as `left(x)right`.
class GradedRing {
 public:
  static std::shared_ptr<const GradedRing> make(std::vector<Generator> gens,
                                                std::uint32_t top_weight);
  // Bigraded variant: the first `left_count` generators form the left factor.
  static std::shared_ptr<const GradedRing> make_bigraded(std::vector<Generator> gens,
                                                         std::size_t left_count,
                                                         std::uint32_t top_weight);

  const std::vector<Generator>& generators() const { return gens_; }
  std::uint32_t top_weight() const { return top_weight_; }
  bool bigraded() const { return left_count_ > 0; }
  std::size_t left_count() const { return left_count_; }

  std::size_t index_of(const std::string& name) const;
  std::uint32_t weight_of(const std::vector<std::uint32_t>& exps) const;
  // Weight of the left-block part of a monomial (0 for plain rings).
  std::uint32_t left_weight_of(const std::vector<std::uint32_t>& exps) const;

 private:
  std::vector<Generator> gens_;
  std::size_t left_count_ = 0;
  std::uint32_t top_weight_ = 0;
};

using Ring = std::shared_ptr<const GradedRing>;

// Same generator names and weights in the same order.
bool same_generators(const GradedRing& a, const GradedRing& b);

// Element of a GradedRing: exact rational coefficients on exponent-vector
// monomials, every monomial of weight <= the ring's truncation weight.
class GradedClass {
 public:
  using ExpVec = std::vector<std::uint32_t>;
  using TermMap = std::map<ExpVec, mpq_class>;

  explicit GradedClass(Ring ring) : ring_(std::move(ring)) {}

  static GradedClass zero(Ring ring) { return GradedClass(std::move(ring)); }
  static GradedClass one(Ring ring);
  static GradedClass generator(Ring ring, const std::string& name);
  static GradedClass monomial(Ring ring, ExpVec exps, mpq_class coeff = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // True when every monomial has the given total weight (vacuously for 0).
  bool homogeneous_of_weight(std::uint32_t w) const;

  mpq_class coefficient(const ExpVec& exps) const;

  bool operator==(const GradedClass& o) const;

  // Monomials in decreasing graded-lex order; bigraded rings order by
  // left-block weight first and render `i4(x)1 + i2(x)i2~ + 1(x)i4~`.
  std::string str() const;
  static std::string monomial_str(const GradedRing& ring, const ExpVec& exps);

  friend GradedClass add(const GradedClass& p, const GradedClass& q);
  friend GradedClass sub(const GradedClass& p, const GradedClass& q);
  friend GradedClass mul(const GradedClass& p, const GradedClass& q);
  friend GradedClass mul(const GradedClass& p, const mpq_class& c);

 private:
  Ring ring_;
  TermMap terms_;
};

GradedClass add(const GradedClass& p, const GradedClass& q);
GradedClass sub(const GradedClass& p, const GradedClass& q);
GradedClass mul(const GradedClass& p, const GradedClass& q);
GradedClass mul(const GradedClass& p, const mpq_class& c);
GradedClass pow(const GradedClass& p, std::uint32_t k);

// Assignment from the generators of a source ring to classes of a target
// ring, weight-preserving, extended multiplicatively.
class RingMap {
 public:
  RingMap(Ring source, Ring target, std::vector<GradedClass> images);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }

  GradedClass apply(const GradedClass& c) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<GradedClass> images_;
};

}  // namespace dtl

#endif
