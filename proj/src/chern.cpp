#include "dtl/chern.hpp"

#include <algorithm>
#include <string>

namespace dtl {

namespace {

std::string cE(std::uint32_t j) { return "c" + std::to_string(j) + "(E)"; }

}  // namespace

Ring chern_ring(std::uint32_t rank) {
  std::vector<Generator> gens{{"c1(L)", 1}};
  for (std::uint32_t j = 1; j <= rank; ++j) gens.push_back({cE(j), j});
  return GradedRing::make(std::move(gens), rank);
}

Ring chern_root_ring(std::uint32_t rank) {
  std::vector<Generator> gens;
  for (std::uint32_t k = 1; k <= rank; ++k) gens.push_back({"t" + std::to_string(k), 1});
  gens.push_back({"u", 1});
  return GradedRing::make(std::move(gens), rank);
}

Ring symmetric_ring(std::uint32_t rank) {
  std::vector<Generator> gens;
  for (std::uint32_t k = 1; k <= rank; ++k) gens.push_back({"t" + std::to_string(k), 1});
  return GradedRing::make(std::move(gens), rank);
}

Ring elementary_ring(std::uint32_t rank) {
  std::vector<Generator> gens;
  for (std::uint32_t j = 1; j <= rank; ++j) gens.push_back({"e" + std::to_string(j), j});
  return GradedRing::make(std::move(gens), rank);
}

Ring omega_ring(std::uint32_t n) {
  return GradedRing::make({{"w", 1}}, n);
}

Ring kclass_ring(std::uint32_t p, std::uint32_t q) {
  std::vector<Generator> gens;
  for (std::uint32_t j = 1; j <= p; ++j) gens.push_back({"i" + std::to_string(2 * j), j});
  for (std::uint32_t l = 1; l <= q; ++l)
    gens.push_back({"i" + std::to_string(2 * l) + "~", l});
  return GradedRing::make_bigraded(std::move(gens), p, p + q);
}

mpq_class binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpq_class(b);
}

GradedClass chern_tensor_formula(std::uint32_t rank, std::uint32_t index) {
  if (rank < 1 || index < 1 || index > rank)
    throw DomainError("chern index must satisfy 1 <= index <= rank, got index " +
                      std::to_string(index) + ", rank " + std::to_string(rank));
  const Ring ring = chern_ring(rank);
  const GradedClass c1L = GradedClass::generator(ring, "c1(L)");
  GradedClass out = GradedClass::zero(ring);
  for (std::uint32_t j = 0; j <= index; ++j) {
    const GradedClass cj =
        j == 0 ? GradedClass::one(ring) : GradedClass::generator(ring, cE(j));
    GradedClass term = mul(mul(cj, pow(c1L, index - j)), binomial(rank - j, index - j));
    out = add(out, term);
  }
  return out;
}

GradedClass elementary_symmetric(std::uint32_t rank, std::uint32_t j) {
  if (j > rank) throw DomainError("elementary symmetric index above the rank");
  const Ring ring = symmetric_ring(rank);
  GradedClass out = GradedClass::zero(ring);
  // Enumerate the j-subsets of {1..rank}.
  std::vector<std::uint32_t> pick(j);
  for (std::uint32_t i = 0; i < j; ++i) pick[i] = i;
  for (;;) {
    GradedClass::ExpVec e(rank, 0);
    for (std::uint32_t i : pick) e[i] = 1;
    out = add(out, GradedClass::monomial(ring, e, 1));
    if (j == 0) break;
    std::int64_t i = static_cast<std::int64_t>(j) - 1;
    while (i >= 0 && pick[i] == rank - j + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::uint32_t l = static_cast<std::uint32_t>(i) + 1; l < j; ++l)
      pick[l] = pick[l - 1] + 1;
  }
  return out;
}

namespace {

bool is_symmetric(const GradedClass& p) {
  const std::size_t r = p.ring()->generators().size();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    GradedClass swapped = GradedClass::zero(p.ring());
    for (const auto& [e, c] : p.terms()) {
      GradedClass::ExpVec f = e;
      std::swap(f[i], f[i + 1]);
      swapped = add(swapped, GradedClass::monomial(p.ring(), std::move(f), c));
    }
    if (!(swapped == p)) return false;
  }
  return true;
}

// Graded-lex leading term: highest weight, then largest exponent vector.
GradedClass::TermMap::const_iterator leading_term(const GradedClass& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    const std::uint32_t wb = p.ring()->weight_of(best->first);
    const std::uint32_t wi = p.ring()->weight_of(it->first);
    if (wi > wb || (wi == wb && it->first > best->first)) best = it;
  }
  return best;
}

GradedClass expand_elementary_monomial(std::uint32_t rank,
                                       const GradedClass::ExpVec& mu) {
  GradedClass out = GradedClass::one(symmetric_ring(rank));
  for (std::uint32_t j = 1; j <= rank; ++j)
    for (std::uint32_t rep = 0; rep < mu[j - 1]; ++rep)
      out = mul(out, elementary_symmetric(rank, j));
  return out;
}

}  // namespace

GradedClass reduce_to_elementary(const GradedClass& p) {
  const auto rank = static_cast<std::uint32_t>(p.ring()->generators().size());
  if (!is_symmetric(p))
    throw DomainError("reduce_to_elementary needs a symmetric polynomial, got " +
                      p.str());
  const Ring target = elementary_ring(rank);
  GradedClass out = GradedClass::zero(target);
  GradedClass work = p;
  while (!work.is_zero()) {
    const auto lead = leading_term(work);
    const GradedClass::ExpVec& lambda = lead->first;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
      if (lambda[i] < lambda[i + 1])
        throw InternalError("non-dominant leading term in a symmetric residue: " +
                            work.str());
    GradedClass::ExpVec mu(rank, 0);
    for (std::uint32_t j = 0; j < rank; ++j)
      mu[j] = lambda[j] - (j + 1 < rank ? lambda[j + 1] : 0);
    const mpq_class c = lead->second;
    out = add(out, GradedClass::monomial(target, mu, c));
    work = sub(work, mul(expand_elementary_monomial(rank, mu), c));
  }
  return out;
}

namespace {

// The oracle checks its own reductions by substituting the expansions back.
GradedClass reduce_checked(const GradedClass& q) {
  const GradedClass reduced = reduce_to_elementary(q);
  const auto rank = static_cast<std::uint32_t>(q.ring()->generators().size());
  GradedClass back = GradedClass::zero(q.ring());
  for (const auto& [mu, c] : reduced.terms())
    back = add(back, mul(expand_elementary_monomial(rank, mu), c));
  if (!(back == q))
    throw InternalError("elementary symmetric reduction failed the round trip");
  return reduced;
}

}  // namespace

GradedClass chern_tensor_oracle(std::uint32_t rank, std::uint32_t index) {
  if (rank < 1 || index < 1 || index > rank)
    throw DomainError("chern index must satisfy 1 <= index <= rank, got index " +
                      std::to_string(index) + ", rank " + std::to_string(rank));
  const Ring roots = chern_root_ring(rank);
  const std::size_t u_pos = rank;  // after t1..tr

  // prod_k (1 + t_k + u), truncated above weight `rank`.
  GradedClass product = GradedClass::one(roots);
  for (std::uint32_t k = 1; k <= rank; ++k) {
    GradedClass factor = GradedClass::one(roots);
    factor = add(factor, GradedClass::generator(roots, "t" + std::to_string(k)));
    factor = add(factor, GradedClass::generator(roots, "u"));
    product = mul(product, factor);
  }

  // Split the weight-`index` part by the power of u.
  const Ring tring = symmetric_ring(rank);
  std::map<std::uint32_t, GradedClass> by_u_power;
  for (const auto& [e, c] : product.terms()) {
    if (roots->weight_of(e) != index) continue;
    const std::uint32_t l = e[u_pos];
    GradedClass::ExpVec t_only(e.begin(), e.begin() + rank);
    auto [it, fresh] = by_u_power.try_emplace(l, GradedClass::zero(tring));
    it->second = add(it->second, GradedClass::monomial(tring, std::move(t_only), c));
  }

  const Ring target = chern_ring(rank);
  const GradedClass c1L = GradedClass::generator(target, "c1(L)");
  std::vector<GradedClass> e_images;
  for (std::uint32_t j = 1; j <= rank; ++j)
    e_images.push_back(GradedClass::generator(target, cE(j)));
  const RingMap to_chern(elementary_ring(rank), target, std::move(e_images));

  GradedClass out = GradedClass::zero(target);
  for (const auto& [l, q] : by_u_power)
    out = add(out, mul(to_chern.apply(reduce_checked(q)), pow(c1L, l)));
  return out;
}

GradedClass pairing_pullback_coefficients(std::uint32_t p, std::uint32_t k) {
  if (p < 1 || k < 1 || k > p)
    throw DomainError("pairing pullback index must satisfy 1 <= k <= p, got k " +
                      std::to_string(k) + ", p " + std::to_string(p));
  const Ring ring = kclass_ring(p, k);
  GradedClass out = GradedClass::zero(ring);
  for (std::uint32_t j = 0; j <= k; ++j) {
    const std::uint32_t l = k - j;
    GradedClass term = GradedClass::one(ring);
    if (j > 0) term = mul(term, GradedClass::generator(ring, "i" + std::to_string(2 * j)));
    if (l > 0)
      term = mul(term, GradedClass::generator(ring, "i" + std::to_string(2 * l) + "~"));
    out = add(out, mul(term, binomial(p - j, k - j)));
  }

  // The bigraded coefficients must agree with the tensor formula under
  // i_{2j} -> cj(E), i~_{2l} -> c1(L)^l.
  const Ring target = chern_ring(p);
  const GradedClass c1L = GradedClass::generator(target, "c1(L)");
  std::vector<GradedClass> images;
  for (std::uint32_t j = 1; j <= p; ++j)
    images.push_back(GradedClass::generator(target, cE(j)));
  for (std::uint32_t l = 1; l <= k; ++l) images.push_back(pow(c1L, l));
  const RingMap correspondence(ring, target, std::move(images));
  if (!(correspondence.apply(out) == chern_tensor_formula(p, k)))
    throw InternalError("bigraded coefficients disagree with the tensor formula");
  return out;
}

GradedClass hurewicz_pullback(std::uint32_t k, std::uint32_t n) {
  if (k > n)
    throw DomainError("w^" + std::to_string(k) + " is killed by the truncation at " +
                      std::to_string(n));
  const Ring ring = omega_ring(n);
  if (k == 0) return GradedClass::one(ring);
  return pow(GradedClass::generator(ring, "w"), k);
}

}  // namespace dtl
