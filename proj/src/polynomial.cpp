#include "dtl/polynomial.hpp"

#include <algorithm>

namespace dtl {

namespace {

void check_same_space(const Polynomial& p, const Polynomial& q, const char* op) {
  if (p.space() != q.space())
    throw ShapeError(std::string(op) + " across spaces " + p.space().str() + " and " +
                     q.space().str());
}

}  // namespace

Polynomial Polynomial::from_terms(VariableSpace space, std::uint32_t degree,
                                  TermMap terms) {
  Polynomial p(space, degree);
  for (auto it = terms.begin(); it != terms.end();) {
    const IndexSeq& key = it->first;
    if (key.size() != degree)
      throw ShapeError("term of degree " + std::to_string(key.size()) +
                       " in a polynomial of degree " + std::to_string(degree));
    if (!std::is_sorted(key.begin(), key.end()))
      throw ShapeError("non-canonical term key (indices not sorted)");
    for (const VarIndex& v : key)
      if (!in_bounds(v, space))
        throw BoundsError("index " + var_str(v, space) + " out of bounds for " +
                          space.str());
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::term(Monomial m, mpz_class coeff) {
  Polynomial p(m.space(), m.degree());
  if (coeff != 0) p.terms_.emplace(m.indices(), std::move(coeff));
  return p;
}

Polynomial Polynomial::variable(VariableSpace space, VarIndex v) {
  return term(Monomial(space, {v}), 1);
}

Polynomial Polynomial::negated() const {
  Polynomial p(space_, degree_);
  for (const auto& [key, c] : terms_) p.terms_.emplace(key, -c);
  return p;
}

Polynomial Polynomial::stabilized(VariableSpace larger) const {
  if (larger.family() != space_.family())
    throw ShapeError("cannot stabilize " + space_.str() + " into " + larger.str());
  if (larger.n() < space_.n() ||
      (space_.family() == Family::Z && larger.m() < space_.m()))
    throw ShapeError("stabilization target " + larger.str() + " smaller than " +
                     space_.str());
  Polynomial p(larger, degree_);
  p.terms_ = terms_;
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = Monomial(space_, key).str();
    if (key.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  check_same_space(p, q, "add");
  if (p.degree() != q.degree() && !p.is_zero() && !q.is_zero())
    throw ShapeError("add across degrees " + std::to_string(p.degree()) + " and " +
                     std::to_string(q.degree()));
  // A zero operand adopts the other's degree.
  const std::uint32_t degree = p.is_zero() ? q.degree() : p.degree();
  Polynomial::TermMap terms = p.terms();
  for (const auto& [key, c] : q.terms()) {
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return Polynomial::from_terms(p.space(), degree, std::move(terms));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, q.negated()); }

Polynomial mul(const Polynomial& p, const Polynomial& q, std::uint64_t term_cap) {
  check_same_space(p, q, "mul");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(p.term_count()) * q.term_count();
  if (pairs > term_cap)
    throw ResourceError("product expansion of " + std::to_string(pairs) +
                        " terms exceeds cap " + std::to_string(term_cap));
  Polynomial::TermMap terms;
  IndexSeq merged;
  for (const auto& [ka, ca] : p.terms()) {
    for (const auto& [kb, cb] : q.terms()) {
      merged.clear();
      merged.resize(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), merged.begin());
      auto [it, fresh] = terms.emplace(merged, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) terms.erase(it);
      }
    }
  }
  return Polynomial::from_terms(p.space(), p.degree() + q.degree(), std::move(terms));
}

Polynomial mul(const Polynomial& p, const mpz_class& c) {
  if (c == 0) return Polynomial(p.space(), p.degree());
  Polynomial::TermMap terms = p.terms();
  for (auto& [key, coeff] : terms) coeff *= c;
  return Polynomial::from_terms(p.space(), p.degree(), std::move(terms));
}

Polynomial substitute(const Polynomial& g, const std::vector<Polynomial>& images,
                      std::uint64_t term_cap) {
  if (images.size() != g.space().n())
    throw ShapeError("substitute needs one image per variable of " + g.space().str() +
                     ", got " + std::to_string(images.size()));
  const VariableSpace target = images.front().space();
  const std::uint32_t k = images.front().degree();
  for (const Polynomial& im : images) {
    if (im.space() != target)
      throw ShapeError("substitution images live in mixed spaces " + target.str() +
                       " and " + im.space().str());
    if (im.degree() != k)
      throw ShapeError("substitution images of mixed degrees " + std::to_string(k) +
                       " and " + std::to_string(im.degree()));
  }

  std::uint64_t expanded = 0;
  for (const auto& [key, c] : g.terms()) {
    std::uint64_t prod = 1;
    for (const VarIndex& v : key) {
      prod *= images[v.i].term_count();
      if (prod > term_cap) break;
    }
    expanded += prod;
    if (expanded > term_cap)
      throw ResourceError("substitution expansion exceeds cap " +
                          std::to_string(term_cap));
  }

  Polynomial acc(target, g.degree() * k);
  for (const auto& [key, c] : g.terms()) {
    Polynomial prod = Polynomial::term(Monomial(target, {}), 1);
    for (const VarIndex& v : key) prod = mul(prod, images[v.i], term_cap);
    acc = add(acc, mul(prod, c));
  }
  return acc;
}

}  // namespace dtl
