#include "dtl/psi.hpp"

#include <algorithm>
#include <map>

namespace dtl {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// Expanded size of the multilinear expansion: one monomial choice per slot.
std::uint64_t choice_count(const PsiInput& in) {
  std::uint64_t n = 1;
  for (const Polynomial& p : in.xs) n = sat_mul(n, p.term_count());
  for (const Polynomial& p : in.ys) n = sat_mul(n, p.term_count());
  return n;
}

}  // namespace

PsiInput::PsiInput(std::vector<Polynomial> xs_, std::vector<Polynomial> ys_)
    : xs(std::move(xs_)), ys(std::move(ys_)) {
  if (xs.empty() || ys.empty())
    throw ShapeError("psi needs at least one slot on each side");
  const VariableSpace xspace = xs.front().space();
  const VariableSpace yspace = ys.front().space();
  if (xspace.family() != Family::X)
    throw ShapeError("x slots must live in an X space, got " + xspace.str());
  if (yspace.family() != Family::Y)
    throw ShapeError("y slots must live in a Y space, got " + yspace.str());
  // d slots of degree-e forms against e slots of degree-d forms.
  const auto d = static_cast<std::uint32_t>(ys.size());
  const auto e = static_cast<std::uint32_t>(xs.size());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (xs[a].space() != xspace)
      throw ShapeError("x slot " + std::to_string(a) + " in " + xs[a].space().str() +
                       ", expected " + xspace.str());
    if (xs[a].degree() != d)
      throw ShapeError("x slot " + std::to_string(a) + " has degree " +
                       std::to_string(xs[a].degree()) + ", expected " +
                       std::to_string(d) + " (one y slot per degree)");
  }
  for (std::size_t b = 0; b < ys.size(); ++b) {
    if (ys[b].space() != yspace)
      throw ShapeError("y slot " + std::to_string(b) + " in " + ys[b].space().str() +
                       ", expected " + yspace.str());
    if (ys[b].degree() != e)
      throw ShapeError("y slot " + std::to_string(b) + " has degree " +
                       std::to_string(ys[b].degree()) + ", expected " +
                       std::to_string(e) + " (one x slot per degree)");
  }
}

Monomial psi_monomial(const MonomialGrid& grid, const VariableSpace& zspace) {
  const std::size_t e = grid.xrows.size();
  const std::size_t d = grid.yrows.size();
  if (e == 0 || d == 0) throw ShapeError("psi grid must have rows on both sides");
  for (const auto& row : grid.xrows) {
    if (row.size() != d)
      throw ShapeError("x grid row of length " + std::to_string(row.size()) +
                       ", expected " + std::to_string(d));
    if (!std::is_sorted(row.begin(), row.end()))
      throw ShapeError("x grid row not in canonical (sorted) form");
  }
  for (const auto& row : grid.yrows) {
    if (row.size() != e)
      throw ShapeError("y grid row of length " + std::to_string(row.size()) +
                       ", expected " + std::to_string(e));
    if (!std::is_sorted(row.begin(), row.end()))
      throw ShapeError("y grid row not in canonical (sorted) form");
  }
  IndexSeq indices;
  indices.reserve(e * d);
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < d; ++b)
      indices.push_back({grid.xrows[a][b], grid.yrows[b][a]});
  return Monomial(zspace, std::move(indices));
}

Polynomial psi(const PsiInput& input, std::uint64_t term_cap) {
  const VariableSpace zspace =
      z_target(input.xs.front().space(), input.ys.front().space());
  const std::uint32_t d = input.d();
  const std::uint32_t e = input.e();
  const std::uint32_t out_degree = d * e;

  const std::uint64_t n = choice_count(input);
  if (n > term_cap)
    throw ResourceError("psi expansion exceeds cap " + std::to_string(term_cap));
  if (n == 0) return Polynomial(zspace, out_degree);

  // Iterator odometer over one term per slot, x slots then y slots.
  using TermIt = Polynomial::TermMap::const_iterator;
  const std::size_t slots = input.xs.size() + input.ys.size();
  std::vector<TermIt> at(slots), begin(slots), end(slots);
  auto slot_poly = [&](std::size_t s) -> const Polynomial& {
    return s < e ? input.xs[s] : input.ys[s - e];
  };
  for (std::size_t s = 0; s < slots; ++s) {
    begin[s] = slot_poly(s).terms().begin();
    end[s] = slot_poly(s).terms().end();
    at[s] = begin[s];
  }

  Polynomial::TermMap acc;
  IndexSeq indices(out_degree);
  for (;;) {
    mpz_class coeff = 1;
    for (std::size_t s = 0; s < slots; ++s) coeff *= at[s]->second;
    // Grid rule: position b of x-copy a meets position a of y-copy b.
    std::size_t w = 0;
    for (std::uint32_t a = 0; a < e; ++a) {
      const IndexSeq& xrow = at[a]->first;
      for (std::uint32_t b = 0; b < d; ++b)
        indices[w++] = {xrow[b].i, at[e + b]->first[a].i};
    }
    IndexSeq key = indices;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = acc.emplace(std::move(key), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) acc.erase(it);
    }

    std::size_t s = 0;
    for (; s < slots; ++s) {
      if (++at[s] != end[s]) break;
      at[s] = begin[s];
    }
    if (s == slots) break;
  }
  return Polynomial::from_terms(zspace, out_degree, std::move(acc));
}

namespace {

void check_divisor_operands(const Polynomial& f, const Polynomial& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw DomainError("divisor pairing needs degree >= 1, got degrees " +
                      std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
  if (f.is_zero() || g.is_zero())
    throw DomainError("divisor pairing is undefined for the zero polynomial");
  if (f.space().family() != Family::X || g.space().family() != Family::Y)
    throw ShapeError("divisor pairing takes an X-space and a Y-space polynomial, got " +
                     f.space().str() + " and " + g.space().str());
}

}  // namespace

Polynomial tensor_divisor(const Polynomial& f, const Polynomial& g,
                          std::uint64_t term_cap) {
  check_divisor_operands(f, g);
  std::vector<Polynomial> xs(g.degree(), f);
  std::vector<Polynomial> ys(f.degree(), g);
  return psi(PsiInput(std::move(xs), std::move(ys)), term_cap);
}

Polynomial tensor_fast(const Polynomial& f, const Polynomial& g,
                       std::uint64_t term_cap) {
  check_divisor_operands(f, g);
  const std::uint32_t d = f.degree();
  const std::uint32_t e = g.degree();
  const VariableSpace zspace = z_target(f.space(), g.space());

  // Same guard as the naive expansion, so the two routes agree on errors.
  std::uint64_t n = 1;
  for (std::uint32_t a = 0; a < e; ++a) n = sat_mul(n, f.term_count());
  for (std::uint32_t b = 0; b < d; ++b) n = sat_mul(n, g.term_count());
  if (n > term_cap)
    throw ResourceError("psi expansion exceeds cap " + std::to_string(term_cap));

  // For a fixed x-choice the y side factors: column (i_1..i_e) of the
  // x grid contributes g with position t of each monomial sent to
  // z[i_t, k]. Columns repeat across choices, so cache them.
  std::map<std::vector<std::uint32_t>, Polynomial> column_cache;
  auto column_poly = [&](const std::vector<std::uint32_t>& col) -> const Polynomial& {
    auto it = column_cache.find(col);
    if (it != column_cache.end()) return it->second;
    Polynomial::TermMap terms;
    for (const auto& [key, c] : g.terms()) {
      IndexSeq zkey(e);
      for (std::uint32_t t = 0; t < e; ++t) zkey[t] = {col[t], key[t].i};
      std::sort(zkey.begin(), zkey.end());
      auto [jt, fresh] = terms.emplace(std::move(zkey), c);
      if (!fresh) {
        jt->second += c;
        if (jt->second == 0) terms.erase(jt);
      }
    }
    return column_cache
        .emplace(col, Polynomial::from_terms(zspace, e, std::move(terms)))
        .first->second;
  };

  using TermIt = Polynomial::TermMap::const_iterator;
  std::vector<TermIt> at(e, f.terms().begin());
  Polynomial acc(zspace, d * e);
  std::vector<std::uint32_t> col(e);
  for (;;) {
    mpz_class coeff = 1;
    for (std::uint32_t a = 0; a < e; ++a) coeff *= at[a]->second;
    Polynomial prod = Polynomial::term(Monomial(zspace, {}), 1);
    for (std::uint32_t b = 0; b < d; ++b) {
      for (std::uint32_t a = 0; a < e; ++a) col[a] = at[a]->first[b].i;
      prod = mul(prod, column_poly(col), term_cap);
    }
    acc = add(acc, mul(prod, coeff));

    std::size_t a = 0;
    for (; a < e; ++a) {
      if (++at[a] != f.terms().end()) break;
      at[a] = f.terms().begin();
    }
    if (a == e) break;
  }
  return acc;
}

Polynomial suspend_linear(const Polynomial& f, const Polynomial& g,
                          std::uint64_t term_cap) {
  check_divisor_operands(f, g);
  if (f.degree() != 1)
    throw DomainError("suspension needs a linear form, got degree " +
                      std::to_string(f.degree()));
  const VariableSpace zspace = z_target(f.space(), g.space());
  // images[j] = f evaluated on column j of the z grid.
  std::vector<Polynomial> images;
  images.reserve(g.space().n());
  for (std::uint32_t j = 0; j < g.space().n(); ++j) {
    Polynomial::TermMap terms;
    for (const auto& [key, c] : f.terms()) terms.emplace(IndexSeq{{key[0].i, j}}, c);
    images.push_back(Polynomial::from_terms(zspace, 1, std::move(terms)));
  }
  return substitute(g, images, term_cap);
}

}  // namespace dtl
