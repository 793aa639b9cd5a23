#include "dtl/monomial.hpp"

#include <algorithm>

namespace dtl {

Monomial::Monomial(VariableSpace space, IndexSeq indices)
    : space_(space), indices_(std::move(indices)) {
  for (const VarIndex& v : indices_) {
    if (!in_bounds(v, space_))
      throw BoundsError("index " + var_str(v, space_) + " out of bounds for " +
                        space_.str());
  }
  std::sort(indices_.begin(), indices_.end());
}

std::vector<Monomial::VarPower> Monomial::powers() const {
  std::vector<VarPower> out;
  for (const VarIndex& v : indices_) {
    if (!out.empty() && out.back().var == v)
      ++out.back().exp;
    else
      out.push_back({v, 1});
  }
  return out;
}

std::string Monomial::str() const {
  if (indices_.empty()) return "1";
  std::string out;
  for (const VarPower& p : powers()) {
    if (!out.empty()) out += "*";
    out += var_str(p.var, space_);
    if (p.exp > 1) out += "^" + std::to_string(p.exp);
  }
  return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.space() != b.space())
    throw ShapeError("lex_compare across spaces " + a.space().str() + " and " +
                     b.space().str());
  if (a.degree() != b.degree())
    throw ShapeError("lex_compare across degrees " + std::to_string(a.degree()) +
                     " and " + std::to_string(b.degree()));
  return a.indices() <=> b.indices();
}

}  // namespace dtl
