#include "dtl/cycle.hpp"

#include <algorithm>

namespace dtl {

namespace {

// Total order on same-space polynomials for the canonical component list:
// degree descending, then term tables compared entrywise.
bool poly_before(const Polynomial& p, const Polynomial& q) {
  if (p.degree() != q.degree()) return p.degree() > q.degree();
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = q.terms().begin(), be = q.terms().end();
  for (; a != ae && b != be; ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == ae && b != be;
}

}  // namespace

Hyperplane::Hyperplane(Polynomial form) : form_(std::move(form)) {
  if (form_.degree() != 1 || form_.is_zero())
    throw DomainError("hyperplane basepoint must be a nonzero degree-1 form, got `" +
                      form_.str() + "`");
}

Cycle::Cycle(VariableSpace space, std::vector<Component> components) : space_(space) {
  for (const auto& [p, mult] : components) {
    if (p.space() != space_)
      throw ShapeError("cycle component in " + p.space().str() + ", expected " +
                       space_.str());
    if (p.is_zero() || p.degree() < 1)
      throw DomainError("cycle components must be nonzero of degree >= 1, got `" +
                        p.str() + "`");
  }
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              return poly_before(a.first, b.first);
            });
  for (auto& [p, mult] : components) {
    if (!components_.empty() && components_.back().first == p)
      components_.back().second += mult;
    else
      components_.emplace_back(std::move(p), std::move(mult));
    if (components_.back().second == 0) components_.pop_back();
  }
}

Cycle Cycle::single(Polynomial p, mpz_class multiplicity) {
  const VariableSpace space = p.space();
  std::vector<Component> comps;
  comps.emplace_back(std::move(p), std::move(multiplicity));
  return Cycle(space, std::move(comps));
}

bool Cycle::effective() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Component& c) { return c.second > 0; });
}

Cycle Cycle::stabilized(VariableSpace larger) const {
  std::vector<Component> comps;
  comps.reserve(components_.size());
  for (const auto& [p, mult] : components_) comps.emplace_back(p.stabilized(larger), mult);
  return Cycle(larger, std::move(comps));
}

std::string Cycle::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [p, mult] : components_) {
    if (!out.empty()) out += " + ";
    out += mult.get_str() + "*[" + p.str() + "]";
  }
  return out;
}

mpz_class degree(const Cycle& c) {
  mpz_class sum = 0;
  for (const auto& [p, mult] : c.components()) sum += mult * p.degree();
  return sum;
}

Cycle cycle_add(const Cycle& a, const Cycle& b) {
  if (a.space() != b.space())
    throw ShapeError("cycle addition across spaces " + a.space().str() + " and " +
                     b.space().str());
  std::vector<Cycle::Component> comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return Cycle(a.space(), std::move(comps));
}

Cycle cycle_neg(const Cycle& a) {
  std::vector<Cycle::Component> comps;
  comps.reserve(a.components().size());
  for (const auto& [p, mult] : a.components()) comps.emplace_back(p, -mult);
  return Cycle(a.space(), std::move(comps));
}

Cycle tensor_cycles(const Cycle& eta, const Cycle& xi, std::uint64_t term_cap) {
  const VariableSpace zspace = z_target(eta.space(), xi.space());
  std::vector<Cycle::Component> comps;
  for (const auto& [f, a] : eta.components())
    for (const auto& [g, b] : xi.components())
      comps.emplace_back(tensor_divisor(f, g, term_cap), a * b);
  return Cycle(zspace, std::move(comps));
}

bool well_definedness_check(const Polynomial& f1, const Polynomial& f2,
                            const Polynomial& g, std::uint64_t term_cap) {
  const Polynomial joint = tensor_divisor(mul(f1, f2, term_cap), g, term_cap);
  const Polynomial split =
      mul(tensor_divisor(f1, g, term_cap), tensor_divisor(f2, g, term_cap), term_cap);
  return joint == split;
}

Cycle reduced_tensor(const Cycle& eta, const Cycle& xi, const Hyperplane& eta0,
                     const Hyperplane& xi0, std::uint64_t term_cap) {
  // Everything stabilizes, so work in the union of the declared spaces.
  const VariableSpace xspace =
      VariableSpace::x(std::max(eta.space().n(), eta0.form().space().n()));
  const VariableSpace yspace =
      VariableSpace::y(std::max(xi.space().n(), xi0.form().space().n()));
  const Cycle eta_s = eta.stabilized(xspace);
  const Cycle xi_s = xi.stabilized(yspace);
  const Cycle eta0_cycle = Cycle::single(eta0.form().stabilized(xspace));
  const Cycle xi0_cycle = Cycle::single(xi0.form().stabilized(yspace));
  Cycle out = tensor_cycles(eta_s, xi_s, term_cap);
  out = cycle_add(out, tensor_cycles(eta_s, xi0_cycle, term_cap));
  return cycle_add(out, tensor_cycles(eta0_cycle, xi_s, term_cap));
}

}  // namespace dtl
