#include "dtl/obstruction.hpp"

#include <algorithm>
#include <set>

namespace dtl {

namespace {

// Q[l1, l2, e1, e2]: the first Chern classes of the two line factors and
// the Chern classes of the rank-2 factor.
Ring diagram_ring() {
  return GradedRing::make({{"l1", 1}, {"l2", 1}, {"e1", 1}, {"e2", 2}}, 2);
}

// phi*(i_{2k}) = w^k (x) 1 + 1 (x) w^k, written in the diagram ring as
// l1^k + l2^k; the powers come from the Hurewicz pullback.
GradedClass phi_pullback(std::uint32_t k, const Ring& ring) {
  const GradedClass wk = hurewicz_pullback(k, 2);
  const RingMap left(omega_ring(2), ring, {GradedClass::generator(ring, "l1")});
  const RingMap right(omega_ring(2), ring, {GradedClass::generator(ring, "l2")});
  return add(left.apply(wk), right.apply(wk));
}

// c2(L (x) E) for one line factor, instantiated from the rank-2 tensor
// formula with c1(L) -> l, cj(E) -> ej.
GradedClass line_factor_composition(const std::string& l, const Ring& ring) {
  const RingMap instantiate(chern_ring(2), ring,
                            {GradedClass::generator(ring, l),
                             GradedClass::generator(ring, "e1"),
                             GradedClass::generator(ring, "e2")});
  return instantiate.apply(chern_tensor_formula(2, 2));
}

std::string affine_str(const mpq_class& c0, const mpq_class& ca, const mpq_class& cb) {
  std::string out;
  auto append = [&](const mpq_class& c, const std::string& sym) {
    if (c == 0) return;
    std::string piece;
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    if (sym.empty())
      piece = mag.get_str();
    else
      piece = (mag == 1 ? "" : mag.get_str()) + sym;
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
  };
  append(c0, "");
  append(ca, "a");
  append(cb, "b");
  return out.empty() ? "0" : out;
}

}  // namespace

std::string CoefficientRow::str() const {
  return monomial + ": lhs " + lhs.get_str() + " = rhs " + affine_str(c0, ca, cb);
}

ObstructionSolution obstruction_solve() {
  const Ring ring = diagram_ring();

  // Side one: (c+c) pulled through the two line-factor tensor maps.
  const GradedClass side_one =
      add(line_factor_composition("l1", ring), line_factor_composition("l2", ring));

  // Side two: (phi x c)* of i2(x)i2~ + 2 * 1(x)i4~ + a * i4(x)1 + b * i2^2(x)1,
  // with phi* given by the pullback equations and c*(i~_{2k}) = ek.
  const GradedClass e1 = GradedClass::generator(ring, "e1");
  const GradedClass e2 = GradedClass::generator(ring, "e2");
  const GradedClass base =
      add(mul(phi_pullback(1, ring), e1), mul(e2, mpq_class(2)));
  const GradedClass coeff_a = phi_pullback(2, ring);
  const GradedClass coeff_b = pow(phi_pullback(1, ring), 2);

  // One equation per monomial appearing on either side, l1-heavy first.
  std::set<GradedClass::ExpVec, std::greater<>> support;
  for (const auto& [e, c] : side_one.terms()) support.insert(e);
  for (const auto& [e, c] : base.terms()) support.insert(e);
  for (const auto& [e, c] : coeff_a.terms()) support.insert(e);
  for (const auto& [e, c] : coeff_b.terms()) support.insert(e);

  ObstructionSolution sol{0, 0, {}, side_one, base, coeff_a, coeff_b};
  for (const auto& e : support) {
    sol.rows.push_back({GradedClass::monomial_str(*ring, e), side_one.coefficient(e),
                        base.coefficient(e), coeff_a.coefficient(e),
                        coeff_b.coefficient(e)});
  }

  // Solve the rows ca*a + cb*b = lhs - c0 by exact elimination.
  bool have_first = false;
  mpq_class p1 = 0, q1 = 0, r1 = 0;  // p1*a + q1*b = r1
  bool solved = false;
  for (const CoefficientRow& row : sol.rows) {
    const mpq_class rhs = row.lhs - row.c0;
    if (row.ca == 0 && row.cb == 0) {
      if (rhs != 0)
        throw InternalError("inconsistent constant row " + row.str());
      continue;
    }
    if (!have_first) {
      p1 = row.ca;
      q1 = row.cb;
      r1 = rhs;
      have_first = true;
      continue;
    }
    // Eliminate against the first independent row.
    const mpq_class det = p1 * row.cb - row.ca * q1;
    if (det == 0) {
      // Dependent row: must be a rational multiple of the first.
      const mpq_class scale = (p1 != 0) ? mpq_class(row.ca / p1) : mpq_class(row.cb / q1);
      if (row.ca != scale * p1 || row.cb != scale * q1 || rhs != scale * r1)
        throw InternalError("inconsistent dependent row " + row.str());
      continue;
    }
    const mpq_class b = (p1 * rhs - row.ca * r1) / det;
    const mpq_class a = (p1 != 0) ? mpq_class((r1 - q1 * b) / p1)
                                  : mpq_class((rhs - row.cb * b) / row.ca);
    if (solved && (a != sol.a || b != sol.b))
      throw InternalError("coefficient system has conflicting solutions");
    sol.a = a;
    sol.b = b;
    solved = true;
  }
  if (!solved)
    throw InternalError("coefficient system does not determine a and b");

  // Every row must hold at the solution.
  for (const CoefficientRow& row : sol.rows)
    if (row.c0 + row.ca * sol.a + row.cb * sol.b != row.lhs)
      throw InternalError("solution fails row " + row.str());
  return sol;
}

MembershipReport membership_in_projection_image(const GradedClass& target) {
  const Ring ring = target.ring();
  if (!ring->bigraded() || !target.homogeneous_of_weight(2))
    throw DomainError("membership test expects a weight-2 class of a bigraded ring");

  // Weight-2 monomial basis of the ambient piece, and the image monomials:
  // those using no left generator of weight > 1 (only i2 survives the
  // projection to the first factor).
  const auto& gens = ring->generators();
  std::vector<GradedClass::ExpVec> ambient;
  // All exponent vectors of total weight 2: at most two slots are nonzero.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].weight == 2) {
      GradedClass::ExpVec v(gens.size(), 0);
      v[i] = 1;
      ambient.push_back(v);
    }
    if (gens[i].weight == 1) {
      for (std::size_t j = i; j < gens.size(); ++j) {
        if (gens[j].weight != 1) continue;
        GradedClass::ExpVec v(gens.size(), 0);
        ++v[i];
        ++v[j];
        ambient.push_back(v);
      }
    }
  }
  std::sort(ambient.begin(), ambient.end());

  MembershipReport report{true, target, {}, GradedClass::zero(ring), {}};
  std::vector<GradedClass::ExpVec> image;
  for (const auto& v : ambient) {
    bool uses_high_left = false;
    for (std::size_t i = 0; i < ring->left_count(); ++i)
      if (v[i] > 0 && gens[i].weight > 1) uses_high_left = true;
    if (!uses_high_left) {
      image.push_back(v);
      report.image_basis.push_back(GradedClass::monomial(ring, v, 1));
    }
  }

  // The image monomials are distinct basis monomials of the ambient piece,
  // so membership is coordinate-wise: any target support outside the image
  // set is a witness.
  GradedClass residual = GradedClass::zero(ring);
  std::vector<mpq_class> combination(image.size(), 0);
  for (const auto& [v, c] : target.terms()) {
    auto it = std::find(image.begin(), image.end(), v);
    if (it == image.end())
      residual = add(residual, GradedClass::monomial(ring, v, c));
    else
      combination[static_cast<std::size_t>(it - image.begin())] = c;
  }
  report.member = residual.is_zero();
  report.residual = residual;
  if (report.member) report.combination = std::move(combination);
  return report;
}

MembershipReport obstruction_membership(std::uint32_t n, const mpq_class& a,
                                        const mpq_class& b) {
  if (n < 2)
    throw DomainError("the projection argument needs at least two left generators");
  const Ring ring = kclass_ring(n, 2);
  const GradedClass i2 = GradedClass::generator(ring, "i2");
  const GradedClass i4 = GradedClass::generator(ring, "i4");
  const GradedClass i2t = GradedClass::generator(ring, "i2~");
  const GradedClass i4t = GradedClass::generator(ring, "i4~");
  GradedClass target = add(mul(i2, i2t), i4t);
  target = add(target, mul(i4, a));
  target = add(target, mul(mul(i2, i2), b));
  return membership_in_projection_image(target);
}

}  // namespace dtl
