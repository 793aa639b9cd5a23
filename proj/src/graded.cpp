#include "dtl/graded.hpp"

#include <algorithm>
#include <utility>

namespace dtl {

std::shared_ptr<const GradedRing> GradedRing::make(std::vector<Generator> gens,
                                                   std::uint32_t top_weight) {
  return make_bigraded(std::move(gens), 0, top_weight);
}

std::shared_ptr<const GradedRing> GradedRing::make_bigraded(std::vector<Generator> gens,
                                                            std::size_t left_count,
                                                            std::uint32_t top_weight) {
  auto ring = std::make_shared<GradedRing>();
  for (const Generator& g : gens) {
    if (g.weight == 0) throw DomainError("generator " + g.name + " must have weight >= 1");
    for (const Generator& h : ring->gens_)
      if (h.name == g.name) throw DomainError("duplicate generator " + g.name);
    ring->gens_.push_back(g);
  }
  if (left_count > gens.size())
    throw DomainError("bigraded split beyond the generator count");
  ring->left_count_ = left_count;
  ring->top_weight_ = top_weight;
  return ring;
}

std::size_t GradedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw DomainError("unknown generator " + name);
}

std::uint32_t GradedRing::weight_of(const std::vector<std::uint32_t>& exps) const {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) w += exps[i] * gens_[i].weight;
  return w;
}

std::uint32_t GradedRing::left_weight_of(const std::vector<std::uint32_t>& exps) const {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < left_count_; ++i) w += exps[i] * gens_[i].weight;
  return w;
}

GradedClass GradedClass::one(Ring ring) {
  return monomial(std::move(ring), {}, 1);
}

GradedClass GradedClass::generator(Ring ring, const std::string& name) {
  ExpVec exps(ring->generators().size(), 0);
  exps[ring->index_of(name)] = 1;
  return monomial(std::move(ring), std::move(exps), 1);
}

GradedClass GradedClass::monomial(Ring ring, ExpVec exps, mpq_class coeff) {
  if (exps.size() > ring->generators().size())
    throw ShapeError("exponent vector longer than the generator list");
  exps.resize(ring->generators().size(), 0);
  const std::uint32_t w = ring->weight_of(exps);
  if (w > ring->top_weight())
    throw DomainError("monomial of weight " + std::to_string(w) +
                      " above the truncation weight " +
                      std::to_string(ring->top_weight()));
  GradedClass c(std::move(ring));
  if (coeff != 0) c.terms_.emplace(std::move(exps), std::move(coeff));
  return c;
}

bool GradedClass::homogeneous_of_weight(std::uint32_t w) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return ring_->weight_of(t.first) == w; });
}

mpq_class GradedClass::coefficient(const ExpVec& exps) const {
  if (exps.size() > ring_->generators().size())
    throw ShapeError("exponent vector longer than the generator list");
  ExpVec key = exps;
  key.resize(ring_->generators().size(), 0);
  auto it = terms_.find(key);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool GradedClass::operator==(const GradedClass& o) const {
  // Classes compare by generator list, not ring identity.
  if (ring_ != o.ring_ && !same_generators(*ring_, *o.ring_)) return false;
  return terms_ == o.terms_;
}

bool same_generators(const GradedRing& a, const GradedRing& b) {
  return a.generators().size() == b.generators().size() &&
         std::equal(a.generators().begin(), a.generators().end(),
                    b.generators().begin(), [](const Generator& x, const Generator& y) {
                      return x.name == y.name && x.weight == y.weight;
                    });
}

namespace {

void check_same_ring(const GradedClass& p, const GradedClass& q) {
  if (p.ring() != q.ring() && !same_generators(*p.ring(), *q.ring()))
    throw ShapeError("graded classes from different rings");
}

}  // namespace

GradedClass add(const GradedClass& p, const GradedClass& q) {
  check_same_ring(p, q);
  GradedClass out = p;
  for (const auto& [e, c] : q.terms_) {
    auto [it, fresh] = out.terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

GradedClass sub(const GradedClass& p, const GradedClass& q) {
  return add(p, mul(q, mpq_class(-1)));
}

GradedClass mul(const GradedClass& p, const GradedClass& q) {
  check_same_ring(p, q);
  GradedClass out(p.ring());
  GradedClass::ExpVec e(p.ring()->generators().size());
  for (const auto& [ea, ca] : p.terms_) {
    for (const auto& [eb, cb] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      const std::uint32_t w = p.ring()->weight_of(e);
      if (w > p.ring()->top_weight())
        throw DomainError("product pushed to weight " + std::to_string(w) +
                          " above the truncation weight " +
                          std::to_string(p.ring()->top_weight()));
      auto [it, fresh] = out.terms_.emplace(e, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

GradedClass mul(const GradedClass& p, const mpq_class& c) {
  GradedClass out(p.ring());
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

GradedClass pow(const GradedClass& p, std::uint32_t k) {
  GradedClass out = GradedClass::one(p.ring());
  for (std::uint32_t i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

namespace {

std::string coeff_prefix(const mpq_class& c, bool first, std::string* sep) {
  const bool neg = c < 0;
  mpq_class mag = neg ? mpq_class(-c) : c;
  *sep = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  return mag.get_str();
}

}  // namespace

std::string GradedClass::monomial_str(const GradedRing& ring, const ExpVec& exps) {
  // Factors print by descending weight, ties by name.
  auto block = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> present;
    for (std::size_t i = lo; i < hi; ++i)
      if (exps[i] > 0) present.push_back(i);
    std::stable_sort(present.begin(), present.end(), [&](std::size_t a, std::size_t b) {
      const Generator& ga = ring.generators()[a];
      const Generator& gb = ring.generators()[b];
      if (ga.weight != gb.weight) return ga.weight > gb.weight;
      return ga.name < gb.name;
    });
    std::string out;
    for (std::size_t i : present) {
      if (!out.empty()) out += "*";
      out += ring.generators()[i].name;
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out;
  };
  if (!ring.bigraded()) {
    std::string out = block(0, ring.generators().size());
    return out.empty() ? "1" : out;
  }
  std::string left = block(0, ring.left_count());
  std::string right = block(ring.left_count(), ring.generators().size());
  if (left.empty()) left = "1";
  if (right.empty()) right = "1";
  return left + "(x)" + right;
}

std::string GradedClass::str() const {
  if (terms_.empty()) return "0";
  // Decreasing graded-lex; bigraded rings sort by left-block weight first.
  std::vector<const std::pair<const ExpVec, mpq_class>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    if (ring_->bigraded()) {
      const std::uint32_t la = ring_->left_weight_of(a->first);
      const std::uint32_t lb = ring_->left_weight_of(b->first);
      if (la != lb) return la > lb;
    }
    const std::uint32_t wa = ring_->weight_of(a->first);
    const std::uint32_t wb = ring_->weight_of(b->first);
    if (wa != wb) return wa > wb;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    std::string sep;
    const std::string mag = coeff_prefix(t->second, first, &sep);
    out += sep;
    const std::string mono = monomial_str(*ring_, t->first);
    if (mono == "1" && !ring_->bigraded()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

RingMap::RingMap(Ring source, Ring target, std::vector<GradedClass> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->generators().size())
    throw ShapeError("ring map needs one image per source generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Generator& g = source_->generators()[i];
    if (!images_[i].homogeneous_of_weight(g.weight))
      throw DomainError("image of " + g.name + " is not homogeneous of weight " +
                        std::to_string(g.weight));
  }
}

GradedClass RingMap::apply(const GradedClass& c) const {
  if (c.ring() != source_ && !same_generators(*c.ring(), *source_))
    throw ShapeError("ring map applied to a class from a different ring");
  GradedClass out(target_);
  for (const auto& [e, coeff] : c.terms()) {
    GradedClass term = GradedClass::one(target_);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = mul(term, pow(images_[i], e[i]));
    out = add(out, mul(term, coeff));
  }
  return out;
}

}  // namespace dtl
