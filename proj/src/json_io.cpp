#include "dtl/json_io.hpp"

#include <algorithm>

namespace dtl {

namespace {

using nlohmann::json;

std::string family_tag(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::Y: return "y";
    case Family::Z: return "z";
  }
  return "?";
}

json space_to_json(const VariableSpace& s) {
  json j{{"family", family_tag(s.family())}, {"n", s.n()}};
  if (s.family() == Family::Z) j["m"] = s.m();
  return j;
}

VariableSpace space_from_json(const json& j) {
  const std::string f = j.at("family").get<std::string>();
  const auto n = j.at("n").get<std::uint32_t>();
  if (f == "x") return VariableSpace::x(n);
  if (f == "y") return VariableSpace::y(n);
  if (f == "z") return VariableSpace::z(n, j.at("m").get<std::uint32_t>());
  throw DomainError("unknown variable family tag `" + f + "`");
}

}  // namespace

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [key, coeff] : p.terms()) {
    json vars = json::array();
    for (const auto& vp : p.term_monomial(key).powers()) {
      if (p.space().family() == Family::Z)
        vars.push_back({vp.var.i, vp.var.j, vp.exp});
      else
        vars.push_back({vp.var.i, vp.exp});
    }
    terms.push_back({{"coeff", coeff.get_str()}, {"vars", std::move(vars)}});
  }
  return json{{"space", space_to_json(p.space())},
              {"degree", p.degree()},
              {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const json& j) {
  const VariableSpace space = space_from_json(j.at("space"));
  const auto degree = j.at("degree").get<std::uint32_t>();
  Polynomial::TermMap table;
  for (const json& t : j.at("terms")) {
    IndexSeq key;
    for (const json& v : t.at("vars")) {
      VarIndex var{};
      std::uint32_t exp = 0;
      if (space.family() == Family::Z) {
        if (v.size() != 3) throw DomainError("z variables need [i, j, exp] triples");
        var = {v[0].get<std::uint32_t>(), v[1].get<std::uint32_t>()};
        exp = v[2].get<std::uint32_t>();
      } else {
        if (v.size() != 2) throw DomainError("x/y variables need [i, exp] pairs");
        var = {v[0].get<std::uint32_t>(), 0};
        exp = v[1].get<std::uint32_t>();
      }
      for (std::uint32_t rep = 0; rep < exp; ++rep) key.push_back(var);
    }
    std::sort(key.begin(), key.end());
    mpz_class coeff(t.at("coeff").get<std::string>(), 10);
    auto [it, fresh] = table.emplace(std::move(key), std::move(coeff));
    if (!fresh) throw DomainError("duplicate monomial in polynomial JSON");
  }
  return Polynomial::from_terms(space, degree, std::move(table));
}

json cycle_to_json(const Cycle& c) {
  json comps = json::array();
  for (const auto& [p, mult] : c.components())
    comps.push_back({{"multiplicity", mult.get_str()}, {"polynomial", poly_to_json(p)}});
  return json{{"space", space_to_json(c.space())},
              {"degree", degree(c).get_str()},
              {"components", std::move(comps)}};
}

Cycle cycle_from_json(const json& j) {
  const VariableSpace space = space_from_json(j.at("space"));
  std::vector<Cycle::Component> comps;
  for (const json& c : j.at("components"))
    comps.emplace_back(poly_from_json(c.at("polynomial")).stabilized(space),
                       mpz_class(c.at("multiplicity").get<std::string>(), 10));
  return Cycle(space, std::move(comps));
}

}  // namespace dtl
