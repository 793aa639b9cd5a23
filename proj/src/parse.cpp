#include "dtl/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace dtl {

std::string ParseError::diagnostic() const {
  std::string out = std::string("error: ") + what() + "\n  " + src_ + "\n  ";
  for (std::size_t i = 0; i < offset_ && i < src_.size() + 1; ++i) out += ' ';
  out += '^';
  return out;
}

namespace {

struct Cursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("expected ") + what, src, pos);
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, src, at);
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) fail("expected an integer", start);
    return mpz_class(src.substr(start, pos - start), 10);
  }

  std::uint32_t small_integer(const char* what) {
    const std::size_t start = pos;
    const mpz_class v = integer();
    if (!v.fits_uint_p()) fail(std::string(what) + " too large", start);
    return static_cast<std::uint32_t>(v.get_ui());
  }
};

struct RawFactor {
  Family family;
  VarIndex var;
  std::uint32_t exp;
  std::size_t at;  // source offset, for diagnostics
};

struct RawTerm {
  mpz_class coeff;
  std::vector<RawFactor> factors;
  std::size_t at;
};

std::optional<RawFactor> try_factor(Cursor& cur) {
  const char c = cur.peek();
  if (c != 'x' && c != 'y' && c != 'z') return std::nullopt;
  RawFactor f{};
  f.at = cur.pos;
  ++cur.pos;
  if (c == 'z') {
    f.family = Family::Z;
    cur.expect('[', "'[' after z");
    f.var.i = cur.small_integer("z row index");
    cur.expect(',', "',' in z index pair");
    f.var.j = cur.small_integer("z column index");
    cur.expect(']', "']' closing the z index pair");
  } else {
    f.family = c == 'x' ? Family::X : Family::Y;
    if (!cur.at_digit()) cur.fail("expected a variable index", cur.pos);
    f.var.i = cur.small_integer("variable index");
  }
  f.exp = 1;
  if (cur.accept('^')) {
    if (!cur.at_digit()) cur.fail("expected an exponent", cur.pos);
    f.exp = cur.small_integer("exponent");
  }
  return f;
}

RawTerm parse_term(Cursor& cur, bool negative) {
  RawTerm term;
  cur.skip_ws();
  term.at = cur.pos;
  term.coeff = 1;
  bool saw_coeff = false;
  if (cur.at_digit()) {
    term.coeff = cur.integer();
    saw_coeff = true;
  }
  if (saw_coeff && !cur.accept('*')) {
    const char c = cur.peek();
    if (c == 'x' || c == 'y' || c == 'z')
      cur.fail("implicit multiplication is not allowed; write <int>*<var>", cur.pos);
    // Bare integer: a constant term.
    if (negative) term.coeff = -term.coeff;
    return term;
  }
  for (;;) {
    auto f = try_factor(cur);
    if (!f) cur.fail("expected a variable", cur.pos);
    term.factors.push_back(*f);
    if (!cur.accept('*')) break;
  }
  if (negative) term.coeff = -term.coeff;
  return term;
}

std::vector<RawTerm> parse_sum(Cursor& cur) {
  std::vector<RawTerm> terms;
  bool negative = cur.accept('-');
  for (;;) {
    terms.push_back(parse_term(cur, negative));
    if (cur.accept('+'))
      negative = false;
    else if (cur.accept('-'))
      negative = true;
    else
      break;
  }
  return terms;
}

Polynomial lower_terms(const std::string& src, const std::vector<RawTerm>& terms) {
  // One variable family per polynomial; constants impose none.
  std::optional<Family> family;
  std::size_t family_at = 0;
  std::uint32_t max_i = 0, max_j = 0;
  for (const RawTerm& t : terms) {
    for (const RawFactor& f : t.factors) {
      if (!family) {
        family = f.family;
        family_at = f.at;
      } else if (*family != f.family) {
        throw ParseError("mixed variable families in one polynomial (first variable at column " +
                             std::to_string(family_at + 1) + ")",
                         src, f.at);
      }
      max_i = std::max(max_i, f.var.i);
      max_j = std::max(max_j, f.var.j);
    }
  }
  std::optional<std::uint32_t> degree;
  std::size_t degree_at = 0;
  for (const RawTerm& t : terms) {
    std::uint32_t d = 0;
    for (const RawFactor& f : t.factors) d += f.exp;
    if (!degree) {
      degree = d;
      degree_at = t.at;
    } else if (*degree != d) {
      throw ParseError("inhomogeneous polynomial: term of degree " + std::to_string(d) +
                           " conflicts with degree " + std::to_string(*degree) +
                           " (term at column " + std::to_string(degree_at + 1) + ")",
                       src, t.at);
    }
  }

  VariableSpace space = VariableSpace::x(1);
  if (family == Family::Y)
    space = VariableSpace::y(max_i + 1);
  else if (family == Family::Z)
    space = VariableSpace::z(max_i + 1, max_j + 1);
  else if (family == Family::X)
    space = VariableSpace::x(max_i + 1);

  Polynomial::TermMap table;
  for (const RawTerm& t : terms) {
    IndexSeq key;
    for (const RawFactor& f : t.factors)
      for (std::uint32_t rep = 0; rep < f.exp; ++rep) key.push_back(f.var);
    std::sort(key.begin(), key.end());
    auto [it, fresh] = table.emplace(std::move(key), t.coeff);
    if (!fresh) {
      it->second += t.coeff;
      if (it->second == 0) table.erase(it);
    }
  }
  return Polynomial::from_terms(space, degree.value_or(0), std::move(table));
}

}  // namespace

Polynomial parse_polynomial(const std::string& src) {
  Cursor cur{src};
  std::vector<RawTerm> terms = parse_sum(cur);
  if (!cur.done()) cur.fail("unexpected trailing input", cur.pos);
  return lower_terms(src, terms);
}

Cycle parse_cycle(const std::string& src) {
  Cursor cur{src};
  std::vector<std::pair<Polynomial, mpz_class>> comps;
  // `0` denotes the empty cycle.
  if (cur.peek() == '0') {
    ++cur.pos;
    if (!cur.done()) cur.fail("unexpected trailing input", cur.pos);
    return Cycle(VariableSpace::x(1));
  }
  for (;;) {
    const bool neg = cur.accept('-');
    if (!cur.at_digit()) cur.fail("expected a component multiplicity", cur.pos);
    mpz_class mult = cur.integer();
    if (neg) mult = -mult;
    cur.expect('*', "'*' after the multiplicity");
    const std::size_t open = cur.pos;
    cur.expect('[', "'[' starting the component polynomial");
    // Find the matching bracket; component polynomials contain no nesting
    // except z[i,j] indices.
    std::size_t depth = 1, end = cur.pos;
    while (end < src.size() && depth > 0) {
      if (src[end] == '[') ++depth;
      if (src[end] == ']') --depth;
      ++end;
    }
    if (depth != 0) cur.fail("unterminated '['", open);
    const std::string inner = src.substr(cur.pos, end - 1 - cur.pos);
    Polynomial p = [&] {
      try {
        return parse_polynomial(inner);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), src, cur.pos + e.offset());
      }
    }();
    if (p.is_zero() || p.degree() < 1)
      cur.fail("cycle components must be nonzero forms of degree >= 1", open);
    cur.pos = end;
    comps.emplace_back(std::move(p), std::move(mult));
    if (!cur.accept('+')) break;
  }
  if (!cur.done()) cur.fail("unexpected trailing input", cur.pos);

  // Re-house every component in the smallest common space.
  Family family = comps.front().first.space().family();
  std::uint32_t n = 1, m = 1;
  for (const auto& [p, mult] : comps) {
    if (p.space().family() != family)
      throw ParseError("mixed variable families across cycle components", src, 0);
    n = std::max(n, p.space().n());
    if (family == Family::Z) m = std::max(m, p.space().m());
  }
  VariableSpace space = family == Family::X   ? VariableSpace::x(n)
                        : family == Family::Y ? VariableSpace::y(n)
                                              : VariableSpace::z(n, m);
  std::vector<Cycle::Component> housed;
  for (auto& [p, mult] : comps)
    housed.emplace_back(p.stabilized(space), std::move(mult));
  return Cycle(space, std::move(housed));
}

}  // namespace dtl
