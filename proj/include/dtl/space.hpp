#ifndef DTL_SPACE_HPP
#define DTL_SPACE_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "dtl/errors.hpp"

namespace dtl {

enum class Family : std::uint8_t { X, Y, Z };

// One of the three indexed variable families: X(n) with variables
// x0..x{n-1}, Y(m) with y0..y{m-1}, or the grid family Z(n,m) with
// variables z[i,j], 0 <= i < n, 0 <= j < m.
class VariableSpace {
 public:
  static VariableSpace x(std::uint32_t n) { return VariableSpace(Family::X, n, 0); }
  static VariableSpace y(std::uint32_t m) { return VariableSpace(Family::Y, m, 0); }
  static VariableSpace z(std::uint32_t n, std::uint32_t m) {
    return VariableSpace(Family::Z, n, m);
  }

  Family family() const { return family_; }

  // Count of the single index for X/Y, or of the row index for Z.
  std::uint32_t n() const { return n_; }
  // Column count; only meaningful for Z.
  std::uint32_t m() const { return m_; }

  bool operator==(const VariableSpace&) const = default;

  std::string str() const;

 private:
  VariableSpace(Family family, std::uint32_t n, std::uint32_t m)
      : family_(family), n_(n), m_(m) {
    if (n_ < 1 || (family_ == Family::Z && m_ < 1))
      throw DomainError("variable space must have positive bounds, got " + str());
  }

  Family family_;
  std::uint32_t n_;
  std::uint32_t m_;
};

// A single variable: x{i} / y{i} hold the index in `i` (j is 0);
// z[i,j] holds the pair. Ordering is lexicographic on (i,j), which for the
// Z family is the row-major pair order.
struct VarIndex {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  auto operator<=>(const VarIndex&) const = default;
};

inline bool in_bounds(const VarIndex& v, const VariableSpace& s) {
  switch (s.family()) {
    case Family::X:
    case Family::Y:
      return v.j == 0 && v.i < s.n();
    case Family::Z:
      return v.i < s.n() && v.j < s.m();
  }
  return false;
}

std::string var_str(const VarIndex& v, const VariableSpace& s);

// The Z(n,m) space paired inputs from X(n) x Y(m) land in.
inline VariableSpace z_target(const VariableSpace& xs, const VariableSpace& ys) {
  if (xs.family() != Family::X || ys.family() != Family::Y)
    throw ShapeError("pairing requires an X space and a Y space, got " + xs.str() +
                     " and " + ys.str());
  return VariableSpace::z(xs.n(), ys.n());
}

}  // namespace dtl

#endif
