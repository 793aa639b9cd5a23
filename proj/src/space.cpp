#include "dtl/space.hpp"

namespace dtl {

std::string VariableSpace::str() const {
  switch (family_) {
    case Family::X:
      return "X(" + std::to_string(n_) + ")";
    case Family::Y:
      return "Y(" + std::to_string(n_) + ")";
    case Family::Z:
      return "Z(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
  }
  return "?";
}

std::string var_str(const VarIndex& v, const VariableSpace& s) {
  switch (s.family()) {
    case Family::X:
      return "x" + std::to_string(v.i);
    case Family::Y:
      return "y" + std::to_string(v.i);
    case Family::Z:
      return "z[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
  }
  return "?";
}

}  // namespace dtl
