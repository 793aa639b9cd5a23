#ifndef DTL_PARSE_HPP
#define DTL_PARSE_HPP

#include <cstddef>
#include <string>

#include "dtl/cycle.hpp"

namespace dtl {

// Syntax or well-formedness error, carrying the offset into the source
// text. what() is the bare message; diagnostic() adds the source line with
// a caret under the offending column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::string src, std::size_t offset)
      : Error(msg), src_(std::move(src)), offset_(offset) {}

  std::size_t offset() const { return offset_; }
  std::string diagnostic() const;

 private:
  std::string src_;
  std::size_t offset_;
};

// Grammar:
//   poly   := term (('+'|'-') term)*
//   term   := int | [int '*'] factor ('*' factor)*
//   factor := var ('^' int)?
//   var    := ('x'|'y') int | 'z' '[' int ',' int ']'
// Implicit multiplication (`3x0`) is rejected. The result must be
// homogeneous and use one variable family; its space is the smallest one
// containing every index. Pure constants land in X(1).
Polynomial parse_polynomial(const std::string& src);

// cycle := cterm ('+' cterm)*;  cterm := ['-'] int '*' '[' poly ']'
// Also accepts `0` for the empty cycle. Components are re-housed in the
// smallest common space.
Cycle parse_cycle(const std::string& src);

}  // namespace dtl

#endif
