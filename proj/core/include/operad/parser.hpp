#pragma once

#include <stdexcept>
#include <string>

#include "operad/presentation.hpp"

namespace opd {

// Raised on any syntax or consistency error in presentation text; carries the
// 1-based position and the offending token.
struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, std::string token_, const std::string& message);
  int line;
  int col;
  std::string token;
};

// Parse the presentation file format:
//
//   operad assoc                # name
//   field Q                     # or Fp:<prime>
//   planar                      # optional: no symmetric-group action
//   gen mu arity=2 degree=0 symmetry=none
//   rel mu(mu(1,2),3) - mu(1,mu(2,3))
//   diff s.mu -> mu             # generator -> image of degree one lower
//
// A bare generator name in an expression stands for the corolla with leaves
// in identity order.  '#' starts a comment.
Presentation parse_presentation(const std::string& text);

// Parse one expression in the context of an existing presentation.
OperadElement parse_element(const std::string& text, const Presentation& p);

}  // namespace opd
