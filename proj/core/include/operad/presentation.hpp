#pragma once

#include <map>
#include <string>
#include <vector>

#include "operad/element.hpp"
#include "operad/scalar.hpp"
#include "operad/tree.hpp"

namespace opd {

// An operad presented by generators and relations, optionally carrying a
// differential given on generators (and extended as a derivation).
struct Presentation {
  std::string name;
  Field field;
  bool planar = false;
  GeneratorTable gens;
  std::vector<OperadElement> relations;
  // generator id -> image of degree one lower; ids absent from the map have
  // differential zero.  has_differential distinguishes "no differential
  // declared" from "all generators are cycles".
  std::map<int, OperadElement> differential;
  bool has_differential = false;
};

// Structural checks: planar presentations use only untagged generators and
// identity-ordered leaves, relations are degree-homogeneous of arity >= 2,
// differential images match arity and drop degree by exactly one, and tagged
// generators have equivariant images.  Throws std::invalid_argument.
void validate_presentation(const Presentation& p);

// Canonical text form; parseable back into an equal presentation.
std::string presentation_to_text(const Presentation& p);

}  // namespace opd
