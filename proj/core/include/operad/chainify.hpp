#pragma once

#include <string>
#include <vector>

#include "operad/component.hpp"
#include "operad/matrix.hpp"
#include "operad/presentation.hpp"

namespace opd {

// Freely adjoin boundaries for every generator: the result has one extra
// generator ds.<name> per original generator, one degree lower with the same
// symmetry, the original relations together with their Leibniz images, and
// the differential g -> ds.g, ds.g -> 0.  The construction always yields a
// complex that is exact in every arity >= 2 slot.
//
// Rejects inputs that already carry a differential, and inputs whose
// generator names would collide with the ds.-prefixed copies.
Presentation chainify(const Presentation& p);

// One (arity, degree) slot of the normal form for the boundary adjunction:
// classes are block trees whose root is either a quotient-basis class of p
// (with each child block a leaf or a tree of desuspended classes) or the
// unit (the whole tree desuspended).  The boundary demotes the root class to
// its desuspended copy and annihilates root-desuspended classes.
struct NormalFormSlot {
  int arity;
  int degree;
  // Canonical printed class labels.  Root classes print as [tree]; a
  // desuspended class prints as s[tree]; children follow in block order
  // (blocks sorted by least leaf label).
  std::vector<std::string> classes;
  // Matrix into the (arity, degree-1) slot, rows indexed by that slot's
  // classes in the same canonical order.
  Matrix boundary;
};

// Build the slot basis and boundary for a presentation with no differential.
// Dimensions agree with component_basis(chainify(p)) slot by slot.
NormalFormSlot ch_normal_form(const Presentation& p, int arity, int degree);

}  // namespace opd
