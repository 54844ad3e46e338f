#pragma once

#include <string>
#include <vector>

#include "operad/presentation.hpp"

namespace opd {

// Adjoin new generators to q with prescribed boundaries: the result keeps
// q's generators, relations, and differential, adds each new generator, and
// extends the differential by d(new_gens[i]) = phi[i].
//
// Each phi[i] must be an element of q (over q's generator table) of matching
// arity whose degree is one below the new generator's, and must be a cycle
// modulo q's relations; tag equivariance is validated with the rest of the
// assembled presentation.  A zero phi[i] adjoins a free cycle.
Presentation link_universal(const Presentation& q,
                            const std::vector<GeneratorSymbol>& new_gens,
                            const std::vector<OperadElement>& phi);

// The canonical self-link: adjoin one generator s.<name> per generator of p,
// one degree higher with the same symmetry, with d(s.g) = g.  p must not
// already carry a differential.
Presentation link_generating(const Presentation& p);

// An iterated link: starting from a base presentation, repeatedly adjoin a
// batch of generators whose boundaries are given as expression text parsed
// against the partial link built so far ("0" adjoins a free cycle).
//
// A step may also carry corolla-level relations among its own generators,
// parsed against the presentation after the step's generators are adjoined.
// These present the symmetry module the generators span — the result is
// still free as an operad on that module — and each relation's derivative
// must vanish modulo the ideal, which holds whenever the attaching maps are
// equivariant.
struct LinkStep {
  std::vector<GeneratorSymbol> gens;
  std::vector<std::string> attach;  // one expression per generator
  std::vector<std::string> relations;
};

struct LinkSpec {
  Presentation base;
  std::vector<LinkStep> steps;
};

Presentation link_chain(const LinkSpec& spec);

}  // namespace opd
