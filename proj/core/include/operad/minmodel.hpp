#pragma once

#include <map>
#include <string>
#include <vector>

#include "operad/homology.hpp"
#include "operad/linking.hpp"
#include "operad/presentation.hpp"

namespace opd {

// Resolution of a presented operad by an iterated link: starting from the
// free operad on the target's generators, repeatedly adjoin — one degree up
// — the full module of homology classes at the smallest arity where the
// comparison map to the target has a kernel.  Each round kills that arity
// completely, so adjoined arities strictly increase and the homology of the
// chain agrees with the target below the truncation.

// One round's worth of classes, packaged as the link step that kills them:
// generator symbols one degree above the classes, attaching expressions
// evaluating to equivariant cycle representatives, and corolla relations
// presenting the class module whenever the symmetric-group action makes it
// a proper quotient of the free module on the chosen orbit generators.
struct RelationModule {
  bool exhausted = false;
  int arity = 0;
  SigmaModuleGraded classes;  // one slot per degree carrying kernel classes
  LinkStep step;
};

// A resolution in progress.  The prefix's base is the target presentation
// stripped of its relations; the target keeps them for the comparison map,
// which sends base generators to themselves and adjoined generators to zero.
struct ResolutionState {
  Presentation target;
  LinkSpec prefix;
};

// Validates the target: degree-zero generators, no differential, and (in
// symmetric mode) a ground field whose characteristic exceeds the arity
// bound, so orbit averages exist.
ResolutionState start_resolution(const Presentation& p, int max_arity);

// The classes to kill next, up to the arity bound: all positive-degree
// homology of the current prefix plus the degree-zero classes reducing to
// zero in the target, at the smallest arity where anything survives.
// Exhausted when every arity at or below the bound is clean.
RelationModule next_relation_module(const ResolutionState& state, int max_arity);

void apply_relation_module(ResolutionState& state, const RelationModule& m);

// Iterate next/apply until exhausted.
LinkSpec minimal_resolution(const Presentation& p, int max_arity);

// Minimality certificate: operand arities must strictly increase along the
// chain and every adjoined generator's differential must be decomposable
// (no bare-corolla term).  Violations name the offending generators.
struct MinimalityReport {
  bool minimal = true;
  std::vector<std::string> violations;
};
MinimalityReport is_minimal(const LinkSpec& spec);

// Face counts of the associahedron on n leaves by brute-force enumeration
// of planar rooted trees with all internal nodes of arity at least two,
// graded by the total arity excess Sum(arity(node) - 2).  Independent of
// the operad machinery; 2 <= n <= 8.
std::map<int, long> ainfty_reference(int n);

}  // namespace opd
