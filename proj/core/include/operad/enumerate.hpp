#pragma once

#include <map>
#include <vector>

#include "operad/tree.hpp"

namespace opd {

// All canonical trees on the given (distinct, ascending) leaf label set, any
// degree, in canonical order.  In planar mode children of every node must
// cover consecutive label intervals and no reordering is performed, so the
// result is the set of planar trees.
std::vector<Tree> trees_on_labels(const GeneratorTable& table, const std::vector<int>& labels,
                                  bool planar);

// Canonical basis trees of the free operad in one arity, bucketed by degree.
// Arity 1 is spanned by the bare leaf in degree 0.
std::map<int, std::vector<Tree>> free_basis_by_degree(const GeneratorTable& table, int arity,
                                                      bool planar);

// The (arity, degree) slice.
std::vector<Tree> free_basis(const GeneratorTable& table, int arity, int degree, bool planar);

}  // namespace opd
