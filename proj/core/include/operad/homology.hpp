#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "operad/component.hpp"
#include "operad/matrix.hpp"
#include "operad/presentation.hpp"

namespace opd {

// A graded collection of finite permutation representations: per (arity,
// degree), a labeled basis together with the matrices of the adjacent
// transpositions (i, i+1), i = 1..arity-1, which generate the full action.
struct SigmaSlot {
  int arity;
  int degree;
  std::vector<std::string> labels;
  std::vector<Matrix> transpositions;  // arity-1 matrices, columns = images

  int dimension() const { return static_cast<int>(labels.size()); }
  // Matrix of an arbitrary permutation (1-based images), as a product of
  // the stored generators.
  Matrix action(const std::vector<int>& sigma) const;
  // Trace of the action per cycle type, indexed by sorted cycle-type
  // partitions; equal characters mean isomorphic representations over Q.
  std::vector<std::pair<std::vector<int>, Scalar>> character() const;
};

struct SigmaModuleGraded {
  std::vector<SigmaSlot> slots;  // sorted by (arity, degree)

  const SigmaSlot* find(int arity, int degree) const;
  int dimension(int arity, int degree) const;
};

// Homology of a presented dg operad, slot by slot up to an arity bound.
// Representatives are cycles, independent modulo boundaries, chosen by
// deterministic pivoting; the class action is induced by leaf relabeling.
class HomologyTable {
public:
  HomologyTable(Presentation p, int max_arity);

  const Presentation& presentation() const { return engine_.presentation(); }
  ComponentEngine& engine() { return engine_; }
  int max_arity() const { return max_arity_; }

  int dimension(int arity, int degree) const;
  // Degrees with nonzero homology at this arity, descending.
  std::vector<int> degrees(int arity) const;

  struct Slot {
    int arity;
    int degree;
    std::vector<OperadElement> representatives;
    Matrix representative_coordinates;  // survivor coords, one column per class
    Matrix boundary_span;               // survivor coords of the boundary space
    std::vector<Matrix> transpositions;  // class action of (i, i+1)
  };
  const Slot* slot(int arity, int degree) const;

  // Class coordinates of a cycle given in survivor coordinates.
  std::vector<Scalar> class_coordinates(int arity, int degree,
                                        const std::vector<Scalar>& survivor_coords) const;

private:
  ComponentEngine engine_;
  int max_arity_;
  std::map<std::pair<int, int>, Slot> slots_;
};

HomologyTable homology_table(const Presentation& p, int max_arity);

// Locate a candidate element in the class basis of its (arity, degree) slot.
struct RepresentativeMatch {
  enum class Outcome { match, boundary, not_a_cycle };
  Outcome outcome;
  std::vector<Scalar> coordinates;  // class coordinates when outcome == match
};
RepresentativeMatch representative_match(HomologyTable& table, const OperadElement& candidate);

// Classes not expressible as operadic composites of lower-arity classes:
// per slot, a complement of the decomposable subspace inside homology, with
// the induced action.  Labels print the chosen representative cycles.
struct GeneratorReport {
  SigmaModuleGraded generators;
  // Homology-class coordinates of each reported generator, per slot.
  std::map<std::pair<int, int>, Matrix> class_coordinates;
};
GeneratorReport minimal_homology_generators(HomologyTable& table);

// Minimal generators of the suspended module of relation syzygies: inside
// the free operad on G plus its suspension (d(s.g) = g), intersect the
// kernel of the derivation with the span of the relation ideal, and quotient
// by composites with lower-arity members.  Slots are reported at the
// suspended degree, matching minimal_homology_generators of the self-link.
// Requires an undifferentiated presentation with all generators in degree 0.
SigmaModuleGraded relation_module(const Presentation& p, int max_arity);

}  // namespace opd
