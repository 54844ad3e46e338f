#pragma once

#include <map>
#include <string>
#include <vector>

#include "operad/chain_complex.hpp"
#include "operad/element.hpp"
#include "operad/matrix.hpp"
#include "operad/presentation.hpp"

namespace opd {

// A multilinear map C^{otimes n} -> C of one internal degree, stored sparsely
// as (input cell tuple) -> output coefficients.  Tuples are keyed by flat
// cell ids of the complex the map was built against.
class MultilinearMap {
public:
  MultilinearMap(const Field& f, int arity, int degree);

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const Field& field() const { return f_; }
  bool is_zero() const;

  // Accumulate one coefficient: value on `cells` gains coef * out_cell.
  // Validates the degree shift and the tuple length against C.
  void add_entry(const FiniteChainComplex& C, const std::vector<int>& cells, int out_cell,
                 const Scalar& coef);
  // Value on a basis tuple; the zero chain of the matching degree when unset.
  ChainVector value(const FiniteChainComplex& C, const std::vector<int>& cells) const;

  // tuple -> (out cell -> coefficient); zero coefficients are dropped.
  const std::map<std::vector<int>, std::map<int, Scalar>>& entries() const { return entries_; }

  MultilinearMap& operator+=(const MultilinearMap& o);
  MultilinearMap scaled(const Scalar& c) const;
  bool operator==(const MultilinearMap& o) const;
  bool operator!=(const MultilinearMap& o) const { return !(*this == o); }

private:
  Field f_;
  int arity_;
  int degree_;
  std::map<std::vector<int>, std::map<int, Scalar>> entries_;
};

// The arity-1, degree-0 identity of the endomorphism operad.
MultilinearMap identity_map(const FiniteChainComplex& C);

// Multilinear evaluation on homogeneous chains (no sign: signs enter only
// when maps move past maps or graded inputs, not on plain application).
ChainVector apply_map(const FiniteChainComplex& C, const MultilinearMap& f,
                      const std::vector<ChainVector>& inputs);

// Endomorphism-operad composition (f o_slot g)(x...) =
// (-1)^{|g| (|x_1|+...+|x_{slot-1}|)} f(x_1, ..., g(x_slot, ...), ...).
MultilinearMap compose_maps(const FiniteChainComplex& C, const MultilinearMap& f, int slot,
                            const MultilinearMap& g);

// Right symmetric-group action: (f sigma)(x_1, ..., x_n) =
// koszul(sigma, degrees) * f(x_{sigma(1)}, ..., x_{sigma(n)}).
MultilinearMap sigma_action_on_map(const FiniteChainComplex& C, const MultilinearMap& f,
                                   const std::vector<int>& sigma);

// Differential of the endomorphism complex:
// (df)(x) = d_C(f(x)) - (-1)^{|f|} f(d_tensor(x)), with the Koszul signs of
// the tensor-product differential.
MultilinearMap end_differential(const FiniteChainComplex& C, const MultilinearMap& f);

// Coordinate order on hom(C^{otimes n}, C) in one internal degree: all pairs
// (input tuple, output cell), tuples in lexicographic cell-id order.
class HomBasis {
public:
  HomBasis(const FiniteChainComplex& C, int arity, int degree);

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  int dimension() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<std::vector<int>, int>>& pairs() const { return pairs_; }
  int index_of(const std::vector<int>& cells, int out_cell) const;  // -1 when absent

  std::vector<Scalar> coordinates(const MultilinearMap& f) const;
  MultilinearMap from_coordinates(const FiniteChainComplex& C, const std::vector<Scalar>& x) const;

private:
  Field f_;
  int arity_;
  int degree_;
  std::vector<std::pair<std::vector<int>, int>> pairs_;
  std::map<std::pair<std::vector<int>, int>, int> index_;
};

// Matrix of the endomorphism differential from hom degree `degree` to
// `degree - 1` in the HomBasis coordinates of both sides.
Matrix end_differential_matrix(const FiniteChainComplex& C, int arity, int degree);

// Whether the first homology of the arity-n endomorphism complex vanishes
// (the uniqueness obstruction for lifted structures).
bool h1_end_vanishes(const FiniteChainComplex& C, int arity);

// Substitute assigned maps for the generators of one element and compose
// along each term's tree; the element must be degree-homogeneous.  The
// assignment must cover every generator appearing in the element with a map
// of matching arity.
MultilinearMap element_map(const FiniteChainComplex& C, const GeneratorTable& table,
                           const std::map<int, MultilinearMap>& assignment,
                           const OperadElement& e);

// Degree-zero chain maps assigned to the generators of a degree-zero operad
// presentation.
struct AlgebraStructure {
  std::map<int, MultilinearMap> maps;  // generator id -> structure map
};

// Assemble a structure from named data rows; unknown generator names,
// arity mismatches, and missing generators throw std::invalid_argument.
AlgebraStructure algebra_from_rows(const Presentation& p, const FiniteChainComplex& C,
                                   const std::map<std::string, std::vector<AlgebraRow>>& rows);

// Validation: every generator carries a degree-zero chain map respecting its
// symmetry tag, and every relation of the presentation evaluates to the zero
// map.  Throws std::invalid_argument with the failing condition.
void validate_algebra(const Presentation& p, const FiniteChainComplex& C,
                      const AlgebraStructure& a);

// True when every structure map sends tuples of homology representatives to
// boundaries, i.e. the induced action on homology vanishes.
bool trivial_on_homology(const Presentation& p, const FiniteChainComplex& C,
                         const ComplexHomology& H, const AlgebraStructure& a);

// Solve the endomorphism-differential equation d(h_g) = alpha(g) for every
// generator.  The solution is the pivot-determined one; reverse_pivots flips
// the column order of the hom basis to exercise a different (but equally
// valid) choice.  Throws std::runtime_error naming the generator when no
// solution exists (the structure is not trivial on homology).
std::map<int, MultilinearMap> lift_structure(const Presentation& p, const FiniteChainComplex& C,
                                             const AlgebraStructure& a,
                                             bool reverse_pivots = false);

// Assignment for a one-step linked presentation: original generators keep
// their structure maps, suspended copies (prefix "s.") get the lifts.
std::map<int, MultilinearMap> transfer_assignment(const Presentation& linked,
                                                  const Presentation& base,
                                                  const AlgebraStructure& alpha,
                                                  const std::map<int, MultilinearMap>& lifts);

// Evaluate a cycle of the linked operad on cycles of the complex and return
// the homology class of the (necessarily closed) result.  Throws
// std::invalid_argument when an input is not a cycle or the arity does not
// match.
std::vector<Scalar> induced_operation(const FiniteChainComplex& C, const ComplexHomology& H,
                                      const GeneratorTable& table,
                                      const std::map<int, MultilinearMap>& assignment,
                                      const OperadElement& cls,
                                      const std::vector<ChainVector>& inputs);

// Truncated zero-divisor probe: false when two nonzero basis elements of the
// quotient compose to zero in some arity <= max_arity.  A true result is
// evidence, not proof (the property is not decidable from a truncation).
bool integrality_probe(const Presentation& p, int max_arity);

}  // namespace opd
