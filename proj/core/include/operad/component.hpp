#pragma once

#include <map>
#include <utility>
#include <vector>

#include "operad/enumerate.hpp"
#include "operad/matrix.hpp"
#include "operad/presentation.hpp"
#include "operad/sparse.hpp"

namespace opd {

// One (arity, degree) slice of a presented operad: the free basis in
// canonical order, the relation-ideal slice in reduced echelon form over
// those coordinates, and the surviving tree monomials that descend to a
// basis of the quotient.
struct TruncatedComponent {
  TruncatedComponent(int arity_, int degree_, const Field& f)
      : arity(arity_), degree(degree_), ideal(f) {}

  int arity = 0;
  int degree = 0;
  std::vector<Tree> basis;               // free basis, canonical order
  std::map<TreeCode, int> index;         // encoding -> free-basis position
  EchelonBasis ideal;                    // ideal slice, reduced echelon form
  std::vector<int> survivors;            // free positions spanning the quotient
  std::vector<int> survivor_index;       // free position -> survivor slot, or -1

  int dimension() const { return static_cast<int>(survivors.size()); }
};

// Slice-by-slice calculator for one presentation.  Caches free bases, ideal
// slices, and differential matrices; all outputs are deterministic.
//
// Construction re-validates the presentation and, when a differential is
// declared, checks that it squares to zero and preserves the ideal (both
// modulo the ideal, at the arities of the generators and relations).
class ComponentEngine {
public:
  explicit ComponentEngine(Presentation p);

  const Presentation& presentation() const { return p_; }
  const Field& field() const { return p_.field; }

  const TruncatedComponent& component(int arity, int degree);
  int dimension(int arity, int degree);
  // The degrees with a nonzero free slice at this arity.
  std::vector<int> degrees(int arity);

  // Columns span the ideal slice in free-basis coordinates.
  Matrix ideal_matrix(int arity, int degree);

  // Matrix of the differential from slot (arity, degree) to
  // (arity, degree-1) in the survivor coordinates of both slots.
  const Matrix& differential_matrix(int arity, int degree);

  // The derivation extending the presentation's generator map.
  OperadElement differentiate_element(const OperadElement& e) const;

  // Reduce modulo the ideal (terms may mix degrees); the result is supported
  // on survivor trees only.
  OperadElement reduce(const OperadElement& e);
  // Coordinates of a homogeneous element on the survivor basis of a slot.
  std::vector<Scalar> survivor_coordinates(int arity, int degree, const OperadElement& e);
  OperadElement element_from_survivors(int arity, int degree,
                                       const std::vector<Scalar>& coords);

private:
  const std::map<int, std::vector<Tree>>& free_slices(int arity);
  void check_differential_consistency();

  Presentation p_;
  std::map<int, std::map<int, std::vector<Tree>>> free_;
  std::map<std::pair<int, int>, TruncatedComponent> slots_;
  std::map<std::pair<int, int>, Matrix> diff_;

  // Skeleton trees with exactly one placeholder node, shared by relations of
  // one (arity, degree) signature.
  struct Skeletons {
    GeneratorTable ext;
    int hole = -1;
    std::map<int, std::map<int, std::vector<Tree>>> by_arity;
  };
  std::map<std::pair<int, int>, Skeletons> skeletons_;
  const std::vector<Tree>& skeleton_slice(int rel_arity, int rel_degree, int arity, int degree);
};

// Convenience wrappers over a freshly built engine.
Matrix ideal_component(const Presentation& p, int arity, int degree);
TruncatedComponent component_basis(const Presentation& p, int arity, int degree);

}  // namespace opd
