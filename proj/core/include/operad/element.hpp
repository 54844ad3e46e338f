#pragma once

#include <map>
#include <string>
#include <vector>

#include "operad/scalar.hpp"
#include "operad/tree.hpp"

namespace opd {

// A finite linear combination of canonical trees of one fixed arity.  Terms
// are keyed by tree encoding, so iteration order is the canonical tree order
// and printing is deterministic.  Adding a non-canonical tree goes through
// canonicalize, which supplies the Koszul sign (or kills the term).
class OperadElement {
public:
  OperadElement() = default;  // zero of arity 0 over Q; assign before use
  OperadElement(const Field& f, int arity);

  static OperadElement from_tree(const Field& f, const GeneratorTable& table, const Tree& t);
  // Arity-1 elements are spanned by the bare leaf (the composition unit).
  static OperadElement unit(const Field& f);

  int arity() const { return arity_; }
  const Field& field() const { return f_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  struct Term {
    Tree tree;
    Scalar coef;
  };
  const std::map<TreeCode, Term>& terms() const { return terms_; }

  // Canonicalizes t, multiplies the resulting sign into c, accumulates.
  void add_term(const GeneratorTable& table, const Tree& t, const Scalar& c);
  // t must already be canonical; no sign processing, just accumulation.
  void add_canonical(const Tree& t, const TreeCode& code, const Scalar& c);

  Scalar coefficient(const TreeCode& code) const;

  OperadElement& operator+=(const OperadElement& o);
  OperadElement& operator-=(const OperadElement& o);
  OperadElement operator+(const OperadElement& o) const;
  OperadElement operator-(const OperadElement& o) const;
  OperadElement operator-() const;
  OperadElement scaled(const Scalar& c) const;

  bool operator==(const OperadElement& o) const;
  bool operator!=(const OperadElement& o) const { return !(*this == o); }

  // Degree when every term has the same one; throws std::logic_error on a
  // mixed-degree element, returns fallback (default 0) when zero.
  int homogeneous_degree(const GeneratorTable& table, int fallback = 0) const;

  std::string to_string(const GeneratorTable& table) const;

private:
  Field f_;
  int arity_ = 0;
  std::map<TreeCode, Term> terms_;
};

// Partial composition a o_i b: graft b into leaf i of a (1-based), relabel
// leaves, and apply the Koszul sign that moves b's generators past the
// generators of a standing after leaf i in preorder.
OperadElement compose(const GeneratorTable& table, const OperadElement& a, int slot,
                      const OperadElement& b);

// Relabel leaves by sigma (leaf l becomes sigma[l-1]) and recanonicalize.
OperadElement act(const GeneratorTable& table, const std::vector<int>& sigma,
                  const OperadElement& a);
Tree relabel_leaves(const Tree& t, const std::vector<int>& sigma);

// Total composition e(inputs[0], ..., inputs[k-1]), inserting left to right
// so the Koszul signs come out in the natural tensor order.
OperadElement evaluate(const GeneratorTable& table, const OperadElement& e,
                       const std::vector<OperadElement>& inputs);

// The single-node element g(1, ..., k).
OperadElement corolla(const Field& f, const GeneratorTable& table, int gen);

// Extend the map generator -> image (of degree one lower) to a derivation
// and apply it.  Generators absent from dmap are sent to zero.
OperadElement differentiate(const Field& f, const GeneratorTable& table,
                            const std::map<int, OperadElement>& dmap,
                            const OperadElement& x);

// Permutation helpers (1-based images; sigma[i-1] = image of i).
bool is_permutation(const std::vector<int>& sigma);
std::vector<int> compose_permutations(const std::vector<int>& sigma,
                                      const std::vector<int>& tau);  // sigma after tau
std::vector<int> inverse_permutation(const std::vector<int>& sigma);

}  // namespace opd
