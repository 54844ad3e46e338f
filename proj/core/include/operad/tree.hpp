#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opd {

// Symmetry type of a generator: the Σ-module it spans is free (none), or cut
// down by full (anti)invariance, or by invariance under cyclic rotation only.
enum class Symmetry { none, symmetric, antisymmetric, cyclic };

std::string symmetry_name(Symmetry s);
std::optional<Symmetry> symmetry_from_name(const std::string& name);

struct GeneratorSymbol {
  std::string name;
  int arity = 2;
  int degree = 0;
  Symmetry symmetry = Symmetry::none;

  bool operator==(const GeneratorSymbol&) const = default;
};

// Interned generator symbols; ids index into declaration order, which fixes
// the canonical order on trees.
class GeneratorTable {
public:
  // Validates: unique name, arity >= 2.  Degrees may be negative (suspended
  // copies); input validation of user files happens in the parser.
  int add(GeneratorSymbol s);
  int index_of(const std::string& name) const;  // -1 when absent
  const GeneratorSymbol& operator[](int id) const { return syms_[id]; }
  int size() const { return static_cast<int>(syms_.size()); }
  const std::vector<GeneratorSymbol>& all() const { return syms_; }

  bool operator==(const GeneratorTable&) const = default;

private:
  std::vector<GeneratorSymbol> syms_;
  std::map<std::string, int> index_;
};

// Decorated leaf-labeled tree.  Internal nodes carry a generator id; leaves
// carry a 1-based label.  A well-formed tree of arity n uses each label in
// 1..n exactly once.
struct Tree {
  int gen = -1;
  int leaf = 0;
  std::vector<Tree> kids;

  static Tree leaf_node(int label) {
    Tree t;
    t.leaf = label;
    return t;
  }
  static Tree node(int gen, std::vector<Tree> kids) {
    Tree t;
    t.gen = gen;
    t.kids = std::move(kids);
    return t;
  }
  bool is_leaf() const { return gen < 0; }

  bool operator==(const Tree&) const = default;
};

// Preorder integer encoding: leaves as -label, nodes as generator id.  Total
// (lexicographic) order on encodings is the canonical order on trees.
using TreeCode = std::vector<int>;
TreeCode encode(const Tree& t);
Tree decode(const TreeCode& code, const GeneratorTable& table);

int tree_arity(const Tree& t);
int tree_degree(const Tree& t, const GeneratorTable& table);
// Throws std::invalid_argument unless leaf labels are exactly {1..arity}.
void validate_labels(const Tree& t);

std::string tree_to_string(const Tree& t, const GeneratorTable& table);

// Canonical form of a tree: children of symmetric/antisymmetric nodes sorted
// by encoding, children of cyclic nodes rotated to the least arrangement,
// with the Koszul sign accumulated from moving graded subtrees past each
// other plus the sign character of the symmetry type.  Returns nullopt when
// a symmetry forces the tree to equal minus itself (possible only for
// repeated subtrees, which well-labeled trees never produce).
struct Canonical {
  Tree tree;
  int sign;  // ±1
};
std::optional<Canonical> canonicalize(const Tree& t, const GeneratorTable& table);
// As canonicalize, but without the leaf-label completeness check; for use on
// trees over a label subset (labels still assumed distinct).
std::optional<Canonical> canonicalize_partial(const Tree& t, const GeneratorTable& table);

}  // namespace opd
