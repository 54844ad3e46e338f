#include "operad/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace opd {

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::cyclic: return "cyclic";
  }
  return "none";
}

std::optional<Symmetry> symmetry_from_name(const std::string& name) {
  if (name == "none") return Symmetry::none;
  if (name == "symmetric") return Symmetry::symmetric;
  if (name == "antisymmetric") return Symmetry::antisymmetric;
  if (name == "cyclic") return Symmetry::cyclic;
  return std::nullopt;
}

int GeneratorTable::add(GeneratorSymbol s) {
  if (s.name.empty()) throw std::invalid_argument("generator name must be nonempty");
  if (s.arity < 2) throw std::invalid_argument("generator arity must be at least 2: " + s.name);
  if (index_.count(s.name)) throw std::invalid_argument("duplicate generator name: " + s.name);
  const int id = static_cast<int>(syms_.size());
  index_.emplace(s.name, id);
  syms_.push_back(std::move(s));
  return id;
}

int GeneratorTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

namespace {

// Each item is a (kind, value) pair flattened into the int stream: leaves as
// (0, label), nodes as (1, generator id).  Leaves therefore sort before nodes
// and by ascending label, and nodes sort by declaration order.
void encode_into(const Tree& t, TreeCode& out) {
  if (t.is_leaf()) {
    out.push_back(0);
    out.push_back(t.leaf);
    return;
  }
  out.push_back(1);
  out.push_back(t.gen);
  for (const Tree& k : t.kids) encode_into(k, out);
}

Tree decode_at(const TreeCode& code, const GeneratorTable& table, size_t& pos) {
  if (pos + 1 >= code.size()) throw std::invalid_argument("truncated tree encoding");
  const int kind = code[pos];
  const int value = code[pos + 1];
  pos += 2;
  if (kind == 0) return Tree::leaf_node(value);
  if (kind != 1 || value < 0 || value >= table.size())
    throw std::invalid_argument("tree encoding references unknown generator");
  Tree t;
  t.gen = value;
  const int k = table[value].arity;
  t.kids.reserve(k);
  for (int i = 0; i < k; ++i) t.kids.push_back(decode_at(code, table, pos));
  return t;
}

void collect_leaves(const Tree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (const Tree& k : t.kids) collect_leaves(k, out);
}

}  // namespace

TreeCode encode(const Tree& t) {
  TreeCode out;
  encode_into(t, out);
  return out;
}

Tree decode(const TreeCode& code, const GeneratorTable& table) {
  size_t pos = 0;
  Tree t = decode_at(code, table, pos);
  if (pos != code.size()) throw std::invalid_argument("trailing data in tree encoding");
  return t;
}

int tree_arity(const Tree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const Tree& k : t.kids) n += tree_arity(k);
  return n;
}

int tree_degree(const Tree& t, const GeneratorTable& table) {
  if (t.is_leaf()) return 0;
  int d = table[t.gen].degree;
  for (const Tree& k : t.kids) d += tree_degree(k, table);
  return d;
}

void validate_labels(const Tree& t) {
  std::vector<int> leaves;
  collect_leaves(t, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("tree leaf labels must be exactly 1..arity");
}

std::string tree_to_string(const Tree& t, const GeneratorTable& table) {
  if (t.is_leaf()) return std::to_string(t.leaf);
  std::string out = table[t.gen].name;
  out += '(';
  for (size_t i = 0; i < t.kids.size(); ++i) {
    if (i) out += ',';
    out += tree_to_string(t.kids[i], table);
  }
  out += ')';
  return out;
}

namespace {

struct ChildForm {
  Tree tree;
  TreeCode code;
  int degree = 0;
};

std::optional<std::pair<Tree, int>> canon_rec(const Tree& t, const GeneratorTable& table) {
  if (t.is_leaf()) return std::pair<Tree, int>{t, 1};
  if (t.gen >= table.size()) throw std::invalid_argument("tree references unknown generator");
  const GeneratorSymbol& g = table[t.gen];
  if (static_cast<int>(t.kids.size()) != g.arity)
    throw std::invalid_argument("node child count does not match generator arity: " + g.name);

  int sign = 1;
  std::vector<ChildForm> kids;
  kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) {
    auto c = canon_rec(k, table);
    if (!c) return std::nullopt;
    sign *= c->second;
    ChildForm f;
    f.code = encode(c->first);
    f.degree = tree_degree(c->first, table);
    f.tree = std::move(c->first);
    kids.push_back(std::move(f));
  }

  switch (g.symmetry) {
    case Symmetry::none:
      break;
    case Symmetry::symmetric:
    case Symmetry::antisymmetric: {
      const bool anti = g.symmetry == Symmetry::antisymmetric;
      // Insertion sort; every adjacent swap contributes the Koszul sign of
      // moving the two subtree blocks past each other, and for antisymmetric
      // nodes additionally the sign of the transposition.
      for (size_t i = 1; i < kids.size(); ++i)
        for (size_t j = i; j > 0 && kids[j].code < kids[j - 1].code; --j) {
          if (anti) sign = -sign;
          if ((kids[j].degree & 1) && (kids[j - 1].degree & 1)) sign = -sign;
          std::swap(kids[j], kids[j - 1]);
        }
      // A transposition fixing the tree while reversing its sign kills it.
      for (size_t i = 1; i < kids.size(); ++i)
        if (kids[i].code == kids[i - 1].code) {
          const bool odd = kids[i].degree & 1;
          if (odd != anti) return std::nullopt;
        }
      break;
    }
    case Symmetry::cyclic: {
      const int k = static_cast<int>(kids.size());
      int total = 0;
      for (const ChildForm& f : kids) total += f.degree;
      // Sign of each rotation, built up one step at a time: rotating the
      // front child to the back moves its block past everything else.
      std::vector<int> rot_sign(k, 1);
      for (int r = 1; r < k; ++r) {
        const int d = kids[r - 1].degree;
        int s = rot_sign[r - 1];
        if ((d & 1) && ((total - d) & 1)) s = -s;
        rot_sign[r] = s;
      }
      auto rotation_codes = [&](int r) {
        std::vector<TreeCode> codes;
        codes.reserve(k);
        for (int i = 0; i < k; ++i) codes.push_back(kids[(r + i) % k].code);
        return codes;
      };
      int best = 0;
      std::vector<TreeCode> best_codes = rotation_codes(0);
      for (int r = 1; r < k; ++r) {
        std::vector<TreeCode> codes = rotation_codes(r);
        if (codes < best_codes) {
          best = r;
          best_codes = std::move(codes);
        } else if (codes == best_codes && rot_sign[r] != rot_sign[best]) {
          // A nontrivial rotation fixes the arrangement but flips the sign.
          return std::nullopt;
        }
      }
      std::vector<ChildForm> rotated;
      rotated.reserve(k);
      for (int i = 0; i < k; ++i) rotated.push_back(std::move(kids[(best + i) % k]));
      kids = std::move(rotated);
      sign *= rot_sign[best];
      break;
    }
  }

  Tree out;
  out.gen = t.gen;
  out.kids.reserve(kids.size());
  for (ChildForm& f : kids) out.kids.push_back(std::move(f.tree));
  return std::pair<Tree, int>{std::move(out), sign};
}

}  // namespace

std::optional<Canonical> canonicalize(const Tree& t, const GeneratorTable& table) {
  validate_labels(t);
  return canonicalize_partial(t, table);
}

std::optional<Canonical> canonicalize_partial(const Tree& t, const GeneratorTable& table) {
  auto r = canon_rec(t, table);
  if (!r) return std::nullopt;
  return Canonical{std::move(r->first), r->second};
}

}  // namespace opd
