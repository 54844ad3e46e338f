#include "operad/element.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace opd {

namespace {

Tree shift_leaves(const Tree& t, int shift) {
  if (t.is_leaf()) return Tree::leaf_node(t.leaf + shift);
  Tree out;
  out.gen = t.gen;
  out.kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) out.kids.push_back(shift_leaves(k, shift));
  return out;
}

// Replace leaf `slot` of a by b (with b's labels shifted into place) and
// close the gap in the remaining labels of a.
Tree graft(const Tree& a, int slot, const Tree& b, int b_arity) {
  if (a.is_leaf()) {
    if (a.leaf < slot) return a;
    if (a.leaf == slot) return shift_leaves(b, slot - 1);
    return Tree::leaf_node(a.leaf + b_arity - 1);
  }
  Tree out;
  out.gen = a.gen;
  out.kids.reserve(a.kids.size());
  for (const Tree& k : a.kids) out.kids.push_back(graft(k, slot, b, b_arity));
  return out;
}

// Total degree of the generators standing strictly after leaf `slot` in
// preorder; this is the block the grafted tree must move past.
void degree_after_leaf(const Tree& t, int slot, const GeneratorTable& table, bool& seen,
                       int& sum) {
  if (t.is_leaf()) {
    if (t.leaf == slot) seen = true;
    return;
  }
  if (seen) sum += table[t.gen].degree;
  for (const Tree& k : t.kids) degree_after_leaf(k, slot, table, seen, sum);
}

}  // namespace

OperadElement::OperadElement(const Field& f, int arity) : f_(f), arity_(arity) {
  if (arity < 1) throw std::invalid_argument("element arity must be at least 1");
}

OperadElement OperadElement::from_tree(const Field& f, const GeneratorTable& table,
                                       const Tree& t) {
  OperadElement e(f, tree_arity(t));
  e.add_term(table, t, Scalar::one(f));
  return e;
}

OperadElement OperadElement::unit(const Field& f) {
  OperadElement e(f, 1);
  Tree t = Tree::leaf_node(1);
  e.add_canonical(t, encode(t), Scalar::one(f));
  return e;
}

void OperadElement::add_term(const GeneratorTable& table, const Tree& t, const Scalar& c) {
  if (c.is_zero()) return;
  if (tree_arity(t) != arity_)
    throw std::logic_error("tree arity does not match element arity");
  auto canon = canonicalize(t, table);
  if (!canon) return;
  Scalar v = c;
  if (canon->sign < 0) v = -v;
  add_canonical(canon->tree, encode(canon->tree), v);
}

void OperadElement::add_canonical(const Tree& t, const TreeCode& code, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(code);
  if (it == terms_.end()) {
    terms_.emplace(code, Term{t, c});
    return;
  }
  it->second.coef += c;
  if (it->second.coef.is_zero()) terms_.erase(it);
}

Scalar OperadElement::coefficient(const TreeCode& code) const {
  auto it = terms_.find(code);
  return it == terms_.end() ? Scalar::zero(f_) : it->second.coef;
}

OperadElement& OperadElement::operator+=(const OperadElement& o) {
  if (arity_ != o.arity_ || !(f_ == o.f_))
    throw std::logic_error("adding elements of different arity or field");
  for (const auto& [code, term] : o.terms_) add_canonical(term.tree, code, term.coef);
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& o) { return *this += -o; }

OperadElement OperadElement::operator+(const OperadElement& o) const {
  OperadElement out = *this;
  out += o;
  return out;
}

OperadElement OperadElement::operator-(const OperadElement& o) const {
  OperadElement out = *this;
  out += -o;
  return out;
}

OperadElement OperadElement::operator-() const {
  OperadElement out(f_, arity_);
  for (const auto& [code, term] : terms_) out.terms_.emplace(code, Term{term.tree, -term.coef});
  return out;
}

OperadElement OperadElement::scaled(const Scalar& c) const {
  OperadElement out(f_, arity_);
  if (c.is_zero()) return out;
  for (const auto& [code, term] : terms_)
    out.terms_.emplace(code, Term{term.tree, term.coef * c});
  return out;
}

bool OperadElement::operator==(const OperadElement& o) const {
  if (arity_ != o.arity_ || !(f_ == o.f_) || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.coef != jt->second.coef) return false;
  }
  return true;
}

int OperadElement::homogeneous_degree(const GeneratorTable& table, int fallback) const {
  if (terms_.empty()) return fallback;
  int d = tree_degree(terms_.begin()->second.tree, table);
  for (const auto& [code, term] : terms_) {
    if (tree_degree(term.tree, table) != d)
      throw std::logic_error("element is not homogeneous");
  }
  return d;
}

std::string OperadElement::to_string(const GeneratorTable& table) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [code, term] : terms_) {
    const std::string t = tree_to_string(term.tree, table);
    if (first) {
      if (term.coef.is_one()) {
        out = t;
      } else if (term.coef.is_negative() && term.coef.abs().is_one()) {
        out = "-" + t;
      } else {
        out = term.coef.to_string() + "*" + t;
      }
      first = false;
      continue;
    }
    const bool neg = term.coef.is_negative();
    const Scalar a = term.coef.abs();
    out += neg ? " - " : " + ";
    if (a.is_one()) {
      out += t;
    } else {
      out += a.to_string() + "*" + t;
    }
  }
  return out;
}

OperadElement compose(const GeneratorTable& table, const OperadElement& a, int slot,
                      const OperadElement& b) {
  if (!(a.field() == b.field())) throw std::logic_error("composing over different fields");
  if (slot < 1 || slot > a.arity())
    throw std::invalid_argument("composition slot out of range");
  OperadElement out(a.field(), a.arity() + b.arity() - 1);
  for (const auto& [ca, ta] : a.terms()) {
    bool seen = false;
    int after = 0;
    degree_after_leaf(ta.tree, slot, table, seen, after);
    for (const auto& [cb, tb] : b.terms()) {
      Scalar c = ta.coef * tb.coef;
      if ((after & 1) && (tree_degree(tb.tree, table) & 1)) c = -c;
      out.add_term(table, graft(ta.tree, slot, tb.tree, b.arity()), c);
    }
  }
  return out;
}

Tree relabel_leaves(const Tree& t, const std::vector<int>& sigma) {
  if (t.is_leaf()) return Tree::leaf_node(sigma.at(t.leaf - 1));
  Tree out;
  out.gen = t.gen;
  out.kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) out.kids.push_back(relabel_leaves(k, sigma));
  return out;
}

OperadElement act(const GeneratorTable& table, const std::vector<int>& sigma,
                  const OperadElement& a) {
  if (static_cast<int>(sigma.size()) != a.arity() || !is_permutation(sigma))
    throw std::invalid_argument("acting by a non-permutation or one of wrong size");
  OperadElement out(a.field(), a.arity());
  for (const auto& [code, term] : a.terms())
    out.add_term(table, relabel_leaves(term.tree, sigma), term.coef);
  return out;
}

OperadElement evaluate(const GeneratorTable& table, const OperadElement& e,
                       const std::vector<OperadElement>& inputs) {
  if (static_cast<int>(inputs.size()) != e.arity())
    throw std::invalid_argument("evaluation input count does not match arity");
  OperadElement acc = e;
  int pos = 1;
  for (const OperadElement& x : inputs) {
    acc = compose(table, acc, pos, x);
    pos += x.arity();
  }
  return acc;
}

OperadElement corolla(const Field& f, const GeneratorTable& table, int gen) {
  const int k = table[gen].arity;
  std::vector<Tree> kids;
  kids.reserve(k);
  for (int i = 1; i <= k; ++i) kids.push_back(Tree::leaf_node(i));
  return OperadElement::from_tree(f, table, Tree::node(gen, std::move(kids)));
}

namespace {

// Differential of one canonical tree with labels 1..n.  Works slot-block by
// slot-block: children are standardized (order-preserving relabel to 1..m),
// the node is expanded via evaluate — which carries all interleaving Koszul
// signs — and a final relabeling restores the global labels.
OperadElement d_tree(const Field& f, const GeneratorTable& table,
                     const std::map<int, OperadElement>& dmap, const Tree& t) {
  const int n = tree_arity(t);
  if (t.is_leaf()) return OperadElement(f, 1);

  const int k = static_cast<int>(t.kids.size());
  std::vector<Tree> std_kids(k);
  std::vector<OperadElement> child_elems;
  std::vector<int> child_degree(k);
  std::vector<int> sigma;  // position in the slot-blocked labeling -> global label
  sigma.reserve(n);
  child_elems.reserve(k);
  for (int j = 0; j < k; ++j) {
    std::vector<int> labels;
    std::function<void(const Tree&)> collect = [&](const Tree& s) {
      if (s.is_leaf()) {
        labels.push_back(s.leaf);
        return;
      }
      for (const Tree& kid : s.kids) collect(kid);
    };
    collect(t.kids[j]);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rank(n + 1, 0);
    for (size_t r = 0; r < sorted.size(); ++r) rank[sorted[r]] = static_cast<int>(r) + 1;
    std::vector<int> to_std(n, 0);
    for (int l = 1; l <= n; ++l) to_std[l - 1] = rank[l] ? rank[l] : 1;
    std_kids[j] = relabel_leaves(t.kids[j], to_std);
    child_degree[j] = tree_degree(std_kids[j], table);
    OperadElement e(f, static_cast<int>(sorted.size()));
    e.add_canonical(std_kids[j], encode(std_kids[j]), Scalar::one(f));
    child_elems.push_back(std::move(e));
    for (int g : sorted) sigma.push_back(g);
  }

  OperadElement total(f, n);
  auto it = dmap.find(t.gen);
  if (it != dmap.end() && !it->second.is_zero()) {
    total += act(table, sigma, evaluate(table, it->second, child_elems));
  }
  int acc = table[t.gen].degree;
  for (int j = 0; j < k; ++j) {
    OperadElement dj = d_tree(f, table, dmap, std_kids[j]);
    if (!dj.is_zero()) {
      std::vector<OperadElement> inputs = child_elems;
      inputs[j] = std::move(dj);
      OperadElement term = act(table, sigma, evaluate(table, corolla(f, table, t.gen), inputs));
      if (acc & 1) term = -term;
      total += term;
    }
    acc += child_degree[j];
  }
  return total;
}

}  // namespace

OperadElement differentiate(const Field& f, const GeneratorTable& table,
                            const std::map<int, OperadElement>& dmap,
                            const OperadElement& x) {
  OperadElement out(f, x.arity());
  for (const auto& [code, term] : x.terms())
    out += d_tree(f, table, dmap, term.tree).scaled(term.coef);
  return out;
}

bool is_permutation(const std::vector<int>& sigma) {
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

std::vector<int> compose_permutations(const std::vector<int>& sigma,
                                      const std::vector<int>& tau) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> out(sigma.size());
  for (size_t i = 0; i < tau.size(); ++i) out[i] = sigma.at(tau[i] - 1);
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out.at(sigma[i] - 1) = static_cast<int>(i) + 1;
  return out;
}

}  // namespace opd
