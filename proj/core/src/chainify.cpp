#include "operad/chainify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace opd {

Presentation chainify(const Presentation& p) {
  validate_presentation(p);
  if (p.has_differential)
    throw std::invalid_argument("chainify: input already carries a differential");

  Presentation out;
  out.name = "ch." + p.name;
  out.field = p.field;
  out.planar = p.planar;
  out.gens = p.gens;
  const int ngens = p.gens.size();
  for (int i = 0; i < ngens; ++i) {
    GeneratorSymbol g = p.gens[i];
    g.name = "ds." + g.name;
    if (p.gens.index_of(g.name) >= 0)
      throw std::invalid_argument("chainify: generator name '" + g.name +
                                  "' collides with a boundary copy");
    g.degree -= 1;
    out.gens.add(g);
  }

  // g -> ds.g, ds.g -> 0, extended as a derivation.
  std::map<int, OperadElement> dmap;
  for (int i = 0; i < ngens; ++i) {
    dmap[i] = corolla(out.field, out.gens, ngens + i);
    dmap[ngens + i] = OperadElement(out.field, out.gens[i].arity);
    out.differential[i] = dmap[i];
    out.differential[ngens + i] = dmap[ngens + i];
  }
  out.has_differential = true;

  // Original generator ids are unchanged, so relation trees carry over
  // verbatim; each relation also contributes its Leibniz image.
  out.relations = p.relations;
  for (const OperadElement& r : p.relations) {
    OperadElement dr = differentiate(out.field, out.gens, dmap, r);
    if (!dr.is_zero()) out.relations.push_back(std::move(dr));
  }

  validate_presentation(out);
  return out;
}

namespace {

// A normal-form class is identified by its printed label: the root class
// tree in brackets (prefixed s when desuspended) followed by the children in
// block order.  Demoting a root class is then literal string prefixing.
struct LabeledClass {
  int degree = 0;
  std::string text;
  bool operator<(const LabeledClass& o) const {
    return std::tie(degree, text) < std::tie(o.degree, o.text);
  }
};

// All set partitions of labels (sorted) into at least two blocks, each block
// listed in increasing order, blocks ordered by least element.
std::vector<std::vector<std::vector<int>>> block_partitions(const std::vector<int>& labels) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> assign(labels.size(), 0);
  auto rec = [&](auto&& self, size_t pos, int used) -> void {
    if (pos == labels.size()) {
      if (used < 2) return;
      std::vector<std::vector<int>> blocks(used);
      for (size_t i = 0; i < labels.size(); ++i) blocks[assign[i]].push_back(labels[i]);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[pos] = b;
      self(self, pos + 1, used + (b == used ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  return out;
}

class NormalFormBuilder {
public:
  explicit NormalFormBuilder(const Presentation& p) : engine_(p) {}

  // Every class in the slot, sorted by (degree, text).
  std::vector<LabeledClass> slot(int arity) {
    std::vector<LabeledClass> out;
    if (arity == 1) {
      out.push_back({0, "1"});
      return out;
    }
    std::vector<int> labels(arity);
    for (int i = 0; i < arity; ++i) labels[i] = i + 1;
    for (const auto& blocks : block_partitions(labels))
      append_products(blocks, /*desuspend_root=*/false, out);
    // Root-desuspended classes: the whole tree lies below the unit.
    for (const LabeledClass& c : pure(labels)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  // Trees of desuspended classes on the given labels (|labels| >= 2).
  const std::vector<LabeledClass>& pure(const std::vector<int>& labels) {
    auto it = pure_memo_.find(labels);
    if (it != pure_memo_.end()) return it->second;
    std::vector<LabeledClass> out;
    for (const auto& blocks : block_partitions(labels))
      append_products(blocks, /*desuspend_root=*/true, out);
    std::sort(out.begin(), out.end());
    return pure_memo_.emplace(labels, std::move(out)).first->second;
  }

  // All classes with a root of arity blocks.size() over the given blocks:
  // the root ranges over quotient classes (desuspended or not), size-1
  // blocks are leaves, larger blocks range over their pure trees.
  void append_products(const std::vector<std::vector<int>>& blocks, bool desuspend_root,
                       std::vector<LabeledClass>& out) {
    const int k = static_cast<int>(blocks.size());
    std::vector<std::vector<LabeledClass>> child_options;
    for (const auto& b : blocks) {
      if (b.size() == 1) {
        child_options.push_back({{0, std::to_string(b[0])}});
      } else {
        const auto& opts = pure(b);
        if (opts.empty()) return;
        child_options.push_back(opts);
      }
    }
    for (int e : engine_.degrees(k)) {
      const TruncatedComponent& comp = engine_.component(k, e);
      for (int s : comp.survivors) {
        std::string root = "[" + tree_to_string(comp.basis[s], engine_.presentation().gens) + "]";
        if (desuspend_root) root = "s" + root;
        const int root_degree = desuspend_root ? e - 1 : e;
        std::vector<size_t> pick(child_options.size(), 0);
        while (true) {
          int degree = root_degree;
          std::string text = root + "(";
          for (size_t i = 0; i < pick.size(); ++i) {
            const LabeledClass& c = child_options[i][pick[i]];
            degree += c.degree;
            if (i) text += ",";
            text += c.text;
          }
          text += ")";
          out.push_back({degree, std::move(text)});
          size_t i = 0;
          for (; i < pick.size(); ++i) {
            if (++pick[i] < child_options[i].size()) break;
            pick[i] = 0;
          }
          if (i == pick.size()) break;
        }
      }
    }
  }

  ComponentEngine engine_;
  std::map<std::vector<int>, std::vector<LabeledClass>> pure_memo_;
};

}  // namespace

NormalFormSlot ch_normal_form(const Presentation& p, int arity, int degree) {
  if (p.has_differential)
    throw std::invalid_argument("ch_normal_form: input already carries a differential");
  if (arity < 1) throw std::invalid_argument("ch_normal_form: arity must be at least 1");

  NormalFormBuilder builder(p);
  std::vector<LabeledClass> all = builder.slot(arity);

  std::vector<std::string> classes;
  std::vector<std::string> target;
  for (const LabeledClass& c : all) {
    if (c.degree == degree) classes.push_back(c.text);
    if (c.degree == degree - 1) target.push_back(c.text);
  }

  Matrix boundary(p.field, static_cast<int>(target.size()), static_cast<int>(classes.size()));
  for (size_t j = 0; j < classes.size(); ++j) {
    const std::string& c = classes[j];
    if (c.empty() || c[0] != '[') continue;  // desuspended or unit: boundary 0
    auto it = std::lower_bound(target.begin(), target.end(), "s" + c);
    if (it == target.end() || *it != "s" + c)
      throw std::logic_error("ch_normal_form: demoted class missing from target slot");
    boundary.set(static_cast<int>(it - target.begin()), static_cast<int>(j),
                 Scalar::one(p.field));
  }
  return NormalFormSlot{arity, degree, std::move(classes), std::move(boundary)};
}

}  // namespace opd
