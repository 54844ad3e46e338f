#include "operad/enumerate.hpp"

#include <functional>
#include <stdexcept>

namespace opd {

namespace {

class Enumerator {
public:
  Enumerator(const GeneratorTable& table, bool planar) : table_(table), planar_(planar) {
    if (planar_) {
      for (const GeneratorSymbol& g : table_.all())
        if (g.symmetry != Symmetry::none)
          throw std::invalid_argument(
              "planar enumeration requires untagged generators: " + g.name);
    }
  }

  const std::vector<Tree>& on(const std::vector<int>& labels) {
    auto it = memo_.find(labels);
    if (it != memo_.end()) return it->second;
    std::vector<Tree> result = build(labels);
    return memo_.emplace(labels, std::move(result)).first->second;
  }

private:
  std::vector<Tree> build(const std::vector<int>& labels) {
    const int s = static_cast<int>(labels.size());
    if (s == 1) return {Tree::leaf_node(labels[0])};
    std::map<TreeCode, Tree> found;
    for (int g = 0; g < table_.size(); ++g) {
      const int k = table_[g].arity;
      if (k > s) continue;
      if (planar_) {
        planar_blocks(g, k, labels, found);
      } else {
        std::vector<int> assign(s, 0);
        assignments(g, k, labels, assign, 0, found);
      }
    }
    std::vector<Tree> out;
    out.reserve(found.size());
    for (auto& [code, t] : found) out.push_back(std::move(t));
    return out;
  }

  // Every way to hand each label to one of the k slots (all slots nonempty),
  // then every combination of subtrees per slot.  Symmetric slots produce the
  // same canonical tree many times; the dedupe map absorbs that.
  void assignments(int g, int k, const std::vector<int>& labels, std::vector<int>& assign,
                   int pos, std::map<TreeCode, Tree>& found) {
    if (pos == static_cast<int>(labels.size())) {
      std::vector<std::vector<int>> blocks(k);
      for (size_t i = 0; i < labels.size(); ++i) blocks[assign[i]].push_back(labels[i]);
      for (const auto& b : blocks)
        if (b.empty()) return;
      combine(g, blocks, found);
      return;
    }
    for (int slot = 0; slot < k; ++slot) {
      assign[pos] = slot;
      assignments(g, k, labels, assign, pos + 1, found);
    }
  }

  // Planar slots must cover consecutive runs of the (ascending) labels.
  void planar_blocks(int g, int k, const std::vector<int>& labels,
                     std::map<TreeCode, Tree>& found) {
    const int s = static_cast<int>(labels.size());
    std::vector<int> cuts;  // k-1 ascending cut points in 1..s-1
    std::function<void(int, int)> choose = [&](int from, int left) {
      if (left == 0) {
        std::vector<std::vector<int>> blocks;
        int start = 0;
        for (int c : cuts) {
          blocks.emplace_back(labels.begin() + start, labels.begin() + c);
          start = c;
        }
        blocks.emplace_back(labels.begin() + start, labels.end());
        combine(g, blocks, found);
        return;
      }
      for (int c = from; c <= s - left; ++c) {
        cuts.push_back(c);
        choose(c + 1, left - 1);
        cuts.pop_back();
      }
    };
    choose(1, k - 1);
  }

  void combine(int g, const std::vector<std::vector<int>>& blocks,
               std::map<TreeCode, Tree>& found) {
    std::vector<const std::vector<Tree>*> options;
    options.reserve(blocks.size());
    for (const auto& b : blocks) {
      options.push_back(&on(b));
      if (options.back()->empty()) return;
    }
    std::vector<int> pick(blocks.size(), 0);
    for (;;) {
      Tree t;
      t.gen = g;
      t.kids.reserve(blocks.size());
      for (size_t i = 0; i < blocks.size(); ++i) t.kids.push_back((*options[i])[pick[i]]);
      if (planar_) {
        TreeCode code = encode(t);
        found.emplace(std::move(code), std::move(t));
      } else if (auto canon = canonicalize_partial(t, table_)) {
        TreeCode code = encode(canon->tree);
        found.emplace(std::move(code), std::move(canon->tree));
      }
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < static_cast<int>(options[i]->size())) break;
        pick[i] = 0;
      }
      if (i == pick.size()) return;
    }
  }

  const GeneratorTable& table_;
  bool planar_;
  std::map<std::vector<int>, std::vector<Tree>> memo_;
};

}  // namespace

std::vector<Tree> trees_on_labels(const GeneratorTable& table, const std::vector<int>& labels,
                                  bool planar) {
  Enumerator e(table, planar);
  return e.on(labels);
}

std::map<int, std::vector<Tree>> free_basis_by_degree(const GeneratorTable& table, int arity,
                                                      bool planar) {
  if (arity < 1) throw std::invalid_argument("arity must be at least 1");
  std::vector<int> labels;
  labels.reserve(arity);
  for (int i = 1; i <= arity; ++i) labels.push_back(i);
  std::map<int, std::vector<Tree>> out;
  for (Tree& t : trees_on_labels(table, labels, planar))
    out[tree_degree(t, table)].push_back(std::move(t));
  return out;
}

std::vector<Tree> free_basis(const GeneratorTable& table, int arity, int degree, bool planar) {
  auto all = free_basis_by_degree(table, arity, planar);
  auto it = all.find(degree);
  return it == all.end() ? std::vector<Tree>{} : std::move(it->second);
}

}  // namespace opd
