#include "operad/component.hpp"

#include <algorithm>
#include <stdexcept>

namespace opd {

namespace {

int count_nodes_with(const Tree& t, int gen) {
  if (t.is_leaf()) return 0;
  int n = t.gen == gen ? 1 : 0;
  for (const Tree& k : t.kids) n += count_nodes_with(k, gen);
  return n;
}

}  // namespace

ComponentEngine::ComponentEngine(Presentation p) : p_(std::move(p)) {
  validate_presentation(p_);
  if (p_.has_differential) check_differential_consistency();
}

const std::map<int, std::vector<Tree>>& ComponentEngine::free_slices(int arity) {
  auto it = free_.find(arity);
  if (it == free_.end())
    it = free_.emplace(arity, free_basis_by_degree(p_.gens, arity, p_.planar)).first;
  return it->second;
}

std::vector<int> ComponentEngine::degrees(int arity) {
  std::vector<int> out;
  for (const auto& [d, trees] : free_slices(arity)) out.push_back(d);
  return out;
}

const std::vector<Tree>& ComponentEngine::skeleton_slice(int rel_arity, int rel_degree,
                                                         int arity, int degree) {
  const std::pair<int, int> key{rel_arity, rel_degree};
  auto it = skeletons_.find(key);
  if (it == skeletons_.end()) {
    Skeletons s;
    s.ext = p_.gens;
    std::string hole_name = "@";
    while (s.ext.index_of(hole_name) >= 0) hole_name += "@";
    s.hole = s.ext.add({hole_name, rel_arity, rel_degree, Symmetry::none});
    it = skeletons_.emplace(key, std::move(s)).first;
  }
  Skeletons& s = it->second;
  auto ait = s.by_arity.find(arity);
  if (ait == s.by_arity.end()) {
    std::map<int, std::vector<Tree>> filtered;
    for (auto& [d, trees] : free_basis_by_degree(s.ext, arity, p_.planar)) {
      for (Tree& t : trees) {
        if (count_nodes_with(t, s.hole) == 1) filtered[d].push_back(std::move(t));
      }
    }
    ait = s.by_arity.emplace(arity, std::move(filtered)).first;
  }
  static const std::vector<Tree> kEmpty;
  auto dit = ait->second.find(degree);
  return dit == ait->second.end() ? kEmpty : dit->second;
}

const TruncatedComponent& ComponentEngine::component(int arity, int degree) {
  const std::pair<int, int> key{arity, degree};
  auto it = slots_.find(key);
  if (it != slots_.end()) return it->second;

  TruncatedComponent c(arity, degree, p_.field);
  const auto& slices = free_slices(arity);
  if (auto fit = slices.find(degree); fit != slices.end()) c.basis = fit->second;
  for (size_t i = 0; i < c.basis.size(); ++i)
    c.index.emplace(encode(c.basis[i]), static_cast<int>(i));

  if (!c.basis.empty()) {
    for (const OperadElement& r : p_.relations) {
      const int m = r.arity();
      const int e = r.homogeneous_degree(p_.gens);
      const std::pair<int, int> skey{m, e};
      // substitute the relation for the placeholder in every one-hole context
      const std::vector<Tree>& contexts = skeleton_slice(m, e, arity, degree);
      const Skeletons& sk = skeletons_.at(skey);
      std::map<int, OperadElement> plug;
      plug.emplace(sk.hole, r);
      for (const Tree& context : contexts) {
        OperadElement ctx(p_.field, arity);
        ctx.add_canonical(context, encode(context), Scalar::one(p_.field));
        OperadElement span = differentiate(p_.field, sk.ext, plug, ctx);
        SparseVec v;
        for (const auto& [code, term] : span.terms()) {
          auto pos = c.index.find(code);
          if (pos == c.index.end())
            throw std::logic_error("ideal span left the expected slice");
          v.emplace_back(pos->second, term.coef);
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        c.ideal.add(v);
      }
    }
  }

  c.survivor_index.assign(c.basis.size(), -1);
  std::vector<char> is_pivot(c.basis.size(), 0);
  for (int p : c.ideal.pivot_columns()) is_pivot[p] = 1;
  for (size_t i = 0; i < c.basis.size(); ++i) {
    if (!is_pivot[i]) {
      c.survivor_index[i] = static_cast<int>(c.survivors.size());
      c.survivors.push_back(static_cast<int>(i));
    }
  }
  return slots_.emplace(key, std::move(c)).first->second;
}

int ComponentEngine::dimension(int arity, int degree) {
  return component(arity, degree).dimension();
}

Matrix ComponentEngine::ideal_matrix(int arity, int degree) {
  const TruncatedComponent& c = component(arity, degree);
  const int n = static_cast<int>(c.basis.size());
  Matrix m(p_.field, n, c.ideal.rank());
  int j = 0;
  for (const auto& [pivot, row] : c.ideal.rows()) {
    for (const auto& [pos, coef] : row) m.set(pos, j, coef);
    ++j;
  }
  return m;
}

OperadElement ComponentEngine::differentiate_element(const OperadElement& e) const {
  return differentiate(p_.field, p_.gens, p_.differential, e);
}

OperadElement ComponentEngine::reduce(const OperadElement& e) {
  if (e.is_zero()) return e;
  // split by degree so each part reduces in its own slice
  std::map<int, OperadElement> parts;
  for (const auto& [code, term] : e.terms()) {
    const int d = tree_degree(term.tree, p_.gens);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, OperadElement(p_.field, e.arity())).first;
    it->second.add_canonical(term.tree, code, term.coef);
  }
  OperadElement out(p_.field, e.arity());
  for (const auto& [d, part] : parts) {
    const TruncatedComponent& c = component(e.arity(), d);
    SparseVec v;
    for (const auto& [code, term] : part.terms()) {
      auto pos = c.index.find(code);
      if (pos == c.index.end()) throw std::logic_error("element outside the free slice");
      v.emplace_back(pos->second, term.coef);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [pos, coef] : c.ideal.reduce(v)) {
      const Tree& t = c.basis[pos];
      out.add_canonical(t, encode(t), coef);
    }
  }
  return out;
}

std::vector<Scalar> ComponentEngine::survivor_coordinates(int arity, int degree,
                                                          const OperadElement& e) {
  const TruncatedComponent& c = component(arity, degree);
  std::vector<Scalar> coords(c.survivors.size(), Scalar::zero(p_.field));
  if (e.is_zero()) return coords;
  if (e.arity() != arity || e.homogeneous_degree(p_.gens) != degree)
    throw std::logic_error("element does not live in the requested slot");
  SparseVec v;
  for (const auto& [code, term] : e.terms()) {
    auto pos = c.index.find(code);
    if (pos == c.index.end()) throw std::logic_error("element outside the free slice");
    v.emplace_back(pos->second, term.coef);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [pos, coef] : c.ideal.reduce(v)) {
    const int s = c.survivor_index[pos];
    if (s < 0) throw std::logic_error("reduction left a pivot coordinate");
    coords[s] = coef;
  }
  return coords;
}

OperadElement ComponentEngine::element_from_survivors(int arity, int degree,
                                                     const std::vector<Scalar>& coords) {
  const TruncatedComponent& c = component(arity, degree);
  if (coords.size() != c.survivors.size())
    throw std::invalid_argument("coordinate count does not match the survivor basis");
  OperadElement out(p_.field, arity);
  for (size_t i = 0; i < coords.size(); ++i) {
    const Tree& t = c.basis[c.survivors[i]];
    out.add_canonical(t, encode(t), coords[i]);
  }
  return out;
}

const Matrix& ComponentEngine::differential_matrix(int arity, int degree) {
  const std::pair<int, int> key{arity, degree};
  auto it = diff_.find(key);
  if (it != diff_.end()) return it->second;
  const TruncatedComponent& src = component(arity, degree);
  const int rows = dimension(arity, degree - 1);
  Matrix m(p_.field, rows, src.dimension());
  if (p_.has_differential) {
    for (int j = 0; j < src.dimension(); ++j) {
      const Tree& t = src.basis[src.survivors[j]];
      OperadElement x(p_.field, arity);
      x.add_canonical(t, encode(t), Scalar::one(p_.field));
      std::vector<Scalar> col =
          survivor_coordinates(arity, degree - 1, differentiate_element(x));
      for (int i = 0; i < rows; ++i) m.set(i, j, col[i]);
    }
  }
  return diff_.emplace(key, std::move(m)).first->second;
}

void ComponentEngine::check_differential_consistency() {
  for (const auto& [gid, img] : p_.differential) {
    const GeneratorSymbol& g = p_.gens[gid];
    if (img.is_zero()) continue;
    OperadElement dd = differentiate_element(img);
    if (!reduce(dd).is_zero())
      throw std::invalid_argument("differential does not square to zero on generator '" +
                                  g.name + "'");
  }
  for (const OperadElement& r : p_.relations) {
    OperadElement dr = differentiate_element(r);
    if (!reduce(dr).is_zero())
      throw std::invalid_argument(
          "differential does not preserve the relation ideal (some d(relation) is not in "
          "the ideal)");
  }
}

Matrix ideal_component(const Presentation& p, int arity, int degree) {
  ComponentEngine engine(p);
  return engine.ideal_matrix(arity, degree);
}

TruncatedComponent component_basis(const Presentation& p, int arity, int degree) {
  ComponentEngine engine(p);
  return engine.component(arity, degree);
}

}  // namespace opd
