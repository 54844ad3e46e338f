#include "operad/transfer.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "operad/component.hpp"

namespace opd {

namespace {

int total_degree(const FiniteChainComplex& C, const std::vector<int>& cells) {
  int t = 0;
  for (int c : cells) t += C.cell_degree(c);
  return t;
}

void walk_leaves(const Tree& t, std::vector<int>& labels) {
  if (t.is_leaf()) {
    labels.push_back(t.leaf);
    return;
  }
  for (const Tree& kid : t.kids) walk_leaves(kid, labels);
}

}  // namespace

MultilinearMap::MultilinearMap(const Field& f, int arity, int degree)
    : f_(f), arity_(arity), degree_(degree) {
  if (arity < 1) throw std::invalid_argument("multilinear maps need at least one input");
}

bool MultilinearMap::is_zero() const { return entries_.empty(); }

void MultilinearMap::add_entry(const FiniteChainComplex& C, const std::vector<int>& cells,
                               int out_cell, const Scalar& coef) {
  if (static_cast<int>(cells.size()) != arity_)
    throw std::invalid_argument("entry tuple length does not match the arity");
  if (C.cell_degree(out_cell) != total_degree(C, cells) + degree_)
    throw std::invalid_argument("entry does not shift the degree by the map's degree");
  if (coef.is_zero()) return;
  std::map<int, Scalar>& row = entries_[cells];
  auto it = row.find(out_cell);
  if (it == row.end()) {
    row.emplace(out_cell, coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) row.erase(it);
  }
  if (row.empty()) entries_.erase(cells);
}

ChainVector MultilinearMap::value(const FiniteChainComplex& C, const std::vector<int>& cells) const {
  ChainVector out;
  out.degree = total_degree(C, cells) + degree_;
  out.coords.assign(C.dimension(out.degree), Scalar::zero(f_));
  auto it = entries_.find(cells);
  if (it != entries_.end())
    for (const auto& [cell, coef] : it->second) out.coords[C.cell_position(cell)] = coef;
  return out;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
  if (arity_ != o.arity_ || !(f_ == o.f_))
    throw std::invalid_argument("multilinear map shape mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (degree_ != o.degree_) {
    throw std::invalid_argument("multilinear map degree mismatch");
  }
  for (const auto& [cells, row] : o.entries_) {
    std::map<int, Scalar>& mine = entries_[cells];
    for (const auto& [cell, coef] : row) {
      auto it = mine.find(cell);
      if (it == mine.end()) {
        mine.emplace(cell, coef);
      } else {
        it->second += coef;
        if (it->second.is_zero()) mine.erase(it);
      }
    }
    if (mine.empty()) entries_.erase(cells);
  }
  return *this;
}

MultilinearMap MultilinearMap::scaled(const Scalar& c) const {
  MultilinearMap out(f_, arity_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [cells, row] : entries_)
    for (const auto& [cell, coef] : row) out.entries_[cells][cell] = coef * c;
  return out;
}

bool MultilinearMap::operator==(const MultilinearMap& o) const {
  if (arity_ != o.arity_ || !(f_ == o.f_)) return false;
  if (is_zero() && o.is_zero()) return true;  // the zero map has every degree
  return degree_ == o.degree_ && entries_ == o.entries_;
}

MultilinearMap identity_map(const FiniteChainComplex& C) {
  MultilinearMap id(C.field(), 1, 0);
  for (int cell = 0; cell < C.cell_count(); ++cell)
    id.add_entry(C, {cell}, cell, Scalar::one(C.field()));
  return id;
}

ChainVector apply_map(const FiniteChainComplex& C, const MultilinearMap& f,
                      const std::vector<ChainVector>& inputs) {
  if (static_cast<int>(inputs.size()) != f.arity())
    throw std::invalid_argument("input count does not match the arity");
  ChainVector out;
  out.degree = f.degree();
  for (const ChainVector& x : inputs) out.degree += x.degree;
  out.coords.assign(C.dimension(out.degree), Scalar::zero(f.field()));
  for (const auto& [cells, row] : f.entries()) {
    Scalar weight = Scalar::one(f.field());
    bool live = true;
    for (size_t i = 0; i < cells.size() && live; ++i) {
      if (C.cell_degree(cells[i]) != inputs[i].degree) {
        live = false;
        break;
      }
      const Scalar& c = inputs[i].coords[C.cell_position(cells[i])];
      if (c.is_zero()) live = false;
      weight *= c;
    }
    if (!live) continue;
    for (const auto& [cell, coef] : row) out.coords[C.cell_position(cell)] += weight * coef;
  }
  return out;
}

MultilinearMap compose_maps(const FiniteChainComplex& C, const MultilinearMap& f, int slot,
                            const MultilinearMap& g) {
  if (slot < 1 || slot > f.arity()) throw std::invalid_argument("composition slot out of range");
  if (!(f.field() == g.field())) throw std::invalid_argument("composition across fields");
  MultilinearMap out(f.field(), f.arity() + g.arity() - 1, f.degree() + g.degree());
  const bool g_odd = (g.degree() % 2) != 0;
  for (const auto& [t, frow] : f.entries()) {
    int before = 0;
    for (int i = 0; i < slot - 1; ++i) before += C.cell_degree(t[i]);
    const bool flip = g_odd && (before % 2) != 0;
    for (const auto& [u, grow] : g.entries()) {
      auto hit = grow.find(t[slot - 1]);
      if (hit == grow.end()) continue;
      std::vector<int> cells;
      cells.reserve(out.arity());
      cells.insert(cells.end(), t.begin(), t.begin() + (slot - 1));
      cells.insert(cells.end(), u.begin(), u.end());
      cells.insert(cells.end(), t.begin() + slot, t.end());
      for (const auto& [cell, coef] : frow) {
        Scalar c = coef * hit->second;
        out.add_entry(C, cells, cell, flip ? -c : c);
      }
    }
  }
  return out;
}

MultilinearMap sigma_action_on_map(const FiniteChainComplex& C, const MultilinearMap& f,
                                   const std::vector<int>& sigma) {
  if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != f.arity())
    throw std::invalid_argument("not a permutation of the inputs");
  MultilinearMap out(f.field(), f.arity(), f.degree());
  for (const auto& [u, row] : f.entries()) {
    // The entry at u describes f's value when slot p receives cell u_p; after
    // the action, position sigma(p) of the new tuple holds u_p, and the
    // Koszul sign counts the weighted inversions of sigma on u's degrees.
    long crossing = 0;
    for (size_t p = 0; p < sigma.size(); ++p)
      for (size_t q = p + 1; q < sigma.size(); ++q)
        if (sigma[p] > sigma[q])
          crossing += static_cast<long>(C.cell_degree(u[p])) * C.cell_degree(u[q]);
    std::vector<int> t(u.size(), -1);
    for (size_t p = 0; p < sigma.size(); ++p) t[sigma[p] - 1] = u[p];
    for (const auto& [cell, coef] : row)
      out.add_entry(C, t, cell, (crossing % 2) != 0 ? -coef : coef);
  }
  return out;
}

MultilinearMap end_differential(const FiniteChainComplex& C, const MultilinearMap& f) {
  MultilinearMap out(f.field(), f.arity(), f.degree() - 1);
  const bool f_odd = (f.degree() % 2) != 0;
  for (const auto& [t, row] : f.entries()) {
    // d composed with f.
    for (const auto& [cell, coef] : row) {
      const Matrix& dm = C.differential(C.cell_degree(cell));
      for (int r = 0; r < dm.rows(); ++r) {
        const Scalar& dc = dm.at(r, C.cell_position(cell));
        if (!dc.is_zero()) out.add_entry(C, t, C.cell_at(C.cell_degree(cell) - 1, r), coef * dc);
      }
    }
    // Minus (-1)^{|f|} f composed with the tensor differential: an input
    // tuple u reaches t by differentiating one slot, with the sign of
    // carrying d past the earlier factors.
    int before = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      const int target_degree = C.cell_degree(t[i]) + 1;
      for (int pos = 0; pos < C.dimension(target_degree); ++pos) {
        const int w = C.cell_at(target_degree, pos);
        const Scalar& dc = C.differential(target_degree).at(C.cell_position(t[i]), pos);
        if (dc.is_zero()) continue;
        std::vector<int> u = t;
        u[i] = w;
        // -(-1)^{|f|} (-1)^{before} is negative exactly when |f| + before is even.
        const bool flip = f_odd == ((before % 2) != 0);
        for (const auto& [cell, coef] : row) {
          Scalar c = coef * dc;
          out.add_entry(C, u, cell, flip ? -c : c);
        }
      }
      before += C.cell_degree(t[i]);
    }
  }
  return out;
}

HomBasis::HomBasis(const FiniteChainComplex& C, int arity, int degree)
    : f_(C.field()), arity_(arity), degree_(degree) {
  if (arity < 1) throw std::invalid_argument("hom spaces need at least one input");
  std::vector<int> tuple(arity, 0);
  const int n = C.cell_count();
  if (n == 0) return;
  while (true) {
    const int out_degree = total_degree(C, tuple) + degree;
    for (int pos = 0; pos < C.dimension(out_degree); ++pos) {
      index_.emplace(std::make_pair(tuple, C.cell_at(out_degree, pos)),
                     static_cast<int>(pairs_.size()));
      pairs_.emplace_back(tuple, C.cell_at(out_degree, pos));
    }
    int i = arity - 1;
    while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
}

int HomBasis::index_of(const std::vector<int>& cells, int out_cell) const {
  auto it = index_.find(std::make_pair(cells, out_cell));
  return it == index_.end() ? -1 : it->second;
}

std::vector<Scalar> HomBasis::coordinates(const MultilinearMap& f) const {
  if (f.arity() != arity_) throw std::invalid_argument("arity mismatch against the hom basis");
  std::vector<Scalar> x(dimension(), Scalar::zero(f_));
  if (f.is_zero()) return x;
  if (f.degree() != degree_) throw std::invalid_argument("degree mismatch against the hom basis");
  for (const auto& [cells, row] : f.entries())
    for (const auto& [cell, coef] : row) {
      int i = index_of(cells, cell);
      if (i < 0) throw std::logic_error("map entry outside the hom basis");
      x[i] = coef;
    }
  return x;
}

MultilinearMap HomBasis::from_coordinates(const FiniteChainComplex& C,
                                          const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != dimension())
    throw std::invalid_argument("coordinate length does not match the hom basis");
  MultilinearMap f(f_, arity_, degree_);
  for (int i = 0; i < dimension(); ++i)
    if (!x[i].is_zero()) f.add_entry(C, pairs_[i].first, pairs_[i].second, x[i]);
  return f;
}

Matrix end_differential_matrix(const FiniteChainComplex& C, int arity, int degree) {
  HomBasis dom(C, arity, degree);
  HomBasis cod(C, arity, degree - 1);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(dom.dimension());
  for (int i = 0; i < dom.dimension(); ++i) {
    MultilinearMap e(C.field(), arity, degree);
    e.add_entry(C, dom.pairs()[i].first, dom.pairs()[i].second, Scalar::one(C.field()));
    cols.push_back(cod.coordinates(end_differential(C, e)));
  }
  return Matrix::from_columns(C.field(), cod.dimension(), cols);
}

bool h1_end_vanishes(const FiniteChainComplex& C, int arity) {
  const Matrix down = end_differential_matrix(C, arity, 1);
  const Matrix up = end_differential_matrix(C, arity, 2);
  return down.cols() - rank(down) == rank(up);
}

namespace {

MultilinearMap tree_map(const FiniteChainComplex& C, const GeneratorTable& table,
                        const std::map<int, MultilinearMap>& assignment, const Tree& t) {
  if (t.is_leaf()) return identity_map(C);
  auto it = assignment.find(t.gen);
  if (it == assignment.end())
    throw std::invalid_argument("no assigned map for generator " + table[t.gen].name);
  if (it->second.arity() != static_cast<int>(t.kids.size()))
    throw std::invalid_argument("assigned map arity mismatch for generator " + table[t.gen].name);
  MultilinearMap m = it->second;
  int slot = 1;
  for (const Tree& kid : t.kids) {
    if (kid.is_leaf()) {
      slot += 1;
      continue;
    }
    m = compose_maps(C, m, slot, tree_map(C, table, assignment, kid));
    slot += tree_arity(kid);
  }
  return m;
}

}  // namespace

MultilinearMap element_map(const FiniteChainComplex& C, const GeneratorTable& table,
                           const std::map<int, MultilinearMap>& assignment,
                           const OperadElement& e) {
  MultilinearMap out(C.field(), std::max(e.arity(), 1), e.homogeneous_degree(table));
  for (const auto& [code, term] : e.terms()) {
    MultilinearMap m = tree_map(C, table, assignment, term.tree);
    std::vector<int> labels;
    walk_leaves(term.tree, labels);
    out += sigma_action_on_map(C, m, labels).scaled(term.coef);
  }
  return out;
}

AlgebraStructure algebra_from_rows(const Presentation& p, const FiniteChainComplex& C,
                                   const std::map<std::string, std::vector<AlgebraRow>>& rows) {
  for (const auto& [name, unused] : rows)
    if (p.gens.index_of(name) < 0)
      throw std::invalid_argument("structure rows for unknown generator: " + name);
  AlgebraStructure a;
  for (int id = 0; id < p.gens.size(); ++id) {
    const GeneratorSymbol& g = p.gens[id];
    auto it = rows.find(g.name);
    if (it == rows.end())
      throw std::invalid_argument("no structure rows for generator " + g.name);
    MultilinearMap m(p.field, g.arity, g.degree);
    for (const AlgebraRow& row : it->second) {
      if (static_cast<int>(row.inputs.size()) != g.arity)
        throw std::invalid_argument("structure row arity mismatch for generator " + g.name);
      std::vector<int> cells;
      for (const std::string& label : row.inputs) {
        int cell = C.cell_id(label);
        if (cell < 0) throw std::invalid_argument("unknown cell label: " + label);
        cells.push_back(cell);
      }
      int out_cell = C.cell_id(row.out);
      if (out_cell < 0) throw std::invalid_argument("unknown cell label: " + row.out);
      m.add_entry(C, cells, out_cell, row.coef);
    }
    a.maps.emplace(id, std::move(m));
  }
  return a;
}

void validate_algebra(const Presentation& p, const FiniteChainComplex& C,
                      const AlgebraStructure& a) {
  for (int id = 0; id < p.gens.size(); ++id) {
    const GeneratorSymbol& g = p.gens[id];
    auto it = a.maps.find(id);
    if (it == a.maps.end())
      throw std::invalid_argument("no structure map for generator " + g.name);
    const MultilinearMap& m = it->second;
    if (m.arity() != g.arity)
      throw std::invalid_argument("structure map arity mismatch for generator " + g.name);
    if (!m.is_zero() && m.degree() != g.degree)
      throw std::invalid_argument("structure map degree mismatch for generator " + g.name);
    if (!end_differential(C, m).is_zero())
      throw std::invalid_argument("structure map for generator " + g.name + " is not a chain map");
    if (g.symmetry == Symmetry::symmetric || g.symmetry == Symmetry::antisymmetric) {
      for (int i = 1; i < g.arity; ++i) {
        std::vector<int> swap;
        for (int l = 1; l <= g.arity; ++l) swap.push_back(l);
        std::swap(swap[i - 1], swap[i]);
        MultilinearMap moved = sigma_action_on_map(C, m, swap);
        const MultilinearMap& expect =
            g.symmetry == Symmetry::symmetric ? m : m.scaled(Scalar(p.field, -1));
        if (moved != expect)
          throw std::invalid_argument("structure map for generator " + g.name +
                                      " does not respect its symmetry tag");
      }
    } else if (g.symmetry == Symmetry::cyclic) {
      std::vector<int> rot;
      for (int l = 1; l <= g.arity; ++l) rot.push_back(l % g.arity + 1);
      if (sigma_action_on_map(C, m, rot) != m)
        throw std::invalid_argument("structure map for generator " + g.name +
                                    " does not respect its symmetry tag");
    }
  }
  for (size_t i = 0; i < p.relations.size(); ++i) {
    if (!element_map(C, p.gens, a.maps, p.relations[i]).is_zero())
      throw std::invalid_argument("structure maps do not satisfy relation " + std::to_string(i + 1));
  }
  for (const auto& [id, image] : p.differential) {
    if (element_map(C, p.gens, a.maps, image) != end_differential(C, a.maps.at(id)))
      throw std::invalid_argument("structure maps do not intertwine the differential of generator " +
                                  p.gens[id].name);
  }
}

namespace {

bool tuples_trivial(const FiniteChainComplex& C, const ComplexHomology& H,
                    const MultilinearMap& m, std::vector<ChainVector>& inputs) {
  if (static_cast<int>(inputs.size()) == m.arity()) {
    ChainVector v = apply_map(C, m, inputs);
    for (const Scalar& c : H.class_coordinates(C, v))
      if (!c.is_zero()) return false;
    return true;
  }
  for (int d = 0; d <= C.top_degree(); ++d) {
    const Matrix& reps = H.representatives(C, d);
    for (int j = 0; j < reps.cols(); ++j) {
      inputs.push_back({d, reps.column(j)});
      bool ok = tuples_trivial(C, H, m, inputs);
      inputs.pop_back();
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool trivial_on_homology(const Presentation& p, const FiniteChainComplex& C,
                         const ComplexHomology& H, const AlgebraStructure& a) {
  for (const auto& [id, m] : a.maps) {
    (void)id;
    std::vector<ChainVector> inputs;
    if (!tuples_trivial(C, H, m, inputs)) return false;
  }
  return true;
}

std::map<int, MultilinearMap> lift_structure(const Presentation& p, const FiniteChainComplex& C,
                                             const AlgebraStructure& a, bool reverse_pivots) {
  if (p.has_differential)
    throw std::invalid_argument("lifting expects a presentation without differential");
  for (const GeneratorSymbol& g : p.gens.all())
    if (g.degree != 0)
      throw std::invalid_argument("lifting expects generators concentrated in degree zero");

  std::map<int, MultilinearMap> lifts;
  std::map<int, Matrix> matrices;  // per arity
  for (int id = 0; id < p.gens.size(); ++id) {
    const GeneratorSymbol& g = p.gens[id];
    HomBasis dom(C, g.arity, 1);
    HomBasis cod(C, g.arity, 0);
    auto mit = matrices.find(g.arity);
    if (mit == matrices.end())
      mit = matrices.emplace(g.arity, end_differential_matrix(C, g.arity, 1)).first;
    Matrix m = mit->second;
    if (reverse_pivots) {
      Matrix r(m.field(), m.rows(), m.cols());
      for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) r.set(i, m.cols() - 1 - j, m.at(i, j));
      m = std::move(r);
    }
    std::optional<std::vector<Scalar>> x = solve(m, cod.coordinates(a.maps.at(id)));
    if (!x)
      throw std::runtime_error("no lift for generator " + g.name +
                               ": the structure does not act trivially on homology");
    std::vector<Scalar> coords = *x;
    if (reverse_pivots) std::reverse(coords.begin(), coords.end());
    lifts.emplace(id, dom.from_coordinates(C, coords));
  }
  return lifts;
}

std::map<int, MultilinearMap> transfer_assignment(const Presentation& linked,
                                                  const Presentation& base,
                                                  const AlgebraStructure& alpha,
                                                  const std::map<int, MultilinearMap>& lifts) {
  std::map<int, MultilinearMap> assignment;
  for (int id = 0; id < linked.gens.size(); ++id) {
    const std::string& name = linked.gens[id].name;
    if (name.rfind("s.", 0) == 0) {
      int b = base.gens.index_of(name.substr(2));
      if (b < 0) throw std::invalid_argument("suspended generator without base: " + name);
      assignment.emplace(id, lifts.at(b));
    } else {
      int b = base.gens.index_of(name);
      if (b < 0) throw std::invalid_argument("generator absent from the base: " + name);
      assignment.emplace(id, alpha.maps.at(b));
    }
  }
  return assignment;
}

std::vector<Scalar> induced_operation(const FiniteChainComplex& C, const ComplexHomology& H,
                                      const GeneratorTable& table,
                                      const std::map<int, MultilinearMap>& assignment,
                                      const OperadElement& cls,
                                      const std::vector<ChainVector>& inputs) {
  if (static_cast<int>(inputs.size()) != cls.arity())
    throw std::invalid_argument("input count does not match the arity of the class");
  int in_degree = 0;
  for (const ChainVector& x : inputs) {
    if (!is_cycle(C, x)) throw std::invalid_argument("induced operation on a non-cycle input");
    in_degree += x.degree;
  }
  if (cls.is_zero())
    return std::vector<Scalar>(H.dimension(in_degree), Scalar::zero(C.field()));
  ChainVector v = apply_map(C, element_map(C, table, assignment, cls), inputs);
  if (!is_cycle(C, v))
    throw std::logic_error("evaluated operation failed to be closed; the assignment is inconsistent");
  return H.class_coordinates(C, v);
}

bool integrality_probe(const Presentation& p, int max_arity) {
  ComponentEngine engine(p);
  std::map<int, std::vector<OperadElement>> basis;  // arity -> quotient basis
  for (int n = 2; n + 1 < max_arity + 1; ++n) {
    for (int d : engine.degrees(n)) {
      const int dim = engine.dimension(n, d);
      for (int j = 0; j < dim; ++j) {
        std::vector<Scalar> unit(dim, Scalar::zero(p.field));
        unit[j] = Scalar::one(p.field);
        basis[n].push_back(engine.element_from_survivors(n, d, unit));
      }
    }
  }
  for (const auto& [k, as] : basis)
    for (const auto& [m, bs] : basis) {
      if (k + m - 1 > max_arity) continue;
      for (const OperadElement& a : as)
        for (const OperadElement& b : bs)
          for (int slot = 1; slot <= k; ++slot)
            if (engine.reduce(compose(p.gens, a, slot, b)).is_zero()) return false;
    }
  return true;
}

}  // namespace opd
