#include "operad/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "operad/sparse.hpp"

namespace opd {

namespace {

// sigma = t_{i_k} ... t_{i_1} with the i's recorded by bubble sort; the
// action matrix is the matching product of transposition matrices.
std::vector<int> adjacent_word(std::vector<int> v) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
        moved = true;
      }
    }
  }
  return word;
}

std::vector<int> cycle_type(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> type;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(sigma[j] - 1);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// Class coordinates of v inside span(reps) + span(boundaries): the first
// block of any solution, unique because rep columns are independent modulo
// the boundary span.
std::vector<Scalar> split_off_classes(const Matrix& reps, const Matrix& boundaries,
                                      const std::vector<Scalar>& v) {
  auto x = solve(reps.augment(boundaries), v);
  if (!x) throw std::logic_error("homology: vector outside cycle span");
  return std::vector<Scalar>(x->begin(), x->begin() + reps.cols());
}

// Batched split_off_classes: one elimination for all columns of vs.
Matrix split_off_classes_columns(const Matrix& reps, const Matrix& boundaries, const Matrix& vs) {
  Matrix sol = solve_columns(reps.augment(boundaries), vs);
  std::vector<std::vector<Scalar>> cols;
  for (int j = 0; j < sol.cols(); ++j) {
    std::vector<Scalar> c = sol.column(j);
    cols.emplace_back(c.begin(), c.begin() + reps.cols());
  }
  return Matrix::from_columns(reps.field(), reps.cols(), cols);
}

// Columns [lo, lo+count) of m as their own matrix.
Matrix column_block(const Matrix& m, int lo, int count) {
  std::vector<std::vector<Scalar>> cols;
  for (int j = 0; j < count; ++j) cols.push_back(m.column(lo + j));
  return Matrix::from_columns(m.field(), m.rows(), cols);
}

}  // namespace

Matrix SigmaSlot::action(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != arity)
    throw std::invalid_argument("sigma slot: permutation size mismatch");
  const Field& f = transpositions.empty() ? Field() : transpositions[0].field();
  Matrix m = Matrix::identity(f, dimension());
  for (int i : adjacent_word(sigma)) m = transpositions[static_cast<size_t>(i - 1)] * m;
  return m;
}

std::vector<std::pair<std::vector<int>, Scalar>> SigmaSlot::character() const {
  std::vector<int> sigma(arity);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::map<std::vector<int>, Scalar> by_type;
  do {
    std::vector<int> type = cycle_type(sigma);
    if (by_type.find(type) == by_type.end()) by_type.emplace(type, trace(action(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::vector<std::pair<std::vector<int>, Scalar>>(by_type.begin(), by_type.end());
}

const SigmaSlot* SigmaModuleGraded::find(int arity, int degree) const {
  for (const SigmaSlot& s : slots)
    if (s.arity == arity && s.degree == degree) return &s;
  return nullptr;
}

int SigmaModuleGraded::dimension(int arity, int degree) const {
  const SigmaSlot* s = find(arity, degree);
  return s ? s->dimension() : 0;
}

HomologyTable::HomologyTable(Presentation p, int max_arity)
    : engine_(std::move(p)), max_arity_(max_arity) {
  if (max_arity_ < 2) throw std::invalid_argument("homology: arity bound must be at least 2");
  const Field& f = engine_.field();
  const GeneratorTable& gens = engine_.presentation().gens;

  for (int n = 2; n <= max_arity_; ++n) {
    for (int d : engine_.degrees(n)) {
      const int dim = engine_.dimension(n, d);
      if (dim == 0) continue;
      Matrix down = engine_.differential_matrix(n, d);
      Matrix up = engine_.differential_matrix(n, d + 1);
      Matrix cycles = kernel_basis(down);
      if (cycles.cols() == 0) continue;
      SubspaceOps so = subspace_ops(up, cycles);
      Matrix reps = so.quotient_representatives;
      if (reps.cols() == 0) continue;

      Slot slot{n, d, {}, reps, up, {}};
      for (int j = 0; j < reps.cols(); ++j)
        slot.representatives.push_back(engine_.element_from_survivors(n, d, reps.column(j)));

      // Planar components carry no leaf-permutation action.
      if (!engine_.presentation().planar) {
        std::vector<std::vector<Scalar>> moved;
        for (int i = 1; i < n; ++i) {
          std::vector<int> sigma(n);
          std::iota(sigma.begin(), sigma.end(), 1);
          std::swap(sigma[i - 1], sigma[i]);
          for (const OperadElement& r : slot.representatives)
            moved.push_back(
                engine_.survivor_coordinates(n, d, engine_.reduce(act(gens, sigma, r))));
        }
        Matrix cls = split_off_classes_columns(reps, up, Matrix::from_columns(f, dim, moved));
        for (int i = 0; i < n - 1; ++i)
          slot.transpositions.push_back(column_block(cls, i * reps.cols(), reps.cols()));
      }
      slots_.emplace(std::make_pair(n, d), std::move(slot));
    }
  }
}

int HomologyTable::dimension(int arity, int degree) const {
  auto it = slots_.find({arity, degree});
  return it == slots_.end() ? 0 : static_cast<int>(it->second.representatives.size());
}

std::vector<int> HomologyTable::degrees(int arity) const {
  std::vector<int> out;
  for (const auto& [key, slot] : slots_)
    if (key.first == arity) out.push_back(key.second);
  std::sort(out.rbegin(), out.rend());
  return out;
}

const HomologyTable::Slot* HomologyTable::slot(int arity, int degree) const {
  auto it = slots_.find({arity, degree});
  return it == slots_.end() ? nullptr : &it->second;
}

std::vector<Scalar> HomologyTable::class_coordinates(
    int arity, int degree, const std::vector<Scalar>& survivor_coords) const {
  const Slot* s = slot(arity, degree);
  if (s == nullptr) return {};
  return split_off_classes(s->representative_coordinates, s->boundary_span, survivor_coords);
}

HomologyTable homology_table(const Presentation& p, int max_arity) {
  return HomologyTable(p, max_arity);
}

RepresentativeMatch representative_match(HomologyTable& table, const OperadElement& candidate) {
  const int n = candidate.arity();
  if (n < 2 || n > table.max_arity())
    throw std::invalid_argument("representative_match: candidate arity outside the table");
  ComponentEngine& engine = table.engine();

  OperadElement reduced = engine.reduce(candidate);
  if (reduced.is_zero()) return {RepresentativeMatch::Outcome::boundary, {}};
  const int d = reduced.homogeneous_degree(engine.presentation().gens);

  if (!engine.reduce(engine.differentiate_element(reduced)).is_zero())
    return {RepresentativeMatch::Outcome::not_a_cycle, {}};

  if (table.dimension(n, d) == 0) return {RepresentativeMatch::Outcome::boundary, {}};
  std::vector<Scalar> coords =
      table.class_coordinates(n, d, engine.survivor_coordinates(n, d, reduced));
  bool all_zero = true;
  for (const Scalar& c : coords) all_zero = all_zero && c.is_zero();
  if (all_zero) return {RepresentativeMatch::Outcome::boundary, {}};
  return {RepresentativeMatch::Outcome::match, std::move(coords)};
}

namespace {

// Smallest subspace containing `vecs` and stable under every matrix in
// `action`; the adjacent transpositions generate the whole group, so this
// is the symmetric-group saturation of the composite span.
std::vector<std::vector<Scalar>> group_closure(const Field& f,
                                               const std::vector<Matrix>& action,
                                               std::vector<std::vector<Scalar>> vecs) {
  EchelonBasis span(f);
  std::vector<std::vector<Scalar>> out;
  std::vector<std::vector<Scalar>> queue = std::move(vecs);
  while (!queue.empty()) {
    std::vector<Scalar> v = std::move(queue.back());
    queue.pop_back();
    if (!span.add(sparse_from_dense(v))) continue;
    for (const Matrix& t : action) queue.push_back(t.apply(v));
    out.push_back(std::move(v));
  }
  return out;
}

// Build the induced transposition matrices on the quotient by `span`, where
// `complement` columns are coset representatives and `full_action` gives the
// ambient transposition matrices.
std::vector<Matrix> induced_action(const Field& f, const std::vector<Matrix>& full_action,
                                   const Matrix& complement, const Matrix& span) {
  const int h = complement.cols();
  Matrix rhs = full_action.front() * complement;
  for (size_t t = 1; t < full_action.size(); ++t)
    rhs = rhs.augment(full_action[t] * complement);
  Matrix sol = solve_columns(complement.augment(span), rhs);
  std::vector<Matrix> out;
  for (size_t t = 0; t < full_action.size(); ++t) {
    std::vector<std::vector<Scalar>> cols;
    for (int j = 0; j < h; ++j) {
      std::vector<Scalar> c = sol.column(static_cast<int>(t) * h + j);
      cols.emplace_back(c.begin(), c.begin() + h);
    }
    out.push_back(Matrix::from_columns(f, h, cols));
  }
  return out;
}

}  // namespace

GeneratorReport minimal_homology_generators(HomologyTable& table) {
  ComponentEngine& engine = table.engine();
  const GeneratorTable& gens = engine.presentation().gens;
  const Field& f = engine.field();
  GeneratorReport report;

  for (int n = 2; n <= table.max_arity(); ++n) {
    for (int d : table.degrees(n)) {
      const HomologyTable::Slot& slot = *table.slot(n, d);
      const int h = static_cast<int>(slot.representatives.size());

      // Span of composites of lower-arity classes, in class coordinates.
      std::vector<std::vector<Scalar>> composites;
      for (int k = 2; k <= n - 1; ++k) {
        const int m = n + 1 - k;
        for (int e : table.degrees(k)) {
          const HomologyTable::Slot* left = table.slot(k, e);
          const HomologyTable::Slot* right = table.slot(m, d - e);
          if (left == nullptr || right == nullptr) continue;
          for (const OperadElement& a : left->representatives) {
            for (const OperadElement& b : right->representatives) {
              for (int i = 1; i <= k; ++i) {
                OperadElement c = engine.reduce(compose(gens, a, i, b));
                composites.push_back(engine.survivor_coordinates(n, d, c));
              }
            }
          }
        }
      }
      std::vector<std::vector<Scalar>> dec;
      if (!composites.empty()) {
        Matrix cls =
            split_off_classes_columns(slot.representative_coordinates, slot.boundary_span,
                                      Matrix::from_columns(f, engine.dimension(n, d), composites));
        for (int j = 0; j < cls.cols(); ++j) dec.push_back(cls.column(j));
      }
      dec = group_closure(f, slot.transpositions, std::move(dec));
      Matrix dec_m = Matrix::from_columns(f, h, dec);
      SubspaceOps so = subspace_ops(dec_m, Matrix::identity(f, h));
      Matrix complement = so.quotient_representatives;
      if (complement.cols() == 0) continue;

      SigmaSlot out{n, d, {}, induced_action(f, slot.transpositions, complement, dec_m)};
      for (int j = 0; j < complement.cols(); ++j) {
        // Complement columns are standard basis vectors; label by the
        // representative cycle they select.
        int pick = -1;
        for (int i = 0; i < h; ++i)
          if (!complement.at(i, j).is_zero()) pick = i;
        out.labels.push_back(slot.representatives[static_cast<size_t>(pick)].to_string(gens));
      }
      report.class_coordinates.emplace(std::make_pair(n, d), complement);
      report.generators.slots.push_back(std::move(out));
    }
  }
  std::sort(report.generators.slots.begin(), report.generators.slots.end(),
            [](const SigmaSlot& a, const SigmaSlot& b) {
              return std::tie(a.arity, a.degree) < std::tie(b.arity, b.degree);
            });
  return report;
}

SigmaModuleGraded relation_module(const Presentation& p, int max_arity) {
  validate_presentation(p);
  if (p.has_differential)
    throw std::invalid_argument("relation_module: input must not carry a differential");
  for (int i = 0; i < p.gens.size(); ++i)
    if (p.gens[i].degree != 0)
      throw std::invalid_argument("relation_module: generators must sit in degree 0");

  // The free operad on G plus a suspended copy, d(s.g) = g; and the same
  // with p's relations adjoined, whose ideal slices are the projection
  // kernel onto the self-link.
  Presentation free_p;
  free_p.name = "syzygy." + p.name;
  free_p.field = p.field;
  free_p.planar = p.planar;
  free_p.gens = p.gens;
  const int ngens = p.gens.size();
  for (int i = 0; i < ngens; ++i) {
    GeneratorSymbol g = p.gens[i];
    g.name = "s." + g.name;
    if (p.gens.index_of(g.name) >= 0)
      throw std::invalid_argument("relation_module: generator name '" + g.name +
                                  "' collides with a suspended copy");
    g.degree += 1;
    free_p.gens.add(g);
  }
  for (int i = 0; i < ngens; ++i) {
    free_p.differential[i] = OperadElement(p.field, p.gens[i].arity);
    free_p.differential[ngens + i] = corolla(p.field, free_p.gens, i);
  }
  free_p.has_differential = true;

  Presentation rel_p = free_p;
  rel_p.relations = p.relations;

  ComponentEngine free_engine(free_p);
  ComponentEngine rel_engine(rel_p);
  const Field& f = p.field;
  const GeneratorTable& gens = free_p.gens;

  // Slices per slot, all in the shared free coordinates of free_engine.
  // ideal:  span of the relation ideal (the kernel of free -> quotient);
  // relcyc: elements whose derivative falls inside the ideal slice below
  //         (these project to cycles of the quotient);
  // bnd:    derivatives of the ideal slice one degree up;
  // reps:   syzygy classes — ideal cycles modulo bnd.
  std::map<std::pair<int, int>, Matrix> ideal;
  std::map<std::pair<int, int>, Matrix> relcyc;
  std::map<std::pair<int, int>, Matrix> reps;
  std::map<std::pair<int, int>, Matrix> bnd;
  for (int n = 2; n <= max_arity; ++n) {
    for (int d : free_engine.degrees(n)) {
      ideal.emplace(std::make_pair(n, d), rel_engine.ideal_matrix(n, d));
    }
    for (int d : free_engine.degrees(n)) {
      const Matrix& dn = free_engine.differential_matrix(n, d);

      EchelonBasis below(f);
      auto bit = ideal.find({n, d - 1});
      if (bit != ideal.end())
        for (int j = 0; j < bit->second.cols(); ++j)
          below.add(sparse_from_dense(bit->second.column(j)));
      std::vector<std::vector<Scalar>> residues;
      for (int j = 0; j < dn.cols(); ++j)
        residues.push_back(sparse_to_dense(f, dn.rows(), below.reduce(sparse_from_dense(dn.column(j)))));
      Matrix rc = kernel_basis(Matrix::from_columns(f, dn.rows(), residues));
      if (rc.cols() > 0) relcyc.emplace(std::make_pair(n, d), rc);

      Matrix k = subspace_ops(ideal.at({n, d}), kernel_basis(dn)).intersection;
      if (k.cols() == 0) continue;
      auto uit = ideal.find({n, d + 1});
      Matrix b = uit == ideal.end()
                     ? Matrix::from_columns(f, k.rows(), {})
                     : free_engine.differential_matrix(n, d + 1) * uit->second;
      Matrix r = subspace_ops(b, k).quotient_representatives;
      if (r.cols() == 0) continue;
      reps.emplace(std::make_pair(n, d), std::move(r));
      bnd.emplace(std::make_pair(n, d), std::move(b));
    }
  }

  auto column_element = [&](const Matrix& m, int j, int n, int d) {
    return free_engine.element_from_survivors(n, d, m.column(j));
  };

  SigmaModuleGraded out;
  for (const auto& [key, rep_m] : reps) {
    const auto [n, d] = key;
    const Matrix& b_m = bnd.at(key);
    const int dim = free_engine.dimension(n, d);
    auto batch_classes = [&](const std::vector<std::vector<Scalar>>& coords) {
      return split_off_classes_columns(rep_m, b_m, Matrix::from_columns(f, dim, coords));
    };

    // Transposition action in class coordinates (planar: no action).
    std::vector<Matrix> action;
    if (!p.planar) {
      std::vector<std::vector<Scalar>> moved;
      for (int i = 1; i < n; ++i) {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1);
        std::swap(sigma[i - 1], sigma[i]);
        for (int j = 0; j < rep_m.cols(); ++j)
          moved.push_back(free_engine.survivor_coordinates(
              n, d, act(gens, sigma, column_element(rep_m, j, n, d))));
      }
      Matrix moved_cls = batch_classes(moved);
      for (int i = 0; i < n - 1; ++i)
        action.push_back(column_block(moved_cls, i * rep_m.cols(), rep_m.cols()));
    }

    // Decomposable classes: derivatives of composites of two lower-arity
    // lifts, saturated under the group action.  A lift composed with a lift
    // has its derivative inside the ideal, and the class only depends on
    // the projected homology classes of the factors.
    std::vector<std::vector<Scalar>> composites;
    for (int k = 2; k <= n - 1; ++k) {
      const int m = n + 1 - k;
      for (int e : free_engine.degrees(k)) {
        auto xit = relcyc.find({k, e});
        auto yit = relcyc.find({m, d + 1 - e});
        if (xit == relcyc.end() || yit == relcyc.end()) continue;
        for (int a = 0; a < xit->second.cols(); ++a) {
          OperadElement x = column_element(xit->second, a, k, e);
          for (int bcol = 0; bcol < yit->second.cols(); ++bcol) {
            OperadElement y = column_element(yit->second, bcol, m, d + 1 - e);
            for (int i = 1; i <= k; ++i)
              composites.push_back(free_engine.survivor_coordinates(
                  n, d, free_engine.differentiate_element(compose(gens, x, i, y))));
          }
        }
      }
    }
    std::vector<std::vector<Scalar>> dec;
    if (!composites.empty()) {
      Matrix cls = batch_classes(composites);
      for (int j = 0; j < cls.cols(); ++j) dec.push_back(cls.column(j));
    }
    dec = group_closure(f, action, std::move(dec));
    Matrix dec_m = Matrix::from_columns(f, rep_m.cols(), dec);
    SubspaceOps so = subspace_ops(dec_m, Matrix::identity(f, rep_m.cols()));
    Matrix complement = so.quotient_representatives;
    if (complement.cols() == 0) continue;

    SigmaSlot slot{n, d + 1, {}, induced_action(f, action, complement, dec_m)};
    for (int j = 0; j < complement.cols(); ++j) {
      int pick = -1;
      for (int i = 0; i < rep_m.cols(); ++i)
        if (!complement.at(i, j).is_zero()) pick = i;
      slot.labels.push_back("s(" + column_element(rep_m, pick, n, d).to_string(gens) + ")");
    }
    out.slots.push_back(std::move(slot));
  }
  return out;
}

}  // namespace opd
