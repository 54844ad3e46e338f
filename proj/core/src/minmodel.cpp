#include "operad/minmodel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "operad/component.hpp"
#include "operad/matrix.hpp"
#include "operad/sparse.hpp"

namespace opd {

namespace {

// sigma = t_{i_k} ... t_{i_1} with the i's recorded by bubble sort, matching
// the convention of the stored class-action matrices.
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

Matrix class_action(const Field& f, const std::vector<Matrix>& transpositions, int dim,
                    const std::vector<int>& sigma) {
  Matrix m = Matrix::identity(f, dim);
  for (int i : adjacent_word(sigma)) m = transpositions[static_cast<size_t>(i - 1)] * m;
  return m;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

OperadElement combine(const Field& f, int arity, const std::vector<OperadElement>& reps,
                      const std::vector<Scalar>& coords) {
  OperadElement acc(f, arity);
  for (size_t j = 0; j < coords.size(); ++j)
    if (!coords[j].is_zero()) acc += reps[j].scaled(coords[j]);
  return acc;
}

// The kernel classes at one degree of the chosen arity.
struct Piece {
  int degree;
  Matrix kernel;  // class-coordinate columns, independent
  const HomologyTable::Slot* slot;
};

}  // namespace

ResolutionState start_resolution(const Presentation& p, int max_arity) {
  validate_presentation(p);
  if (p.has_differential)
    throw std::invalid_argument("resolution: the target must not carry a differential");
  for (const GeneratorSymbol& g : p.gens.all())
    if (g.degree != 0)
      throw std::invalid_argument("resolution: target generators must sit in degree zero");
  if (!p.planar && !p.field.is_rationals() &&
      static_cast<int>(p.field.characteristic()) <= max_arity)
    throw std::invalid_argument(
        "resolution: symmetric classes are averaged over leaf orbits, which divides by "
        "factorials up to the arity bound; use characteristic zero or a larger prime");
  ResolutionState st;
  st.target = p;
  st.prefix.base = p;
  st.prefix.base.relations.clear();
  return st;
}

RelationModule next_relation_module(const ResolutionState& state, int max_arity) {
  Presentation current = link_chain(state.prefix);
  HomologyTable table(current, max_arity);
  ComponentEngine target(state.target);
  const Field& f = current.field;
  const bool planar = current.planar;

  for (int n = 2; n <= max_arity; ++n) {
    std::vector<Piece> pieces;
    std::vector<int> degs = table.degrees(n);
    std::sort(degs.begin(), degs.end());
    for (int d : degs) {
      const HomologyTable::Slot* slot = table.slot(n, d);
      if (!slot) continue;
      const int h = static_cast<int>(slot->representatives.size());
      if (d > 0) {
        pieces.push_back({d, Matrix::identity(f, h), slot});
        continue;
      }
      // Degree zero: classes reducing to zero in the target.
      if (target.dimension(n, 0) == 0) {
        pieces.push_back({0, Matrix::identity(f, h), slot});
        continue;
      }
      std::vector<std::vector<Scalar>> images;
      for (const OperadElement& r : slot->representatives)
        images.push_back(target.survivor_coordinates(n, 0, target.reduce(r)));
      Matrix k = kernel_basis(Matrix::from_columns(f, target.dimension(n, 0), images));
      if (k.cols() > 0) pieces.push_back({0, k, slot});
    }
    if (pieces.empty()) continue;

    // Per piece: orbit generators of the kernel module, equivariant cycle
    // representatives, and the presentation of the module over the free
    // cover on those generators.
    struct Built {
      int degree = 0;
      std::vector<std::vector<Scalar>> gens;  // class coordinates
      std::vector<OperadElement> attach;
      std::vector<std::vector<Scalar>> relations;  // over (gen, permutation) pairs
    };
    const std::vector<std::vector<int>> perms = planar ? std::vector<std::vector<int>>{}
                                                       : all_permutations(n);
    Scalar inv_order = Scalar::one(f);
    for (int i = 2; i <= n && !planar; ++i) inv_order *= Scalar(f, i);
    if (!planar) inv_order = inv_order.inverse();

    std::vector<Built> built;
    for (const Piece& piece : pieces) {
      const int h = static_cast<int>(piece.slot->representatives.size());
      Built b;
      b.degree = piece.degree;
      if (planar) {
        for (int j = 0; j < piece.kernel.cols(); ++j) {
          std::vector<Scalar> c = piece.kernel.column(j);
          b.gens.push_back(c);
          b.attach.push_back(combine(f, n, piece.slot->representatives, c));
        }
        built.push_back(std::move(b));
        continue;
      }

      // Equivariant section of the class projection, by orbit averaging.
      auto section = [&](const std::vector<Scalar>& c) {
        OperadElement acc(f, n);
        for (const std::vector<int>& sigma : perms) {
          std::vector<Scalar> moved =
              class_action(f, piece.slot->transpositions, h, inverse_permutation(sigma)).apply(c);
          acc += act(current.gens, sigma, combine(f, n, piece.slot->representatives, moved));
        }
        return acc.scaled(inv_order);
      };

      // Greedy orbit generators: a weighted stab at a generic element first,
      // then the kernel columns themselves, closing the span under the
      // transposition matrices after each pick.
      std::vector<std::vector<Scalar>> candidates;
      {
        std::vector<Scalar> w(static_cast<size_t>(h), Scalar::zero(f));
        Scalar weight = Scalar::one(f);
        for (int j = 0; j < piece.kernel.cols(); ++j) {
          std::vector<Scalar> c = piece.kernel.column(j);
          for (int i = 0; i < h; ++i) w[static_cast<size_t>(i)] += c[static_cast<size_t>(i)] * weight;
          weight *= Scalar(f, 2);
          candidates.push_back(std::move(c));
        }
        candidates.insert(candidates.begin(), std::move(w));
      }
      EchelonBasis span(f);
      for (const std::vector<Scalar>& c : candidates) {
        if (span.contains(sparse_from_dense(c))) continue;
        b.gens.push_back(c);
        b.attach.push_back(section(c));
        std::vector<std::vector<Scalar>> frontier{c};
        while (!frontier.empty()) {
          std::vector<std::vector<Scalar>> next;
          for (const std::vector<Scalar>& v : frontier)
            if (span.add(sparse_from_dense(v)))
              for (const Matrix& t : piece.slot->transpositions) next.push_back(t.apply(v));
          frontier = std::move(next);
        }
      }
      for (int j = 0; j < piece.kernel.cols(); ++j)
        if (!span.contains(sparse_from_dense(piece.kernel.column(j))))
          throw std::logic_error("resolution: orbit generators failed to span the kernel");

      // Module presentation: kernel of the free cover on the chosen
      // generators, columns indexed by (generator, permutation).
      std::vector<std::vector<Scalar>> cover;
      for (const std::vector<Scalar>& g : b.gens)
        for (const std::vector<int>& sigma : perms)
          cover.push_back(class_action(f, piece.slot->transpositions, h, sigma).apply(g));
      Matrix rel_cols = kernel_basis(Matrix::from_columns(f, h, cover));
      for (int j = 0; j < rel_cols.cols(); ++j) b.relations.push_back(rel_cols.column(j));
      built.push_back(std::move(b));
    }

    // Names: m<arity> for a lone generator, m<arity>_<k> otherwise, shifted
    // away from any existing generator name.
    size_t total = 0;
    for (const Built& b : built) total += b.gens.size();
    std::vector<std::string> names;
    for (size_t j = 0; j < total; ++j) {
      std::string name = "m" + std::to_string(n);
      if (total > 1) name += "_" + std::to_string(j + 1);
      while (current.gens.index_of(name) >= 0) name = "_" + name;
      names.push_back(name);
    }

    RelationModule out;
    out.arity = n;
    GeneratorTable ext = current.gens;
    std::vector<int> ids;
    size_t at = 0;
    for (const Built& b : built) {
      for (size_t j = 0; j < b.gens.size(); ++j, ++at) {
        GeneratorSymbol sym{names[at], n, b.degree + 1, Symmetry::none};
        out.step.gens.push_back(sym);
        out.step.attach.push_back(b.attach[j].to_string(current.gens));
        ids.push_back(ext.add(sym));
      }
    }
    at = 0;
    for (const Built& b : built) {
      for (const std::vector<Scalar>& r : b.relations) {
        OperadElement rel(f, n);
        size_t col = 0;
        for (size_t j = 0; j < b.gens.size(); ++j) {
          const int gid = ids[at + j];
          for (const std::vector<int>& sigma : perms) {
            if (!r[col].is_zero())
              rel += act(ext, sigma, corolla(f, ext, gid)).scaled(r[col]);
            ++col;
          }
        }
        out.step.relations.push_back(rel.to_string(ext));
      }
      at += b.gens.size();
    }

    // The killed classes as a graded module, for reporting.
    for (const Piece& piece : pieces) {
      SigmaSlot slot{n, piece.degree, {}, {}};
      for (int j = 0; j < piece.kernel.cols(); ++j)
        slot.labels.push_back(
            combine(f, n, piece.slot->representatives, piece.kernel.column(j))
                .to_string(current.gens));
      if (!planar) {
        if (piece.degree > 0) {
          slot.transpositions = piece.slot->transpositions;
        } else {
          // Restrict the class action to the kernel subspace.
          for (const Matrix& t : piece.slot->transpositions) {
            std::vector<std::vector<Scalar>> cols;
            for (int j = 0; j < piece.kernel.cols(); ++j) {
              auto x = solve(piece.kernel, t.apply(piece.kernel.column(j)));
              if (!x) throw std::logic_error("resolution: kernel is not action-stable");
              cols.push_back(*x);
            }
            slot.transpositions.push_back(
                Matrix::from_columns(f, piece.kernel.cols(), cols));
          }
        }
      }
      out.classes.slots.push_back(std::move(slot));
    }
    return out;
  }

  RelationModule out;
  out.exhausted = true;
  return out;
}

void apply_relation_module(ResolutionState& state, const RelationModule& m) {
  if (m.exhausted) return;
  state.prefix.steps.push_back(m.step);
}

LinkSpec minimal_resolution(const Presentation& p, int max_arity) {
  ResolutionState st = start_resolution(p, max_arity);
  int last = 1;
  while (true) {
    RelationModule m = next_relation_module(st, max_arity);
    if (m.exhausted) break;
    if (m.arity <= last)
      throw std::logic_error("resolution stalled: adjoined arity did not increase");
    last = m.arity;
    apply_relation_module(st, m);
  }
  return st.prefix;
}

MinimalityReport is_minimal(const LinkSpec& spec) {
  MinimalityReport rep;
  int prev_max = 0;
  for (const GeneratorSymbol& g : spec.base.gens.all()) prev_max = std::max(prev_max, g.arity);
  for (size_t i = 0; i < spec.steps.size(); ++i) {
    if (spec.steps[i].gens.empty()) continue;
    int lo = spec.steps[i].gens.front().arity, hi = lo;
    for (const GeneratorSymbol& g : spec.steps[i].gens) {
      lo = std::min(lo, g.arity);
      hi = std::max(hi, g.arity);
    }
    if (lo <= prev_max) {
      rep.minimal = false;
      rep.violations.push_back("step " + std::to_string(i + 1) + " adjoins arity " +
                               std::to_string(lo) +
                               " alongside earlier operands reaching arity " +
                               std::to_string(prev_max));
    }
    prev_max = std::max(prev_max, hi);
  }

  Presentation full = link_chain(spec);
  for (const auto& [id, image] : full.differential) {
    for (const auto& [code, term] : image.terms()) {
      bool corolla_term = !term.tree.is_leaf();
      for (const Tree& k : term.tree.kids) corolla_term = corolla_term && k.is_leaf();
      if (corolla_term) {
        rep.minimal = false;
        rep.violations.push_back("generator '" + full.gens[id].name +
                                 "' has the indecomposable differential term " +
                                 tree_to_string(term.tree, full.gens));
        break;
      }
    }
  }
  return rep;
}

std::map<int, long> ainfty_reference(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("associahedron reference expects between 2 and 8 leaves");
  // trees[m]: planar rooted trees with m leaves, internal arities >= 2,
  // counted by total arity excess.
  std::vector<std::map<int, long>> trees(static_cast<size_t>(n) + 1);
  trees[1] = {{0, 1}};
  for (int m = 2; m <= n; ++m) {
    // ways[k][j]: ordered forests of k proper subtrees with j leaves total.
    std::vector<std::vector<std::map<int, long>>> ways(
        static_cast<size_t>(m) + 1, std::vector<std::map<int, long>>(static_cast<size_t>(m) + 1));
    ways[0][0] = {{0, 1}};
    for (int k = 1; k <= m; ++k)
      for (int j = k; j <= m; ++j)
        for (int first = 1; first <= std::min(j - k + 1, m - 1); ++first)
          for (const auto& [d1, c1] : trees[static_cast<size_t>(first)])
            for (const auto& [d2, c2] : ways[static_cast<size_t>(k - 1)][static_cast<size_t>(j - first)])
              ways[static_cast<size_t>(k)][static_cast<size_t>(j)][d1 + d2] += c1 * c2;
    for (int k = 2; k <= m; ++k)
      for (const auto& [d, c] : ways[static_cast<size_t>(k)][static_cast<size_t>(m)])
        trees[static_cast<size_t>(m)][d + k - 2] += c;
  }
  return trees[static_cast<size_t>(n)];
}

}  // namespace opd
