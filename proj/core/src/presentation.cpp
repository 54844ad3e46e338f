#include "operad/presentation.hpp"

#include <stdexcept>

namespace opd {

namespace {

bool planar_leaf_order(const Tree& t, int& expected) {
  if (t.is_leaf()) return t.leaf == expected++;
  for (const Tree& k : t.kids)
    if (!planar_leaf_order(k, expected)) return false;
  return true;
}

void check_planar_element(const OperadElement& e, const std::string& what) {
  for (const auto& [code, term] : e.terms()) {
    int expected = 1;
    if (!planar_leaf_order(term.tree, expected))
      throw std::invalid_argument(what + " must keep leaves in left-to-right order");
  }
}

// A tagged generator spans a one-dimensional module with a fixed character;
// its differential image must transform the same way.
void check_equivariant_image(const Presentation& p, int gid, const OperadElement& img) {
  const GeneratorSymbol& g = p.gens[gid];
  const int k = g.arity;
  auto require = [&](const std::vector<int>& sigma, bool flip) {
    OperadElement moved = act(p.gens, sigma, img);
    if (moved != (flip ? -img : img))
      throw std::invalid_argument("differential image of '" + g.name +
                                  "' does not respect its symmetry type");
  };
  switch (g.symmetry) {
    case Symmetry::none:
      break;
    case Symmetry::symmetric:
    case Symmetry::antisymmetric: {
      const bool flip = g.symmetry == Symmetry::antisymmetric;
      for (int i = 1; i < k; ++i) {
        std::vector<int> sigma(k);
        for (int l = 1; l <= k; ++l) sigma[l - 1] = l;
        std::swap(sigma[i - 1], sigma[i]);
        require(sigma, flip);
      }
      break;
    }
    case Symmetry::cyclic: {
      std::vector<int> rot(k);
      for (int l = 1; l <= k; ++l) rot[l - 1] = l % k + 1;
      require(rot, false);
      break;
    }
  }
}

}  // namespace

void validate_presentation(const Presentation& p) {
  if (p.planar) {
    for (const GeneratorSymbol& g : p.gens.all())
      if (g.symmetry != Symmetry::none)
        throw std::invalid_argument("planar presentations cannot tag generator '" + g.name +
                                    "' with a symmetry");
  }
  for (const OperadElement& r : p.relations) {
    if (r.is_zero()) throw std::invalid_argument("relation is identically zero");
    if (r.arity() < 2) throw std::invalid_argument("relations must have arity at least 2");
    if (!(r.field() == p.field)) throw std::invalid_argument("relation over the wrong field");
    try {
      r.homogeneous_degree(p.gens);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("relation is not degree-homogeneous");
    }
    if (p.planar) check_planar_element(r, "planar relations");
  }
  for (const auto& [gid, img] : p.differential) {
    if (gid < 0 || gid >= p.gens.size())
      throw std::invalid_argument("differential on an unknown generator");
    const GeneratorSymbol& g = p.gens[gid];
    if (img.is_zero()) continue;
    if (!(img.field() == p.field))
      throw std::invalid_argument("differential image over the wrong field");
    if (img.arity() != g.arity)
      throw std::invalid_argument("differential image arity does not match '" + g.name + "'");
    try {
      if (img.homogeneous_degree(p.gens) != g.degree - 1)
        throw std::invalid_argument("differential image of '" + g.name +
                                    "' must drop the degree by one");
    } catch (const std::logic_error&) {
      throw std::invalid_argument("differential image of '" + g.name +
                                  "' is not degree-homogeneous");
    }
    if (p.planar) check_planar_element(img, "planar differential images");
    check_equivariant_image(p, gid, img);
  }
}

std::string presentation_to_text(const Presentation& p) {
  std::string out;
  if (!p.name.empty()) out += "operad " + p.name + "\n";
  out += "field " + p.field.to_string() + "\n";
  if (p.planar) out += "planar\n";
  for (const GeneratorSymbol& g : p.gens.all()) {
    out += "gen " + g.name + " arity=" + std::to_string(g.arity) +
           " degree=" + std::to_string(g.degree) + " symmetry=" + symmetry_name(g.symmetry) +
           "\n";
  }
  for (const OperadElement& r : p.relations) out += "rel " + r.to_string(p.gens) + "\n";
  for (const auto& [gid, img] : p.differential)
    out += "diff " + p.gens[gid].name + " -> " + img.to_string(p.gens) + "\n";
  return out;
}

}  // namespace opd
