#include "operad/linking.hpp"

#include <stdexcept>

#include "operad/component.hpp"
#include "operad/parser.hpp"

namespace opd {

Presentation link_universal(const Presentation& q,
                            const std::vector<GeneratorSymbol>& new_gens,
                            const std::vector<OperadElement>& phi) {
  validate_presentation(q);
  if (new_gens.size() != phi.size())
    throw std::invalid_argument("link_universal: one boundary per new generator required");

  // Cycle checks run inside q, before the new generators exist.
  ComponentEngine base(q);
  for (size_t i = 0; i < new_gens.size(); ++i) {
    const GeneratorSymbol& g = new_gens[i];
    if (phi[i].is_zero()) continue;
    if (phi[i].arity() != g.arity)
      throw std::invalid_argument("link_universal: boundary arity mismatch for '" + g.name + "'");
    if (phi[i].homogeneous_degree(q.gens) != g.degree - 1)
      throw std::invalid_argument("link_universal: boundary of '" + g.name +
                                  "' must live one degree below the generator");
    if (!base.reduce(base.differentiate_element(phi[i])).is_zero())
      throw std::invalid_argument("link_universal: boundary of '" + g.name + "' is not a cycle");
  }

  Presentation out = q;
  out.name = "lu." + q.name;
  // Generator ids of q are unchanged, so relation and image trees carry over.
  for (size_t i = 0; i < new_gens.size(); ++i) {
    const int id = out.gens.size();
    out.gens.add(new_gens[i]);
    OperadElement image = phi[i];
    if (image.is_zero()) image = OperadElement(q.field, new_gens[i].arity);
    out.differential[id] = std::move(image);
  }
  out.has_differential = true;

  validate_presentation(out);
  return out;
}

Presentation link_generating(const Presentation& p) {
  validate_presentation(p);
  if (p.has_differential)
    throw std::invalid_argument("link_generating: input already carries a differential");

  std::vector<GeneratorSymbol> suspended;
  std::vector<OperadElement> phi;
  for (int i = 0; i < p.gens.size(); ++i) {
    GeneratorSymbol g = p.gens[i];
    g.name = "s." + g.name;
    if (p.gens.index_of(g.name) >= 0)
      throw std::invalid_argument("link_generating: generator name '" + g.name +
                                  "' collides with a suspended copy");
    g.degree += 1;
    suspended.push_back(g);
    phi.push_back(corolla(p.field, p.gens, i));
  }
  return link_universal(p, suspended, phi);
}

Presentation link_chain(const LinkSpec& spec) {
  Presentation acc = spec.base;
  validate_presentation(acc);
  for (const LinkStep& step : spec.steps) {
    if (step.gens.size() != step.attach.size())
      throw std::invalid_argument("link_chain: one attaching expression per generator required");
    std::vector<OperadElement> phi;
    for (size_t i = 0; i < step.gens.size(); ++i) {
      if (step.attach[i] == "0") {
        phi.emplace_back(acc.field, step.gens[i].arity);
      } else {
        phi.push_back(parse_element(step.attach[i], acc));
      }
    }
    acc = link_universal(acc, step.gens, phi);
    if (!step.relations.empty()) {
      for (const std::string& r : step.relations) acc.relations.push_back(parse_element(r, acc));
      validate_presentation(acc);
    }
  }
  return acc;
}

}  // namespace opd
