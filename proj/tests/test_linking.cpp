#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/homology.hpp"
#include "operad/linking.hpp"
#include "operad/parser.hpp"

using namespace opd;

namespace {

const char* kAssoc = R"(operad assoc
field Q
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

const char* kCommFree = R"(operad comm_free
field Q
gen mu arity=2 degree=0 symmetry=none
rel mu(1,2) - mu(2,1)
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

const char* kLie = R"(operad lie
field Q
gen la arity=2 degree=0 symmetry=antisymmetric
rel la(la(1,2),3) + la(la(2,3),1) + la(la(3,1),2)
)";

const char* kFreeMu = R"(operad free_mu
field Q
gen mu arity=2 degree=0 symmetry=none
)";

Scalar q(long n) { return Scalar(Field::rationals(), n); }

// Homology of the self-link, computed once per presentation text and shared
// across cases (all computations are deterministic and cache-friendly).
HomologyTable& shared_table(const char* text) {
  static std::map<std::string, HomologyTable> cache;
  auto it = cache.find(text);
  if (it == cache.end()) {
    it = cache.emplace(text, homology_table(link_generating(parse_presentation(text)), 4)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("the self-link suspends every generator with boundary the original") {
  Presentation lu = link_generating(parse_presentation(kAssoc));
  REQUIRE(lu.gens.size() == 2);
  CHECK(lu.gens[1].name == "s.mu");
  CHECK(lu.gens[1].degree == 1);
  CHECK(lu.gens[1].symmetry == Symmetry::none);
  CHECK(lu.relations.size() == 1);
  CHECK(lu.has_differential);
  CHECK(lu.differential.at(1) == corolla(lu.field, lu.gens, 0));
  CHECK(lu.differential.find(0) == lu.differential.end());  // mu stays a cycle

  // the base embeds: degree-0 slices agree with the base quotients
  ComponentEngine base(parse_presentation(kAssoc));
  ComponentEngine linked(lu);
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(linked.dimension(n, 0) == base.dimension(n, 0));
  }
}

TEST_CASE("universal linking validates its attaching maps") {
  Presentation q = link_generating(parse_presentation(kAssoc));

  GeneratorSymbol t{"t", 2, 2, Symmetry::none};
  OperadElement not_cycle = corolla(q.field, q.gens, 1);  // d(s.mu) = mu != 0
  CHECK_THROWS_AS(link_universal(q, {t}, {not_cycle}), std::invalid_argument);

  GeneratorSymbol wrong_arity{"w", 3, 1, Symmetry::none};
  OperadElement mu = corolla(q.field, q.gens, 0);
  CHECK_THROWS_AS(link_universal(q, {wrong_arity}, {mu}), std::invalid_argument);

  GeneratorSymbol wrong_degree{"v", 2, 3, Symmetry::none};
  CHECK_THROWS_AS(link_universal(q, {wrong_degree}, {mu}), std::invalid_argument);
}

TEST_CASE("linking with a zero boundary is a coproduct with a free operad") {
  Presentation base = parse_presentation(kFreeMu);
  GeneratorSymbol nu{"nu", 2, 1, Symmetry::none};
  Presentation out = link_universal(base, {nu}, {OperadElement(base.field, 2)});
  ComponentEngine engine(out);
  // free on two binary generators of degrees 0 and 1
  CHECK(engine.dimension(2, 0) == 2);
  CHECK(engine.dimension(2, 1) == 2);
  CHECK(engine.dimension(3, 0) == 12);
  CHECK(engine.dimension(3, 1) == 24);
  CHECK(engine.dimension(3, 2) == 12);
  // every adjoined generator is a free cycle
  HomologyTable t = homology_table(out, 3);
  CHECK(t.dimension(2, 0) == 2);
  CHECK(t.dimension(2, 1) == 2);
}

TEST_CASE("an iterated link folds its steps in order") {
  LinkSpec spec;
  spec.base = parse_presentation(kAssoc);
  LinkStep step;
  step.gens.push_back(GeneratorSymbol{"s.mu", 2, 1, Symmetry::none});
  step.attach.push_back("mu");
  spec.steps.push_back(step);

  Presentation folded = link_chain(spec);
  Presentation direct = link_generating(parse_presentation(kAssoc));
  CHECK(folded.gens == direct.gens);
  CHECK(folded.relations == direct.relations);
  CHECK(folded.differential == direct.differential);

  // zero attachment spelled "0"
  LinkSpec with_zero;
  with_zero.base = parse_presentation(kFreeMu);
  LinkStep z;
  z.gens.push_back(GeneratorSymbol{"nu", 2, 1, Symmetry::none});
  z.attach.push_back("0");
  with_zero.steps.push_back(z);
  Presentation folded_zero = link_chain(with_zero);
  CHECK(folded_zero.differential.at(1).is_zero());

  // a single empty spec returns the base unchanged up to validation
  LinkSpec trivial;
  trivial.base = parse_presentation(kAssoc);
  Presentation same = link_chain(trivial);
  CHECK(same.gens == trivial.base.gens);
}

TEST_CASE("homology of the self-linked associative operad") {
  HomologyTable& table = shared_table(kAssoc);

  for (int d = -1; d <= 2; ++d) {
    CAPTURE(d);
    CHECK(table.dimension(2, d) == 0);
  }
  CHECK(table.dimension(3, 0) == 0);
  CHECK(table.dimension(3, 1) == 6);
  CHECK(table.dimension(3, 2) == 0);
  // Arity 4 carries the syzygies among the suspended relation classes: the
  // 120 one-vertex contexts of the relation are independent in degree 1 but
  // their boundaries span only the 96-dimensional degree-0 ideal slice,
  // leaving a forced 24-dimensional kernel one degree up.
  CHECK(table.dimension(4, 0) == 0);
  CHECK(table.dimension(4, 1) == 0);
  CHECK(table.dimension(4, 2) == 24);
  CHECK(table.dimension(4, 3) == 0);

  // the class space is the regular representation of S_3
  const HomologyTable::Slot* slot = table.slot(3, 1);
  REQUIRE(slot != nullptr);
  SigmaSlot sigma{3, 1, {"a", "b", "c", "d", "e", "f"}, slot->transpositions};
  auto chi = sigma.character();
  REQUIRE(chi.size() == 3);  // cycle types (1,1,1), (2,1), (3)
  CHECK(chi[0].first == std::vector<int>{1, 1, 1});
  CHECK(chi[0].second == q(6));
  CHECK(chi[1].second == q(0));
  CHECK(chi[2].second == q(0));

  // transpositions are involutions and satisfy the braid relation
  Matrix t1 = slot->transpositions[0];
  Matrix t2 = slot->transpositions[1];
  Matrix id = Matrix::identity(table.presentation().field, 6);
  CHECK(t1 * t1 == id);
  CHECK(t2 * t2 == id);
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);
}

TEST_CASE("representative matching separates classes, boundaries, and non-cycles") {
  Presentation lu = link_generating(parse_presentation(kAssoc));
  HomologyTable& table = shared_table(kAssoc);

  OperadElement rho = parse_element("s.mu(mu(1,2),3) - s.mu(1,mu(2,3))", lu);
  auto hit = representative_match(table, rho);
  REQUIRE(hit.outcome == RepresentativeMatch::Outcome::match);
  bool nonzero = false;
  for (const Scalar& c : hit.coordinates) nonzero = nonzero || !c.is_zero();
  CHECK(nonzero);

  // any boundary is recognized
  OperadElement x = parse_element("s.mu(s.mu(1,2),3)", lu);
  OperadElement dx = table.engine().differentiate_element(x);
  CHECK(representative_match(table, dx).outcome == RepresentativeMatch::Outcome::boundary);

  // a non-cycle is refused
  OperadElement smu = parse_element("s.mu(1,2)", lu);
  CHECK(representative_match(table, smu).outcome == RepresentativeMatch::Outcome::not_a_cycle);

  // the table's own representatives come back as unit coordinate vectors
  const HomologyTable::Slot* slot = table.slot(3, 1);
  REQUIRE(slot != nullptr);
  for (size_t j = 0; j < slot->representatives.size(); ++j) {
    auto self = representative_match(table, slot->representatives[j]);
    REQUIRE(self.outcome == RepresentativeMatch::Outcome::match);
    for (size_t i = 0; i < self.coordinates.size(); ++i)
      CHECK(self.coordinates[i] == (i == j ? q(1) : q(0)));
  }
}

TEST_CASE("homology of the self-linked free-module commutative operad") {
  Presentation p = parse_presentation(kCommFree);
  ComponentEngine probe(link_generating(p));
  REQUIRE(probe.dimension(3, 0) == 1);
  REQUIRE(probe.dimension(3, 1) == 12);
  REQUIRE(probe.dimension(3, 2) == 12);

  HomologyTable& table = shared_table(kCommFree);
  CHECK(table.dimension(2, 0) == 0);
  CHECK(table.dimension(2, 1) == 1);
  CHECK(table.dimension(3, 0) == 0);
  CHECK(table.dimension(3, 1) == 2);
  CHECK(table.dimension(3, 2) == 3);
  // Euler characteristics of chains and homology agree slot by slot
  CHECK(1 - 12 + 12 == table.dimension(3, 0) - table.dimension(3, 1) + table.dimension(3, 2));

  // the suspended symmetry relation is the (2,1) class
  Presentation lu = link_generating(p);
  OperadElement srel = parse_element("s.mu(1,2) - s.mu(2,1)", lu);
  CHECK(representative_match(table, srel).outcome == RepresentativeMatch::Outcome::match);
}

TEST_CASE("homology of the self-linked bracket operad is the suspended Jacobi class") {
  HomologyTable& table = shared_table(kLie);
  CHECK(table.dimension(2, 0) == 0);
  CHECK(table.dimension(2, 1) == 0);
  CHECK(table.dimension(3, 0) == 0);
  CHECK(table.dimension(3, 1) == 1);
  CHECK(table.dimension(3, 2) == 0);

  // sign representation: transpositions negate, the 3-cycle fixes
  const HomologyTable::Slot* slot = table.slot(3, 1);
  REQUIRE(slot != nullptr);
  CHECK(slot->transpositions[0].at(0, 0) == q(-1));
  CHECK(slot->transpositions[1].at(0, 0) == q(-1));
  SigmaSlot sigma{3, 1, {"j"}, slot->transpositions};
  CHECK(sigma.action({2, 3, 1}).at(0, 0) == q(1));
}

TEST_CASE("minimal homology generators quotient out composite classes") {
  GeneratorReport report = minimal_homology_generators(shared_table(kCommFree));

  CHECK(report.generators.dimension(2, 1) == 1);
  CHECK(report.generators.dimension(3, 1) == 2);
  // every (3,2) class is a composite of two suspended symmetry classes
  CHECK(report.generators.dimension(3, 2) == 0);

  // for the associative operad the (3,1) module survives whole, and the
  // arity-4 syzygy classes are minimal too (no lower classes to compose)
  GeneratorReport ass_report = minimal_homology_generators(shared_table(kAssoc));
  CHECK(ass_report.generators.dimension(3, 1) == 6);
  CHECK(ass_report.generators.dimension(4, 2) == 24);
  CHECK(ass_report.generators.slots.size() == 2);
}

TEST_CASE("relation syzygies match the minimal homology generators") {
  for (const char* text : {kAssoc, kCommFree, kLie}) {
    Presentation p = parse_presentation(text);
    CAPTURE(p.name);
    SigmaModuleGraded syz = relation_module(p, 4);
    GeneratorReport report = minimal_homology_generators(shared_table(text));

    for (int n = 2; n <= 4; ++n) {
      for (int d = -1; d <= n + 1; ++d) {
        CAPTURE(n);
        CAPTURE(d);
        CHECK(syz.dimension(n, d) == report.generators.dimension(n, d));
      }
    }
    // matching slots carry isomorphic representations (equal characters)
    for (const SigmaSlot& s : syz.slots) {
      const SigmaSlot* h = report.generators.find(s.arity, s.degree);
      REQUIRE(h != nullptr);
      CHECK(s.character() == h->character());
    }
  }
}

TEST_CASE("relation syzygies of the associative operad") {
  SigmaModuleGraded syz = relation_module(parse_presentation(kAssoc), 4);
  // the suspended relation span in arity 3, and the suspended span of the
  // relations-among-relations in arity 4
  REQUIRE(syz.slots.size() == 2);
  CHECK(syz.slots[0].arity == 3);
  CHECK(syz.slots[0].degree == 1);
  CHECK(syz.slots[0].dimension() == 6);
  CHECK(syz.slots[0].labels[0].substr(0, 2) == "s(");
  CHECK(syz.slots[1].arity == 4);
  CHECK(syz.slots[1].degree == 2);
  CHECK(syz.slots[1].dimension() == 24);

  // the free operad has no syzygies and an exact self-link
  SigmaModuleGraded none = relation_module(parse_presentation(kFreeMu), 4);
  CHECK(none.slots.empty());
  HomologyTable free_table = homology_table(link_generating(parse_presentation(kFreeMu)), 4);
  for (int n = 2; n <= 4; ++n)
    for (int d = -1; d <= n; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(free_table.dimension(n, d) == 0);
    }

  // graded or differential inputs are refused
  CHECK_THROWS_AS(relation_module(link_generating(parse_presentation(kAssoc)), 3),
                  std::invalid_argument);
}

TEST_CASE("homology dimensions are stable under generator reordering") {
  const char* reversed = R"(operad assoc_rev
field Q
gen s.mu arity=2 degree=1 symmetry=none
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
diff s.mu -> mu
)";
  HomologyTable rev = homology_table(parse_presentation(reversed), 4);
  HomologyTable& fwd = shared_table(kAssoc);
  for (int n = 2; n <= 4; ++n)
    for (int d = -1; d <= n; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(rev.dimension(n, d) == fwd.dimension(n, d));
    }
}
