#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/chainify.hpp"
#include "operad/component.hpp"
#include "operad/parser.hpp"

using namespace opd;

namespace {

const char* kAssoc = R"(operad assoc
field Q
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

const char* kComm = R"(operad comm
field Q
gen mu arity=2 degree=0 symmetry=symmetric
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

const char* kFreeMu = R"(operad free_mu
field Q
gen mu arity=2 degree=0 symmetry=none
)";

// Total homology dimension at one slot from the two adjacent differentials.
int homology_dim(ComponentEngine& e, int arity, int degree) {
  int out = rank(e.differential_matrix(arity, degree));
  int in = rank(e.differential_matrix(arity, degree + 1));
  return e.dimension(arity, degree) - out - in;
}

}  // namespace

TEST_CASE("boundary adjunction doubles the generators and relations") {
  Presentation ch = chainify(parse_presentation(kAssoc));
  REQUIRE(ch.gens.size() == 2);
  CHECK(ch.gens[0].name == "mu");
  CHECK(ch.gens[1].name == "ds.mu");
  CHECK(ch.gens[1].degree == -1);
  CHECK(ch.gens[1].arity == 2);
  CHECK(ch.gens[1].symmetry == Symmetry::none);
  REQUIRE(ch.relations.size() == 2);
  CHECK(ch.has_differential);

  // d(mu) = ds.mu as the identity corolla; d(ds.mu) = 0
  CHECK(ch.differential.at(0) == corolla(ch.field, ch.gens, 1));
  CHECK(ch.differential.at(1).is_zero());

  // the adjoined relation is the derivation image of associativity
  Presentation base = parse_presentation(kAssoc);
  std::map<int, OperadElement> dmap;
  dmap[0] = corolla(ch.field, ch.gens, 1);
  CHECK(ch.relations[1] == differentiate(ch.field, ch.gens, dmap, base.relations[0]));

  // the canonical text form round-trips
  Presentation again = parse_presentation(presentation_to_text(ch));
  CHECK(again.gens == ch.gens);
  CHECK(again.relations == ch.relations);
  CHECK(again.differential == ch.differential);
}

TEST_CASE("boundary adjunction rejects bad inputs") {
  Presentation ch = chainify(parse_presentation(kAssoc));
  CHECK_THROWS_AS(chainify(ch), std::invalid_argument);  // already differential

  const char* collide = R"(operad collide
field Q
gen mu arity=2 degree=0 symmetry=none
gen ds.mu arity=3 degree=0 symmetry=none
)";
  CHECK_THROWS_AS(chainify(parse_presentation(collide)), std::invalid_argument);
}

TEST_CASE("adjoining boundaries to the free binary operad doubles arity 2") {
  ComponentEngine engine(chainify(parse_presentation(kFreeMu)));
  CHECK(engine.dimension(2, 0) == 2);    // mu(1,2), mu(2,1)
  CHECK(engine.dimension(2, -1) == 2);   // ds.mu(1,2), ds.mu(2,1)
  CHECK(engine.dimension(2, -2) == 0);
  CHECK(rank(engine.differential_matrix(2, 0)) == 2);
}

TEST_CASE("the derivation image of the associator lies in the ideal") {
  Presentation ch = chainify(parse_presentation(kAssoc));
  ComponentEngine engine(ch);  // construction itself validates d(rel) and d^2
  OperadElement assoc = parse_element("mu(mu(1,2),3) - mu(1,mu(2,3))", ch);
  CHECK(engine.reduce(engine.differentiate_element(assoc)).is_zero());
  CHECK(engine.reduce(assoc).is_zero());  // the associator itself is a relation
}

TEST_CASE("adjoined boundaries give an exact complex in arities 2 to 4") {
  ComponentEngine engine(chainify(parse_presentation(kAssoc)));
  CHECK(engine.dimension(3, 0) == 6);
  CHECK(engine.dimension(3, -1) == 18);
  CHECK(engine.dimension(3, -2) == 12);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d >= -n; --d) {
      CAPTURE(n);
      CAPTURE(d);
      Matrix dd = engine.differential_matrix(n, d - 1) * engine.differential_matrix(n, d);
      CHECK(dd.is_zero());
      CHECK(homology_dim(engine, n, d) == 0);
    }
  }
}

TEST_CASE("normal form dimensions match the quotient slices") {
  for (const char* text : {kAssoc, kComm, kFreeMu}) {
    Presentation p = parse_presentation(text);
    ComponentEngine engine(chainify(p));
    for (int n = 2; n <= 4; ++n) {
      for (int d = 1; d >= -n; --d) {
        CAPTURE(p.name);
        CAPTURE(n);
        CAPTURE(d);
        NormalFormSlot slot = ch_normal_form(p, n, d);
        CHECK(static_cast<int>(slot.classes.size()) == engine.dimension(n, d));
      }
    }
  }
}

TEST_CASE("normal form splits into root classes and demoted classes") {
  Presentation ass = parse_presentation(kAssoc);

  NormalFormSlot top = ch_normal_form(ass, 3, 0);
  REQUIRE(top.classes.size() == 6);
  for (const auto& c : top.classes) CHECK(c[0] == '[');  // all carry a root class

  NormalFormSlot mid = ch_normal_form(ass, 3, -1);
  REQUIRE(mid.classes.size() == 18);
  int mixed = 0, pure = 0;
  for (const auto& c : mid.classes) (c[0] == '[' ? mixed : pure)++;
  CHECK(mixed == 12);
  CHECK(pure == 6);

  NormalFormSlot bottom = ch_normal_form(ass, 3, -2);
  REQUIRE(bottom.classes.size() == 12);
  for (const auto& c : bottom.classes) CHECK(c[0] == 's');  // fully demoted

  Presentation comm = parse_presentation(kComm);
  CHECK(ch_normal_form(comm, 3, 0).classes.size() == 1);
  CHECK(ch_normal_form(comm, 3, -1).classes.size() == 4);
  CHECK(ch_normal_form(comm, 3, -2).classes.size() == 3);
}

TEST_CASE("the normal form boundary demotes roots and squares to zero") {
  Presentation ass = parse_presentation(kAssoc);

  // arity 1: a single unit class with zero boundary
  NormalFormSlot unit = ch_normal_form(ass, 1, 0);
  REQUIRE(unit.classes.size() == 1);
  CHECK(unit.classes[0] == "1");
  CHECK(unit.boundary.rows() == 0);

  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d >= -n; --d) {
      CAPTURE(n);
      CAPTURE(d);
      NormalFormSlot here = ch_normal_form(ass, n, d);
      NormalFormSlot below = ch_normal_form(ass, n, d - 1);
      REQUIRE(here.boundary.rows() == static_cast<int>(below.classes.size()));
      CHECK((below.boundary * here.boundary).is_zero());
      // exactness: rank counts match the mixed/demoted matching
      int h = static_cast<int>(here.classes.size()) - rank(here.boundary) -
              rank(ch_normal_form(ass, n, d + 1).boundary);
      CHECK(h == 0);
    }
  }

  // boundary of a root class is exactly its demotion, coefficient one
  NormalFormSlot top = ch_normal_form(ass, 2, 0);
  NormalFormSlot low = ch_normal_form(ass, 2, -1);
  REQUIRE(top.classes.size() == 2);
  REQUIRE(low.classes.size() == 2);
  for (int j = 0; j < 2; ++j) {
    int hits = 0;
    for (int i = 0; i < 2; ++i) {
      if (top.boundary.at(i, j).is_zero()) continue;
      ++hits;
      CHECK(top.boundary.at(i, j).is_one());
      CHECK(low.classes[i] == "s" + top.classes[j]);
    }
    CHECK(hits == 1);
  }
}
