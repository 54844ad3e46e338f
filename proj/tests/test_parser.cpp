#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "operad/parser.hpp"
#include "operad/presentation.hpp"

using namespace opd;

namespace {

const char* kAssoc = R"(# binary associative multiplication
operad assoc
field Q
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

const char* kLie = R"(operad lie
field Q
gen la arity=2 degree=0 symmetry=antisymmetric
rel la(la(1,2),3) + la(la(2,3),1) + la(la(3,1),2)
)";

}  // namespace

TEST_CASE("a presentation file parses into its parts") {
  Presentation p = parse_presentation(kAssoc);
  CHECK(p.name == "assoc");
  CHECK(p.field.is_rationals());
  CHECK_FALSE(p.planar);
  CHECK_FALSE(p.has_differential);
  REQUIRE(p.gens.size() == 1);
  CHECK(p.gens[0].name == "mu");
  CHECK(p.gens[0].arity == 2);
  CHECK(p.gens[0].degree == 0);
  CHECK(p.gens[0].symmetry == Symmetry::none);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].arity() == 3);
  CHECK(p.relations[0].term_count() == 2);
  CHECK(p.relations[0] == parse_element("mu(mu(1,2),3) - mu(1,mu(2,3))", p));
}

TEST_CASE("bare generator names stand for identity-labeled corollas") {
  Presentation p = parse_presentation(kAssoc);
  CHECK(parse_element("mu", p) == parse_element("mu(1,2)", p));
  CHECK(parse_element("mu(mu,3)", p) == parse_element("mu(mu(1,2),3)", p));
}

TEST_CASE("printing and reparsing a presentation is the identity") {
  for (const char* text : {kAssoc, kLie}) {
    Presentation p = parse_presentation(text);
    const std::string printed = presentation_to_text(p);
    Presentation q = parse_presentation(printed);
    CHECK(presentation_to_text(q) == printed);
    CHECK(q.gens == p.gens);
    CHECK(q.relations == p.relations);
  }
}

TEST_CASE("antisymmetric canonicalization applies while parsing") {
  Presentation p = parse_presentation(kLie);
  const OperadElement& jac = p.relations.at(0);
  CHECK(jac.term_count() == 3);
  // the cyclic rewriting of each term is already folded into canonical form
  CHECK(parse_element("la(la(2,3),1)", p) ==
        -parse_element("la(1,la(2,3))", p));
}

TEST_CASE("differentials parse with degree bookkeeping") {
  const char* text = R"(operad chain
field Q
gen mu arity=2 degree=0 symmetry=none
gen ds.mu arity=2 degree=-1 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
diff mu -> ds.mu
diff ds.mu -> 0
)";
  Presentation p = parse_presentation(text);
  CHECK(p.has_differential);
  REQUIRE(p.gens.size() == 2);
  CHECK(p.gens[1].degree == -1);
  const int mu = p.gens.index_of("mu");
  const int dsmu = p.gens.index_of("ds.mu");
  CHECK(p.differential.at(mu) == parse_element("ds.mu", p));
  CHECK(p.differential.at(dsmu).is_zero());
  const std::string printed = presentation_to_text(p);
  Presentation q = parse_presentation(printed);
  CHECK(presentation_to_text(q) == printed);
  CHECK(q.differential.at(dsmu).is_zero());
  CHECK(q.has_differential);
}

TEST_CASE("prime field coefficients normalize while parsing") {
  const char* text = R"(operad twisted
field Fp:3
gen mu arity=2 degree=0 symmetry=none
rel 4*mu(1,2) - 7*mu(2,1)
)";
  Presentation p = parse_presentation(text);
  const OperadElement& r = p.relations.at(0);
  CHECK(r == parse_element("mu(1,2) + 2*mu(2,1)", p));
  CHECK(presentation_to_text(p).find("mu(1,2) + 2*mu(2,1)") != std::string::npos);
}

TEST_CASE("planar presentations reject out-of-order leaves and tags") {
  const char* good = R"(operad pl
field Q
planar
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";
  CHECK(parse_presentation(good).planar);
  const char* bad_order = R"(operad pl
field Q
planar
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(2,1),3) - mu(1,mu(2,3))
)";
  CHECK_THROWS_AS(parse_presentation(bad_order), ParseError);
  const char* bad_tag = R"(operad pl
field Q
planar
gen mu arity=2 degree=0 symmetry=symmetric
)";
  CHECK_THROWS_AS(parse_presentation(bad_tag), ParseError);
}

TEST_CASE("tagged generators need equivariant differential images") {
  const char* bad = R"(operad t
field Q
gen la arity=2 degree=1 symmetry=antisymmetric
gen u arity=2 degree=0 symmetry=none
diff la -> u(1,2)
)";
  CHECK_THROWS_AS(parse_presentation(bad), ParseError);
  const char* good = R"(operad t
field Q
gen la arity=2 degree=1 symmetry=antisymmetric
gen u arity=2 degree=0 symmetry=none
diff la -> u(1,2) - u(2,1)
)";
  Presentation p = parse_presentation(good);
  CHECK(p.differential.at(0).term_count() == 2);
}

TEST_CASE("parse errors carry the position and the offending token") {
  auto expect_error = [](const std::string& text, int line, const std::string& token) {
    try {
      parse_presentation(text);
      FAIL_CHECK("expected a parse error for:\n" << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.token == token);
    }
  };
  expect_error("operad x\nfield Q\ngen mu arity=2\nrel nu(1,2)\n", 4, "nu");
  expect_error("operad x\nfield Q\ngen mu arity=2\nrel mu(1,2,3)\n", 4, ")");
  expect_error("operad x\nfield Q\ngen mu arity=1\n", 3, "mu");
  expect_error("operad x\nfield Q\ngen mu arity=2\ngen mu arity=2\n", 4, "mu");
  expect_error("operad x\nfield Z\n", 2, "Z");
  expect_error("operad x\nrel mu(1,2)\n", 2, "rel");
  expect_error("operad x\nfield Q\nbogus line\n", 3, "bogus");

  try {
    parse_presentation("operad x\nfield Q\ngen mu arity=2\nrel mu(1,3)\n");
    FAIL_CHECK("expected a parse error for a bad label set");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("expressions must be degree-homogeneous per statement") {
  const char* bad = R"(operad m
field Q
gen u arity=2 degree=0 symmetry=none
gen h arity=2 degree=1 symmetry=none
rel u(1,2) + h(1,2)
)";
  CHECK_THROWS_AS(parse_presentation(bad), ParseError);
}

TEST_CASE("element parsing rejects trailing input") {
  Presentation p = parse_presentation(kAssoc);
  CHECK_THROWS_AS(parse_element("mu(1,2) extra", p), ParseError);
  CHECK_THROWS_AS(parse_element("mu(1,2) + ", p), ParseError);
}
