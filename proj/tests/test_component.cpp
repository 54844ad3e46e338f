#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

const char* kLie = R"(operad lie
field Q
gen la arity=2 degree=0 symmetry=antisymmetric
rel la(la(1,2),3) + la(la(2,3),1) + la(la(3,1),2)
)";

const char* kPlanarAssoc = R"(operad assoc_pl
field Q
planar
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";

// associativity together with its image under the degree -1 resolution map
const char* kChainAssoc = R"(operad chain_assoc
field Q
gen mu arity=2 degree=0 symmetry=none
gen ds.mu arity=2 degree=-1 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
rel ds.mu(mu(1,2),3) + mu(ds.mu(1,2),3) - ds.mu(1,mu(2,3)) - mu(1,ds.mu(2,3))
diff mu -> ds.mu
diff ds.mu -> 0
)";

}  // namespace

TEST_CASE("associative quotients have factorial dimensions") {
  ComponentEngine engine(parse_presentation(kAssoc));
  CHECK(engine.dimension(2, 0) == 2);
  CHECK(engine.dimension(3, 0) == 6);
  CHECK(engine.dimension(4, 0) == 24);
  CHECK(engine.dimension(5, 0) == 120);
  CHECK(engine.dimension(3, 1) == 0);  // no positive-degree trees at all
}

TEST_CASE("the ideal slice of associativity in arity 3 has rank 6") {
  Matrix m = ideal_component(parse_presentation(kAssoc), 3, 0);
  CHECK(m.rows() == 12);
  CHECK(m.cols() == 6);
  CHECK(rank(m) == 6);
}

TEST_CASE("commutative quotients are one-dimensional") {
  ComponentEngine engine(parse_presentation(kComm));
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(engine.dimension(n, 0) == 1);
  }
}

TEST_CASE("antisymmetric bracket quotients have dimension (n-1)!") {
  ComponentEngine engine(parse_presentation(kLie));
  CHECK(engine.dimension(2, 0) == 1);
  CHECK(engine.dimension(3, 0) == 2);
  CHECK(engine.dimension(4, 0) == 6);
  CHECK(engine.dimension(5, 0) == 24);
}

TEST_CASE("planar associative quotients are one-dimensional") {
  ComponentEngine engine(parse_presentation(kPlanarAssoc));
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(engine.dimension(n, 0) == 1);
  }
}

TEST_CASE("reduction identifies the two association orders") {
  ComponentEngine engine(parse_presentation(kAssoc));
  Presentation p = engine.presentation();
  OperadElement left = parse_element("mu(mu(1,2),3)", p);
  OperadElement right = parse_element("mu(1,mu(2,3))", p);
  CHECK(engine.reduce(left) == engine.reduce(right));
  CHECK(engine.reduce(left - right).is_zero());

  // reduced elements have survivor coordinates that rebuild them exactly
  OperadElement r = engine.reduce(left);
  auto coords = engine.survivor_coordinates(3, 0, r);
  CHECK(engine.element_from_survivors(3, 0, coords) == r);
}

TEST_CASE("a resolved associativity slice is exact in arity 2 and 3") {
  ComponentEngine engine(parse_presentation(kChainAssoc));
  CHECK(engine.dimension(2, 0) == 2);
  CHECK(engine.dimension(2, -1) == 2);
  CHECK(engine.dimension(3, 0) == 6);
  CHECK(engine.dimension(3, -1) == 18);
  CHECK(engine.dimension(3, -2) == 12);

  CHECK(rank(engine.differential_matrix(2, 0)) == 2);
  CHECK(rank(engine.differential_matrix(3, 0)) == 6);
  CHECK(rank(engine.differential_matrix(3, -1)) == 12);

  // d squares to zero as matrices
  Matrix dd = engine.differential_matrix(3, -1) * engine.differential_matrix(3, 0);
  CHECK(dd.is_zero());
}

TEST_CASE("a differential that misses the ideal is rejected") {
  const char* bad = R"(operad broken
field Q
gen mu arity=2 degree=0 symmetry=none
gen ds.mu arity=2 degree=-1 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
diff mu -> ds.mu
)";
  CHECK_THROWS_AS(ComponentEngine(parse_presentation(bad)), std::invalid_argument);
}

TEST_CASE("a differential that does not square to zero is rejected") {
  const char* bad = R"(operad nonsquare
field Q
gen a arity=2 degree=1 symmetry=none
gen b arity=2 degree=0 symmetry=none
gen c arity=2 degree=-1 symmetry=none
diff a -> b
diff b -> c
)";
  CHECK_THROWS_AS(ComponentEngine(parse_presentation(bad)), std::invalid_argument);
}

TEST_CASE("prime field slices match the rational ranks away from torsion") {
  const char* mod5 = R"(operad assoc5
field Fp:5
gen mu arity=2 degree=0 symmetry=none
rel mu(mu(1,2),3) - mu(1,mu(2,3))
)";
  ComponentEngine engine(parse_presentation(mod5));
  CHECK(engine.dimension(3, 0) == 6);
  CHECK(engine.dimension(4, 0) == 24);
}
