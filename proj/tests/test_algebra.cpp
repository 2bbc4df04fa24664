#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "gl/algebra.hpp"
#include "gl/kripke.hpp"

using gl::FinAlgebra;
using gl::Formula;
using Elem = gl::FinAlgebra::Elem;

TEST_CASE("box on the three-world chain") {
  FinAlgebra a(gl::make_descending_chain(3));
  CHECK(a.atoms() == 3);
  CHECK(a.one() == 0b111);
  CHECK(a.box(0b001) == 0b011);  // sink vacuously, middle sees only the sink
  CHECK(a.box(0b111) == 0b111);
  CHECK(a.box(0b000) == 0b001);
  CHECK(a.diamond(0b001) == 0b110);
  CHECK(a.meet(0b011, 0b110) == 0b010);
  CHECK(a.join(0b001, 0b100) == 0b101);
  CHECK(a.complement(0b001) == 0b110);
  CHECK(a.leq(0b010, 0b011));
  CHECK_FALSE(a.leq(0b011, 0b010));
}

TEST_CASE("diamond chain stabilizes") {
  FinAlgebra a(gl::make_descending_chain(3));
  FinAlgebra::Chain c = a.diamond_chain();
  CHECK(c.values == std::vector<Elem>{0b111, 0b110, 0b100, 0b000});
  CHECK(c.stabilization_index == 3);
  CHECK(c.stabilized == 0);

  FinAlgebra refl(1, std::vector<Elem>{0b1});
  FinAlgebra::Chain rc = refl.diamond_chain();
  CHECK(rc.stabilization_index == 0);
  CHECK(rc.stabilized == 0b1);
}

TEST_CASE("equations by sweep") {
  Formula x = Formula::var("x");
  Formula four = Formula::implies(Formula::box(x), Formula::box(Formula::box(x)));
  Formula loeb = Formula::implies(Formula::box(Formula::implies(Formula::box(x), x)),
                                  Formula::box(x));
  FinAlgebra chain(gl::make_descending_chain(3));
  CHECK(chain.equation_holds(four, Formula::top()));
  CHECK(chain.equation_holds(loeb, Formula::top()));
  CHECK(chain.equation_holds(Formula::neg(Formula::neg(x)), x));

  // a -> b -> c without the composite a -> c
  FinAlgebra broken(3, std::vector<Elem>{0b010, 0b100, 0b000});
  CHECK_FALSE(broken.equation_holds(four, Formula::top()));

  FinAlgebra refl(1, std::vector<Elem>{0b1});
  CHECK(refl.equation_holds(four, Formula::top()));
  CHECK_FALSE(refl.equation_holds(loeb, Formula::top()));
}

TEST_CASE("evaluation under an assignment") {
  FinAlgebra a(gl::make_descending_chain(3));
  std::map<std::string, Elem> v{{"p", 0b001}};
  CHECK(a.eval(gl::parse("[]p"), v) == 0b011);
  CHECK(a.eval(gl::parse("<>p | p"), v) == 0b111);
  CHECK(a.eval(gl::parse("F"), v) == 0);
  CHECK_THROWS_AS(a.eval(gl::parse("[]q"), {}), std::invalid_argument);
}

TEST_CASE("classification on chains, loops, broken composites") {
  gl::AlgebraClassReport chain = gl::classify_algebra(FinAlgebra(gl::make_descending_chain(3)));
  CHECK(chain.satisfies_4);
  CHECK(chain.chain_meet == 0);
  CHECK(chain.diamond_chain_vanishes == gl::ClassStatus::yes);
  CHECK(chain.noncompact_rule_true == gl::ClassStatus::yes);
  CHECK(chain.loeb_equation_valid == gl::ClassStatus::yes);

  gl::AlgebraClassReport refl = gl::classify_algebra(FinAlgebra(1, std::vector<Elem>{0b1}));
  CHECK(refl.satisfies_4);
  CHECK(refl.chain_meet == 0b1);
  CHECK(refl.diamond_chain_vanishes == gl::ClassStatus::no);
  CHECK(refl.noncompact_rule_true == gl::ClassStatus::no);
  CHECK(refl.loeb_equation_valid == gl::ClassStatus::no);

  gl::AlgebraClassReport broken =
      gl::classify_algebra(FinAlgebra(3, std::vector<Elem>{0b010, 0b100, 0b000}));
  CHECK_FALSE(broken.satisfies_4);
  CHECK(broken.diamond_chain_vanishes == gl::ClassStatus::not_applicable);
  CHECK(broken.noncompact_rule_true == gl::ClassStatus::not_applicable);
  CHECK(broken.loeb_equation_valid == gl::ClassStatus::not_applicable);
}

TEST_CASE("modal laws hold in complex algebras") {
  CHECK(gl::modal_laws_hold(FinAlgebra(gl::make_descending_chain(4))));
  CHECK(gl::modal_laws_hold(FinAlgebra(gl::make_fan(3))));
  CHECK(gl::modal_laws_hold(FinAlgebra(3, std::vector<Elem>{0b010, 0b100, 0b000})));
}

TEST_CASE("nested box distribution over the chain") {
  FinAlgebra a(gl::make_descending_chain(4));
  CHECK(a.chain_distribution_holds(std::vector<Elem>{}));
  CHECK(a.chain_distribution_holds(std::vector<Elem>{0b0101}));
  CHECK(a.chain_distribution_holds(std::vector<Elem>{0b0101, 0b0011}));
  CHECK(a.chain_distribution_holds(std::vector<Elem>{0b1000, 0b0001, 0b1110}));

  FinAlgebra fan(gl::make_fan(3));
  for (Elem x = 0; x < (Elem{1} << fan.atoms()); x += 3)
    CHECK(fan.chain_distribution_holds(std::vector<Elem>{x}));
}

TEST_CASE("frame validity matches the algebra equation") {
  Formula p = Formula::var("p");
  Formula candidates[] = {
      Formula::implies(Formula::box(p), p),
      Formula::implies(Formula::box(p), Formula::box(Formula::box(p))),
      Formula::implies(Formula::box(Formula::implies(Formula::box(p), p)), Formula::box(p)),
      Formula::diamond(Formula::top()),
  };
  Formula x = Formula::var("x");
  const gl::Frame frames[] = {gl::make_descending_chain(3), gl::make_fan(2),
                              gl::Frame({"a"}, {{0, 0}})};
  for (const gl::Frame& fr : frames) {
    FinAlgebra a(fr);
    for (Formula f : candidates) {
      Formula eq = gl::substitute(f, {{"p", x}});
      CHECK(gl::frame_valid(fr, f) == a.equation_holds(eq, Formula::top()));
    }
  }
}
