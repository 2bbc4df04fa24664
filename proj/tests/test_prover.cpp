#include "doctest.h"

#include <vector>

#include "gl/experiments.hpp"
#include "gl/prover.hpp"

using gl::Formula;
using gl::Prover;

namespace {

Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }

Formula k_axiom() {
  return Formula::implies(Formula::box(Formula::implies(P(), Q())),
                          Formula::implies(Formula::box(P()), Formula::box(Q())));
}
Formula four_axiom() {
  return Formula::implies(Formula::box(P()), Formula::box(Formula::box(P())));
}
Formula loeb() {
  return Formula::implies(Formula::box(Formula::implies(Formula::box(P()), P())),
                          Formula::box(P()));
}

}  // namespace

TEST_CASE("proves the modal axioms and their boxed closures") {
  for (Formula base : {k_axiom(), four_axiom(), loeb()})
    for (int n = 0; n <= 3; ++n) {
      Formula goal = Formula::iterate(gl::ModalOp::Box, n, base);
      gl::ProveOutcome out = gl::prove(goal);
      REQUIRE(out.valid());
      CHECK(gl::check_proof(*out.proof));
      CHECK(out.proof->sequent == gl::Sequent::make({}, {goal}));
      CHECK(out.nodes > 0);
    }
}

TEST_CASE("proves a handful of classical and mixed tautologies") {
  const char* goals[] = {
      "p -> p",
      "p | ~p",
      "T",
      "~~p -> p",
      "(p -> q) -> (~q -> ~p)",
      "[]p & []q -> [](p & q)",
      "[](p & q) -> []p & []q",
      "[]F -> []p",
      "<>T | []F",
  };
  for (const char* g : goals) {
    CAPTURE(g);
    CHECK(gl::valid_gl(gl::parse(g)));
  }
}

TEST_CASE("refutes with checked countermodels") {
  const char* goals[] = {"<>T", "p -> []p", "[]p -> p", "[]([]p -> p)", "p | q", "[]p -> <>p"};
  for (const char* g : goals) {
    CAPTURE(g);
    Formula goal = gl::parse(g);
    gl::ProveOutcome out = gl::prove(goal);
    REQUIRE_FALSE(out.valid());
    const gl::Countermodel& cm = *out.countermodel;
    CHECK(gl::satisfies(cm.model, cm.world, Formula::neg(goal)));
    CHECK(gl::classify_frame(cm.model.frame).finite_irreflexive_transitive);
  }
  gl::ProveOutcome dia = gl::prove(gl::parse("<>T"));
  CHECK(dia.countermodel->model.frame.size() == 1);
}

TEST_CASE("sequent interface") {
  gl::Sequent s = gl::Sequent::make({P(), P(), Q()}, {P()});
  CHECK(s.ante.size() == 2);
  Prover pr;
  CHECK(pr.decide(s));
  CHECK(pr.decide(gl::Sequent::make({Formula::bottom()}, {})));
  CHECK_FALSE(pr.decide(gl::Sequent::make({}, {})));
  CHECK_FALSE(pr.decide(gl::Sequent::make({P()}, {Q()})));
  CHECK(pr.nodes_used() > 0);

  gl::ProofTree t = pr.proof(gl::Sequent::make({P()}, {P()}));
  CHECK(t.rule == "ax");
  CHECK(gl::check_proof(t));
}

TEST_CASE("replay rejects corrupted trees") {
  gl::ProofTree t = *gl::prove(loeb()).proof;
  REQUIRE(gl::check_proof(t));
  gl::ProofTree wrong_rule = t;
  wrong_rule.rule = "ax";
  CHECK_FALSE(gl::check_proof(wrong_rule));
  gl::ProofTree wrong_goal = t;
  wrong_goal.sequent = gl::Sequent::make({}, {four_axiom()});
  CHECK_FALSE(gl::check_proof(wrong_goal));
  gl::ProofTree dropped = t;
  dropped.children.clear();
  CHECK_FALSE(gl::check_proof(dropped));
}

TEST_CASE("provability is closed under substitution") {
  std::map<std::string, Formula> subst{
      {"p", Formula::diamond(Q())},
      {"q", Formula::box(Formula::conj(P(), Q()))},
  };
  for (Formula base : {k_axiom(), four_axiom(), loeb()})
    CHECK(gl::valid_gl(gl::substitute(base, subst)));
}

TEST_CASE("search agrees with the frame oracle on small formulas") {
  // The oracle sweeps frames of at most 3 worlds, so deeply nested boxes can
  // slip past it: their shortest countermodels are taller chains. When the two
  // procedures split, the search must be the one refuting, and it must back
  // the refutation with a countermodel the oracle's bound excludes.
  gl::BruteOracle oracle(3);
  Prover pr;
  for (Formula f : gl::enumerate_formulas(5, std::vector<std::string>{"p", "q"})) {
    bool search = pr.decide(gl::Sequent::make({}, {f}));
    bool frames = oracle.valid(f);
    std::string text = gl::to_string(f);
    CAPTURE(text);
    if (search == frames) continue;
    CHECK_FALSE(search);
    gl::Countermodel cm = Prover().countermodel(f);
    CHECK(gl::satisfies(cm.model, cm.world, Formula::neg(f)));
    CHECK(gl::classify_frame(cm.model.frame).finite_irreflexive_transitive);
    CHECK(cm.model.frame.size() > 3);
  }
}

TEST_CASE("bounded noncompactness driver") {
  gl::NoncompactReport r = gl::noncompact_drive(Formula::bottom(), 4);
  CHECK(r.premises_all_valid);
  CHECK(r.conclusion_valid);
  CHECK(r.agree);

  r = gl::noncompact_drive(P(), 4);
  CHECK_FALSE(r.premises_all_valid);
  CHECK(r.premise_valid[0]);
  CHECK_FALSE(r.premise_valid[1]);
  CHECK_FALSE(r.conclusion_valid);
  CHECK(r.agree);

  r = gl::noncompact_drive(Formula::neg(loeb()), 4);
  CHECK(r.premises_all_valid);
  CHECK(r.conclusion_valid);
  CHECK(r.agree);

  // phi satisfiable only at height > n_max: the bounded premise sweep cannot
  // see the refutation, and the report says so
  r = gl::noncompact_drive(Formula::iterate(gl::ModalOp::Diamond, 3, Formula::top()), 2);
  CHECK(r.premises_all_valid);
  CHECK_FALSE(r.conclusion_valid);
  CHECK_FALSE(r.agree);
}

TEST_CASE("soundness probe") {
  std::vector<gl::Frame> frames = gl::irreflexive_transitive_frames(3);
  gl::SoundnessProbe pr = gl::soundness_probe(loeb(), frames);
  CHECK(pr.applicable);
  CHECK(pr.all_valid);
  CHECK(pr.frames_checked == static_cast<int>(frames.size()));

  gl::SoundnessProbe inv = gl::soundness_probe(gl::parse("<>T"), frames);
  CHECK_FALSE(inv.applicable);

  std::vector<gl::Frame> bad{gl::Frame({"a"}, {{0, 0}})};
  CHECK_THROWS_AS(gl::soundness_probe(loeb(), bad), std::invalid_argument);
}

TEST_CASE("node budget is enforced") {
  CHECK_THROWS_AS(Prover(1).decide(loeb()), gl::SearchBudgetError);
  CHECK_THROWS_AS(gl::prove(loeb(), 2), gl::SearchBudgetError);
}
