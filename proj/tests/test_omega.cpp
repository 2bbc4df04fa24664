#include "doctest.h"

#include <optional>
#include <vector>

#include "gl/experiments.hpp"
#include "gl/kripke.hpp"
#include "gl/omega.hpp"

using gl::CofinElement;
using gl::Formula;
using gl::OmegaValuation;

namespace {

// Independent check of the agreement threshold: realize the algebra as the
// complex algebra of a long descending chain with a top point and read truth
// off worlds. Far below the truncation horizon the two agree, because boxes
// and diamonds are settled by least (non-)members well inside the window.
std::optional<int> brute_threshold(Formula psi, const OmegaValuation& v, int n_max) {
  const int top = 30;
  gl::Frame fr = gl::make_descending_chain(top + 1);
  gl::Model base{fr, {}};
  for (const auto& [name, x] : v) {
    gl::WorldSet s;
    for (int i = 0; i < top; ++i)
      if (x.contains(i)) s.set(i);
    if (x.contains_omega()) s.set(top);
    base.valuation[name] = s;
  }
  std::vector<Formula> subs = gl::subformulas(psi);
  std::vector<bool> agree(static_cast<std::size_t>(n_max) + 1, true);
  for (int n = 0; n <= n_max; ++n) {
    gl::Model mirror = base;
    for (auto& [name, s] : mirror.valuation) s[n] = s[top];
    for (Formula a : subs)
      if (gl::eval_states(base, a).test(top) != gl::eval_states(mirror, a).test(n)) {
        agree[n] = false;
        break;
      }
  }
  for (int n = 0; n <= n_max; ++n) {
    bool all = true;
    for (int m = n; m <= n_max; ++m) all = all && agree[m];
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("element construction and membership") {
  CofinElement a = CofinElement::finite_set({3, 0, 3}, false);
  CHECK(a.contains(0));
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(1));
  CHECK_FALSE(a.contains_omega());
  CHECK(a.to_string() == "{0,3}");

  CofinElement b = CofinElement::cofinite_set({5}, true);
  CHECK(b.contains(4));
  CHECK_FALSE(b.contains(5));
  CHECK(b.contains_omega());
  CHECK(b.to_string() == "~{5}");

  CHECK(CofinElement::zero().is_zero());
  CHECK(CofinElement::one().contains_omega());
  CHECK(CofinElement::omega_point().to_string() == "{w}");
  CHECK(CofinElement::cofinite_set({}, false).to_string() == "~{w}");
}

TEST_CASE("boolean structure") {
  CofinElement a = CofinElement::finite_set({1, 2}, true);
  CofinElement b = CofinElement::cofinite_set({2, 7}, false);
  CHECK(a.complement() == CofinElement::cofinite_set({1, 2}, false));
  CHECK(a.complement().complement() == a);
  CHECK(a.meet(b) == CofinElement::finite_set({1}, false));
  CHECK(a.join(b) == CofinElement::cofinite_set({7}, true));
  CHECK(a.meet(a.complement()).is_zero());
  CHECK(a.join(a.complement()) == CofinElement::one());
  CHECK(CofinElement::finite_set({1}, false).leq(a));
  CHECK_FALSE(a.leq(b));
  CHECK(a.without(1).without(2) == CofinElement::omega_point());
  CHECK(CofinElement::zero().with(4) == CofinElement::finite_set({4}, false));
}

TEST_CASE("box settles at the least missing natural") {
  // everything below 5 present, 5 missing: boxes hold up to and including 5
  CHECK(CofinElement::cofinite_set({5}, true).box() ==
        CofinElement::finite_set({0, 1, 2, 3, 4, 5}, false));
  CHECK(CofinElement::cofinite_set({5}, false).box() ==
        CofinElement::finite_set({0, 1, 2, 3, 4, 5}, false));
  CHECK(CofinElement::one().box() == CofinElement::one());
  CHECK(CofinElement::cofinite_set({}, false).box() == CofinElement::one());
  CHECK(CofinElement::zero().box() == CofinElement::finite_set({0}, false));
  CHECK(CofinElement::omega_point().box() == CofinElement::finite_set({0}, false));
  CHECK(CofinElement::finite_set({0, 1}, false).box() ==
        CofinElement::finite_set({0, 1, 2}, false));
  // diamond is the dual: something below is in the set
  CHECK(CofinElement::finite_set({3}, false).diamond() ==
        CofinElement::cofinite_set({0, 1, 2, 3}, true));
}

TEST_CASE("the diamond chain and its meet") {
  CHECK(gl::OmegaAlgebra::diamond_n_one(0) == CofinElement::one());
  CHECK(gl::OmegaAlgebra::diamond_n_one(3) == CofinElement::cofinite_set({0, 1, 2}, true));
  CHECK(gl::OmegaAlgebra::chain_meet() == CofinElement::omega_point());
  CHECK_FALSE(gl::OmegaAlgebra::chain_meet().is_zero());
  for (int n = 0; n < 8; ++n) {
    CHECK(gl::OmegaAlgebra::diamond_n_one(n + 1) ==
          gl::OmegaAlgebra::diamond_n_one(n).diamond());
    CHECK(gl::OmegaAlgebra::chain_meet().leq(gl::OmegaAlgebra::diamond_n_one(n)));
  }
  CHECK(gl::verify_chain_meet_glb(6));
  CHECK(gl::below_entire_chain(CofinElement::omega_point()));
  CHECK(gl::below_entire_chain(CofinElement::zero()));
  CHECK_FALSE(gl::below_entire_chain(CofinElement::finite_set({4}, true)));
}

TEST_CASE("element text round trips") {
  const char* samples[] = {"{}", "{w}", "{0,3}", "{0,3,w}", "~{}", "~{w}", "~{5}", "~{1,2,w}"};
  for (const char* s : samples) CHECK(gl::parse_cofin_element(s).to_string() == s);
  CHECK(gl::parse_cofin_element(" ~ { 1 , w } ") ==
        CofinElement::cofinite_set({1}, false));
  CHECK_THROWS_AS(gl::parse_cofin_element("{1"), gl::ParseError);
  CHECK_THROWS_AS(gl::parse_cofin_element("1,2"), gl::ParseError);
  CHECK_THROWS_AS(gl::parse_cofin_element("{1,,2}"), gl::ParseError);
  CHECK_THROWS_AS(gl::parse_cofin_element("{9999999}"), gl::ParseError);
}

TEST_CASE("evaluation in the w+1 algebra") {
  OmegaValuation v{{"p", CofinElement::cofinite_set({5}, true)}};
  CHECK(gl::OmegaAlgebra::eval(gl::parse("[]p"), v) ==
        CofinElement::finite_set({0, 1, 2, 3, 4, 5}, false));
  CHECK(gl::OmegaAlgebra::eval(gl::parse("p & ~p"), v).is_zero());
  CHECK(gl::OmegaAlgebra::eval(gl::parse("<>^2 T"), {}) ==
        CofinElement::cofinite_set({0, 1}, true));
  CHECK(gl::OmegaAlgebra::eval(gl::parse("[]([]p -> p) -> []p"), v) == CofinElement::one());
}

TEST_CASE("mirror valuations") {
  OmegaValuation v{{"p", CofinElement::omega_point()},
                   {"q", CofinElement::finite_set({0, 1}, false)}};
  OmegaValuation m3 = gl::mirror_omega_at(v, 3);
  CHECK(m3.at("p") == CofinElement::finite_set({3}, true));
  CHECK(m3.at("q") == CofinElement::finite_set({0, 1}, false));
  OmegaValuation m1 = gl::mirror_omega_at(v, 1);
  CHECK(m1.at("q") == CofinElement::finite_set({0}, false));
}

TEST_CASE("agreement thresholds for hand-picked claims") {
  Formula p = Formula::var("p");
  gl::ClaimCheckResult c =
      gl::check_claim(Formula::box(p), {{"p", CofinElement::cofinite_set({5}, true)}}, 20);
  CHECK(c.verified);
  CHECK(c.witness == 6);  // box flips truth at the least missing natural, 5
  CHECK_FALSE(c.agree_at[5]);
  CHECK(c.agree_at[6]);

  c = gl::check_claim(p, {{"p", CofinElement::omega_point()}}, 10);
  CHECK(c.witness == 0);

  c = gl::check_claim(Formula::box(p), {{"p", CofinElement::one()}}, 10);
  CHECK(c.witness == 0);

  c = gl::check_claim(Formula::diamond(p), {{"p", CofinElement::finite_set({3}, false)}}, 10);
  CHECK(c.witness == 4);

  // n_max below the threshold: honest failure
  c = gl::check_claim(Formula::box(p), {{"p", CofinElement::cofinite_set({5}, true)}}, 4);
  CHECK_FALSE(c.verified);
  CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("thresholds agree with a chain-with-top realization") {
  for (const auto& [psi, v] : gl::claim_corpus()) {
    gl::ClaimCheckResult c = gl::check_claim(psi, v, 20);
    CHECK(c.verified);
    CHECK(c.witness == brute_threshold(psi, v, 20));
  }
}

TEST_CASE("classification of the w+1 algebra") {
  gl::OmegaAlgebraReport r = gl::classify_omega_algebra(6);
  CHECK(r.satisfies_4);
  CHECK(r.chain_meet == CofinElement::omega_point());
  CHECK(r.chain_meet_is_glb);
  CHECK(r.diamond_chain_vanishes == gl::ClassStatus::no);
  CHECK(r.noncompact_rule_true == gl::ClassStatus::asserted);
  CHECK(r.loeb_equation_valid == gl::ClassStatus::yes);
}

TEST_CASE("randomized agreement with the truncated powerset") {
  CHECK(gl::verify_omega_ops(2000, 7).pass());
}
