#include "doctest.h"

#include <vector>

#include "gl/kripke.hpp"

using gl::Formula;
using gl::Frame;
using gl::Model;
using gl::WorldSet;

namespace {

WorldSet bits(std::initializer_list<int> worlds) {
  WorldSet s;
  for (int w : worlds) s.set(w);
  return s;
}

Formula loeb() {
  Formula p = Formula::var("p");
  return Formula::implies(Formula::box(Formula::implies(Formula::box(p), p)), Formula::box(p));
}

}  // namespace

TEST_CASE("descending chain evaluation") {
  Frame c3 = gl::make_descending_chain(3);
  REQUIRE(c3.size() == 3);
  CHECK(c3.has_edge(2, 0));
  CHECK(c3.has_edge(1, 0));
  CHECK_FALSE(c3.has_edge(0, 1));
  Model m{c3, {{"p", bits({0})}}};
  CHECK(gl::eval_states(m, Formula::var("p")) == bits({0}));
  CHECK(gl::eval_states(m, Formula::box(Formula::var("p"))) == bits({0, 1}));
  CHECK(gl::eval_states(m, Formula::diamond(Formula::var("p"))) == bits({1, 2}));
  CHECK(gl::satisfies(m, 1, Formula::box(Formula::var("p"))));
  CHECK(gl::satisfies(m, "1", Formula::box(Formula::var("p"))));
  CHECK_FALSE(gl::model_true(m, Formula::var("p")));
  CHECK(gl::model_true(m, Formula::implies(Formula::var("p"), Formula::var("p"))));
}

TEST_CASE("heights and classification") {
  Frame c3 = gl::make_descending_chain(3);
  for (int w = 0; w < 3; ++w) CHECK(gl::height(c3, w) == w);
  gl::FrameClassReport r = gl::classify_frame(c3);
  CHECK(r.transitive);
  CHECK(r.irreflexive);
  CHECK(r.acyclic);
  CHECK(r.locally_finite_height);
  CHECK(r.finite_irreflexive_transitive);
  CHECK(r.transitive_locally_finite);

  Frame refl({"a"}, {{0, 0}});
  CHECK_FALSE(gl::height(refl, 0).has_value());
  gl::FrameClassReport rr = gl::classify_frame(refl);
  CHECK(rr.transitive);
  CHECK_FALSE(rr.irreflexive);
  CHECK_FALSE(rr.acyclic);
  CHECK_FALSE(rr.finite_irreflexive_transitive);
  CHECK_FALSE(rr.transitive_locally_finite);

  Frame cyc = Frame::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK_FALSE(gl::height(cyc, 0).has_value());
  CHECK_FALSE(gl::classify_frame(cyc).acyclic);
  CHECK(gl::classify_frame(cyc).irreflexive);
}

TEST_CASE("fans are finite irreflexive transitive") {
  for (int k = 1; k <= 12; ++k) {
    Frame fan = gl::make_fan(k);
    CHECK(fan.size() == 1 + k * (k + 1) / 2);
    gl::FrameClassReport r = gl::classify_frame(fan);
    CHECK(r.finite_irreflexive_transitive);
    CHECK(gl::height(fan, *fan.world_index("r")) == k);
  }
  Frame fan3 = gl::make_fan(3);
  std::vector<int> image;
  Frame sub = gl::generated_subframe(fan3, *fan3.world_index("b3_2"), &image);
  CHECK(sub.size() == 2);
  CHECK(gl::find_isomorphism(sub, gl::make_descending_chain(2)).has_value());
  CHECK(image[0] == *fan3.world_index("b3_2"));
}

TEST_CASE("frame validity") {
  Frame c3 = gl::make_descending_chain(3);
  Formula p = Formula::var("p");
  CHECK(gl::frame_valid(c3, loeb()));
  CHECK(gl::frame_valid(c3, Formula::implies(Formula::box(p), Formula::box(Formula::box(p)))));
  CHECK_FALSE(gl::frame_valid(c3, Formula::diamond(Formula::top())));
  CHECK(gl::world_valid(c3, 2, Formula::diamond(Formula::top())));
  CHECK_FALSE(gl::world_valid(c3, 0, Formula::diamond(Formula::top())));

  Frame refl({"a"}, {{0, 0}});
  CHECK_FALSE(gl::frame_valid(refl, loeb()));
  CHECK(gl::frame_valid(refl, Formula::implies(Formula::box(p), p)));
}

TEST_CASE("validity agrees between compiled and plain evaluation") {
  gl::CompiledFormula cf(loeb());
  for (int n = 1; n <= 4; ++n) {
    Frame c = gl::make_descending_chain(n);
    CHECK(gl::frame_valid(c, cf) == gl::frame_valid(c, loeb()));
  }
  Frame fan2 = gl::make_fan(2);
  Model m{fan2, {{"p", bits({1, 3})}}};
  gl::CompiledFormula one(gl::parse("[]p -> <>p | p"));
  std::vector<WorldSet> sets{m.valuation["p"]};
  CHECK(one.eval(fan2, sets) == gl::eval_states(m, gl::parse("[]p -> <>p | p")));
}

TEST_CASE("sweeps refuse to blow up past the guard") {
  Frame fan5 = gl::make_fan(5);  // 16 worlds, two variables: 32 bits
  Formula pq = gl::parse("[](p & q) -> []p");
  CHECK_THROWS_AS(gl::frame_valid(fan5, pq), gl::ResourceGuardError);
  // One size down fits under the default guard (11 worlds, two variables).
  Frame fan4 = gl::make_fan(4);
  CHECK(gl::frame_valid(fan4, pq));
  // Leaf worlds generate tiny subframes, so world validity stays affordable.
  CHECK(gl::world_valid(fan5, *fan5.world_index("b1_1"), pq));
}

TEST_CASE("isomorphism finder") {
  Frame c3 = gl::make_descending_chain(3);
  Frame shuffled = Frame::from_names({"x", "y", "z"}, {{"y", "x"}, {"z", "x"}, {"x", "x"}});
  CHECK_FALSE(gl::find_isomorphism(c3, shuffled).has_value());
  Frame relabeled =
      Frame::from_names({"mid", "top", "bot"}, {{"mid", "bot"}, {"top", "bot"}, {"top", "mid"}});
  auto iso = gl::find_isomorphism(c3, relabeled);
  REQUIRE(iso.has_value());
  // world 0 of the chain is the sink, which relabeling calls "bot"
  CHECK(relabeled.world_name((*iso)[0]) == "bot");
  CHECK_FALSE(gl::find_isomorphism(c3, gl::make_fan(2)).has_value());
  CHECK_FALSE(gl::find_isomorphism(c3, gl::make_descending_chain(2)).has_value());
}

TEST_CASE("frame construction rejects bad input") {
  CHECK_THROWS_AS(Frame::from_names({"a"}, {{"a", "nope"}}), std::invalid_argument);
  CHECK_THROWS_AS(Frame({"a", "a"}, {}), std::invalid_argument);
  std::vector<std::string> many(static_cast<std::size_t>(gl::kMaxWorlds) + 1);
  for (std::size_t i = 0; i < many.size(); ++i) many[i] = "w" + std::to_string(i);
  CHECK_THROWS_AS(Frame(many, {}), std::invalid_argument);
}
