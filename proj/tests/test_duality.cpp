#include "doctest.h"

#include <vector>

#include "gl/duality.hpp"

using gl::CofinElement;
using gl::FinAlgebra;
using gl::Frame;
using Elem = gl::FinAlgebra::Elem;

TEST_CASE("prime filters of finite powerset algebras") {
  FinAlgebra chain(gl::make_descending_chain(3));
  std::vector<gl::PrimeFilterFin> fs = gl::prime_filters(chain);
  REQUIRE(fs.size() == 3);
  for (const gl::PrimeFilterFin& f : fs) CHECK(gl::filter_laws_hold(chain, f));
  CHECK(fs[1].contains(0b010));
  CHECK_FALSE(fs[1].contains(0b101));

  FinAlgebra point(1, std::vector<Elem>{0b0});
  CHECK(gl::prime_filters(point).size() == 1);
}

TEST_CASE("designated meets never drop principal filters") {
  // an atom inside every member of a family is inside the bitwise meet, so
  // the filter condition is vacuous on finite powersets whatever the families
  FinAlgebra a(gl::make_fan(2));
  gl::QSetFin q0 = gl::q0_fin(a);
  CHECK(q0.families.size() == 1);
  CHECK(q0.families[0].meet == a.diamond_chain().stabilized);
  CHECK(gl::q_filters(a, q0).size() == gl::prime_filters(a).size());

  std::vector<Elem> gens{0b0010, 0b1001};
  gl::QSetFin deep = gl::build_qset(a, 2, gens);
  CHECK(deep.families.size() >= q0.families.size());
  CHECK(gl::q_filters(a, deep).size() == gl::prime_filters(a).size());
}

TEST_CASE("meet family hierarchy") {
  FinAlgebra chain(gl::make_descending_chain(3));
  gl::QSetFin q0 = gl::q0_fin(chain);
  REQUIRE(q0.families.size() == 1);
  CHECK(q0.families[0].values == std::vector<Elem>{0b000, 0b100, 0b110, 0b111});
  CHECK(q0.families[0].meet == 0);
  CHECK(q0.level_sizes == std::vector<int>{1});

  std::vector<Elem> gens{0b010};
  gl::QSetFin q1 = gl::build_qset(chain, 1, gens);
  REQUIRE(q1.families.size() == 2);
  CHECK(q1.level_sizes == std::vector<int>{1, 1});
  // box(0b010 v x) over the chain values collapses to {box(1), box(0b110)}
  CHECK(q1.families[1].values == std::vector<Elem>{0b001, 0b111});
  CHECK(q1.families[1].meet == 0b001);

  CHECK_THROWS_AS(gl::build_qset(chain, 3, gens, 2), gl::ResourceGuardError);
}

TEST_CASE("dual frames reconstruct their sources") {
  const Frame sources[] = {gl::make_descending_chain(1), gl::make_descending_chain(3),
                           gl::make_fan(2), Frame({"a"}, {{0, 0}}),
                           Frame::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}})};
  for (const Frame& fr : sources) {
    FinAlgebra a(fr);
    gl::QSetFin q = gl::q0_fin(a);
    Frame dual = gl::dual_frame(a, q);
    CHECK(gl::find_isomorphism(dual, fr).has_value());
    gl::EmbeddingReport emb = gl::check_embedding(a, q);
    CHECK(emb.injective);
    CHECK(emb.preserves_bounds);
    CHECK(emb.preserves_meet);
    CHECK(emb.preserves_complement);
    CHECK(emb.preserves_box);
  }
}

TEST_CASE("single irreflexive world dualizes to no edges") {
  FinAlgebra a(1, std::vector<Elem>{0b0});
  Frame dual = gl::dual_frame(a, gl::q0_fin(a));
  CHECK(dual.size() == 1);
  CHECK(dual.edges().empty());
}

TEST_CASE("canonical map is the identity on atoms in filter order") {
  FinAlgebra a(gl::make_descending_chain(3));
  std::vector<gl::PrimeFilterFin> fs = gl::q_filters(a, gl::q0_fin(a));
  CHECK(gl::eta(fs, 0) == 0);
  CHECK(gl::eta(fs, a.one()) == a.one());
  CHECK(gl::eta(fs, 0b101) == 0b101);
}

TEST_CASE("prime filters over w+1") {
  std::vector<gl::OmegaFilter> all = gl::omega_prime_filters(5);
  REQUIRE(all.size() == 7);  // 0..4, the top point, one free
  std::vector<gl::OmegaFilter> kept = gl::omega_q0_filters(5);
  REQUIRE(kept.size() == 6);
  for (const gl::OmegaFilter& f : kept) CHECK(f.kind != gl::OmegaFilterKind::free_ultra);

  gl::OmegaFilter at2 = kept[2];
  CHECK(at2.kind == gl::OmegaFilterKind::principal_nat);
  CHECK(at2.contains(CofinElement::cofinite_set({5}, true)));
  CHECK_FALSE(at2.contains(CofinElement::cofinite_set({2}, true)));

  for (const gl::OmegaFilter& f : all) {
    if (f.kind == gl::OmegaFilterKind::principal_omega) {
      CHECK(f.contains(CofinElement::omega_point()));
      CHECK_FALSE(f.contains(CofinElement::cofinite_set({}, false)));
    }
    if (f.kind == gl::OmegaFilterKind::free_ultra) {
      CHECK(f.contains(CofinElement::cofinite_set({}, false)));
      CHECK(f.contains(CofinElement::cofinite_set({0, 4}, false)));
      CHECK_FALSE(f.contains(CofinElement::finite_set({0, 1, 2}, true)));
      // the free one sits above the chain but misses its meet
      CHECK(f.contains(gl::OmegaAlgebra::diamond_n_one(9)));
      CHECK_FALSE(f.contains(gl::OmegaAlgebra::chain_meet()));
    }
  }
}

TEST_CASE("edges by box preimage generators") {
  std::vector<gl::OmegaFilter> kept = gl::omega_q0_filters(4);
  gl::OmegaFilter n1 = kept[1], n3 = kept[3], top = kept[4];
  REQUIRE(top.kind == gl::OmegaFilterKind::principal_omega);
  CHECK(gl::box_preimage_generator(n3) == CofinElement::finite_set({0, 1, 2}, false));
  CHECK(gl::box_preimage_generator(top) == CofinElement::cofinite_set({}, false));
  CHECK(gl::omega_dual_edge(n3, n1));
  CHECK_FALSE(gl::omega_dual_edge(n1, n3));
  CHECK_FALSE(gl::omega_dual_edge(n1, n1));
  CHECK(gl::omega_dual_edge(top, n3));
  CHECK_FALSE(gl::omega_dual_edge(n3, top));
  CHECK_FALSE(gl::omega_dual_edge(top, top));
}

TEST_CASE("the windowed dual of the w+1 algebra is a chain with a top") {
  for (int window : {2, 5, 8}) {
    Frame dual = gl::omega_dual_frame(window);
    CHECK(dual.size() == window + 1);
    CHECK(gl::find_isomorphism(dual, gl::make_descending_chain(window + 1)).has_value());
    CHECK(gl::classify_frame(dual).finite_irreflexive_transitive);
  }
}

TEST_CASE("filter images of the chain") {
  std::vector<gl::OmegaFilter> kept = gl::omega_q0_filters(6);
  gl::WorldSet im = gl::omega_eta(kept, gl::OmegaAlgebra::diamond_n_one(3));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool expected = kept[i].kind == gl::OmegaFilterKind::principal_omega ||
                    (kept[i].kind == gl::OmegaFilterKind::principal_nat && kept[i].point >= 3);
    CHECK(im.test(i) == expected);
  }
  gl::WorldSet inter = gl::omega_eta_chain_intersection(kept, 12);
  CHECK(inter.count() == 1);
  CHECK(inter == gl::omega_eta(kept, gl::OmegaAlgebra::chain_meet()));
}
