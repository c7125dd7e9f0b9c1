#include <doctest.h>

#include <set>

#include "bga/presentation.hpp"

using namespace bga;

TEST_CASE("presentation of W_{2,(2,2,2)}") {
  Presentation p = present(make_star(2, {2, 2, 2}));
  CHECK(p.qcount() == 3);
  CHECK(p.acount() == 5);  // n+1+i = 3+2
  std::set<std::string> names;
  for (const auto& a : p.arrows) names.insert(a.name);
  CHECK(names == std::set<std::string>{"a0", "a1", "a2", "d0", "d1"});

  // Alpha-cycle around the center, delta loops at the big outer vertices.
  const Arrow& a0 = p.arrows[p.arrow_by_name.at("a0")];
  CHECK(p.qvertices[a0.src] == "0");
  CHECK(p.qvertices[a0.tgt] == "1");
  const Arrow& d1 = p.arrows[p.arrow_by_name.at("d1")];
  CHECK(p.qvertices[d1.src] == "1");
  CHECK(p.qvertices[d1.tgt] == "1");
  CHECK(p.cycle_next[p.arrow_by_name.at("a0")] == p.arrow_by_name.at("a1"));
  CHECK(p.cycle_next[p.arrow_by_name.at("a2")] == p.arrow_by_name.at("a0"));
  CHECK(p.cycle_next[p.arrow_by_name.at("d0")] == p.arrow_by_name.at("d0"));
  CHECK(p.cycle_cap[p.arrow_by_name.at("a0")] == 6);
  CHECK(p.cycle_cap[p.arrow_by_name.at("d0")] == 2);

  // Special biserial conditions (G1)/(G2).
  for (int q = 0; q < p.qcount(); ++q) {
    CHECK(p.out_arrows[q].size() <= 2);
    CHECK(p.in_arrows[q].size() <= 2);
  }
  for (int a = 0; a < p.acount(); ++a) {
    int continuations = 0;
    for (int b = 0; b < p.acount(); ++b)
      if (p.arrows[a].tgt == p.arrows[b].src && p.nonzero_path({a, b}, false)) ++continuations;
    CHECK(continuations <= 1);
  }

  // Type I at edges 0 and 1 only; edge 2 ends at a truncated vertex.
  CHECK(p.type1.size() == 2);
  CHECK(p.type2.size() == 5);

  // Projective shapes and dimensions.
  CHECK(projective_shape(p, p.qindex.at("0")).dim() == 8);
  CHECK(projective_shape(p, p.qindex.at("1")).dim() == 8);
  CHECK(projective_shape(p, p.qindex.at("2")).dim() == 7);
  CHECK(p.total_dimension() == 23);

  auto si = star_info(p);
  REQUIRE(si.has_value());
  CHECK(si->n == 2);
  CHECK(si->i == 2);
  CHECK(si->normal_form);
  CHECK(si->mult == std::vector<long>{2, 2, 2, 1});
}

TEST_CASE("exactly two maximal nonzero paths start at a biserial vertex") {
  Presentation p = present(make_star(2, {2, 2, 2}));
  // At q-vertex 0 the maximal paths are A_0^2 and delta_0^2.
  std::vector<int> a_cycle = p.special_cycle("z0", "0");
  std::vector<int> full;
  for (int rep = 0; rep < 2; ++rep) full.insert(full.end(), a_cycle.begin(), a_cycle.end());
  CHECK(p.nonzero_path(full, false));
  full.push_back(a_cycle[0]);
  CHECK_FALSE(p.nonzero_path(full, false));
  int d0 = p.arrow_by_name.at("d0");
  CHECK(p.nonzero_path({d0, d0}, false));
  CHECK_FALSE(p.nonzero_path({d0, d0}, true));  // zero in the socle quotient
  CHECK_FALSE(p.nonzero_path({d0, p.arrow_by_name.at("a0")}, false));
}

TEST_CASE("single edge with one multiplicity-2 end is a Nakayama loop") {
  Presentation p = present(make_star(0, {2}));
  CHECK(p.qcount() == 1);
  CHECK(p.acount() == 1);
  CHECK(p.cycle_cap[0] == 2);
  CHECK(projective_shape(p, 0).dim() == 3);  // top, radical, socle
}

TEST_CASE("make_star validates its multiplicity vector") {
  CHECK_THROWS_AS(make_star(2, {3, 2}), BadMultiplicityVector);
  CHECK_THROWS_AS(make_star(2, {1, 2}), BadMultiplicityVector);
  CHECK_THROWS_AS(make_star(1, {2, 2, 2, 2}), BadMultiplicityVector);
  CHECK_THROWS_AS(make_star(2, {}), BadMultiplicityVector);
}

TEST_CASE("koszul presentation carries the two-loop ladder quiver") {
  KoszulResult k = make_koszul(2, 2, 3);
  const Presentation& p = k.pres;
  CHECK(p.qcount() == 3);
  std::set<std::string> names;
  for (const auto& a : p.arrows) names.insert(a.name);
  CHECK(names == std::set<std::string>{"d", "g", "a1", "b1", "a2", "b2"});
  const Arrow& a1 = p.arrows[p.arrow_by_name.at("a1")];
  CHECK(p.qvertices[a1.src] == "0");
  CHECK(p.qvertices[a1.tgt] == "1");
  const Arrow& b2 = p.arrows[p.arrow_by_name.at("b2")];
  CHECK(p.qvertices[b2.src] == "2");
  CHECK(p.qvertices[b2.tgt] == "1");
  CHECK(p.cycle_cap[p.arrow_by_name.at("d")] == 2);
  CHECK(p.cycle_cap[p.arrow_by_name.at("g")] == 3);

  // delta^l = alpha_1 beta_1 is the type-I relation at edge 0.
  bool found = false;
  for (const auto& r : p.type1) {
    auto name = [&](const std::vector<int>& path) {
      std::string s;
      for (int a : path) s += p.arrows[a].name + " ";
      return s;
    };
    if (name(r.lhs) == "d d " || name(r.rhs) == "d d ") found = true;
  }
  CHECK(found);

  // Projectives: P(0) biserial with branches delta^2 and (a1 b1).
  ProjectiveShape s0 = projective_shape(p, p.qindex.at("0"));
  CHECK(s0.dim() == 4);
  ProjectiveShape s1 = projective_shape(p, p.qindex.at("1"));
  CHECK(s1.dim() == 4);
  ProjectiveShape s2 = projective_shape(p, p.qindex.at("2"));
  CHECK(s2.dim() == 5);  // branches (b2 a2) and g^3

  CHECK(growth_class(k.graph) == GrowthClass::NonPolynomial);
  CHECK(growth_class(make_koszul(1, 2, 2).graph) == GrowthClass::OneDomestic);

  // Lemma-style star reduction.
  BrauerGraph reduced = star_reduce(k.graph);
  CHECK(derived_equivalent(reduced, make_star(2, {2, 3})).equivalent());
}

TEST_CASE("koszul n=1 l=2 m=2: loops plus an alpha-beta square") {
  KoszulResult k = make_koszul(1, 2, 2);
  CHECK(k.pres.qcount() == 2);
  std::set<std::string> names;
  for (const auto& a : k.pres.arrows) names.insert(a.name);
  CHECK(names == std::set<std::string>{"d", "g", "a1", "b1"});
}

TEST_CASE("generic arrow naming for a non-star tree") {
  BrauerGraph g = random_tree(4, 7);
  Presentation p = present(g);
  CHECK(p.acount() > 0);
  for (const auto& a : p.arrows) CHECK(a.name.rfind("v", 0) == 0);
}

TEST_CASE("presentation export mentions all relation types") {
  Presentation p = present(make_star(2, {2, 2, 2}));
  std::string text = p.export_text();
  CHECK(text.find("type_I") != std::string::npos);
  CHECK(text.find("type_II") != std::string::npos);
  CHECK(text.find("type_III") != std::string::npos);
  CHECK(text.find("socle_relations") != std::string::npos);
}

TEST_CASE("total dimension agrees with the matrix oracle's structural count") {
  for (auto mbar : {std::vector<long>{2, 2, 2}, std::vector<long>{2, 3}}) {
    Presentation p = present(make_star(2, mbar));
    long via_reps = 0;
    for (int q = 0; q < p.qcount(); ++q) via_reps += projective_shape(p, q).dim();
    CHECK(via_reps == p.total_dimension());
  }
}

TEST_CASE("growth class is preserved by star reduction on trees") {
  for (unsigned long seed : {11ul, 12ul, 13ul, 14ul, 15ul, 16ul}) {
    BrauerGraph g = random_tree(5, seed);
    CHECK(growth_class(g) == growth_class(star_reduce(g)));
  }
}
