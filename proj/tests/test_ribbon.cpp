#include <doctest.h>

#include "bga/graph_io.hpp"
#include "bga/ribbon.hpp"

using namespace bga;

namespace {

BrauerGraph single_edge(long m1 = 1, long m2 = 1) {
  BrauerGraph g;
  g.vertices = {{"u", m1}, {"v", m2}};
  g.half_edges = {"h", "h'"};
  g.attach = {{"h", "u"}, {"h'", "v"}};
  g.pairing = {{"h", "h'"}, {"h'", "h"}};
  g.cyclic_orders = {{"u", {"h"}}, {"v", {"h'"}}};
  return g;
}

}  // namespace

TEST_CASE("validation accepts the smallest legal graph") {
  CHECK(validate(single_edge()).ok());
}

TEST_CASE("validation names a pairing fixed point") {
  BrauerGraph g = single_edge();
  g.pairing["h"] = "h";
  ValidationReport rep = validate(g);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.message.find("fixed point h") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validation rejects disconnected graphs") {
  BrauerGraph g = single_edge();
  g.vertices.push_back({"w", 1});
  g.vertices.push_back({"x", 1});
  g.half_edges.push_back("k");
  g.half_edges.push_back("k'");
  g.attach["k"] = "w";
  g.attach["k'"] = "x";
  g.pairing["k"] = "k'";
  g.pairing["k'"] = "k";
  g.cyclic_orders["w"] = {"k"};
  g.cyclic_orders["x"] = {"k'"};
  ValidationReport rep = validate(g);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.message.find("not connected") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validation rejects multiplicity zero") {
  BrauerGraph g = single_edge(0, 1);
  CHECK_FALSE(validate(g).ok());
}

TEST_CASE("green walks of a single edge") {
  BrauerGraph g = single_edge();
  auto walks = green_walks(g);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].steps.size() == 2);
  auto dbl = double_stepped_walks(g);
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0].steps.size() == 1);
  auto fs = faces(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].perimeter == 2);
}

TEST_CASE("walk and face structure of the star W_{2,(2,2,2)}") {
  BrauerGraph g = make_star(2, {2, 2, 2});
  REQUIRE(validate(g).ok());
  auto walks = green_walks(g);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].steps.size() == 6);
  auto dbl = double_stepped_walks(g);
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0].steps.size() == 3);
  CHECK(dbl[1].steps.size() == 3);
  auto per = face_perimeters(g);
  CHECK(per == std::vector<int>{6});
  CHECK(is_bipartite(g));
}

TEST_CASE("W_{3,(2,2)} has one face of perimeter 8") {
  BrauerGraph g = make_star(3, {2, 2});
  CHECK(face_perimeters(g) == std::vector<int>{8});
}

TEST_CASE("face boundaries interleave the green walk") {
  BrauerGraph g = make_star(2, {2, 2, 2});
  auto fs = faces(g);
  REQUIRE(fs.size() == 1);
  const Face& f = fs[0];
  REQUIRE(f.boundary.size() == 2 * static_cast<size_t>(f.perimeter));
  for (size_t k = 0; k < f.boundary.size(); k += 2) {
    CHECK(g.iota(f.boundary[k]) == f.boundary[k + 1]);
    CHECK(g.sigma(f.boundary[(k + 1) % f.boundary.size()]) ==
          f.boundary[(k + 2) % f.boundary.size()]);
  }
}

TEST_CASE("walks partition the half-edges") {
  for (unsigned long seed : {1ul, 2ul, 3ul, 17ul}) {
    BrauerGraph g = random_tree(6, seed);
    REQUIRE(validate(g).ok());
    std::set<std::string> seen;
    size_t total = 0;
    for (const auto& w : green_walks(g)) {
      total += w.steps.size();
      seen.insert(w.steps.begin(), w.steps.end());
    }
    CHECK(total == g.half_edges.size());
    CHECK(seen.size() == g.half_edges.size());
  }
}

TEST_CASE("derived equivalence: tree vs its star reduction") {
  BrauerGraph tree = read_graph(R"({"tree": {
    "multiplicities": {"a": 2, "b": 2, "c": 2, "d": 1},
    "edges": [["a","b"], ["b","c"], ["c","d"]]
  }})");
  REQUIRE(validate(tree).ok());
  BrauerGraph star = star_reduce(tree);
  // Path with multiplicities (2,2,2,1) reduces to W_{2,(2,2,2)}.
  DerivedEqReport vs_w = derived_equivalent(star, make_star(2, {2, 2, 2}));
  CHECK(vs_w.equivalent());
  CHECK(derived_equivalent(tree, star).equivalent());
}

TEST_CASE("derived equivalence distinguishes multiplicity multisets") {
  BrauerGraph a = make_star_any(2, {2, 2, 2});  // multiset {2,2,2,1}
  BrauerGraph b = make_star_any(2, {3, 3});     // multiset {3,3,1,1}
  DerivedEqReport r = derived_equivalent(a, b);
  CHECK_FALSE(r.multiplicities_match);
  CHECK_FALSE(r.equivalent());
}

TEST_CASE("star_reduce is idempotent and respects the normal form") {
  BrauerGraph w = make_star(2, {2, 3});
  BrauerGraph r = star_reduce(w);
  CHECK(derived_equivalent(w, r).equivalent());
  CHECK(r.multiplicity("z0") == 2);  // smallest big multiplicity at the center

  BrauerGraph tree = read_graph(R"({"tree": {
    "multiplicities": {"a": 3, "b": 2, "c": 1, "d": 1},
    "edges": [["a","b"], ["b","c"], ["c","d"]]
  }})");
  BrauerGraph s = star_reduce(tree);
  CHECK(derived_equivalent(s, make_star(2, {2, 3})).equivalent());
  CHECK(s.multiplicity("z0") == 2);
}

TEST_CASE("star_reduce rejects cycles") {
  BrauerGraph g;  // triangle
  g.vertices = {{"a", 1}, {"b", 1}, {"c", 1}};
  g.half_edges = {"1", "1'", "2", "2'", "3", "3'"};
  g.attach = {{"1", "a"}, {"1'", "b"}, {"2", "b"}, {"2'", "c"}, {"3", "c"}, {"3'", "a"}};
  g.pairing = {{"1", "1'"}, {"1'", "1"}, {"2", "2'"}, {"2'", "2"}, {"3", "3'"}, {"3'", "3"}};
  g.cyclic_orders = {{"a", {"1", "3'"}}, {"b", {"1'", "2"}}, {"c", {"2'", "3"}}};
  REQUIRE(validate(g).ok());
  CHECK_THROWS_AS(star_reduce(g), NotATree);
}

TEST_CASE("growth classification") {
  // Brauer tree: at most one vertex of multiplicity > 1.
  CHECK(growth_class(make_star_any(2, {})) == GrowthClass::Finite);
  CHECK(growth_class(make_star_any(2, {3})) == GrowthClass::Finite);
  // Tree with exactly two multiplicity-2 vertices.
  CHECK(growth_class(make_star(2, {2, 2})) == GrowthClass::OneDomestic);
  CHECK(growth_class(make_star(2, {2, 2, 2})) == GrowthClass::NonPolynomial);
  CHECK(growth_class(make_star(2, {2, 3})) == GrowthClass::NonPolynomial);

  // Odd cycle, all multiplicity 1: 1-domestic; even cycle: 2-domestic.
  BrauerGraph tri;
  tri.vertices = {{"a", 1}, {"b", 1}, {"c", 1}};
  tri.half_edges = {"1", "1'", "2", "2'", "3", "3'"};
  tri.attach = {{"1", "a"}, {"1'", "b"}, {"2", "b"}, {"2'", "c"}, {"3", "c"}, {"3'", "a"}};
  tri.pairing = {{"1", "1'"}, {"1'", "1"}, {"2", "2'"}, {"2'", "2"}, {"3", "3'"}, {"3'", "3"}};
  tri.cyclic_orders = {{"a", {"1", "3'"}}, {"b", {"1'", "2"}}, {"c", {"2'", "3"}}};
  CHECK(growth_class(tri) == GrowthClass::OneDomestic);

  BrauerGraph sq;
  sq.vertices = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  sq.half_edges = {"1", "1'", "2", "2'", "3", "3'", "4", "4'"};
  sq.attach = {{"1", "a"}, {"1'", "b"}, {"2", "b"}, {"2'", "c"},
               {"3", "c"}, {"3'", "d"}, {"4", "d"}, {"4'", "a"}};
  sq.pairing = {{"1", "1'"}, {"1'", "1"}, {"2", "2'"}, {"2'", "2"},
                {"3", "3'"}, {"3'", "3"}, {"4", "4'"}, {"4'", "4"}};
  sq.cyclic_orders = {{"a", {"1", "4'"}}, {"b", {"1'", "2"}}, {"c", {"2'", "3"}},
                      {"d", {"3'", "4"}}};
  CHECK(growth_class(sq) == GrowthClass::TwoDomestic);
}

TEST_CASE("exceptional edges of stars") {
  // W_{2,(2,2,2)}: i = 2, so only edge 2 hangs at a truncated vertex.
  auto exc = exceptional_edges(make_star(2, {2, 2, 2}));
  CHECK(exc == std::set<std::string>{"2"});
  // W_{2,(2,3)}: i = 1, edges 1 and 2 exceptional.
  exc = exceptional_edges(make_star(2, {2, 3}));
  CHECK(exc == std::set<std::string>{"1", "2"});
  // All outer vertices non-truncated: no exceptional edges.
  exc = exceptional_edges(make_star(1, {2, 2, 2}));
  CHECK(exc.empty());
  // Single edge between two multiplicity-2 vertices.
  exc = exceptional_edges(single_edge(2, 2));
  CHECK(exc.empty());
}

TEST_CASE("simple vs radical component criterion on stars") {
  CHECK(simple_rad_same_component(make_star(2, {2, 2, 2}), "0", "0"));
  CHECK(simple_rad_same_component(make_star(2, {2, 3}), "0", "0"));
  CHECK_FALSE(simple_rad_same_component(make_star(2, {3, 3}), "0", "0"));
  CHECK_THROWS_AS(simple_rad_same_component(make_star(2, {2, 2, 2}), "2", "2"),
                  ExceptionalEdgeArgument);
}

TEST_CASE("graph file format round trip and duplicate keys") {
  BrauerGraph g = make_star(2, {2, 2, 2});
  BrauerGraph back = read_graph(write_graph(g));
  CHECK(validate(back).ok());
  CHECK(derived_equivalent(g, back).equivalent());
  CHECK(back.cyclic_orders == g.cyclic_orders);

  CHECK_THROWS_AS(read_graph(R"({"vertices": [], "vertices": []})"), GraphFormatError);
  CHECK_THROWS_AS(read_graph(R"({"oops": 1})"), GraphFormatError);
}
