#include <doctest.h>

#include "bga/udr.hpp"

using namespace bga;

namespace {

struct Setup {
  AlgebraContext ctx;
  TubeSystem tubes;
  explicit Setup(const BrauerGraph& g) : ctx(g), tubes(ctx) {}
};

Setup& s222() {
  static Setup s(make_star(2, {2, 2, 2}));
  return s;
}

Setup& s223() {
  static Setup s(make_star(2, {2, 3}));
  return s;
}

}  // namespace

TEST_CASE("periodic classification by distance to the boundary") {
  Setup& s = s222();
  const Presentation& p = s.ctx.pres;
  Classification deep = classify(s.ctx, s.tubes, parse_word(p, "-d0 a0 -d1 a1"));
  CHECK(deep.ring == UDRClass::power_series());
  Classification mid = classify(s.ctx, s.tubes, parse_word(p, "-d1 a1"));
  CHECK(mid.ring == UDRClass::base());
  Classification bound = classify(s.ctx, s.tubes, parse_word(p, "e2"));
  CHECK(bound.ring == UDRClass::base());
  Classification big = classify(s.ctx, s.tubes, parse_word(p, "a2 -d0 a0 -d1 a1"));
  CHECK(big.ring.variant == UDRVariant::Unknown);  // stable end ring not k
}

TEST_CASE("omega-stable component classification over W_{2,(2,2,2)}") {
  Setup& s = s222();
  const Presentation& p = s.ctx.pres;
  // Positions 0, 1, 2 of the diagonal: x^2, k, k[[x]].
  std::vector<StringWord> diag = omega_stable_diagonal(s.ctx, 0, 3);
  CHECK(classify(s.ctx, s.tubes, diag[0]).ring == UDRClass::truncated(2));
  CHECK(classify(s.ctx, s.tubes, diag[1]).ring == UDRClass::base());
  CHECK(classify(s.ctx, s.tubes, diag[2]).ring == UDRClass::power_series());
  // S(0) is in the orbit of position 0.
  CHECK(classify(s.ctx, s.tubes, parse_word(p, "e0")).ring == UDRClass::truncated(2));
}

TEST_CASE("omega-stable component classification over W_{2,(2,3)}") {
  Setup& s = s223();
  const Presentation& p = s.ctx.pres;
  CHECK(classify(s.ctx, s.tubes, parse_word(p, "e0")).ring == UDRClass::truncated(3));
  // M_0 = M[x_{1,0}].
  CHECK(classify(s.ctx, s.tubes, parse_word(p, "a1 a2")).ring == UDRClass::truncated(2));
  std::vector<StringWord> diag = omega_stable_diagonal(s.ctx, 0, 2);
  CHECK(classify(s.ctx, s.tubes, diag[1]).ring == UDRClass::base());
}

TEST_CASE("classification is constant on omega orbits") {
  Setup& s = s222();
  const Presentation& p = s.ctx.pres;
  for (const char* text : {"e2", "-d1 a1", "-d0 a0 -d1 a1", "e0"}) {
    StringWord w = parse_word(p, text);
    Classification base = classify(s.ctx, s.tubes, w);
    Classification shifted = classify(s.ctx, s.tubes, omega(s.ctx, w));
    CHECK(base.ring == shifted.ring);
  }
}

TEST_CASE("finite ladder certifies k[[x]]/(x^3) for S(0) over W_{2,(2,3)}") {
  Setup& s = s223();
  const Presentation& p = s.ctx.pres;
  Ladder ladder;
  ladder.base = parse_word(p, "e0");
  ladder.finite = {parse_word(p, "-d0"), parse_word(p, "-d0 -d0")};
  LadderVerdict v = verify_ladder(s.ctx, ladder.base, ladder);
  CHECK(v.verified);
  CHECK(v.implied == UDRClass::truncated(3));
  CHECK(v.mode == "finite");
  // Ladder verdict and classifier agree.
  CHECK(classify(s.ctx, s.tubes, ladder.base).ring == v.implied);
}

TEST_CASE("template ladder certifies k[[x]] for the deepest tube module") {
  Setup& s = s222();
  const Presentation& p = s.ctx.pres;
  Ladder ladder;
  ladder.base = parse_word(p, "-d0 a0 -d1 a1");
  ladder.templ = {parse_word(p, "-d0 a0 -d1 a1"), parse_word(p, "a2 -d0 a0 -d1 a1")};
  LadderVerdict v = verify_ladder(s.ctx, ladder.base, ladder, 4);
  CHECK(v.verified);
  CHECK(v.implied == UDRClass::power_series());
  CHECK(v.mode.find("template") != std::string::npos);
}

TEST_CASE("template ladder for the section-4 power series case") {
  // M = Omega(M_n) in the first omega-stable case: W_j = M[D_n (alpha_t D_n)^j],
  // with D_n = delta_{i-1}^{-1} x_{i-1,0} gamma_{0,t-1} (empty gamma at t = 0).
  Setup& s = s222();
  const Presentation& p = s.ctx.pres;
  std::vector<StringWord> diag = omega_stable_diagonal(s.ctx, 0, 3);
  StringWord dn = omega(s.ctx, diag[2]);
  CHECK(same_module(dn, parse_word(p, "-d1 a1 a2")));
  dn = parse_word(p, "-d1 a1 a2");  // orientation with the block composing on the right
  StringWord alpha_t = parse_word(p, "a0");
  Ladder ladder;
  ladder.base = dn;
  ladder.templ = {dn, concat(p, alpha_t, dn)};
  LadderVerdict v = verify_ladder(s.ctx, dn, ladder, 3);
  CHECK(v.verified);
  CHECK(v.implied == UDRClass::power_series());
}

TEST_CASE("broken ladder rejected: no canonical epimorphism") {
  Setup& s = s223();
  const Presentation& p = s.ctx.pres;
  Ladder broken;
  broken.base = parse_word(p, "e0");
  broken.finite = {parse_word(p, "a2")};  // S(0) embeds, but nothing projects back
  CHECK_THROWS_AS(verify_ladder(s.ctx, broken.base, broken), HypothesisFailed);
  try {
    verify_ladder(s.ctx, broken.base, broken);
  } catch (const HypothesisFailed& e) {
    CHECK(e.condition.find("epimorphism") != std::string::npos);
    CHECK(e.level == 1);
  }
}

TEST_CASE("koszul family classification via derived-equivalence transport") {
  KoszulResult k = make_koszul(2, 2, 3);
  AlgebraContext ctx(k.graph);
  TubeSystem tubes(ctx);
  const Presentation& p = ctx.pres;
  // Diagonal from the boundary module gamma^{m-1}: d = 0, 1, 2.
  StringWord w0 = parse_word(p, "g g");
  std::vector<StringWord> diag = diagonal(ctx, w0, 3);
  REQUIRE(diag.size() == 3);
  CHECK(same_module(diag[1], parse_word(p, "g g -a2 b1")));
  CHECK(same_module(diag[2], parse_word(p, "g g -a2 b1 -d a1")));
  CHECK(classify(ctx, tubes, diag[0]).ring == UDRClass::base());
  CHECK(classify(ctx, tubes, diag[1]).ring == UDRClass::base());
  CHECK(classify(ctx, tubes, diag[2]).ring == UDRClass::power_series());
}

TEST_CASE("classify_tree transports along the star reduction") {
  BrauerGraph tree = make_star_any(2, {2, 2, 2});  // already a star; also a tree
  TreeClassification tc = classify_tree(tree, "-d0 a0 -d1 a1");
  CHECK(tc.result.ring == UDRClass::power_series());
  CHECK(tc.transport_note.find("derived equivalence") != std::string::npos);
  CHECK_THROWS_AS(classify_tree(make_star(2, {2, 2}), "e0"), GrowthClassUnsupported);
}

TEST_CASE("classify_tree for the single multiplicity-2 plus multiplicity-4 tree") {
  BrauerGraph tree = make_star_any(3, {2, 4});
  AlgebraContext ctx(star_reduce(tree));
  std::vector<StringWord> diag = omega_stable_diagonal(ctx, 0, 4);
  TreeClassification end = classify_tree(tree, format_word(ctx.pres, diag[3]));
  CHECK(end.result.ring == UDRClass::truncated(4));
  TreeClassification start = classify_tree(tree, format_word(ctx.pres, diag[0]));
  CHECK(start.result.ring == UDRClass::truncated(2));
}
