#include "bga/udr.hpp"

#include <algorithm>
#include <sstream>

namespace bga {

std::string UDRClass::str() const {
  switch (variant) {
    case UDRVariant::Base: return "k";
    case UDRVariant::PowerSeries: return "k[[x]]";
    case UDRVariant::TruncatedPoly: return "k[[x]]/(x^" + std::to_string(exponent) + ")";
    case UDRVariant::Unknown: return "unknown(" + reason + ")";
  }
  return "?";
}

namespace {

void note(Classification& c, const std::string& key, const std::string& value) {
  c.trail.emplace_back(key, value);
}

}  // namespace

Classification classify(const AlgebraContext& ctx, TubeSystem& tubes, const StringWord& m) {
  const Presentation& p = ctx.pres;
  Classification c;
  check_word(p, m);
  if (m.trivial() && projective_shape(p, m.base).dim() == 1)
    throw ProjectiveInput("projective modules have no deformation classification here");
  note(c, "module", format_word(p, m));

  if (!is_tree(p.graph)) {
    c.ring = UDRClass::unknown("presentation is not a generalized Brauer tree algebra");
    return c;
  }

  const int se = stable_end_dim(p, m);
  note(c, "stable_end_dim", std::to_string(se));
  if (se != 1) {
    c.ring = UDRClass::unknown("stable endomorphism ring not k");
    return c;
  }

  const int e1 = ext1_dim(ctx, m);
  note(c, "ext1_dim", std::to_string(e1));
  if (e1 == 0) {
    note(c, "rule", "tangent space zero forces the residue field");
    c.ring = UDRClass::base();
    return c;
  }
  if (e1 > 1) {
    c.ring = UDRClass::unknown("tangent dimension > 1 outside classified cases");
    return c;
  }

  const GrowthClass growth = growth_class(p.graph);
  PeriodicityResult per = is_periodic(ctx, m);
  note(c, "periodic", per.periodic ? "yes (period " + std::to_string(per.period) + ")" : "no");

  if (per.periodic) {
    if (growth != GrowthClass::NonPolynomial) {
      c.ring = UDRClass::unknown("growth class outside theorem coverage");
      return c;
    }
    auto hit = tubes.locate_in_tube(m);
    if (!hit) {
      c.ring = UDRClass::unknown("periodic module not located in a tube");
      return c;
    }
    const int d = hit->second;
    const int boundary_max = p.graph.edge_count() - 1;
    note(c, "tube", std::to_string(hit->first + 1));
    note(c, "d", std::to_string(d));
    // Cross-check against the closed-form tables: stable end k forces
    // d <= |E|-1, and the tangent space is 1 exactly at d = |E|-1.
    if (d > boundary_max) {
      c.ring = UDRClass::unknown("cross-check failed: d exceeds |E|-1 with stable end k");
      return c;
    }
    const int predicted_e1 = d == boundary_max ? 1 : 0;
    note(c, "predicted_ext1", std::to_string(predicted_e1));
    if (predicted_e1 != e1) {
      c.ring = UDRClass::unknown("cross-check failed: tangent dimension vs distance table");
      return c;
    }
    note(c, "rule", "periodic table: k[[x]] at d = |E|-1, k below");
    c.ring = d == boundary_max ? UDRClass::power_series() : UDRClass::base();
    return c;
  }

  // Non-periodic: the omega-stable components containing a simple module.
  ComponentAddress addr = locate(ctx, tubes, m);
  if (addr.kind != ComponentAddress::Kind::ZAInfInf) {
    c.ring = UDRClass::unknown("outside theorem coverage");
    return c;
  }
  auto si = star_info(p);
  if (!si || !si->normal_form) {
    c.ring = UDRClass::unknown("outside theorem coverage");
    return c;
  }
  const int n = si->n;
  const int t = addr.simple_t;
  const int j = addr.diag_index;
  note(c, "component", "C_S(" + p.qvertices[t] + ")");
  note(c, "diagonal_index", std::to_string(j));
  note(c, "omega_shift", std::to_string(addr.omega_shift));
  if (j > n) {
    c.ring = UDRClass::unknown("cross-check failed: diagonal index beyond n with stable end k");
    return c;
  }
  const int predicted_e1 = (j == 0 || j == n) ? 1 : 0;
  note(c, "predicted_ext1", std::to_string(predicted_e1));
  if (predicted_e1 != e1) {
    c.ring = UDRClass::unknown("cross-check failed: tangent dimension vs diagonal table");
    return c;
  }
  if (si->mult[t + 1] == 2) {
    note(c, "rule", "omega-stable case m_{t+1}=2: x^2 at j=0, k[[x]] at j=n, k between");
    if (j == 0)
      c.ring = UDRClass::truncated(2);
    else if (j == n)
      c.ring = UDRClass::power_series();
    else
      c.ring = UDRClass::base();
    return c;
  }
  if (si->i == 1 && t == 0 && si->mult[0] == 2 && si->mult[1] > 2) {
    note(c, "rule", "omega-stable case i=1, m0=2: x^2 at j=0, x^{m1} at j=n, k between");
    if (j == 0)
      c.ring = UDRClass::truncated(2);
    else if (j == n)
      c.ring = UDRClass::truncated(si->mult[1]);
    else
      c.ring = UDRClass::base();
    return c;
  }
  c.ring = UDRClass::unknown("outside theorem coverage");
  return c;
}

// ---------------------------------------------------------------------------
// Ladder verification.

namespace {

// Position map of a canonical hom (source position -> target position, -1 on
// the kernel).
std::vector<int> position_map(const StringWord& C, const CanonicalHom& h) {
  std::vector<int> map(C.size() + 1, -1);
  for (int t = 0; t <= h.cb - h.ca; ++t)
    map[h.ca + t] = h.reversed ? h.db - t : h.da + t;
  return map;
}

// Splits a position subset of a word into maximal intervals.
std::vector<std::pair<int, int>> intervals_of(const std::vector<bool>& in) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(in.size());
  int k = 0;
  while (k < n) {
    if (!in[k]) {
      ++k;
      continue;
    }
    int j = k;
    while (j + 1 < n && in[j + 1]) ++j;
    out.emplace_back(k, j);
    k = j + 1;
  }
  return out;
}

// The sub-string module spanned by a position interval [a, b].
StringWord subword(const Presentation& p, const StringWord& w, int a, int b) {
  if (a == b) return trivial_word(vertex_at(p, w, a));
  std::vector<Letter> letters(w.letters.begin() + a, w.letters.begin() + b);
  return word_from_letters(p, letters);
}

struct LevelPair {
  CanonicalHom iota;
  CanonicalHom eps;
};

// All (iota, eps) pairs with iota a canonical mono W_{l-1} -> W_l and eps a
// canonical epi W_l -> W_{l-1}.
std::vector<LevelPair> level_pairs(const Presentation& p, const StringWord& lower,
                                   const StringWord& upper) {
  std::vector<CanonicalHom> monos, epis;
  for (const auto& h : canonical_homs(p, lower, upper))
    if (h.ca == 0 && h.cb == lower.size()) monos.push_back(h);
  for (const auto& h : canonical_homs(p, upper, lower))
    if (h.da == 0 && h.db == lower.size()) epis.push_back(h);
  std::vector<LevelPair> pairs;
  for (const auto& i : monos)
    for (const auto& e : epis) pairs.push_back({i, e});
  return pairs;
}

// ker sigma and Im(sigma^l) both isomorphic to M, checked at the word level.
bool pair_certifies(const Presentation& p, const StringWord& m, const StringWord& lower,
                    const StringWord& upper, const LevelPair& pair, int level,
                    std::string* fail) {
  std::vector<int> eps_map = position_map(upper, pair.eps);
  std::vector<int> iota_map = position_map(lower, pair.iota);
  const int dim_upper = upper.size() + 1;
  std::vector<int> sigma(dim_upper, -1);
  for (int pos = 0; pos < dim_upper; ++pos)
    if (eps_map[pos] >= 0) sigma[pos] = iota_map[eps_map[pos]];

  std::vector<bool> kernel(dim_upper, false);
  for (int pos = 0; pos < dim_upper; ++pos) kernel[pos] = sigma[pos] < 0;
  auto kernel_intervals = intervals_of(kernel);
  if (kernel_intervals.size() != 1) {
    *fail = "ker(sigma) is not an interval submodule";
    return false;
  }
  StringWord ker = subword(p, upper, kernel_intervals[0].first, kernel_intervals[0].second);
  if (!same_module(ker, m)) {
    *fail = "ker(sigma) not isomorphic to M";
    return false;
  }

  std::vector<bool> image(dim_upper, true);
  for (int it = 0; it < level; ++it) {
    std::vector<bool> next(dim_upper, false);
    for (int pos = 0; pos < dim_upper; ++pos)
      if (image[pos] && sigma[pos] >= 0) next[sigma[pos]] = true;
    image = next;
  }
  auto image_intervals = intervals_of(image);
  if (image_intervals.size() != 1) {
    *fail = "Im(sigma^l) is not an interval submodule";
    return false;
  }
  StringWord img = subword(p, upper, image_intervals[0].first, image_intervals[0].second);
  if (!same_module(img, m)) {
    *fail = "Im(sigma^l) not isomorphic to M";
    return false;
  }
  return true;
}

StringWord power_concat(const Presentation& p, const StringWord& prefix,
                        const StringWord& block, int reps) {
  StringWord w = prefix;
  for (int k = 0; k < reps; ++k) w = concat(p, w, block);
  return w;
}

}  // namespace

LadderVerdict verify_ladder(const AlgebraContext& ctx, const StringWord& m, const Ladder& l,
                            int probe_depth) {
  const Presentation& p = ctx.pres;
  LadderVerdict verdict;
  if (!same_module(l.base, m)) throw HypothesisFailed("W_0 is not M", 0);
  if (ext1_dim(ctx, m) != 1)
    throw HypothesisFailed("dim Ext^1(M,M) = 1 hypothesis fails", 0);
  verdict.trail.push_back("ext1(M,M) = 1");

  const bool finite = !l.templ.has_value();
  std::vector<StringWord> words = {canonical(m)};
  int levels = 0;
  if (finite) {
    for (const auto& w : l.finite) words.push_back(canonical(w));
    levels = static_cast<int>(l.finite.size());
    if (levels == 0) throw HypothesisFailed("finite ladder has no levels", 0);
  } else {
    auto si = star_info(p);
    const int default_depth = si ? 2 * (si->n + 1) + 2 : 2 * p.graph.edge_count() + 2;
    levels = probe_depth > 0 ? probe_depth : default_depth;
    const auto& [prefix, block] = *l.templ;
    if (!same_module(prefix, m)) throw HypothesisFailed("template prefix is not W_0 = M", 0);
    for (int k = 1; k <= levels; ++k)
      words.push_back(canonical(power_concat(p, prefix, block, k)));
  }

  for (int lvl = 1; lvl <= levels; ++lvl) {
    const StringWord& lower = words[lvl - 1];
    const StringWord& upper = words[lvl];
    std::vector<LevelPair> pairs = level_pairs(p, lower, upper);
    if (pairs.empty()) {
      bool has_mono = false;
      for (const auto& h : canonical_homs(p, lower, upper))
        if (h.ca == 0 && h.cb == lower.size()) has_mono = true;
      throw HypothesisFailed(has_mono ? "epsilon_l is not a canonical epimorphism"
                                      : "iota_l is not a canonical monomorphism",
                             lvl);
    }
    std::string fail;
    bool ok = false;
    for (const auto& pair : pairs)
      if (pair_certifies(p, m, lower, upper, pair, lvl, &fail)) {
        ok = true;
        break;
      }
    if (!ok) throw HypothesisFailed(fail, lvl);
    verdict.trail.push_back("level " + std::to_string(lvl) +
                            ": iota/epsilon found, ker(sigma) = M, Im(sigma^l) = M");
  }

  if (finite) {
    const StringWord& last = words.back();
    const int hom = static_cast<int>(canonical_homs(p, last, m).size());
    if (hom != 1)
      throw HypothesisFailed("dim Hom(W_N, M) = " + std::to_string(hom) + ", expected 1",
                             levels);
    verdict.trail.push_back("dim Hom(W_N, M) = 1");
    const int ext = stable_hom_dim(p, omega(ctx, last), m);
    if (ext != 0)
      throw HypothesisFailed("Ext^1(W_N, M) = " + std::to_string(ext) + ", expected 0",
                             levels);
    verdict.trail.push_back("Ext^1(W_N, M) = 0");
    verdict.mode = "finite";
    verdict.implied = UDRClass::truncated(levels + 1);
  } else {
    verdict.mode = "template verified to depth " + std::to_string(levels) +
                   "; infinitude rests on the template structure";
    verdict.implied = UDRClass::power_series();
  }
  verdict.trail.push_back("maximality of the ladder assumed (not machine-checked)");
  verdict.verified = true;
  return verdict;
}

TreeClassification classify_tree(const BrauerGraph& tree, const std::string& star_word_text) {
  require_valid(tree);
  if (!is_tree(tree)) throw NotATree("classify_tree needs a generalized Brauer tree");
  if (growth_class(tree) != GrowthClass::NonPolynomial)
    throw GrowthClassUnsupported("classify_tree covers non-polynomial growth only");
  BrauerGraph star = star_reduce(tree);
  AlgebraContext ctx(star);
  TubeSystem tubes(ctx);
  StringWord w = parse_word(ctx.pres, star_word_text);
  TreeClassification out;
  out.result = classify(ctx, tubes, w);
  out.transport_note =
      "classified over the star reduction; the answer transports to the tree algebra along "
      "the derived equivalence (stable equivalence of Morita type preserves universal "
      "deformation rings)";
  return out;
}

}  // namespace bga
