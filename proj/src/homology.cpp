#include "bga/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bga {

AlgebraContext::AlgebraContext(const BrauerGraph& g)
    : pres(present(g)), op(present(g.mirrored())) {
  std::map<std::pair<std::string, std::string>, int> op_by_provenance;
  for (int a = 0; a < op.acount(); ++a)
    op_by_provenance[{op.arrows[a].graph_vertex, op.arrows[a].start_half_edge}] = a;
  to_op.assign(pres.acount(), -1);
  from_op.assign(op.acount(), -1);
  for (int a = 0; a < pres.acount(); ++a) {
    // Arrow (v,h): edge(h) -> edge(sigma h). The opposite arrow starts at
    // sigma(h) and runs back along the reversed rotation.
    const Arrow& ar = pres.arrows[a];
    int b = op_by_provenance.at({ar.graph_vertex, pres.graph.sigma(ar.start_half_edge)});
    to_op[a] = b;
    from_op[b] = a;
  }
}

StringWord AlgebraContext::transport_to_op(const StringWord& w) const {
  StringWord r = w;
  for (Letter& l : r.letters) {
    l.arrow = to_op[l.arrow];
    l.inverse = !l.inverse;
  }
  return r;
}

StringWord AlgebraContext::transport_from_op(const StringWord& w) const {
  StringWord r = w;
  for (Letter& l : r.letters) {
    l.arrow = from_op[l.arrow];
    l.inverse = !l.inverse;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Syzygy.

namespace {

struct TopData {
  int pos = 0;
  int vertex = -1;
  int s_left = 0;     // length of the inverse run descending to the left
  int s_right = 0;    // length of the direct run descending to the right
  std::vector<int> left_branch;   // full-power arrow list; empty = absent
  std::vector<int> right_branch;
};

}  // namespace

SyzygyResult syzygy(const Presentation& p, const StringWord& m) {
  check_word(p, m);
  if (m.trivial() && projective_shape(p, m.base).dim() == 1)
    throw ProjectiveInput("module is the simple projective of an isolated edge");

  SyzygyResult result;
  result.input = m;

  std::vector<int> tops = top_positions(m);
  const int r = static_cast<int>(tops.size());
  std::vector<TopData> data(r);
  long cover_dim = 0;
  for (int k = 0; k < r; ++k) {
    TopData& t = data[k];
    t.pos = tops[k];
    t.vertex = vertex_at(p, m, t.pos);
    result.cover_summands.push_back(t.vertex);
    while (t.pos - 1 - t.s_left >= 0 && m.letters[t.pos - 1 - t.s_left].inverse) ++t.s_left;
    while (t.pos + t.s_right < m.size() && !m.letters[t.pos + t.s_right].inverse) ++t.s_right;

    ProjectiveShape shape = projective_shape(p, t.vertex);
    cover_dim += shape.dim();
    const int left_first = t.s_left > 0 ? m.letters[t.pos - 1].arrow : -1;
    const int right_first = t.s_right > 0 ? m.letters[t.pos].arrow : -1;
    auto matches = [](const std::vector<int>& b, int first) {
      return !b.empty() && b[0] == first;
    };
    if (left_first >= 0 && right_first >= 0) {
      if (matches(shape.branch1, left_first) && matches(shape.branch2, right_first)) {
        t.left_branch = shape.branch1;
        t.right_branch = shape.branch2;
      } else if (matches(shape.branch2, left_first) && matches(shape.branch1, right_first)) {
        t.left_branch = shape.branch2;
        t.right_branch = shape.branch1;
      } else {
        throw std::logic_error("projective branches do not cover the word runs");
      }
    } else if (right_first >= 0) {
      if (matches(shape.branch1, right_first)) {
        t.right_branch = shape.branch1;
        t.left_branch = shape.branch2;
      } else if (matches(shape.branch2, right_first)) {
        t.right_branch = shape.branch2;
        t.left_branch = shape.branch1;
      } else {
        throw std::logic_error("projective branch missing for right run");
      }
    } else if (left_first >= 0) {
      if (matches(shape.branch1, left_first)) {
        t.left_branch = shape.branch1;
        t.right_branch = shape.branch2;
      } else if (matches(shape.branch2, left_first)) {
        t.left_branch = shape.branch2;
        t.right_branch = shape.branch1;
      } else {
        throw std::logic_error("projective branch missing for left run");
      }
    } else {
      t.left_branch = shape.branch1;
      t.right_branch = shape.branch2;
    }
  }

  // Kernel word: boundary leftover of the first projective, then for each
  // interior deep the two branch tails glued at the diagonal, then the
  // boundary leftover of the last projective.
  std::vector<Letter> letters;
  const TopData& first = data[0];
  if (!first.left_branch.empty())
    for (size_t idx = first.s_left + 1; idx < first.left_branch.size(); ++idx)
      letters.push_back({first.left_branch[idx], false});
  for (int k = 0; k + 1 < r; ++k) {
    const TopData& cur = data[k];
    const TopData& nxt = data[k + 1];
    for (int idx = static_cast<int>(cur.right_branch.size()) - 1; idx >= cur.s_right; --idx)
      letters.push_back({cur.right_branch[idx], true});
    for (size_t idx = nxt.s_left; idx < nxt.left_branch.size(); ++idx)
      letters.push_back({nxt.left_branch[idx], false});
  }
  const TopData& last = data[r - 1];
  if (!last.right_branch.empty())
    for (int idx = static_cast<int>(last.right_branch.size()) - 1; idx >= last.s_right + 1;
         --idx)
      letters.push_back({last.right_branch[idx], true});

  if (letters.empty()) {
    if (cover_dim - m.dim() != 1)
      throw std::logic_error("syzygy dimension bookkeeping failed");
    result.output = trivial_word(first.vertex);
  } else {
    result.output = canonical(word_from_letters(p, letters));
    if (result.output.dim() != cover_dim - m.dim())
      throw std::logic_error("syzygy dimension identity violated");
  }
  return result;
}

SyzygyResult syzygy(const AlgebraContext& ctx, const StringWord& m) {
  return syzygy(ctx.pres, m);
}

SyzygyResult cosyzygy(const AlgebraContext& ctx, const StringWord& m) {
  SyzygyResult over_op = syzygy(ctx.op, ctx.transport_to_op(m));
  SyzygyResult result;
  result.input = m;
  result.cover_summands = over_op.cover_summands;  // socle summands of m
  result.output = canonical(ctx.transport_from_op(over_op.output));
  return result;
}

StringWord omega(const AlgebraContext& ctx, const StringWord& m) {
  return syzygy(ctx, m).output;
}

StringWord omega_inv(const AlgebraContext& ctx, const StringWord& m) {
  return cosyzygy(ctx, m).output;
}

StringWord omega_pow(const AlgebraContext& ctx, const StringWord& m, int k) {
  StringWord cur = canonical(m);
  for (; k > 0; --k) cur = omega(ctx, cur);
  for (; k < 0; ++k) cur = omega_inv(ctx, cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Stable homomorphisms.

int stable_hom_dim(const Presentation& p, const StringWord& m, const StringWord& n) {
  const int hom_dim = static_cast<int>(canonical_homs(p, m, n).size());
  std::vector<IntMat> composites = projective_composites(p, m, n);
  if (composites.empty()) return hom_dim;
  IntMat flat;
  for (const IntMat& c : composites) {
    std::vector<std::int64_t> row;
    for (const auto& r : c) row.insert(row.end(), r.begin(), r.end());
    flat.push_back(std::move(row));
  }
  return hom_dim - rank_exact(flat);
}

int stable_end_dim(const Presentation& p, const StringWord& m) {
  return stable_hom_dim(p, m, m);
}

int ext1_dim(const AlgebraContext& ctx, const StringWord& m) {
  return stable_hom_dim(ctx.pres, omega(ctx, m), m);
}

PeriodicityResult is_periodic(const AlgebraContext& ctx, const StringWord& m,
                              int bound_override) {
  const int bound = bound_override > 0 ? bound_override : 2 * ctx.pres.graph.edge_count();
  StringWord start = canonical(m);
  StringWord cur = start;
  std::vector<long> dims;
  for (int k = 1; k <= bound; ++k) {
    cur = omega(ctx, cur);
    dims.push_back(cur.dim());
    if (same_module(cur, start)) return {true, k, false};
  }
  // Diagnostic: a repeating dimension pattern without a word match suggests
  // the bound was too small for this (non-tree) input.
  PeriodicityResult res;
  for (int c = 1; 2 * c <= static_cast<int>(dims.size()); ++c) {
    bool cyclic = true;
    for (size_t k = dims.size() - c; k < dims.size(); ++k)
      if (dims[k] != dims[k - c]) cyclic = false;
    if (cyclic) {
      res.bound_exceeded = true;
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Hooks and cohooks.

namespace {

int start_vertex(const Presentation& p, const StringWord& w) {
  return w.trivial() ? w.base : vertex_at(p, w, 0);
}

int initial_run(const StringWord& w, bool inverse) {
  int run = 0;
  while (run < w.size() && w.letters[run].inverse == inverse) ++run;
  return run;
}

StringWord from_letters_or_trivial(const Presentation& p, const std::vector<Letter>& letters,
                                   int base_if_empty) {
  if (letters.empty()) return trivial_word(base_if_empty);
  return word_from_letters(p, letters);
}

}  // namespace

std::optional<StringWord> hook_at_start(const Presentation& p, const StringWord& w,
                                        int in_arrow) {
  const int v = start_vertex(p, w);
  std::vector<int> candidates;
  for (int b : p.in_arrows[v]) {
    if (in_arrow >= 0 && b != in_arrow) continue;
    if (!w.trivial()) {
      const Letter& c1 = w.letters[0];
      if (!c1.inverse) {
        if (p.cycle_next[b] != c1.arrow) continue;
        if (initial_run(w, false) + 1 > p.cycle_cap[b] - 1) continue;
      } else {
        if (b == c1.arrow) continue;
      }
    }
    candidates.push_back(b);
  }
  if (candidates.empty()) return std::nullopt;
  const int beta = *std::min_element(candidates.begin(), candidates.end());

  std::vector<Letter> letters;
  int gamma1 = -1;
  for (int g : p.out_arrows[p.arrows[beta].src])
    if (g != beta) gamma1 = g;
  if (gamma1 >= 0) {
    std::vector<int> chain;
    int cur = gamma1;
    for (long k = 0; k < p.cycle_cap[gamma1] - 1; ++k) {
      chain.push_back(cur);
      cur = p.cycle_next[cur];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) letters.push_back({*it, true});
  }
  letters.push_back({beta, false});
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return word_from_letters(p, letters);
}

std::optional<StringWord> hook_at_end(const Presentation& p, const StringWord& w,
                                      int in_arrow) {
  auto r = hook_at_start(p, inverse(w), in_arrow);
  if (!r) return std::nullopt;
  return inverse(*r);
}

std::optional<StringWord> cohook_at_start(const Presentation& p, const StringWord& w,
                                          int out_arrow) {
  const int v = start_vertex(p, w);
  std::vector<int> candidates;
  for (int g : p.out_arrows[v]) {
    if (out_arrow >= 0 && g != out_arrow) continue;
    if (!w.trivial()) {
      const Letter& c1 = w.letters[0];
      if (c1.inverse) {
        if (p.cycle_next[c1.arrow] != g) continue;
        if (initial_run(w, true) + 1 > p.cycle_cap[g] - 1) continue;
      } else {
        if (g == c1.arrow) continue;
      }
    }
    candidates.push_back(g);
  }
  if (candidates.empty()) return std::nullopt;
  const int gamma = *std::min_element(candidates.begin(), candidates.end());

  std::vector<Letter> letters;
  int q1 = -1;
  for (int b : p.in_arrows[p.arrows[gamma].tgt])
    if (b != gamma) q1 = b;
  if (q1 >= 0) {
    std::vector<int> chain;  // collected nearest-first, emitted farthest-first
    int cur = q1;
    for (long k = 0; k < p.cycle_cap[q1] - 1; ++k) {
      chain.push_back(cur);
      cur = p.cycle_prev[cur];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) letters.push_back({*it, false});
  }
  letters.push_back({gamma, true});
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return word_from_letters(p, letters);
}

std::optional<StringWord> cohook_at_end(const Presentation& p, const StringWord& w,
                                        int out_arrow) {
  auto r = cohook_at_start(p, inverse(w), out_arrow);
  if (!r) return std::nullopt;
  return inverse(*r);
}

std::optional<StringWord> remove_cohook_at_start(const Presentation& p, const StringWord& w) {
  if (w.trivial()) return std::nullopt;
  const int run = initial_run(w, false);
  if (run >= w.size() || !w.letters[run].inverse) return std::nullopt;
  std::vector<Letter> rest(w.letters.begin() + run + 1, w.letters.end());
  return from_letters_or_trivial(p, rest, vertex_at(p, w, run + 1));
}

std::optional<StringWord> remove_cohook_at_end(const Presentation& p, const StringWord& w) {
  auto r = remove_cohook_at_start(p, inverse(w));
  if (!r) return std::nullopt;
  return inverse(*r);
}

std::optional<StringWord> remove_hook_at_start(const Presentation& p, const StringWord& w) {
  if (w.trivial()) return std::nullopt;
  const int run = initial_run(w, true);
  if (run >= w.size() || w.letters[run].inverse) return std::nullopt;
  std::vector<Letter> rest(w.letters.begin() + run + 1, w.letters.end());
  return from_letters_or_trivial(p, rest, vertex_at(p, w, run + 1));
}

std::optional<StringWord> remove_hook_at_end(const Presentation& p, const StringWord& w) {
  auto r = remove_hook_at_start(p, inverse(w));
  if (!r) return std::nullopt;
  return inverse(*r);
}

namespace {

void push_unique(std::vector<StringWord>& out, const StringWord& w) {
  StringWord c = canonical(w);
  for (const auto& x : out)
    if (same_module(x, c)) return;
  out.push_back(c);
}

}  // namespace

std::vector<StringWord> hooks(const Presentation& p, const StringWord& w) {
  std::vector<StringWord> out;
  if (w.trivial()) {
    for (int b : p.in_arrows[w.base])
      if (auto h = hook_at_start(p, w, b)) push_unique(out, *h);
    return out;
  }
  if (auto h = hook_at_start(p, w)) push_unique(out, *h);
  if (auto h = hook_at_end(p, w)) push_unique(out, *h);
  return out;
}

std::vector<StringWord> cohooks(const Presentation& p, const StringWord& w) {
  std::vector<StringWord> out;
  if (w.trivial()) {
    for (int g : p.out_arrows[w.base])
      if (auto h = cohook_at_start(p, w, g)) push_unique(out, *h);
    return out;
  }
  if (auto h = cohook_at_start(p, w)) push_unique(out, *h);
  if (auto h = cohook_at_end(p, w)) push_unique(out, *h);
  return out;
}

std::vector<StringWord> ar_successors(const Presentation& p, const StringWord& w) {
  std::vector<StringWord> out;
  if (w.trivial()) {
    for (int b : p.in_arrows[w.base])
      if (auto h = hook_at_start(p, w, b)) push_unique(out, *h);
    return out;
  }
  if (auto h = hook_at_start(p, w))
    push_unique(out, *h);
  else if (auto d = remove_cohook_at_start(p, w))
    push_unique(out, *d);
  if (auto h = hook_at_end(p, w))
    push_unique(out, *h);
  else if (auto d = remove_cohook_at_end(p, w))
    push_unique(out, *d);
  return out;
}

std::vector<StringWord> ar_predecessors(const Presentation& p, const StringWord& w) {
  std::vector<StringWord> out;
  if (w.trivial()) {
    for (int g : p.out_arrows[w.base])
      if (auto h = cohook_at_start(p, w, g)) push_unique(out, *h);
    return out;
  }
  if (auto h = cohook_at_start(p, w))
    push_unique(out, *h);
  else if (auto d = remove_hook_at_start(p, w))
    push_unique(out, *d);
  if (auto h = cohook_at_end(p, w))
    push_unique(out, *h);
  else if (auto d = remove_hook_at_end(p, w))
    push_unique(out, *d);
  return out;
}

std::optional<StringWord> sectional_successor(const AlgebraContext& ctx,
                                              const std::optional<StringWord>& prev,
                                              const StringWord& cur) {
  std::vector<StringWord> cands = ar_successors(ctx.pres, cur);
  std::vector<StringWord> keep;
  for (const StringWord& x : cands) {
    if (prev && same_module(x, *prev)) continue;
    if (prev && same_module(omega_pow(ctx, x, 2), *prev)) continue;  // tau(x) = prev
    keep.push_back(x);
  }
  if (keep.empty()) return std::nullopt;
  if (keep.size() > 1)
    throw std::logic_error("sectional continuation is not unique here");
  return keep[0];
}

std::vector<StringWord> diagonal(const AlgebraContext& ctx, const StringWord& start,
                                 int count) {
  std::vector<StringWord> seq;
  if (count <= 0) return seq;
  seq.push_back(canonical(start));
  std::optional<StringWord> prev;
  while (static_cast<int>(seq.size()) < count) {
    auto next = sectional_successor(ctx, prev, seq.back());
    if (!next) break;
    prev = seq.back();
    seq.push_back(*next);
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Boundary modules and tubes.

namespace {

// Branch tail below depth 1: the maximal uniserial submodule along a branch.
StringWord branch_tail_word(const Presentation& p, const std::vector<int>& branch) {
  std::vector<Letter> letters;
  for (size_t k = 1; k < branch.size(); ++k) letters.push_back({branch[k], false});
  if (letters.empty()) throw std::logic_error("branch too short for a tail");
  return canonical(word_from_letters(p, letters));
}

}  // namespace

std::vector<StringWord> boundary_modules(const Presentation& p) {
  std::vector<StringWord> out;
  for (int q = 0; q < p.qcount(); ++q) {
    ProjectiveShape shape = projective_shape(p, q);
    if (shape.branch1.empty()) continue;  // simple projective: no tubes
    if (shape.branch2.empty()) push_unique(out, trivial_word(q));  // uniserial simple
    push_unique(out, branch_tail_word(p, shape.branch1));
    if (!shape.branch2.empty()) push_unique(out, branch_tail_word(p, shape.branch2));
  }
  std::sort(out.begin(), out.end(), [](const StringWord& a, const StringWord& b) {
    if (a.trivial() != b.trivial()) return a.trivial();
    if (a.trivial()) return a.base < b.base;
    return a.letters < b.letters;
  });
  return out;
}

TubeSystem::TubeSystem(const AlgebraContext& ctx) : ctx_(ctx) {
  const Presentation& p = ctx.pres;
  if (growth_class(p.graph) == GrowthClass::Finite)
    throw GrowthClassUnsupported("exceptional tubes need infinite representation type");

  std::vector<StringWord> boundary = boundary_modules(p);

  // Duffield's half-edge correspondence: a uniserial simple pairs with the
  // truncated half-edge of its edge, a branch tail with the half-edge its
  // branch descends from.
  std::map<std::string, std::string> half_edge_of;
  for (int q = 0; q < p.qcount(); ++q) {
    const std::string h1 = p.qvertices[q];
    const std::string h2 = p.graph.pairing.at(h1);
    for (const std::string& h : {h1, h2}) {
      const std::string v = p.graph.attach.at(h);
      if (p.graph.truncated(v)) {
        half_edge_of[format_word(p, trivial_word(q))] = h;
      } else {
        std::vector<int> cycle = p.special_cycle(v, h);
        std::vector<int> power;
        for (long rep = 0; rep < p.graph.multiplicity(v); ++rep)
          power.insert(power.end(), cycle.begin(), cycle.end());
        half_edge_of[format_word(p, branch_tail_word(p, power))] = h;
      }
    }
  }

  // tau-orbits of the boundary set.
  std::set<std::string> unvisited;
  std::map<std::string, StringWord> by_key;
  for (const auto& b : boundary) {
    unvisited.insert(format_word(p, b));
    by_key[format_word(p, b)] = b;
  }
  while (!unvisited.empty()) {
    StringWord start = by_key.at(*unvisited.begin());
    std::vector<StringWord> orbit;
    StringWord cur = start;
    do {
      std::string key = format_word(p, cur);
      if (!unvisited.erase(key))
        throw std::logic_error("tau left the boundary or revisited another orbit");
      orbit.push_back(cur);
      cur = omega_pow(ctx_, cur, 2);
    } while (!same_module(cur, start));
    tubes_.push_back(std::move(orbit));
  }

  // Cross-check against the double-stepped Green walks: same count, same
  // ranks, and each orbit's half-edges form exactly one walk.
  std::vector<GreenWalk> walks = double_stepped_walks(p.graph);
  if (walks.size() != tubes_.size())
    throw std::logic_error("tube count disagrees with double-stepped Green walks");
  std::multiset<size_t> walk_lengths, orbit_lengths;
  for (const auto& w : walks) walk_lengths.insert(w.steps.size());
  for (const auto& t : tubes_) orbit_lengths.insert(t.size());
  if (walk_lengths != orbit_lengths)
    throw std::logic_error("tube ranks disagree with double-stepped Green walk lengths");
  for (const auto& tube : tubes_) {
    std::set<std::string> mapped;
    for (const auto& b : tube) mapped.insert(half_edge_of.at(format_word(p, b)));
    bool found = false;
    for (const auto& w : walks) {
      std::set<std::string> steps(w.steps.begin(), w.steps.end());
      if (steps == mapped) found = true;
    }
    if (!found)
      throw std::logic_error("tau-orbit half-edges do not match a double-stepped Green walk");
  }

  // Canonical tube ids: order by least half-edge of the orbit.
  std::sort(tubes_.begin(), tubes_.end(),
            [&](const std::vector<StringWord>& a, const std::vector<StringWord>& b) {
              auto least = [&](const std::vector<StringWord>& t) {
                std::string m = half_edge_of.at(format_word(p, t[0]));
                for (const auto& x : t) m = std::min(m, half_edge_of.at(format_word(p, x)));
                return m;
              };
              return least(a) < least(b);
            });

  half_edge_of_ = std::move(half_edge_of);
  for (int t = 0; t < static_cast<int>(tubes_.size()); ++t)
    for (const auto& b : tubes_[t]) rays_.push_back({t, {b}});
}

std::vector<StringWord> TubeSystem::all_boundary() const {
  std::vector<StringWord> out;
  for (const auto& t : tubes_) out.insert(out.end(), t.begin(), t.end());
  return out;
}

std::string TubeSystem::boundary_half_edge(const StringWord& b) const {
  return half_edge_of_.at(format_word(ctx_.pres, canonical(b)));
}

void TubeSystem::grow_ray(Ray& ray, long dim_target) {
  const int r = rank(ray.tube_id);
  auto settled = [&]() {
    if (static_cast<int>(ray.modules.size()) < r + 1) return false;
    for (int k = 0; k < r; ++k)
      if (ray.modules[ray.modules.size() - 1 - k].dim() <= dim_target) return false;
    return true;
  };
  long guard = static_cast<long>(r) * (dim_target + 4) + 64;
  while (!settled() && guard-- > 0) {
    std::optional<StringWord> prev;
    if (ray.modules.size() >= 2) prev = ray.modules[ray.modules.size() - 2];
    auto next = sectional_successor(ctx_, prev, ray.modules.back());
    if (!next) throw std::logic_error("tube ray terminated unexpectedly");
    ray.modules.push_back(*next);
  }
  if (guard <= 0) throw std::logic_error("tube ray growth exceeded its guard bound");
}

std::optional<std::pair<int, int>> TubeSystem::locate_in_tube(const StringWord& m) {
  std::lock_guard<std::mutex> lock(mutex_);
  StringWord cm = canonical(m);
  for (Ray& ray : rays_) {
    grow_ray(ray, cm.dim());
    for (int d = 0; d < static_cast<int>(ray.modules.size()); ++d)
      if (same_module(ray.modules[d], cm)) return std::make_pair(ray.tube_id, d);
  }
  return std::nullopt;
}

namespace {

// Start of the classified diagonal: Omega^{-1}(S(t)) when m_{t+1} = 2, and
// M[x_{1,0}] in the second case (i = 1, m_0 = 2, m_1 > 2). In both diagrams
// the non-diagonal successor of the start is Omega^{-1} of the start.
StringWord omega_stable_diagonal_start(const AlgebraContext& ctx, int t) {
  auto si = star_info(ctx.pres);
  if (!si || !si->normal_form)
    throw std::invalid_argument("omega-stable diagonals need a star in normal form");
  if (t < 0 || t > si->i - 1)
    throw PeriodicSimple("S(" + std::to_string(t) + ") is not a non-periodic simple");
  if (si->mult[t + 1] == 2) return omega_inv(ctx, trivial_word(t));
  if (si->i == 1 && t == 0 && si->mult[0] == 2 && si->n >= 1) {
    std::vector<Letter> letters;
    for (int j = 1; j <= si->n; ++j)
      letters.push_back({ctx.pres.arrow_by_name.at("a" + std::to_string(j)), false});
    return canonical(word_from_letters(ctx.pres, letters));  // x_{1,0}
  }
  throw std::invalid_argument("component of S(" + std::to_string(t) +
                              ") is not omega-stable or not covered");
}

void extend_omega_stable_diagonal(const AlgebraContext& ctx, std::vector<StringWord>& seq,
                                  const std::function<bool(const std::vector<StringWord>&)>& done,
                                  long guard) {
  while (!done(seq) && guard-- > 0) {
    std::optional<StringWord> next;
    if (seq.size() == 1) {
      StringWord banned = omega_inv(ctx, seq[0]);
      std::vector<StringWord> keep;
      for (const StringWord& x : ar_successors(ctx.pres, seq[0]))
        if (!same_module(x, banned)) keep.push_back(x);
      if (keep.size() != 1)
        throw std::logic_error("diagonal start has no unique sectional continuation");
      next = keep[0];
    } else {
      next = sectional_successor(ctx, seq[seq.size() - 2], seq.back());
    }
    if (!next) return;
    seq.push_back(*next);
  }
}

}  // namespace

ComponentAddress locate(const AlgebraContext& ctx, TubeSystem& tubes, const StringWord& m) {
  ComponentAddress addr;
  PeriodicityResult per = is_periodic(ctx, m);
  if (per.periodic) {
    auto hit = tubes.locate_in_tube(m);
    if (!hit) throw std::logic_error("periodic module not found in any tube ray");
    addr.kind = ComponentAddress::Kind::ExceptionalTube;
    addr.tube_id = hit->first + 1;
    addr.rank = tubes.rank(hit->first);
    addr.d = hit->second;
    return addr;
  }

  // Probe the classified diagonals of the omega-stable components that
  // contain a non-periodic simple.
  auto si = star_info(ctx.pres);
  if (si && si->normal_form) {
    const int n = si->n;
    const int K = 2 * (n + 2) + 4;
    std::vector<std::pair<int, StringWord>> shifts;  // (k, omega^k(m))
    for (int k = -K; k <= K; ++k) shifts.emplace_back(k, omega_pow(ctx, m, k));
    long target = 0;
    for (const auto& [k, w] : shifts) target = std::max(target, w.dim());
    for (int t = 0; t <= si->i - 1 && t <= n; ++t) {
      bool stable = si->mult[t + 1] == 2 || (si->i == 1 && t == 0 && si->mult[0] == 2);
      if (!stable) continue;
      // Grow until a full window of n+1 entries exceeds the probe dims.
      std::vector<StringWord> diag = {omega_stable_diagonal_start(ctx, t)};
      extend_omega_stable_diagonal(
          ctx, diag,
          [&](const std::vector<StringWord>& s) {
            if (static_cast<int>(s.size()) <= n + 1) return false;
            for (int k = 0; k <= n; ++k)
              if (s[s.size() - 1 - k].dim() <= target) return false;
            return true;
          },
          6L * (K + n + 4));
      for (int j = 0; j < static_cast<int>(diag.size()); ++j)
        for (const auto& [k, w] : shifts)
          if (same_module(w, diag[j])) {
            addr.kind = ComponentAddress::Kind::ZAInfInf;
            addr.simple_t = t;
            addr.diag_index = j;
            addr.omega_shift = -k;  // m = omega^{-k}(diag[j])
            return addr;
          }
    }
  }
  addr.kind = ComponentAddress::Kind::ZAGeneric;
  return addr;
}

std::pair<bool, std::vector<TubeWitnessRow>> omega_swaps_tubes(const AlgebraContext& ctx,
                                                               TubeSystem& tubes) {
  if (!is_tree(ctx.pres.graph) || growth_class(ctx.pres.graph) != GrowthClass::NonPolynomial)
    throw GrowthClassUnsupported(
        "omega_swaps_tubes needs a generalized Brauer tree of non-polynomial growth");
  std::vector<TubeWitnessRow> rows;
  bool ok = true;
  for (const StringWord& b : tubes.all_boundary()) {
    TubeWitnessRow row;
    row.module = b;
    auto here = tubes.locate_in_tube(b);
    row.tube_id = here ? here->first + 1 : 0;
    row.omega_module = omega(ctx, b);
    auto there = tubes.locate_in_tube(row.omega_module);
    row.omega_tube_id = there ? there->first + 1 : 0;
    if (!here || !there || row.tube_id == row.omega_tube_id) ok = false;
    rows.push_back(std::move(row));
  }
  return {ok, rows};
}

bool omega_stable_simple_component(const AlgebraContext& ctx, int t) {
  auto si = star_info(ctx.pres);
  if (!si || !si->normal_form)
    throw std::invalid_argument("omega_stable_simple_component needs a star in normal form");
  if (t < 0 || t > si->n) throw std::invalid_argument("edge index out of range");
  if (t > si->i - 1)
    throw PeriodicSimple("S(" + std::to_string(t) + ") is periodic (exceptional edge)");
  return si->mult[t + 1] == 2 || (si->i == 1 && t == 0 && si->mult[0] == 2);
}


std::vector<StringWord> omega_stable_diagonal(const AlgebraContext& ctx, int t, int count) {
  if (count <= 0) return {};
  std::vector<StringWord> seq = {omega_stable_diagonal_start(ctx, t)};
  extend_omega_stable_diagonal(
      ctx, seq,
      [count](const std::vector<StringWord>& s) { return static_cast<int>(s.size()) >= count; },
      count + 4);
  return seq;
}

ComponentWindow component_window(const AlgebraContext& ctx, TubeSystem& tubes,
                                 const StringWord& start, int radius) {
  const Presentation& p = ctx.pres;
  const size_t max_nodes = static_cast<size_t>(2 * radius + 1) * (2 * radius + 1);
  ComponentWindow win;
  std::map<std::string, int> id_of;
  std::vector<std::pair<StringWord, int>> frontier = {{canonical(start), 0}};
  auto intern = [&](const StringWord& w) {
    std::string key = format_word(p, w);
    auto it = id_of.find(key);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(win.nodes.size());
    id_of[key] = id;
    win.nodes.push_back(w);
    return id;
  };
  intern(canonical(start));
  size_t head = 0;
  while (head < frontier.size() && win.nodes.size() < max_nodes) {
    auto [w, depth] = frontier[head++];
    if (depth >= radius) continue;
    int from = intern(w);
    for (const StringWord& s : ar_successors(p, w)) {
      if (win.nodes.size() >= max_nodes) break;
      int to = intern(s);
      win.arrows.emplace_back(from, to);
      frontier.emplace_back(s, depth + 1);
    }
    for (const StringWord& s : ar_predecessors(p, w)) {
      if (win.nodes.size() >= max_nodes) break;
      int to = intern(s);
      win.arrows.emplace_back(to, from);
      frontier.emplace_back(s, depth + 1);
    }
  }
  std::sort(win.arrows.begin(), win.arrows.end());
  win.arrows.erase(std::unique(win.arrows.begin(), win.arrows.end()), win.arrows.end());

  for (const StringWord& w : win.nodes) {
    ComponentAddress addr = locate(ctx, tubes, w);
    std::string note;
    switch (addr.kind) {
      case ComponentAddress::Kind::ExceptionalTube:
        note = "d=" + std::to_string(addr.d) + " tube=" + std::to_string(addr.tube_id);
        break;
      case ComponentAddress::Kind::ZAInfInf:
        note = "diag " + std::to_string(addr.diag_index) + " of C_S(" +
               p.qvertices[addr.simple_t] + "), shift " + std::to_string(addr.omega_shift);
        break;
      case ComponentAddress::Kind::ZAGeneric:
        note = "dim=" + std::to_string(w.dim());
        break;
    }
    win.annotations.push_back(note);
  }
  return win;
}

std::string to_dot(const Presentation& p, const ComponentWindow& win) {
  std::ostringstream out;
  out << "digraph component {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t i = 0; i < win.nodes.size(); ++i) {
    std::string label = format_word(p, win.nodes[i]);
    if (!win.annotations[i].empty()) label += "\\n" + win.annotations[i];
    out << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : win.arrows) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_component_window(const AlgebraContext& ctx, TubeSystem& tubes,
                                 const StringWord& start, int radius) {
  return to_dot(ctx.pres, component_window(ctx, tubes, start, radius));
}

}  // namespace bga
