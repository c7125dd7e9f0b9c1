#include "bga/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace bga {

const VertexRec* BrauerGraph::vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

long BrauerGraph::multiplicity(const std::string& vertex_id) const {
  const VertexRec* v = vertex(vertex_id);
  if (!v) throw std::invalid_argument("unknown vertex " + vertex_id);
  return v->multiplicity;
}

int BrauerGraph::valency(const std::string& vertex_id) const {
  auto it = cyclic_orders.find(vertex_id);
  return it == cyclic_orders.end() ? 0 : static_cast<int>(it->second.size());
}

bool BrauerGraph::truncated(const std::string& vertex_id) const {
  return static_cast<long>(valency(vertex_id)) * multiplicity(vertex_id) == 1;
}

std::string BrauerGraph::sigma(const std::string& h) const {
  const auto& order = cyclic_orders.at(attach.at(h));
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == h) return order[(i + 1) % order.size()];
  throw std::invalid_argument("half-edge " + h + " missing from its rotation");
}

std::string BrauerGraph::sigma_inv(const std::string& h) const {
  const auto& order = cyclic_orders.at(attach.at(h));
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == h) return order[(i + order.size() - 1) % order.size()];
  throw std::invalid_argument("half-edge " + h + " missing from its rotation");
}

std::string BrauerGraph::iota(const std::string& h) const { return pairing.at(h); }

std::string BrauerGraph::edge_of(const std::string& h) const {
  return std::min(h, pairing.at(h));
}

std::vector<std::string> BrauerGraph::edge_names() const {
  std::set<std::string> names;
  for (const auto& h : half_edges) names.insert(edge_of(h));
  return {names.begin(), names.end()};
}

bool BrauerGraph::is_loop_edge(const std::string& h) const {
  return attach.at(h) == attach.at(pairing.at(h));
}

BrauerGraph BrauerGraph::mirrored() const {
  BrauerGraph m = *this;
  for (auto& [v, order] : m.cyclic_orders) std::reverse(order.begin(), order.end());
  return m;
}

ValidationReport validate(const BrauerGraph& g) {
  ValidationReport rep;
  auto complain = [&rep](const std::string& msg) { rep.violations.push_back({msg}); };

  std::set<std::string> vset;
  for (const auto& v : g.vertices) {
    if (!vset.insert(v.id).second) complain("duplicate vertex id " + v.id);
    if (v.multiplicity < 1)
      complain("vertex " + v.id + " has multiplicity " + std::to_string(v.multiplicity) +
               " < 1");
  }
  std::set<std::string> hset;
  for (const auto& h : g.half_edges)
    if (!hset.insert(h).second) complain("duplicate half-edge id " + h);

  for (const auto& h : g.half_edges) {
    auto a = g.attach.find(h);
    if (a == g.attach.end()) {
      complain("half-edge " + h + " has no attachment");
      continue;
    }
    if (!vset.count(a->second))
      complain("half-edge " + h + " attached to unknown vertex " + a->second);
  }
  for (const auto& [h, v] : g.attach)
    if (!hset.count(h)) complain("attach mentions unknown half-edge " + h);

  for (const auto& h : g.half_edges) {
    auto p = g.pairing.find(h);
    if (p == g.pairing.end()) {
      complain("half-edge " + h + " missing from pairing");
      continue;
    }
    if (!hset.count(p->second)) {
      complain("pairing sends " + h + " to unknown half-edge " + p->second);
      continue;
    }
    if (p->second == h) complain("pairing has fixed point " + h);
    auto back = g.pairing.find(p->second);
    if (back == g.pairing.end() || back->second != h)
      complain("pairing is not an involution at " + h);
  }

  for (const auto& v : g.vertices) {
    std::set<std::string> attached;
    for (const auto& h : g.half_edges) {
      auto a = g.attach.find(h);
      if (a != g.attach.end() && a->second == v.id) attached.insert(h);
    }
    auto it = g.cyclic_orders.find(v.id);
    std::set<std::string> order;
    if (it != g.cyclic_orders.end()) {
      for (const auto& h : it->second)
        if (!order.insert(h).second)
          complain("rotation at " + v.id + " repeats half-edge " + h);
    }
    if (order != attached)
      complain("rotation at " + v.id + " is not a permutation of its half-edges");
  }

  if (!rep.ok()) return rep;

  if (g.vertices.empty() || g.half_edges.empty()) {
    complain("graph is empty");
    return rep;
  }

  // Connectivity of the underlying graph.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& h : g.half_edges) {
    const std::string& u = g.attach.at(h);
    const std::string& w = g.attach.at(g.pairing.at(h));
    adj[u].push_back(w);
  }
  std::set<std::string> seen;
  std::vector<std::string> stack = {g.vertices.front().id};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (const auto& w : adj[v]) stack.push_back(w);
  }
  if (seen.size() != g.vertices.size()) complain("graph not connected");
  return rep;
}

void require_valid(const BrauerGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok()) throw std::invalid_argument("invalid Brauer graph: " + rep.violations[0].message);
}

namespace {

// Orbits of a permutation on the half-edge set, each rotated to start at its
// least element, listed by that element.
std::vector<GreenWalk> orbits(const BrauerGraph& g,
                              const std::function<std::string(const std::string&)>& step) {
  std::set<std::string> remaining(g.half_edges.begin(), g.half_edges.end());
  std::vector<GreenWalk> walks;
  while (!remaining.empty()) {
    std::string start = *remaining.begin();
    GreenWalk w;
    std::string h = start;
    do {
      w.steps.push_back(h);
      remaining.erase(h);
      h = step(h);
    } while (h != start);
    walks.push_back(std::move(w));
  }
  std::sort(walks.begin(), walks.end(),
            [](const GreenWalk& a, const GreenWalk& b) { return a.steps[0] < b.steps[0]; });
  return walks;
}

}  // namespace

std::vector<GreenWalk> green_walks(const BrauerGraph& g) {
  return orbits(g, [&g](const std::string& h) { return g.iota(g.sigma(h)); });
}

std::vector<GreenWalk> double_stepped_walks(const BrauerGraph& g) {
  return orbits(g, [&g](const std::string& h) { return g.iota(g.sigma(g.iota(g.sigma(h)))); });
}

std::vector<Face> faces(const BrauerGraph& g) {
  std::vector<Face> fs;
  for (const GreenWalk& w : green_walks(g)) {
    Face f;
    f.perimeter = static_cast<int>(w.steps.size());
    for (const auto& h : w.steps) {
      f.boundary.push_back(g.sigma(h));
      f.boundary.push_back(g.iota(g.sigma(h)));
    }
    fs.push_back(std::move(f));
  }
  return fs;
}

std::vector<int> face_perimeters(const BrauerGraph& g) {
  std::vector<int> ps;
  for (const Face& f : faces(g)) ps.push_back(f.perimeter);
  std::sort(ps.begin(), ps.end());
  return ps;
}

bool is_bipartite(const BrauerGraph& g) {
  std::map<std::string, int> color;
  for (const auto& v : g.vertices) {
    if (color.count(v.id)) continue;
    color[v.id] = 0;
    std::vector<std::string> stack = {v.id};
    while (!stack.empty()) {
      std::string u = stack.back();
      stack.pop_back();
      for (const auto& h : g.half_edges) {
        if (g.attach.at(h) != u) continue;
        std::string w = g.attach.at(g.pairing.at(h));
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (it->second == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const BrauerGraph& g) {
  return validate(g).ok() && g.edge_count() == static_cast<int>(g.vertices.size()) - 1;
}

namespace {

std::multiset<long> multiplicity_multiset(const BrauerGraph& g) {
  std::multiset<long> ms;
  for (const auto& v : g.vertices) ms.insert(v.multiplicity);
  return ms;
}

}  // namespace

DerivedEqReport derived_equivalent(const BrauerGraph& a, const BrauerGraph& b) {
  DerivedEqReport r;
  r.vertices_match = a.vertices.size() == b.vertices.size();
  r.edges_match = a.edge_count() == b.edge_count();
  auto pa = face_perimeters(a), pb = face_perimeters(b);
  r.faces_match = pa.size() == pb.size();
  r.perimeters_match = pa == pb;
  r.multiplicities_match = multiplicity_multiset(a) == multiplicity_multiset(b);
  r.bipartite_match = is_bipartite(a) == is_bipartite(b);
  return r;
}

std::string to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::Finite: return "finite";
    case GrowthClass::OneDomestic: return "one_domestic";
    case GrowthClass::TwoDomestic: return "two_domestic";
    case GrowthClass::NonPolynomial: return "non_polynomial";
  }
  return "?";
}

GrowthClass growth_class(const BrauerGraph& g) {
  const bool tree = is_tree(g);
  int mult2 = 0, mult_big = 0;
  for (const auto& v : g.vertices) {
    if (v.multiplicity == 2) ++mult2;
    if (v.multiplicity > 1) ++mult_big;
  }
  const bool all_one = mult_big == 0;
  // Connected with |E| = |V| means a unique cycle; its parity splits the
  // domestic classes. Loops count as odd cycles, double edges as even.
  const bool unicyclic = g.edge_count() == static_cast<int>(g.vertices.size());
  int cycle_len = 0;
  if (unicyclic) {
    // Peel leaves until only the cycle remains.
    std::map<std::string, int> deg;
    std::map<std::string, std::vector<std::string>> inc;
    std::set<std::string> edges;
    for (const auto& h : g.half_edges) {
      deg[g.attach.at(h)]++;
      inc[g.attach.at(h)].push_back(h);
      edges.insert(g.edge_of(h));
    }
    std::set<std::string> removed_vertices;
    std::set<std::string> removed_edges;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& v : g.vertices) {
        if (removed_vertices.count(v.id)) continue;
        int d = 0;
        std::string last;
        for (const auto& h : inc[v.id])
          if (!removed_edges.count(g.edge_of(h))) {
            ++d;
            last = g.edge_of(h);
          }
        if (d == 1) {
          removed_vertices.insert(v.id);
          removed_edges.insert(last);
          changed = true;
        }
      }
    }
    cycle_len = static_cast<int>(edges.size() - removed_edges.size());
  }

  if (tree && mult_big <= 1) return GrowthClass::Finite;
  if (tree && mult2 == 2 && mult_big == 2) return GrowthClass::OneDomestic;
  if (unicyclic && all_one && cycle_len % 2 == 1) return GrowthClass::OneDomestic;
  if (unicyclic && all_one && cycle_len % 2 == 0) return GrowthClass::TwoDomestic;
  return GrowthClass::NonPolynomial;
}

BrauerGraph make_star_any(int n, const std::vector<long>& big_mults) {
  if (n < 0) throw BadMultiplicityVector("star needs n >= 0");
  if (static_cast<int>(big_mults.size()) > n + 2)
    throw BadMultiplicityVector("multiplicity vector longer than n+2");
  BrauerGraph g;
  long center = big_mults.empty() ? 1 : big_mults[0];
  g.vertices.push_back({"z0", center});
  for (int j = 1; j <= n + 1; ++j) {
    long m = j < static_cast<int>(big_mults.size()) ? big_mults[j] : 1;
    g.vertices.push_back({"z" + std::to_string(j), m});
  }
  std::vector<std::string> center_order;
  for (int e = 0; e <= n; ++e) {
    std::string hc = std::to_string(e);        // center side; also the edge name
    std::string ho = std::to_string(e) + "'";  // outer side
    g.half_edges.push_back(hc);
    g.half_edges.push_back(ho);
    g.attach[hc] = "z0";
    g.attach[ho] = "z" + std::to_string(e + 1);
    g.pairing[hc] = ho;
    g.pairing[ho] = hc;
    center_order.push_back(hc);
    g.cyclic_orders["z" + std::to_string(e + 1)] = {ho};
  }
  g.cyclic_orders["z0"] = center_order;
  return g;
}

BrauerGraph make_star(int n, const std::vector<long>& mbar) {
  if (mbar.empty()) throw BadMultiplicityVector("multiplicity vector must be nonempty");
  if (static_cast<int>(mbar.size()) > n + 2)
    throw BadMultiplicityVector("multiplicity vector longer than n+2");
  for (size_t k = 0; k < mbar.size(); ++k) {
    if (mbar[k] < 2) throw BadMultiplicityVector("multiplicity entries must be >= 2");
    if (k > 0 && mbar[k] < mbar[k - 1])
      throw BadMultiplicityVector("multiplicity vector must be non-decreasing");
  }
  return make_star_any(n, mbar);
}

BrauerGraph star_reduce(const BrauerGraph& g) {
  require_valid(g);
  if (!is_tree(g)) throw NotATree("star_reduce requires an acyclic underlying graph");
  std::vector<long> big;
  for (const auto& v : g.vertices)
    if (v.multiplicity > 1) big.push_back(v.multiplicity);
  std::sort(big.begin(), big.end());
  int n = static_cast<int>(g.vertices.size()) - 2;
  if (n < 0) throw NotATree("star_reduce needs at least one edge");
  return make_star_any(n, big);
}

std::set<std::string> exceptional_edges(const BrauerGraph& g) {
  require_valid(g);
  std::set<std::string> result;

  // Vertices lying on some simple cycle: those not removed by iterated leaf
  // peeling (the 2-core). Tree components hanging off a vertex never meet a
  // cycle except possibly at the connecting vertex itself.
  std::vector<std::string> edges = g.edge_names();
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& e : edges) ends[e] = {g.attach.at(e), g.attach.at(g.pairing.at(e))};

  for (const auto& center : g.vertices) {
    // Components of G minus `center`, via edges not incident to it.
    std::map<std::string, std::string> comp;  // vertex -> representative
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (const auto& v : g.vertices)
      if (v.id != center.id) comp[v.id] = v.id;
    for (const auto& e : edges) {
      auto [u, w] = ends[e];
      if (u == center.id || w == center.id) continue;
      comp[find(u)] = find(w);
    }
    // Per component: attaching edges at center, tree test, multiplicities.
    std::map<std::string, std::vector<std::string>> attach_edges;
    std::map<std::string, int> comp_vertices, comp_edges;
    std::map<std::string, bool> comp_all_mult1;
    for (const auto& v : g.vertices) {
      if (v.id == center.id) continue;
      std::string r = find(v.id);
      comp_vertices[r]++;
      if (!comp_all_mult1.count(r)) comp_all_mult1[r] = true;
      if (v.multiplicity != 1) comp_all_mult1[r] = false;
    }
    for (const auto& e : edges) {
      auto [u, w] = ends[e];
      if (u == center.id && w == center.id) continue;  // loop at center
      if (u == center.id || w == center.id) {
        std::string other = u == center.id ? w : u;
        attach_edges[find(other)].push_back(e);
      } else {
        comp_edges[find(u)]++;
      }
    }
    for (const auto& [rep, att] : attach_edges) {
      if (att.size() != 1) continue;                          // cycle through center
      if (comp_edges[rep] != comp_vertices[rep] - 1) continue;  // not a tree
      if (!comp_all_mult1[rep]) continue;
      // The dangling tree plus center is an exceptional subtree; every edge
      // inside it (including the attaching edge) is exceptional.
      result.insert(att[0]);
      for (const auto& e : edges) {
        auto [u, w] = ends[e];
        if (u != center.id && w != center.id && find(u) == rep) result.insert(e);
      }
    }
  }
  return result;
}

bool simple_rad_same_component(const BrauerGraph& g, const std::string& edge_i,
                               const std::string& edge_j) {
  require_valid(g);
  std::set<std::string> exceptional = exceptional_edges(g);
  if (exceptional.count(edge_i) || exceptional.count(edge_j))
    throw ExceptionalEdgeArgument("simple_rad_same_component requires non-exceptional edges");
  if (growth_class(g) == GrowthClass::OneDomestic) return true;

  std::vector<std::string> edges = g.edge_names();
  std::map<std::string, std::pair<std::string, std::string>> ends;
  std::map<std::string, std::vector<std::string>> non_exc_at;  // vertex -> non-exceptional edges
  for (const auto& e : edges) {
    std::string u = g.attach.at(e), w = g.attach.at(g.pairing.at(e));
    ends[e] = {u, w};
    if (!exceptional.count(e)) {
      non_exc_at[u].push_back(e);
      if (w != u) non_exc_at[w].push_back(e);
      else non_exc_at[u].push_back(e);  // loop counts twice
    }
  }

  // Interior-vertex conditions of the even-path criterion. They depend only
  // on (vertex, incoming edge, outgoing edge), so path existence reduces to
  // reachability over states (vertex, last edge, parity).
  auto interior_ok = [&](const std::string& v, const std::string& ek, const std::string& ek1) {
    if (g.multiplicity(v) != (ek == ek1 ? 2 : 1)) return false;
    const auto& ne = non_exc_at[v];
    std::set<std::string> s(ne.begin(), ne.end());
    std::set<std::string> want = {ek, ek1};
    return s == want;
  };

  if (g.is_loop_edge(edge_i)) return false;
  auto [u0, w0] = ends[edge_i];
  std::set<std::string> seen;
  std::vector<std::tuple<std::string, std::string, int>> stack;
  for (const std::string& start : {u0, w0}) {
    std::string other = start == u0 ? w0 : u0;
    stack.emplace_back(other, edge_i, 1);
  }
  while (!stack.empty()) {
    auto [v, last, parity] = stack.back();
    stack.pop_back();
    if (!seen.insert(v + "|" + last + "|" + std::to_string(parity)).second) continue;
    if (last == edge_j && parity == 0) return true;
    for (const auto& next : non_exc_at[v]) {
      if (g.is_loop_edge(next)) continue;
      if (!interior_ok(v, last, next)) continue;
      auto [u, w] = ends[next];
      std::string nv = u == v ? w : u;
      stack.emplace_back(nv, next, 1 - parity);
    }
  }
  return false;
}

BrauerGraph random_tree(int edges, unsigned long seed, long max_multiplicity) {
  if (edges < 1) throw std::invalid_argument("random_tree needs >= 1 edge");
  std::mt19937_64 rng(seed);
  int n_vertices = edges + 1;
  BrauerGraph g;
  for (int v = 0; v < n_vertices; ++v) {
    long mult = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_multiplicity));
    g.vertices.push_back({"v" + std::to_string(v), mult});
  }
  std::map<std::string, std::vector<std::string>> rot;
  for (int e = 0; e < edges; ++e) {
    // Attach edge e between a random earlier vertex and vertex e+1.
    int parent = static_cast<int>(rng() % static_cast<unsigned long>(e + 1));
    std::string ha = "h" + std::to_string(e) + "a";
    std::string hb = "h" + std::to_string(e) + "b";
    g.half_edges.push_back(ha);
    g.half_edges.push_back(hb);
    g.attach[ha] = "v" + std::to_string(parent);
    g.attach[hb] = "v" + std::to_string(e + 1);
    g.pairing[ha] = hb;
    g.pairing[hb] = ha;
    rot[g.attach[ha]].push_back(ha);
    rot[g.attach[hb]].push_back(hb);
  }
  for (auto& [v, order] : rot) std::shuffle(order.begin(), order.end(), rng);
  g.cyclic_orders = {rot.begin(), rot.end()};
  return g;
}

}  // namespace bga
