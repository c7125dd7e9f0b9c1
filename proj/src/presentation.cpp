#include "bga/presentation.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace bga {

namespace {

// Star normal form as laid out by make_star_any: half-edges "j" at the
// center and "j'" at leaf j+1, rotation ascending. Matching graphs get the
// alpha/delta naming scheme.
bool star_shape(const BrauerGraph& g, std::string* center_out) {
  int n = g.edge_count() - 1;
  if (n < 0) return false;
  std::set<std::string> expect;
  for (int j = 0; j <= n; ++j) {
    expect.insert(std::to_string(j));
    expect.insert(std::to_string(j) + "'");
  }
  std::set<std::string> have(g.half_edges.begin(), g.half_edges.end());
  if (have != expect) return false;
  std::string center = g.attach.at("0");
  for (int j = 0; j <= n; ++j) {
    if (g.attach.at(std::to_string(j)) != center) return false;
    if (g.pairing.at(std::to_string(j)) != std::to_string(j) + "'") return false;
    if (g.attach.at(std::to_string(j) + "'") == center) return false;
    if (g.valency(g.attach.at(std::to_string(j) + "'")) != 1) return false;
  }
  const auto& rot = g.cyclic_orders.at(center);
  if (static_cast<int>(rot.size()) != n + 1) return false;
  int start = -1;
  for (int k = 0; k <= n; ++k)
    if (rot[k] == "0") start = k;
  if (start < 0) return false;
  for (int k = 0; k <= n; ++k)
    if (rot[(start + k) % (n + 1)] != std::to_string(k)) return false;
  *center_out = center;
  return true;
}

// Koszul line shape: edges "0".."n" in a path, interior vertices of
// multiplicity 1, both end vertices non-truncated.
bool koszul_shape(const BrauerGraph& g) {
  int n = g.edge_count() - 1;
  if (n < 0) return false;
  std::set<std::string> expect;
  for (int j = 0; j <= n; ++j) {
    expect.insert(std::to_string(j));
    expect.insert(std::to_string(j) + "'");
  }
  std::set<std::string> have(g.half_edges.begin(), g.half_edges.end());
  if (have != expect) return false;
  for (int j = 0; j <= n; ++j)
    if (g.pairing.at(std::to_string(j)) != std::to_string(j) + "'") return false;
  // Path: attach(j') == attach(j+1); ends are valency 1 with mult >= 2;
  // interior multiplicity 1.
  for (int j = 0; j < n; ++j)
    if (g.attach.at(std::to_string(j) + "'") != g.attach.at(std::to_string(j + 1))) return false;
  std::string first = g.attach.at("0");
  std::string last = g.attach.at(std::to_string(n) + "'");
  if (g.valency(first) != 1 || g.valency(last) != 1) return false;
  if (g.multiplicity(first) < 2 || g.multiplicity(last) < 2) return false;
  for (int j = 0; j < n; ++j) {
    std::string v = g.attach.at(std::to_string(j + 1));
    if (g.valency(v) != 2 || g.multiplicity(v) != 1) return false;
  }
  return n >= 1;
}

}  // namespace

std::vector<int> Presentation::special_cycle(const std::string& vertex,
                                             const std::string& half_edge) const {
  for (int a = 0; a < acount(); ++a) {
    if (arrows[a].graph_vertex == vertex && arrows[a].start_half_edge == half_edge) {
      std::vector<int> cycle = {a};
      int cur = cycle_next[a];
      while (cur != a) {
        cycle.push_back(cur);
        cur = cycle_next[cur];
      }
      return cycle;
    }
  }
  throw std::invalid_argument("no special cycle at (" + vertex + ", " + half_edge + ")");
}

bool Presentation::nonzero_path(const std::vector<int>& path, bool socle_quotient) const {
  if (path.empty()) return true;
  for (size_t k = 0; k + 1 < path.size(); ++k)
    if (cycle_next[path[k]] != path[k + 1]) return false;
  long cap = cycle_cap[path[0]];
  long limit = socle_quotient ? cap - 1 : cap;
  return static_cast<long>(path.size()) <= limit;
}

long Presentation::total_dimension() const {
  long total = 0;
  for (int q = 0; q < qcount(); ++q) total += projective_shape(*this, q).dim();
  return total;
}

std::string Presentation::export_text() const {
  nlohmann::json doc;
  doc["q_vertices"] = qvertices;
  doc["arrows"] = nlohmann::json::array();
  for (const auto& a : arrows)
    doc["arrows"].push_back({{"name", a.name},
                             {"src", qvertices[a.src]},
                             {"tgt", qvertices[a.tgt]},
                             {"vertex", a.graph_vertex},
                             {"position", a.position}});
  auto names = [this](const std::vector<int>& path) {
    std::vector<std::string> out;
    for (int a : path) out.push_back(arrows[a].name);
    return out;
  };
  doc["special_cycles"] = nlohmann::json::array();
  for (const auto& v : graph.vertices) {
    if (graph.truncated(v.id)) continue;
    for (const auto& h : graph.cyclic_orders.at(v.id))
      doc["special_cycles"].push_back(
          {{"vertex", v.id}, {"half_edge", h}, {"arrows", names(special_cycle(v.id, h))}});
  }
  doc["relations"]["type_I"] = nlohmann::json::array();
  for (const auto& r : type1)
    doc["relations"]["type_I"].push_back({{"lhs", names(r.lhs)}, {"rhs", names(r.rhs)}});
  doc["relations"]["type_II"] = nlohmann::json::array();
  for (const auto& r : type2) doc["relations"]["type_II"].push_back(names(r.path));
  doc["relations"]["type_III"] = nlohmann::json::array();
  for (const auto& r : type3)
    doc["relations"]["type_III"].push_back({arrows[r.first].name, arrows[r.second].name});
  doc["socle_relations"] = nlohmann::json::array();
  for (const auto& v : graph.vertices) {
    if (graph.truncated(v.id)) continue;
    for (const auto& h : graph.cyclic_orders.at(v.id)) {
      std::vector<int> cycle = special_cycle(v.id, h);
      std::vector<int> power;
      for (long rep = 0; rep < graph.multiplicity(v.id); ++rep)
        power.insert(power.end(), cycle.begin(), cycle.end());
      doc["socle_relations"].push_back(names(power));
    }
  }
  return doc.dump(2) + "\n";
}

Presentation present(const BrauerGraph& g) {
  require_valid(g);
  Presentation p;
  p.graph = g;
  p.qvertices = g.edge_names();
  for (int q = 0; q < static_cast<int>(p.qvertices.size()); ++q) p.qindex[p.qvertices[q]] = q;

  std::string center;
  const bool star = star_shape(g, &center);
  const bool koszul = !star && koszul_shape(g);

  std::map<std::pair<std::string, std::string>, int> by_provenance;
  for (const auto& v : g.vertices) {
    if (g.truncated(v.id)) continue;
    const auto& rot = g.cyclic_orders.at(v.id);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
      Arrow a;
      a.graph_vertex = v.id;
      a.start_half_edge = rot[k];
      a.position = k;
      a.src = p.qindex.at(g.edge_of(rot[k]));
      a.tgt = p.qindex.at(g.edge_of(g.sigma(rot[k])));
      if (star) {
        if (v.id == center)
          a.name = "a" + g.edge_of(rot[k]);
        else
          a.name = "d" + g.edge_of(rot[k]);
      } else if (koszul) {
        const std::string edge = g.edge_of(rot[k]);
        if (g.valency(v.id) == 1) {
          a.name = edge == "0" ? "d" : "g";
        } else {
          // Interior vertex between edges j-1 and j carries a_j and b_j.
          const std::string& h = rot[k];
          bool primed = h.back() == '\'';
          int j = std::stoi(primed ? h.substr(0, h.size() - 1) : h);
          a.name = primed ? "a" + std::to_string(j + 1) : "b" + std::to_string(j);
        }
      } else {
        a.name = "v" + v.id + "p" + std::to_string(k);
      }
      by_provenance[{v.id, rot[k]}] = static_cast<int>(p.arrows.size());
      p.arrows.push_back(a);
    }
  }
  for (int a = 0; a < p.acount(); ++a) {
    if (!p.arrow_by_name.emplace(p.arrows[a].name, a).second)
      throw std::logic_error("arrow name collision: " + p.arrows[a].name);
  }

  p.cycle_next.assign(p.acount(), -1);
  p.cycle_prev.assign(p.acount(), -1);
  p.cycle_cap.assign(p.acount(), 0);
  for (int a = 0; a < p.acount(); ++a) {
    const Arrow& ar = p.arrows[a];
    int next = by_provenance.at({ar.graph_vertex, g.sigma(ar.start_half_edge)});
    p.cycle_next[a] = next;
    p.cycle_prev[next] = a;
    p.cycle_cap[a] =
        g.multiplicity(ar.graph_vertex) * static_cast<long>(g.valency(ar.graph_vertex));
  }

  p.out_arrows.assign(p.qcount(), {});
  p.in_arrows.assign(p.qcount(), {});
  for (int a = 0; a < p.acount(); ++a) {
    p.out_arrows[p.arrows[a].src].push_back(a);
    p.in_arrows[p.arrows[a].tgt].push_back(a);
  }

  auto full_power = [&](const std::string& vertex, const std::string& h) {
    std::vector<int> cycle = p.special_cycle(vertex, h);
    std::vector<int> power;
    for (long rep = 0; rep < g.multiplicity(vertex); ++rep)
      power.insert(power.end(), cycle.begin(), cycle.end());
    return power;
  };

  for (const auto& e : p.qvertices) {
    const std::string h1 = e;
    const std::string h2 = g.pairing.at(e);
    bool t1 = g.truncated(g.attach.at(h1));
    bool t2 = g.truncated(g.attach.at(h2));
    if (!t1 && !t2)
      p.type1.push_back({full_power(g.attach.at(h1), h1), full_power(g.attach.at(h2), h2)});
  }
  for (const auto& v : g.vertices) {
    if (g.truncated(v.id)) continue;
    for (const auto& h : g.cyclic_orders.at(v.id)) {
      TypeIIRelation r;
      r.path = full_power(v.id, h);
      r.path.push_back(by_provenance.at({v.id, h}));
      p.type2.push_back(r);
    }
  }
  for (int a = 0; a < p.acount(); ++a)
    for (int b = 0; b < p.acount(); ++b)
      if (p.arrows[a].tgt == p.arrows[b].src && p.cycle_next[a] != b) p.type3.push_back({a, b});

  return p;
}

ProjectiveShape projective_shape(const Presentation& p, int qvertex) {
  const BrauerGraph& g = p.graph;
  const std::string& h1 = p.qvertices.at(qvertex);
  const std::string h2 = g.pairing.at(h1);
  ProjectiveShape shape;
  shape.qvertex = qvertex;
  auto branch = [&](const std::string& h) -> std::vector<int> {
    const std::string v = g.attach.at(h);
    if (g.truncated(v)) return {};
    std::vector<int> cycle = p.special_cycle(v, h);
    std::vector<int> power;
    for (long rep = 0; rep < g.multiplicity(v); ++rep)
      power.insert(power.end(), cycle.begin(), cycle.end());
    return power;
  };
  shape.branch1 = branch(h1);
  shape.branch2 = branch(h2);
  if (shape.branch1.empty() && !shape.branch2.empty()) std::swap(shape.branch1, shape.branch2);
  return shape;
}

std::optional<StarInfo> star_info(const Presentation& p) {
  std::string center;
  if (!star_shape(p.graph, &center)) return std::nullopt;
  StarInfo info;
  info.n = p.graph.edge_count() - 1;
  info.mult.resize(info.n + 2);
  info.mult[0] = p.graph.multiplicity(center);
  for (int j = 0; j <= info.n; ++j)
    info.mult[j + 1] = p.graph.multiplicity(p.graph.attach.at(std::to_string(j) + "'"));
  info.i = -1;
  for (int j = 0; j <= info.n + 1; ++j)
    if (info.mult[j] > 1) info.i = j;
  info.normal_form = info.mult[0] >= 2;
  for (int j = 0; j <= info.n + 1; ++j) {
    bool big = info.mult[j] > 1;
    if (big != (j <= info.i)) info.normal_form = false;
    if (j > 0 && j <= info.i && info.mult[j] < info.mult[j - 1]) info.normal_form = false;
  }
  return info;
}

KoszulResult make_koszul(int n, long l, long m, const std::string& lambda) {
  if (n < 1 || l < 2 || m < 2)
    throw std::invalid_argument("make_koszul requires n >= 1 and l, m >= 2");
  BrauerGraph g;
  for (int j = 0; j <= n + 1; ++j) {
    long mult = j == 0 ? l : (j == n + 1 ? m : 1);
    g.vertices.push_back({"z" + std::to_string(j), mult});
  }
  for (int e = 0; e <= n; ++e) {
    std::string hc = std::to_string(e);
    std::string ho = std::to_string(e) + "'";
    g.half_edges.push_back(hc);
    g.half_edges.push_back(ho);
    g.attach[hc] = "z" + std::to_string(e);
    g.attach[ho] = "z" + std::to_string(e + 1);
    g.pairing[hc] = ho;
    g.pairing[ho] = hc;
  }
  g.cyclic_orders["z0"] = {"0"};
  g.cyclic_orders["z" + std::to_string(n + 1)] = {std::to_string(n) + "'"};
  for (int j = 1; j <= n; ++j)
    g.cyclic_orders["z" + std::to_string(j)] = {std::to_string(j - 1) + "'", std::to_string(j)};

  KoszulResult result;
  result.graph = g;
  result.pres = present(g);
  result.pres.metadata["family"] = "standard_koszul";
  result.pres.metadata["lambda"] = lambda;  // normalized away; recorded only
  result.pres.metadata["l"] = std::to_string(l);
  result.pres.metadata["m"] = std::to_string(m);
  return result;
}

}  // namespace bga
