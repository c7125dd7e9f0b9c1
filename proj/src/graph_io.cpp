#include "bga/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace bga {

namespace {

using nlohmann::json;

// SAX pass that rejects duplicate keys; nlohmann's DOM parser silently keeps
// the last occurrence otherwise.
struct DuplicateKeyChecker : json::json_sax_t {
  std::vector<std::set<std::string>> scopes;
  std::string error;

  bool key(string_t& val) override {
    if (!scopes.empty() && !scopes.back().insert(val).second) {
      error = "duplicate key \"" + val + "\"";
      return false;
    }
    return true;
  }
  bool start_object(std::size_t) override {
    scopes.emplace_back();
    return true;
  }
  bool end_object() override {
    scopes.pop_back();
    return true;
  }
  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t position, const std::string&, const json::exception& ex) override {
    error = "parse error at byte " + std::to_string(position) + ": " + ex.what();
    return false;
  }
};

json parse_checked(const std::string& text) {
  DuplicateKeyChecker checker;
  if (!json::sax_parse(text, &checker)) throw GraphFormatError(checker.error);
  return json::parse(text);
}

BrauerGraph expand_tree_shorthand(const json& t) {
  if (!t.contains("edges") || !t["edges"].is_array())
    throw GraphFormatError("tree shorthand needs an \"edges\" array");
  BrauerGraph g;
  std::map<std::string, long> mult;
  if (t.contains("multiplicities")) {
    for (auto it = t["multiplicities"].begin(); it != t["multiplicities"].end(); ++it)
      mult[it.key()] = it.value().get<long>();
  }
  std::map<std::string, std::vector<std::string>> incident;  // vertex -> half-edges, edge order
  int index = 0;
  for (const auto& e : t["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw GraphFormatError("tree edge must be a pair of vertex ids");
    std::string u = e[0].get<std::string>();
    std::string v = e[1].get<std::string>();
    std::string ha = "e" + std::to_string(index) + "a";
    std::string hb = "e" + std::to_string(index) + "b";
    g.half_edges.push_back(ha);
    g.half_edges.push_back(hb);
    g.attach[ha] = u;
    g.attach[hb] = v;
    g.pairing[ha] = hb;
    g.pairing[hb] = ha;
    incident[u].push_back(ha);
    incident[v].push_back(hb);
    ++index;
  }
  std::set<std::string> vnames;
  for (const auto& [h, v] : g.attach) vnames.insert(v);
  for (const auto& v : vnames) {
    long m = mult.count(v) ? mult[v] : 1;
    g.vertices.push_back({v, m});
  }
  // Optional per-vertex rotation by edge index; default is edge-list order.
  if (t.contains("rotations")) {
    for (auto it = t["rotations"].begin(); it != t["rotations"].end(); ++it) {
      const std::string& v = it.key();
      std::vector<std::string> order;
      std::vector<std::string> pool = incident[v];
      for (const auto& ei : it.value()) {
        int idx = ei.get<int>();
        std::string prefix = "e" + std::to_string(idx);
        auto hit = std::find_if(pool.begin(), pool.end(), [&prefix](const std::string& h) {
          return h.rfind(prefix, 0) == 0 && (h == prefix + "a" || h == prefix + "b");
        });
        if (hit == pool.end())
          throw GraphFormatError("rotation at " + v + " names edge " + std::to_string(idx) +
                                 " not incident to it");
        order.push_back(*hit);
        pool.erase(hit);
      }
      if (!pool.empty())
        throw GraphFormatError("rotation at " + v + " misses some incident edges");
      g.cyclic_orders[v] = order;
    }
  }
  for (const auto& [v, hs] : incident)
    if (!g.cyclic_orders.count(v)) g.cyclic_orders[v] = hs;
  return g;
}

}  // namespace

BrauerGraph read_graph(const std::string& text) {
  json doc = parse_checked(text);
  if (!doc.is_object()) throw GraphFormatError("top level must be an object");
  if (doc.contains("tree")) return expand_tree_shorthand(doc["tree"]);

  for (const char* k : {"vertices", "half_edges", "attach", "pairing", "cyclic_orders"})
    if (!doc.contains(k)) throw GraphFormatError(std::string("missing key \"") + k + "\"");

  BrauerGraph g;
  try {
    for (const auto& v : doc["vertices"])
      g.vertices.push_back({v.at("id").get<std::string>(), v.at("multiplicity").get<long>()});
    for (const auto& h : doc["half_edges"]) g.half_edges.push_back(h.get<std::string>());
    for (auto it = doc["attach"].begin(); it != doc["attach"].end(); ++it)
      g.attach[it.key()] = it.value().get<std::string>();
    for (auto it = doc["pairing"].begin(); it != doc["pairing"].end(); ++it)
      g.pairing[it.key()] = it.value().get<std::string>();
    for (auto it = doc["cyclic_orders"].begin(); it != doc["cyclic_orders"].end(); ++it) {
      std::vector<std::string> order;
      for (const auto& h : it.value()) order.push_back(h.get<std::string>());
      g.cyclic_orders[it.key()] = order;
    }
  } catch (const json::exception& ex) {
    throw GraphFormatError(std::string("malformed graph object: ") + ex.what());
  }
  return g;
}

BrauerGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_graph(ss.str());
}

std::string write_graph(const BrauerGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertices)
    doc["vertices"].push_back({{"id", v.id}, {"multiplicity", v.multiplicity}});
  doc["half_edges"] = g.half_edges;
  doc["attach"] = json::object();
  for (const auto& [h, v] : g.attach) doc["attach"][h] = v;
  doc["pairing"] = json::object();
  for (const auto& [h, p] : g.pairing) doc["pairing"][h] = p;
  doc["cyclic_orders"] = json::object();
  for (const auto& [v, order] : g.cyclic_orders) doc["cyclic_orders"][v] = order;
  return doc.dump(2) + "\n";
}

void write_graph_file(const BrauerGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphFormatError("cannot write " + path);
  out << write_graph(g);
}

}  // namespace bga
