#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bga/ribbon.hpp"

namespace bga {

struct IndexOutOfFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int src = -1;  // q-vertex index
  int tgt = -1;
  std::string graph_vertex;     // provenance vertex
  std::string start_half_edge;  // h with edge(h) = src and edge(sigma h) = tgt
  int position = 0;             // index of start_half_edge in the rotation
};

// One relation of the admissible ideal, stored as arrow-index paths.
struct TypeIRelation {
  std::vector<int> lhs;  // A_{v,i+}^{m(v)}
  std::vector<int> rhs;  // A_{v',i-}^{m(v')}
};
struct TypeIIRelation {
  std::vector<int> path;  // A^{m} followed by the first arrow of A
};
struct TypeIIIRelation {
  int first = -1;
  int second = -1;
};

// Bound quiver presentation of the Brauer graph algebra: quiver vertices are
// the edges, arrows follow the rotations at non-truncated vertices, and the
// relations come in the three standard types. Strings live over the socle
// quotient, where every full special-cycle power A_{v,h}^{m(v)} is zero.
struct Presentation {
  BrauerGraph graph;
  std::vector<std::string> qvertices;  // sorted canonical edge names
  std::vector<Arrow> arrows;
  std::map<std::string, int> qindex;
  std::map<std::string, int> arrow_by_name;

  std::vector<int> cycle_next;  // successor arrow inside the same special cycle
  std::vector<int> cycle_prev;
  std::vector<long> cycle_cap;  // m(v) * val(v): length of the full power

  std::vector<std::vector<int>> out_arrows;  // per q-vertex, <= 2
  std::vector<std::vector<int>> in_arrows;

  std::vector<TypeIRelation> type1;
  std::vector<TypeIIRelation> type2;
  std::vector<TypeIIIRelation> type3;

  std::map<std::string, std::string> metadata;

  int qcount() const { return static_cast<int>(qvertices.size()); }
  int acount() const { return static_cast<int>(arrows.size()); }

  // Special cycle A_{v,h} as an arrow path starting at edge(h).
  std::vector<int> special_cycle(const std::string& vertex, const std::string& half_edge) const;

  // Nonzero path test: all pairs consecutive inside one special cycle, and
  // length at most the full power (algebra) or strictly below it (socle
  // quotient).
  bool nonzero_path(const std::vector<int>& path, bool socle_quotient) const;

  long total_dimension() const;  // sum of dim P(i)
  std::string export_text() const;
};

Presentation present(const BrauerGraph& g);

// Two maximal uniserial branches descending from the top of P(i); branch2
// empty when uniserial, both empty for a simple projective.
struct ProjectiveShape {
  int qvertex = -1;
  std::vector<int> branch1;
  std::vector<int> branch2;
  long dim() const {
    if (branch1.empty() && branch2.empty()) return 1;
    if (branch2.empty()) return static_cast<long>(branch1.size()) + 1;
    return static_cast<long>(branch1.size() + branch2.size());
  }
};

ProjectiveShape projective_shape(const Presentation& p, int qvertex);

// Star detection: graph equals the normal form produced by make_star_any
// (center "z0"-like vertex holding all edges "0".."n" in ascending rotation).
struct StarInfo {
  int n = 0;
  int i = -1;                    // largest index with m[i] > 1; -1 if none
  std::vector<long> mult;        // mult[j] = m(zeta_j), j = 0..n+1
  bool normal_form = false;      // 2 <= m0 <= ... <= mi, rest 1
};

std::optional<StarInfo> star_info(const Presentation& p);

// The standard-Koszul family: line-shaped Brauer graph with end
// multiplicities l and m. The scalar parameter is normalized to 1 and only
// recorded in metadata.
struct KoszulResult {
  BrauerGraph graph;
  Presentation pres;
};

KoszulResult make_koszul(int n, long l, long m, const std::string& lambda = "1");

}  // namespace bga
