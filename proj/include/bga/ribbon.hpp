#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bga {

// Errors shared across the library. Domain-level negatives (validation
// violations, failed suite rows) are data, not exceptions; these are for
// misuse of preconditions.
struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadMultiplicityVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GrowthClassUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExceptionalEdgeArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VertexRec {
  std::string id;
  long multiplicity = 1;
};

// Ribbon graph with multiplicities: vertices V, half-edges H, attachment
// s : H -> V, fixed-point-free pairing iota, and one cyclic order per vertex
// (the sigma-orbit through its half-edges). Immutable once built; every
// operation below is a pure function of the value.
struct BrauerGraph {
  std::vector<VertexRec> vertices;
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> attach;
  std::map<std::string, std::string> pairing;
  std::map<std::string, std::vector<std::string>> cyclic_orders;

  const VertexRec* vertex(const std::string& id) const;
  long multiplicity(const std::string& vertex_id) const;
  int valency(const std::string& vertex_id) const;
  bool truncated(const std::string& vertex_id) const;

  // sigma-successor of a half-edge inside its vertex rotation.
  std::string sigma(const std::string& h) const;
  std::string sigma_inv(const std::string& h) const;
  std::string iota(const std::string& h) const;

  // Canonical edge name: lexicographically least of the two half-edge ids.
  std::string edge_of(const std::string& h) const;
  std::vector<std::string> edge_names() const;  // sorted, one per edge
  int edge_count() const { return static_cast<int>(half_edges.size()) / 2; }

  bool is_loop_edge(const std::string& h) const;

  // Same graph with all rotations reversed (sigma -> sigma^{-1}); the
  // Brauer graph of the opposite algebra.
  BrauerGraph mirrored() const;
};

struct Violation {
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const BrauerGraph& g);

// Throws std::invalid_argument with the first violation when invalid.
void require_valid(const BrauerGraph& g);

// Orbit of h -> iota(sigma(h)); rotated so the lexicographically least
// half-edge comes first.
struct GreenWalk {
  std::vector<std::string> steps;
};

std::vector<GreenWalk> green_walks(const BrauerGraph& g);

// Orbits of the square of the step map, same canonical rotation.
std::vector<GreenWalk> double_stepped_walks(const BrauerGraph& g);

struct Face {
  int perimeter = 0;
  // 2p half-edges alternating sigma-successor and pairing steps.
  std::vector<std::string> boundary;
};

std::vector<Face> faces(const BrauerGraph& g);
std::vector<int> face_perimeters(const BrauerGraph& g);  // sorted

bool is_bipartite(const BrauerGraph& g);
bool is_tree(const BrauerGraph& g);

struct DerivedEqReport {
  bool vertices_match = false;
  bool edges_match = false;
  bool faces_match = false;
  bool multiplicities_match = false;
  bool perimeters_match = false;
  bool bipartite_match = false;
  bool equivalent() const {
    return vertices_match && edges_match && faces_match && multiplicities_match &&
           perimeters_match && bipartite_match;
  }
};

// Opper-Zvonareva invariants: counts of vertices/edges/faces, multisets of
// multiplicities and perimeters, bipartiteness.
DerivedEqReport derived_equivalent(const BrauerGraph& a, const BrauerGraph& b);

enum class GrowthClass { Finite, OneDomestic, TwoDomestic, NonPolynomial };

std::string to_string(GrowthClass g);
GrowthClass growth_class(const BrauerGraph& g);

// Star with center zeta0 of multiplicity mbar[0], outer vertices carrying
// mbar[1..] then multiplicity 1, edges named "0".."n" counterclockwise.
// mbar must be non-decreasing with entries >= 2 and size <= n+2.
BrauerGraph make_star(int n, const std::vector<long>& mbar);

// Like make_star but allows an empty multiplicity vector (all-multiplicity-1
// star); used by star_reduce for Brauer trees.
BrauerGraph make_star_any(int n, const std::vector<long>& big_mults);

// Derived-equivalence normal form of a generalized Brauer tree: the star on
// the same multiset of multiplicities. Throws NotATree on cyclic input.
BrauerGraph star_reduce(const BrauerGraph& g);

// Edges admitting an exceptional subtree (multiplicity-1 tree hanging off a
// single connecting vertex).
std::set<std::string> exceptional_edges(const BrauerGraph& g);

// Stable-AR-component criterion for S(i) vs rad P(j): 1-domestic, or an
// even edge path i .. j with the interior multiplicity and uniqueness
// conditions. Exhaustive search over bounded paths.
bool simple_rad_same_component(const BrauerGraph& g, const std::string& edge_i,
                               const std::string& edge_j);

// Seeded random generalized Brauer tree (for verification suites).
BrauerGraph random_tree(int edges, unsigned long seed, long max_multiplicity = 4);

}  // namespace bga
