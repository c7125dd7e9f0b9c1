#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bga/strmod.hpp"

namespace bga {

struct PeriodicSimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Presentation plus the opposite presentation (mirrored rotations) with the
// arrow correspondence; cosyzygies are syzygies over the opposite algebra
// under the duality that flips every letter.
struct AlgebraContext {
  Presentation pres;
  Presentation op;
  std::vector<int> to_op;    // arrow index -> opposite arrow index
  std::vector<int> from_op;

  explicit AlgebraContext(const BrauerGraph& g);

  StringWord transport_to_op(const StringWord& w) const;
  StringWord transport_from_op(const StringWord& w) const;
};

struct SyzygyResult {
  StringWord input;
  std::vector<int> cover_summands;  // q-vertex per top (resp. socle) position
  StringWord output;
};

// Kernel of the projective cover, read off combinatorially from the branch
// tails of the covering projectives. Throws ProjectiveInput on projective
// input (only the simple projective of an isolated edge qualifies).
SyzygyResult syzygy(const Presentation& p, const StringWord& m);
SyzygyResult syzygy(const AlgebraContext& ctx, const StringWord& m);

// Cokernel of the injective envelope (injectives are projectives here).
SyzygyResult cosyzygy(const AlgebraContext& ctx, const StringWord& m);

StringWord omega(const AlgebraContext& ctx, const StringWord& m);
StringWord omega_inv(const AlgebraContext& ctx, const StringWord& m);
StringWord omega_pow(const AlgebraContext& ctx, const StringWord& m, int k);

// dim Hom - dim (maps factoring through projectives), by exact rank of the
// flattened projective composites.
int stable_hom_dim(const Presentation& p, const StringWord& m, const StringWord& n);
int stable_end_dim(const Presentation& p, const StringWord& m);

// dim Ext^1(M,M) = dim stable Hom(Omega M, M).
int ext1_dim(const AlgebraContext& ctx, const StringWord& m);

struct PeriodicityResult {
  bool periodic = false;
  int period = 0;
  bool bound_exceeded = false;  // diagnostic: dims cycled but words did not
};

// Iterates the syzygy up to the bound (default 2|E|) comparing canonical
// words.
PeriodicityResult is_periodic(const AlgebraContext& ctx, const StringWord& m,
                              int bound_override = 0);

// Butler-Ringel neighbor operations. A hook prepends one arrow and the
// maximal inverse run; a cohook prepends one inverse and the maximal direct
// run. The *_at_end variants act on the other end via inversion.
std::optional<StringWord> hook_at_start(const Presentation& p, const StringWord& w,
                                        int in_arrow = -1);
std::optional<StringWord> hook_at_end(const Presentation& p, const StringWord& w,
                                      int in_arrow = -1);
std::optional<StringWord> cohook_at_start(const Presentation& p, const StringWord& w,
                                          int out_arrow = -1);
std::optional<StringWord> cohook_at_end(const Presentation& p, const StringWord& w,
                                        int out_arrow = -1);
std::optional<StringWord> remove_cohook_at_start(const Presentation& p, const StringWord& w);
std::optional<StringWord> remove_cohook_at_end(const Presentation& p, const StringWord& w);
std::optional<StringWord> remove_hook_at_start(const Presentation& p, const StringWord& w);
std::optional<StringWord> remove_hook_at_end(const Presentation& p, const StringWord& w);

// All hook extensions (both ends; two for trivial words at biserial
// vertices).
std::vector<StringWord> hooks(const Presentation& p, const StringWord& w);
std::vector<StringWord> cohooks(const Presentation& p, const StringWord& w);

// Irreducible-map neighbors in the stable AR quiver: per end, hook added
// when possible, otherwise cohook removed (dually for predecessors).
std::vector<StringWord> ar_successors(const Presentation& p, const StringWord& w);
std::vector<StringWord> ar_predecessors(const Presentation& p, const StringWord& w);

// The unique sectional continuation of prev -> cur (successor X of cur with
// tau(X) != prev). prev may be empty at the start of a ray.
std::optional<StringWord> sectional_successor(const AlgebraContext& ctx,
                                              const std::optional<StringWord>& prev,
                                              const StringWord& cur);

// Sectional path from `start` of the given length; the golden diagonals of
// the tube and component classifications.
std::vector<StringWord> diagonal(const AlgebraContext& ctx, const StringWord& start, int count);

// Uniserial simple modules plus the maximal uniserial submodules of the
// projectives; exactly the boundary vertices of the exceptional tubes.
std::vector<StringWord> boundary_modules(const Presentation& p);

struct ComponentAddress {
  enum class Kind { ExceptionalTube, ZAInfInf, ZAGeneric };
  Kind kind = Kind::ZAGeneric;
  // Exceptional tube data.
  int tube_id = 0;
  int rank = 0;
  int d = -1;
  // ZA-infinity-infinity data, when the module sits on a classified
  // diagonal: component of S(t), diagonal position, and the shift with
  // omega^shift(M) equal to that diagonal representative.
  int simple_t = -1;
  int diag_index = -1;
  int omega_shift = 0;
};

// Exceptional tubes: boundary modules partitioned into tau-orbits, rays
// grown on demand. Construction cross-checks the partition against the
// double-stepped Green walks (count and ranks) and the half-edge pairing.
class TubeSystem {
 public:
  explicit TubeSystem(const AlgebraContext& ctx);

  int tube_count() const { return static_cast<int>(tubes_.size()); }
  int rank(int tube_id) const { return static_cast<int>(tubes_[tube_id].size()); }
  const std::vector<StringWord>& boundary(int tube_id) const { return tubes_[tube_id]; }
  std::vector<StringWord> all_boundary() const;

  // (tube_id, d) when m lies in an exceptional tube.
  std::optional<std::pair<int, int>> locate_in_tube(const StringWord& m);

  // Half-edge attached to a boundary module (Duffield's correspondence).
  std::string boundary_half_edge(const StringWord& b) const;

 private:
  const AlgebraContext& ctx_;
  std::vector<std::vector<StringWord>> tubes_;  // tau-orbits of boundary modules
  std::map<std::string, std::string> half_edge_of_;
  struct Ray {
    int tube_id;
    std::vector<StringWord> modules;
  };
  std::vector<Ray> rays_;
  std::mutex mutex_;

  void grow_ray(Ray& ray, long dim_target);
};

// Full component address; needs the tube system for periodic modules and
// probes the classified diagonals for non-periodic ones.
ComponentAddress locate(const AlgebraContext& ctx, TubeSystem& tubes, const StringWord& m);

struct TubeWitnessRow {
  StringWord module;
  int tube_id = 0;
  StringWord omega_module;
  int omega_tube_id = 0;
};

// Verifies that the syzygy exchanges the two exceptional tubes on every
// boundary module. Requires a generalized Brauer tree of non-polynomial
// growth.
std::pair<bool, std::vector<TubeWitnessRow>> omega_swaps_tubes(const AlgebraContext& ctx,
                                                               TubeSystem& tubes);

// Lemma-style criterion for the component of a non-periodic simple S(t)
// over a star in normal form: m_{t+1} = 2, or i = 1, t = 0, m_0 = 2.
bool omega_stable_simple_component(const AlgebraContext& ctx, int t);

// Diagonal of the omega-stable component containing S(t), starting at
// Omega^{-1}(S(t)); positions 0..count-1.
std::vector<StringWord> omega_stable_diagonal(const AlgebraContext& ctx, int t, int count);

// Window of the stable AR quiver around a module: nodes with location
// annotations and the irreducible-map arrows, at most (2r+1)^2 nodes.
struct ComponentWindow {
  std::vector<StringWord> nodes;
  std::vector<std::string> annotations;
  std::vector<std::pair<int, int>> arrows;
};

ComponentWindow component_window(const AlgebraContext& ctx, TubeSystem& tubes,
                                 const StringWord& start, int radius);
std::string to_dot(const Presentation& p, const ComponentWindow& w);
std::string dot_component_window(const AlgebraContext& ctx, TubeSystem& tubes,
                                 const StringWord& start, int radius);

}  // namespace bga
