#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bga/homology.hpp"

namespace bga {

struct HypothesisFailed : std::runtime_error {
  std::string condition;
  int level;
  HypothesisFailed(const std::string& cond, int lvl)
      : std::runtime_error("ladder hypothesis failed at level " + std::to_string(lvl) + ": " +
                           cond),
        condition(cond),
        level(lvl) {}
};

enum class UDRVariant { Base, PowerSeries, TruncatedPoly, Unknown };

// Symbolic universal deformation ring: k, k[[x]], k[[x]]/(x^N), or unknown
// with a reason. No ring arithmetic; N = 1 collapses to Base.
struct UDRClass {
  UDRVariant variant = UDRVariant::Unknown;
  long exponent = 0;  // >= 2 for TruncatedPoly
  std::string reason;

  static UDRClass base() { return {UDRVariant::Base, 0, ""}; }
  static UDRClass power_series() { return {UDRVariant::PowerSeries, 0, ""}; }
  static UDRClass truncated(long n) {
    if (n <= 1) return base();
    return {UDRVariant::TruncatedPoly, n, ""};
  }
  static UDRClass unknown(const std::string& why) { return {UDRVariant::Unknown, 0, why}; }

  bool operator==(const UDRClass& o) const {
    return variant == o.variant && exponent == o.exponent;
  }
  std::string str() const;
};

struct Classification {
  UDRClass ring;
  std::vector<std::pair<std::string, std::string>> trail;  // evidence, in order
};

// Classification pipeline: stable endomorphism gate, tangent-space gate,
// periodic table by distance to the tube boundary, and the omega-stable
// component tables for the classified diagonals.
Classification classify(const AlgebraContext& ctx, TubeSystem& tubes, const StringWord& m);

// Ladder evidence for the quotient-of-k[[x]] computation. Either a finite
// list W_1..W_N or a template generating W_l = prefix . block^l.
struct Ladder {
  StringWord base;  // W_0 = M
  std::vector<StringWord> finite;
  std::optional<std::pair<StringWord, StringWord>> templ;  // (prefix, block)
};

struct LadderVerdict {
  bool verified = false;
  std::string mode;  // "finite" or "template verified to depth k"
  UDRClass implied;
  std::vector<std::string> trail;
};

// Checks the canonical inclusion/projection pair at every level, the kernel
// and iterated-image identifications with M, and (finite case) the final
// Hom/Ext conditions. Maximality of the ladder is not machine-checkable and
// is recorded as assumed.
LadderVerdict verify_ladder(const AlgebraContext& ctx, const StringWord& m, const Ladder& l,
                            int probe_depth = 0);

// Classifies over the star reduction and transports the answer along the
// derived equivalence (invariant-level only; the bimodule transport of the
// module itself is out of scope).
struct TreeClassification {
  Classification result;
  std::string transport_note;
};

TreeClassification classify_tree(const BrauerGraph& tree, const std::string& star_word_text);

}  // namespace bga
