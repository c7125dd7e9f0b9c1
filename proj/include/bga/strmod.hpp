#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bga/linalg.hpp"
#include "bga/presentation.hpp"

namespace bga {

struct WordError : std::runtime_error {
  enum class Kind { UnknownArrow, NonComposable, InverseCancellation, ZeroSubpath, BadToken };
  Kind kind;
  WordError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct ProjectiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BandModule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Letter {
  int arrow = -1;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// Reduced walk in the quiver whose direct runs are nonzero paths of the
// socle quotient. Paths read left to right; a direct letter descends into
// the radical, an inverse letter ascends out of it. Trivial words carry the
// base q-vertex and a side marker (the marker only disambiguates which end a
// hook attaches to; module identity ignores it).
struct StringWord {
  std::vector<Letter> letters;
  int base = -1;
  int side = +1;

  bool trivial() const { return letters.empty(); }
  int size() const { return static_cast<int>(letters.size()); }
  long dim() const { return size() + 1; }
};

StringWord trivial_word(int qvertex, int side = +1);
StringWord word_from_letters(const Presentation& p, const std::vector<Letter>& letters);

// Throws WordError naming the first violated string condition.
void check_word(const Presentation& p, const StringWord& w);

StringWord inverse(const StringWord& w);
StringWord canonical(const StringWord& w);
bool same_module(const StringWord& a, const StringWord& b);

// q-vertex at position 0..size().
int vertex_at(const Presentation& p, const StringWord& w, int pos);
std::vector<int> vertices_of(const Presentation& p, const StringWord& w);

// Peaks (top of the module) and deeps (socle) as position lists.
std::vector<int> top_positions(const StringWord& w);
std::vector<int> socle_positions(const StringWord& w);

// Text syntax: whitespace-separated arrow names, "-" prefix for a formal
// inverse, "e<qvertex>" for a trivial word.
StringWord parse_word(const Presentation& p, const std::string& text);
std::string format_word(const Presentation& p, const StringWord& w);

// Concatenation (checks the result is a valid string).
StringWord concat(const Presentation& p, const StringWord& a, const StringWord& b);

// True when the word spells a cyclic rotation-closed walk; such a word also
// names a band, which this library never classifies.
bool band_like(const Presentation& p, const StringWord& w);

// ---------------------------------------------------------------------------
// Canonical homomorphisms M[C] ->> M[S] '-> M[D].

struct CanonicalHom {
  int ca = 0, cb = 0;  // S-interval in C (positions)
  int da = 0, db = 0;  // S-interval in D
  bool reversed = false;
};

std::vector<CanonicalHom> canonical_homs(const Presentation& p, const StringWord& C,
                                         const StringWord& D);

// Dense 0/1 matrix of the canonical hom, rows indexed by D-positions and
// columns by C-positions.
IntMat hom_matrix(const StringWord& C, const StringWord& D, const CanonicalHom& h);

// ---------------------------------------------------------------------------
// Exact matrix representations (the independent oracle).

struct MatrixRep {
  std::vector<int> vertex_of_basis;                       // grading
  std::vector<std::vector<std::pair<int, int>>> action;   // per arrow: e_from -> e_to
  int dim() const { return static_cast<int>(vertex_of_basis.size()); }
};

MatrixRep rep_of_word(const Presentation& p, const StringWord& w);

// Representation of P(i) together with the basis bookkeeping needed to embed
// rad P(i) and project onto P(i)/soc P(i).
struct ProjectiveRep {
  int qvertex = -1;
  ProjectiveShape shape;
  MatrixRep rep;
  int top = 0;
  int socle = 0;
  // rad P(i) and P(i)/soc as string words over the socle quotient, with the
  // position -> P-basis correspondences. Empty words with rad_defined=false
  // for a simple projective.
  bool rad_defined = false;
  StringWord rad_word;
  std::vector<int> rad_to_basis;
  StringWord quot_word;
  std::vector<int> quot_to_basis;
  // rad P(i) -> P(i)/soc: inclusion followed by projection, in the word
  // coordinates above.
  IntMat theta;
};

ProjectiveRep projective_rep(const Presentation& p, int qvertex);

// Checks that every relation of the presentation evaluates to zero on the
// representation; returns the first offending relation description.
std::optional<std::string> check_relations(const Presentation& p, const MatrixRep& rep);

// dim Hom by exact nullspace of the intertwiner system.
int oracle_hom_dim(const Presentation& p, const MatrixRep& M, const MatrixRep& N);
int oracle_hom_dim(const Presentation& p, const StringWord& M, const StringWord& N);

// Residual of the intertwining equations for an explicit matrix F: N x M;
// true when all equations hold exactly.
bool intertwines(const Presentation& p, const MatrixRep& M, const MatrixRep& N, const IntMat& F);

// Canonical homomorphisms M -> rad P(i) (maps into P(i)) and
// P(i)/soc -> M (maps out of P(i)).
struct ProjHomSet {
  std::vector<CanonicalHom> into_rad;   // C = M, D = rad P(i)
  std::vector<CanonicalHom> from_quot;  // C = P(i)/soc, D = M
};

ProjHomSet proj_canonical_homs(const Presentation& p, const StringWord& M, int qvertex);

// All composites M -> P(i) -> N as dense matrices (rows: N-positions).
std::vector<IntMat> projective_composites(const Presentation& p, const StringWord& M,
                                          const StringWord& N);

// Word enumeration up to a letter-count bound, canonical forms, sorted.
std::vector<StringWord> all_words_up_to(const Presentation& p, int max_len);

}  // namespace bga
