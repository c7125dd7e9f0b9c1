#include "bga/strmod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bga {

StringWord trivial_word(int qvertex, int side) {
  StringWord w;
  w.base = qvertex;
  w.side = side;
  return w;
}

int vertex_at(const Presentation& p, const StringWord& w, int pos) {
  if (w.trivial()) return w.base;
  if (pos == 0) {
    const Letter& l = w.letters[0];
    return l.inverse ? p.arrows[l.arrow].tgt : p.arrows[l.arrow].src;
  }
  const Letter& l = w.letters[pos - 1];
  return l.inverse ? p.arrows[l.arrow].src : p.arrows[l.arrow].tgt;
}

std::vector<int> vertices_of(const Presentation& p, const StringWord& w) {
  std::vector<int> vs;
  for (int pos = 0; pos <= w.size(); ++pos) vs.push_back(vertex_at(p, w, pos));
  return vs;
}

void check_word(const Presentation& p, const StringWord& w) {
  if (w.trivial()) {
    if (w.base < 0 || w.base >= p.qcount())
      throw WordError(WordError::Kind::BadToken, "trivial word needs a valid q-vertex");
    return;
  }
  for (const Letter& l : w.letters)
    if (l.arrow < 0 || l.arrow >= p.acount())
      throw WordError(WordError::Kind::UnknownArrow, "letter uses unknown arrow");

  for (int k = 0; k + 1 < w.size(); ++k) {
    int end_here = w.letters[k].inverse ? p.arrows[w.letters[k].arrow].src
                                        : p.arrows[w.letters[k].arrow].tgt;
    int start_next = w.letters[k + 1].inverse ? p.arrows[w.letters[k + 1].arrow].tgt
                                              : p.arrows[w.letters[k + 1].arrow].src;
    if (end_here != start_next)
      throw WordError(WordError::Kind::NonComposable,
                      "letters " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                          " do not compose");
  }
  for (int k = 0; k + 1 < w.size(); ++k)
    if (w.letters[k].arrow == w.letters[k + 1].arrow &&
        w.letters[k].inverse != w.letters[k + 1].inverse)
      throw WordError(WordError::Kind::InverseCancellation,
                      "letter " + std::to_string(k + 2) + " cancels its predecessor");

  // Runs: direct runs are nonzero paths of the socle quotient; inverse runs
  // are the same read downward from the peak.
  int k = 0;
  while (k < w.size()) {
    int j = k;
    while (j < w.size() && w.letters[j].inverse == w.letters[k].inverse) ++j;
    std::vector<int> path;
    if (!w.letters[k].inverse)
      for (int t = k; t < j; ++t) path.push_back(w.letters[t].arrow);
    else
      for (int t = j - 1; t >= k; --t) path.push_back(w.letters[t].arrow);
    if (!p.nonzero_path(path, true))
      throw WordError(WordError::Kind::ZeroSubpath,
                      "run starting at letter " + std::to_string(k + 1) +
                          " is zero in the socle quotient");
    k = j;
  }
}

StringWord word_from_letters(const Presentation& p, const std::vector<Letter>& letters) {
  StringWord w;
  w.letters = letters;
  if (letters.empty())
    throw WordError(WordError::Kind::BadToken, "empty letter list; use trivial_word");
  check_word(p, w);
  w.base = -1;
  return w;
}

StringWord inverse(const StringWord& w) {
  StringWord r = w;
  if (w.trivial()) {
    r.side = -w.side;
    return r;
  }
  std::reverse(r.letters.begin(), r.letters.end());
  for (Letter& l : r.letters) l.inverse = !l.inverse;
  return r;
}

StringWord canonical(const StringWord& w) {
  if (w.trivial()) {
    StringWord r = w;
    r.side = +1;
    return r;
  }
  StringWord inv = inverse(w);
  return w.letters <= inv.letters ? w : inv;
}

bool same_module(const StringWord& a, const StringWord& b) {
  StringWord ca = canonical(a), cb = canonical(b);
  if (ca.trivial() != cb.trivial()) return false;
  if (ca.trivial()) return ca.base == cb.base;
  return ca.letters == cb.letters;
}

std::vector<int> top_positions(const StringWord& w) {
  std::vector<int> tops;
  for (int pos = 0; pos <= w.size(); ++pos) {
    bool left_ok = pos == 0 || w.letters[pos - 1].inverse;
    bool right_ok = pos == w.size() || !w.letters[pos].inverse;
    if (left_ok && right_ok) tops.push_back(pos);
  }
  return tops;
}

std::vector<int> socle_positions(const StringWord& w) {
  std::vector<int> deeps;
  for (int pos = 0; pos <= w.size(); ++pos) {
    bool left_ok = pos == 0 || !w.letters[pos - 1].inverse;
    bool right_ok = pos == w.size() || w.letters[pos].inverse;
    if (left_ok && right_ok) deeps.push_back(pos);
  }
  return deeps;
}

StringWord parse_word(const Presentation& p, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw WordError(WordError::Kind::BadToken, "empty word");
  if (tokens.size() == 1 && tokens[0].size() > 1 && tokens[0][0] == 'e' &&
      p.qindex.count(tokens[0].substr(1)))
    return trivial_word(p.qindex.at(tokens[0].substr(1)));
  std::vector<Letter> letters;
  for (const std::string& t : tokens) {
    bool inv = t.size() > 1 && t[0] == '-';
    std::string name = inv ? t.substr(1) : t;
    auto it = p.arrow_by_name.find(name);
    if (it == p.arrow_by_name.end())
      throw WordError(WordError::Kind::UnknownArrow, "unknown arrow \"" + name + "\"");
    letters.push_back({it->second, inv});
  }
  return word_from_letters(p, letters);
}

std::string format_word(const Presentation& p, const StringWord& w) {
  if (w.trivial()) return "e" + p.qvertices.at(w.base);
  std::string out;
  for (int k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    if (w.letters[k].inverse) out += '-';
    out += p.arrows[w.letters[k].arrow].name;
  }
  return out;
}

StringWord concat(const Presentation& p, const StringWord& a, const StringWord& b) {
  if (a.trivial() && b.trivial()) {
    if (a.base != b.base)
      throw WordError(WordError::Kind::NonComposable, "trivial words at different vertices");
    return a;
  }
  if (a.trivial()) {
    if (vertex_at(p, b, 0) != a.base)
      throw WordError(WordError::Kind::NonComposable, "trivial prefix vertex mismatch");
    return b;
  }
  if (b.trivial()) {
    if (vertex_at(p, a, a.size()) != b.base)
      throw WordError(WordError::Kind::NonComposable, "trivial suffix vertex mismatch");
    return a;
  }
  std::vector<Letter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return word_from_letters(p, letters);
}

bool band_like(const Presentation& p, const StringWord& w) {
  if (w.trivial()) return false;
  if (vertex_at(p, w, 0) != vertex_at(p, w, w.size())) return false;
  bool has_direct = false, has_inverse = false;
  for (const Letter& l : w.letters) (l.inverse ? has_inverse : has_direct) = true;
  if (!has_direct || !has_inverse) return false;
  std::vector<Letter> doubled = w.letters;
  doubled.insert(doubled.end(), w.letters.begin(), w.letters.end());
  StringWord d;
  d.letters = doubled;
  try {
    check_word(p, d);
  } catch (const WordError&) {
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical homomorphisms.

std::vector<CanonicalHom> canonical_homs(const Presentation& p, const StringWord& C,
                                         const StringWord& D) {
  check_word(p, C);
  check_word(p, D);
  const int mc = C.size(), md = D.size();
  std::vector<int> vc = vertices_of(p, C), vd = vertices_of(p, D);

  std::vector<int> QA, QB, UA, UB;
  for (int a = 0; a <= mc; ++a)
    if (a == 0 || C.letters[a - 1].inverse) QA.push_back(a);
  for (int b = 0; b <= mc; ++b)
    if (b == mc || !C.letters[b].inverse) QB.push_back(b);
  for (int a = 0; a <= md; ++a)
    if (a == 0 || !D.letters[a - 1].inverse) UA.push_back(a);
  for (int b = 0; b <= md; ++b)
    if (b == md || D.letters[b].inverse) UB.push_back(b);

  std::vector<std::pair<int, int>> subs;  // admissible submodule intervals of D
  for (int a : UA)
    for (int b : UB)
      if (a <= b) subs.emplace_back(a, b);

  std::vector<CanonicalHom> homs;
  for (int qa : QA) {
    for (int qb : QB) {
      if (qa > qb) continue;
      const int len = qb - qa;
      for (auto [ua, ub] : subs) {
        if (ub - ua != len) continue;
        if (len == 0) {
          if (vc[qa] == vd[ua]) homs.push_back({qa, qb, ua, ub, false});
          continue;
        }
        bool fwd = true;
        for (int t = 0; t < len && fwd; ++t)
          if (!(C.letters[qa + t] == D.letters[ua + t])) fwd = false;
        if (fwd) {
          homs.push_back({qa, qb, ua, ub, false});
          continue;
        }
        bool rev = true;
        for (int t = 0; t < len && rev; ++t) {
          const Letter& cl = C.letters[qa + t];
          const Letter& dl = D.letters[ub - 1 - t];
          if (cl.arrow != dl.arrow || cl.inverse == dl.inverse) rev = false;
        }
        if (rev) homs.push_back({qa, qb, ua, ub, true});
      }
    }
  }
  return homs;
}

IntMat hom_matrix(const StringWord& C, const StringWord& D, const CanonicalHom& h) {
  IntMat m(D.size() + 1, std::vector<std::int64_t>(C.size() + 1, 0));
  for (int t = 0; t <= h.cb - h.ca; ++t) {
    int row = h.reversed ? h.db - t : h.da + t;
    m[row][h.ca + t] = 1;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Matrix representations.

MatrixRep rep_of_word(const Presentation& p, const StringWord& w) {
  check_word(p, w);
  MatrixRep rep;
  rep.vertex_of_basis = vertices_of(p, w);
  rep.action.assign(p.acount(), {});
  for (int k = 0; k < w.size(); ++k) {
    const Letter& l = w.letters[k];
    if (l.inverse)
      rep.action[l.arrow].push_back({k + 1, k});
    else
      rep.action[l.arrow].push_back({k, k + 1});
  }
  return rep;
}

ProjectiveRep projective_rep(const Presentation& p, int qvertex) {
  ProjectiveRep pr;
  pr.qvertex = qvertex;
  pr.shape = projective_shape(p, qvertex);
  const std::vector<int>& b1 = pr.shape.branch1;
  const std::vector<int>& b2 = pr.shape.branch2;
  const int L1 = static_cast<int>(b1.size());
  const int L2 = static_cast<int>(b2.size());

  MatrixRep& rep = pr.rep;
  rep.action.assign(p.acount(), {});

  if (L1 == 0) {  // simple projective (isolated edge with both ends truncated)
    rep.vertex_of_basis = {qvertex};
    pr.top = pr.socle = 0;
    pr.rad_defined = false;
    return pr;
  }

  if (L2 == 0) {  // uniserial: basis 0..L1, 0 = top, L1 = socle
    pr.top = 0;
    pr.socle = L1;
    rep.vertex_of_basis.resize(L1 + 1);
    rep.vertex_of_basis[0] = qvertex;
    for (int k = 0; k < L1; ++k) {
      rep.vertex_of_basis[k + 1] = p.arrows[b1[k]].tgt;
      rep.action[b1[k]].push_back({k, k + 1});
    }
    pr.rad_defined = true;
    std::vector<Letter> rad_letters, quot_letters;
    pr.rad_to_basis.clear();
    pr.rad_to_basis.push_back(1);
    for (int k = 1; k < L1; ++k) {
      rad_letters.push_back({b1[k], false});
      pr.rad_to_basis.push_back(k + 1);
    }
    pr.rad_word = rad_letters.empty() ? trivial_word(rep.vertex_of_basis[1])
                                      : word_from_letters(p, rad_letters);
    pr.quot_to_basis.clear();
    pr.quot_to_basis.push_back(0);
    for (int k = 0; k + 1 < L1; ++k) {
      quot_letters.push_back({b1[k], false});
      pr.quot_to_basis.push_back(k + 1);
    }
    pr.quot_word =
        quot_letters.empty() ? trivial_word(qvertex) : word_from_letters(p, quot_letters);
  } else {
    // Biserial: 0 = top, 1..L1-1 = branch1, L1..L1+L2-2 = branch2,
    // L1+L2-1 = shared socle.
    const int socle = L1 + L2 - 1;
    pr.top = 0;
    pr.socle = socle;
    rep.vertex_of_basis.assign(L1 + L2, -1);
    rep.vertex_of_basis[0] = qvertex;
    auto pos1 = [&](int depth) { return depth == L1 ? socle : depth; };
    auto pos2 = [&](int depth) { return depth == L2 ? socle : L1 - 1 + depth; };
    for (int k = 0; k < L1; ++k) {
      int from = k == 0 ? 0 : pos1(k);
      rep.vertex_of_basis[pos1(k + 1)] = p.arrows[b1[k]].tgt;
      rep.action[b1[k]].push_back({from, pos1(k + 1)});
    }
    for (int k = 0; k < L2; ++k) {
      int from = k == 0 ? 0 : pos2(k);
      rep.vertex_of_basis[pos2(k + 1)] = p.arrows[b2[k]].tgt;
      rep.action[b2[k]].push_back({from, pos2(k + 1)});
    }
    pr.rad_defined = true;
    // rad P: descend branch1 from depth 1 to socle, ascend branch2 to depth 1.
    std::vector<Letter> rad_letters;
    pr.rad_to_basis.clear();
    pr.rad_to_basis.push_back(pos1(1));
    for (int k = 1; k < L1; ++k) {
      rad_letters.push_back({b1[k], false});
      pr.rad_to_basis.push_back(pos1(k + 1));
    }
    for (int k = L2 - 1; k >= 1; --k) {
      rad_letters.push_back({b2[k], true});
      pr.rad_to_basis.push_back(pos2(k));
    }
    pr.rad_word = word_from_letters(p, rad_letters);
    // P/soc: ascend branch1 from depth L1-1 to the top, descend branch2 to
    // depth L2-1.
    std::vector<Letter> quot_letters;
    pr.quot_to_basis.clear();
    pr.quot_to_basis.push_back(pos1(L1 - 1));
    for (int k = L1 - 2; k >= 0; --k) {
      quot_letters.push_back({b1[k], true});
      pr.quot_to_basis.push_back(k == 0 ? 0 : pos1(k));
    }
    for (int k = 0; k + 1 < L2; ++k) {
      quot_letters.push_back({b2[k], false});
      pr.quot_to_basis.push_back(pos2(k + 1));
    }
    pr.quot_word = quot_letters.empty() ? trivial_word(qvertex)
                                        : word_from_letters(p, quot_letters);
  }

  const int rad_dim = static_cast<int>(pr.rad_to_basis.size());
  const int quot_dim = static_cast<int>(pr.quot_to_basis.size());
  pr.theta.assign(quot_dim, std::vector<std::int64_t>(rad_dim, 0));
  for (int j = 0; j < rad_dim; ++j) {
    int basis = pr.rad_to_basis[j];
    if (basis == pr.socle) continue;
    for (int q = 0; q < quot_dim; ++q)
      if (pr.quot_to_basis[q] == basis) pr.theta[q][j] = 1;
  }
  return pr;
}

namespace {

// Path product as a partial map on basis indices; -1 for "acts as zero".
std::vector<int> path_action(const MatrixRep& rep, const std::vector<int>& path) {
  const int d = rep.dim();
  std::vector<int> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = i;
  for (int a : path) {
    std::vector<int> step(d, -1);
    for (auto [from, to] : rep.action[a]) step[from] = to;
    for (int i = 0; i < d; ++i) cur[i] = cur[i] < 0 ? -1 : step[cur[i]];
  }
  return cur;
}

}  // namespace

std::optional<std::string> check_relations(const Presentation& p, const MatrixRep& rep) {
  for (const auto& r : p.type1) {
    std::vector<int> lhs = path_action(rep, r.lhs), rhs = path_action(rep, r.rhs);
    if (lhs != rhs) return "type I relation violated";
  }
  for (const auto& r : p.type2) {
    for (int v : path_action(rep, r.path))
      if (v >= 0) return "type II relation violated";
  }
  for (const auto& r : p.type3) {
    for (int v : path_action(rep, {r.first, r.second}))
      if (v >= 0) return "type III relation violated";
  }
  return std::nullopt;
}

int oracle_hom_dim(const Presentation& p, const MatrixRep& M, const MatrixRep& N) {
  const int dm = M.dim(), dn = N.dim();
  // Unknowns: graded pairs (n-basis, m-basis).
  std::vector<std::vector<int>> unknown(dn, std::vector<int>(dm, -1));
  int count = 0;
  for (int q = 0; q < dn; ++q)
    for (int s = 0; s < dm; ++s)
      if (N.vertex_of_basis[q] == M.vertex_of_basis[s]) unknown[q][s] = count++;
  if (count == 0) return 0;

  IntMat rows;
  for (int a = 0; a < p.acount(); ++a) {
    std::vector<int> mstep(dm, -1);
    for (auto [from, to] : M.action[a]) mstep[from] = to;
    std::vector<std::vector<int>> n_into(dn);  // q -> all r with r.a = q
    for (auto [from, to] : N.action[a]) n_into[to].push_back(from);
    const int src = p.arrows[a].src, tgt = p.arrows[a].tgt;
    for (int m = 0; m < dm; ++m) {
      if (M.vertex_of_basis[m] != src) continue;
      for (int q = 0; q < dn; ++q) {
        if (N.vertex_of_basis[q] != tgt) continue;
        std::vector<std::int64_t> row(count, 0);
        bool nontrivial = false;
        if (mstep[m] >= 0 && unknown[q][mstep[m]] >= 0) {
          row[unknown[q][mstep[m]]] += 1;
          nontrivial = true;
        }
        for (int r : n_into[q]) {
          if (unknown[r][m] >= 0) {
            row[unknown[r][m]] -= 1;
            nontrivial = true;
          }
        }
        if (nontrivial) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return count;
  return nullity_exact(rows, count);
}

int oracle_hom_dim(const Presentation& p, const StringWord& M, const StringWord& N) {
  return oracle_hom_dim(p, rep_of_word(p, M), rep_of_word(p, N));
}

bool intertwines(const Presentation& p, const MatrixRep& M, const MatrixRep& N, const IntMat& F) {
  const int dm = M.dim(), dn = N.dim();
  for (int a = 0; a < p.acount(); ++a) {
    std::vector<int> mstep(dm, -1), nstep(dn, -1);
    for (auto [from, to] : M.action[a]) mstep[from] = to;
    for (auto [from, to] : N.action[a]) nstep[from] = to;
    for (int m = 0; m < dm; ++m) {
      for (int q = 0; q < dn; ++q) {
        std::int64_t lhs = mstep[m] >= 0 ? F[q][mstep[m]] : 0;  // F(m.a) component q
        std::int64_t rhs = 0;                                   // (F m).a component q
        for (int r = 0; r < dn; ++r)
          if (nstep[r] == q) rhs += F[r][m];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

ProjHomSet proj_canonical_homs(const Presentation& p, const StringWord& M, int qvertex) {
  ProjHomSet set;
  ProjectiveRep pr = projective_rep(p, qvertex);
  if (!pr.rad_defined) return set;
  set.into_rad = canonical_homs(p, M, pr.rad_word);
  set.from_quot = canonical_homs(p, pr.quot_word, M);
  return set;
}

namespace {

IntMat matmul(const IntMat& A, const IntMat& B) {
  const int rows = static_cast<int>(A.size());
  const int inner = rows ? static_cast<int>(A[0].size()) : 0;
  const int cols = B.empty() ? 0 : static_cast<int>(B[0].size());
  IntMat C(rows, std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace

std::vector<IntMat> projective_composites(const Presentation& p, const StringWord& M,
                                          const StringWord& N) {
  std::vector<IntMat> out;
  for (int q = 0; q < p.qcount(); ++q) {
    ProjectiveRep pr = projective_rep(p, q);
    if (!pr.rad_defined) {
      // Simple projective: compose M ->> S(q) '-> N directly.
      StringWord s = trivial_word(q);
      for (const auto& f : canonical_homs(p, M, s))
        for (const auto& g : canonical_homs(p, s, N))
          out.push_back(matmul(hom_matrix(s, N, g), hom_matrix(M, s, f)));
      continue;
    }
    std::vector<IntMat> fs, gs;
    for (const auto& f : canonical_homs(p, M, pr.rad_word))
      fs.push_back(hom_matrix(M, pr.rad_word, f));
    for (const auto& g : canonical_homs(p, pr.quot_word, N))
      gs.push_back(hom_matrix(pr.quot_word, N, g));
    if (fs.empty() || gs.empty()) continue;
    for (const auto& f : fs) {
      IntMat theta_f = matmul(pr.theta, f);
      for (const auto& g : gs) out.push_back(matmul(g, theta_f));
    }
  }
  return out;
}

std::vector<StringWord> all_words_up_to(const Presentation& p, int max_len) {
  std::set<std::vector<Letter>> seen;
  std::vector<StringWord> result;
  for (int q = 0; q < p.qcount(); ++q) result.push_back(trivial_word(q));

  // Grow words on the right end; every oriented spelling is reached, so
  // keeping canonical representatives enumerates each module once.
  struct State {
    std::vector<Letter> letters;
    int end_vertex;
  };
  std::vector<State> stack;
  for (int a = 0; a < p.acount(); ++a) {
    stack.push_back({{{a, false}}, p.arrows[a].tgt});
    stack.push_back({{{a, true}}, p.arrows[a].src});
  }
  while (!stack.empty()) {
    State st = stack.back();
    stack.pop_back();
    StringWord w;
    w.letters = st.letters;
    StringWord c = canonical(w);
    if (seen.insert(c.letters).second) result.push_back(c);
    if (static_cast<int>(st.letters.size()) >= max_len) continue;
    const Letter last = st.letters.back();
    int trailing_run = 0;
    for (int k = static_cast<int>(st.letters.size()) - 1;
         k >= 0 && st.letters[k].inverse == last.inverse; --k)
      ++trailing_run;
    // Direct continuation.
    for (int a : p.out_arrows[st.end_vertex]) {
      if (last.inverse) {
        if (a == last.arrow) continue;  // cancellation
      } else {
        if (p.cycle_next[last.arrow] != a) continue;
        if (trailing_run + 1 > p.cycle_cap[a] - 1) continue;
      }
      State next = st;
      next.letters.push_back({a, false});
      next.end_vertex = p.arrows[a].tgt;
      stack.push_back(std::move(next));
    }
    // Inverse continuation: appended letter descends from the current end.
    for (int a : p.in_arrows[st.end_vertex]) {
      if (!last.inverse) {
        if (a == last.arrow) continue;
      } else {
        if (p.cycle_next[a] != last.arrow) continue;
        if (trailing_run + 1 > p.cycle_cap[a] - 1) continue;
      }
      State next = st;
      next.letters.push_back({a, true});
      next.end_vertex = p.arrows[a].src;
      stack.push_back(std::move(next));
    }
  }
  std::sort(result.begin(), result.end(), [](const StringWord& a, const StringWord& b) {
    if (a.trivial() != b.trivial()) return a.trivial();
    if (a.trivial()) return a.base < b.base;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  });
  return result;
}

}  // namespace bga
