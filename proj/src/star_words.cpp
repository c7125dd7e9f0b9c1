#include "bga/star_words.hpp"

namespace bga {

namespace {

StarInfo need_star(const Presentation& p) {
  auto si = star_info(p);
  if (!si || !si->normal_form)
    throw IndexOutOfFamily("string families need a star presentation in normal form");
  return *si;
}

int norm(int v, int modulus) { return ((v % modulus) + modulus) % modulus; }

int arrow_a(const Presentation& p, int j, int modulus) {
  return p.arrow_by_name.at("a" + std::to_string(norm(j, modulus)));
}

int arrow_d(const Presentation& p, int j) {
  auto it = p.arrow_by_name.find("d" + std::to_string(j));
  if (it == p.arrow_by_name.end())
    throw IndexOutOfFamily("no loop d" + std::to_string(j) + " on this star");
  return it->second;
}

void append_x(const Presentation& p, const StarInfo& si, std::vector<Letter>& letters, int l,
              int pfin) {
  const int modulus = si.n + 1;
  int len = norm(pfin - l, modulus);
  int a = arrow_a(p, l, modulus);
  for (int k = 0; k < len; ++k) {
    letters.push_back({a, false});
    a = p.cycle_next[a];
  }
}

void append_mu(const Presentation& p, const StarInfo& si, std::vector<Letter>& letters, int l,
               int r) {
  const int modulus = si.n + 1;
  int a = arrow_a(p, l, modulus);
  for (int k = 0; k < modulus + norm(r - l, modulus); ++k) {
    letters.push_back({a, false});
    a = p.cycle_next[a];
  }
}

}  // namespace

StringWord star_x(const Presentation& p, int l, int pfin) {
  StarInfo si = need_star(p);
  const int modulus = si.n + 1;
  if (norm(l, modulus) == norm(pfin, modulus))
    return trivial_word(p.qindex.at(std::to_string(norm(l, modulus))));
  std::vector<Letter> letters;
  append_x(p, si, letters, l, pfin);
  return word_from_letters(p, letters);
}

StringWord star_y(const Presentation& p, int l) {
  StarInfo si = need_star(p);
  if (l < 0 || l > si.i - 1)
    throw IndexOutOfFamily("y_l needs 0 <= l <= i-1");
  std::vector<Letter> letters;
  for (int j = l; j <= si.i - 1; ++j) {
    int d = arrow_d(p, j);
    for (long k = 0; k < si.mult[j + 1] - 1; ++k) letters.push_back({d, true});
    letters.push_back({arrow_a(p, j, si.n + 1), false});
  }
  return word_from_letters(p, letters);
}

StringWord star_z(const Presentation& p, int j) {
  StarInfo si = need_star(p);
  if (si.i != si.n + 1)
    throw IndexOutOfFamily("z_j needs every vertex of the star to have multiplicity > 1");
  if (j < 0 || j > si.n) throw IndexOutOfFamily("z_j needs 0 <= j <= n");
  std::vector<Letter> letters;
  for (int k = j; k <= si.n - 1; ++k) {
    int d = arrow_d(p, k);
    for (long r = 0; r < si.mult[k + 1] - 1; ++r) letters.push_back({d, true});
    letters.push_back({arrow_a(p, k, si.n + 1), false});
  }
  int dn = arrow_d(p, si.n);
  for (long r = 0; r < si.mult[si.n + 1] - 1; ++r) letters.push_back({dn, true});
  return word_from_letters(p, letters);
}

StringWord star_A(const Presentation& p, int l) {
  StarInfo si = need_star(p);
  std::vector<Letter> letters;
  append_mu(p, si, letters, l, l);
  return word_from_letters(p, letters);
}

StringWord star_mu(const Presentation& p, int l, int r) {
  StarInfo si = need_star(p);
  std::vector<Letter> letters;
  append_mu(p, si, letters, l, r);
  return word_from_letters(p, letters);
}

StringWord star_mu(const Presentation& p, int l) { return star_mu(p, l, l - 1); }

StringWord star_rho(const Presentation& p, int l, int r) {
  StarInfo si = need_star(p);
  if (l < 0 || l > si.i - 1)
    throw IndexOutOfFamily("rho_{l,r} needs 0 <= l <= i-1");
  std::vector<Letter> letters;
  for (int j = l; j >= 1; --j) {
    letters.push_back({arrow_d(p, j), true});
    append_mu(p, si, letters, j, j - 1);
  }
  letters.push_back({arrow_d(p, 0), true});
  append_mu(p, si, letters, 0, r);
  return word_from_letters(p, letters);
}

StringWord star_rho(const Presentation& p, int l) { return star_rho(p, l, l); }

StringWord star_gamma(const Presentation& p, int a, int b) {
  StarInfo si = need_star(p);
  if (a < 0 || b < a || b > si.i - 1)
    throw IndexOutOfFamily("gamma_{a,b} needs 0 <= a <= b <= i-1");
  std::vector<Letter> letters;
  for (int j = a; j <= b; ++j) {
    letters.push_back({arrow_d(p, j), true});
    letters.push_back({arrow_a(p, j, si.n + 1), false});
  }
  return word_from_letters(p, letters);
}

}  // namespace bga
