#pragma once

#include <string>
#include <vector>

#include "mdrep/matrix.hpp"

namespace mdrep {

// One-line notation, 1-based images: w[k] = w(k+1). Composition (uv)(i) = u(v(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& u, const Perm& v);
Perm perm_inverse(const Perm& w);
Perm transposition(int n, int i, int j);
int perm_length(const Perm& w);
std::string perm_str(const Perm& w);  // cycle notation, "e" for identity

// Index of the pair (i,j), 1 <= i < j <= n, in lexicographic order.
int pair_index(int n, int i, int j);
std::pair<int, int> pair_of(int n, int k);

/// (X, w) in Z^(n choose 2) x| Sigma_n.
struct GroupElement {
  int n = 0;
  std::vector<long> X;  // exponent of x_ij, i<j, lexicographic pairs
  Perm w;

  static GroupElement identity(int n);
  static GroupElement x(int n, int i, int j, long e = 1);  // x_ji = x_ij^-1
  static GroupElement sigma(int n, int i);                  // (1, sigma_i)
  bool is_identity() const;
  long exponent(int i, int j) const;  // x_ij exponent, any order
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.n == b.n && a.X == b.X && a.w == b.w; }
  std::string str() const;
};

// psi_w on exponent vectors, with x_ji = x_ij^-1.
std::vector<long> psi(const Perm& w, const std::vector<long>& X);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Formal letter: kind 's', 'r', 'c' (varsigma) or 'x' (x_ij), with an exponent.
struct Letter {
  char kind;
  int i, j;
  long e;
};
using GenWord = std::vector<Letter>;

GenWord parse_genword(const std::string& text);
std::string genword_str(const GenWord& w);

// phi: MD'_n -> MD_n on normal forms (word over s_i, r_i).
GenWord babeda_to_md(const GroupElement& g);
// phi-hat: words over s, r (and varsigma, x) -> normal forms.
GroupElement babeda_from_md(const GenWord& w, int n);
// Canonical conjugating word for x_ij (lambda_ij scheme).
GenWord x_word(int n, int i, int j);

// Relation words (lhs * rhs^-1) of MD_n.
std::vector<std::pair<std::string, GenWord>> md_relation_words(int n);

// The Z/2 x Z/2 automorphisms on words: s <-> r, and index reversal i -> n-i.
GenWord swap_sr(const GenWord& w);
GenWord reverse_indices(const GenWord& w, int n);

// Image of a word or element under a verified pair at level n.
ExactMatrix evaluate_in_rep(const GenWord& w, const RepPair& pair, int n, bool check = true);
ExactMatrix evaluate_in_rep(const GroupElement& g, const RepPair& pair, int n, bool check = true);

// Determinant by exact elimination.
RatFunc determinant(const ExactMatrix& M);

}  // namespace mdrep
