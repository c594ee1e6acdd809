#include "mdrep/mdd.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mdrep/presentations.hpp"

namespace mdrep {

Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("permutation rank mismatch");
  Perm r(u.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = u[v[k] - 1];
  return r;
}

Perm perm_inverse(const Perm& w) {
  Perm r(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) r[w[k] - 1] = static_cast<int>(k) + 1;
  return r;
}

Perm transposition(int n, int i, int j) {
  Perm w = perm_identity(n);
  std::swap(w[i - 1], w[j - 1]);
  return w;
}

int perm_length(const Perm& w) {
  int l = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) l += w[a] > w[b];
  return l;
}

std::string perm_str(const Perm& w) {
  std::string s;
  std::vector<char> seen(w.size(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (seen[k] || w[k] == static_cast<int>(k) + 1) continue;
    s += "(";
    std::size_t c = k;
    bool first = true;
    while (!seen[c]) {
      seen[c] = 1;
      s += (first ? "" : " ") + std::to_string(c + 1);
      first = false;
      c = w[c] - 1;
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

int pair_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("pair index out of range");
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

std::pair<int, int> pair_of(int n, int k) {
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pair_index(n, i, j) == k) return {i, j};
  throw std::out_of_range("pair index out of range");
}

GroupElement GroupElement::identity(int n) { return {n, std::vector<long>(n * (n - 1) / 2, 0), perm_identity(n)}; }

GroupElement GroupElement::x(int n, int i, int j, long e) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("x_ij indices out of range");
  GroupElement g = identity(n);
  if (i < j)
    g.X[pair_index(n, i, j)] = e;
  else
    g.X[pair_index(n, j, i)] = -e;
  return g;
}

GroupElement GroupElement::sigma(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("sigma index out of range");
  GroupElement g = identity(n);
  g.w = transposition(n, i, i + 1);
  return g;
}

bool GroupElement::is_identity() const {
  return std::all_of(X.begin(), X.end(), [](long a) { return a == 0; }) && w == perm_identity(n);
}

long GroupElement::exponent(int i, int j) const { return i < j ? X[pair_index(n, i, j)] : -X[pair_index(n, j, i)]; }

std::string GroupElement::str() const {
  std::string s;
  for (int k = 0; k < static_cast<int>(X.size()); ++k) {
    if (X[k] == 0) continue;
    auto [i, j] = pair_of(n, k);
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i) + std::to_string(j);
    if (X[k] != 1) s += "^" + std::to_string(X[k]);
  }
  return "(" + (s.empty() ? std::string("1") : s) + ", " + perm_str(w) + ")";
}

std::vector<long> psi(const Perm& w, const std::vector<long>& X) {
  const int n = static_cast<int>(w.size());
  std::vector<long> Y(X.size(), 0);
  for (int k = 0; k < static_cast<int>(X.size()); ++k) {
    if (X[k] == 0) continue;
    auto [i, j] = pair_of(n, k);
    int a = w[i - 1], b = w[j - 1];
    if (a < b)
      Y[pair_index(n, a, b)] += X[k];
    else
      Y[pair_index(n, b, a)] -= X[k];
  }
  return Y;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.n != h.n) throw std::invalid_argument("rank mismatch in multiply");
  GroupElement r = g;
  std::vector<long> Y = psi(g.w, h.X);
  for (std::size_t k = 0; k < Y.size(); ++k) r.X[k] += Y[k];
  r.w = perm_compose(g.w, h.w);
  return r;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement r = g;
  r.w = perm_inverse(g.w);
  r.X = psi(r.w, g.X);
  for (auto& a : r.X) a = -a;
  return r;
}

GenWord parse_genword(const std::string& text) {
  GenWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::string t = tok;
    long e = 1;
    auto caret = t.find('^');
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        e = std::stol(t.substr(caret + 1), &used);
        if (used != t.size() - caret - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
      t = t.substr(0, caret);
    }
    char kind;
    std::string digits;
    if (t.rfind("sigma", 0) == 0) {
      kind = 'c';
      digits = t.substr(5);
    } else if (!t.empty() && (t[0] == 's' || t[0] == 'r' || t[0] == 'x' || t[0] == 'c')) {
      kind = t[0];
      digits = t.substr(1);
    } else {
      throw std::invalid_argument("unknown generator token '" + tok + "'");
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad index in token '" + tok + "'");
    if (kind == 'x') {
      if (digits.size() != 2) throw std::invalid_argument("x token needs two single-digit indices: '" + tok + "'");
      w.push_back({'x', digits[0] - '0', digits[1] - '0', e});
    } else {
      w.push_back({kind, std::stoi(digits), 0, e});
    }
  }
  return w;
}

std::string genword_str(const GenWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    if (l.kind == 'x')
      s += "x" + std::to_string(l.i) + std::to_string(l.j);
    else
      s += std::string(1, l.kind == 'c' ? 's' : l.kind) + std::to_string(l.i);
    if (l.e != 1) s += "^" + std::to_string(l.e);
  }
  return s;
}

GenWord x_word(int n, int i, int j) {
  if (i > j) {
    // x_ji = x_ij^-1; in MD the generators are involutions, so the inverse word is the reverse.
    GenWord w = x_word(n, j, i);
    std::reverse(w.begin(), w.end());
    return w;
  }
  if (i < 1 || j > n || i == j) throw std::out_of_range("x_ij indices out of range");
  GenWord w;
  for (int k = j - 1; k >= i + 1; --k) w.push_back({'s', k, 0, 1});
  w.push_back({'r', i, 0, 1});
  w.push_back({'s', i, 0, 1});
  for (int k = i + 1; k <= j - 1; ++k) w.push_back({'s', k, 0, 1});
  return w;
}

GenWord babeda_to_md(const GroupElement& g) {
  GenWord out;
  for (int k = 0; k < static_cast<int>(g.X.size()); ++k) {
    long a = g.X[k];
    if (a == 0) continue;
    auto [i, j] = pair_of(g.n, k);
    GenWord xw = a > 0 ? x_word(g.n, i, j) : x_word(g.n, j, i);
    for (long t = 0; t < std::labs(a); ++t) out.insert(out.end(), xw.begin(), xw.end());
  }
  // Reduced word for w from right descents.
  Perm w = g.w;
  GenWord sw;
  while (w != perm_identity(g.n)) {
    for (int i = 1; i < g.n; ++i)
      if (w[i - 1] > w[i]) {
        sw.push_back({'s', i, 0, 1});
        w = perm_compose(w, transposition(g.n, i, i + 1));
        break;
      }
  }
  out.insert(out.end(), sw.rbegin(), sw.rend());
  return out;
}

namespace {

GroupElement letter_element(const Letter& l, int n) {
  switch (l.kind) {
    case 's':
    case 'c':
      return GroupElement::sigma(n, l.i);
    case 'r':
      if (l.i < 1 || l.i >= n) throw std::out_of_range("r index out of range");
      return multiply(GroupElement::x(n, l.i, l.i + 1), GroupElement::sigma(n, l.i));
    case 'x':
      return GroupElement::x(n, l.i, l.j);
    default:
      throw std::invalid_argument("unknown letter");
  }
}

}  // namespace

GroupElement babeda_from_md(const GenWord& w, int n) {
  GroupElement g = GroupElement::identity(n);
  for (const auto& l : w) {
    GroupElement a = letter_element(l, n);
    if (l.e < 0) a = inverse(a);
    for (long t = 0; t < std::labs(l.e); ++t) g = multiply(g, a);
  }
  return g;
}

std::vector<std::pair<std::string, GenWord>> md_relation_words(int n) {
  std::vector<std::pair<std::string, GenWord>> out;
  for (const auto& rel : instantiate(RelationSet::MixedDoubles, n)) {
    GenWord w;
    for (const auto& g : rel.lhs) w.push_back({g.g, g.i, 0, 1});
    for (auto it = rel.rhs.rbegin(); it != rel.rhs.rend(); ++it) w.push_back({it->g, it->i, 0, -1});
    out.emplace_back(rel.id, w);
  }
  return out;
}

GenWord swap_sr(const GenWord& w) {
  GenWord r = w;
  for (auto& l : r) {
    if (l.kind == 's')
      l.kind = 'r';
    else if (l.kind == 'r')
      l.kind = 's';
    else
      throw std::invalid_argument("swap_sr acts on words over s and r only");
  }
  return r;
}

GenWord reverse_indices(const GenWord& w, int n) {
  GenWord r = w;
  for (auto& l : r) {
    if (l.kind == 'x') throw std::invalid_argument("reverse_indices acts on words over s and r only");
    l.i = n - l.i;
  }
  return r;
}

ExactMatrix evaluate_in_rep(const GenWord& w, const RepPair& pair, int n, bool check) {
  if (check && !all_zero(verify(pair, RelationSet::MixedDoubles, n)))
    throw std::invalid_argument("pair does not satisfy the mixed doubles relations at level " + std::to_string(n));
  ExactMatrix Ri[10], Si[10];
  if (n > 10) throw std::out_of_range("level too large");
  ExactMatrix m = identity_words(pair.R.N(), n);
  auto gen = [&](char k, int i) -> const ExactMatrix& {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    ExactMatrix& slot = k == 'r' ? Ri[i] : Si[i];
    if (slot.rows() == 0) slot = embed_at(k == 'r' ? pair.R : pair.S, i, n);
    return slot;
  };
  for (const auto& l : w) {
    if (l.kind == 'x') {
      GenWord xw = l.e >= 0 ? x_word(n, l.i, l.j) : x_word(n, l.j, l.i);
      for (long t = 0; t < std::labs(l.e); ++t)
        for (const auto& y : xw) m = m * gen(y.kind, y.i);
      continue;
    }
    char k = l.kind == 'c' ? 's' : l.kind;
    // Generators are involutions in every verified representation.
    if (std::labs(l.e) % 2 == 1) m = m * gen(k, l.i);
  }
  return m;
}

ExactMatrix evaluate_in_rep(const GroupElement& g, const RepPair& pair, int n, bool check) {
  if (g.n != n) throw std::invalid_argument("rank mismatch");
  return evaluate_in_rep(babeda_to_md(g), pair, n, check);
}

RatFunc determinant(const ExactMatrix& M0) {
  if (!M0.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  ExactMatrix M = M0;
  const std::size_t n = M.rows();
  RatFunc det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M(p, c).is_zero()) ++p;
    if (p == n) return RatFunc();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
      det = -det;
    }
    det *= M(c, c);
    RatFunc inv = M(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M(i, c).is_zero()) continue;
      RatFunc f = M(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!M(c, j).is_zero()) M(i, j) -= f * M(c, j);
    }
  }
  return det;
}

}  // namespace mdrep
