#include "mdrep/ccwg.hpp"

#include <map>
#include <mutex>
#include <random>

namespace mdrep {

Composition f_of(const Word& w, int N) {
  Composition c(N, 0);
  for (int a : w) {
    if (a < 1 || a > N) throw std::out_of_range("letter out of range");
    ++c[a - 1];
  }
  return c;
}

std::string composition_str(const Composition& c) {
  std::string s;
  for (int a : c) s += (s.empty() ? "" : ",") + std::to_string(a);
  return "(" + s + ")";
}

namespace {

int total(const Composition& c) {
  int s = 0;
  for (int a : c) s += a;
  return s;
}

}  // namespace

Order compare(const Composition& a, const Composition& b) {
  if (a.size() != b.size() || total(a) != total(b)) return Order::incomparable;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? Order::less : Order::greater;
  return Order::equal;
}

Order compare_by_first_instance(const Composition& a, const Composition& b) {
  if (a.size() != b.size() || total(a) != total(b)) return Order::incomparable;
  const int N = static_cast<int>(a.size()), n = total(a);
  std::size_t ia = 0, ib = 0;
  bool fa = false, fb = false;
  for (std::size_t k = 0; k < ipow(N, n) && !(fa && fb); ++k) {
    Composition c = f_of(word_of(k, N, n), N);
    if (!fa && c == a) ia = k, fa = true;
    if (!fb && c == b) ib = k, fb = true;
  }
  return ia < ib ? Order::less : ia > ib ? Order::greater : Order::equal;
}

Word orbit_rep(const Composition& c) {
  Word w;
  for (int letter = static_cast<int>(c.size()); letter >= 1; --letter)
    for (int k = 0; k < c[letter - 1]; ++k) w.push_back(letter);
  return w;
}

std::vector<Composition> compositions(int N, int n) {
  std::vector<Composition> out;
  Composition c(N, 0);
  // Lexicographically decreasing is increasing in the order.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == N - 1) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (int a = left; a >= 0; --a) {
      c[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (N >= 1) rec(0, n);
  return out;
}

GlueMask::GlueMask(int N, int n) : N_(N), n_(n), dim_(ipow(N, n)), pos_(dim_ * dim_) {
  std::vector<Composition> f(dim_);
  for (std::size_t k = 0; k < dim_; ++k) f[k] = f_of(word_of(k, N, n), N);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      Order o = compare(f[r], f[c]);
      pos_[r * dim_ + c] = o == Order::equal ? Position::cc : o == Order::less ? Position::glue : Position::forbidden;
    }
}

const GlueMask& glue_mask(int N, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GlueMask>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, n}];
  if (!slot) slot = std::make_unique<GlueMask>(N, n);
  return *slot;
}

namespace {

const GlueMask& mask_for(const ExactMatrix& M) {
  if (!M.has_shape()) throw std::invalid_argument("matrix has no word shape");
  return glue_mask(M.N(), M.rows_level());
}

}  // namespace

bool is_ccwg(const ExactMatrix& M) {
  if (M.has_shape() && M.rows_level() != M.cols_level()) return M.is_zero();
  const GlueMask& g = mask_for(M);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (g.at(r, c) == Position::forbidden && !M(r, c).is_zero()) return false;
  return true;
}

namespace {

ExactMatrix keep(const ExactMatrix& M, Position p) {
  const GlueMask& g = mask_for(M);
  ExactMatrix out = M;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (g.at(r, c) != p) out(r, c) = RatFunc();
  return out;
}

}  // namespace

ExactMatrix project_K(const ExactMatrix& M) {
  if (!is_ccwg(M)) throw std::invalid_argument("project_K needs a CCwg matrix");
  return keep(M, Position::cc);
}

ExactMatrix project_glue(const ExactMatrix& M) {
  if (!is_ccwg(M)) throw std::invalid_argument("project_glue needs a CCwg matrix");
  return keep(M, Position::glue);
}

ClosureReport check_closure(const ExactMatrix& A, const ExactMatrix& B) {
  if (!is_ccwg(A) || !is_ccwg(B)) throw std::invalid_argument("check_closure inputs must be CCwg");
  ClosureReport r;
  if (A.cols() == B.rows()) {
    ExactMatrix P = A * B;
    r.product_ccwg = is_ccwg(P);
    r.K_multiplicative = project_K(P) == project_K(A) * project_K(B);
  } else {
    r.product_ccwg = r.K_multiplicative = true;
  }
  r.kron_ccwg = is_ccwg(kron(A, B));
  return r;
}

NilpotencyReport glue_nilpotency(int N, int n, std::uint64_t seed, int samples) {
  NilpotencyReport r;
  r.chain_length = static_cast<int>(compositions(N, n).size());
  const GlueMask& g = glue_mask(N, n);
  const std::size_t d = g.size();
  auto glue_matrix = [&](auto&& value) {
    ExactMatrix G = ExactMatrix::words(N, n, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (g.at(i, j) == Position::glue) G(i, j) = value();
    return G;
  };
  ExactMatrix ones = glue_matrix([] { return RatFunc(1); });
  ExactMatrix P = identity_words(N, n);
  for (int k = 1; k < r.chain_length; ++k) P = P * ones;
  r.power_below_nonzero = !P.is_zero();
  r.power_vanishes = (P * ones).is_zero();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  r.samples_vanish = true;
  for (int s = 0; s < samples; ++s) {
    ExactMatrix Q = identity_words(N, n);
    for (int k = 0; k < r.chain_length; ++k) Q = Q * glue_matrix([&] { return RatFunc(dist(rng)); });
    if (!Q.is_zero()) r.samples_vanish = false;
  }
  return r;
}

SplitLemmaReport split_lemma_check(int N, int n, int m, std::size_t bound) {
  const std::size_t total_words = ipow(N, n + m);
  if (total_words > bound) throw std::out_of_range("word count exceeds the enumeration bound");
  SplitLemmaReport r;
  // Every clause depends on a word only through f of its two halves.
  std::map<std::pair<Composition, Composition>, std::size_t> classes;
  for (std::size_t k = 0; k < total_words; ++k) {
    Word w = word_of(k, N, n + m);
    ++classes[{f_of(Word(w.begin(), w.begin() + n), N), f_of(Word(w.begin() + n, w.end()), N)}];
  }
  auto add = [](const Composition& a, const Composition& b) {
    Composition c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
  };
  for (const auto& [v, cv] : classes)
    for (const auto& [w, cw] : classes) {
      r.pairs += cv * cw;
      Order o = compare(add(v.first, v.second), add(w.first, w.second));
      Order h = compare(v.first, w.first), t = compare(v.second, w.second);
      if (o == Order::less) {
        if (!(h == Order::less || t == Order::less)) r.clause_I = false;
      } else if (o == Order::equal) {
        bool both_eq = h == Order::equal && t == Order::equal;
        bool opposite = (h == Order::less && t == Order::greater) || (h == Order::greater && t == Order::less);
        if (!(both_eq || opposite)) r.clause_II = false;
      } else {
        if (!(h == Order::greater || t == Order::greater)) r.clause_III = false;
      }
    }
  return r;
}

std::optional<RepPair> k_pair(const RepPair& pair) {
  if (!is_ccwg(pair.R) || !is_ccwg(pair.S)) return std::nullopt;
  RepPair k = pair;
  k.R = project_K(pair.R);
  k.S = project_K(pair.S);
  k.label = "K(" + pair.label + ")";
  return k;
}

}  // namespace mdrep
