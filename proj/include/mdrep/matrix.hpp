#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdrep/scalar.hpp"

namespace mdrep {

// A pivot decision depends on a polynomial not covered by the constraints.
class branch_ambiguity : public std::runtime_error {
 public:
  branch_ambiguity(const std::string& poly)
      : std::runtime_error("pivot depends on " + poly + " (split the variety on it)"), poly_(poly) {}
  const std::string& polynomial() const { return poly_; }

 private:
  std::string poly_;
};

class unsupported_spectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Words over {1..N}; flat index k of a length-n word is revlex (first letter fastest).
using Word = std::vector<int>;
Word word_of(std::size_t k, int N, int n);
std::size_t index_of(const Word& w, int N);
std::string word_str(const Word& w);
Word parse_word(const std::string& s);
std::size_t ipow(std::size_t b, int e);

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  // Word-indexed square or rectangular matrix over alphabet N.
  static Mat words(int N, int rows_level, int cols_level) {
    Mat m(ipow(N, rows_level), ipow(N, cols_level));
    m.set_shape(N, rows_level, cols_level);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const { return a_; }

  int N() const { return N_; }
  int rows_level() const { return rl_; }
  int cols_level() const { return cl_; }
  bool has_shape() const { return N_ > 0; }
  void set_shape(int N, int rl, int cl) {
    if (ipow(N, rl) != r_ || ipow(N, cl) != c_) throw std::invalid_argument("word shape does not match dimensions");
    N_ = N;
    rl_ = rl;
    cl_ = cl;
  }
  const T& at(const Word& w, const Word& v) const { return (*this)(index_of(w, N_), index_of(v, N_)); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return r_ == c_; }

  Mat transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    if (N_) t.set_shape(N_, cl_, rl_);
    return t;
  }

  template <class F>
  auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
    Mat<decltype(f(std::declval<const T&>()))> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!(*this)(i, j).is_zero()) m(i, j) = f((*this)(i, j));
    if (N_) m.set_shape(N_, rl_, cl_);
    return m;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    check_same(x, y);
    Mat m = x;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
      if (!y.a_[k].is_zero()) m.a_[k] += y.a_[k];
    return m;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    check_same(x, y);
    Mat m = x;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
      if (!y.a_[k].is_zero()) m.a_[k] -= y.a_[k];
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_)
      if (!x.is_zero()) x = -x;
    return m;
  }
  friend Mat operator*(const T& s, const Mat& x) {
    Mat m = x;
    for (auto& e : m.a_)
      if (!e.is_zero()) e = s * e;
    return m;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product: inner dimensions differ");
    Mat m(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& xik = x(i, k);
        if (xik.is_zero()) continue;
        bool one = is_one(xik);
        for (std::size_t j = 0; j < y.c_; ++j) {
          const T& ykj = y(k, j);
          if (ykj.is_zero()) continue;
          if (one)
            m(i, j) += ykj;
          else
            m(i, j) += xik * ykj;
        }
      }
    if (x.N_ && y.N_ && x.N_ == y.N_) m.set_shape(x.N_, x.rl_, y.cl_);
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& x : a_) k += !x.is_zero();
    return k;
  }

 private:
  static bool is_one(const T& x) {
    if constexpr (std::is_same_v<T, RatFunc> || std::is_same_v<T, Cyclo>)
      return x.is_one();
    else
      return false;
  }
  static void check_same(const Mat& x, const Mat& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix dimensions differ");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
  int N_ = 0, rl_ = 0, cl_ = 0;
};

using ExactMatrix = Mat<RatFunc>;
using NumMatrix = Mat<Cyclo>;

// Standard (row-major) Kronecker product: the first factor is most significant.
template <class T>
Mat<T> kron_std(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& y = b(k, l);
          if (y.is_zero()) continue;
          m(i * b.rows() + k, j * b.cols() + l) = x.is_one() ? y : (y.is_one() ? x : x * y);
        }
    }
  return m;
}

/// Kronecker product on word-indexed matrices: A reads the leading
/// letters, so with revlex indexing A (x) B is kron_std(B, A).
template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
  if (!a.has_shape() || !b.has_shape() || a.N() != b.N())
    throw std::invalid_argument("kron: both factors must be word-indexed over the same alphabet");
  Mat<T> m = kron_std(b, a);
  m.set_shape(a.N(), a.rows_level() + b.rows_level(), a.cols_level() + b.cols_level());
  return m;
}

/// I^{(x)(i-1)} (x) M (x) I^{(x)(n-i-1)} for M acting on two letters.
template <class T>
Mat<T> embed_at(const Mat<T>& M, int i, int n) {
  if (!M.has_shape() || M.rows_level() != 2 || M.cols_level() != 2)
    throw std::invalid_argument("embed_at: M must act on two letters");
  if (i < 1 || i > n - 1) throw std::out_of_range("embed_at: slot " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  const int N = M.N();
  Mat<T> m = kron_std(kron_std(Mat<T>::identity(ipow(N, n - i - 1)), M), Mat<T>::identity(ipow(N, i - 1)));
  m.set_shape(N, n, n);
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

enum class PivotClass { zero, ok, ambiguous };

struct NumericPivots {
  PivotClass classify(const Cyclo& x) const { return x.is_zero() ? PivotClass::zero : PivotClass::ok; }
  std::size_t cost(const Cyclo& x) const {
    return mpz_sizeinbase(x.a().get_num_mpz_t(), 2) + mpz_sizeinbase(x.a().get_den_mpz_t(), 2) + (x.is_rational() ? 0 : 64);
  }
  std::string describe(const Cyclo& x) const { return x.str(); }
};

struct SymbolicPivots {
  const Constraints* cs = nullptr;
  PivotClass classify(const RatFunc& x) const {
    if (x.is_zero()) return PivotClass::zero;
    if (x.num().is_constant()) return PivotClass::ok;
    if (cs && cs->allows(x.num())) return PivotClass::ok;
    return PivotClass::ambiguous;
  }
  std::size_t cost(const RatFunc& x) const {
    return 8 * (x.num().size() + x.den().size() - 1) + std::max(0, x.num().total_degree()) + std::max(0, x.den().total_degree());
  }
  std::string describe(const RatFunc& x) const { return x.num().str(); }
};

// Accepts any nonzero pivot: results hold for generic parameter values.
struct GenericPivots {
  PivotClass classify(const RatFunc& x) const { return x.is_zero() ? PivotClass::zero : PivotClass::ok; }
  std::size_t cost(const RatFunc& x) const {
    return 8 * (x.num().size() + x.den().size() - 1) + std::max(0, x.num().total_degree()) + std::max(0, x.den().total_degree());
  }
  std::string describe(const RatFunc& x) const { return x.num().str(); }
};

template <class T>
struct Rref {
  Mat<T> m;
  std::vector<std::size_t> pivots;  // pivot column of row k
  std::size_t rank() const { return pivots.size(); }
};

template <class T, class P>
Rref<T> rref(Mat<T> A, const P& pol) {
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  std::vector<char> done(n, 0);
  bool progress = true;
  while (progress && r < m) {
    progress = false;
    for (std::size_t c = 0; c < n && r < m; ++c) {
      if (done[c]) continue;
      std::size_t best = m, best_cost = std::numeric_limits<std::size_t>::max();
      bool amb = false;
      for (std::size_t i = r; i < m; ++i) {
        PivotClass k = pol.classify(A(i, c));
        if (k == PivotClass::zero) continue;
        if (k == PivotClass::ambiguous) {
          amb = true;
          continue;
        }
        std::size_t cost = pol.cost(A(i, c));
        if (cost < best_cost) {
          best = i;
          best_cost = cost;
        }
      }
      if (best == m) {
        if (!amb) done[c] = 1;
        continue;
      }
      if (best != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(A(best, j), A(r, j));
      T inv = T(1) / A(r, c);
      std::vector<std::size_t> nz;
      for (std::size_t j = 0; j < n; ++j)
        if (!A(r, j).is_zero()) {
          if (j != c) A(r, j) = A(r, j) * inv;
          nz.push_back(j);
        }
      A(r, c) = T(1);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || A(i, c).is_zero()) continue;
        T f = A(i, c);
        for (std::size_t j : nz) A(i, j) -= f * A(r, j);
      }
      piv.push_back(c);
      done[c] = 1;
      ++r;
      progress = true;
    }
  }
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (!A(i, c).is_zero()) throw branch_ambiguity(pol.describe(A(i, c)));
  return {std::move(A), std::move(piv)};
}

// Right kernel basis, one vector per free column.
template <class T, class P>
std::vector<std::vector<T>> nullspace(const Mat<T>& A, const P& pol) {
  Rref<T> R = rref(A, pol);
  std::vector<char> is_piv(A.cols(), 0);
  for (auto c : R.pivots) is_piv[c] = 1;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(A.cols());
    v[f] = T(1);
    for (std::size_t k = 0; k < R.pivots.size(); ++k)
      if (!R.m(k, f).is_zero()) v[R.pivots[k]] = -R.m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<RatFunc>> nullspace(const ExactMatrix& A, const Constraints& cs = {});
std::vector<std::vector<Cyclo>> nullspace(const NumMatrix& A);
std::size_t rank(const ExactMatrix& A, const Constraints& cs = {});
std::size_t rank(const NumMatrix& A);

template <class T, class P>
std::optional<Mat<T>> inverse(const Mat<T>& A, const P& pol) {
  if (!A.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = A.rows();
  Mat<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = T(1);
  }
  Rref<T> R = rref(aug, pol);
  if (R.rank() < n) return std::nullopt;
  Mat<T> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (R.pivots[k] >= n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv(R.pivots[k], j) = R.m(k, n + j);
  }
  return inv;
}

NumMatrix evaluate(const ExactMatrix& M, const Assignment& at);
ExactMatrix lift(const NumMatrix& M);
ExactMatrix substitute(const ExactMatrix& M, const std::map<std::string, RatFunc>& sub);
std::vector<std::string> variables(const ExactMatrix& M);

// ---------------------------------------------------------------------------
// Univariate polynomials and spectra over the base field.

using UPoly = std::vector<Cyclo>;  // coefficients, constant term first

UPoly upoly_trim(UPoly p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly upoly_derivative(const UPoly& a);
UPoly upoly_monic(const UPoly& a);
Cyclo upoly_eval(const UPoly& p, const Cyclo& x);
NumMatrix upoly_eval(const UPoly& p, const NumMatrix& A);
std::string upoly_str(const UPoly& p, const std::string& var = "x");

UPoly charpoly(const NumMatrix& A);
// Squarefree decomposition: pairs (factor, multiplicity), factors monic and coprime.
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p);
// Rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const UPoly& p);

struct Eigen {
  UPoly factor;  // monic irreducible-over-the-tower factor of degree 1 or 2
  std::optional<Cyclo> value;  // present for linear factors
  int algebraic = 0;
  int geometric = 0;
};

struct EigenData {
  std::vector<Eigen> eigen;
  bool diagonalizable = false;
  UPoly charpoly;
};

EigenData eigen_data(const NumMatrix& A);
// Roots in the scalar tower with multiplicities; throws unsupported_spectrum otherwise.
std::vector<std::pair<Cyclo, int>> upoly_roots(const UPoly& p);
// Characteristic polynomial over the rational-function field, constant term first.
std::vector<RatFunc> charpoly_exact(const ExactMatrix& A);
EigenData eigen_data(const ExactMatrix& A, const Assignment& at);
bool is_diagonalizable(const NumMatrix& A);

}  // namespace mdrep

namespace mdrep {

// Rows listed in flat (revlex) order; entries parsed as rational functions.
ExactMatrix from_rows(int N, const std::vector<std::vector<std::string>>& rows);
ExactMatrix from_rows(int N, const std::vector<std::vector<RatFunc>>& rows);
ExactMatrix identity_words(int N, int level);
std::string to_string(const ExactMatrix& M);

}  // namespace mdrep

namespace mdrep {

// Candidate generator images (R, S) = (F(r), F(s)) with metadata.
struct RepPair {
  ExactMatrix R;
  ExactMatrix S;
  std::vector<std::string> params;
  Constraints constraints;
  std::string label;
};

}  // namespace mdrep
