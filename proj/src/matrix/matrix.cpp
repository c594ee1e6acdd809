#include "mdrep/matrix.hpp"

#include <set>
#include <sstream>

namespace mdrep {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Word word_of(std::size_t k, int N, int n) {
  Word w(n);
  for (int j = 0; j < n; ++j) {
    w[j] = static_cast<int>(k % N) + 1;
    k /= N;
  }
  return w;
}

std::size_t index_of(const Word& w, int N) {
  std::size_t k = 0;
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j] < 1 || w[j] > N) throw std::out_of_range("letter outside 1..N");
    k = k * N + (w[j] - 1);
  }
  return k;
}

std::string word_str(const Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad word '" + s + "'");
    w.push_back(c - '0');
  }
  return w;
}

std::vector<std::vector<RatFunc>> nullspace(const ExactMatrix& A, const Constraints& cs) {
  return nullspace(A, SymbolicPivots{&cs});
}
std::vector<std::vector<Cyclo>> nullspace(const NumMatrix& A) { return nullspace(A, NumericPivots{}); }
std::size_t rank(const ExactMatrix& A, const Constraints& cs) { return rref(A, SymbolicPivots{&cs}).rank(); }
std::size_t rank(const NumMatrix& A) { return rref(A, NumericPivots{}).rank(); }

NumMatrix evaluate(const ExactMatrix& M, const Assignment& at) {
  return M.map([&](const RatFunc& x) { return x.evaluate(at); });
}

ExactMatrix lift(const NumMatrix& M) {
  return M.map([](const Cyclo& x) { return RatFunc(x); });
}

ExactMatrix substitute(const ExactMatrix& M, const std::map<std::string, RatFunc>& sub) {
  return M.map([&](const RatFunc& x) { return x.substitute(sub); });
}

std::vector<std::string> variables(const ExactMatrix& M) {
  std::set<std::string> s;
  for (const auto& x : M.data())
    for (auto& v : x.variables()) s.insert(v);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------

UPoly upoly_trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return upoly_trim(r);
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return upoly_trim(r);
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a0, const UPoly& b0) {
  UPoly a = upoly_trim(a0), b = upoly_trim(b0);
  if (b.empty()) throw unsatisfiable_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  Cyclo inv = b.back().inv();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Cyclo c = a[k] * inv;
    q[k - b.size() + 1] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  return {upoly_trim(q), upoly_trim(a)};
}

UPoly upoly_monic(const UPoly& a0) {
  UPoly a = upoly_trim(a0);
  if (a.empty()) return a;
  Cyclo inv = a.back().inv();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly upoly_gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = upoly_trim(a0), b = upoly_trim(b0);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a);
}

UPoly upoly_derivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * Cyclo(static_cast<long>(i));
  return upoly_trim(d);
}

Cyclo upoly_eval(const UPoly& p, const Cyclo& x) {
  Cyclo r;
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

NumMatrix upoly_eval(const UPoly& p, const NumMatrix& A) {
  NumMatrix r(A.rows(), A.cols());
  NumMatrix I = NumMatrix::identity(A.rows());
  for (std::size_t k = p.size(); k-- > 0;) r = r * A + p[k] * I;
  return r;
}

std::string upoly_str(const UPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    std::string c = p[k].str();
    bool compound = !p[k].is_rational();
    if (!s.empty()) s += (c[0] == '-' && !compound) ? " - " : " + ";
    if (!s.empty() && c[0] == '-' && !compound) c = c.substr(1);
    if (k == 0) {
      s += compound ? "(" + c + ")" : c;
      continue;
    }
    if (c == "1")
      c.clear();
    else if (c == "-1")
      c = "-";
    else
      c = (compound ? "(" + c + ")" : c) + "*";
    s += c + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

UPoly charpoly(const NumMatrix& A0) {
  if (!A0.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = A0.rows();
  NumMatrix A = A0;
  // Reduce to upper Hessenberg form by similarity.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && A(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(i, j), A(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(A(j, i), A(j, m));
    }
    Cyclo inv = A(m, m - 1).inv();
    for (std::size_t r = m + 1; r < n; ++r) {
      if (A(r, m - 1).is_zero()) continue;
      Cyclo f = A(r, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!A(m, j).is_zero()) A(r, j) -= f * A(m, j);
      for (std::size_t j = 0; j < n; ++j)
        if (!A(j, r).is_zero()) A(j, m) += f * A(j, r);
    }
  }
  // p_k = det of leading k x k block of (xI - A).
  std::vector<UPoly> p(n + 1);
  p[0] = {Cyclo(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = upoly_mul({-A(k - 1, k - 1), Cyclo(1)}, p[k - 1]);
    Cyclo prod(1);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= A(k - i, k - i - 1);
      if (prod.is_zero()) break;
      Cyclo c = prod * A(k - i - 1, k - 1);
      if (c.is_zero()) continue;
      UPoly t = p[k - i - 1];
      for (auto& x : t) x *= c;
      p[k] = upoly_sub(p[k], t);
    }
  }
  return p[n];
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f0) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = upoly_monic(f0);
  if (f.size() <= 1) return out;
  UPoly fp = upoly_derivative(f);
  UPoly a = upoly_gcd(f, fp);
  UPoly b = upoly_divmod(f, a).first;
  UPoly c = upoly_divmod(fp, a).first;
  UPoly d = upoly_sub(c, upoly_derivative(b));
  int i = 1;
  while (b.size() > 1) {
    UPoly g = upoly_gcd(b, d);
    if (g.size() > 1) out.emplace_back(g, i);
    b = upoly_divmod(b, g).first;
    c = upoly_divmod(d, g).first;
    d = upoly_sub(c, upoly_derivative(b));
    ++i;
  }
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> primes;
  std::vector<int> mult;
  for (mpz_class p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    primes.push_back(p);
    mult.push_back(0);
    while (v % p == 0) {
      v /= p;
      ++mult.back();
    }
    if (p > 1000000) throw unsupported_spectrum("coefficient too large to enumerate rational roots");
  }
  if (v > 1) {
    primes.push_back(v);
    mult.push_back(1);
  }
  std::vector<mpz_class> ds{1};
  for (std::size_t k = 0; k < primes.size(); ++k) {
    std::size_t s = ds.size();
    mpz_class pk = 1;
    for (int e = 1; e <= mult[k]; ++e) {
      pk *= primes[k];
      for (std::size_t j = 0; j < s; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

bool rational_coeffs(const UPoly& p) {
  for (const auto& c : p)
    if (!c.is_rational()) return false;
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p0) {
  UPoly p = upoly_trim(p0);
  if (!rational_coeffs(p)) throw unsupported_spectrum("rational root search on a non-rational polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) roots.push_back(0);
  if (p.size() - low <= 1) return roots;
  mpz_class l = 1;
  for (std::size_t k = low; k < p.size(); ++k) l = lcm(l, p[k].a().get_den());
  mpz_class a0 = Rational(p[low].a() * l).get_num(), an = Rational(p.back().a() * l).get_num();
  for (const auto& q : divisors(an))
    for (const auto& r : divisors(a0))
      for (int s : {1, -1}) {
        Rational x(r * s, q);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
        if (upoly_eval(p, Cyclo(x)).is_zero()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Roots of a monic quadratic with rational coefficients inside Q(z3) or Q(z4).
std::optional<std::pair<Cyclo, Cyclo>> quadratic_roots(const UPoly& q) {
  if (!rational_coeffs(q)) return std::nullopt;
  Rational b = q[1].a(), c = q[0].a();
  Rational D = b * b - 4 * c;  // roots (-b +- sqrt D)/2
  auto rat_sqrt = [](const Rational& v) -> std::optional<Rational> {
    if (sgn(v) < 0) return std::nullopt;
    mpz_class n = sqrt(v.get_num()), d = sqrt(v.get_den());
    if (n * n != v.get_num() || d * d != v.get_den()) return std::nullopt;
    return Rational(n, d);
  };
  // sqrt(-3) = 1 + 2 z3 ; sqrt(-1) = z4
  if (auto s = rat_sqrt(Rational(-D / 3))) {
    Cyclo r = Cyclo(3, Rational(*s), Rational(2 * *s));
    return std::make_pair((Cyclo(Rational(-b)) + r) * Cyclo(Rational(1, 2)), (Cyclo(Rational(-b)) - r) * Cyclo(Rational(1, 2)));
  }
  if (auto s = rat_sqrt(Rational(-D))) {
    Cyclo r = Cyclo(4, 0, *s);
    return std::make_pair((Cyclo(Rational(-b)) + r) * Cyclo(Rational(1, 2)), (Cyclo(Rational(-b)) - r) * Cyclo(Rational(1, 2)));
  }
  return std::nullopt;
}

std::size_t nullity(const NumMatrix& A) { return A.cols() - rank(A); }

}  // namespace

EigenData eigen_data(const NumMatrix& A) {
  EigenData ed;
  ed.charpoly = charpoly(A);
  const std::size_t n = A.rows();
  NumMatrix I = NumMatrix::identity(n);
  auto add_linear = [&](const Cyclo& v, int mult) {
    Eigen e;
    e.factor = {-v, Cyclo(1)};
    e.value = v;
    e.algebraic = mult;
    e.geometric = static_cast<int>(nullity(A - v * I));
    ed.eigen.push_back(e);
  };
  for (auto& [f0, mult] : squarefree(ed.charpoly)) {
    UPoly f = f0;
    if (f.size() == 2) {
      add_linear(-f[0], mult);
      continue;
    }
    if (rational_coeffs(f)) {
      for (const auto& r : rational_roots(f)) {
        add_linear(Cyclo(r), mult);
        f = upoly_divmod(f, {Cyclo(Rational(-r)), Cyclo(1)}).first;
      }
    }
    if (f.size() <= 1) continue;
    if (f.size() == 2) {
      add_linear(-f[0], mult);
      continue;
    }
    if (f.size() > 3) throw unsupported_spectrum("characteristic factor of degree > 2: " + upoly_str(f));
    f = upoly_monic(f);
    if (auto rs = quadratic_roots(f)) {
      add_linear(rs->first, mult);
      add_linear(rs->second, mult);
      continue;
    }
    Eigen e;
    e.factor = f;
    e.algebraic = mult;
    e.geometric = static_cast<int>(nullity(upoly_eval(f, A)) / 2);
    ed.eigen.push_back(e);
  }
  ed.diagonalizable = true;
  for (const auto& e : ed.eigen)
    if (e.algebraic != e.geometric) ed.diagonalizable = false;
  return ed;
}

std::vector<std::pair<Cyclo, int>> upoly_roots(const UPoly& p) {
  std::vector<std::pair<Cyclo, int>> out;
  for (auto& [f0, mult] : squarefree(p)) {
    UPoly f = f0;
    if (f.size() > 2 && rational_coeffs(f))
      for (const auto& r : rational_roots(f)) {
        out.emplace_back(Cyclo(r), mult);
        f = upoly_divmod(f, {Cyclo(Rational(-r)), Cyclo(1)}).first;
      }
    f = upoly_monic(f);
    if (f.size() <= 1) continue;
    if (f.size() == 2) {
      out.emplace_back(-f[0], mult);
      continue;
    }
    auto rs = f.size() == 3 ? quadratic_roots(f) : std::nullopt;
    if (!rs) throw unsupported_spectrum("factor without roots in the tower: " + upoly_str(f));
    out.emplace_back(rs->first, mult);
    out.emplace_back(rs->second, mult);
  }
  return out;
}

std::vector<RatFunc> charpoly_exact(const ExactMatrix& A) {
  if (!A.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: only integer divisions.
  const std::size_t n = A.rows();
  std::vector<RatFunc> c(n + 1);
  c[n] = RatFunc(1);
  ExactMatrix M = ExactMatrix::identity(n), AM;
  for (std::size_t k = 1; k <= n; ++k) {
    AM = A * M;
    RatFunc tr;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / RatFunc(static_cast<long>(k));
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k];
  }
  return c;
}

EigenData eigen_data(const ExactMatrix& A, const Assignment& at) { return eigen_data(evaluate(A, at)); }

bool is_diagonalizable(const NumMatrix& A) { return eigen_data(A).diagonalizable; }

}  // namespace mdrep

namespace mdrep {

namespace {

int level_of(std::size_t dim, int N) {
  int l = 0;
  std::size_t p = 1;
  while (p < dim) {
    p *= N;
    ++l;
  }
  if (p != dim) throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of " + std::to_string(N));
  return l;
}

}  // namespace

ExactMatrix from_rows(int N, const std::vector<std::vector<RatFunc>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  ExactMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) M(i, j) = rows[i][j];
  }
  M.set_shape(N, level_of(r, N), level_of(c, N));
  return M;
}

ExactMatrix from_rows(int N, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<RatFunc>> rs;
  for (const auto& row : rows) {
    rs.emplace_back();
    for (const auto& s : row) rs.back().push_back(parse_ratfunc(s));
  }
  return from_rows(N, rs);
}

ExactMatrix identity_words(int N, int level) {
  ExactMatrix M = ExactMatrix::identity(ipow(N, level));
  M.set_shape(N, level, level);
  return M;
}

std::string to_string(const ExactMatrix& M) {
  std::ostringstream os;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? ", " : "") << M(i, j).str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace mdrep
