#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mdrep {

using Rational = mpq_class;

// Division by the zero element of the tower.
class unsatisfiable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sample point that zeroes a denominator or a declared constraint.
class rejected_point : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in cyclotomic fields that the tower cannot join.
class field_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element a + b*z of Q(z), z a primitive m-th root of unity, m in {1,2,3,4,6}.
/// Stored with m normalised to 1 (rational), 3 or 4; Q(z6) is stored in the
/// z3 basis via z6 = 1 + z3.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Cyclo(int m, const Rational& a, const Rational& b);

  static Cyclo zeta(int m);
  static Cyclo parse(const std::string& text);

  int order() const { return m_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return m_ == 1 && a_ == 1; }
  bool is_rational() const { return m_ == 1; }

  Cyclo operator-() const;
  Cyclo inv() const;
  friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator/(const Cyclo& x, const Cyclo& y);
  Cyclo& operator+=(const Cyclo& y) { return *this = *this + y; }
  Cyclo& operator-=(const Cyclo& y) { return *this = *this - y; }
  Cyclo& operator*=(const Cyclo& y) { return *this = *this * y; }
  friend bool operator==(const Cyclo& x, const Cyclo& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }

  Cyclo pow(long e) const;
  std::string str() const;

 private:
  void normalise();
  int m_ = 1;
  Rational a_;
  Rational b_;
};

constexpr int kMaxVars = 32;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

class RatFunc;
using Assignment = std::map<std::string, Cyclo>;

/// Sparse multivariate polynomial over Cyclo. Variables are kept sorted by
/// name; terms are sorted in decreasing graded-lex order.
class Poly {
 public:
  using Term = std::pair<Mono, Cyclo>;

  Poly();
  Poly(const Cyclo& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Cyclo(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(const std::string& name);

  const std::vector<std::string>& vars() const { return *vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclo constant_value() const;  // only for constants
  const Cyclo& lc() const { return terms_.front().second; }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.deg; }
  int degree_in(const std::string& v) const;
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Cyclo& c);
  friend bool operator==(const Poly& x, const Poly& y);
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }
  Poly pow(unsigned e) const;

  Poly monic() const;
  // Coefficients as polynomials in the other variables, indexed by degree in v.
  std::vector<Poly> coefficients_in(const std::string& v) const;
  static Poly from_coefficients(const std::string& v, const std::vector<Poly>& cs);

  Cyclo evaluate(const Assignment& at) const;
  RatFunc substitute(const std::map<std::string, RatFunc>& sub) const;
  std::string str() const;

  // Internal: build from raw sorted terms over a var list.
  Poly(VarList vars, std::vector<Term> terms);
  Poly over(const VarList& target) const;  // re-express over a superset of vars
  Poly compacted() const;

 private:
  VarList vars_;
  std::vector<Term> terms_;
};

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

/// Asserted non-vanishing polynomials; pivots and denominators must lie in
/// their multiplicative closure.
class Constraints {
 public:
  Constraints() = default;
  Constraints(std::initializer_list<Poly> ps);
  void add(const Poly& p);
  void merge(const Constraints& o);
  const std::vector<Poly>& polys() const { return polys_; }
  bool allows(const Poly& p) const;
  // Throws rejected_point when some constraint vanishes at the point.
  void check_point(const Assignment& at) const;

 private:
  std::vector<Poly> polys_;
};

/// Rational function num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Cyclo& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& n, const Poly& d);
  static RatFunc var(const std::string& name) { return RatFunc(Poly::var(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyclo constant_value() const;
  bool is_one() const;
  std::vector<std::string> variables() const;

  RatFunc operator-() const;
  RatFunc inv() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
  RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
  RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }
  RatFunc pow(long e) const;

  Cyclo evaluate(const Assignment& at) const;
  Cyclo evaluate(const Assignment& at, const Constraints& cs) const;
  RatFunc substitute(const std::map<std::string, RatFunc>& sub) const;
  RatFunc canonical() const { return RatFunc(num_, den_); }
  std::string str() const;

 private:
  struct raw_tag {};
  RatFunc(Poly n, Poly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_;
  Poly den_;
};

RatFunc parse_ratfunc(const std::string& text);

}  // namespace mdrep
