#include <algorithm>
#include <cctype>
#include <set>

#include "mdrep/scalar.hpp"

namespace mdrep {

Constraints::Constraints(std::initializer_list<Poly> ps) {
  for (const auto& p : ps) add(p);
}

void Constraints::add(const Poly& p) {
  if (p.is_zero()) throw unsatisfiable_error("declared the zero polynomial non-vanishing");
  if (p.is_constant()) return;
  Poly m = p.monic();
  for (const auto& q : polys_)
    if (q == m) return;
  polys_.push_back(m);
}

void Constraints::merge(const Constraints& o) {
  for (const auto& p : o.polys_) add(p);
}

bool Constraints::allows(const Poly& p0) const {
  if (p0.is_zero()) return false;
  Poly p = p0;
  bool progress = true;
  while (!p.is_constant() && progress) {
    progress = false;
    for (const auto& c : polys_) {
      while (auto q = divide_exact(p, c)) {
        p = *q;
        progress = true;
        if (p.is_constant()) break;
      }
      if (p.is_constant()) break;
    }
  }
  return p.is_constant();
}

void Constraints::check_point(const Assignment& at) const {
  for (const auto& c : polys_)
    if (c.evaluate(at).is_zero()) throw rejected_point("constraint " + c.str() + " vanishes at the sample point");
}

RatFunc::RatFunc(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw unsatisfiable_error("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  if (d.is_constant()) {
    num_ = n * d.constant_value().inv();
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(n, d);
  Poly nn = g.is_constant() ? n : divide_exact(n, g).value();
  Poly dd = g.is_constant() ? d : divide_exact(d, g).value();
  Cyclo s = dd.lc().inv();
  num_ = nn * s;
  den_ = dd * s;
}

Cyclo RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant rational function");
  return num_.constant_value() / den_.constant_value();
}

bool RatFunc::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }

std::vector<std::string> RatFunc::variables() const {
  std::set<std::string> s(num_.vars().begin(), num_.vars().end());
  s.insert(den_.vars().begin(), den_.vars().end());
  return {s.begin(), s.end()};
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw unsatisfiable_error("inverse of the zero rational function");
  Cyclo s = num_.lc().inv();
  return RatFunc(den_ * s, num_ * s, raw_tag{});
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_.is_constant() && y.den_.is_constant()) return RatFunc(x.num_ + y.num_, Poly(1), RatFunc::raw_tag{});
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  Poly g = gcd(x.den_, y.den_);
  if (g.is_constant()) {
    Poly n = x.num_ * y.den_ + y.num_ * x.den_;
    if (n.is_zero()) return RatFunc();
    Poly d = x.den_ * y.den_;
    return RatFunc(n, d, RatFunc::raw_tag{});
  }
  Poly xd = divide_exact(x.den_, g).value();
  Poly yd = divide_exact(y.den_, g).value();
  Poly t = x.num_ * yd + y.num_ * xd;
  if (t.is_zero()) return RatFunc();
  Poly g2 = gcd(t, g);
  if (!g2.is_constant()) {
    t = divide_exact(t, g2).value();
    g = divide_exact(g, g2).value();
  }
  Poly d = xd * yd * g;
  Cyclo s = d.lc().inv();
  return RatFunc(t * s, d * s, RatFunc::raw_tag{});
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero() || y.is_zero()) return RatFunc();
  if (x.den_.is_constant() && y.den_.is_constant()) return RatFunc(x.num_ * y.num_, Poly(1), RatFunc::raw_tag{});
  Poly g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
  Poly n1 = g1.is_constant() ? x.num_ : divide_exact(x.num_, g1).value();
  Poly d2 = g1.is_constant() ? y.den_ : divide_exact(y.den_, g1).value();
  Poly n2 = g2.is_constant() ? y.num_ : divide_exact(y.num_, g2).value();
  Poly d1 = g2.is_constant() ? x.den_ : divide_exact(x.den_, g2).value();
  Poly n = n1 * n2, d = d1 * d2;
  Cyclo s = d.lc().inv();
  return RatFunc(n * s, d * s, RatFunc::raw_tag{});
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inv(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  if (den_.is_constant()) return RatFunc(num_.pow(static_cast<unsigned>(e)), Poly(1), raw_tag{});
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), raw_tag{});
}

Cyclo RatFunc::evaluate(const Assignment& at) const {
  Cyclo d = den_.evaluate(at);
  if (d.is_zero()) throw rejected_point("denominator " + den_.str() + " vanishes at the sample point");
  return num_.evaluate(at) / d;
}

Cyclo RatFunc::evaluate(const Assignment& at, const Constraints& cs) const {
  cs.check_point(at);
  return evaluate(at);
}

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& sub) const {
  return num_.substitute(sub) / den_.substitute(sub);
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  auto wrap = [](const Poly& p) { return p.size() > 1 ? "(" + p.str() + ")" : p.str(); };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | atom ('^' int)? ; atom := number | ident | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}
  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*'))
        r *= unary();
      else if (eat('/'))
        r = r / unary();
      else
        return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    RatFunc a = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("exponent expected");
      long e = std::stol(s_.substr(st, i_ - st));
      a = a.pow(neg ? -e : e);
    }
    return a;
  }
  RatFunc atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      RatFunc r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFunc(Cyclo::parse(s_.substr(st, i_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id = s_.substr(st, i_ - st);
      if (id == "omega") return RatFunc(Cyclo::zeta(3));
      if (id == "zeta3" || id == "z3") return RatFunc(Cyclo::zeta(3));
      if (id == "zeta4" || id == "z4") return RatFunc(Cyclo::zeta(4));
      if (id == "zeta6" || id == "z6") return RatFunc(Cyclo::zeta(6));
      return RatFunc::var(id);
    }
    fail(std::string("unexpected '") + c + "'");
  }
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).run(); }

}  // namespace mdrep
