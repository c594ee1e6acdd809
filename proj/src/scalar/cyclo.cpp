#include <sstream>

#include "mdrep/scalar.hpp"

namespace mdrep {

namespace {

int canonical_order(int m) {
  switch (m) {
    case 1:
    case 2:
      return 1;
    case 3:
    case 6:
      return 3;
    case 4:
      return 4;
    default:
      throw field_error("cyclotomic order " + std::to_string(m) + " unsupported (m in {1,2,3,4,6})");
  }
}

int join(int m1, int m2) {
  if (m1 == 1) return m2;
  if (m2 == 1 || m1 == m2) return m1;
  throw field_error("cannot combine Q(z" + std::to_string(m1) + ") with Q(z" + std::to_string(m2) + ")");
}

}  // namespace

Cyclo::Cyclo(int m, const Rational& a, const Rational& b) : m_(canonical_order(m)), a_(a), b_(b) {
  if (m == 2) {
    a_ -= b_;  // z2 = -1
    b_ = 0;
  } else if (m == 6) {
    a_ += b_;  // z6 = 1 + z3
  } else if (m_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  normalise();
}

void Cyclo::normalise() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) m_ = 1;
}

Cyclo Cyclo::zeta(int m) {
  switch (m) {
    case 1:
      return Cyclo(1);
    case 2:
      return Cyclo(-1);
    default:
      return Cyclo(m, 0, 1);
  }
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  Cyclo r;
  r.m_ = join(x.m_, y.m_);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.normalise();
  return r;
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) { return x + (-y); }

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (x.m_ == 1 && y.m_ == 1) return Cyclo(Rational(x.a_ * y.a_));
  Cyclo r;
  r.m_ = join(x.m_, y.m_);
  Rational ac = x.a_ * y.a_, bd = x.b_ * y.b_;
  Rational mid = x.a_ * y.b_ + x.b_ * y.a_;
  if (r.m_ == 3) {  // z^2 = -1 - z
    r.a_ = ac - bd;
    r.b_ = mid - bd;
  } else {  // z^2 = -1
    r.a_ = ac - bd;
    r.b_ = mid;
  }
  r.normalise();
  return r;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw unsatisfiable_error("division by zero in the base field");
  if (m_ == 1) return Cyclo(Rational(1 / a_));
  Rational norm;
  Cyclo conj;
  conj.m_ = m_;
  if (m_ == 3) {
    norm = a_ * a_ - a_ * b_ + b_ * b_;
    conj.a_ = a_ - b_;
    conj.b_ = -b_;
  } else {
    norm = a_ * a_ + b_ * b_;
    conj.a_ = a_;
    conj.b_ = -b_;
  }
  conj.a_ /= norm;
  conj.b_ /= norm;
  conj.normalise();
  return conj;
}

Cyclo operator/(const Cyclo& x, const Cyclo& y) { return x * y.inv(); }

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string Cyclo::str() const {
  if (m_ == 1) return a_.get_str();
  std::ostringstream os;
  std::string z = "z" + std::to_string(m_);
  if (sgn(a_) != 0) os << a_.get_str();
  if (sgn(b_) != 0) {
    if (sgn(a_) != 0 && sgn(b_) > 0) os << "+";
    if (b_ == 1)
      os << z;
    else if (b_ == -1)
      os << "-" << z;
    else
      os << b_.get_str() << "*" << z;
  }
  return os.str();
}

Cyclo Cyclo::parse(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  q.canonicalize();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  return Cyclo(q);
}

}  // namespace mdrep
