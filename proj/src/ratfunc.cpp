#include "henselab/ratfunc.hpp"

#include <stdexcept>

namespace henselab {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  MPoly g = mpoly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value().is_one())) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Rat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Rat inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("RatFunc: not constant");
  if (num_.is_zero()) return Rat(0);
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  // a/b + c/d = (a d' + c b') / (b d') with g = gcd(b, d)
  MPoly g = mpoly_gcd(den_, o.den_);
  MPoly b1 = den_.divide_exact(g), d1 = o.den_.divide_exact(g);
  return RatFunc(num_ * d1 + o.num_ * b1, den_ * d1);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  MPoly g = mpoly_gcd(den_, o.den_);
  MPoly b1 = den_.divide_exact(g), d1 = o.den_.divide_exact(g);
  return RatFunc(num_ * d1 - o.num_ * b1, den_ * d1);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // cross-cancel; the remaining product is already reduced
  MPoly g1 = mpoly_gcd(num_, o.den_);
  MPoly g2 = mpoly_gcd(o.num_, den_);
  MPoly n = num_.divide_exact(g1) * o.num_.divide_exact(g2);
  MPoly d = den_.divide_exact(g2) * o.den_.divide_exact(g1);
  Rat lc = d.leading_coeff();
  if (!lc.is_one()) {
    Rat inv = lc.inverse();
    n = n * inv;
    d = d * inv;
  }
  return RatFunc(std::move(n), std::move(d), AlreadyReduced{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  MPoly n = den_, d = num_;
  Rat lc = d.leading_coeff();
  if (!lc.is_one()) {
    Rat inv = lc.inverse();
    n = n * inv;
    d = d * inv;
  }
  return RatFunc(std::move(n), std::move(d), AlreadyReduced{});
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r(Rat(1));
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

RatFunc RatFunc::partial(int index) const {
  // (n' d - n d') / d^2
  MPoly dn = num_.partial(index);
  MPoly dd = den_.partial(index);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

int RatFunc::top_variable() const {
  return std::max(num_.top_variable(), den_.top_variable());
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  return "(" + n + ")/(" + d + ")";
}

}  // namespace henselab
