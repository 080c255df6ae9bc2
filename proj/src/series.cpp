#include "henselab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace henselab {

TruncSeries::TruncSeries(long offset, std::vector<Rat> coeffs, long prec)
    : offset_(offset), coeffs_(std::move(coeffs)), prec_(prec) {
  canonicalize();
  if (offset_ + static_cast<long>(coeffs_.size()) > prec_)
    throw std::logic_error("TruncSeries: stored coefficients beyond precision");
}

void TruncSeries::canonicalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) offset_ = prec_;
}

TruncSeries TruncSeries::constant(const Rat& c, long prec) {
  if (c.is_zero() || prec <= 0) return zero(prec);
  return TruncSeries(0, {c}, prec);
}

TruncSeries TruncSeries::t(long prec) { return monomial(Rat(1), 1, prec); }

TruncSeries TruncSeries::monomial(const Rat& c, long exponent, long prec) {
  if (c.is_zero() || exponent >= prec) return zero(prec);
  return TruncSeries(exponent, {c}, prec);
}

Rat TruncSeries::coeff_at(long exponent) const {
  if (exponent >= prec_)
    throw std::logic_error("TruncSeries: coefficient beyond precision");
  long k = exponent - offset_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rat(0);
  return coeffs_[k];
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  long prec = std::min(prec_, o.prec_);
  if (coeffs_.empty() && o.coeffs_.empty()) return zero(prec);
  long lo = std::min(valuation_lower_bound(), o.valuation_lower_bound());
  lo = std::min(lo, prec);
  std::vector<Rat> out(static_cast<size_t>(std::max<long>(prec - lo, 0)), Rat(0));
  auto acc = [&](const TruncSeries& s) {
    for (size_t k = 0; k < s.coeffs_.size(); ++k) {
      long e = s.offset_ + static_cast<long>(k);
      if (e >= prec) break;
      out[static_cast<size_t>(e - lo)] += s.coeffs_[k];
    }
  };
  acc(*this);
  acc(o);
  return TruncSeries(lo, std::move(out), prec);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  // error term valuation: min(v(a) + prec(b), v(b) + prec(a))
  long prec = std::min(valuation_lower_bound() + o.prec_, o.valuation_lower_bound() + prec_);
  if (coeffs_.empty() || o.coeffs_.empty()) return zero(prec);
  long lo = offset_ + o.offset_;
  if (lo >= prec) return zero(prec);
  std::vector<Rat> out(static_cast<size_t>(prec - lo), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long ei = offset_ + static_cast<long>(i);
    if (ei + o.offset_ >= prec) break;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      long e = ei + o.offset_ + static_cast<long>(j);
      if (e >= prec) break;
      out[static_cast<size_t>(e - lo)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return TruncSeries(lo, std::move(out), prec);
}

TruncSeries TruncSeries::scale(const Rat& c) const {
  if (c.is_zero()) return zero(prec_);
  TruncSeries r = *this;
  for (Rat& x : r.coeffs_) x = x * c;
  return r;
}

TruncSeries TruncSeries::shift(long k) const {
  TruncSeries r = *this;
  r.offset_ += k;
  r.prec_ += k;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (coeffs_.empty())
    throw std::logic_error("TruncSeries: inverse needs a known nonzero part");
  long d = offset_;
  long nu = prec_ - d;  // unit part u known modulo t^nu, u(0) != 0
  std::vector<Rat> inv(static_cast<size_t>(nu), Rat(0));
  Rat u0inv = coeffs_[0].inverse();
  inv[0] = u0inv;
  for (long k = 1; k < nu; ++k) {
    Rat s(0);
    long jmax = std::min<long>(k, static_cast<long>(coeffs_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) s += coeffs_[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
    inv[static_cast<size_t>(k)] = -s * u0inv;
  }
  // 1/b = t^{-d} u^{-1}, known modulo t^(prec - 2d)
  return TruncSeries(-d, std::move(inv), prec_ - 2 * d);
}

TruncSeries TruncSeries::pow(unsigned k) const {
  if (k == 0) return constant(Rat(1), prec_);
  TruncSeries r = *this;
  for (unsigned i = 1; i < k; ++i) r = r * *this;
  return r;
}

TruncSeries TruncSeries::truncate(long prec) const {
  if (prec >= prec_) {
    if (prec > prec_) throw std::logic_error("TruncSeries: cannot extend precision");
    return *this;
  }
  std::vector<Rat> out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    long e = offset_ + static_cast<long>(k);
    if (e >= prec) break;
    out.push_back(coeffs_[k]);
  }
  return TruncSeries(std::min(offset_, prec), std::move(out), prec);
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  long prec = std::min(prec_, o.prec_);
  TruncSeries a = truncate(prec), b = o.truncate(prec);
  return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

std::string TruncSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    long e = offset_ + static_cast<long>(k);
    Rat c = coeffs_[k];
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (e == 0) {
      out << c.str();
    } else {
      if (!c.is_one()) out << c.str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  out << " + O(t^" << prec_ << ")";
  return out.str();
}

}  // namespace henselab
