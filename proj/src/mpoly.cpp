#include "henselab/mpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace henselab {

Monomial Monomial::var(int index, unsigned power) {
  Monomial m;
  if (power > 0) {
    m.exp.assign(index + 1, 0);
    m.exp[index] = power;
  }
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exp.resize(std::max(exp.size(), o.exp.size()), 0);
  for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += exp[i];
  for (size_t i = 0; i < o.exp.size(); ++i) r.exp[i] += o.exp[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (exp.size() > o.exp.size()) return false;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r;
  r.exp.resize(exp.size(), 0);
  for (size_t i = 0; i < exp.size(); ++i)
    r.exp[i] = exp[i] - o.degree_of(static_cast<int>(i));
  r.trim();
  return r;
}

void Monomial::trim() {
  while (!exp.empty() && exp.back() == 0) exp.pop_back();
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  size_t n = std::max(a.exp.size(), b.exp.size());
  for (size_t i = n; i-- > 0;) {
    unsigned ea = a.degree_of(static_cast<int>(i));
    unsigned eb = b.degree_of(static_cast<int>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

MPoly MPoly::monomial_term(const Rat& c, const Monomial& m) {
  MPoly p;
  if (!c.is_zero()) {
    Monomial mm = m;
    mm.trim();
    p.terms_.emplace(mm, c);
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("MPoly: not a constant");
  return terms_.begin()->second;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

int MPoly::top_variable() const {
  int top = -1;
  for (const auto& [m, c] : terms_)
    top = std::max(top, static_cast<int>(m.exp.size()) - 1);
  return top;
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
  return terms_.rbegin()->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MPoly: division by zero");
  if (divisor.is_constant()) return *this * divisor.constant_value().inverse();
  MPoly rem = *this;
  MPoly quot;
  const Monomial& dlm = divisor.leading_monomial();
  const Rat& dlc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial rlm = rem.leading_monomial();
    if (!dlm.divides(rlm)) throw std::domain_error("MPoly: inexact division");
    Monomial qm = rlm.divide(dlm);
    Rat qc = rem.leading_coeff() / dlc;
    quot.add_term(qm, qc);
    for (const auto& [m, c] : divisor.terms_) rem.add_term(m * qm, -(qc * c));
  }
  return quot;
}

MPoly MPoly::partial(int index) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree_of(index);
    if (e == 0) continue;
    Monomial dm = m;
    dm.exp[index] -= 1;
    dm.trim();
    r.add_term(dm, c * Rat(static_cast<long>(e)));
  }
  return r;
}

unsigned MPoly::degree_in(int v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(v));
  return d;
}

MPoly MPoly::coeff_in(int v, unsigned k) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.degree_of(v) != k) continue;
    Monomial mm = m;
    if (v < static_cast<int>(mm.exp.size())) mm.exp[v] = 0;
    mm.trim();
    r.add_term(mm, c);
  }
  return r;
}

MPoly MPoly::from_coeffs_in(int v, const std::vector<MPoly>& coeffs) {
  MPoly r;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    MPoly vk = monomial_term(Rat(1), Monomial::var(v, static_cast<unsigned>(k)));
    r = r + coeffs[k] * vk;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending monomial order, so leading term prints first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a.sign() < 0) {
        out << " - ";
        a = -a;
      } else {
        out << " + ";
      }
    }
    bool coeff_shown = !(a.is_one() && !m.is_one());
    if (coeff_shown) out << a.str();
    bool need_star = coeff_shown;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      if (i == 0)
        out << "t";
      else
        out << "e" << i;
      if (m.exp[i] > 1) out << "^" << m.exp[i];
    }
  }
  return out.str();
}

Rat MPoly::rational_content() const {
  if (terms_.empty()) return Rat(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  return Rat(num_gcd) / Rat(den_lcm);
}

namespace {

// gcd of all coefficients viewed in the top variable v (content), recursive.
MPoly content_in(const MPoly& p, int v) {
  MPoly g;
  unsigned d = p.degree_in(v);
  for (unsigned k = 0; k <= d; ++k) {
    MPoly c = p.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = mpoly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// lc(divisor)^k * a = q*b + r in (R[others])[v]
MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
  unsigned db = b.degree_in(v);
  MPoly lb = b.coeff_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    unsigned da = a.degree_in(v);
    MPoly la = a.coeff_in(v, da);
    MPoly shift = MPoly::monomial_term(Rat(1), Monomial::var(v, da - db));
    a = a * lb - b * (la * shift);
    if (!a.is_zero() && a.degree_in(v) == da) {
      // leading term must cancel; guard against stalls
      throw std::logic_error("pseudo_rem: no progress");
    }
    // keep the coefficients integer-primitive between rounds
    Rat rc = a.rational_content();
    if (!rc.is_zero() && !rc.is_one()) a = a * rc.inverse();
  }
  return a;
}

MPoly normalize_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

// polynomial content out, then integer-primitive coefficients: the PRS stays
// over Z, which is what keeps the coefficient growth polynomial
MPoly primitive_all(const MPoly& p, int v) {
  MPoly q = p.divide_exact(content_in(p, v));
  return q * q.rational_content().inverse();
}

// univariate image of p in variable v with every other variable evaluated at
// the given integer points; coefficients indexed by the v-degree
std::vector<Rat> evaluate_to_univariate(const MPoly& p, int v, const std::vector<long>& points) {
  std::vector<Rat> out(p.degree_in(v) + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) {
    Rat val = c;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (static_cast<int>(i) == v || m.exp[i] == 0) continue;
      long base = points[i];
      Rat pw(1);
      for (unsigned e = 0; e < m.exp[i]; ++e) pw *= Rat(base);
      val *= pw;
    }
    out[m.degree_of(v)] += val;
  }
  return out;
}

unsigned uni_degree(const std::vector<Rat>& p) {
  for (size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<unsigned>(k);
  return 0;
}

bool uni_is_zero(const std::vector<Rat>& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

// primitive Euclidean remainder sequence over Q, small degrees only
bool uni_coprime(std::vector<Rat> a, std::vector<Rat> b) {
  auto normalize = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.empty()) return;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
  };
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    if (b.size() == 1) return true;  // gcd is a constant
    while (a.size() >= b.size()) {
      Rat q = a.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      while (!a.empty() && a.back().is_zero()) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
    normalize(b);
  }
  return a.size() == 1;
}

// --- heuristic gcd (evaluation at one large integer point) -----------------
// Works on integer-coefficient polynomials. A candidate reconstructed from
// the xi-adic digits of the evaluated gcd is accepted only when it divides
// both inputs exactly, which certifies it as the gcd.

mpz_class max_abs_numerator(const MPoly& p) {
  mpz_class m = 0;
  for (const auto& [mono, c] : p.terms()) {
    mpz_class a = abs(c.num());
    if (a > m) m = a;
  }
  return m;
}

MPoly eval_var_at_integer(const MPoly& p, int v, const mpz_class& xi) {
  MPoly out;
  for (const auto& [mono, c] : p.terms()) {
    unsigned e = mono.degree_of(v);
    Monomial rest = mono;
    if (v < static_cast<int>(rest.exp.size())) rest.exp[v] = 0;
    rest.trim();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), e);
    out.add_term(rest, c * Rat(scale));
  }
  return out;
}

// balanced remainder in (-xi/2, xi/2]
mpz_class balanced_mod(const mpz_class& x, const mpz_class& xi) {
  mpz_class r = x % xi;
  if (r < 0) r += xi;
  if (2 * r > xi) r -= xi;
  return r;
}

bool divides_exactly(const MPoly& divisor, const MPoly& p) {
  try {
    p.divide_exact(divisor);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

std::optional<MPoly> gcd_heuristic(const MPoly& a, const MPoly& b, int depth) {
  if (depth > 8) return std::nullopt;
  if (a.is_constant() && b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().num().get_mpz_t(),
            b.constant_value().num().get_mpz_t());
    return MPoly(Rat(g));
  }
  int v = std::max(a.top_variable(), b.top_variable());
  mpz_class xi = 2 * std::max(max_abs_numerator(a), max_abs_numerator(b)) + 29;
  for (int attempt = 0; attempt < 3; ++attempt) {
    MPoly ea = eval_var_at_integer(a, v, xi);
    MPoly eb = eval_var_at_integer(b, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto image_gcd = gcd_heuristic(ea, eb, depth + 1);
      if (image_gcd && !image_gcd->is_zero()) {
        // reconstruct the v-coefficients from balanced xi-adic digits
        MPoly candidate;
        MPoly rest = *image_gcd;
        unsigned power = 0;
        while (!rest.is_zero()) {
          MPoly digit, next;
          for (const auto& [mono, c] : rest.terms()) {
            mpz_class d = balanced_mod(c.num(), xi);
            if (d != 0) digit.add_term(mono, Rat(d));
            mpz_class q = (c.num() - d) / xi;
            if (q != 0) next.add_term(mono, Rat(q));
          }
          if (!digit.is_zero()) {
            for (const auto& [mono, c] : digit.terms())
              candidate.add_term(mono * Monomial::var(v, power), c);
          }
          rest = next;
          ++power;
          if (power > 512) break;  // xi far too small; retry
        }
        if (!candidate.is_zero()) {
          candidate = candidate * candidate.rational_content().inverse();
          if (divides_exactly(candidate, a) && divides_exactly(candidate, b))
            return candidate;
        }
      }
    }
    xi = xi * xi / 2 + 29;
  }
  return std::nullopt;
}

// Certified coprimality in the variable v: a degree-preserving evaluation of
// the other variables with coprime univariate images proves that a and b have
// no common factor of positive v-degree. False means "unknown".
bool coprime_by_evaluation(const MPoly& a, const MPoly& b, int v) {
  int top = std::max(a.top_variable(), b.top_variable());
  static const long kSeeds[] = {2, 3, -2, 5, 7, -3, 11, 13};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<long> points(static_cast<size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i)
      points[static_cast<size_t>(i)] = kSeeds[(trial + i * (i + 2)) % 8];
    std::vector<Rat> ia = evaluate_to_univariate(a, v, points);
    std::vector<Rat> ib = evaluate_to_univariate(b, v, points);
    if (uni_is_zero(ia) || uni_is_zero(ib)) continue;
    if (uni_degree(ia) != a.degree_in(v) || uni_degree(ib) != b.degree_in(v))
      continue;  // leading coefficient vanished; point is unusable
    if (uni_coprime(ia, ib)) return true;
  }
  return false;
}

}  // namespace

static int gcd_depth = 0;
struct GcdTrace {
  bool on;
  GcdTrace(const MPoly& a, const MPoly& b) : on(std::getenv("HENSELAB_GCD_TRACE") != nullptr) {
    if (on) {
      fprintf(stderr, "%*sgcd> a(t%zu,d%u) b(t%zu,d%u)\n", 2*gcd_depth, "", a.terms().size(),
              a.total_degree(), b.terms().size(), b.total_degree());
      ++gcd_depth;
    }
  }
  ~GcdTrace() { if (on) { --gcd_depth; fprintf(stderr, "%*sgcd<\n", 2*gcd_depth, ""); } }
};

MPoly mpoly_gcd(const MPoly& a_in, const MPoly& b_in) {
  GcdTrace trace(a_in, b_in);
  if (a_in.is_zero()) return normalize_monic(b_in);
  if (b_in.is_zero()) return normalize_monic(a_in);
  if (a_in.is_constant() || b_in.is_constant()) return MPoly(Rat(1));
  MPoly a = a_in * a_in.rational_content().inverse();
  MPoly b = b_in * b_in.rational_content().inverse();

  int v = std::max(a.top_variable(), b.top_variable());
  // coprime-in-v is the common case; a degree-preserving evaluation certifies
  // it before any content or remainder-sequence work. By Gauss's lemma only
  // the contents can then share a factor.
  if (coprime_by_evaluation(a, b, v))
    return normalize_monic(mpoly_gcd(content_in(a, v), content_in(b, v)));

  // genuine common factors: the single-point heuristic with division
  // certification settles nearly all of them without a remainder sequence
  if (auto heuristic = gcd_heuristic(a, b, 0)) return normalize_monic(*heuristic);

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly cg = mpoly_gcd(ca, cb);

  // primitive PRS
  MPoly f = primitive_all(a, v), g = primitive_all(b, v);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (!g.is_zero()) {
    MPoly r = pseudo_rem(f, g, v);
    f = g;
    g = r.is_zero() ? MPoly() : primitive_all(r, v);
  }
  if (f.degree_in(v) == 0) {
    // coprime in v after all; the gcd is the content gcd alone
    return normalize_monic(cg);
  }
  return normalize_monic(cg * f);
}

}  // namespace henselab
