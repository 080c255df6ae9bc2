#include "henselab/sampler.hpp"

#include "henselab/registry.hpp"

namespace henselab {

Sampler::Sampler(std::uint64_t seed, int num_generators) : rng_(seed), m_(num_generators) {
  if (num_generators < 0) throw std::invalid_argument("sampler: negative generator count");
}

long Sampler::integer_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("sampler: empty range");
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng_);
}

Rat Sampler::small_rational() {
  long num = integer_in(1, 9);
  if (integer_in(0, 1) == 1) num = -num;
  long den = integer_in(1, 9);
  return Rat(num, den);
}

RatFunc Sampler::unit_poly(int terms, unsigned max_degree) {
  RatFunc p(small_rational());  // nonzero constant term
  for (int k = 0; k < terms; ++k) {
    Monomial mono;
    unsigned degree = static_cast<unsigned>(integer_in(1, static_cast<long>(max_degree)));
    for (unsigned step = 0; step < degree; ++step) {
      int var = static_cast<int>(integer_in(0, m_));
      mono = mono * Monomial::var(var);
    }
    p = p + RatFunc(MPoly::monomial_term(small_rational(), mono));
  }
  return p;
}

FieldElem Sampler::around(const FieldElem& center, long r) {
  RatFunc bump = RatFunc::t().pow(r) * unit_poly();
  return center + FieldElem::from_ratfunc(bump);
}

}  // namespace henselab
