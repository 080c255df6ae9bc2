#include "henselab/derivation.hpp"

#include <algorithm>
#include <atomic>

#include "henselab/hensel.hpp"
#include "henselab/linalg.hpp"
#include "henselab/registry.hpp"

namespace henselab {

namespace {
std::atomic<int> next_custom_id{1000};
}

Derivation::Derivation(int id, std::string label, std::map<int, FieldElem> values)
    : id_(id), label_(std::move(label)) {
  for (auto& [key, value] : values) {
    if (key < 0) throw std::invalid_argument("derivation: bad variable key");
    if (key >= 1 && !GeneratorRegistry::instance().registered(key))
      throw std::invalid_argument("derivation: unregistered generator e" + std::to_string(key));
    if (value.symbolic() && value.is_zero_symbolic()) continue;  // keep the map sparse
    values_.emplace(key, value);
  }
}

Derivation Derivation::canonical(int i) {
  if (i < 1) throw std::invalid_argument("canonical derivation index must be >= 1");
  std::map<int, FieldElem> values;
  values.emplace(i, FieldElem::integer(1));
  return Derivation(i, "d" + std::to_string(i), std::move(values));
}

Derivation Derivation::zero() { return Derivation(0, "zero", {}); }

Derivation Derivation::dt() {
  std::map<int, FieldElem> values;
  values.emplace(0, FieldElem::integer(1));
  return Derivation(-1, "d/dt", std::move(values));
}

FieldElem Derivation::value_on(int var_index) const {
  auto it = values_.find(var_index);
  return it == values_.end() ? FieldElem() : it->second;
}

bool Derivation::is_zero() const { return values_.empty(); }

Derivation make_derivation(const std::map<int, FieldElem>& values) {
  int id = next_custom_id.fetch_add(1);
  return Derivation(id, "D" + std::to_string(id), values);
}

void reset_custom_derivation_ids() { next_custom_id.store(1000); }

namespace {

FieldElem apply_to_ratfunc(const Derivation& D, const RatFunc& f) {
  FieldElem acc;
  for (const auto& [var, value] : D.values()) {
    RatFunc partial = f.partial(var);
    if (partial.is_zero()) continue;
    acc = acc + FieldElem::from_ratfunc(partial) * value;
  }
  return acc;
}

}  // namespace

FieldElem apply_derivation(const Derivation& D, const FieldElem& a) {
  const FieldElem::Node& n = a.node();
  switch (n.kind) {
    case FieldElem::Kind::Sym:
      return apply_to_ratfunc(D, n.sym);
    case FieldElem::Kind::Root:
      return root_derivative(D, n.root);
    case FieldElem::Kind::Add:
    case FieldElem::Kind::Sub:
    case FieldElem::Kind::Mul:
    case FieldElem::Kind::Div: {
      FieldElem x = FieldElem::wrap(n.a), y = FieldElem::wrap(n.b);
      FieldElem dx = apply_derivation(D, x), dy = apply_derivation(D, y);
      switch (n.kind) {
        case FieldElem::Kind::Add: return dx + dy;
        case FieldElem::Kind::Sub: return dx - dy;
        case FieldElem::Kind::Mul: return x * dy + y * dx;
        default: return (dx * y - x * dy) / (y * y);
      }
    }
  }
  throw std::logic_error("apply_derivation: unknown node kind");
}

bool constant_field_contains(const Derivation& D, const FieldElem& a) {
  if (!a.symbolic()) throw UnsupportedTier("constant-field test needs a symbolic element");
  FieldElem da = apply_derivation(D, a);
  if (!da.symbolic())
    throw UnsupportedTier("derivation value is analytic; constant-field test unsupported");
  return da.is_zero_symbolic();
}

IndependenceResult linear_independence(const std::vector<Derivation>& ds) {
  if (ds.empty()) throw std::invalid_argument("linear_independence: empty list");
  // columns: union of value keys
  std::vector<int> cols;
  for (const auto& d : ds)
    for (const auto& [key, value] : d.values())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  std::sort(cols.begin(), cols.end());
  if (cols.empty()) {
    // all zero derivations: dependent with the trivial certificate on the first
    IndependenceResult r;
    r.independent = false;
    r.certificate.assign(ds.size(), RatFunc());
    r.certificate[0] = RatFunc(Rat(1));
    return r;
  }

  Matrix m(ds.size(), std::vector<RatFunc>(cols.size()));
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m[i][j] = ds[i].value_on(cols[j]).ratfunc();

  auto kernel = left_kernel_vector(m);
  IndependenceResult r;
  if (!kernel) {
    r.independent = true;
  } else {
    r.independent = false;
    r.certificate = *kernel;
  }
  return r;
}

FieldElem continuity_refutation(const Derivation& D, long N) {
  if (N < 1) throw std::invalid_argument("continuity_refutation: N must be >= 1");
  if (D.is_zero()) throw NoWitnessFound("the zero derivation is continuous");

  auto truncation = [](int j, long upto) {
    return laurent_truncation(FieldElem::gen(j), upto);
  };

  int m = GeneratorRegistry::instance().count();
  for (int j = 1; j <= m; ++j) {
    FieldElem base = FieldElem::gen(j) - truncation(j, N);
    FieldElem dbase = apply_derivation(D, base);
    if (dbase.symbolic() && dbase.is_zero_symbolic()) continue;
    long nu = *valuation(dbase);
    long s0 = std::max<long>(nu, 0);
    for (long s = s0; s <= s0 + 4; ++s) {
      FieldElem a = (FieldElem::gen(j) - truncation(j, N + s)) / FieldElem::t().pow(s);
      if (!val_at_least(a, N)) continue;
      FieldElem da = apply_derivation(D, a);
      if (da.symbolic() && da.is_zero_symbolic()) continue;
      if (*valuation(da) <= 0) return a;
    }
  }
  throw NoWitnessFound("continuity refutation: candidate family exhausted");
}

FieldElem dense_independent_enumerator(const Ball& target, const std::vector<FieldElem>& avoid) {
  for (const auto& a : avoid)
    if (!a.symbolic()) throw UnsupportedTier("avoid set must be symbolic-tier");

  FieldElem head = laurent_truncation(target.center, target.radius);
  int fresh = GeneratorRegistry::instance().mint();
  return head + FieldElem::t().pow(target.radius) * FieldElem::gen(fresh);
}

}  // namespace henselab
