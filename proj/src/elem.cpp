#include "henselab/elem.hpp"

#include "henselab/registry.hpp"

namespace henselab {

namespace {

std::shared_ptr<const FieldElem::Node> sym_node(RatFunc f) {
  auto n = std::make_shared<FieldElem::Node>();
  n->kind = FieldElem::Kind::Sym;
  n->sym = std::move(f);
  n->symbolic = true;
  return n;
}

}  // namespace

FieldElem::FieldElem() : node_(sym_node(RatFunc())) {}

FieldElem FieldElem::rational(const Rat& c) { return FieldElem(sym_node(RatFunc(c))); }

FieldElem FieldElem::t() { return FieldElem(sym_node(RatFunc::t())); }

FieldElem FieldElem::gen(int index) {
  if (!GeneratorRegistry::instance().registered(index))
    throw std::invalid_argument("unregistered generator e" + std::to_string(index));
  return FieldElem(sym_node(RatFunc::gen(index)));
}

FieldElem FieldElem::from_ratfunc(RatFunc f) {
  // generators referenced by the expression must exist
  int top = f.top_variable();
  if (top >= 1 && !GeneratorRegistry::instance().registered(top))
    throw std::invalid_argument("unregistered generator e" + std::to_string(top));
  return FieldElem(sym_node(std::move(f)));
}

FieldElem FieldElem::from_root(std::shared_ptr<HenselRoot> r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Root;
  n->root = std::move(r);
  n->symbolic = false;
  return FieldElem(std::move(n));
}

const RatFunc& FieldElem::ratfunc() const {
  if (!node_->symbolic)
    throw UnsupportedTier("analytic element has no canonical rational form");
  return node_->sym;
}

FieldElem FieldElem::make_binary(Kind k, const FieldElem& a, const FieldElem& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a.node_;
  n->b = b.node_;
  n->symbolic = false;
  return FieldElem(std::move(n));
}

FieldElem FieldElem::operator-() const {
  if (symbolic()) return FieldElem(sym_node(-node_->sym));
  return FieldElem() - *this;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (symbolic() && o.symbolic()) return FieldElem(sym_node(node_->sym + o.node_->sym));
  return make_binary(Kind::Add, *this, o);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (symbolic() && o.symbolic()) return FieldElem(sym_node(node_->sym - o.node_->sym));
  return make_binary(Kind::Sub, *this, o);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (symbolic() && o.symbolic()) return FieldElem(sym_node(node_->sym * o.node_->sym));
  return make_binary(Kind::Mul, *this, o);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.symbolic()) {
    if (o.node_->sym.is_zero()) throw std::domain_error("division by zero element");
    if (symbolic()) return FieldElem(sym_node(node_->sym / o.node_->sym));
  } else {
    // analytic divisor: certified nonzero via a finite valuation
    valuation(o);
  }
  return make_binary(Kind::Div, *this, o);
}

FieldElem FieldElem::pow(long k) const {
  if (k < 0) return FieldElem::integer(1) / pow(-k);
  FieldElem r = FieldElem::integer(1);
  FieldElem base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

}  // namespace henselab
