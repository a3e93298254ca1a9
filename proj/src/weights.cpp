#include "wfomc/weights.hpp"

namespace wfomc {

WeightPolynomial to_polynomial(const WeightValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return WeightPolynomial(*q);
  return WeightPolynomial::symbol(std::get<SymbolId>(v));
}

void WeightFunction::set(const std::string& predicate, WeightValue w, WeightValue wbar) {
  entries_[predicate] = Entry{std::move(w), std::move(wbar)};
}

void WeightFunction::make_symbolic(const std::string& predicate, Polarity side) {
  Entry e = get(predicate);
  const SymbolId s = intern({predicate, side});
  (side == Polarity::Positive ? e.w : e.wbar) = s;
  entries_[predicate] = e;
}

WeightFunction::Entry WeightFunction::get(const std::string& predicate) const {
  auto it = entries_.find(predicate);
  return it == entries_.end() ? Entry{} : it->second;
}

bool WeightFunction::numeric() const {
  for (const auto& [_, e] : entries_)
    if (!std::holds_alternative<Rational>(e.w) || !std::holds_alternative<Rational>(e.wbar)) return false;
  return true;
}

WeightPolynomial one_type_weight(const TypeSpace& space, std::size_t i, const WeightFunction& wf) {
  WeightPolynomial w(Rational(1));
  const Signature& sig = space.signature();
  for (std::size_t p = 0; p < sig.size(); ++p) {
    const bool truth = sig[p].arity == 1 ? space.unary(i, p) : space.reflexive(i, p);
    w *= truth ? wf.positive(sig[p].name) : wf.negative(sig[p].name);
  }
  return w;
}

WeightPolynomial two_table_weight(const TypeSpace& space, std::size_t l, const WeightFunction& wf) {
  WeightPolynomial w(Rational(1));
  const Signature& sig = space.signature();
  for (std::size_t p = 0; p < sig.size(); ++p) {
    if (sig[p].arity != 2) continue;
    const auto pos = wf.positive(sig[p].name), neg = wf.negative(sig[p].name);
    w *= space.forward(l, p) ? pos : neg;
    w *= space.backward(l, p) ? pos : neg;
  }
  return w;
}

}  // namespace wfomc
