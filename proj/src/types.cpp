#include "wfomc/types.hpp"

namespace wfomc {

TypeSpace::TypeSpace(const Signature& sig) : sig_(sig) {
  pos1_.resize(sig.size());
  pos2_.resize(sig.size(), 0);
  for (std::size_t p = 0; p < sig.size(); ++p) {
    pos1_[p] = a1_++;
    if (sig[p].arity == 2) {
      pos2_[p] = a2_;
      a2_ += 2;
    }
  }
}

bool TypeSpace::unary(std::size_t i, std::size_t predicate) const { return bit1(i, pos1_[predicate]); }
bool TypeSpace::reflexive(std::size_t i, std::size_t predicate) const { return bit1(i, pos1_[predicate]); }
bool TypeSpace::forward(std::size_t l, std::size_t predicate) const { return bit2(l, pos2_[predicate]); }
bool TypeSpace::backward(std::size_t l, std::size_t predicate) const {
  return bit2(l, pos2_[predicate] + 1);
}

bool TypeSpace::evaluate(const Formula& phi, TwoType t, int ex, int ey) const {
  return phi.evaluate([&](const Atom& a) {
    const int e0 = a.args[0] == Var::X ? ex : ey;
    if (a.arity == 1) return bit1(e0 == 0 ? t.i : t.j, pos1_[a.predicate]);
    const int e1 = a.args[1] == Var::X ? ex : ey;
    if (e0 == e1) return bit1(e0 == 0 ? t.i : t.j, pos1_[a.predicate]);
    return e0 == 0 ? forward(t.l, a.predicate) : backward(t.l, a.predicate);
  });
}

bool TypeSpace::is_consistent(TwoType t, const Formula& phi) const {
  return evaluate(phi, t, 0, 0) && evaluate(phi, t, 0, 1) && evaluate(phi, t, 1, 0) &&
         evaluate(phi, t, 1, 1);
}

bool TypeSpace::valid(std::size_t i, const Formula& phi) const {
  return evaluate(phi, TwoType{i, i, 0}, 0, 0);
}

namespace {

std::vector<bool> bits(std::size_t value, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t k = 0; k < width; ++k) out[k] = (value >> (width - 1 - k)) & 1u;
  return out;
}

}  // namespace

std::vector<OneType> enumerate_one_types(const Signature& sig) {
  TypeSpace space(sig);
  std::vector<OneType> out;
  for (std::size_t i = 0; i < space.u(); ++i) out.push_back({i, bits(i, space.single_atoms())});
  return out;
}

std::vector<TwoTable> enumerate_two_tables(const Signature& sig) {
  TypeSpace space(sig);
  std::vector<TwoTable> out;
  for (std::size_t l = 0; l < space.b(); ++l) out.push_back({l, bits(l, space.pair_atoms())});
  return out;
}

bool is_consistent(const TypeSpace& space, TwoType t, const Formula& phi) {
  return space.is_consistent(t, phi);
}

}  // namespace wfomc
