#include "wfomc/fo2.hpp"

#include <numeric>

#include "wfomc/budget.hpp"

namespace wfomc {

std::size_t VectorHash::operator()(const CardinalityVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::uint32_t total(const CardinalityVector& k) { return std::accumulate(k.begin(), k.end(), 0u); }

namespace {

void compose(std::uint32_t left, std::size_t pos, CardinalityVector& cur, std::vector<CardinalityVector>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = 0; v <= left; ++v) {
    cur[pos] = v;
    compose(left - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<CardinalityVector> compositions(std::uint32_t n, std::size_t u) {
  std::vector<CardinalityVector> out;
  if (u == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  CardinalityVector cur(u, 0);
  compose(n, 0, cur, out);
  return out;
}

std::vector<CardinalityVector> bounded_vectors(const CardinalityVector& k) {
  std::vector<CardinalityVector> out;
  CardinalityVector cur(k.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k.size();
    while (i > 0) {
      --i;
      if (cur[i] < k[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (k.empty()) return out;
  }
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer multinomial(const CardinalityVector& k) {
  Integer r = 1;
  std::uint64_t acc = 0;
  for (auto x : k) {
    acc += x;
    r *= binomial(acc, x);
  }
  return r;
}

std::vector<std::size_t> valid_one_types(const TypeSpace& space, const Formula& phi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.u(); ++i)
    if (space.valid(i, phi)) out.push_back(i);
  return out;
}

RMatrix r_matrix(const TypeSpace& space, const Formula& phi, const Formula& theta, const WeightFunction& wf,
                 const std::vector<std::size_t>& ts) {
  std::vector<WeightPolynomial> v;
  v.reserve(space.b());
  for (std::size_t l = 0; l < space.b(); ++l) v.push_back(two_table_weight(space, l, wf));
  RMatrix r;
  r.u = ts.size();
  r.entries.resize(r.u * r.u);
  for (std::size_t a = 0; a < r.u; ++a) {
    for (std::size_t b = 0; b < r.u; ++b) {
      WeightPolynomial sum;
      for (std::size_t l = 0; l < space.b(); ++l) {
        const TwoType t{ts[a], ts[b], l};
        if (space.is_consistent(t, phi) && space.satisfies(t, theta)) sum += v[l];
      }
      r.at(a, b) = sum;
    }
  }
  return r;
}

RMatrix r_matrix(const TypeSpace& space, const Formula& phi, const Formula& theta, const WeightFunction& wf) {
  std::vector<std::size_t> all(space.u());
  std::iota(all.begin(), all.end(), 0);
  return r_matrix(space, phi, theta, wf, all);
}

Fo2Instance::Fo2Instance(const TypeSpace& space, const Formula& phi, const WeightFunction& wf,
                         std::vector<std::size_t> types, DegreeCaps caps)
    : types_(std::move(types)), caps_(std::move(caps)) {
  for (auto i : types_) {
    auto w = wfomc::one_type_weight(space, i, wf);
    w_.push_back(caps_.empty() ? w : w.truncated(caps_));
  }
  r_ = r_matrix(space, phi, Formula::top(), wf, types_);
  if (!caps_.empty())
    for (auto& e : r_.entries) e = e.truncated(caps_);
}

const WeightPolynomial& Fo2Instance::wfomc_k(const CardinalityVector& k) {
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  check_deadline();
  const auto* c = caps();
  WeightPolynomial acc(Rational(multinomial(k)));
  for (std::size_t a = 0; a < k.size() && !acc.is_zero(); ++a) {
    if (!k[a]) continue;
    acc = WeightPolynomial::mul(acc, WeightPolynomial::pow(w_[a], k[a], c), c);
    const std::uint64_t self = std::uint64_t{k[a]} * (k[a] - 1) / 2;
    if (self) acc = WeightPolynomial::mul(acc, WeightPolynomial::pow(r_.at(a, a), self, c), c);
    for (std::size_t b = a + 1; b < k.size() && !acc.is_zero(); ++b) {
      if (!k[b]) continue;
      acc = WeightPolynomial::mul(acc, WeightPolynomial::pow(r_.at(a, b), std::uint64_t{k[a]} * k[b], c), c);
    }
  }
  return memo_.emplace(k, std::move(acc)).first->second;
}

WeightPolynomial wfomc_k(const Signature& sig, const Formula& phi, const CardinalityVector& k,
                         const WeightFunction& wf) {
  TypeSpace space(sig);
  auto valid = valid_one_types(space, phi);
  CardinalityVector sub;
  std::vector<bool> is_valid(space.u(), false);
  for (auto i : valid) is_valid[i] = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] && !is_valid[i]) return {};
  }
  for (auto i : valid) sub.push_back(i < k.size() ? k[i] : 0);
  Fo2Instance inst(space, phi, wf, valid);
  return inst.wfomc_k(sub);
}

WeightPolynomial wfomc_n(const Signature& sig, const Formula& phi, std::uint32_t n, const WeightFunction& wf,
                         const std::function<bool(const CardinalityVector&)>& unary_filter) {
  TypeSpace space(sig);
  auto valid = valid_one_types(space, phi);
  Fo2Instance inst(space, phi, wf, valid);
  WeightPolynomial sum;
  for (const auto& k : compositions(n, valid.size())) {
    if (unary_filter) {
      CardinalityVector full(space.u(), 0);
      for (std::size_t a = 0; a < valid.size(); ++a) full[valid[a]] = k[a];
      if (!unary_filter(full)) continue;
    }
    sum += inst.wfomc_k(k);
  }
  return sum;
}

const WeightPolynomial& CrossFactor::power(std::size_t i, std::size_t j, std::uint64_t e) {
  auto& cache = powers_[i * r_.u + j];
  if (cache.empty()) cache.emplace_back(Rational(1));
  while (cache.size() <= e) cache.push_back(WeightPolynomial::mul(cache.back(), r_.at(i, j), caps()));
  return cache[e];
}

WeightPolynomial CrossFactor::operator()(const CardinalityVector& a, const CardinalityVector& b) {
  WeightPolynomial acc(Rational(1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      if (r_.at(i, j).is_zero()) return {};
      acc = WeightPolynomial::mul(acc, power(i, j, std::uint64_t{a[i]} * b[j]), caps());
      if (acc.is_zero()) return acc;
    }
  }
  return acc;
}

}  // namespace wfomc
