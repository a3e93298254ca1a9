#include "wfomc/splitting.hpp"

#include <stdexcept>

#include "wfomc/budget.hpp"

namespace wfomc {

namespace {

CardinalityVector minus(const CardinalityVector& a, const CardinalityVector& b) {
  CardinalityVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

WeightPolynomial mul3(const WeightPolynomial& a, const WeightPolynomial& b, const WeightPolynomial& c,
                      const DegreeCaps* caps) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) return {};
  return WeightPolynomial::mul(WeightPolynomial::mul(a, b, caps), c, caps);
}

}  // namespace

std::vector<WeightPolynomial> split_all(const VectorFn& f1, const VectorFn& f2, CrossFactor& cross,
                                        const CardinalityVector& k, const DegreeCaps* caps) {
  std::vector<WeightPolynomial> out(total(k) + 1);
  for (const auto& s1 : bounded_vectors(k)) {
    check_deadline();
    const auto s2 = minus(k, s1);
    const WeightPolynomial a = f1(s1);
    if (a.is_zero()) continue;
    const WeightPolynomial b = f2(s2);
    if (b.is_zero()) continue;
    out[total(s1)] += mul3(a, b, cross(s1, s2), caps);
  }
  return out;
}

WeightPolynomial split_sum(const VectorFn& f1, const VectorFn& f2, const RMatrix& r, const CardinalityVector& k,
                           std::uint32_t m) {
  if (m > total(k)) throw std::invalid_argument("block size exceeds |k|");
  CrossFactor cross(r, {});
  return split_all(f1, f2, cross, k)[m];
}

std::string tracking_predicate(const std::string& edge) { return "@track:" + edge; }

// ---------------------------------------------------------------- tables

namespace {

Formula not_edge(std::size_t edge, Var a, Var b) { return Formula::negation(Formula::atom(edge, a, b)); }

class Table {
 public:
  virtual ~Table() = default;
  virtual const WeightPolynomial& at(const CardinalityVector& p) = 0;
};

/// A[p] = sum_m (-1)^(m+1) C(|p|,m) Psi_m(p): block of m indegree-zero nodes.
class DagTable : public Table {
 public:
  DagTable(const TypeSpace& space, const Formula& phi, const WeightFunction& wf, const std::vector<std::size_t>& types,
           std::size_t edge, const DegreeCaps& caps)
      : block_(space, Formula::conjunction({phi, not_edge(edge, Var::X, Var::Y)}), wf, types, caps),
        cross_(r_matrix(space, phi, not_edge(edge, Var::Y, Var::X), wf, types), caps),
        caps_(caps) {}

  const WeightPolynomial& at(const CardinalityVector& p) override {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    const std::uint32_t size = total(p);
    WeightPolynomial value(Rational(1));
    if (size > 0) {
      auto psi = split_all([&](const CardinalityVector& s) { return total(s) ? block_.wfomc_k(s) : WeightPolynomial(); },
                           [&](const CardinalityVector& s) { return at(s); }, cross_, p, caps());
      value = WeightPolynomial();
      for (std::uint32_t m = 1; m <= size; ++m) {
        Rational c(binomial(size, m));
        if (m % 2 == 0) c = -c;
        value += psi[m].scaled(c);
      }
    }
    return memo_.emplace(p, std::move(value)).first->second;
  }

 private:
  const DegreeCaps* caps() const { return caps_.empty() ? nullptr : &caps_; }
  Fo2Instance block_;
  CrossFactor cross_;
  DegreeCaps caps_;
  VectorMap<WeightPolynomial> memo_;
};

/// A[p] = wfomc(phi, p) - (1/|p|) sum_{m<|p|} C(|p|,m) m Psi_m(p): block is a
/// connected component.
class ConnectedTable : public Table {
 public:
  ConnectedTable(const TypeSpace& space, const Formula& phi, const WeightFunction& wf,
                 const std::vector<std::size_t>& types, std::size_t edge, const DegreeCaps& caps)
      : base_(space, phi, wf, types, caps),
        cross_(r_matrix(space, phi, not_edge(edge, Var::X, Var::Y), wf, types), caps),
        caps_(caps) {}

  const WeightPolynomial& at(const CardinalityVector& p) override {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    const std::uint32_t size = total(p);
    WeightPolynomial value;
    if (size > 0) {
      value = base_.wfomc_k(p);
      if (size > 1) {
        auto psi = split_all(
            [&](const CardinalityVector& s) {
              const auto m = total(s);
              return (m == 0 || m == size) ? WeightPolynomial() : at(s);
            },
            [&](const CardinalityVector& s) { return base_.wfomc_k(s); }, cross_, p, caps());
        WeightPolynomial sub;
        for (std::uint32_t m = 1; m < size; ++m) sub += psi[m].scaled(Rational(binomial(size, m) * m));
        value -= sub.scaled(Rational(1, size));
      }
    }
    return memo_.emplace(p, std::move(value)).first->second;
  }

 private:
  const DegreeCaps* caps() const { return caps_.empty() ? nullptr : &caps_; }
  Fo2Instance base_;
  CrossFactor cross_;
  DegreeCaps caps_;
  VectorMap<WeightPolynomial> memo_;
};

/// A[p] = sum_m C(|p|-1, m-1) Psi_m(p): block is the tree containing the
/// first element. Trees are connected blocks with exactly 2m-2 true R atoms,
/// read off a connected table where w(R) is replaced by a tracking symbol.
class ForestTable : public Table {
 public:
  ForestTable(const TypeSpace& space, const Formula& phi, const WeightFunction& wf,
              const std::vector<std::size_t>& types, std::size_t edge, const DegreeCaps& caps, std::uint32_t n_max)
      : cross_(r_matrix(space, phi, not_edge(edge, Var::X, Var::Y), wf, types), caps), caps_(caps) {
    const std::string& r = space.signature()[edge].name;
    edge_weight_ = caps.empty() ? wf.positive(r) : wf.positive(r).truncated(caps);
    WeightFunction tracked = wf;
    track_ = intern({tracking_predicate(r), Polarity::Positive});
    tracked.set(r, WeightValue(track_), wf.get(r).wbar);
    DegreeCaps tcaps = caps;
    tcaps[track_] = n_max >= 1 ? 2 * n_max - 2 : 0;
    connected_ = std::make_unique<ConnectedTable>(space, phi, tracked, types, edge, tcaps);
  }

  const WeightPolynomial& tree(const CardinalityVector& p) {
    auto it = trees_.find(p);
    if (it != trees_.end()) return it->second;
    const std::uint32_t size = total(p);
    WeightPolynomial value;
    if (size > 0) {
      const std::uint32_t e = 2 * size - 2;
      value = WeightPolynomial::mul(connected_->at(p).extract(track_, e),
                                    WeightPolynomial::pow(edge_weight_, e, caps()), caps());
    }
    return trees_.emplace(p, std::move(value)).first->second;
  }

  const WeightPolynomial& at(const CardinalityVector& p) override {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    const std::uint32_t size = total(p);
    WeightPolynomial value(Rational(1));
    if (size > 0) {
      auto psi = split_all([&](const CardinalityVector& s) { return tree(s); },
                           [&](const CardinalityVector& s) { return at(s); }, cross_, p, caps());
      value = WeightPolynomial();
      for (std::uint32_t m = 1; m <= size; ++m) value += psi[m].scaled(Rational(binomial(size - 1, m - 1)));
    }
    return memo_.emplace(p, std::move(value)).first->second;
  }

 private:
  const DegreeCaps* caps() const { return caps_.empty() ? nullptr : &caps_; }
  CrossFactor cross_;
  DegreeCaps caps_;
  WeightPolynomial edge_weight_;
  SymbolId track_ = 0;
  std::unique_ptr<ConnectedTable> connected_;
  VectorMap<WeightPolynomial> trees_;
  VectorMap<WeightPolynomial> memo_;
};

class PlainTable : public Table {
 public:
  PlainTable(const TypeSpace& space, const Formula& phi, const WeightFunction& wf,
             const std::vector<std::size_t>& types, const DegreeCaps& caps)
      : base_(space, phi, wf, types, caps) {}
  const WeightPolynomial& at(const CardinalityVector& p) override { return base_.wfomc_k(p); }

 private:
  Fo2Instance base_;
};

}  // namespace

struct AxiomEngine::Impl {
  TypeSpace space;
  Formula phi;
  std::vector<std::size_t> types;
  std::unique_ptr<Table> table;

  explicit Impl(const Signature& sig) : space(sig) {}
};

AxiomEngine::AxiomEngine(const Signature& sig, const Formula& phi, const WeightFunction& wf, BaseAxiom axiom,
                         std::size_t edge, DegreeCaps caps, std::uint32_t n_max)
    : impl_(std::make_unique<Impl>(sig)) {
  std::vector<Formula> parts{phi};
  if (axiom != BaseAxiom::None) {
    if (edge >= sig.size() || sig[edge].arity != 2) throw std::invalid_argument("axiom edge predicate must be binary");
    parts.push_back(not_edge(edge, Var::X, Var::X));
    if (axiom == BaseAxiom::Connected || axiom == BaseAxiom::Forest)
      parts.push_back(Formula::implies(Formula::atom(edge, Var::X, Var::Y), Formula::atom(edge, Var::Y, Var::X)));
  }
  impl_->phi = Formula::conjunction(std::move(parts));
  impl_->types = valid_one_types(impl_->space, impl_->phi);
  const auto& s = impl_->space;
  const auto& f = impl_->phi;
  const auto& t = impl_->types;
  switch (axiom) {
    case BaseAxiom::None: impl_->table = std::make_unique<PlainTable>(s, f, wf, t, caps); break;
    case BaseAxiom::Dag: impl_->table = std::make_unique<DagTable>(s, f, wf, t, edge, caps); break;
    case BaseAxiom::Connected: impl_->table = std::make_unique<ConnectedTable>(s, f, wf, t, edge, caps); break;
    case BaseAxiom::Forest: impl_->table = std::make_unique<ForestTable>(s, f, wf, t, edge, caps, n_max); break;
  }
}

AxiomEngine::~AxiomEngine() = default;

const TypeSpace& AxiomEngine::space() const { return impl_->space; }
const std::vector<std::size_t>& AxiomEngine::types() const { return impl_->types; }
const Formula& AxiomEngine::phi() const { return impl_->phi; }

WeightPolynomial AxiomEngine::count_k(const CardinalityVector& k) { return impl_->table->at(k); }

WeightPolynomial AxiomEngine::count_n(std::uint32_t n) {
  WeightPolynomial sum;
  for (const auto& k : compositions(n, impl_->types.size())) sum += count_k(k);
  return sum;
}

namespace {

WeightPolynomial full_k(const Signature& sig, const Formula& phi, std::size_t edge, const CardinalityVector& k,
                        const WeightFunction& wf, BaseAxiom axiom) {
  AxiomEngine engine(sig, phi, wf, axiom, edge, {}, total(k));
  const auto& types = engine.types();
  std::vector<int> where(engine.space().u(), -1);
  for (std::size_t a = 0; a < types.size(); ++a) where[types[a]] = static_cast<int>(a);
  CardinalityVector sub(types.size(), 0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k[i]) continue;
    if (where[i] < 0) return {};
    sub[where[i]] = k[i];
  }
  return engine.count_k(sub);
}

}  // namespace

WeightPolynomial wfomc_dag_k(const Signature& sig, const Formula& phi, std::size_t edge, const CardinalityVector& k,
                             const WeightFunction& wf) {
  return full_k(sig, phi, edge, k, wf, BaseAxiom::Dag);
}

WeightPolynomial wfomc_connected_k(const Signature& sig, const Formula& phi, std::size_t edge,
                                   const CardinalityVector& k, const WeightFunction& wf) {
  return full_k(sig, phi, edge, k, wf, BaseAxiom::Connected);
}

WeightPolynomial wfomc_forest_k(const Signature& sig, const Formula& phi, std::size_t edge,
                                const CardinalityVector& k, const WeightFunction& wf) {
  return full_k(sig, phi, edge, k, wf, BaseAxiom::Forest);
}

// ---------------------------------------------------------------- counting

namespace {

Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

Integer count_dags(std::uint32_t n) {
  std::vector<Integer> a(n + 1);
  a[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    Integer sum = 0;
    for (std::uint32_t l = 0; l < i; ++l) {
      Integer term = binomial(i, l) * pow2(std::uint64_t{l} * (i - l)) * a[l];
      if ((i - l) % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    a[i] = sum;
  }
  return a[n];
}

Integer count_connected(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("count_connected needs n >= 1");
  std::vector<Integer> c(n + 1);
  c[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    Integer sub = 0;
    for (std::uint32_t m = 1; m < i; ++m)
      sub += binomial(i, m) * m * c[m] * pow2(std::uint64_t{i - m} * (i - m - 1) / 2);
    c[i] = pow2(std::uint64_t{i} * (i - 1) / 2) - sub / i;
  }
  return c[n];
}

Integer count_forests(std::uint32_t n) {
  std::vector<Integer> f(n + 1);
  f[0] = 1;
  auto cayley = [](std::uint32_t m) {
    Integer r = 1;
    if (m >= 2) mpz_ui_pow_ui(r.get_mpz_t(), m, m - 2);
    return r;
  };
  for (std::uint32_t i = 1; i <= n; ++i) {
    Integer sum = 0;
    for (std::uint32_t m = 1; m <= i; ++m) sum += binomial(i - 1, m - 1) * cayley(m) * f[i - m];
    f[i] = sum;
  }
  return f[n];
}

}  // namespace wfomc
