#include "wfomc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "wfomc/error.hpp"

namespace wfomc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty number");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ParseError("bad number '" + std::string(text) + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad number '" + std::string(text) + "'");
    s = digits + "/1" + std::string(frac, '0');
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && i == 0);
    if (!ok) throw ParseError("bad number '" + std::string(text) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad number '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational a = abs(q) * scale + Rational(1, 2);
  Integer v = a.get_num() / a.get_den();
  std::string digits = v.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (q < 0 && v != 0 ? "-" : "") + digits;
}

// ---------------------------------------------------------------- symbols

namespace {

struct Registry {
  std::mutex mu;
  std::map<WeightSymbol, SymbolId> ids;
  std::deque<WeightSymbol> info;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

SymbolId intern(const WeightSymbol& s) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.ids.find(s);
  if (it != r.ids.end()) return it->second;
  const auto id = static_cast<SymbolId>(r.info.size());
  r.info.push_back(s);
  r.ids.emplace(s, id);
  return id;
}

WeightSymbol symbol_info(SymbolId id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.info.at(id);
}

std::string symbol_name(SymbolId id) {
  const auto s = symbol_info(id);
  return (s.polarity == Polarity::Positive ? "w(" : "wbar(") + s.predicate + ")";
}

// ---------------------------------------------------------------- monomials

Monomial Monomial::of(SymbolId s, std::uint32_t e) {
  Monomial m;
  if (e) m.f_.emplace_back(s, e);
  return m;
}

std::uint32_t Monomial::exponent(SymbolId s) const {
  for (const auto& [sym, e] : f_)
    if (sym == s) return e;
  return 0;
}

Monomial Monomial::without(SymbolId s) const {
  Monomial m;
  for (const auto& f : f_)
    if (f.first != s) m.f_.push_back(f);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.f_.empty()) return *this;
  if (f_.empty()) return o;
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      m.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
      m.f_.push_back(o.f_[j++]);
    } else {
      m.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return m;
}

// ---------------------------------------------------------------- polynomials

WeightPolynomial::WeightPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

WeightPolynomial WeightPolynomial::symbol(SymbolId s) { return term(Monomial::of(s), Rational(1)); }

WeightPolynomial WeightPolynomial::term(Monomial m, Rational c) {
  WeightPolynomial p;
  c.canonicalize();
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

WeightPolynomial WeightPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  WeightPolynomial p;
  for (auto& t : terms) {
    t.second.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational WeightPolynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return Rational(0);
}

WeightPolynomial WeightPolynomial::operator+(const WeightPolynomial& o) const {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return o;
  WeightPolynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

WeightPolynomial WeightPolynomial::operator-() const {
  WeightPolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

WeightPolynomial WeightPolynomial::operator-(const WeightPolynomial& o) const { return *this + (-o); }

WeightPolynomial WeightPolynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  WeightPolynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

bool WeightPolynomial::over_cap(const Monomial& m, const DegreeCaps* caps) {
  if (!caps) return false;
  for (const auto& [s, e] : m.factors()) {
    auto it = caps->find(s);
    if (it != caps->end() && e > it->second) return true;
  }
  return false;
}

WeightPolynomial WeightPolynomial::mul(const WeightPolynomial& a, const WeightPolynomial& b,
                                       const DegreeCaps* caps) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) {
    auto r = b.scaled(a.terms_[0].second);
    return caps ? r.truncated(*caps) : r;
  }
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) {
    auto r = a.scaled(b.terms_[0].second);
    return caps ? r.truncated(*caps) : r;
  }
  std::map<Monomial, Rational> acc;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      if (over_cap(m, caps)) continue;
      prod = ca * cb;
      auto [it, fresh] = acc.try_emplace(std::move(m), prod);
      if (!fresh) it->second += prod;
    }
  }
  WeightPolynomial r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

WeightPolynomial WeightPolynomial::pow(const WeightPolynomial& p, std::uint64_t e, const DegreeCaps* caps) {
  WeightPolynomial result(Rational(1));
  if (e == 0) return result;
  if (p.is_constant()) {
    Rational c = p.constant_term(), r(1);
    while (e) {
      if (e & 1) r *= c;
      c *= c;
      e >>= 1;
    }
    return WeightPolynomial(r);
  }
  WeightPolynomial base = caps ? p.truncated(*caps) : p;
  while (true) {
    if (e & 1) result = mul(result, base, caps);
    e >>= 1;
    if (!e) break;
    base = mul(base, base, caps);
  }
  return result;
}

WeightPolynomial WeightPolynomial::truncated(const DegreeCaps& caps) const {
  WeightPolynomial r;
  for (const auto& t : terms_)
    if (!over_cap(t.first, &caps)) r.terms_.push_back(t);
  return r;
}

Rational WeightPolynomial::evaluate(const std::map<SymbolId, Rational>& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s);
      if (it == values.end()) throw std::out_of_range("no value for weight symbol " + symbol_name(s));
      Rational x(1);
      for (std::uint32_t k = 0; k < e; ++k) x *= it->second;
      v *= x;
    }
    total += v;
  }
  return total;
}

WeightPolynomial WeightPolynomial::substitute(const std::map<SymbolId, Rational>& values) const {
  std::map<Monomial, Rational> acc;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    Monomial rest;
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest = rest * Monomial::of(s, e);
      } else {
        for (std::uint32_t k = 0; k < e; ++k) v *= it->second;
      }
    }
    acc[rest] += v;
  }
  WeightPolynomial r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

WeightPolynomial WeightPolynomial::extract(SymbolId s, std::uint32_t e) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(s) == e) out.emplace_back(m.without(s), c);
  return from_terms(std::move(out));
}

std::map<std::uint32_t, WeightPolynomial> WeightPolynomial::by_exponent(SymbolId s) const {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) buckets[m.exponent(s)].emplace_back(m.without(s), c);
  std::map<std::uint32_t, WeightPolynomial> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

std::string WeightPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    if (i) os << " + ";
    os << c.get_str();
    for (const auto& [s, e] : m.factors()) {
      os << '*' << symbol_name(s);
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace wfomc
