#pragma once

// Exact rationals and a sparse multivariate polynomial ring over
// per-predicate weight symbols w(P) and wbar(P).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wfomc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "7", "-3/4", "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);
/// Canonical "p" or "p/q".
std::string to_string(const Rational& q);
/// Fixed-point rendering rounded half away from zero.
std::string to_decimal(const Rational& q, int places = 6);

enum class Polarity : std::uint8_t { Positive, Negative };

struct WeightSymbol {
  std::string predicate;
  Polarity polarity = Polarity::Positive;

  auto operator<=>(const WeightSymbol&) const = default;
};

using SymbolId = std::uint32_t;

/// Process-wide interning; thread safe.
SymbolId intern(const WeightSymbol& s);
WeightSymbol symbol_info(SymbolId id);
std::string symbol_name(SymbolId id);

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(SymbolId s, std::uint32_t e = 1);

  const std::vector<std::pair<SymbolId, std::uint32_t>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t exponent(SymbolId s) const;
  Monomial without(SymbolId s) const;

  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<SymbolId, std::uint32_t>> f_;  // sorted by symbol, exponents > 0
};

/// Upper bounds on symbol exponents. Truncating a product modulo the ideal
/// generated by the over-cap powers is a ring homomorphism, so caps can be
/// applied to every intermediate result.
using DegreeCaps = std::map<SymbolId, std::uint32_t>;

class WeightPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  WeightPolynomial() = default;  // zero
  WeightPolynomial(const Rational& c);  // NOLINT: constants embed implicitly
  WeightPolynomial(long c) : WeightPolynomial(Rational(c)) {}  // NOLINT
  static WeightPolynomial symbol(SymbolId s);
  static WeightPolynomial term(Monomial m, Rational c);
  /// Builds a canonical polynomial from arbitrary terms (merging duplicates).
  static WeightPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  WeightPolynomial operator+(const WeightPolynomial& o) const;
  WeightPolynomial operator-(const WeightPolynomial& o) const;
  WeightPolynomial operator-() const;
  WeightPolynomial operator*(const WeightPolynomial& o) const { return mul(*this, o, nullptr); }
  WeightPolynomial& operator+=(const WeightPolynomial& o) { return *this = *this + o; }
  WeightPolynomial& operator-=(const WeightPolynomial& o) { return *this = *this - o; }
  WeightPolynomial& operator*=(const WeightPolynomial& o) { return *this = *this * o; }
  WeightPolynomial scaled(const Rational& c) const;

  static WeightPolynomial mul(const WeightPolynomial& a, const WeightPolynomial& b, const DegreeCaps* caps);
  static WeightPolynomial pow(const WeightPolynomial& p, std::uint64_t e, const DegreeCaps* caps = nullptr);
  WeightPolynomial truncated(const DegreeCaps& caps) const;

  /// Substitutes every symbol; throws std::out_of_range for a missing value.
  Rational evaluate(const std::map<SymbolId, Rational>& values) const;
  /// Substitutes only the given symbols.
  WeightPolynomial substitute(const std::map<SymbolId, Rational>& values) const;
  /// Terms whose exponent of s equals e, with s removed.
  WeightPolynomial extract(SymbolId s, std::uint32_t e) const;
  /// Buckets terms by the exponent of s (s removed).
  std::map<std::uint32_t, WeightPolynomial> by_exponent(SymbolId s) const;

  bool operator==(const WeightPolynomial&) const = default;
  std::string to_string() const;

 private:
  static bool over_cap(const Monomial& m, const DegreeCaps* caps);
  std::vector<Term> terms_;  // sorted by monomial, nonzero coefficients
};

}  // namespace wfomc
