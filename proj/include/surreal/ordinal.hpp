#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace surreal {

// Ordinal below epsilon_0 in Cantor normal form
//
//   w^e1*c1 + w^e2*c2 + ... + w^ek*ck,   e1 > e2 > ... > ek,  ci >= 1.
//
// Terms are (exponent, coefficient) pairs whose exponents are Ordinals
// themselves; the empty term list is 0 and a natural number n is the single
// term w^0*n. CNF is unique, so structural equality is ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);

  static Ordinal omega();
  static Ordinal power_of_omega(Ordinal exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::optional<std::uint64_t> as_finite() const;

  /// Nonzero with no immediate predecessor, i.e. no w^0 term.
  bool is_limit() const;

  /// Coefficient of the w^0 term (0 when absent).
  std::uint64_t finite_tail() const;

  /// Everything except the w^0 term.
  Ordinal infinite_part() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  // Ordinal sum. Not commutative: trailing terms of the left operand below
  // the right operand's leading exponent are absorbed (1 + w == w).
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  Ordinal& operator+=(const Ordinal& b) {
    *this = *this + b;
    return *this;
  }

  static Ordinal from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

inline Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

inline Ordinal Ordinal::omega() { return power_of_omega(Ordinal(std::uint64_t{1})); }

inline Ordinal Ordinal::power_of_omega(Ordinal exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  Ordinal r;
  r.terms_.push_back(Term{std::move(exponent), coefficient});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline std::optional<std::uint64_t> Ordinal::as_finite() const {
  if (terms_.empty()) return std::uint64_t{0};
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coefficient;
  return std::nullopt;
}

inline bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

inline std::uint64_t Ordinal::finite_tail() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coefficient;
  return 0;
}

inline Ordinal Ordinal::infinite_part() const {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return *this;
  Ordinal r;
  r.terms_.assign(terms_.begin(), terms_.end() - 1);
  return r;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead)
      out.push_back(t);
    else
      break;
  }
  const std::size_t kept = out.size();
  const bool merge = kept < a.terms_.size() && a.terms_[kept].exponent == lead;
  out.push_back(b.terms_.front());
  if (merge) {
    const std::uint64_t extra = a.terms_[kept].coefficient;
    if (out.back().coefficient > UINT64_MAX - extra)
      throw std::overflow_error("ordinal coefficient overflow");
    out.back().coefficient += extra;
  }
  out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
  return Ordinal::from_terms(std::move(out));
}

/// The unique b with a + b == c. Requires a <= c.
inline Ordinal left_subtract(const Ordinal& a, const Ordinal& c) {
  if (a > c) throw std::invalid_argument("left_subtract: minuend smaller than subtrahend");
  if (a == c) return Ordinal();
  const auto& x = a.terms();
  const auto& y = c.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i].exponent == y[i].exponent &&
         x[i].coefficient == y[i].coefficient)
    ++i;
  std::vector<Ordinal::Term> out;
  if (i < x.size() && i < y.size() && x[i].exponent == y[i].exponent) {
    // same exponent, smaller coefficient on the left (a < c)
    out.push_back(Ordinal::Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
    out.insert(out.end(), y.begin() + i + 1, y.end());
  } else {
    // a exhausted, or a's exponent drops below c's: the rest of c survives
    out.insert(out.end(), y.begin() + i, y.end());
  }
  return Ordinal::from_terms(std::move(out));
}

/// Ordinal product m * r for finite m >= 1: the infinite part of r is
/// absorbed unchanged and only the finite tail scales.
inline Ordinal times_finite(std::uint64_t m, const Ordinal& r) {
  if (m == 0) throw std::invalid_argument("times_finite: multiplier must be positive");
  const std::uint64_t k = r.finite_tail();
  if (k != 0 && m > UINT64_MAX / k) throw std::overflow_error("times_finite overflow");
  return r.infinite_part() + Ordinal(m * k);
}

struct FiniteDivMod {
  Ordinal quotient;
  std::uint64_t remainder = 0;
};

/// a = m*quotient + remainder with 0 <= remainder < m. Limit ordinals divide
/// exactly; only the finite tail produces a remainder.
inline FiniteDivMod divmod_finite(const Ordinal& a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("divmod_finite: zero divisor");
  const std::uint64_t j = a.finite_tail();
  return FiniteDivMod{a.infinite_part() + Ordinal(j / m), j % m};
}

/// Smallest limit ordinal >= a, with 0 mapping to w.
inline Ordinal least_limit_geq(const Ordinal& a) {
  if (a.is_limit()) return a;
  return a.infinite_part() + Ordinal::omega();
}

// Declared shape of a domain (birthday) sequence, enough to take its
// limsup exactly without probing beyond a finite horizon.
struct DomPattern {
  enum class Kind {
    constant,                // dom X_n == value for all n
    strictly_increasing,     // doms strictly increase with supremum `value`
    spikes_then_increasing,  // finitely many outliers, then strictly increasing to `value`
    recurrent_max,           // doms never exceed `value` and attain it infinitely often
  };

  Kind kind = Kind::constant;
  Ordinal value;

  static DomPattern constant(Ordinal c) { return {Kind::constant, std::move(c)}; }
  static DomPattern strictly_increasing(Ordinal sup) {
    return {Kind::strictly_increasing, std::move(sup)};
  }
  static DomPattern spikes_then_increasing(Ordinal sup) {
    return {Kind::spikes_then_increasing, std::move(sup)};
  }
  static DomPattern recurrent_max(Ordinal m) { return {Kind::recurrent_max, std::move(m)}; }
};

/// Exact limsup of a domain sequence with a declared shape. Early spikes are
/// discarded: the limsup of (1, w^w, 2, 3, 4, ...) is w, not w^w + 1.
inline Ordinal declared_limsup(const DomPattern& p) {
  switch (p.kind) {
    case DomPattern::Kind::constant:
    case DomPattern::Kind::strictly_increasing:
    case DomPattern::Kind::spikes_then_increasing:
    case DomPattern::Kind::recurrent_max:
      return p.value;
  }
  throw std::invalid_argument("declared_limsup: unsupported pattern");
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_value(const Ordinal& a) {
  std::size_t seed = 0x5e0a1c;
  for (const auto& t : a.terms()) {
    seed = hash_combine(seed, hash_value(t.exponent));
    seed = hash_combine(seed, std::hash<std::uint64_t>{}(t.coefficient));
  }
  return seed;
}

}  // namespace surreal

template <>
struct std::hash<surreal::Ordinal> {
  std::size_t operator()(const surreal::Ordinal& a) const { return surreal::hash_value(a); }
};
