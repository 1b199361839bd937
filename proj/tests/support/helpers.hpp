#pragma once

// Shared test helpers: shorthand constructors, exhaustive enumerations, and
// independent oracles (interval-walk signs, brute-force simplest search,
// naive fraction accumulation) kept deliberately separate from the library's
// own code paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surreal/surreal.hpp"

namespace testsupport {

using surreal::BigInt;
using surreal::Ordinal;
using surreal::Run;
using surreal::Sign;
using surreal::SignExpansion;

inline SignExpansion se(const std::string& text) { return surreal::parse_surreal(text); }
inline Ordinal ord(const std::string& text) { return surreal::parse_ordinal(text); }

inline bool less(const SignExpansion& a, const SignExpansion& b) {
  return surreal::compare(a, b) == std::strong_ordering::less;
}

/// All finite expansions with birthday <= max_len, ordered by (length, bits).
inline std::vector<SignExpansion> enumerate_finite(int max_len) {
  std::vector<SignExpansion> out;
  for (int len = 0; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Sign> signs;
      for (int i = 0; i < len; ++i)
        signs.push_back((bits >> i) & 1 ? Sign::plus : Sign::minus);
      out.push_back(SignExpansion::from_signs(signs));
    }
  }
  return out;
}

/// Strictly-decreasing-exponent CNF enumeration over an exponent pool.
inline std::vector<Ordinal> enumerate_ordinals(const std::vector<Ordinal>& exponent_pool,
                                               int max_terms, std::uint64_t max_coeff) {
  std::vector<Ordinal> pool = exponent_pool;
  std::sort(pool.begin(), pool.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  std::vector<Ordinal> out{Ordinal()};
  std::vector<Ordinal::Term> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.push_back(Ordinal::from_terms(current));
    if (static_cast<int>(current.size()) == max_terms) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      for (std::uint64_t c = 1; c <= max_coeff; ++c) {
        current.push_back(Ordinal::Term{pool[i], c});
        self(self, i + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

// Plain fraction for oracle arithmetic; intentionally reimplements reduction
// and comparison rather than reusing the library types.
struct Frac {
  BigInt num;
  BigInt den;  // > 0

  static Frac make(BigInt n, BigInt d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g == 0) g = 1;
    return Frac{n / g, d / g};
  }
  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  int cmp(const Frac& o) const {
    const BigInt l = num * o.den;
    const BigInt r = o.num * den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
};

/// Interval-walk oracle: the first `count` signs of the expansion of p/q,
/// emitted one literal step at a time.
inline std::string walk_oracle(const BigInt& p, const BigInt& q, std::size_t count) {
  const Frac target = Frac::make(p, q);
  std::optional<Frac> lo, hi;
  Frac cursor{0, 1};
  std::string out;
  while (out.size() < count) {
    const int rel = target.cmp(cursor);
    if (rel == 0) break;
    if (rel > 0) {
      out += '+';
      lo = cursor;
    } else {
      out += '-';
      hi = cursor;
    }
    if (!hi)
      cursor = *lo + Frac{1, 1};
    else if (!lo)
      cursor = *hi - Frac{1, 1};
    else
      cursor = Frac::make(lo->num * hi->den + hi->num * lo->den, 2 * lo->den * hi->den);
  }
  return out;
}

inline std::string sign_string(const SignExpansion& x, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = x.sign_at(Ordinal(std::uint64_t{i}));
    if (!s) break;
    out += surreal::to_char(*s);
  }
  return out;
}

/// Enumerate expansions by birthday and return the unique strictly-between
/// candidate at the first birthday where any exists.
inline std::optional<SignExpansion> brute_force_simplest(const std::vector<SignExpansion>& lows,
                                                         const std::vector<SignExpansion>& highs,
                                                         int max_len) {
  for (int len = 0; len <= max_len; ++len) {
    std::vector<SignExpansion> hits;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Sign> signs;
      for (int i = 0; i < len; ++i)
        signs.push_back((bits >> i) & 1 ? Sign::plus : Sign::minus);
      SignExpansion cand = SignExpansion::from_signs(signs);
      bool ok = true;
      for (const auto& lo : lows)
        if (!less(lo, cand)) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& hi : highs)
          if (!less(cand, hi)) {
            ok = false;
            break;
          }
      if (ok) hits.push_back(cand);
    }
    if (!hits.empty()) {
      if (hits.size() != 1) return std::nullopt;  // not unique: let the caller fail loudly
      return hits.front();
    }
  }
  return std::nullopt;
}

/// Reference sign lookup on raw (possibly non-canonical) runs + word, walking
/// the parts exactly as written.
inline std::optional<Sign> raw_sign_at(const std::vector<Run>& raw_runs,
                                       const std::vector<Sign>& word, const Ordinal& pos) {
  Ordinal start;
  for (const auto& r : raw_runs) {
    Ordinal end = start + r.length;
    if (pos < end) return r.sign;
    start = end;
  }
  if (!word.empty() && pos < Ordinal::omega()) {
    const auto off = surreal::left_subtract(start, pos);
    return word[surreal::divmod_finite(off, word.size()).remainder];
  }
  return std::nullopt;
}

inline Sign random_sign(std::mt19937& rng) {
  return (rng() & 1) ? Sign::plus : Sign::minus;
}

/// Random possibly-non-canonical raw parts: runs with occasional repeated
/// signs and zero lengths, plus an optional word that may be a power or
/// misaligned at the seams.
inline std::pair<std::vector<Run>, std::vector<Sign>> random_raw_parts(std::mt19937& rng,
                                                                       bool allow_transfinite) {
  std::vector<Run> runs;
  const int k = static_cast<int>(rng() % 5);
  for (int i = 0; i < k; ++i) {
    Ordinal len(std::uint64_t{rng() % 4});  // may be zero
    if (allow_transfinite && rng() % 4 == 0) {
      const std::uint64_t c = 1 + rng() % 3;
      len = rng() % 3 == 0 ? Ordinal::power_of_omega(Ordinal(std::uint64_t{1 + rng() % 2}), c)
                           : Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), c) +
                                 Ordinal(std::uint64_t{rng() % 3});
    }
    runs.push_back(Run{random_sign(rng), len});
  }
  std::vector<Sign> word;
  const bool tail_ok = !allow_transfinite || std::all_of(runs.begin(), runs.end(), [](const Run& r) {
    return r.length.is_finite();
  });
  if (tail_ok && rng() % 2 == 0) {
    const int w = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < w; ++i) word.push_back(random_sign(rng));
    if (rng() % 3 == 0) {  // sometimes force a non-primitive word
      auto copy = word;
      word.insert(word.end(), copy.begin(), copy.end());
    }
  }
  return {std::move(runs), std::move(word)};
}

inline SignExpansion random_canonical(std::mt19937& rng, bool allow_transfinite) {
  auto [runs, word] = random_raw_parts(rng, allow_transfinite);
  return SignExpansion(std::move(runs), std::move(word));
}

/// Random finite expansion with birthday <= max_len.
inline SignExpansion random_finite(std::mt19937& rng, int max_len) {
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  std::vector<Sign> signs;
  for (int i = 0; i < len; ++i) signs.push_back(random_sign(rng));
  return SignExpansion::from_signs(signs);
}

}  // namespace testsupport
