#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "surreal/ordinal.hpp"
#include "surreal/rational.hpp"
#include "surreal/sign_expansion.hpp"

namespace surreal {

namespace detail {

// Prefix options of a finite expansion: the cuts just before each sign equal
// to `which`. The empty prefix (zero) is included here; it is needed by the
// addition recursion even though the displayed option sets leave it out.
inline std::vector<SignExpansion> option_values(const SignExpansion& x, Sign which,
                                                bool include_empty) {
  if (!x.is_finite())
    throw std::domain_error("option sets of an expansion with infinite birthday");
  std::vector<SignExpansion> out;
  std::uint64_t start = 0;
  for (const auto& r : x.runs()) {
    const std::uint64_t len = r.length.as_finite().value();
    if (r.sign == which) {
      for (std::uint64_t i = 0; i < len; ++i) {
        const std::uint64_t cut = start + i;
        if (cut == 0 && !include_empty) continue;
        out.push_back(x.prefix(Ordinal(cut)));
      }
    }
    start += len;
  }
  return out;
}

}  // namespace detail

/// L(X): prefixes cut just before a plus sign, ordered by birthday. The cut
/// before position 0 (the number zero) is omitted, matching the usual
/// displayed form of these sets.
inline std::vector<SignExpansion> left_options(const SignExpansion& x) {
  return detail::option_values(x, Sign::plus, false);
}

/// R(X): prefixes cut just before a minus sign, ordered by birthday.
inline std::vector<SignExpansion> right_options(const SignExpansion& x) {
  return detail::option_values(x, Sign::minus, false);
}

/// The simplest (shortest-birthday) surreal strictly between every low and
/// every high: grow from zero, appending + while trapped below a low and -
/// while trapped above a high. Requires every low < every high.
inline SignExpansion simplest_between(const std::vector<SignExpansion>& lows,
                                      const std::vector<SignExpansion>& highs) {
  for (const auto& lo : lows)
    for (const auto& hi : highs)
      if (compare(lo, hi) != std::strong_ordering::less)
        throw std::invalid_argument("simplest_between: bounds do not satisfy low < high");

  std::vector<Sign> signs;
  SignExpansion current;
  for (int guard = 0; guard < 1000000; ++guard) {
    bool below = false;
    bool above = false;
    for (const auto& lo : lows)
      if (compare(current, lo) != std::strong_ordering::greater) {
        below = true;
        break;
      }
    if (!below)
      for (const auto& hi : highs)
        if (compare(current, hi) != std::strong_ordering::less) {
          above = true;
          break;
        }
    if (!below && !above) return current;
    signs.push_back(below ? Sign::plus : Sign::minus);
    current = SignExpansion::from_signs(signs);
  }
  throw std::logic_error("simplest_between: walk failed to terminate");
}

namespace detail {

struct ExpansionPairHash {
  std::size_t operator()(const std::pair<SignExpansion, SignExpansion>& p) const {
    return hash_combine(hash_value(p.first), hash_value(p.second));
  }
};

using AddMemo =
    std::unordered_map<std::pair<SignExpansion, SignExpansion>, SignExpansion, ExpansionPairHash>;

inline std::mutex& add_cache_mutex() {
  static std::mutex m;
  return m;
}
inline AddMemo& add_cache() {
  static AddMemo cache;
  return cache;
}
inline std::atomic<bool>& add_cache_flag() {
  static std::atomic<bool> enabled{true};
  return enabled;
}

inline SignExpansion add_rec(const SignExpansion& x, const SignExpansion& y, AddMemo& local) {
  // addition is commutative, so key by the ordered pair
  auto key = compare(x, y) == std::strong_ordering::less ? std::make_pair(x, y)
                                                         : std::make_pair(y, x);
  if (auto it = local.find(key); it != local.end()) return it->second;
  if (add_cache_flag().load(std::memory_order_relaxed)) {
    std::lock_guard<std::mutex> lock(add_cache_mutex());
    if (auto it = add_cache().find(key); it != add_cache().end()) return it->second;
  }

  std::vector<SignExpansion> lows;
  std::vector<SignExpansion> highs;
  for (const auto& p : option_values(x, Sign::plus, true)) lows.push_back(add_rec(p, y, local));
  for (const auto& p : option_values(y, Sign::plus, true)) lows.push_back(add_rec(x, p, local));
  for (const auto& p : option_values(x, Sign::minus, true)) highs.push_back(add_rec(p, y, local));
  for (const auto& p : option_values(y, Sign::minus, true)) highs.push_back(add_rec(x, p, local));

  SignExpansion result = simplest_between(lows, highs);
  local.emplace(key, result);
  if (add_cache_flag().load(std::memory_order_relaxed)) {
    std::lock_guard<std::mutex> lock(add_cache_mutex());
    add_cache().emplace(std::move(key), result);
  }
  return result;
}

}  // namespace detail

/// Toggle the shared cross-call cache of addition results. Recursion within a
/// single call is always deduplicated; this only controls reuse across calls.
inline void set_add_cache_enabled(bool enabled) {
  detail::add_cache_flag().store(enabled, std::memory_order_relaxed);
  if (!enabled) {
    std::lock_guard<std::mutex> lock(detail::add_cache_mutex());
    detail::add_cache().clear();
  }
}

inline bool add_cache_enabled() {
  return detail::add_cache_flag().load(std::memory_order_relaxed);
}

inline std::size_t add_cache_size() {
  std::lock_guard<std::mutex> lock(detail::add_cache_mutex());
  return detail::add_cache().size();
}

/// Inductive surreal sum of two finite expansions: the simplest number
/// between the pairwise option sums.
inline SignExpansion add(const SignExpansion& x, const SignExpansion& y) {
  if (!x.is_finite() || !y.is_finite())
    throw std::domain_error("add: only finite-birthday expansions are supported");
  detail::AddMemo local;
  return detail::add_rec(x, y, local);
}

// ---------------------------------------------------------------------------
// Value conversions via the interval walk.
//
// The walk maintains bounds lo < q < hi (initially unbounded) and a cursor c:
// emit + when q > c and - when q < c, tightening the matching bound to c; the
// next cursor is lo+1 while hi is unbounded, hi-1 while lo is unbounded, and
// the midpoint once both are finite. The walk visits exactly the signs of q's
// expansion and terminates iff q is dyadic.

namespace detail {

struct WalkState {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Rational cursor;

  Rational next_cursor() const {
    if (!lo && !hi) return Rational(0);
    if (!hi) return *lo + Rational(1);
    if (!lo) return *hi - Rational(1);
    return (*lo + *hi) / Rational(2);
  }

  // returns the emitted sign; call only while cursor != q
  Sign step(const Rational& q) {
    Sign s;
    if (q > cursor) {
      s = Sign::plus;
      lo = cursor;
    } else {
      s = Sign::minus;
      hi = cursor;
    }
    cursor = next_cursor();
    return s;
  }
};

// First run of the expansion of q: |ceil| or |floor| copies of the leading
// sign, computed in closed form so huge integer parts stay cheap.
inline std::pair<Sign, BigInt> leading_run(const Rational& q) {
  if (!q.is_negative()) {
    BigInt count = q.floor();
    if (!q.is_integer()) ++count;
    return {Sign::plus, count};
  }
  const Rational mag = -q;
  BigInt count = mag.floor();
  if (!mag.is_integer()) ++count;
  return {Sign::minus, count};
}

inline std::uint64_t to_uint64_checked(const BigInt& v) {
  if (v < 0 || v > BigInt(UINT64_MAX)) throw std::overflow_error("run length out of range");
  return static_cast<std::uint64_t>(v);
}

// State after the leading run has been emitted in closed form.
inline WalkState state_after_leading_run(const Rational& q, const BigInt& count) {
  WalkState st;
  if (!q.is_negative()) {
    st.lo = Rational(count - 1, 1);
    st.cursor = Rational(count, 1);
  } else {
    st.hi = Rational(-(count - 1), 1);
    st.cursor = Rational(-count, 1);
  }
  return st;
}

}  // namespace detail

/// Expansion of a dyadic rational; always finite. Natural numbers come out as
/// +^n and the walk trace pins everything else (3/2 -> ++-, 3/4 -> +-+).
inline SignExpansion from_dyadic(const Dyadic& q) {
  const Rational target = q.as_rational();
  if (target.is_zero()) return SignExpansion();
  auto [sign, count] = detail::leading_run(target);
  std::vector<Run> runs{Run{sign, Ordinal(detail::to_uint64_checked(count))}};
  detail::WalkState st = detail::state_after_leading_run(target, count);
  std::vector<Sign> rest;
  while (st.cursor != target) rest.push_back(st.step(target));
  SignExpansion tail_part = SignExpansion::from_signs(rest);
  std::vector<Run> all = std::move(runs);
  for (const auto& r : tail_part.runs()) all.push_back(r);
  return SignExpansion(std::move(all));
}

/// Exact value of a finite expansion, replaying the walk.
inline Dyadic to_dyadic(const SignExpansion& x) {
  if (!x.is_finite()) throw std::domain_error("to_dyadic: expansion has infinite birthday");
  if (x.is_zero()) return Dyadic();
  detail::WalkState st;
  bool first = true;
  std::uint64_t steps = 0;
  for (const auto& r : x.runs()) {
    std::uint64_t len = r.length.as_finite().value();
    if (first) {
      // closed form for the leading run: the cursor counts 0, 1, 2, ...
      const BigInt count(len);
      st = detail::state_after_leading_run(
          r.sign == Sign::plus ? Rational(count, 1) : Rational(-count, 1), count);
      first = false;
      continue;
    }
    if ((steps += len) > (std::uint64_t{1} << 20))
      throw std::overflow_error("to_dyadic: expansion too deep");
    for (std::uint64_t i = 0; i < len; ++i) {
      if (r.sign == Sign::plus)
        st.lo = st.cursor;
      else
        st.hi = st.cursor;
      st.cursor = st.next_cursor();
    }
  }
  auto d = Dyadic::from_rational(st.cursor);
  if (!d) throw std::logic_error("to_dyadic: walk left the dyadic grid");
  return *d;
}

/// Number of walk steps before the value is reached: the birthday of
/// from_rational(q). Non-dyadic rationals never terminate, so their
/// expansions have birthday w.
inline Ordinal rational_birthday(const Rational& q) {
  if (!q.is_dyadic()) return Ordinal::omega();
  return from_dyadic(*Dyadic::from_rational(q)).birthday();
}

/// First `count` signs of the expansion of q (fewer if the expansion ends
/// sooner). Exact and cheap even when the full periodic tail would be huge.
inline std::vector<Sign> rational_sign_prefix(const Rational& q, std::uint64_t count) {
  std::vector<Sign> out;
  if (q.is_zero() || count == 0) return out;
  auto [sign, lead] = detail::leading_run(q);
  const std::uint64_t lead_len =
      lead > BigInt(count) ? count : detail::to_uint64_checked(lead);
  out.assign(lead_len, sign);
  if (out.size() >= count) return out;
  detail::WalkState st = detail::state_after_leading_run(q, lead);
  while (out.size() < count && st.cursor != q) out.push_back(st.step(q));
  return out;
}

/// Full canonical expansion of a rational: finite for dyadics, otherwise a
/// finite prefix plus a periodic tail found by remainder repetition in the
/// bit stream of the normalized position.
inline SignExpansion from_rational(const Rational& q) {
  if (auto d = Dyadic::from_rational(q)) return from_dyadic(*d);

  auto [sign, count] = detail::leading_run(q);
  std::vector<Run> runs{Run{sign, Ordinal(detail::to_uint64_checked(count))}};
  detail::WalkState st = detail::state_after_leading_run(q, count);

  // one literal step lands both bounds on finite values
  std::vector<Sign> prefix;
  while (!st.lo || !st.hi) prefix.push_back(st.step(q));

  // now q sits in (lo, hi); successive signs are the binary digits of the
  // normalized position t, and rational t makes the digit stream eventually
  // periodic with the remainders as the cycle detector
  Rational t = (q - *st.lo) / (*st.hi - *st.lo);
  std::map<Rational, std::size_t> seen;
  std::vector<Sign> digits;
  constexpr std::size_t kMaxPeriodSearch = 200000;
  std::size_t cycle_start = 0;
  for (;;) {
    if (auto it = seen.find(t); it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    if (digits.size() > kMaxPeriodSearch)
      throw std::overflow_error("from_rational: periodic tail too long to materialize");
    seen.emplace(t, digits.size());
    const Rational doubled = t + t;
    if (doubled > Rational(1)) {
      digits.push_back(Sign::plus);
      t = doubled - Rational(1);
    } else {
      digits.push_back(Sign::minus);
      t = doubled;
    }
  }

  for (Sign s : prefix) {
    // prefix signs are single steps; fold them into the run list
    if (!runs.empty() && runs.back().sign == s)
      runs.back().length += Ordinal(std::uint64_t{1});
    else
      runs.push_back(Run{s, Ordinal(std::uint64_t{1})});
  }
  for (std::size_t i = 0; i < cycle_start; ++i) {
    const Sign s = digits[i];
    if (!runs.empty() && runs.back().sign == s)
      runs.back().length += Ordinal(std::uint64_t{1});
    else
      runs.push_back(Run{s, Ordinal(std::uint64_t{1})});
  }
  std::vector<Sign> word(digits.begin() + static_cast<std::ptrdiff_t>(cycle_start), digits.end());
  return SignExpansion(std::move(runs), std::move(word));
}

}  // namespace surreal
