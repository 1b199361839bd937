#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surreal/ordinal.hpp"

namespace surreal {

enum class Sign : std::uint8_t { minus = 0, plus = 1 };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct Run {
  Sign sign = Sign::plus;
  Ordinal length;

  friend bool operator==(const Run& a, const Run& b) {
    return a.sign == b.sign && a.length == b.length;
  }
};

// A surreal number as its sign expansion: a function from an ordinal (the
// birthday) to {+,-}, stored as maximal runs with Ordinal lengths plus an
// optional periodic tail (a finite word repeated w times).
//
// Canonical form, enforced by every constructor:
//   * adjacent runs carry opposite signs and have length >= 1;
//   * if a tail is present, every run length is finite, the word is
//     primitive and contains both signs, and both seams (prefix/word and
//     word/word) fall on run boundaries, with the cut as early as possible.
// Canonical forms are unique, so structural equality is pointwise equality
// of the underlying functions.
class SignExpansion {
 public:
  SignExpansion() = default;

  explicit SignExpansion(std::vector<Run> runs, std::vector<Sign> tail_word = {})
      : runs_(std::move(runs)), tail_(std::move(tail_word)) {
    canonicalize();
  }

  static SignExpansion from_signs(const std::vector<Sign>& signs) {
    std::vector<Run> runs;
    for (Sign s : signs) {
      if (!runs.empty() && runs.back().sign == s)
        runs.back().length += Ordinal(std::uint64_t{1});
      else
        runs.push_back(Run{s, Ordinal(std::uint64_t{1})});
    }
    return SignExpansion(std::move(runs));
  }

  const std::vector<Run>& runs() const { return runs_; }
  const std::vector<Sign>& tail_word() const { return tail_; }
  bool has_tail() const { return !tail_.empty(); }
  bool is_zero() const { return runs_.empty() && tail_.empty(); }

  /// Finite birthday: no tail and no transfinite run.
  bool is_finite() const {
    if (has_tail()) return false;
    for (const auto& r : runs_)
      if (!r.length.is_finite()) return false;
    return true;
  }

  /// dom X: the ordinal sum of the run lengths (w when a tail is present,
  /// since the finite prefix is absorbed).
  Ordinal birthday() const {
    Ordinal d;
    for (const auto& r : runs_) d += r.length;
    if (has_tail()) d += Ordinal::omega();
    return d;
  }

  std::optional<Sign> sign_at(const Ordinal& position) const {
    Ordinal start;
    for (const auto& r : runs_) {
      Ordinal end = start + r.length;
      if (position < end) return r.sign;
      start = std::move(end);
    }
    if (has_tail() && position < Ordinal::omega()) {
      const Ordinal offset = left_subtract(start, position);
      return tail_[divmod_finite(offset, tail_.size()).remainder];
    }
    return std::nullopt;
  }

  /// The restriction X|_cut: the prefix on positions < min(cut, dom X).
  /// Cutting at or beyond the birthday returns X unchanged.
  SignExpansion prefix(const Ordinal& cut) const {
    if (cut >= birthday()) return *this;
    std::vector<Run> out;
    Ordinal start;
    for (const auto& r : runs_) {
      Ordinal end = start + r.length;
      if (cut >= end) {
        out.push_back(r);
        start = std::move(end);
        continue;
      }
      if (cut > start) out.push_back(Run{r.sign, left_subtract(start, cut)});
      return SignExpansion(std::move(out));
    }
    // inside the tail; cut is finite because dom == w here
    const std::uint64_t n = left_subtract(start, cut).as_finite().value();
    if (n > kMaxMaterialize) throw std::length_error("sign expansion prefix too long to materialize");
    for (std::uint64_t i = 0; i < n; ++i) {
      const Sign s = tail_[i % tail_.size()];
      if (!out.empty() && out.back().sign == s)
        out.back().length += Ordinal(std::uint64_t{1});
      else
        out.push_back(Run{s, Ordinal(std::uint64_t{1})});
    }
    return SignExpansion(std::move(out));
  }

  SignExpansion negated() const {
    std::vector<Run> runs = runs_;
    for (auto& r : runs) r.sign = opposite(r.sign);
    std::vector<Sign> word = tail_;
    for (auto& s : word) s = opposite(s);
    return SignExpansion(std::move(runs), std::move(word));
  }

  friend SignExpansion operator-(const SignExpansion& x) { return x.negated(); }

  bool operator==(const SignExpansion&) const = default;

 private:
  static constexpr std::uint64_t kMaxMaterialize = std::uint64_t{1} << 22;

  void canonicalize() {
    // merge adjacent same-sign runs, drop empty ones
    std::vector<Run> merged;
    for (auto& r : runs_) {
      if (r.length.is_zero()) continue;
      if (!merged.empty() && merged.back().sign == r.sign)
        merged.back().length += r.length;
      else
        merged.push_back(std::move(r));
    }
    runs_ = std::move(merged);
    if (tail_.empty()) return;

    // a single-sign word repeated w times is just a run of length w
    if (std::all_of(tail_.begin(), tail_.end(), [&](Sign s) { return s == tail_[0]; })) {
      const Sign s = tail_[0];
      tail_.clear();
      if (!runs_.empty() && runs_.back().sign == s)
        runs_.back().length += Ordinal::omega();
      else
        runs_.push_back(Run{s, Ordinal::omega()});
      return;
    }

    for (const auto& r : runs_)
      if (!r.length.is_finite())
        throw std::domain_error(
            "sign expansion: a periodic tail after a transfinite run is not representable");

    // primitive root of the word
    const std::size_t p = tail_.size();
    for (std::size_t d = 1; d <= p / 2; ++d) {
      if (p % d != 0) continue;
      bool repeats = true;
      for (std::size_t i = d; i < p && repeats; ++i) repeats = tail_[i] == tail_[i - d];
      if (repeats) {
        tail_.resize(d);
        break;
      }
    }

    // rotate so both seams (prefix/word and word/word) are run boundaries;
    // moving the word's leading run into the prefix fixes both at once
    if (tail_.front() == tail_.back() ||
        (!runs_.empty() && runs_.back().sign == tail_.front())) {
      std::size_t lead = 1;
      while (lead < tail_.size() && tail_[lead] == tail_[0]) ++lead;
      const Sign s = tail_[0];
      if (!runs_.empty() && runs_.back().sign == s)
        runs_.back().length += Ordinal(lead);
      else
        runs_.push_back(Run{s, Ordinal(lead)});
      std::rotate(tail_.begin(), tail_.begin() + static_cast<std::ptrdiff_t>(lead), tail_.end());
    }

    // pull the cut as far back as possible: absorb trailing prefix runs that
    // already lie on the periodic orbit, one whole word-run at a time
    while (!runs_.empty()) {
      std::size_t rl = 1;
      while (rl < tail_.size() && tail_[tail_.size() - 1 - rl] == tail_.back()) ++rl;
      if (runs_.back().sign == tail_.back() && runs_.back().length == Ordinal(rl)) {
        std::rotate(tail_.begin(), tail_.end() - static_cast<std::ptrdiff_t>(rl), tail_.end());
        runs_.pop_back();
      } else {
        break;
      }
    }
  }

  std::vector<Run> runs_;
  std::vector<Sign> tail_;
};

namespace detail {

// Shape of one expansion on a half-open segment: a constant run or a slice
// of the periodic tail at a known phase.
struct PieceDesc {
  bool periodic = false;
  Sign sign = Sign::plus;
  const std::vector<Sign>* word = nullptr;
  std::uint64_t phase = 0;

  Sign at(std::uint64_t j) const {
    return periodic ? (*word)[(phase + j) % word->size()] : sign;
  }
  std::uint64_t period() const { return periodic ? word->size() : 1; }
};

inline PieceDesc piece_at(const SignExpansion& x, const Ordinal& pos) {
  Ordinal start;
  for (const auto& r : x.runs()) {
    Ordinal end = start + r.length;
    if (pos < end) return PieceDesc{false, r.sign, nullptr, 0};
    start = std::move(end);
  }
  // inside the tail; pos and start are finite here
  const std::uint64_t offset = left_subtract(start, pos).as_finite().value();
  return PieceDesc{true, Sign::plus, &x.tail_word(), offset % x.tail_word().size()};
}

}  // namespace detail

/// Least position where x and y differ as partial functions (a position where
/// one is defined and the other is not counts). Empty result means pointwise
/// identical.
inline std::optional<Ordinal> first_difference(const SignExpansion& x, const SignExpansion& y) {
  if (x == y) return std::nullopt;  // canonical forms are unique
  const Ordinal dx = x.birthday();
  const Ordinal dy = y.birthday();
  const Ordinal& end_all = std::max(dx, dy);

  std::vector<Ordinal> bounds;
  auto collect = [&bounds](const SignExpansion& e) {
    Ordinal start;
    bounds.push_back(start);
    for (const auto& r : e.runs()) {
      start += r.length;
      bounds.push_back(start);
    }
    bounds.push_back(e.birthday());
  };
  collect(x);
  collect(y);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const Ordinal& b = bounds[i];
    if (b >= end_all) break;
    if (b >= dx || b >= dy) return b;  // one side ran out first
    const Ordinal& e = bounds[i + 1];

    const detail::PieceDesc px = detail::piece_at(x, b);
    const detail::PieceDesc py = detail::piece_at(y, b);
    if (!px.periodic && !py.periodic) {
      if (px.sign != py.sign) return b;
      continue;
    }
    // at least one periodic piece: b is finite, and checking one common
    // period decides the whole segment
    const std::uint64_t common = std::lcm(px.period(), py.period());
    std::uint64_t limit = common;
    if (auto len = left_subtract(b, e).as_finite(); len && *len < common) limit = *len;
    for (std::uint64_t j = 0; j < limit; ++j)
      if (px.at(j) != py.at(j)) return b + Ordinal(j);
  }
  return std::nullopt;
}

/// Total order on surreals: at the first difference, minus < undefined < plus.
inline std::strong_ordering compare(const SignExpansion& x, const SignExpansion& y) {
  const auto d = first_difference(x, y);
  if (!d) return std::strong_ordering::equal;
  auto rank = [](const std::optional<Sign>& s) { return s ? (*s == Sign::plus ? 2 : 0) : 1; };
  return rank(x.sign_at(*d)) <=> rank(y.sign_at(*d));
}

inline std::strong_ordering operator<=>(const SignExpansion& x, const SignExpansion& y) {
  return compare(x, y);
}

/// X is simpler than Y: a strict initial segment (dom X < dom Y and Y agrees
/// with X everywhere below dom X).
inline bool is_simpler(const SignExpansion& x, const SignExpansion& y) {
  return x.birthday() < y.birthday() && y.prefix(x.birthday()) == x;
}

/// The ordinal a as a surreal: a single run of plus signs.
inline SignExpansion from_ordinal(const Ordinal& a) {
  if (a.is_zero()) return SignExpansion();
  return SignExpansion({Run{Sign::plus, a}});
}

// The named expansions used throughout: w, eps, w-1, w/2, sqrt(w), 2w, 1-eps.
namespace constants {

inline SignExpansion omega() { return from_ordinal(Ordinal::omega()); }

inline SignExpansion epsilon() {
  return SignExpansion({Run{Sign::plus, 1}, Run{Sign::minus, Ordinal::omega()}});
}

inline SignExpansion omega_minus_one() {
  return SignExpansion({Run{Sign::plus, Ordinal::omega()}, Run{Sign::minus, 1}});
}

inline SignExpansion half_omega() {
  return SignExpansion({Run{Sign::plus, Ordinal::omega()}, Run{Sign::minus, Ordinal::omega()}});
}

inline SignExpansion sqrt_omega() {
  return SignExpansion({Run{Sign::plus, Ordinal::omega()},
                        Run{Sign::minus, Ordinal::power_of_omega(Ordinal(std::uint64_t{2}))}});
}

inline SignExpansion twice_omega() {
  return from_ordinal(Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), 2));
}

/// 1 - eps: birthday w, validated through the limit of 1 - 1/2^n.
inline SignExpansion one_minus_epsilon() {
  return SignExpansion({Run{Sign::plus, 1}, Run{Sign::minus, 1}, Run{Sign::plus, Ordinal::omega()}});
}

}  // namespace constants

inline std::size_t hash_value(const SignExpansion& x) {
  std::size_t seed = 0x51f0;
  for (const auto& r : x.runs()) {
    seed = hash_combine(seed, static_cast<std::size_t>(r.sign));
    seed = hash_combine(seed, hash_value(r.length));
  }
  for (Sign s : x.tail_word()) seed = hash_combine(seed, static_cast<std::size_t>(s) + 7);
  return seed;
}

}  // namespace surreal

template <>
struct std::hash<surreal::SignExpansion> {
  std::size_t operator()(const surreal::SignExpansion& x) const { return surreal::hash_value(x); }
};
