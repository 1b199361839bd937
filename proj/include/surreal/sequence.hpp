#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surreal/arithmetic.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/rational.hpp"
#include "surreal/sign_expansion.hpp"

namespace surreal {

/// Machine-readable record of a known tension between a published claim about
/// a family and what the implemented definitions actually yield.
struct Note {
  std::string id;
  std::string claim;     // the claim as usually stated
  std::string computed;  // what the definitions produce here
  std::string detail;
};

struct OscillationWitness {
  Ordinal position;
  std::string description;
};

// An indexed family n -> sign expansion (n >= 1), optionally carrying
// exactness certificates:
//   * dom_pattern       declared shape of the birthday sequence,
//   * candidate_limit   the expected limit,
//   * stabilization     depth -> index from which full-depth agreement with
//                       the candidate holds for every later term,
//   * oscillation_witness a position that never settles.
// Certificates discharge the unbounded quantifiers that finite probing
// cannot; probes re-validate them on every reachable window.
//
// Families may also provide direct birthday/prefix evaluators. These must
// agree with dom(term(n)) and term(n)|_depth exactly; they exist because a
// term's full canonical form can be far larger than any prefix a checker
// needs (the periodic tail of a rational with a big denominator can have
// astronomical period while its first sixteen signs stay cheap).
class Sequence {
 public:
  using TermFn = std::function<SignExpansion(int)>;
  using DomFn = std::function<Ordinal(int)>;
  using PrefixFn = std::function<SignExpansion(int, const Ordinal&)>;
  using StabilizationFn = std::function<long long(const Ordinal&)>;

  Sequence(std::string name, TermFn term) : name_(std::move(name)), term_(std::move(term)) {}

  const std::string& name() const { return name_; }

  SignExpansion term(int n) const {
    check_index(n);
    return term_(n);
  }

  Ordinal term_birthday(int n) const {
    check_index(n);
    if (dom_fn_) return dom_fn_(n);
    return term_(n).birthday();
  }

  /// term(n) restricted to positions < depth, via the fast path when one is
  /// attached.
  SignExpansion term_prefix(int n, const Ordinal& depth) const {
    check_index(n);
    if (prefix_fn_) return prefix_fn_(n, depth);
    return term_(n).prefix(depth);
  }

  Sequence& with_dom_pattern(DomPattern p) {
    dom_pattern_ = std::move(p);
    return *this;
  }
  Sequence& with_candidate_limit(SignExpansion x) {
    candidate_limit_ = std::move(x);
    return *this;
  }
  Sequence& with_stabilization(StabilizationFn f) {
    stabilization_ = std::move(f);
    return *this;
  }
  Sequence& with_oscillation_witness(Ordinal position, std::string description) {
    witness_ = OscillationWitness{std::move(position), std::move(description)};
    return *this;
  }
  Sequence& with_dom_fn(DomFn f) {
    dom_fn_ = std::move(f);
    return *this;
  }
  Sequence& with_prefix_fn(PrefixFn f) {
    prefix_fn_ = std::move(f);
    return *this;
  }
  Sequence& with_note(Note n) {
    notes_.push_back(std::move(n));
    return *this;
  }

  const std::optional<DomPattern>& dom_pattern() const { return dom_pattern_; }
  const std::optional<SignExpansion>& candidate_limit() const { return candidate_limit_; }
  const StabilizationFn& stabilization() const { return stabilization_; }
  const std::optional<OscillationWitness>& oscillation_witness() const { return witness_; }
  const std::vector<Note>& notes() const { return notes_; }

 private:
  static void check_index(int n) {
    if (n < 1) throw std::invalid_argument("sequence index must be positive");
  }

  std::string name_;
  TermFn term_;
  std::optional<DomPattern> dom_pattern_;
  std::optional<SignExpansion> candidate_limit_;
  StabilizationFn stabilization_;
  std::optional<OscillationWitness> witness_;
  DomFn dom_fn_;
  PrefixFn prefix_fn_;
  std::vector<Note> notes_;
};

/// The constant family X_n = c.
inline Sequence constant_sequence(SignExpansion c, std::string name = "constant") {
  const Ordinal d = c.birthday();
  SignExpansion value = c;
  Sequence s(std::move(name), [value](int) { return value; });
  s.with_dom_pattern(DomPattern::constant(d))
      .with_candidate_limit(value)
      .with_stabilization([](const Ordinal&) -> long long { return 1; })
      .with_dom_fn([d](int) { return d; });
  return s;
}

namespace detail {

inline Rational partial_sum(const std::function<Rational(int)>& values, int n) {
  Rational s;
  for (int k = 1; k <= n; ++k) s += values(k);
  return s;
}

inline SignExpansion rational_prefix_expansion(const Rational& q, const Ordinal& depth) {
  if (auto finite = depth.as_finite()) {
    std::vector<Sign> signs = rational_sign_prefix(q, *finite);
    return SignExpansion::from_signs(signs);
  }
  return from_rational(q);  // depth at or beyond the whole expansion
}

}  // namespace detail

/// The sequence of partial sums of an infinite series, accumulated in exact
/// rational arithmetic and converted per term.
inline Sequence series(std::string name, std::function<Rational(int)> values) {
  auto sum = [values](int n) { return detail::partial_sum(values, n); };
  Sequence s(std::move(name), [sum](int n) { return from_rational(sum(n)); });
  s.with_dom_fn([sum](int n) { return rational_birthday(sum(n)); })
      .with_prefix_fn(
          [sum](int n, const Ordinal& depth) { return detail::rational_prefix_expansion(sum(n), depth); });
  return s;
}

namespace families {

inline Sequence naturals() {
  Sequence s("naturals", [](int n) { return from_ordinal(Ordinal(static_cast<std::uint64_t>(n))); });
  s.with_dom_pattern(DomPattern::strictly_increasing(Ordinal::omega()))
      .with_candidate_limit(constants::omega())
      .with_stabilization([](const Ordinal& depth) -> long long {
        return std::max<long long>(1, static_cast<long long>(depth.finite_tail()));
      })
      .with_dom_fn([](int n) { return Ordinal(static_cast<std::uint64_t>(n)); });
  return s;
}

/// X_n = 2n, the termwise double of the naturals.
inline Sequence doubled_naturals() {
  Sequence s("doubled_naturals",
             [](int n) { return from_ordinal(Ordinal(static_cast<std::uint64_t>(2 * n))); });
  s.with_dom_pattern(DomPattern::strictly_increasing(Ordinal::omega()))
      .with_candidate_limit(constants::omega())
      .with_stabilization([](const Ordinal& depth) -> long long {
        const long long m = static_cast<long long>(depth.finite_tail());
        return std::max<long long>(1, (m + 1) / 2);
      })
      .with_dom_fn([](int n) { return Ordinal(static_cast<std::uint64_t>(2 * n)); });
  return s;
}

/// X_n = 1 - 1/2^n = + - +^(n-1).
inline Sequence geometric() {
  Sequence s("geometric", [](int n) {
    return from_dyadic(Dyadic((BigInt(1) << n) - 1, static_cast<unsigned>(n)));
  });
  s.with_dom_pattern(DomPattern::strictly_increasing(Ordinal::omega()))
      .with_candidate_limit(constants::one_minus_epsilon())
      .with_stabilization([](const Ordinal& depth) -> long long {
        const long long m = static_cast<long long>(depth.finite_tail());
        return std::max<long long>(1, m - 1);
      })
      .with_dom_fn([](int n) { return Ordinal(static_cast<std::uint64_t>(n) + 1); });
  return s;
}

/// X_n = (-1)^(n-1) / 2^(n-1): displayed 0-indexed, its terms begin
/// +, -+, +--, -+++ and the first sign never settles.
inline Sequence alternating() {
  Sequence s("alternating", [](int n) {
    const int k = n - 1;
    BigInt num = (k % 2 == 0) ? 1 : -1;
    return from_dyadic(Dyadic(num, static_cast<unsigned>(k)));
  });
  s.with_dom_pattern(DomPattern::strictly_increasing(Ordinal::omega()))
      .with_oscillation_witness(Ordinal(), "the first sign alternates with the parity of n")
      .with_dom_fn([](int n) { return Ordinal(static_cast<std::uint64_t>(n)); });
  return s;
}

/// X_n = n/(n+1). Between consecutive dyadics 1 - 1/2^(m-1) < n/(n+1)
/// < 1 - 1/2^m the expansion agrees with 1 - eps ever deeper, so the limit
/// matches the geometric family's.
inline Sequence conway_fractions() {
  Sequence s("conway_fractions", [](int n) {
    return from_rational(Rational(BigInt(n), BigInt(n) + 1));
  });
  s.with_dom_pattern(DomPattern::recurrent_max(Ordinal::omega()))
      .with_candidate_limit(constants::one_minus_epsilon())
      .with_stabilization([](const Ordinal& depth) -> long long {
        const long long m = static_cast<long long>(depth.finite_tail());
        if (m <= 2) return 1;
        if (m > 62) return std::numeric_limits<long long>::max() / 2;
        return 1LL << (m - 2);
      })
      .with_dom_fn([](int n) { return rational_birthday(Rational(BigInt(n), BigInt(n) + 1)); })
      .with_prefix_fn([](int n, const Ordinal& depth) {
        return detail::rational_prefix_expansion(Rational(BigInt(n), BigInt(n) + 1), depth);
      });
  return s;
}

/// X_n = n*w = +^(w*n); birthdays w*n climb to w^2.
inline Sequence omega_multiples() {
  auto dom = [](int n) {
    return Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), static_cast<std::uint64_t>(n));
  };
  Sequence s("omega_multiples", [dom](int n) { return from_ordinal(dom(n)); });
  s.with_dom_pattern(DomPattern::strictly_increasing(
        Ordinal::power_of_omega(Ordinal(std::uint64_t{2}))))
      .with_candidate_limit(from_ordinal(Ordinal::power_of_omega(Ordinal(std::uint64_t{2}))))
      .with_stabilization([](const Ordinal& depth) -> long long {
        // depth = w*k + j below w^2: agreement needs w*n >= depth
        long long k = 0;
        for (const auto& t : depth.terms())
          if (t.exponent == Ordinal(std::uint64_t{1})) k = static_cast<long long>(t.coefficient);
        return std::max<long long>(1, k + (depth.finite_tail() > 0 ? 1 : 0));
      })
      .with_dom_fn(dom)
      .with_note(Note{
          "omega-multiples-limit-birthday",
          "limit birthday w^w",
          "limit birthday w^2",
          "the birthdays are dom X_n = w*n, whose limsup is w^2, already a limit "
          "ordinal; a limit birthday of w^w would need birthdays cofinal in w^w"});
  return s;
}

/// The family (1, spike of birthday w^w, 2, 3, 4, ...): one early outlier
/// that the limsup of the birthday sequence discards.
inline Sequence spike() {
  Sequence s("spike", [](int n) -> SignExpansion {
    if (n == 2) return from_ordinal(Ordinal::power_of_omega(Ordinal::omega()));
    return from_ordinal(Ordinal(static_cast<std::uint64_t>(n == 1 ? 1 : n - 1)));
  });
  s.with_dom_pattern(DomPattern::spikes_then_increasing(Ordinal::omega()))
      .with_candidate_limit(constants::omega())
      .with_stabilization([](const Ordinal& depth) -> long long {
        return std::max<long long>(1, static_cast<long long>(depth.finite_tail()) + 1);
      })
      .with_dom_fn([](int n) -> Ordinal {
        if (n == 2) return Ordinal::power_of_omega(Ordinal::omega());
        return Ordinal(static_cast<std::uint64_t>(n == 1 ? 1 : n - 1));
      });
  return s;
}

/// Partial sums of 1 + 1 + 1 + ...: the naturals again, as a series.
inline Sequence ones_series() {
  Sequence s = series("ones_series", [](int) { return Rational(1); });
  s.with_dom_pattern(DomPattern::strictly_increasing(Ordinal::omega()))
      .with_candidate_limit(constants::omega())
      .with_stabilization([](const Ordinal& depth) -> long long {
        return std::max<long long>(1, static_cast<long long>(depth.finite_tail()));
      });
  return s;
}

/// Partial sums of the harmonic series. The integer part grows without
/// bound, so every finite prefix eventually stabilizes to all plus and the
/// convergence criterion as printed is satisfied by w -- even though the
/// series is usually called divergent in the surreal sense because its
/// fractional part never settles. Both readings are surfaced via the note.
inline Sequence harmonic_series() {
  Sequence s = series("harmonic_series", [](int k) { return Rational(BigInt(1), BigInt(k)); });
  s.with_dom_pattern(DomPattern::recurrent_max(Ordinal::omega()))
      .with_candidate_limit(constants::omega())
      .with_stabilization([](const Ordinal& depth) -> long long {
        const long long m = static_cast<long long>(depth.finite_tail());
        if (m <= 1) return 1;
        if (m > 40) return std::numeric_limits<long long>::max() / 2;
        // H_n > ln(n+1), so beyond e^(m-1) every prefix of length m is all plus
        return static_cast<long long>(std::ceil(std::exp(static_cast<double>(m - 1)))) + 1;
      })
      .with_note(Note{
          "harmonic-series-surreal-divergence",
          "the harmonic series is divergent in the surreal sense: adding 1/(n+1) "
          "keeps growing the integer part but the fractional part never stabilizes",
          "under the convergence criterion as printed the partial sums converge to "
          "w = +^w: for every finite depth the prefixes eventually read all plus",
          "the criterion only constrains restrictions below the limit birthday w, "
          "which the growing integer parts satisfy; no fractional-part condition "
          "appears in it. The verdict follows the criterion and this note records "
          "the divergence reading it contradicts."});
  return s;
}

}  // namespace families

/// Registry of the built-in example families.
inline const std::vector<Sequence>& builtin_families() {
  static const std::vector<Sequence> all = [] {
    std::vector<Sequence> v;
    v.push_back(constant_sequence(from_dyadic(Dyadic(1)), "constant"));
    v.push_back(families::naturals());
    v.push_back(families::doubled_naturals());
    v.push_back(families::geometric());
    v.push_back(families::alternating());
    v.push_back(families::conway_fractions());
    v.push_back(families::omega_multiples());
    v.push_back(families::spike());
    v.push_back(families::ones_series());
    v.push_back(families::harmonic_series());
    return v;
  }();
  return all;
}

inline const Sequence& find_family(const std::string& name) {
  for (const auto& s : builtin_families())
    if (s.name() == name) return s;
  throw std::out_of_range("unknown family '" + name + "'");
}

}  // namespace surreal
