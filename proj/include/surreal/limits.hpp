#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "surreal/notation.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/sequence.hpp"
#include "surreal/sign_expansion.hpp"

namespace surreal {

// Two readings of the truncation depth beta_n in the convergence criterion.
// The literal one, beta_n = min{alpha, dom X_n, dom X}, lets every prefix of
// a limit pass as well, so uniqueness fails; the strict one drops dom X from
// the minimum and compares restrictions as functions (domains included),
// which restores uniqueness on all the worked examples. strict is the
// default; literal is kept to demonstrate the gap.
enum class Policy { strict, literal };

struct LimitConfig {
  Policy policy = Policy::strict;
  int horizon = 64;
  std::vector<Ordinal> depth_samples;
  long long probe_budget = 1 << 20;
  // literal policy: candidates to test; defaults to the strict candidate and
  // its prefixes at the sampled depths
  std::optional<std::vector<SignExpansion>> literal_pool;
};

enum class Exactness { certified, heuristic };

struct BirthdayResult {
  Ordinal value;
  Exactness exactness = Exactness::heuristic;
};

struct DepthCheck {
  Ordinal depth;
  long long n0 = 0;    // agreement holds for every n >= n0
  int checked = 0;     // probed indices in (n0, horizon]
  bool vacuous = false;  // certificate window lies beyond the horizon
};

struct Converged {
  SignExpansion limit;
  std::vector<DepthCheck> table;
  bool certified = false;
};

struct NoLimit {
  Ordinal position;
  std::vector<int> witness_indices;
};

struct NotUnique {
  std::vector<SignExpansion> candidates;
};

struct Inconclusive {
  std::string reason;
};

using LimitVerdict = std::variant<Converged, NoLimit, NotUnique, Inconclusive>;

struct VerifyOutcome {
  bool pass = false;
  long long n0 = 0;
  std::optional<int> violating_n;
  int checked = 0;
  bool vacuous = false;
};

/// [dom X_1, ..., dom X_horizon].
inline std::vector<Ordinal> birthday_probe(const Sequence& s, int horizon) {
  if (horizon < 1) throw std::invalid_argument("birthday_probe: horizon must be >= 1");
  std::vector<Ordinal> out;
  out.reserve(static_cast<std::size_t>(horizon));
  for (int n = 1; n <= horizon; ++n) out.push_back(s.term_birthday(n));
  return out;
}

namespace detail {

// Check the declared birthday shape against everything the probe can see.
inline bool dom_pattern_consistent(const DomPattern& p, const std::vector<Ordinal>& doms) {
  switch (p.kind) {
    case DomPattern::Kind::constant:
      return std::all_of(doms.begin(), doms.end(), [&](const Ordinal& d) { return d == p.value; });
    case DomPattern::Kind::strictly_increasing: {
      for (std::size_t i = 0; i + 1 < doms.size(); ++i)
        if (!(doms[i] < doms[i + 1])) return false;
      return std::all_of(doms.begin(), doms.end(), [&](const Ordinal& d) { return d < p.value; });
    }
    case DomPattern::Kind::spikes_then_increasing: {
      // strictly increasing and below the sup over at least the second half
      const std::size_t start = doms.size() / 2;
      for (std::size_t i = start; i + 1 < doms.size(); ++i)
        if (!(doms[i] < doms[i + 1])) return false;
      for (std::size_t i = start; i < doms.size(); ++i)
        if (!(doms[i] < p.value)) return false;
      return true;
    }
    case DomPattern::Kind::recurrent_max: {
      bool attained = false;
      for (std::size_t i = 0; i < doms.size(); ++i) {
        if (doms[i] > p.value) return false;
        if (i >= doms.size() / 2 && doms[i] == p.value) attained = true;
      }
      return attained;
    }
  }
  return false;
}

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("probe budget exhausted") {}
};

// Memoized view of a sequence for one checker run; every fresh term, birthday
// or prefix evaluation charges one unit of the probe budget.
class ProbeCache {
 public:
  ProbeCache(const Sequence& s, long long budget) : s_(s), budget_(budget) {}

  const SignExpansion& term(int n) {
    auto it = terms_.find(n);
    if (it == terms_.end()) {
      charge();
      it = terms_.emplace(n, s_.term(n)).first;
    }
    return it->second;
  }

  const Ordinal& dom(int n) {
    auto it = doms_.find(n);
    if (it == doms_.end()) {
      charge();
      it = doms_.emplace(n, s_.term_birthday(n)).first;
    }
    return it->second;
  }

  const SignExpansion& prefix(int n, const Ordinal& depth) {
    auto key = std::make_pair(n, depth);
    auto it = prefixes_.find(key);
    if (it == prefixes_.end()) {
      charge();
      it = prefixes_.emplace(std::move(key), s_.term_prefix(n, depth)).first;
    }
    return it->second;
  }

 private:
  void charge() {
    if (++used_ > budget_) throw BudgetExhausted();
  }

  const Sequence& s_;
  long long budget_;
  long long used_ = 0;
  std::map<int, SignExpansion> terms_;
  std::map<int, Ordinal> doms_;
  std::map<std::pair<int, Ordinal>, SignExpansion> prefixes_;
};

inline bool agrees(ProbeCache& cache, const SignExpansion& x, int n, const Ordinal& depth,
                   Policy policy) {
  if (policy == Policy::strict) {
    // restrictions compared as functions: domains and signs both count
    return cache.prefix(n, depth) == x.prefix(depth);
  }
  const Ordinal beta = std::min({depth, cache.dom(n), x.birthday()});
  return cache.prefix(n, beta) == x.prefix(beta);
}

inline VerifyOutcome verify_with_cache(ProbeCache& cache, const Sequence& s,
                                       const SignExpansion& x, const Ordinal& depth, int horizon,
                                       Policy policy) {
  const bool is_certified_candidate =
      s.candidate_limit() && *s.candidate_limit() == x && s.stabilization();
  if (is_certified_candidate) {
    const long long n0 = std::max<long long>(1, s.stabilization()(depth));
    VerifyOutcome out;
    out.n0 = n0;
    out.vacuous = n0 >= horizon;
    for (long long n = n0 + 1; n <= horizon; ++n) {
      if (!agrees(cache, x, static_cast<int>(n), depth, policy)) {
        out.pass = false;
        out.violating_n = static_cast<int>(n);
        return out;
      }
      ++out.checked;
    }
    out.pass = true;
    return out;
  }

  // empirical: find the latest violating index
  int latest_violation = 0;
  for (int n = 1; n <= horizon; ++n)
    if (!agrees(cache, x, n, depth, policy)) latest_violation = n;
  VerifyOutcome out;
  out.checked = horizon;
  if (latest_violation == horizon) {
    out.pass = false;
    out.violating_n = horizon;
    return out;
  }
  out.pass = true;
  out.n0 = latest_violation + 1;
  return out;
}

}  // namespace detail

/// Limit birthday: the least limit ordinal at or above the limsup of the
/// birthday sequence. Certified when the family declares its birthday shape
/// (which the probe re-validates); otherwise a heuristic from the probe's
/// second half.
inline BirthdayResult limit_birthday(const Sequence& s, int horizon) {
  const std::vector<Ordinal> doms = birthday_probe(s, horizon);
  if (s.dom_pattern()) {
    if (!detail::dom_pattern_consistent(*s.dom_pattern(), doms))
      throw std::logic_error("limit_birthday: declared dom pattern inconsistent with probe for '" +
                             s.name() + "'");
    return BirthdayResult{least_limit_geq(declared_limsup(*s.dom_pattern())), Exactness::certified};
  }
  const Ordinal* max_dom = &doms[doms.size() / 2];
  for (std::size_t i = doms.size() / 2; i < doms.size(); ++i)
    if (doms[i] > *max_dom) max_dom = &doms[i];
  return BirthdayResult{least_limit_geq(*max_dom), Exactness::heuristic};
}

/// Does the sequence eventually agree with x at the given depth? Certified
/// candidates use the family's stabilization index (verified over whatever
/// window the horizon still reaches); anything else is checked empirically.
/// On a pass, n0 is the least probed index from which agreement holds for
/// every later probed n.
inline VerifyOutcome verify_candidate(const Sequence& s, const SignExpansion& x,
                                      const Ordinal& depth, int horizon, Policy policy) {
  if (horizon < 2) throw std::invalid_argument("verify_candidate: horizon must be >= 2");
  const BirthdayResult b = limit_birthday(s, horizon);
  if (!(depth < b.value))
    throw std::invalid_argument("verify_candidate: depth sample not below the limit birthday");
  detail::ProbeCache cache(s, std::numeric_limits<long long>::max());
  return detail::verify_with_cache(cache, s, x, depth, horizon, policy);
}

/// Depth samples to use when the caller has no preference: 1..16 below a
/// limit birthday of w, otherwise a mix of finite depths and limit-straddling
/// ordinals below b.
inline std::vector<Ordinal> default_depth_samples(const Ordinal& b) {
  std::vector<Ordinal> depths;
  if (b == Ordinal::omega()) {
    for (std::uint64_t i = 1; i <= 16; ++i) depths.push_back(Ordinal(i));
    return depths;
  }
  for (std::uint64_t i = 1; i <= 8; ++i) depths.push_back(Ordinal(i));
  const Ordinal w = Ordinal::omega();
  for (const Ordinal& cand :
       {w, w + Ordinal(std::uint64_t{1}), w + Ordinal(std::uint64_t{3}),
        Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), 2),
        Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), 2) + Ordinal(std::uint64_t{5}),
        Ordinal::power_of_omega(Ordinal(std::uint64_t{1}), 3)})
    if (cand < b) depths.push_back(cand);
  return depths;
}

namespace detail {

// Candidate from the probe alone: prefixes stable over the second half of
// the horizon at each sampled depth, chained, and extended through the final
// run when the terms keep outgrowing every sample. Anything stranger stays
// candidate-less and the checker reports Inconclusive.
inline std::optional<SignExpansion> derive_candidate(const LimitConfig& cfg, const Ordinal& b,
                                                     ProbeCache& cache) {
  const int h = cfg.horizon;
  const int half = h / 2 + 1;

  bool terms_stable = true;
  for (int n = half; n < h && terms_stable; ++n) terms_stable = cache.term(n) == cache.term(h);
  if (terms_stable) return cache.term(h);

  std::vector<Ordinal> depths = cfg.depth_samples;
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());

  std::vector<std::pair<Ordinal, SignExpansion>> stable;
  for (const auto& alpha : depths) {
    const SignExpansion& p = cache.prefix(h, alpha);
    for (int n = half; n < h; ++n)
      if (cache.prefix(n, alpha) != p) return std::nullopt;
    stable.emplace_back(alpha, p);
  }
  for (std::size_t i = 0; i + 1 < stable.size(); ++i)
    if (stable[i + 1].second.prefix(stable[i].first) != stable[i].second) return std::nullopt;

  const auto& [deepest, p] = stable.back();
  if (p.birthday() < deepest) return p;  // terms stopped growing below the deepest sample
  if (p.has_tail() || p.is_zero()) return std::nullopt;

  // the final run is still growing: extend it to fill the limit birthday
  std::vector<Run> runs = p.runs();
  Ordinal start;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) start += runs[i].length;
  runs.back().length = left_subtract(start, b);
  return SignExpansion(std::move(runs));
}

inline LimitVerdict witness_or_inconclusive(const Sequence& s, const LimitConfig& cfg,
                                            ProbeCache& cache, std::string reason) {
  if (s.oscillation_witness()) {
    const auto& w = *s.oscillation_witness();
    const Ordinal probe_depth = w.position + Ordinal(std::uint64_t{1});
    // verified when the position still takes different values over the
    // probe's second half
    std::map<int, int> last_seen;  // rank -> latest index
    for (int n = cfg.horizon / 2 + 1; n <= cfg.horizon; ++n) {
      const auto sign = cache.prefix(n, probe_depth).sign_at(w.position);
      const int rank = sign ? (*sign == Sign::plus ? 2 : 0) : 1;
      last_seen[rank] = n;
    }
    if (last_seen.size() >= 2) {
      std::vector<int> witnesses;
      for (const auto& [rank, n] : last_seen) witnesses.push_back(n);
      std::sort(witnesses.begin(), witnesses.end());
      return NoLimit{w.position, std::move(witnesses)};
    }
  }
  return Inconclusive{std::move(reason)};
}

}  // namespace detail

/// Run the convergence check for a sequence under the given policy. Converged
/// verdicts carry the per-depth stabilization table; NoLimit carries the
/// verified oscillating position; the literal policy reports NotUnique when
/// several pool candidates satisfy the printed condition.
inline LimitVerdict check_limit(const Sequence& s, const LimitConfig& cfg) {
  if (cfg.horizon < 2) throw std::invalid_argument("check_limit: horizon must be >= 2");
  if (cfg.depth_samples.empty())
    throw std::invalid_argument("check_limit: depth samples must be nonempty");
  const BirthdayResult b = limit_birthday(s, cfg.horizon);
  for (const auto& alpha : cfg.depth_samples)
    if (!(alpha < b.value))
      throw std::invalid_argument("check_limit: depth sample not below the limit birthday");

  detail::ProbeCache cache(s, cfg.probe_budget);
  try {
    std::optional<SignExpansion> candidate = s.candidate_limit();
    bool candidate_certified = candidate.has_value();
    if (!candidate) {
      candidate = detail::derive_candidate(cfg, b.value, cache);
      candidate_certified = false;
    }

    if (cfg.policy == Policy::strict) {
      if (!candidate)
        return detail::witness_or_inconclusive(s, cfg, cache, "no stable candidate at the probe");
      if (!(candidate->birthday() <= b.value))
        return Inconclusive{"candidate exceeds the limit birthday"};
      std::vector<DepthCheck> table;
      for (const auto& alpha : cfg.depth_samples) {
        const VerifyOutcome out =
            detail::verify_with_cache(cache, s, *candidate, alpha, cfg.horizon, cfg.policy);
        if (!out.pass)
          return detail::witness_or_inconclusive(
              s, cfg, cache,
              "candidate fails at depth " + format_ordinal(alpha) +
                  " (n = " + std::to_string(out.violating_n.value_or(-1)) + ")");
        table.push_back(DepthCheck{alpha, out.n0, out.checked, out.vacuous});
      }
      return Converged{*candidate, std::move(table), candidate_certified};
    }

    // literal policy
    if (!candidate)
      return detail::witness_or_inconclusive(s, cfg, cache, "no stable candidate at the probe");
    std::vector<SignExpansion> pool;
    if (cfg.literal_pool) {
      pool = *cfg.literal_pool;
    } else {
      for (const auto& alpha : cfg.depth_samples) pool.push_back(candidate->prefix(alpha));
      pool.push_back(*candidate);
    }
    std::sort(pool.begin(), pool.end(), [](const SignExpansion& a, const SignExpansion& b2) {
      if (a.birthday() != b2.birthday()) return a.birthday() < b2.birthday();
      return compare(a, b2) == std::strong_ordering::less;
    });
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<SignExpansion> survivors;
    for (const auto& y : pool) {
      if (!(y.birthday() <= b.value)) continue;  // outside H
      bool all_pass = true;
      for (const auto& alpha : cfg.depth_samples) {
        if (!detail::verify_with_cache(cache, s, y, alpha, cfg.horizon, cfg.policy).pass) {
          all_pass = false;
          break;
        }
      }
      if (all_pass) survivors.push_back(y);
    }
    if (survivors.empty())
      return detail::witness_or_inconclusive(s, cfg, cache, "no pool candidate survived");
    if (survivors.size() == 1)
      return Converged{survivors.front(), {}, candidate_certified};
    return NotUnique{std::move(survivors)};
  } catch (const detail::BudgetExhausted&) {
    return Inconclusive{"probe budget exhausted"};
  }
}

}  // namespace surreal
