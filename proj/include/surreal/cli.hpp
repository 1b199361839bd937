#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surreal/surreal.hpp"

namespace surreal::cli {

using nlohmann::json;

inline json to_json(const Ordinal& a) { return format_ordinal(a); }

inline json to_json(const SignExpansion& x) {
  json runs = json::array();
  for (const auto& r : x.runs())
    runs.push_back({{"sign", std::string(1, to_char(r.sign))}, {"len", format_ordinal(r.length)}});
  json tail;
  if (x.has_tail()) {
    std::string word;
    for (Sign s : x.tail_word()) word += to_char(s);
    tail = json{{"word", word}, {"repeat", "w"}};
  } else {
    tail = nullptr;
  }
  return json{{"kind", "surreal"},
              {"text", format_surreal(x)},
              {"runs", runs},
              {"tail", tail},
              {"dom", format_ordinal(x.birthday())}};
}

inline json to_json(const Note& n) {
  return json{{"id", n.id}, {"claim", n.claim}, {"computed", n.computed}, {"detail", n.detail}};
}

inline json notes_json(const Sequence& s) {
  json notes = json::array();
  for (const auto& n : s.notes()) notes.push_back(to_json(n));
  return notes;
}

inline std::string ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

namespace detail {

inline const Sequence& lookup_family(const std::string& name) {
  try {
    return find_family(name);
  } catch (const std::out_of_range&) {
    throw CLI::ValidationError("family", "unknown family '" + name + "'");
  }
}

inline std::vector<Ordinal> parse_depth_list(const std::string& list) {
  std::vector<Ordinal> depths;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string item =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) depths.push_back(parse_ordinal(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (depths.empty()) throw ParseError(0, "empty depth sample list");
  return depths;
}

inline void print_expansion(std::ostream& out, const SignExpansion& x, bool as_json) {
  if (as_json)
    out << to_json(x).dump(2) << "\n";
  else
    out << format_surreal(x) << "\n"
        << "dom: " << format_ordinal(x.birthday()) << "\n";
}

struct VerdictPrinter {
  std::ostream& out;
  const Sequence& seq;
  const LimitConfig& cfg;
  const BirthdayResult& birthday;
  bool as_json;

  json base() const {
    json depths = json::array();
    for (const auto& d : cfg.depth_samples) depths.push_back(format_ordinal(d));
    return json{{"kind", "verdict"},
                {"family", seq.name()},
                {"policy", cfg.policy == Policy::strict ? "strict" : "literal"},
                {"horizon", cfg.horizon},
                {"depths", depths},
                {"birthday",
                 {{"value", format_ordinal(birthday.value)},
                  {"exactness", birthday.exactness == Exactness::certified ? "certified" : "heuristic"}}},
                {"notes", notes_json(seq)}};
  }

  void header() const {
    out << "family: " << seq.name() << "\n"
        << "policy: " << (cfg.policy == Policy::strict ? "strict" : "literal")
        << "   horizon: " << cfg.horizon << "\n"
        << "limit birthday: " << format_ordinal(birthday.value) << " ("
        << (birthday.exactness == Exactness::certified ? "certified" : "heuristic") << ")\n";
  }

  void notes() const {
    for (const auto& n : seq.notes())
      out << "note [" << n.id << "]: claimed: " << n.claim << "\n"
          << "  computed: " << n.computed << "\n";
  }

  void operator()(const Converged& c) const {
    if (as_json) {
      json j = base();
      j["verdict"] = "converged";
      j["limit"] = to_json(c.limit);
      j["certified"] = c.certified;
      json table = json::array();
      for (const auto& row : c.table)
        table.push_back({{"depth", format_ordinal(row.depth)},
                         {"n0", row.n0},
                         {"checked", row.checked},
                         {"vacuous", row.vacuous}});
      j["n0_table"] = table;
      out << j.dump(2) << "\n";
      return;
    }
    header();
    out << "verdict: converged\n"
        << "limit: " << format_surreal(c.limit) << "\n";
    for (const auto& row : c.table) {
      out << "  depth " << format_ordinal(row.depth) << ": n0 = " << row.n0;
      if (row.vacuous)
        out << " (beyond horizon, certificate only)";
      else
        out << " (checked " << row.checked << ")";
      out << "\n";
    }
    notes();
  }

  void operator()(const NoLimit& nl) const {
    if (as_json) {
      json j = base();
      j["verdict"] = "no_limit";
      j["position"] = format_ordinal(nl.position);
      j["witness_indices"] = nl.witness_indices;
      out << j.dump(2) << "\n";
      return;
    }
    header();
    out << "verdict: no limit (position " << format_ordinal(nl.position)
        << " keeps oscillating; witnesses:";
    for (int n : nl.witness_indices) out << " " << n;
    out << ")\n";
    notes();
  }

  void operator()(const NotUnique& nu) const {
    if (as_json) {
      json j = base();
      j["verdict"] = "not_unique";
      json cands = json::array();
      for (const auto& c : nu.candidates) cands.push_back(to_json(c));
      j["candidates"] = cands;
      out << j.dump(2) << "\n";
      return;
    }
    header();
    out << "verdict: not unique; surviving candidates:\n";
    for (const auto& c : nu.candidates) out << "  " << format_surreal(c) << "\n";
    notes();
  }

  void operator()(const Inconclusive& inc) const {
    if (as_json) {
      json j = base();
      j["verdict"] = "inconclusive";
      j["reason"] = inc.reason;
      out << j.dump(2) << "\n";
      return;
    }
    header();
    out << "verdict: inconclusive (" << inc.reason << ")\n";
    notes();
  }
};

}  // namespace detail

/// Dispatch one command line (without the program name). Returns the process
/// exit code: 0 on success, 1 on a mathematical error, 2 on a usage or parse
/// error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  if (const char* memo = std::getenv("SURREAL_MEMO")) {
    set_add_cache_enabled(std::string(memo) != "off");
  }

  CLI::App app{"exact surreal-number arithmetic on sign expansions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string expr_a, expr_b, family, ratio;
  std::vector<std::string> lows, highs;
  std::string policy_name = "strict", depth_list;
  int horizon = 64, series_n = 5;
  long long probe_budget = 1 << 20;
  std::uint64_t prefix_len = 0;

  auto* c_eval = app.add_subcommand("eval", "canonicalize an expansion and report its birthday");
  c_eval->add_option("expr", expr_a, "sign expansion")->required();

  auto* c_cmp = app.add_subcommand("cmp", "compare two surreals");
  c_cmp->add_option("a", expr_a)->required();
  c_cmp->add_option("b", expr_b)->required();

  auto* c_add = app.add_subcommand("add", "add two finite-birthday surreals");
  c_add->add_option("a", expr_a)->required();
  c_add->add_option("b", expr_b)->required();

  auto* c_value = app.add_subcommand("value", "exact dyadic value of a finite expansion");
  c_value->add_option("expr", expr_a)->required();

  auto* c_rat = app.add_subcommand("rat", "expansion of an exact rational");
  c_rat->add_option("ratio", ratio, "rational P/Q")->required();
  c_rat->add_option("--prefix", prefix_len, "also print the first N signs");

  auto* c_options = app.add_subcommand("options", "left and right option sets");
  c_options->add_option("expr", expr_a)->required();

  auto* c_simplest = app.add_subcommand("simplest", "simplest surreal between bounds");
  c_simplest->add_option("--lo", lows, "lower bounds");
  c_simplest->add_option("--hi", highs, "upper bounds");

  auto* c_limit = app.add_subcommand("limit", "convergence check for a built-in family");
  c_limit->add_option("family", family)->required();
  c_limit->add_option("--policy", policy_name)->check(CLI::IsMember({"strict", "literal"}));
  c_limit->add_option("--horizon", horizon);
  c_limit->add_option("--depth-samples", depth_list, "comma-separated ordinals");
  c_limit->add_option("--probe-budget", probe_budget);

  auto* c_series = app.add_subcommand("series", "partial sums of a built-in series");
  c_series->add_option("series", expr_a)->required()->check(CLI::IsMember({"ones", "harmonic"}));
  c_series->add_option("--n", series_n);

  auto* c_birthday = app.add_subcommand("birthday", "birthday probe and limit birthday");
  c_birthday->add_option("family", family)->required();
  c_birthday->add_option("--horizon", horizon);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (c_eval->parsed()) {
      detail::print_expansion(out, parse_surreal(expr_a), as_json);
    } else if (c_cmp->parsed()) {
      const auto o = compare(parse_surreal(expr_a), parse_surreal(expr_b));
      if (as_json)
        out << json{{"kind", "ordering"}, {"result", ordering_name(o)}}.dump(2) << "\n";
      else
        out << ordering_name(o) << "\n";
    } else if (c_add->parsed()) {
      detail::print_expansion(out, add(parse_surreal(expr_a), parse_surreal(expr_b)), as_json);
    } else if (c_value->parsed()) {
      const Dyadic d = to_dyadic(parse_surreal(expr_a));
      if (as_json)
        out << json{{"kind", "dyadic"}, {"text", d.to_string()}}.dump(2) << "\n";
      else
        out << d.to_string() << "\n";
    } else if (c_rat->parsed()) {
      const Rational q = parse_rational(ratio);
      const SignExpansion x = from_rational(q);
      if (as_json) {
        json j = to_json(x);
        j["value"] = q.to_string();
        if (prefix_len > 0) {
          std::string signs;
          for (Sign s : rational_sign_prefix(q, prefix_len)) signs += to_char(s);
          j["prefix"] = signs;
        }
        out << j.dump(2) << "\n";
      } else {
        out << format_surreal(x) << "\n"
            << "dom: " << format_ordinal(x.birthday()) << "\n";
        if (prefix_len > 0) {
          out << "prefix:";
          for (Sign s : rational_sign_prefix(q, prefix_len)) out << ' ' << to_char(s);
          out << "\n";
        }
      }
    } else if (c_options->parsed()) {
      const SignExpansion x = parse_surreal(expr_a);
      const auto L = left_options(x);
      const auto R = right_options(x);
      auto fmt_set = [](const std::vector<SignExpansion>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) s += ", ";
          s += format_surreal(v[i]);
        }
        return s + "}";
      };
      if (as_json) {
        json jl = json::array(), jr = json::array();
        for (const auto& l : L) jl.push_back(to_json(l));
        for (const auto& r : R) jr.push_back(to_json(r));
        out << json{{"kind", "options"}, {"left", jl}, {"right", jr}}.dump(2) << "\n";
      } else {
        out << "L = " << fmt_set(L) << "\n"
            << "R = " << fmt_set(R) << "\n";
      }
    } else if (c_simplest->parsed()) {
      std::vector<SignExpansion> lo, hi;
      for (const auto& t : lows) lo.push_back(parse_surreal(t));
      for (const auto& t : highs) hi.push_back(parse_surreal(t));
      detail::print_expansion(out, simplest_between(lo, hi), as_json);
    } else if (c_limit->parsed()) {
      const Sequence& seq = detail::lookup_family(family);
      LimitConfig cfg;
      cfg.policy = policy_name == "literal" ? Policy::literal : Policy::strict;
      cfg.horizon = horizon;
      cfg.probe_budget = probe_budget;
      const BirthdayResult b = limit_birthday(seq, horizon);
      cfg.depth_samples =
          depth_list.empty() ? default_depth_samples(b.value) : detail::parse_depth_list(depth_list);
      const LimitVerdict v = check_limit(seq, cfg);
      std::visit(detail::VerdictPrinter{out, seq, cfg, b, as_json}, v);
    } else if (c_series->parsed()) {
      const bool ones = expr_a == "ones";
      const Sequence& seq = find_family(ones ? "ones_series" : "harmonic_series");
      if (series_n < 1) throw std::invalid_argument("series index must be positive");
      Rational sum;
      for (int k = 1; k <= series_n; ++k) sum += ones ? Rational(1) : Rational(BigInt(1), BigInt(k));
      const SignExpansion term = seq.term(series_n);
      if (as_json) {
        json j{{"kind", "series"}, {"name", expr_a}, {"n", series_n}, {"value", sum.to_string()}};
        j["term"] = to_json(term);
        out << j.dump(2) << "\n";
      } else {
        out << "partial sum " << series_n << ": " << sum.to_string() << "\n"
            << "expansion: " << format_surreal(term) << "\n"
            << "dom: " << format_ordinal(term.birthday()) << "\n";
      }
    } else if (c_birthday->parsed()) {
      const Sequence& seq = detail::lookup_family(family);
      const auto probe = birthday_probe(seq, horizon);
      const BirthdayResult b = limit_birthday(seq, horizon);
      if (as_json) {
        json jp = json::array();
        for (const auto& d : probe) jp.push_back(format_ordinal(d));
        out << json{{"kind", "birthday"},
                    {"family", seq.name()},
                    {"probe", jp},
                    {"value", format_ordinal(b.value)},
                    {"exactness", b.exactness == Exactness::certified ? "certified" : "heuristic"},
                    {"notes", notes_json(seq)}}
                   .dump(2)
            << "\n";
      } else {
        out << "birthday probe:";
        const std::size_t shown = std::min<std::size_t>(probe.size(), 12);
        for (std::size_t i = 0; i < shown; ++i) out << " " << format_ordinal(probe[i]);
        if (probe.size() > shown) out << " ...";
        out << "\n"
            << "limit birthday: " << format_ordinal(b.value) << " ("
            << (b.exactness == Exactness::certified ? "certified" : "heuristic") << ")\n";
        for (const auto& n : seq.notes())
          out << "note [" << n.id << "]: claimed: " << n.claim << "; computed: " << n.computed
              << "\n";
      }
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace surreal::cli
