#pragma once

#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surreal/arithmetic.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/rational.hpp"
#include "surreal/sign_expansion.hpp"

namespace surreal {

/// Syntax error carrying the offending input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Minimal cursor over the input; whitespace is insignificant between atoms.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char take() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    return text_[pos_++];
  }
  void expect(char c) {
    const std::size_t at = position();
    if (take() != c) throw ParseError(at, std::string("expected '") + c + "'");
  }
  std::size_t position() {
    skip_ws();
    return pos_;
  }

  std::uint64_t take_nat() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(at, "expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError(at, "number out of range");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string take_word() {
    skip_ws();
    const std::size_t at = pos_;
    std::string w;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      w += text_[pos_++];
    if (w.empty()) throw ParseError(at, "expected a name");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Ordinal parse_ordinal_body(Scanner& sc);

// atom := 'w' | nat | '(' ordinal ')'
inline Ordinal parse_ordinal_atom(Scanner& sc) {
  const char c = sc.peek();
  if (c == 'w') {
    sc.take();
    return Ordinal::omega();
  }
  if (c == '(') {
    sc.take();
    Ordinal inner = parse_ordinal_body(sc);
    sc.expect(')');
    return inner;
  }
  return Ordinal(sc.take_nat());
}

// term := 'w' ('^' atom)? ('*' nat)? | nat
// ordinal := term ('+' term)*, accepted only in strict CNF order
inline Ordinal parse_ordinal_body(Scanner& sc) {
  std::vector<Ordinal::Term> terms;
  bool saw_zero = false;
  for (;;) {
    const std::size_t at = sc.position();
    Ordinal exponent;
    std::uint64_t coefficient = 0;
    if (sc.peek() == 'w') {
      sc.take();
      exponent = Ordinal(std::uint64_t{1});
      coefficient = 1;
      if (sc.peek() == '^') {
        sc.take();
        exponent = parse_ordinal_atom(sc);
      }
      if (sc.peek() == '*') {
        sc.take();
        coefficient = sc.take_nat();
      }
      if (coefficient == 0) throw ParseError(at, "zero coefficient");
      if (exponent.is_zero()) throw ParseError(at, "w^0 is written as a plain number");
    } else {
      coefficient = sc.take_nat();
      if (coefficient == 0) {
        saw_zero = true;
      }
    }
    if (coefficient > 0) {
      if (!terms.empty() && !(terms.back().exponent > exponent))
        throw ParseError(at, "exponents must strictly decrease");
      if (saw_zero) throw ParseError(at, "unexpected term after 0");
      terms.push_back(Ordinal::Term{std::move(exponent), coefficient});
    } else if (!terms.empty() || sc.peek() == '+') {
      throw ParseError(at, "zero term in a sum");
    }
    if (sc.peek() == '+') {
      sc.take();
      continue;
    }
    break;
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace detail

/// Parse CNF ordinal notation: `w` for omega, `^` exponent, `*` coefficient,
/// `+` between strictly decreasing terms, e.g. `w^2*3 + w + 4`.
inline Ordinal parse_ordinal(std::string_view text) {
  detail::Scanner sc(text);
  Ordinal a = detail::parse_ordinal_body(sc);
  if (!sc.done()) throw ParseError(sc.position(), "trailing input after ordinal");
  return a;
}

namespace detail {

inline std::string format_ordinal_atom(const Ordinal& a, const std::string& body) {
  if (a == Ordinal::omega()) return "w";
  if (a.is_finite()) return std::to_string(*a.as_finite());
  return "(" + body + ")";
}

}  // namespace detail

inline std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal(std::uint64_t{1})))
      out += "^" + detail::format_ordinal_atom(t.exponent, format_ordinal(t.exponent));
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

/// Parse an exact rational literal `p`, `-p`, or `p/q`.
inline Rational parse_rational(std::string_view text) {
  detail::Scanner sc(text);
  bool negative = false;
  if (sc.peek() == '-') {
    sc.take();
    negative = true;
  }
  const std::size_t at = sc.position();
  BigInt num = 0;
  if (!std::isdigit(static_cast<unsigned char>(sc.peek()))) throw ParseError(at, "expected a number");
  while (std::isdigit(static_cast<unsigned char>(sc.peek_raw())))
    num = num * 10 + (sc.take() - '0');
  BigInt den = 1;
  if (sc.peek() == '/') {
    sc.take();
    const std::size_t dat = sc.position();
    if (!std::isdigit(static_cast<unsigned char>(sc.peek()))) throw ParseError(dat, "expected a denominator");
    den = 0;
    while (std::isdigit(static_cast<unsigned char>(sc.peek_raw())))
      den = den * 10 + (sc.take() - '0');
    if (den == 0) throw ParseError(dat, "zero denominator");
  }
  if (!sc.done()) throw ParseError(sc.position(), "trailing input after rational");
  return Rational(negative ? -num : num, den);
}

/// Parse sign-expansion notation: sign atoms `+`/`-` with optional run
/// lengths `^<ordinal>`, a final periodic tail `(...)^w`, or one of the value
/// shortcuts (integer or fraction literals, `eps`, `omega`).
inline SignExpansion parse_surreal(std::string_view text) {
  detail::Scanner sc(text);
  const char head = sc.peek();
  if (head == '\0') throw ParseError(sc.position(), "empty expansion");

  const bool numeric =
      std::isdigit(static_cast<unsigned char>(head)) ||
      (head == '-' && std::isdigit(static_cast<unsigned char>(sc.peek_raw(1))));
  if (numeric) return from_rational(parse_rational(text));

  if (std::isalpha(static_cast<unsigned char>(head))) {
    const std::size_t at = sc.position();
    const std::string name = sc.take_word();
    if (!sc.done()) throw ParseError(sc.position(), "trailing input after constant");
    if (name == "eps") return constants::epsilon();
    if (name == "omega") return constants::omega();
    throw ParseError(at, "unknown constant '" + name + "'");
  }

  std::vector<Run> runs;
  std::vector<Sign> tail;
  while (!sc.done()) {
    const std::size_t at = sc.position();
    if (!tail.empty()) throw ParseError(at, "the periodic tail must be the final item");
    const char c = sc.take();
    if (c == '+' || c == '-') {
      const Sign s = c == '+' ? Sign::plus : Sign::minus;
      Ordinal len(std::uint64_t{1});
      if (sc.peek() == '^') {
        sc.take();
        len = detail::parse_ordinal_atom(sc);
      }
      runs.push_back(Run{s, std::move(len)});
      continue;
    }
    if (c == '(') {
      std::vector<Sign> word;
      while (sc.peek() == '+' || sc.peek() == '-')
        word.push_back(sc.take() == '+' ? Sign::plus : Sign::minus);
      if (word.empty()) throw ParseError(sc.position(), "empty group");
      sc.expect(')');
      sc.expect('^');
      const std::size_t rat = sc.position();
      const Ordinal reps = detail::parse_ordinal_atom(sc);
      if (reps == Ordinal::omega()) {
        tail = std::move(word);
      } else if (auto k = reps.as_finite()) {
        if (*k * word.size() > (std::uint64_t{1} << 22))
          throw ParseError(rat, "group repetition too large");
        for (std::uint64_t i = 0; i < *k; ++i)
          for (Sign s : word) runs.push_back(Run{s, Ordinal(std::uint64_t{1})});
      } else {
        throw ParseError(rat, "group repetition must be a natural number or w");
      }
      continue;
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }
  return SignExpansion(std::move(runs), std::move(tail));
}

inline std::string format_surreal(const SignExpansion& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& r : x.runs()) {
    if (!out.empty()) out += ' ';
    out += to_char(r.sign);
    if (!(r.length == Ordinal(std::uint64_t{1})))
      out += "^" + detail::format_ordinal_atom(r.length, format_ordinal(r.length));
  }
  if (x.has_tail()) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (Sign s : x.tail_word()) out += to_char(s);
    out += ")^w";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << format_ordinal(a);
}

inline std::ostream& operator<<(std::ostream& os, const SignExpansion& x) {
  return os << format_surreal(x);
}

}  // namespace surreal
