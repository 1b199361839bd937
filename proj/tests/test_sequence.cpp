#include <catch2/catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace surreal;
using testsupport::Frac;
using testsupport::ord;
using testsupport::se;

TEST_CASE("registry") {
  for (const char* name : {"constant", "naturals", "doubled_naturals", "geometric", "alternating",
                           "conway_fractions", "omega_multiples", "spike", "ones_series",
                           "harmonic_series"})
    CHECK(find_family(name).name() == name);
  CHECK_THROWS_AS(find_family("fibonacci"), std::out_of_range);
  CHECK_THROWS_AS(find_family("naturals").term(0), std::invalid_argument);
}

TEST_CASE("alternating terms start +, -+, +--, -+++") {
  const Sequence& alt = find_family("alternating");
  CHECK(alt.term(1) == se("+"));
  CHECK(alt.term(2) == se("- +"));
  CHECK(alt.term(3) == se("+ - -"));
  CHECK(alt.term(4) == se("- + + +"));
}

TEST_CASE("geometric terms are + - +^(n-1)") {
  const Sequence& geo = find_family("geometric");
  CHECK(geo.term(1) == se("+ -"));
  CHECK(geo.term(2) == se("+ - +"));
  CHECK(geo.term(5) == se("+ - +^4"));
  CHECK(geo.term(63) == se("+ - +^62"));
  CHECK(geo.term_birthday(63) == Ordinal(64));
}

TEST_CASE("conway fractions") {
  const Sequence& cf = find_family("conway_fractions");
  CHECK(cf.term(1) == se("+ -"));      // 1/2
  CHECK(cf.term(3) == se("+ - +"));    // 3/4
  CHECK(cf.term(2) == from_rational(Rational(BigInt(2), BigInt(3))));
  CHECK(cf.term_birthday(2) == Ordinal::omega());
  CHECK(cf.term_birthday(3) == Ordinal(3));
}

TEST_CASE("omega multiples and spike carry transfinite birthdays") {
  const Sequence& om = find_family("omega_multiples");
  CHECK(om.term(2) == from_ordinal(ord("w*2")));
  CHECK(om.term_birthday(3) == ord("w*3"));
  const Sequence& sp = find_family("spike");
  CHECK(sp.term(1) == se("+"));
  CHECK(sp.term_birthday(2) == ord("w^w"));
  CHECK(sp.term(3) == se("+ +"));
  CHECK(sp.term(5) == se("+^4"));
}

TEST_CASE("series terms and the worked examples") {
  const Sequence& ones = find_family("ones_series");
  CHECK(ones.term(5) == se("+^5"));
  CHECK(ones.term_birthday(7) == Ordinal(7));

  const Sequence& harm = find_family("harmonic_series");
  CHECK(harm.term(1) == se("+"));
  CHECK(harm.term(2) == se("+ + -"));  // 3/2
  const SignExpansion h3 = harm.term(3);
  CHECK(h3 == from_rational(Rational(BigInt(11), BigInt(6))));
  CHECK(h3.birthday() == Ordinal::omega());
}

TEST_CASE("series partial sums match an independent summation oracle") {
  const Sequence& harm = find_family("harmonic_series");
  Frac sum{0, 1};
  for (int n = 1; n <= 20; ++n) {
    sum = sum + Frac{1, n};
    CHECK(harm.term(n) == from_rational(Rational(sum.num, sum.den)));
    CHECK(harm.term_birthday(n) == rational_birthday(Rational(sum.num, sum.den)));
  }
  const Sequence& ones = find_family("ones_series");
  Frac count{0, 1};
  for (int n = 1; n <= 20; ++n) {
    count = count + Frac{1, 1};
    CHECK(ones.term(n) == from_rational(Rational(count.num, count.den)));
  }
}

TEST_CASE("prefix and birthday fast paths agree with full terms") {
  for (const char* name : {"harmonic_series", "conway_fractions", "ones_series"}) {
    const Sequence& s = find_family(name);
    for (int n = 1; n <= 12; ++n) {
      const SignExpansion full = s.term(n);
      CHECK(s.term_birthday(n) == full.birthday());
      for (std::uint64_t d = 0; d <= 10; ++d)
        CHECK(s.term_prefix(n, Ordinal(d)) == full.prefix(Ordinal(d)));
      CHECK(s.term_prefix(n, Ordinal::omega()) == full);
    }
  }
}

TEST_CASE("deep harmonic prefixes stay cheap and exact") {
  const Sequence& harm = find_family("harmonic_series");
  // term 64 has an astronomically long periodic tail; its prefix is exact anyway
  const SignExpansion p = harm.term_prefix(64, Ordinal(16));
  CHECK(p.birthday() == Ordinal(16));
  // H_64 is between 4 and 5, so five leading plusses then a minus
  CHECK(p.prefix(Ordinal(6)) == se("+^5 -"));
  CHECK(harm.term_birthday(64) == Ordinal::omega());
}

TEST_CASE("birthday probes") {
  CHECK(birthday_probe(find_family("naturals"), 4) ==
        std::vector<Ordinal>{Ordinal(1), Ordinal(2), Ordinal(3), Ordinal(4)});
  CHECK(birthday_probe(find_family("geometric"), 3) ==
        std::vector<Ordinal>{Ordinal(2), Ordinal(3), Ordinal(4)});
  CHECK(birthday_probe(find_family("harmonic_series"), 4) ==
        std::vector<Ordinal>{Ordinal(1), Ordinal(3), Ordinal::omega(), Ordinal::omega()});
  CHECK(birthday_probe(find_family("spike"), 5) ==
        std::vector<Ordinal>{Ordinal(1), ord("w^w"), Ordinal(2), Ordinal(3), Ordinal(4)});
}

TEST_CASE("constant_sequence") {
  const Sequence c = constant_sequence(se("+ -"), "half");
  CHECK(c.term(10) == se("+ -"));
  CHECK(c.term_birthday(3) == Ordinal(2));
  CHECK(c.candidate_limit().value() == se("+ -"));
  CHECK(c.dom_pattern()->kind == DomPattern::Kind::constant);
}

TEST_CASE("harmonic and omega-multiples notes are machine readable") {
  const auto& harm_notes = find_family("harmonic_series").notes();
  REQUIRE(harm_notes.size() == 1);
  CHECK(harm_notes[0].claim.find("divergent") != std::string::npos);
  CHECK(harm_notes[0].computed.find("+^w") != std::string::npos);

  const auto& om_notes = find_family("omega_multiples").notes();
  REQUIRE(om_notes.size() == 1);
  CHECK(om_notes[0].claim.find("w^w") != std::string::npos);
  CHECK(om_notes[0].computed.find("w^2") != std::string::npos);
}
