#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/helpers.hpp"

using namespace surreal;
using testsupport::enumerate_ordinals;
using testsupport::ord;

TEST_CASE("ordinal comparison basics") {
  CHECK(Ordinal(3) < Ordinal::omega());
  CHECK(ord("w*2") > ord("w + 5"));
  CHECK(ord("w^2") == ord("w^2"));
  CHECK(Ordinal() < Ordinal(1));
  CHECK(ord("w^w") > ord("w^2*9 + w*3"));
  CHECK(ord("w^(w+1)") > ord("w^w*5"));
}

TEST_CASE("ordinal sum absorbs small left tails") {
  CHECK(Ordinal(1) + Ordinal::omega() == Ordinal::omega());
  CHECK(Ordinal::omega() + Ordinal(1) == ord("w + 1"));
  CHECK(Ordinal::omega() + ord("w^2") == ord("w^2"));
  CHECK(ord("w + 3") + ord("w*2 + 1") == ord("w*3 + 1"));
  CHECK(ord("w^2 + w") + ord("w") == ord("w^2 + w*2"));
  CHECK(Ordinal() + ord("w") == ord("w"));
  CHECK(ord("w") + Ordinal() == ord("w"));
}

TEST_CASE("left_subtract undoes the sum") {
  CHECK(left_subtract(Ordinal(3), Ordinal::omega()) == Ordinal::omega());
  CHECK(left_subtract(Ordinal::omega(), ord("w + 4")) == Ordinal(4));
  CHECK(left_subtract(Ordinal(5), Ordinal(5)) == Ordinal());
  CHECK(left_subtract(ord("w*2"), ord("w*5 + 3")) == ord("w*3 + 3"));
  CHECK_THROWS_AS(left_subtract(Ordinal::omega(), Ordinal(3)), std::invalid_argument);
}

TEST_CASE("times_finite") {
  CHECK(times_finite(2, Ordinal::omega()) == Ordinal::omega());
  CHECK(times_finite(2, ord("w + 3")) == ord("w + 6"));
  CHECK(times_finite(3, Ordinal(4)) == Ordinal(12));
  CHECK(times_finite(7, Ordinal()) == Ordinal());
  CHECK_THROWS_AS(times_finite(0, Ordinal(1)), std::invalid_argument);
}

TEST_CASE("divmod_finite") {
  auto dm = divmod_finite(ord("w + 5"), 2);
  CHECK(dm.quotient == ord("w + 2"));
  CHECK(dm.remainder == 1);
  dm = divmod_finite(Ordinal(7), 3);
  CHECK(dm.quotient == Ordinal(2));
  CHECK(dm.remainder == 1);
  dm = divmod_finite(ord("w^2"), 4);
  CHECK(dm.quotient == ord("w^2"));
  CHECK(dm.remainder == 0);
  CHECK_THROWS_AS(divmod_finite(Ordinal(1), 0), std::invalid_argument);
}

TEST_CASE("limit ordinal predicates") {
  CHECK(Ordinal::omega().is_limit());
  CHECK_FALSE(ord("w + 1").is_limit());
  CHECK_FALSE(Ordinal().is_limit());
  CHECK(ord("w^2").is_limit());
  CHECK(ord("w^w + w*4").is_limit());
}

TEST_CASE("least_limit_geq") {
  CHECK(least_limit_geq(Ordinal(1)) == Ordinal::omega());
  CHECK(least_limit_geq(Ordinal::omega()) == Ordinal::omega());
  CHECK(least_limit_geq(ord("w*3 + 7")) == ord("w*4"));
  CHECK(least_limit_geq(Ordinal()) == Ordinal::omega());
  CHECK(least_limit_geq(ord("w^2")) == ord("w^2"));
}

TEST_CASE("declared_limsup on the supported shapes") {
  CHECK(declared_limsup(DomPattern::constant(Ordinal(1))) == Ordinal(1));
  CHECK(declared_limsup(DomPattern::strictly_increasing(Ordinal::omega())) == Ordinal::omega());
  // early spikes are discarded: (1, w^w, 2, 3, ...) has limsup w
  CHECK(declared_limsup(DomPattern::spikes_then_increasing(Ordinal::omega())) == Ordinal::omega());
  CHECK(declared_limsup(DomPattern::recurrent_max(Ordinal::omega())) == Ordinal::omega());
}

TEST_CASE("ordinal laws on an exhaustive enumeration") {
  const std::vector<Ordinal> pool = {Ordinal(), Ordinal(1), Ordinal(2),
                                     Ordinal::omega(), ord("w + 1"), ord("w*2")};
  const std::vector<Ordinal> all = enumerate_ordinals(pool, 3, 4);
  REQUIRE(all.size() > 1000);

  SECTION("trichotomy and antisymmetry on all pairs") {
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto ab = a <=> b;
        const auto ba = b <=> a;
        if (ab == std::strong_ordering::less) REQUIRE(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::greater) REQUIRE(ba == std::strong_ordering::less);
        if (ab == std::strong_ordering::equal) {
          REQUIRE(ba == std::strong_ordering::equal);
          REQUIRE(a == b);
        }
      }
  }

  SECTION("identity and monotone growth of the sum") {
    for (const auto& a : all) {
      REQUIRE(a + Ordinal() == a);
      REQUIRE(Ordinal() + a == a);
      for (const auto& b : all) REQUIRE(a + b >= a);
    }
  }

  SECTION("left_subtract round-trips whenever a <= c") {
    for (const auto& a : all)
      for (const auto& c : all)
        if (a <= c) REQUIRE(a + left_subtract(a, c) == c);
  }

  SECTION("divmod round-trips") {
    for (const auto& a : all)
      for (std::uint64_t m = 1; m <= 5; ++m) {
        const auto dm = divmod_finite(a, m);
        REQUIRE(dm.remainder < m);
        REQUIRE(times_finite(m, dm.quotient) + Ordinal(dm.remainder) == a);
      }
  }

  SECTION("least_limit_geq is the least limit ordinal above") {
    for (const auto& a : all) {
      const Ordinal b = least_limit_geq(a);
      REQUIRE(b >= a);
      REQUIRE(b.is_limit());
      for (const auto& c : all)
        if (c.is_limit() && a <= c) REQUIRE(b <= c);
    }
  }

  SECTION("associativity, exhaustive on a small pool and sampled on the large one") {
    const std::vector<Ordinal> small =
        enumerate_ordinals({Ordinal(), Ordinal(1), Ordinal::omega()}, 2, 2);
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small) REQUIRE((a + b) + c == a + (b + c));

    std::mt19937 rng(20260807);
    for (int i = 0; i < 100000; ++i) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      const auto& c = all[rng() % all.size()];
      REQUIRE((a + b) + c == a + (b + c));
    }
  }

  SECTION("transitivity sampled from the enumeration") {
    std::mt19937 rng(20260808);
    for (int i = 0; i < 100000; ++i) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      const auto& c = all[rng() % all.size()];
      if (a <= b && b <= c) REQUIRE(a <= c);
    }
  }
}
