#include "surreal/surreal.hpp"
#include <iostream>
using namespace surreal;

int main() {
  // ordinal basics
  Ordinal w = Ordinal::omega();
  std::cout << "w+1 = " << (w + Ordinal(std::uint64_t{1})) << "\n";
  std::cout << "1+w = " << (Ordinal(std::uint64_t{1}) + w) << "\n";
  std::cout << "w+w^2 = " << (w + Ordinal::power_of_omega(Ordinal(std::uint64_t{2}))) << "\n";
  std::cout << "llg(w*3+7) = " << least_limit_geq(parse_ordinal("w*3 + 7")) << "\n";

  // expansions
  auto x = parse_surreal("+^w -");
  std::cout << "w-1 = " << x << " dom " << x.birthday() << "\n";
  auto eps = parse_surreal("eps");
  std::cout << "eps = " << eps << ", eps<1/2: " << (compare(eps, parse_surreal("+ -")) == std::strong_ordering::less) << "\n";
  auto third = from_rational(Rational(1, 3));
  std::cout << "1/3 = " << third << "\n";
  auto rot = SignExpansion({Run{Sign::plus,1},Run{Sign::minus,2},Run{Sign::plus,1}}, {Sign::minus, Sign::plus});
  std::cout << "rot = " << rot << " equal: " << (rot == third) << "\n";
  std::cout << "cmp vectors: " << (compare(parse_surreal("- + +"), parse_surreal("- + + +")) == std::strong_ordering::less)
            << (compare(parse_surreal("- - + -"), parse_surreal("- - +")) == std::strong_ordering::less)
            << (compare(parse_surreal("+ + - + - -"), parse_surreal("+ + + + - -")) == std::strong_ordering::less) << "\n";

  // options and addition
  auto X = parse_surreal("+ + - + + - -");
  for (auto& l : left_options(X)) std::cout << "L: " << l << "\n";
  for (auto& r : right_options(X)) std::cout << "R: " << r << "\n";
  std::cout << "simplest(L,R) = " << simplest_between(left_options(X), right_options(X)) << "\n";
  std::cout << "1+1 = " << add(parse_surreal("+"), parse_surreal("+")) << "\n";
  std::cout << "1/2+1/2 = " << add(parse_surreal("+ -"), parse_surreal("+ -")) << "\n";
  std::cout << "to_dyadic(++-) = " << to_dyadic(parse_surreal("+ + -")).to_string() << "\n";

  // limits
  LimitConfig cfg;
  cfg.depth_samples = default_depth_samples(Ordinal::omega());
  auto v = check_limit(find_family("naturals"), cfg);
  if (auto* c = std::get_if<Converged>(&v)) std::cout << "naturals -> " << c->limit << "\n";
  v = check_limit(find_family("geometric"), cfg);
  if (auto* c = std::get_if<Converged>(&v)) std::cout << "geometric -> " << c->limit << "\n";
  v = check_limit(find_family("alternating"), cfg);
  if (auto* nl = std::get_if<NoLimit>(&v)) std::cout << "alternating -> NoLimit at " << nl->position << "\n";
  v = check_limit(find_family("harmonic_series"), cfg);
  if (auto* c = std::get_if<Converged>(&v)) std::cout << "harmonic -> " << c->limit << "\n";
  v = check_limit(find_family("conway_fractions"), cfg);
  if (auto* c = std::get_if<Converged>(&v)) std::cout << "conway -> " << c->limit << "\n";
  auto vb = limit_birthday(find_family("omega_multiples"), 32);
  std::cout << "b(omega_multiples) = " << vb.value << "\n";
  LimitConfig lit; lit.policy = Policy::literal; lit.depth_samples = cfg.depth_samples;
  lit.literal_pool = std::vector<SignExpansion>{from_ordinal(Ordinal(std::uint64_t{5})), constants::omega()};
  v = check_limit(find_family("naturals"), lit);
  if (auto* nu = std::get_if<NotUnique>(&v)) {
    std::cout << "literal naturals NotUnique:";
    for (auto& c : nu->candidates) std::cout << " [" << c << "]";
    std::cout << "\n";
  }
  auto out = verify_candidate(find_family("geometric"), constants::one_minus_epsilon(), Ordinal(std::uint64_t{6}), 64, Policy::strict);
  std::cout << "geom depth6 pass=" << out.pass << " n0=" << out.n0 << "\n";
  return 0;
}
