#include "isores/fiber.hpp"

#include <algorithm>
#include <numeric>

#include "isores/boundary.hpp"

namespace isores {

BigInt euler_characteristic(const FiberProfile& prof) { return -prof.degree; }

BigInt genus_simple_poles(int a1, int a2) {
  if (a1 < 1 || a2 < 1)
    throw Error(Errc::NonPositiveOrder, "zero orders must be >= 1");
  const long long a = static_cast<long long>(a1) + a2;
  BigRat value = BigRat(factorial(a)) *
                 (BigRat(a) - BigRat(BigInt((a + 2) * (a + 1)),
                                     BigInt(static_cast<long long>(a1 + 1) * (a2 + 1))));
  if (boost::multiprecision::denominator(value) != 1)
    throw Error(Errc::NonIntegral, "2g-2 evaluated to a non-integer");
  return boost::multiprecision::numerator(value);
}

int num_components(const Stratum& s) {
  if (s.num_zeros() < 2)
    throw Error(Errc::WrongZeroCount, "component count needs at least 2 zeros");
  int simple = 0;
  for (int b : s.pole_orders)
    if (b == 1) ++simple;

  if (simple == 2) {
    long long k = 0;
    for (int a : s.zero_orders) k = std::gcd(k, static_cast<long long>(a));
    for (int b : s.pole_orders)
      if (b > 1) k = std::gcd(k, static_cast<long long>(b));
    if (k >= 2) return static_cast<int>(k);
  }

  if (simple >= 4 && simple % 2 == 0) {
    bool even = std::all_of(s.zero_orders.begin(), s.zero_orders.end(),
                            [](int a) { return a % 2 == 0; }) &&
                std::all_of(s.pole_orders.begin(), s.pole_orders.end(),
                            [](int b) { return b == 1 || b % 2 == 0; });
    if (even) return 2;
  }
  return 1;
}

bool mu_all_poles_simple(const Stratum& s) {
  return std::all_of(s.pole_orders.begin(), s.pole_orders.end(),
                     [](int b) { return b == 1; });
}

bool profile_all_poles_simple(const FiberProfile& prof) {
  return std::all_of(prof.entries.begin(), prof.entries.end(), [](const ProfileEntry& e) {
    return e.kind != SingKind::Pole || e.order == 1;
  });
}

bool mu_all_even(const Stratum& s) {
  return std::all_of(s.zero_orders.begin(), s.zero_orders.end(),
                     [](int a) { return a % 2 == 0; }) &&
         std::all_of(s.pole_orders.begin(), s.pole_orders.end(),
                     [](int b) { return b % 2 == 0; });
}

bool profile_all_even(const FiberProfile& prof) {
  return std::all_of(prof.entries.begin(), prof.entries.end(),
                     [](const ProfileEntry& e) { return e.order % 2 == 0; });
}

bool all_poles_simple_predicate(const Stratum& s) { return mu_all_poles_simple(s); }

bool all_even_predicate(const Stratum& s) {
  if (s.num_poles() >= 3) return mu_all_even(s);
  return profile_all_even(profile(s));
}

long long divisibility_factor(const FiberProfile& prof) {
  long long g = 0;
  for (const auto& e : prof.entries) g = std::gcd(g, static_cast<long long>(e.order));
  return g == 0 ? 1 : g;
}

} // namespace isores
