#ifndef ISORES_FIBER_HPP
#define ISORES_FIBER_HPP

#include "isores/records.hpp"
#include "isores/stratum.hpp"

namespace isores {

// chi = -degree: the degree of a meromorphic one-form on a compact surface is
// 2g-2 = -chi, summed over components.
BigInt euler_characteristic(const FiberProfile& prof);

// Closed formula for 2g-2 of the generic fiber of H(a1,a2,(-1)^(a+2)):
// a! (a - (a+2)(a+1) / ((a1+1)(a2+1))), evaluated exactly; throws NonIntegral
// if the rational fails to be an integer.
BigInt genus_simple_poles(int a1, int a2);

// Connected components of the generic isoresidual fiber, from the signature:
// k = gcd of all zero orders and non-simple pole orders when there are
// exactly two simple poles and that gcd is >= 2; 2 when there are >= 4 simple
// poles (an even number) and every other order is even; 1 otherwise.
int num_components(const Stratum& s);

bool mu_all_poles_simple(const Stratum& s);
bool profile_all_poles_simple(const FiberProfile& prof);
bool mu_all_even(const Stratum& s);
bool profile_all_even(const FiberProfile& prof);

// Pattern predicates: [all b_j = 1], and [all entries of mu even] for p >= 3.
// For p = 2 the all-even predicate reports the profile-derived truth instead
// (the pattern characterization fails there).
bool all_poles_simple_predicate(const Stratum& s);
bool all_even_predicate(const Stratum& s);

// gcd of all singularity orders in the profile (zeros and poles).
long long divisibility_factor(const FiberProfile& prof);

} // namespace isores

#endif
