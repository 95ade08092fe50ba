#ifndef ISORES_COUNTING_HPP
#define ISORES_COUNTING_HPP

#include <vector>

#include "isores/bigint.hpp"
#include "isores/error.hpp"

namespace isores {

// Count query for residueless differentials in H(a1,a2,-b_1,...,-b_p).
// Zero orders 0 are allowed (a marked regular point); the degree condition
// a1 + a2 + 2 = sum(b) is enforced.
struct XiQuery {
  int a1 = 0;
  int a2 = 0;
  std::vector<int> b;

  int p() const { return static_cast<int>(b.size()); }
};

XiQuery make_xi_query(int a1, int a2, std::vector<int> b);

// Degree of the isoresidual cover of the minimal stratum H(a,-b_1,...,-b_p):
// a!/(a+2-p)! for 2 <= p <= a+2, and 0 when p > a+2. For p == 1 the generic
// fiber is empty (the residue theorem forces the single residue to vanish),
// so the count is 0.
BigInt f_count(long long a, int p);

// Inclusion-exclusion closed form:
// (p-1)! * sum_S (-1)^|S| C(a1 - b_S + |S|, p-1) over subsets S with
// a1 + 1 - b_S - (p - |S|) >= 0.
BigInt xi_closed(const XiQuery& q);

// Independent oracle: (p-1)! * [t^(a1+1)] prod_i (t + ... + t^(b_i - 1))
// by exact polynomial multiplication.
BigInt xi_oracle(const XiQuery& q);

// Right-hand side of the recursion that expands Xi with respect to one
// distinguished pole q_d:
//   (b_d - 1) f(a1+a2, p)
//   - sum over tripartitions I|J|K of the poles with d in K, |I|+|J| >= 1,
//     c1 = a1+1-b_I >= 1 (or I empty), c2 = a2+1-b_J >= 1 (or J empty), of
//     [c1 f(a1,|I|+1)] [c2 f(a2,|J|+1)] Xi(c1-1, c2-1; b_K),
// where an empty I (resp. J) contributes factor 1 and c1 = a1+1.
// Must equal xi_closed(q) for every distinguished pole.
BigInt xi_recursion_rhs(const XiQuery& q, int distinguished_pole /* 1-based */);

// Memoized xi_closed; safe for concurrent use.
BigInt xi_cached(int a1, int a2, std::vector<int> b);

} // namespace isores

#endif
