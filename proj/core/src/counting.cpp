#include "isores/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace isores {

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt falling_factorial(long long a, long long k) {
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) r *= BigInt(a - i);
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = falling_factorial(n, k);
  return num / factorial(k);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

XiQuery make_xi_query(int a1, int a2, std::vector<int> b) {
  if (a1 < 0 || a2 < 0)
    throw Error(Errc::NonPositiveOrder, "zero orders of a Xi query must be >= 0");
  if (b.empty()) throw Error(Errc::ParseError, "Xi query needs at least one pole");
  long long sum = 0;
  for (int bi : b) {
    if (bi < 1) throw Error(Errc::NonPositiveOrder, "pole orders must be >= 1");
    sum += bi;
  }
  if (sum != static_cast<long long>(a1) + a2 + 2)
    throw Error(Errc::DegreeMismatch, "Xi query violates a1 + a2 + 2 = sum(b)");
  return XiQuery{a1, a2, std::move(b)};
}

BigInt f_count(long long a, int p) {
  if (p < 1) throw Error(Errc::IndexOutOfRange, "f(a,p) needs p >= 1");
  if (p == 1) return 0;
  if (p > a + 2) return 0;
  return falling_factorial(a, p - 2);
}

namespace {

constexpr int kMaxSubsetPoles = 24;

void check_subset_width(int p) {
  if (p > kMaxSubsetPoles)
    throw Error(Errc::ResourceLimit,
                "subset enumeration over " + std::to_string(p) + " poles exceeds the limit of " +
                    std::to_string(kMaxSubsetPoles));
}

std::vector<long long> subset_sums(const std::vector<int>& b) {
  const int p = static_cast<int>(b.size());
  std::vector<long long> bsum(size_t(1) << p, 0);
  for (int mask = 1; mask < (1 << p); ++mask) {
    int low = mask & -mask;
    bsum[mask] = bsum[mask ^ low] + b[std::countr_zero(static_cast<unsigned>(low))];
  }
  return bsum;
}

} // namespace

BigInt xi_closed(const XiQuery& q) {
  const int p = q.p();
  check_subset_width(p);
  const std::vector<long long> bsum = subset_sums(q.b);
  BigInt total = 0;
  for (int mask = 0; mask < (1 << p); ++mask) {
    int k = std::popcount(static_cast<unsigned>(mask));
    long long guard = static_cast<long long>(q.a1) + 1 - bsum[mask] - (p - k);
    if (guard < 0) continue;
    BigInt term = binomial(static_cast<long long>(q.a1) - bsum[mask] + k, p - 1);
    if (k & 1)
      total -= term;
    else
      total += term;
  }
  return factorial(p - 1) * total;
}

BigInt xi_oracle(const XiQuery& q) {
  const int target = q.a1 + 1;
  std::vector<BigInt> poly{1};  // truncated at degree target
  for (int bi : q.b) {
    if (bi == 1) return 0;  // empty factor t + ... + t^0
    std::vector<BigInt> next(std::min<size_t>(poly.size() + bi - 1, target + 1), 0);
    for (size_t d = 0; d < poly.size(); ++d) {
      if (poly[d] == 0) continue;
      for (int e = 1; e <= bi - 1; ++e) {
        if (d + e > static_cast<size_t>(target)) break;
        next[d + e] += poly[d];
      }
    }
    poly = std::move(next);
    if (poly.empty()) return 0;
  }
  if (static_cast<size_t>(target) >= poly.size()) return 0;
  return factorial(q.p() - 1) * poly[target];
}

namespace {

std::map<std::tuple<int, int, std::vector<int>>, BigInt> g_xi_cache;
std::mutex g_xi_mutex;

} // namespace

BigInt xi_cached(int a1, int a2, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  std::tuple<int, int, std::vector<int>> key(a1, a2, std::move(b));
  {
    std::lock_guard<std::mutex> lock(g_xi_mutex);
    auto it = g_xi_cache.find(key);
    if (it != g_xi_cache.end()) return it->second;
  }
  BigInt value = xi_closed(make_xi_query(a1, a2, std::get<2>(key)));
  std::lock_guard<std::mutex> lock(g_xi_mutex);
  return g_xi_cache.emplace(std::move(key), std::move(value)).first->second;
}

BigInt xi_recursion_rhs(const XiQuery& q, int distinguished_pole) {
  const int p = q.p();
  if (distinguished_pole < 1 || distinguished_pole > p)
    throw Error(Errc::IndexOutOfRange,
                "distinguished pole " + std::to_string(distinguished_pole) + " out of range");
  // With a single pole the leading term degenerates to (b-1)/(a+1) = 1 and no
  // tripartition contributes; Xi equals 1 in that case.
  if (p == 1) return 1;
  check_subset_width(p - 1);

  const int d = distinguished_pole - 1;
  std::vector<int> others;
  others.reserve(p - 1);
  for (int j = 0; j < p; ++j)
    if (j != d) others.push_back(q.b[j]);
  const int m = p - 1;
  const int full = (1 << m) - 1;

  const std::vector<long long> bsum = subset_sums(others);

  // Xi vanishes whenever a simple pole stays in K; skip those terms outright.
  int simple_mask = 0;
  for (int t = 0; t < m; ++t)
    if (others[t] == 1) simple_mask |= 1 << t;
  const bool dist_simple = q.b[d] == 1;

  auto bk_orders = [&](int imask, int jmask) {
    std::vector<int> bk{q.b[d]};
    for (int t = 0; t < m; ++t)
      if (!((imask >> t) & 1) && !((jmask >> t) & 1)) bk.push_back(others[t]);
    return bk;
  };

  BigInt sum = 0;
  if (dist_simple)
    return BigInt(q.b[d] - 1) * f_count(static_cast<long long>(q.a1) + q.a2, p);
  for (int imask = 0; imask <= full; ++imask) {
    const int isize = std::popcount(static_cast<unsigned>(imask));
    const long long c1 = static_cast<long long>(q.a1) + 1 - bsum[imask];
    if (imask != 0 && c1 < 1) continue;
    const BigInt factor1 = (imask == 0) ? BigInt(1) : BigInt(c1) * f_count(q.a1, isize + 1);
    if (factor1 == 0) continue;
    const int rest = full ^ imask;
    int jmask = rest;
    while (true) {
      if ((imask != 0 || jmask != 0) && (simple_mask & ~(imask | jmask) & full) == 0) {
        const long long c2 = static_cast<long long>(q.a2) + 1 - bsum[jmask];
        if (jmask == 0 || c2 >= 1) {
          const int jsize = std::popcount(static_cast<unsigned>(jmask));
          const BigInt factor2 =
              (jmask == 0) ? BigInt(1) : BigInt(c2) * f_count(q.a2, jsize + 1);
          if (factor2 != 0) {
            BigInt xi = xi_cached(static_cast<int>(c1) - 1, static_cast<int>(c2) - 1,
                                  bk_orders(imask, jmask));
            if (xi != 0) sum += factor1 * factor2 * xi;
          }
        }
      }
      if (jmask == 0) break;
      jmask = (jmask - 1) & rest;
    }
  }
  return BigInt(q.b[d] - 1) * f_count(static_cast<long long>(q.a1) + q.a2, p) - sum;
}

} // namespace isores
