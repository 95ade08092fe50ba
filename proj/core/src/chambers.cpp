#include "isores/chambers.hpp"

#include <algorithm>
#include <numeric>

#include "isores/boundary.hpp"
#include "isores/fiber.hpp"

namespace isores {

namespace {

std::vector<int> mask_labels(unsigned mask, int p) {
  std::vector<int> out;
  for (int j = 0; j < p; ++j)
    if ((mask >> j) & 1) out.push_back(j + 1);
  return out;
}

void check_bound(int p, const ChamberLimits& limits) {
  if (p < 1) throw Error(Errc::IndexOutOfRange, "wall enumeration needs p >= 1");
  if (!limits.override_limits && p > limits.max_poles)
    throw Error(Errc::ResourceLimit,
                "wall enumeration for p = " + std::to_string(p) + " exceeds the bound p <= " +
                    std::to_string(limits.max_poles));
  if (p > 24) throw Error(Errc::ResourceLimit, "wall enumeration capped at p <= 24");
}

} // namespace

// Every affine form arising from the wall family is x_i - sum_S y - c with
// S a subset of the labels and 0 <= c <= p - |S|: a W3 witness is I = S,
// L = empty, K = the first c labels outside S (W1 covers c = 0). Forms with
// empty S and c = 0 never vanish on the open orthant and are dropped.
std::vector<WallFunctional> walls(int p, const ChamberLimits& limits) {
  check_bound(p, limits);
  std::vector<WallFunctional> out;
  const unsigned full = (1u << p) - 1;

  for (int xi = 1; xi <= 2; ++xi) {
    const WallKind base = (xi == 1) ? WallKind::W1 : WallKind::W2;
    for (unsigned mask = 1; mask <= full; ++mask) {
      WallFunctional w;
      w.kind = base;
      w.x_index = xi;
      w.I = mask_labels(mask, p);
      w.support = w.I;
      w.constant = 0;
      out.push_back(std::move(w));
    }
  }
  for (int xi = 1; xi <= 2; ++xi) {
    const WallKind base = (xi == 1) ? WallKind::W3 : WallKind::W4;
    for (unsigned mask = 0; mask <= full; ++mask) {
      const int size = std::popcount(mask);
      for (int c = 1; c <= p - size; ++c) {
        WallFunctional w;
        w.kind = base;
        w.x_index = xi;
        w.I = mask_labels(mask, p);
        // canonical witness: K = first c labels outside S, L = empty
        for (int j = 0; j < p && static_cast<int>(w.K.size()) < c; ++j)
          if (!((mask >> j) & 1)) w.K.push_back(j + 1);
        w.support = w.I;
        w.constant = -c;
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

namespace {

long long evaluate_wall(const WallFunctional& w, const Stratum& s) {
  long long x = (w.x_index == 1) ? s.zero_orders[0] + 1 : s.zero_orders[1] + 1;
  long long sum = 0;
  for (int label : w.support) sum += s.pole_orders[label - 1];
  return x - sum + w.constant;
}

} // namespace

ChamberSignature signature(const Stratum& s, const ChamberLimits& limits) {
  if (s.num_zeros() != 2)
    throw Error(Errc::WrongZeroCount, "chamber signatures are defined for two-zero strata");
  ChamberSignature sig;
  for (const auto& w : walls(s.num_poles(), limits)) {
    long long v = evaluate_wall(w, s);
    sig.values.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return sig;
}

std::string signature_hash(const ChamberSignature& sig) {
  unsigned long long h = 1469598103934665603ull;  // FNV-1a 64
  for (int8_t v : sig.values) {
    h ^= static_cast<unsigned char>(v + 2);
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

bool in_one_chamber(const Stratum& s) {
  if (s.num_zeros() != 2) return false;
  const int p = s.num_poles();
  const long long x1 = s.zero_orders[0] + 1;
  if (!(x1 > p)) return false;
  for (int b : s.pole_orders)
    if (!(x1 < static_cast<long long>(b) + 1 - p)) return false;
  return true;
}

BigInt one_chamber_leading(const Stratum& s) {
  if (s.num_zeros() != 2)
    throw Error(Errc::WrongZeroCount, "leading form is defined for two-zero strata");
  if (!in_one_chamber(s))
    throw Error(Errc::NotInChamber,
                "signature point violates x1 > p or x1 < y_j + 1 - p");
  const int p = s.num_poles();
  const BigInt x1 = s.zero_orders[0] + 1;
  const BigInt x2 = s.zero_orders[1] + 1;
  auto power = [](BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  return power(x1, p - 1) + power(x2, p - 1) - power(x1 + x2, p - 1);
}

HomogeneityReport verify_homogeneity(const Stratum& base,
                                     const std::vector<int>& direction,
                                     int depth,
                                     const ChamberLimits& limits) {
  if (base.num_zeros() != 2)
    throw Error(Errc::WrongZeroCount, "homogeneity families are two-zero strata");
  const int p = base.num_poles();
  if (static_cast<int>(direction.size()) != p + 2)
    throw Error(Errc::IndexOutOfRange,
                "direction needs " + std::to_string(p + 2) + " entries");
  long long dx = static_cast<long long>(direction[0]) + direction[1];
  long long dy = std::accumulate(direction.begin() + 2, direction.end(), 0LL);
  if (dx != dy)
    throw Error(Errc::DegreeMismatch, "direction must satisfy dx1 + dx2 = sum(dy)");
  if (depth < 0) throw Error(Errc::IndexOutOfRange, "depth must be >= 0");

  HomogeneityReport report;
  for (int t = 0; t <= depth; ++t) {
    std::vector<int> zeros{base.zero_orders[0] + t * direction[0],
                           base.zero_orders[1] + t * direction[1]};
    std::vector<int> poles(base.pole_orders);
    for (int j = 0; j < p; ++j) poles[j] += t * direction[2 + j];
    report.samples.push_back(validate(std::move(zeros), std::move(poles)));
  }

  report.signature = signature(report.samples.front(), limits);
  for (const auto& s : report.samples) {
    ChamberSignature sig = signature(s, limits);
    if (sig.values != report.signature.values)
      throw Error(Errc::ChamberCrossing, "family crosses a wall at " + format_mu(s));
  }
  report.in_one_chamber_chamber =
      std::all_of(report.samples.begin(), report.samples.end(),
                  [](const Stratum& s) { return in_one_chamber(s); });

  for (const auto& s : report.samples)
    report.chi.push_back(euler_characteristic(profile(s)));

  report.diffs.push_back(report.chi);
  while (report.diffs.back().size() > 1) {
    const auto& prev = report.diffs.back();
    std::vector<BigInt> next;
    for (size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    report.diffs.push_back(std::move(next));
  }

  // order-p differences vanish and order-(p-1) differences are the constant
  // (p-1)! * L(direction), with L the leading form; exact only in the
  // gcd-free chamber.
  if (depth >= p) {
    report.pth_diff_checked = true;
    report.pth_diff_zero = std::all_of(report.diffs[p].begin(), report.diffs[p].end(),
                                       [](const BigInt& v) { return v == 0; });
  }
  if (depth >= p - 1 && p >= 1) {
    auto power = [](BigInt base, int e) {
      BigInt r = 1;
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    };
    const BigInt l = power(direction[0], p - 1) + power(direction[1], p - 1) -
                     power(BigInt(direction[0]) + direction[1], p - 1);
    report.expected_top_diff = factorial(p - 1) * l;
    report.leading_checked = true;
    report.leading_matches =
        std::all_of(report.diffs[p - 1].begin(), report.diffs[p - 1].end(),
                    [&](const BigInt& v) { return v == report.expected_top_diff; });
  }
  return report;
}

} // namespace isores
