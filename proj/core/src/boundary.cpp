#include "isores/boundary.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "isores/counting.hpp"
#include "isores/fiber.hpp"

namespace isores {

namespace {

constexpr int kMaxProfilePoles = 16;  // tripartition enumeration is 3^p

void require_two_zeros(const Stratum& s) {
  if (s.num_zeros() != 2)
    throw Error(Errc::WrongZeroCount,
                "expected exactly 2 zeros, got " + std::to_string(s.num_zeros()));
}

void check_profile_width(int p) {
  if (p > kMaxProfilePoles)
    throw Error(Errc::ResourceLimit,
                "profile enumeration over " + std::to_string(p) + " poles exceeds the limit of " +
                    std::to_string(kMaxProfilePoles));
}

std::vector<int> mask_labels(int mask, int p) {
  std::vector<int> out;
  for (int j = 0; j < p; ++j)
    if ((mask >> j) & 1) out.push_back(j + 1);
  return out;
}

std::vector<int> mask_orders(int mask, const std::vector<int>& b) {
  std::vector<int> out;
  for (size_t j = 0; j < b.size(); ++j)
    if ((mask >> j) & 1) out.push_back(b[j]);
  return out;
}

ResidueForm indicator(int mask, int p, long long value) {
  ResidueForm f = zero_form(p);
  for (int j = 0; j < p; ++j)
    if ((mask >> j) & 1) f.coeffs[j] = value;
  return f;
}

} // namespace

long long tripartition_count(int p) {
  long long n = 1;
  for (int i = 0; i < p; ++i) n *= 3;
  return n;
}

SingularityRecord zero_record(const Stratum& s) {
  require_two_zeros(s);
  const int a = s.zero_orders[0] + s.zero_orders[1];
  SingularityRecord rec;
  rec.kind = SingKind::Zero;
  rec.order = a;
  rec.multiplicity = f_count(a, s.num_poles());
  rec.residue = zero_form(s.num_poles());
  rec.source = Source{SourceKind::ZeroMerge, {}, {}};
  return rec;
}

std::vector<SingularityRecord> horizontal_records(const Stratum& s) {
  require_two_zeros(s);
  const int p = s.num_poles();
  check_profile_width(p);
  const int a1 = s.zero_orders[0], a2 = s.zero_orders[1];

  std::vector<long long> bsum(size_t(1) << p, 0);
  for (int mask = 1; mask < (1 << p); ++mask) {
    int low = mask & -mask;
    bsum[mask] = bsum[mask ^ low] + s.pole_orders[std::countr_zero(static_cast<unsigned>(low))];
  }

  std::vector<SingularityRecord> out;
  const int full = (1 << p) - 1;
  for (int imask = 1; imask < full; ++imask) {
    if (bsum[imask] != a1 + 1) continue;
    const int jmask = full ^ imask;
    BigInt mult = f_count(a1, std::popcount(static_cast<unsigned>(imask)) + 1) *
                  f_count(a2, std::popcount(static_cast<unsigned>(jmask)) + 1);
    if (mult == 0) continue;
    SingularityRecord rec;
    rec.kind = SingKind::Pole;
    rec.order = 1;
    rec.multiplicity = std::move(mult);
    rec.residue = canonicalize(indicator(jmask, p, 1));
    rec.source = Source{SourceKind::Horizontal, mask_labels(imask, p), mask_labels(jmask, p)};
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SingularityRecord> cherry_records(const Stratum& s) {
  require_two_zeros(s);
  const int p = s.num_poles();
  check_profile_width(p);
  const int a1 = s.zero_orders[0], a2 = s.zero_orders[1];
  const std::vector<int>& b = s.pole_orders;

  std::vector<long long> bsum(size_t(1) << p, 0);
  std::vector<int> cnt(size_t(1) << p, 0);
  int simple_mask = 0;
  for (int j = 0; j < p; ++j)
    if (b[j] == 1) simple_mask |= 1 << j;
  for (int mask = 1; mask < (1 << p); ++mask) {
    int low = mask & -mask;
    int idx = std::countr_zero(static_cast<unsigned>(low));
    bsum[mask] = bsum[mask ^ low] + b[idx];
    cnt[mask] = cnt[mask ^ low] + 1;
  }

  const int full = (1 << p) - 1;
  std::vector<SingularityRecord> out;

  for (int imask = 0; imask <= full; ++imask) {
    const long long c1 = static_cast<long long>(a1) + 1 - bsum[imask];
    if (imask != 0 && c1 < 1) continue;
    const int rest = full ^ imask;
    int jmask = rest;
    while (true) {
      const int kmask = full ^ imask ^ jmask;
      if (kmask != 0 && (simple_mask & kmask) == 0) {
        const long long c2 = static_cast<long long>(a2) + 1 - bsum[jmask];
        if (jmask == 0 || c2 >= 1) {
          SingularityRecord rec;
          rec.kind = SingKind::Pole;
          rec.source = Source{SourceKind::Cherry, mask_labels(imask, p), mask_labels(jmask, p)};
          BigInt mult;
          if (imask == 0 && jmask == 0) {
            mult = xi_cached(a1, a2, b);
            rec.order = 2;
            rec.residue = zero_form(p);
          } else if (imask == 0) {
            mult = f_count(a2, cnt[jmask] + 1) *
                   xi_cached(a1, static_cast<int>(c2) - 1, mask_orders(kmask, b));
            rec.order = 1 + static_cast<int>(c2);
            rec.residue = canonicalize(indicator(jmask, p, 1));
          } else if (jmask == 0) {
            mult = f_count(a1, cnt[imask] + 1) *
                   xi_cached(static_cast<int>(c1) - 1, a2, mask_orders(kmask, b));
            rec.order = 1 + static_cast<int>(c1);
            rec.residue = canonicalize(indicator(imask, p, -1));
          } else {
            const long long g = std::gcd(c1, c2);
            const long long lcm = c1 / g * c2;
            mult = f_count(a1, cnt[imask] + 1) * f_count(a2, cnt[jmask] + 1) * BigInt(g) *
                   xi_cached(static_cast<int>(c1) - 1, static_cast<int>(c2) - 1,
                             mask_orders(kmask, b));
            rec.order = 1 + static_cast<int>(lcm);
            ResidueForm form = zero_form(p);
            for (int j = 0; j < p; ++j) {
              if ((imask >> j) & 1) form.coeffs[j] = -(c2 / g);
              if ((jmask >> j) & 1) form.coeffs[j] = c1 / g;
            }
            rec.residue = canonicalize(form);
          }
          if (mult != 0) {
            rec.multiplicity = std::move(mult);
            out.push_back(std::move(rec));
          }
        }
      }
      if (jmask == 0) break;
      jmask = (jmask - 1) & rest;
    }
  }
  return out;
}

namespace {

struct EntryKey {
  int kind;  // 0 zero, 1 pole
  int order;
  std::vector<long long> residue;

  bool operator<(const EntryKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (order != o.order) return order < o.order;
    return residue < o.residue;
  }
};

} // namespace

FiberProfile profile(const Stratum& s) {
  require_two_zeros(s);
  const int p = s.num_poles();
  check_profile_width(p);

  if (p == 1) {
    // The residue theorem forces the single residue to vanish, so the fiber
    // over any nonzero residue is empty.
    FiberProfile empty;
    empty.stratum = s;
    empty.degree = 0;
    empty.num_components = 0;
    empty.genus_per_component = 0;
    return empty;
  }

  std::vector<SingularityRecord> records;
  records.push_back(zero_record(s));
  for (auto& r : horizontal_records(s)) records.push_back(std::move(r));
  for (auto& r : cherry_records(s)) records.push_back(std::move(r));

  std::map<EntryKey, ProfileEntry> agg;
  for (auto& rec : records) {
    EntryKey key{rec.kind == SingKind::Zero ? 0 : 1, rec.order, rec.residue.coeffs};
    auto it = agg.find(key);
    if (it == agg.end()) {
      ProfileEntry entry;
      entry.kind = rec.kind;
      entry.order = rec.order;
      entry.residue = rec.residue;
      entry.multiplicity = rec.multiplicity;
      entry.sources.emplace_back(rec.source, rec.multiplicity);
      agg.emplace(std::move(key), std::move(entry));
    } else {
      it->second.multiplicity += rec.multiplicity;
      it->second.sources.emplace_back(rec.source, rec.multiplicity);
    }
  }

  FiberProfile prof;
  prof.stratum = s;
  BigInt degree = 0;
  for (auto& [key, entry] : agg) {
    if (entry.kind == SingKind::Zero)
      degree += BigInt(entry.order) * entry.multiplicity;
    else
      degree -= BigInt(entry.order) * entry.multiplicity;
    prof.entries.push_back(std::move(entry));
  }
  prof.degree = std::move(degree);
  prof.num_components = num_components(s);

  // all components carry the same per-component profile
  if (prof.num_components > 1)
    for (const auto& entry : prof.entries)
      if (entry.multiplicity % prof.num_components != 0)
        throw Error(Errc::NonIntegral,
                    "record multiplicity is not divisible by the component count");
  if (prof.degree % prof.num_components != 0)
    throw Error(Errc::NonIntegral, "profile degree is not divisible by the component count");
  BigInt per = prof.degree / prof.num_components;  // 2g - 2 per component
  if ((per + 2) % 2 != 0 || per < -2)
    throw Error(Errc::NonIntegral, "per-component degree " + per.str() + " is not of the form 2g-2");
  prof.genus_per_component = (per + 2) / 2;
  return prof;
}

} // namespace isores
