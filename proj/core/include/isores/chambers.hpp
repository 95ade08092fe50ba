#ifndef ISORES_CHAMBERS_HPP
#define ISORES_CHAMBERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isores/bigint.hpp"
#include "isores/stratum.hpp"

namespace isores {

enum class WallKind { W1, W2, W3, W4 };

// Affine functional on the singularity pattern space, evaluated at
// v = (x1, x2, y_1..y_p) as x_{x_index} - sum_{j in support} y_j + constant.
// W1/W2 carry a nonempty subset I and constant 0; W3/W4 carry a witness
// (I, K, L) with support I u L and constant -|K \ L|.
struct WallFunctional {
  WallKind kind = WallKind::W1;
  std::vector<int> I;  // 1-based labels; the J/M role for W4
  std::vector<int> K;
  std::vector<int> L;
  int constant = 0;
  int x_index = 1;              // 1 or 2
  std::vector<int> support;     // sorted union of the y-labels in the form
};

struct ChamberLimits {
  int max_poles = 5;
  bool override_limits = false;
};

// Deterministic duplicate-free enumeration of the wall family: W1/W2 over
// nonempty subsets, then the W3/W4 functionals that are new as affine forms
// (constant >= 1), each with a canonical witness. Forms that cannot vanish on
// the open positive orthant (bare x1 or x2) are dropped.
std::vector<WallFunctional> walls(int p, const ChamberLimits& limits = {});

struct ChamberSignature {
  std::vector<int8_t> values;  // one of -1, 0, +1 per wall, canonical order
};

ChamberSignature signature(const Stratum& s, const ChamberLimits& limits = {});

// FNV-1a 64 over the signature entries, as fixed-width hex.
std::string signature_hash(const ChamberSignature& sig);

// Leading form x1^(p-1) + x2^(p-1) - (x1+x2)^(p-1) at v_mu, valid strictly
// inside the chamber x1 > p, x1 < y_j + 1 - p for all j.
BigInt one_chamber_leading(const Stratum& s);
bool in_one_chamber(const Stratum& s);

struct HomogeneityReport {
  std::vector<Stratum> samples;
  ChamberSignature signature;
  bool in_one_chamber_chamber = false;
  std::vector<BigInt> chi;                   // chi at t = 0..depth
  std::vector<std::vector<BigInt>> diffs;    // diffs[k] = k-th finite differences
  bool pth_diff_checked = false;
  bool pth_diff_zero = false;                // order-p differences all vanish
  bool leading_checked = false;
  BigInt expected_top_diff;                  // (p-1)! * L(direction)
  bool leading_matches = false;              // order-(p-1) diffs constant == expected
};

// Samples chi at lattice points v0 + t*direction for t = 0..depth and reports
// finite differences. direction has p+2 entries (dx1, dx2, dy_1..dy_p) with
// dx1 + dx2 = sum(dy). Throws ChamberCrossing when samples change signature.
// The polynomiality checks are asserted only inside the gcd-free chamber of
// one_chamber_leading.
HomogeneityReport verify_homogeneity(const Stratum& base,
                                     const std::vector<int>& direction,
                                     int depth,
                                     const ChamberLimits& limits = {});

} // namespace isores

#endif
