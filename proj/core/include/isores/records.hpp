#ifndef ISORES_RECORDS_HPP
#define ISORES_RECORDS_HPP

#include <utility>
#include <vector>

#include "isores/bigint.hpp"
#include "isores/stratum.hpp"

namespace isores {

enum class SourceKind { ZeroMerge, Horizontal, Cherry };

// Boundary degeneration that produced a singularity of the fiber form.
// Horizontal: I on the side of the first zero, J its complement.
// Cherry: tripartition I | J | K of the pole labels with K nonempty,
// or I = J = K-empty-complement for the interior residueless points.
struct Source {
  SourceKind kind = SourceKind::ZeroMerge;
  std::vector<int> I;  // 1-based pole labels, sorted
  std::vector<int> J;
};

enum class SingKind { Zero, Pole };

struct SingularityRecord {
  SingKind kind = SingKind::Zero;
  int order = 0;              // order of the zero, or order of the pole (positive)
  BigInt multiplicity;        // > 0 for every emitted record
  ResidueForm residue;        // canonical form; all-zero for zeros & residueless poles
  Source source;
};

// One aggregated line of a fiber profile: same (kind, order, canonical
// residue) records merged, with the per-source breakdown retained.
struct ProfileEntry {
  SingKind kind = SingKind::Zero;
  int order = 0;
  ResidueForm residue;
  BigInt multiplicity;
  std::vector<std::pair<Source, BigInt>> sources;
};

// Full singularity profile of the translation structure on the generic
// isoresidual fiber of a two-zero stratum, with the derived invariants.
struct FiberProfile {
  Stratum stratum;
  std::vector<ProfileEntry> entries;  // zeros first, then poles; sorted
  BigInt degree;                      // sum(zero order * mult) - sum(pole order * mult)
  int num_components = 1;
  BigInt genus_per_component;         // degree = num_components * (2 g - 2)
};

} // namespace isores

#endif
