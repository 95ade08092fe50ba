#ifndef ISORES_BOUNDARY_HPP
#define ISORES_BOUNDARY_HPP

#include <vector>

#include "isores/records.hpp"
#include "isores/stratum.hpp"

namespace isores {

// The merged-zeros boundary point: one record with kind=zero, order a1+a2,
// multiplicity f(a1+a2, p), zero residue.
SingularityRecord zero_record(const Stratum& s);

// One simple pole per subset I with b_I = a1+1: multiplicity
// f(a1,|I|+1) f(a2,|J|+1), residue sum_{j in J} lambda_j (J the complement).
std::vector<SingularityRecord> horizontal_records(const Stratum& s);

// Higher-order poles from cherry degenerations, over all tripartitions
// I | J | K with K nonempty, plus the interior residueless double poles
// (I = J = empty). Subcases with vanishing multiplicity are suppressed.
std::vector<SingularityRecord> cherry_records(const Stratum& s);

// Aggregated profile with derived degree, component count and genus.
FiberProfile profile(const Stratum& s);

// Number of raw tripartition assignments visited by cherry iteration (3^p).
long long tripartition_count(int p);

} // namespace isores

#endif
