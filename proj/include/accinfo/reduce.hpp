#pragma once

#include "accinfo/model.hpp"

namespace accinfo {

/// Default relative tolerance for the column-proportionality test.
inline constexpr double kMergeRelTol = 1e-8;
/// Outcomes with tr Π_k at or below this are dropped as unreachable.
inline constexpr double kNullAbsTol = 1e-10;

/// Merges outcomes that give equivalent probabilities: whenever
/// |p_jk1 p_.k2 − p_.k1 p_jk2| <= rel_tol p_.k1 p_.k2 for all j, the pair is
/// replaced by one outcome Π_k1 + Π_k2 (factored by its hermitian PSD root).
/// Lowest-index pair first, repeated to a fixpoint. `t` must have been
/// computed from `p` against the ensemble of interest.
Povm merge_equivalent_outcomes(const Povm& p, const ProbTable& t,
                               double rel_tol = kMergeRelTol);

/// Removes outcomes with tr Π_k <= abs_tol and renormalizes the survivors
/// by the S^{-1/2} sandwich. Throws EmptyPovm if nothing survives.
Povm drop_null_outcomes(const Povm& p, double abs_tol = kNullAbsTol);

}  // namespace accinfo
