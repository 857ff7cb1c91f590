#pragma once

#include <vector>

#include "xlag/exactnum/poly.hpp"

namespace xlag {

/// p, p', then negated remainders down to the last nonzero one.
std::vector<Poly> sturm_chain(const Poly& p);

/// Exact number of distinct real roots of p in [0, inf). A root at z = 0
/// is counted separately after dividing it out, so the chain is only ever
/// evaluated at non-roots. Requires p != 0.
int sturm_nonneg_root_count(const Poly& p);

/// Distinct real roots in the half-open interval (a, b].
int sturm_root_count(const Poly& p, const Rat& a, const Rat& b);

}  // namespace xlag
