#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "fusion2s/forms.hpp"
#include "fusion2s/group.hpp"

namespace fusion2s {

/// All abelian groups of order <= max_order, one per isomorphism class, as
/// invariant-factor chains n_k | ... | n_1. Ordered by (order, factor list).
std::vector<FiniteAbelianGroup> enumerate_groups(long long max_order);

/// Every quadratic form on the group: coefficient grids over the admissible
/// denominators (2n_i or n_i on the diagonal depending on parity,
/// gcd(n_i,n_j) off the diagonal), deduplicated by pointwise values.
/// Distinct grids present distinct braidings, so the dedup is a safety net.
std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& group);

/// Every bicharacter on the group: all grids with beta_ij a multiple of
/// 1/gcd(n_i, n_j).
std::vector<Bicharacter> enumerate_bicharacters(const FiniteAbelianGroup& group);

struct ScanOutcome {
    long long instances = 0;
    long long passed = 0;
    bool all_pass() const { return instances == passed; }
};

/// Runs the per-instance theorem certificate over every quadratic form on
/// every abelian group of order <= max_order. Writes one machine-readable
/// line per instance to `lines` when non-null, in deterministic enumeration
/// order. The optional callback sees each verified instance.
ScanOutcome run_scan(long long max_order, std::ostream* lines,
                     const std::function<void(const QuadraticForm&, bool)>& on_instance = {});

}  // namespace fusion2s
