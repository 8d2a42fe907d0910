#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusion2s/unity.hpp"

namespace fusion2s {

/// Dense row/column-labeled matrix of roots of unity. Labels are opaque
/// strings, pairwise distinct within each axis.
class LabeledUnityMatrix {
public:
    LabeledUnityMatrix(std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels,
                       std::vector<UnityScalar> entries);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const UnityScalar& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols() + c];
    }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    const std::vector<UnityScalar>& entries() const { return entries_; }
    std::vector<UnityScalar> row(std::size_t r) const;

    friend bool operator==(const LabeledUnityMatrix&, const LabeledUnityMatrix&) = default;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<UnityScalar> entries_;  // row-major
};

/// Row and column permutations exhibiting entrywise equality:
/// lhs.at(i, j) == rhs.at(row_map[i], col_map[j]) for all i, j.
struct PermutationWitness {
    std::vector<std::size_t> row_map;
    std::vector<std::size_t> col_map;
};

/// Decides whether lhs and rhs agree up to independent row and column
/// permutations, exactly, and returns a witness when they do. Complete
/// backtracking search over column assignments with multiset pruning; two
/// sound fast paths (aligned columns, matching sort fixpoints) cover the
/// common cases without search.
std::optional<PermutationWitness> equal_up_to_permutation(const LabeledUnityMatrix& lhs,
                                                          const LabeledUnityMatrix& rhs);

/// Alternately sorts rows and columns by exponent sequence until neither
/// changes. Deterministic; a fixpoint of both sorts and hence idempotent.
/// Used as an accelerator only: distinct inputs equivalent under permutation
/// can reach distinct fixpoints.
LabeledUnityMatrix canonicalized(const LabeledUnityMatrix& m);

/// Max-norm of (M * M^dagger - n * I)/n for square M of dimension n,
/// computed in floating point. Zero exactly when the rows are orthogonal
/// with common norm sqrt(n), as for character tables.
double orthogonality_defect(const LabeledUnityMatrix& m);

}  // namespace fusion2s
