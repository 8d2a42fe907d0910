#pragma once

#include <string>
#include <vector>

#include "fusion2s/forms.hpp"
#include "fusion2s/group.hpp"
#include "fusion2s/matrix.hpp"

namespace fusion2s {

/// Largest group order admitted by the brute-force center oracle; the full
/// center S-matrix is |G|^2 x |G|^2.
inline constexpr long long kOracleMaxGroupOrder = 64;

/// Simple object of the Drinfeld center of Vec_G with trivial associator: a
/// grade g together with a half-braiding, which acts on the simple of grade h
/// by the character chi_a(h).
struct CenterSimple {
    GroupElement grade;          // g
    GroupElement half_braiding;  // character index a

    friend bool operator==(const CenterSimple&, const CenterSimple&) = default;
};

/// Label "(g)|(a)" used for S-matrix axes.
std::string to_string(const CenterSimple& simple);

/// All |G|^2 simples (g,a) in lexicographic order. Verifies that every
/// half-braiding is multiplicative in the grade it acts on.
std::vector<CenterSimple> center_simples(const FiniteAbelianGroup& group);

/// The unnormalized S-matrix of the Drinfeld center: square of size |G|^2,
/// entry at ((g,a),(h,b)) equal to chi_a(h) * chi_b(g). All quantum
/// dimensions are 1, so no normalization is applied.
struct CenterSMatrix {
    LabeledUnityMatrix matrix;
};

CenterSMatrix center_s_matrix(const FiniteAbelianGroup& group);

/// The canonical embedding of a Mueger-central grade l into the center: the
/// pair (l, a_l) whose half-braiding scalar on grade h is B(h, l).
/// InputError if l is outside the radical of the induced form.
CenterSimple embed_muger(const GroupElement& l, const Bicharacter& beta);

/// Keeps only the listed columns, then deletes duplicate rows (keeping the
/// first occurrence in row order). The number of distinct rows must equal the
/// number of columns; InvariantViolation otherwise.
LabeledUnityMatrix restrict_and_dedup(const CenterSMatrix& s,
                                      const std::vector<CenterSimple>& cols);

}  // namespace fusion2s
