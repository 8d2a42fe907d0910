#pragma once

#include <optional>
#include <string>

#include "fusion2s/center.hpp"
#include "fusion2s/forms.hpp"
#include "fusion2s/group.hpp"
#include "fusion2s/matrix.hpp"
#include "fusion2s/modcats.hpp"

namespace fusion2s {

/// Square table chi(a) with rows labeled by characters and columns by
/// elements; first row and first column are all-ones.
struct CharacterTable {
    LabeledUnityMatrix table;
};

/// Character table of G against the canonical self-duality of its fixed
/// cyclic decomposition.
CharacterTable char_table(const FiniteAbelianGroup& group);

/// Character table of a subgroup. Computes its own cyclic decomposition by
/// greedy maximal-order generator peeling, independent of the ambient dual,
/// so the comparison target shares no machinery with the direct S-matrix
/// pipeline.
CharacterTable char_table(const Subgroup& subgroup);

/// The 2-categorical S-matrix assembled from the classification of braided
/// module categories: rows are Schur classes, columns are Mueger-central
/// elements, and every entry is produced by the module-braiding scalar of the
/// regular representative at the unit simple.
LabeledUnityMatrix st_matrix_direct(const QuadraticForm& form);

/// The same matrix by the independent route: full Drinfeld-center S-matrix,
/// columns restricted to the embedded Mueger center, duplicate rows deleted.
LabeledUnityMatrix st_matrix_via_center(const Bicharacter& beta);

/// Per-instance certificate that the 2-categorical S-matrix is the character
/// table of the Mueger center.
struct TheoremReport {
    QuadraticForm form;
    Subgroup radical;
    Flavor flavor;
    LabeledUnityMatrix st_direct;
    CharacterTable table;
    std::optional<LabeledUnityMatrix> st_oracle;
    std::optional<PermutationWitness> direct_vs_table;
    std::optional<PermutationWitness> oracle_vs_direct;
    bool pass = false;
};

/// Runs the direct comparison, and additionally the center-oracle comparison
/// when requested. With the oracle requested, the form must be realizable by
/// a bicharacter (OracleUnavailable otherwise).
TheoremReport verify_theorem(const QuadraticForm& form, bool with_oracle);

/// Oracle variant for a braiding given directly as a bicharacter.
TheoremReport verify_theorem(const Bicharacter& beta, bool with_oracle);

}  // namespace fusion2s
