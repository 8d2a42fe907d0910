#pragma once

#include <vector>

#include "fusion2s/forms.hpp"
#include "fusion2s/group.hpp"

namespace fusion2s {

/// A braided module category over the braided pointed category presented by
/// `form`: the module category attached to the subgroup H together with the
/// character chi of G twisting the monodromy. Simples are indexed by the
/// coset transversal of H. Constructible only when H sits inside the Mueger
/// center (ExistenceError otherwise).
class BraidedModuleCat {
public:
    BraidedModuleCat(QuadraticForm form, Subgroup subgroup, Character chi);

    const QuadraticForm& form() const { return form_; }
    const Subgroup& subgroup() const { return subgroup_; }
    const Character& chi() const { return chi_; }
    std::vector<GroupElement> simple_transversal() const;

    friend bool operator==(const BraidedModuleCat&, const BraidedModuleCat&) = default;

private:
    QuadraticForm form_;
    Subgroup subgroup_;
    Character chi_;
};

/// A module braiding on the H-module category exists iff H lies in the
/// Mueger center of the form.
bool module_braiding_exists(const Subgroup& subgroup, const QuadraticForm& form);

/// One braided module category per character of G, in character index order.
std::vector<BraidedModuleCat> enumerate_module_braidings(const Subgroup& subgroup,
                                                         const QuadraticForm& form);

/// Scalar of the module braiding on the simple indexed by k against the
/// simple of grade g: b(g,k) * chi(g).
UnityScalar sigma_scalar(const BraidedModuleCat& cat, const GroupElement& k,
                         const GroupElement& g);

/// Schur equivalence of two braided module categories over the same form.
/// Computes both characterizations (a twist by b(.,k) relating the two
/// characters, and equal restriction to the Mueger center) and cross-checks
/// them; CrossCheckError if they disagree.
bool schur_equivalent(const BraidedModuleCat& lhs, const BraidedModuleCat& rhs);

/// A Schur equivalence class, canonically represented by the restriction of
/// the twisting character to the Mueger center.
struct SchurClass {
    QuadraticForm form;
    SubgroupCharacter restricted;
};

/// All Schur classes of braided module categories over the form: the distinct
/// restrictions of the characters of G to the radical, in first-occurrence
/// order. Exactly |Z_2(G)| of them.
std::vector<SchurClass> schur_classes(const QuadraticForm& form);

/// The representative with the regular module category (H = 0) and the same
/// twisting character; certified Schur equivalent to the input.
BraidedModuleCat regular_representative(const BraidedModuleCat& cat);

}  // namespace fusion2s
