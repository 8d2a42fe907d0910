#pragma once

#include <optional>
#include <vector>

#include "fusion2s/group.hpp"
#include "fusion2s/unity.hpp"

namespace fusion2s {

/// Quadratic form q on a finite abelian group, presented by its values on the
/// standard generators: diag[i] = q(e_i) and offdiag[i][j] = b(e_i, e_j) for
/// i < j, where b is the polarization b(g,h) = q(g+h)/(q(g)q(h)). Then
///
///   q(x) = prod_i diag[i]^(x_i^2) * prod_{i<j} offdiag[i][j]^(x_i x_j).
///
/// Construction validates exhaustively: well-definedness on residue classes,
/// q(m*g) = q(g)^(m^2), and bi-additivity of the polarization. A constructed
/// form is therefore always valid, and its Mueger radical is precomputed.
class QuadraticForm {
public:
    QuadraticForm(FiniteAbelianGroup group, std::vector<UnityScalar> diag,
                  std::vector<std::vector<UnityScalar>> offdiag);

    /// The trivial braiding (all coefficients 1).
    static QuadraticForm trivial(const FiniteAbelianGroup& group);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<UnityScalar>& diag() const { return diag_; }
    const std::vector<std::vector<UnityScalar>>& offdiag() const { return offdiag_; }

    /// q(g), from the table computed at validation time.
    UnityScalar eval(const GroupElement& g) const;
    /// Full braid scalar b(g,h) = q(g+h)/(q(g)q(h)); symmetric, bi-additive.
    UnityScalar double_braiding(const GroupElement& g, const GroupElement& h) const;
    /// Radical of b: all l with b(g,l) = 1 for every g.
    const Subgroup& muger_center() const { return radical_; }

    /// Values of q over all elements in lexicographic order; two forms are
    /// the same braiding exactly when these agree.
    const std::vector<UnityScalar>& value_table() const { return values_; }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.group_ == b.group_ && a.diag_ == b.diag_ && a.offdiag_ == b.offdiag_;
    }

private:
    UnityScalar eval_poly(const GroupElement& g) const;

    FiniteAbelianGroup group_;
    std::vector<UnityScalar> diag_;
    std::vector<std::vector<UnityScalar>> offdiag_;
    std::vector<UnityScalar> values_;  // q over elements, element-index order
    Subgroup radical_;
};

enum class Flavor { Tannakian, SuperTannakian };

std::string to_string(Flavor flavor);

/// The symmetric-category type of the Mueger center: the radical subgroup,
/// the restriction of q to it (a homomorphism into {+1,-1}), and whether that
/// sign character is trivial (Tannakian) or not (super-Tannakian).
struct MugerClassification {
    Subgroup radical;
    std::vector<int> signs;  // +1/-1, aligned with radical.members()
    Flavor flavor;
};

MugerClassification classify_muger(const QuadraticForm& form);

/// Bicharacter B(g,h) = prod_{i,j} matrix[i][j]^(g_i h_j); bilinear in each
/// slot by construction. Presents a braiding with trivial associator whose
/// quadratic form is g -> B(g,g).
class Bicharacter {
public:
    Bicharacter(FiniteAbelianGroup group, std::vector<std::vector<UnityScalar>> matrix);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::vector<UnityScalar>>& matrix() const { return matrix_; }

    UnityScalar eval(const GroupElement& g, const GroupElement& h) const;
    /// The induced quadratic form q(g) = B(g,g); its double braiding equals
    /// B(g,h) * B(h,g) pointwise.
    QuadraticForm quadratic_form() const;

    friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

private:
    FiniteAbelianGroup group_;
    std::vector<std::vector<UnityScalar>> matrix_;
};

/// A bicharacter realizing the form, when one exists. q is realizable exactly
/// when every q(e_i) is an n_i-th root of unity; then beta_ii = q(e_i),
/// beta_ij = b(e_i,e_j) for i<j and beta_ji = 1 realizes it.
std::optional<Bicharacter> realizing_bicharacter(const QuadraticForm& form);

}  // namespace fusion2s
