#include "fusion2s/forms.hpp"

#include <algorithm>
#include <utility>

#include "fusion2s/errors.hpp"

namespace fusion2s {

namespace {

// b(e_i, e_j) read from the coefficient tables, any i, j.
UnityScalar generator_pairing(const std::vector<UnityScalar>& diag,
                              const std::vector<std::vector<UnityScalar>>& offdiag,
                              std::size_t i, std::size_t j) {
    if (i == j) return diag[i].pow(2);  // b(e_i,e_i) = q(2e_i)/q(e_i)^2 = q(e_i)^2
    return i < j ? offdiag[i][j] : offdiag[j][i];
}

Subgroup compute_radical(const FiniteAbelianGroup& group, const std::vector<UnityScalar>& diag,
                         const std::vector<std::vector<UnityScalar>>& offdiag) {
    std::vector<GroupElement> members;
    for (const auto& l : group.elements()) {
        bool central = true;
        for (std::size_t i = 0; i < group.rank() && central; ++i) {
            // b(e_i, l) = prod_j b(e_i, e_j)^(l_j); bilinearity makes the
            // generator test sufficient.
            UnityScalar value;
            for (std::size_t j = 0; j < group.rank(); ++j)
                value *= generator_pairing(diag, offdiag, i, j).pow(l.residues[j]);
            central = value.is_one();
        }
        if (central) members.push_back(l);
    }
    return Subgroup(group, std::move(members));
}

}  // namespace

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, std::vector<UnityScalar> diag,
                             std::vector<std::vector<UnityScalar>> offdiag)
    : group_(std::move(group)),
      diag_(std::move(diag)),
      offdiag_(std::move(offdiag)),
      radical_(Subgroup::trivial(group_)) {
    const std::size_t k = group_.rank();
    if (diag_.size() != k) throw InputError("diagonal coefficient count does not match group rank");
    if (offdiag_.size() != k) throw InputError("off-diagonal coefficient grid has wrong shape");
    for (std::size_t i = 0; i < k; ++i)
        if (offdiag_[i].size() != k) throw InputError("off-diagonal coefficient grid has wrong shape");

    const auto& n = group_.orders();
    for (std::size_t i = 0; i < k; ++i) {
        // q(e_i) must survive x_i -> x_i + n_i: exponents 2*n_i*r_i and
        // n_i^2*r_i must be integral.
        if (!diag_[i].pow(2 * n[i]).is_one() || !diag_[i].pow(n[i] * n[i]).is_one())
            throw WellDefinednessError("diagonal coefficient " + std::to_string(i + 1) +
                                       " is not defined on residues mod " + std::to_string(n[i]));
        for (std::size_t j = 0; j < k; ++j) {
            if (j <= i) {
                if (!offdiag_[i][j].is_one())
                    throw InputError("off-diagonal coefficients must sit strictly above the diagonal");
                continue;
            }
            if (!offdiag_[i][j].pow(n[i]).is_one() || !offdiag_[i][j].pow(n[j]).is_one())
                throw WellDefinednessError("pairing coefficient (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") is not defined on residues");
        }
    }

    const auto elems = group_.elements();
    values_.reserve(elems.size());
    for (const auto& g : elems) values_.push_back(eval_poly(g));

    for (const auto& g : elems) {
        const UnityScalar qg = eval(g);
        const long long ord = group_.order_of(g);
        for (long long m = 1; m <= ord; ++m)
            if (!(eval(group_.scalar_mul(m, g)) == qg.pow(m * m)))
                throw QuadraticityError("q(" + std::to_string(m) + "*" + to_string(g) +
                                        ") differs from q(g)^(m^2)");
    }

    // On generator pairs the polarization must equal the stored pairing
    // coefficients; that pins the coefficient interpretation.
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < k; ++i) {
        auto coords = std::vector<long long>(k, 0);
        if (n[i] > 1) coords[i] = 1;
        gens.push_back(group_.reduced(coords));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!(double_braiding(gens[i], gens[j]) == generator_pairing(diag_, offdiag_, i, j)))
                throw BilinearityError("polarization disagrees with the pairing coefficients");

    // Exhaustive bi-additivity: generator increments in one slot reach every
    // pair, and the polarization is symmetric by construction.
    for (const auto& g : elems) {
        for (const auto& h : elems) {
            const UnityScalar bgh = double_braiding(g, h);
            for (std::size_t i = 0; i < k; ++i)
                if (!(double_braiding(group_.add(g, gens[i]), h) ==
                      bgh * double_braiding(gens[i], h)))
                    throw BilinearityError("polarization fails bi-additivity at " + to_string(g) +
                                           ", " + to_string(h));
        }
    }

    radical_ = compute_radical(group_, diag_, offdiag_);
}

QuadraticForm QuadraticForm::trivial(const FiniteAbelianGroup& group) {
    const std::size_t k = group.rank();
    return QuadraticForm(group, std::vector<UnityScalar>(k),
                         std::vector<std::vector<UnityScalar>>(k, std::vector<UnityScalar>(k)));
}

UnityScalar QuadraticForm::eval_poly(const GroupElement& g) const {
    UnityScalar value;
    for (std::size_t i = 0; i < group_.rank(); ++i) {
        value *= diag_[i].pow(g.residues[i] * g.residues[i]);
        for (std::size_t j = i + 1; j < group_.rank(); ++j)
            value *= offdiag_[i][j].pow(g.residues[i] * g.residues[j]);
    }
    return value;
}

UnityScalar QuadraticForm::eval(const GroupElement& g) const {
    if (!group_.contains(g)) throw InputError("form evaluated outside its group");
    return values_[static_cast<std::size_t>(group_.index_of(g))];
}

UnityScalar QuadraticForm::double_braiding(const GroupElement& g, const GroupElement& h) const {
    if (!group_.contains(g) || !group_.contains(h))
        throw InputError("double braiding evaluated outside the form's group");
    return eval(group_.add(g, h)) * eval(g).inverse() * eval(h).inverse();
}

std::string to_string(Flavor flavor) {
    return flavor == Flavor::Tannakian ? "Tannakian" : "superTannakian";
}

MugerClassification classify_muger(const QuadraticForm& form) {
    const Subgroup& radical = form.muger_center();
    std::vector<int> signs;
    signs.reserve(radical.members().size());
    for (const auto& l : radical.members()) {
        const UnityScalar v = form.eval(l);
        if (v.is_one())
            signs.push_back(1);
        else if (v == UnityScalar::from_fraction(1, 2))
            signs.push_back(-1);
        else
            throw InvariantViolation("q restricted to the radical left {+1,-1} at " + to_string(l));
    }
    // restriction must be a homomorphism on the radical
    for (std::size_t i = 0; i < radical.members().size(); ++i)
        for (std::size_t j = 0; j < radical.members().size(); ++j) {
            const auto sum = radical.parent().add(radical.members()[i], radical.members()[j]);
            if (signs[radical.member_index(sum)] != signs[i] * signs[j])
                throw InvariantViolation("sign character is not a homomorphism on the radical");
        }
    const bool trivial = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
    return {radical, std::move(signs), trivial ? Flavor::Tannakian : Flavor::SuperTannakian};
}

Bicharacter::Bicharacter(FiniteAbelianGroup group, std::vector<std::vector<UnityScalar>> matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
    const std::size_t k = group_.rank();
    if (matrix_.size() != k) throw InputError("bicharacter matrix does not match group rank");
    const auto& n = group_.orders();
    for (std::size_t i = 0; i < k; ++i) {
        if (matrix_[i].size() != k) throw InputError("bicharacter matrix does not match group rank");
        for (std::size_t j = 0; j < k; ++j)
            if (!matrix_[i][j].pow(n[i]).is_one() || !matrix_[i][j].pow(n[j]).is_one())
                throw WellDefinednessError("bicharacter entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") is not defined on residues");
    }
}

UnityScalar Bicharacter::eval(const GroupElement& g, const GroupElement& h) const {
    if (!group_.contains(g) || !group_.contains(h))
        throw InputError("bicharacter evaluated outside its group");
    UnityScalar value;
    for (std::size_t i = 0; i < group_.rank(); ++i)
        for (std::size_t j = 0; j < group_.rank(); ++j)
            value *= matrix_[i][j].pow(g.residues[i] * h.residues[j]);
    return value;
}

QuadraticForm Bicharacter::quadratic_form() const {
    const std::size_t k = group_.rank();
    std::vector<UnityScalar> diag(k);
    std::vector<std::vector<UnityScalar>> offdiag(k, std::vector<UnityScalar>(k));
    for (std::size_t i = 0; i < k; ++i) {
        diag[i] = matrix_[i][i];
        for (std::size_t j = i + 1; j < k; ++j) offdiag[i][j] = matrix_[i][j] * matrix_[j][i];
    }
    try {
        return QuadraticForm(group_, std::move(diag), std::move(offdiag));
    } catch (const Error& e) {
        // a valid bicharacter always induces a valid form
        throw InvariantViolation(std::string("bicharacter induced an invalid form: ") + e.what());
    }
}

std::optional<Bicharacter> realizing_bicharacter(const QuadraticForm& form) {
    const auto& n = form.group().orders();
    const std::size_t k = form.group().rank();
    for (std::size_t i = 0; i < k; ++i)
        if (!form.diag()[i].pow(n[i]).is_one()) return std::nullopt;
    std::vector<std::vector<UnityScalar>> matrix(k, std::vector<UnityScalar>(k));
    for (std::size_t i = 0; i < k; ++i) {
        matrix[i][i] = form.diag()[i];
        for (std::size_t j = i + 1; j < k; ++j) matrix[i][j] = form.offdiag()[i][j];
    }
    Bicharacter beta(form.group(), std::move(matrix));
    if (!(beta.quadratic_form().value_table() == form.value_table()))
        throw InvariantViolation("constructed bicharacter does not induce the original form");
    return beta;
}

}  // namespace fusion2s
