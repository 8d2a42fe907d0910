#include "fusion2s/center.hpp"

#include <algorithm>
#include <map>

#include "fusion2s/errors.hpp"

namespace fusion2s {

std::string to_string(const CenterSimple& simple) {
    return to_string(simple.grade) + "|" + to_string(simple.half_braiding);
}

std::vector<CenterSimple> center_simples(const FiniteAbelianGroup& group) {
    if (group.order() > kOracleMaxGroupOrder)
        throw SizeError("center oracle is capped at group order " +
                        std::to_string(kOracleMaxGroupOrder));
    const auto elems = group.elements();
    // hexagon for the trivial associator: every half-braiding scalar is
    // multiplicative in the grade it passes
    for (const auto& a : elems) {
        const Character chi(group, a);
        for (const auto& h1 : elems)
            for (const auto& h2 : elems)
                if (!(chi.eval(group.add(h1, h2)) == chi.eval(h1) * chi.eval(h2)))
                    throw InvariantViolation("half-braiding is not multiplicative");
    }
    std::vector<CenterSimple> out;
    out.reserve(elems.size() * elems.size());
    for (const auto& g : elems)
        for (const auto& a : elems) out.push_back(CenterSimple{g, a});
    return out;
}

CenterSMatrix center_s_matrix(const FiniteAbelianGroup& group) {
    if (group.order() > kOracleMaxGroupOrder)
        throw SizeError("center oracle is capped at group order " +
                        std::to_string(kOracleMaxGroupOrder));
    const auto elems = group.elements();
    const std::size_t n = elems.size();

    // character value lookup: chi_a(h) for all (a, h)
    std::vector<UnityScalar> chi(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const Character character(group, elems[a]);
        for (std::size_t h = 0; h < n; ++h) chi[a * n + h] = character.eval(elems[h]);
    }

    std::vector<std::string> labels;
    labels.reserve(n * n);
    for (const auto& g : elems)
        for (const auto& a : elems) labels.push_back(to_string(CenterSimple{g, a}));

    std::vector<UnityScalar> entries;
    entries.reserve(n * n * n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t h = 0; h < n; ++h)
                for (std::size_t b = 0; b < n; ++b)
                    entries.push_back(chi[a * n + h] * chi[b * n + g]);

    return CenterSMatrix{LabeledUnityMatrix(labels, labels, std::move(entries))};
}

CenterSimple embed_muger(const GroupElement& l, const Bicharacter& beta) {
    const auto& group = beta.group();
    if (!group.contains(l)) throw InputError("embedding candidate is outside the group");
    if (!beta.quadratic_form().muger_center().contains(l))
        throw InputError("element " + to_string(l) + " is not Mueger-central");

    // B(h, l) as a function of h is the character with index
    // a_i = n_i * sum_j beta_ij l_j; integral by well-definedness.
    const auto& n = group.orders();
    std::vector<long long> index(group.rank());
    for (std::size_t i = 0; i < group.rank(); ++i) {
        UnityScalar row;
        for (std::size_t j = 0; j < group.rank(); ++j)
            row *= beta.matrix()[i][j].pow(l.residues[j]);
        if (n[i] % row.den() != 0)
            throw InvariantViolation("half-braiding of an embedded simple is not a character");
        index[i] = (row.num() * (n[i] / row.den())) % n[i];
    }
    const CenterSimple simple{l, group.element(std::move(index))};

    const Character chi(group, simple.half_braiding);
    for (const auto& h : group.elements())
        if (!(chi.eval(h) == beta.eval(h, l)))
            throw InvariantViolation("embedded half-braiding disagrees with the braiding");
    return simple;
}

LabeledUnityMatrix restrict_and_dedup(const CenterSMatrix& s,
                                      const std::vector<CenterSimple>& cols) {
    const auto& matrix = s.matrix;
    std::vector<std::size_t> col_idx;
    col_idx.reserve(cols.size());
    for (const auto& simple : cols) {
        const auto& labels = matrix.col_labels();
        const auto it = std::find(labels.begin(), labels.end(), to_string(simple));
        if (it == labels.end())
            throw InputError("column " + to_string(simple) + " is not a simple of the S-matrix");
        col_idx.push_back(static_cast<std::size_t>(it - labels.begin()));
    }

    std::vector<std::string> row_labels;
    std::vector<UnityScalar> entries;
    std::map<std::vector<UnityScalar>, bool> seen;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        std::vector<UnityScalar> row;
        row.reserve(col_idx.size());
        for (std::size_t j : col_idx) row.push_back(matrix.at(i, j));
        if (seen.emplace(row, true).second) {
            row_labels.push_back(matrix.row_labels()[i]);
            entries.insert(entries.end(), row.begin(), row.end());
        }
    }

    if (row_labels.size() != cols.size())
        throw InvariantViolation("distinct-row count " + std::to_string(row_labels.size()) +
                                 " differs from column count " + std::to_string(cols.size()));

    std::vector<std::string> col_labels;
    col_labels.reserve(cols.size());
    for (const auto& simple : cols) col_labels.push_back(to_string(simple));
    return LabeledUnityMatrix(std::move(row_labels), std::move(col_labels), std::move(entries));
}

}  // namespace fusion2s
