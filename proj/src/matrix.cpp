#include "fusion2s/matrix.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <set>

#include "fusion2s/errors.hpp"

namespace fusion2s {

LabeledUnityMatrix::LabeledUnityMatrix(std::vector<std::string> row_labels,
                                       std::vector<std::string> col_labels,
                                       std::vector<UnityScalar> entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
    if (entries_.size() != row_labels_.size() * col_labels_.size())
        throw InputError("matrix entry grid does not match label dimensions");
    const std::set<std::string> rset(row_labels_.begin(), row_labels_.end());
    const std::set<std::string> cset(col_labels_.begin(), col_labels_.end());
    if (rset.size() != row_labels_.size() || cset.size() != col_labels_.size())
        throw InputError("matrix labels must be pairwise distinct per axis");
}

std::vector<UnityScalar> LabeledUnityMatrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols()),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols())};
}

namespace {

using Perm = std::vector<std::size_t>;

// Matches rows of a to rows of b under a fixed column correspondence;
// returns the row map or nothing.
std::optional<Perm> match_rows(const LabeledUnityMatrix& a, const LabeledUnityMatrix& b,
                               const Perm& col_map) {
    std::multimap<std::vector<UnityScalar>, std::size_t> pool;
    for (std::size_t i = 0; i < b.rows(); ++i) pool.emplace(b.row(i), i);
    Perm row_map(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        // the b-row matched to a-row i must hold a.at(i,j) at column col_map[j]
        std::vector<UnityScalar> want(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) want[col_map[j]] = a.at(i, j);
        const auto it = pool.find(want);
        if (it == pool.end()) return std::nullopt;
        row_map[i] = it->second;
        pool.erase(it);
    }
    return row_map;
}

struct CanonicalForm {
    Perm row_order;  // row_order[i] = original row shown at canonical position i
    Perm col_order;
    std::vector<UnityScalar> grid;  // row-major canonical entries
};

CanonicalForm canonical_form(const LabeledUnityMatrix& m) {
    CanonicalForm cf;
    cf.row_order.resize(m.rows());
    cf.col_order.resize(m.cols());
    std::iota(cf.row_order.begin(), cf.row_order.end(), 0);
    std::iota(cf.col_order.begin(), cf.col_order.end(), 0);

    const auto row_less = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j : cf.col_order) {
            const auto cmp = m.at(r1, j) <=> m.at(r2, j);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    };
    const auto col_less = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i : cf.row_order) {
            const auto cmp = m.at(i, c1) <=> m.at(i, c2);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    };

    for (int pass = 0; pass < 64; ++pass) {
        Perm rows = cf.row_order;
        std::stable_sort(rows.begin(), rows.end(), row_less);
        const bool rows_changed = rows != cf.row_order;
        cf.row_order = std::move(rows);

        Perm cols = cf.col_order;
        std::stable_sort(cols.begin(), cols.end(), col_less);
        const bool cols_changed = cols != cf.col_order;
        cf.col_order = std::move(cols);

        if (!rows_changed && !cols_changed) break;
    }

    cf.grid.reserve(m.rows() * m.cols());
    for (std::size_t i : cf.row_order)
        for (std::size_t j : cf.col_order) cf.grid.push_back(m.at(i, j));
    return cf;
}

// Multiset of per-row entry multisets; a cheap permutation invariant.
std::vector<std::vector<UnityScalar>> sorted_row_multisets(const LabeledUnityMatrix& m,
                                                           bool transpose) {
    const std::size_t n = transpose ? m.cols() : m.rows();
    const std::size_t k = transpose ? m.rows() : m.cols();
    std::vector<std::vector<UnityScalar>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].resize(k);
        for (std::size_t j = 0; j < k; ++j) out[i][j] = transpose ? m.at(j, i) : m.at(i, j);
        std::sort(out[i].begin(), out[i].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Prefixes of all rows under the columns assigned so far must agree as
// multisets between the two matrices, or no completion exists.
bool prefixes_compatible(const LabeledUnityMatrix& a, const LabeledUnityMatrix& b,
                         const std::vector<std::size_t>& cols_a,
                         const std::vector<std::size_t>& cols_b) {
    std::vector<std::vector<UnityScalar>> pa(a.rows()), pb(b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        pa[i].reserve(cols_a.size());
        for (std::size_t j : cols_a) pa[i].push_back(a.at(i, j));
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        pb[i].reserve(cols_b.size());
        for (std::size_t j : cols_b) pb[i].push_back(b.at(i, j));
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

bool search_columns(const LabeledUnityMatrix& a, const LabeledUnityMatrix& b,
                    std::vector<std::size_t>& cols_a, std::vector<std::size_t>& cols_b,
                    std::vector<char>& used_b, Perm& col_map) {
    const std::size_t depth = cols_a.size();
    if (depth == a.cols()) return true;
    cols_a.push_back(depth);
    for (std::size_t cand = 0; cand < b.cols(); ++cand) {
        if (used_b[cand]) continue;
        cols_b.push_back(cand);
        used_b[cand] = 1;
        if (prefixes_compatible(a, b, cols_a, cols_b) &&
            search_columns(a, b, cols_a, cols_b, used_b, col_map)) {
            col_map[depth] = cand;
            cols_a.pop_back();
            cols_b.pop_back();
            used_b[cand] = 0;
            return true;
        }
        cols_b.pop_back();
        used_b[cand] = 0;
    }
    cols_a.pop_back();
    return false;
}

}  // namespace

std::optional<PermutationWitness> equal_up_to_permutation(const LabeledUnityMatrix& lhs,
                                                          const LabeledUnityMatrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return std::nullopt;
    if (lhs.rows() == 0 || lhs.cols() == 0) return PermutationWitness{{}, {}};

    // Fast path: columns already aligned, only rows shuffled.
    {
        Perm identity(lhs.cols());
        std::iota(identity.begin(), identity.end(), 0);
        if (auto rows = match_rows(lhs, rhs, identity))
            return PermutationWitness{std::move(*rows), std::move(identity)};
    }

    if (sorted_row_multisets(lhs, false) != sorted_row_multisets(rhs, false)) return std::nullopt;
    if (sorted_row_multisets(lhs, true) != sorted_row_multisets(rhs, true)) return std::nullopt;

    // Fast path: both sort fixpoints agree; compose the tracked orders.
    {
        const CanonicalForm ca = canonical_form(lhs);
        const CanonicalForm cb = canonical_form(rhs);
        if (ca.grid == cb.grid) {
            PermutationWitness w;
            w.row_map.resize(lhs.rows());
            w.col_map.resize(lhs.cols());
            for (std::size_t i = 0; i < lhs.rows(); ++i) w.row_map[ca.row_order[i]] = cb.row_order[i];
            for (std::size_t j = 0; j < lhs.cols(); ++j) w.col_map[ca.col_order[j]] = cb.col_order[j];
            return w;
        }
    }

    Perm col_map(lhs.cols());
    std::vector<std::size_t> cols_a, cols_b;
    std::vector<char> used_b(rhs.cols(), 0);
    if (!search_columns(lhs, rhs, cols_a, cols_b, used_b, col_map)) return std::nullopt;
    auto rows = match_rows(lhs, rhs, col_map);
    if (!rows) return std::nullopt;  // unreachable: full prefixes matched
    return PermutationWitness{std::move(*rows), std::move(col_map)};
}

LabeledUnityMatrix canonicalized(const LabeledUnityMatrix& m) {
    const CanonicalForm cf = canonical_form(m);
    std::vector<std::string> rl, cl;
    rl.reserve(m.rows());
    cl.reserve(m.cols());
    for (std::size_t i : cf.row_order) rl.push_back(m.row_labels()[i]);
    for (std::size_t j : cf.col_order) cl.push_back(m.col_labels()[j]);
    return LabeledUnityMatrix(std::move(rl), std::move(cl), cf.grid);
}

double orthogonality_defect(const LabeledUnityMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("orthogonality defect needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<std::complex<double>> values(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) values[i * n + j] = m.at(i, j).to_complex();

    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> dot{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) dot += values[i * n + k] * std::conj(values[j * n + k]);
            if (i == j) dot -= static_cast<double>(n);
            defect = std::max(defect, std::abs(dot) / static_cast<double>(n));
        }
    }
    return defect;
}

}  // namespace fusion2s
