#include "fusion2s/scan.hpp"

#include <numeric>
#include <ostream>
#include <set>

#include "fusion2s/errors.hpp"
#include "fusion2s/smatrix.hpp"

namespace fusion2s {

namespace {

void chains_with_product(long long remaining, long long max_factor,
                         std::vector<long long>& prefix,
                         std::vector<std::vector<long long>>& out) {
    if (remaining == 1) {
        out.push_back(prefix);
        return;
    }
    for (long long d = 2; d <= max_factor; ++d) {
        if (remaining % d != 0) continue;
        if (!prefix.empty() && prefix.back() % d != 0) continue;
        prefix.push_back(d);
        chains_with_product(remaining / d, d, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<FiniteAbelianGroup> enumerate_groups(long long max_order) {
    if (max_order < 1) throw InputError("group order bound must be at least 1");
    if (max_order > group_size_cap())
        throw SizeError("group order bound exceeds cap " + std::to_string(group_size_cap()));
    std::vector<FiniteAbelianGroup> out;
    out.emplace_back(std::vector<long long>{1});
    for (long long order = 2; order <= max_order; ++order) {
        std::vector<std::vector<long long>> chains;
        std::vector<long long> prefix;
        chains_with_product(order, order, prefix, chains);
        // descending-first recursion already yields invariant chains; sort for
        // a stable published order
        std::sort(chains.begin(), chains.end());
        for (auto& chain : chains) out.emplace_back(std::move(chain));
    }
    return out;
}

namespace {

// Admissible exponent denominators: diagonal coefficients are multiples of
// 1/(2n) for even n and 1/n for odd n; the pairing coefficient for (n_i, n_j)
// is a multiple of 1/gcd(n_i, n_j).
long long diagonal_choices(long long n) { return n % 2 == 0 ? 2 * n : n; }

}  // namespace

std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& group) {
    const std::size_t k = group.rank();
    const auto& n = group.orders();

    std::vector<long long> slot_sizes;
    for (std::size_t i = 0; i < k; ++i) slot_sizes.push_back(diagonal_choices(n[i]));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) slot_sizes.push_back(std::gcd(n[i], n[j]));

    std::vector<QuadraticForm> out;
    std::set<std::vector<UnityScalar>> seen;
    std::vector<long long> odo(slot_sizes.size(), 0);
    while (true) {
        std::vector<UnityScalar> diag(k);
        std::vector<std::vector<UnityScalar>> offdiag(k, std::vector<UnityScalar>(k));
        std::size_t slot = 0;
        for (std::size_t i = 0; i < k; ++i)
            diag[i] = UnityScalar::from_fraction(odo[slot++], diagonal_choices(n[i]));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                offdiag[i][j] = UnityScalar::from_fraction(odo[slot++], std::gcd(n[i], n[j]));

        QuadraticForm form(group, std::move(diag), std::move(offdiag));
        if (seen.insert(form.value_table()).second) out.push_back(std::move(form));

        std::size_t carry = odo.size();
        while (carry-- > 0) {
            if (++odo[carry] < slot_sizes[carry]) break;
            odo[carry] = 0;
            if (carry == 0) return out;
        }
    }
}

std::vector<Bicharacter> enumerate_bicharacters(const FiniteAbelianGroup& group) {
    const std::size_t k = group.rank();
    const auto& n = group.orders();

    std::vector<long long> slot_sizes;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) slot_sizes.push_back(std::gcd(n[i], n[j]));

    std::vector<Bicharacter> out;
    std::vector<long long> odo(slot_sizes.size(), 0);
    while (true) {
        std::vector<std::vector<UnityScalar>> matrix(k, std::vector<UnityScalar>(k));
        std::size_t slot = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                matrix[i][j] = UnityScalar::from_fraction(odo[slot++], std::gcd(n[i], n[j]));
        out.emplace_back(group, std::move(matrix));

        std::size_t carry = odo.size();
        while (carry-- > 0) {
            if (++odo[carry] < slot_sizes[carry]) break;
            odo[carry] = 0;
            if (carry == 0) return out;
        }
    }
}

ScanOutcome run_scan(long long max_order, std::ostream* lines,
                     const std::function<void(const QuadraticForm&, bool)>& on_instance) {
    ScanOutcome outcome;
    for (const auto& group : enumerate_groups(max_order)) {
        for (const auto& form : enumerate_quadratic_forms(group)) {
            const TheoremReport report = verify_theorem(form, /*with_oracle=*/false);
            ++outcome.instances;
            if (report.pass) ++outcome.passed;
            if (lines) {
                *lines << "{\"group\":[";
                for (std::size_t i = 0; i < group.rank(); ++i) {
                    if (i) *lines << ",";
                    *lines << group.orders()[i];
                }
                *lines << "],\"diag\":[";
                for (std::size_t i = 0; i < group.rank(); ++i) {
                    if (i) *lines << ",";
                    *lines << "\"" << form.diag()[i].str() << "\"";
                }
                *lines << "],\"offdiag\":{";
                bool first = true;
                for (std::size_t i = 0; i < group.rank(); ++i)
                    for (std::size_t j = i + 1; j < group.rank(); ++j) {
                        if (!first) *lines << ",";
                        first = false;
                        *lines << "\"" << (i + 1) << "," << (j + 1) << "\":\""
                               << form.offdiag()[i][j].str() << "\"";
                    }
                *lines << "},\"radical\":" << report.radical.order()
                       << ",\"flavor\":\"" << to_string(report.flavor) << "\""
                       << ",\"verdict\":\"" << (report.pass ? "PASS" : "FAIL") << "\"}\n";
            }
            if (on_instance) on_instance(form, report.pass);
        }
    }
    return outcome;
}

}  // namespace fusion2s
