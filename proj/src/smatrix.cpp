#include "fusion2s/smatrix.hpp"

#include <map>
#include <set>

#include "fusion2s/errors.hpp"

namespace fusion2s {

namespace {

std::string char_label(const GroupElement& index) { return "chi" + to_string(index); }

std::string values_label(const std::vector<UnityScalar>& values) {
    std::string out = "chi{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    out += "}";
    return out;
}

// Cyclic decomposition of a subgroup by greedy peeling: repeatedly adjoin an
// element realizing the exponent of the current quotient, corrected inside
// its coset so that its order in H equals its order in the quotient. The
// span stays an internal direct sum with invariant-factor orders.
struct CyclicDecomposition {
    std::vector<GroupElement> generators;
    std::vector<long long> orders;
    // coordinates of every member against the generators, member order
    std::vector<std::vector<long long>> coords;
};

CyclicDecomposition decompose(const Subgroup& subgroup) {
    const auto& g = subgroup.parent();
    CyclicDecomposition dec;

    std::map<GroupElement, std::vector<long long>> span;
    span.emplace(g.identity(), std::vector<long long>{});

    const auto quotient_order = [&](const GroupElement& h) {
        GroupElement acc = h;
        long long m = 1;
        while (span.find(acc) == span.end()) {
            acc = g.add(acc, h);
            ++m;
        }
        return m;
    };

    while (static_cast<long long>(span.size()) < subgroup.order()) {
        long long exponent = 1;
        for (const auto& h : subgroup.members())
            if (span.find(h) == span.end()) exponent = std::max(exponent, quotient_order(h));

        GroupElement chosen = g.identity();
        bool found = false;
        for (const auto& h : subgroup.members()) {
            if (found) break;
            if (span.find(h) != span.end() || quotient_order(h) != exponent) continue;
            for (const auto& [s, coords] : span) {
                const GroupElement candidate = g.add(h, s);
                if (g.order_of(candidate) == exponent) {
                    chosen = candidate;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw InvariantViolation("cyclic decomposition found no pure generator");

        dec.generators.push_back(chosen);
        dec.orders.push_back(exponent);
        std::map<GroupElement, std::vector<long long>> grown;
        for (const auto& [s, coords] : span) {
            GroupElement acc = s;
            for (long long c = 0; c < exponent; ++c) {
                auto extended = coords;
                extended.push_back(c);
                if (!grown.emplace(acc, std::move(extended)).second)
                    throw InvariantViolation("cyclic decomposition span is not a direct sum");
                acc = g.add(acc, chosen);
            }
        }
        span = std::move(grown);
    }

    dec.coords.reserve(subgroup.members().size());
    for (const auto& h : subgroup.members()) {
        const auto it = span.find(h);
        if (it == span.end()) throw InvariantViolation("decomposition span misses a member");
        dec.coords.push_back(it->second);
    }
    return dec;
}

}  // namespace

CharacterTable char_table(const FiniteAbelianGroup& group) {
    const auto elems = group.elements();
    std::vector<std::string> row_labels, col_labels;
    row_labels.reserve(elems.size());
    col_labels.reserve(elems.size());
    std::vector<UnityScalar> entries;
    entries.reserve(elems.size() * elems.size());
    for (const auto& a : elems) {
        row_labels.push_back(char_label(a));
        const Character chi(group, a);
        for (const auto& x : elems) entries.push_back(chi.eval(x));
    }
    for (const auto& x : elems) col_labels.push_back(to_string(x));
    return CharacterTable{
        LabeledUnityMatrix(std::move(row_labels), std::move(col_labels), std::move(entries))};
}

CharacterTable char_table(const Subgroup& subgroup) {
    const CyclicDecomposition dec = decompose(subgroup);
    const std::size_t n = subgroup.members().size();
    const std::size_t t = dec.orders.size();

    // character indices run over prod Z_{m_i}, lexicographically
    std::vector<std::vector<long long>> indices;
    indices.push_back({});
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::vector<long long>> grown;
        for (const auto& idx : indices)
            for (long long d = 0; d < dec.orders[i]; ++d) {
                auto extended = idx;
                extended.push_back(d);
                grown.push_back(std::move(extended));
            }
        indices = std::move(grown);
    }

    std::vector<std::string> row_labels, col_labels;
    std::vector<UnityScalar> entries;
    entries.reserve(n * n);
    for (const auto& d : indices) {
        std::vector<UnityScalar> row;
        row.reserve(n);
        for (std::size_t x = 0; x < n; ++x) {
            UnityScalar value;
            for (std::size_t i = 0; i < t; ++i)
                value *= UnityScalar::from_fraction(d[i] * dec.coords[x][i], dec.orders[i]);
            row.push_back(value);
        }
        row_labels.push_back(values_label(row));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    for (const auto& h : subgroup.members()) col_labels.push_back(to_string(h));
    return CharacterTable{
        LabeledUnityMatrix(std::move(row_labels), std::move(col_labels), std::move(entries))};
}

LabeledUnityMatrix st_matrix_direct(const QuadraticForm& form) {
    const Subgroup& radical = form.muger_center();
    const GroupElement unit = form.group().identity();
    const Subgroup trivial = Subgroup::trivial(form.group());

    // one row per Schur class; set order gives rows sorted lexicographically
    // by exponent sequence
    std::set<std::vector<UnityScalar>> rows;
    for (const auto& chi : characters(form.group())) {
        const auto restricted = restrict_to(chi, radical);
        if (rows.count(restricted.values())) continue;
        // entries flow through the module-braiding scalar of the regular
        // representative at the unit simple, not through the character table
        const BraidedModuleCat regular(form, trivial, chi);
        std::vector<UnityScalar> row;
        row.reserve(radical.members().size());
        for (const auto& g : radical.members()) row.push_back(sigma_scalar(regular, unit, g));
        if (!(row == restricted.values()))
            throw InvariantViolation("module-braiding row differs from the class restriction");
        rows.insert(std::move(row));
    }

    if (rows.size() != radical.members().size())
        throw InvariantViolation("S-matrix row count differs from the Mueger center order");
    std::vector<std::string> row_labels, cols;
    std::vector<UnityScalar> entries;
    for (const auto& row : rows) {
        row_labels.push_back(values_label(row));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    for (const auto& g : radical.members()) cols.push_back(to_string(g));
    return LabeledUnityMatrix(std::move(row_labels), std::move(cols), std::move(entries));
}

LabeledUnityMatrix st_matrix_via_center(const Bicharacter& beta) {
    const CenterSMatrix s = center_s_matrix(beta.group());
    const QuadraticForm form = beta.quadratic_form();
    std::vector<CenterSimple> cols;
    cols.reserve(form.muger_center().members().size());
    for (const auto& l : form.muger_center().members()) cols.push_back(embed_muger(l, beta));
    return restrict_and_dedup(s, cols);
}

namespace {

TheoremReport build_report(const QuadraticForm& form, const std::optional<Bicharacter>& beta) {
    MugerClassification classification = classify_muger(form);
    LabeledUnityMatrix st = st_matrix_direct(form);
    CharacterTable table = char_table(form.muger_center());

    TheoremReport report{form,
                         std::move(classification.radical),
                         classification.flavor,
                         std::move(st),
                         std::move(table),
                         std::nullopt,
                         std::nullopt,
                         std::nullopt,
                         false};
    report.direct_vs_table = equal_up_to_permutation(report.st_direct, report.table.table);
    report.pass = report.direct_vs_table.has_value();
    if (beta) {
        report.st_oracle = st_matrix_via_center(*beta);
        report.oracle_vs_direct = equal_up_to_permutation(*report.st_oracle, report.st_direct);
        report.pass = report.pass && report.oracle_vs_direct.has_value();
    }
    return report;
}

}  // namespace

TheoremReport verify_theorem(const QuadraticForm& form, bool with_oracle) {
    std::optional<Bicharacter> beta;
    if (with_oracle) {
        beta = realizing_bicharacter(form);
        if (!beta)
            throw OracleUnavailable("no bicharacter realizes this form; run without the oracle");
    }
    return build_report(form, beta);
}

TheoremReport verify_theorem(const Bicharacter& beta, bool with_oracle) {
    const QuadraticForm form = beta.quadratic_form();
    return build_report(form, with_oracle ? std::optional<Bicharacter>(beta) : std::nullopt);
}

}  // namespace fusion2s
