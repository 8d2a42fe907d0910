#include "fusion2s/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fusion2s/errors.hpp"

namespace fusion2s {

UnityScalar parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        const long long num = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw InputError("malformed rational literal '" + text + "'");
        long long den = 1;
        if (slash != std::string::npos) {
            den = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1)
                throw InputError("malformed rational literal '" + text + "'");
        }
        return UnityScalar::from_fraction(num, den);
    } catch (const std::logic_error&) {
        throw InputError("malformed rational literal '" + text + "'");
    }
}

namespace {

std::string rational_at(const nlohmann::json& value, const std::string& where) {
    if (!value.is_string())
        throw InputError(where + " must be a rational string \"p/q\"");
    return value.get<std::string>();
}

}  // namespace

CategorySpec parse_category_spec(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("category spec must be an object");
    if (!doc.contains("group") || !doc["group"].is_array() || doc["group"].empty())
        throw InputError("category spec needs a non-empty \"group\" order list");
    std::vector<long long> orders;
    for (const auto& n : doc["group"]) {
        if (!n.is_number_integer()) throw InputError("group orders must be integers");
        orders.push_back(n.get<long long>());
    }
    FiniteAbelianGroup group(orders);
    const std::size_t k = group.rank();

    const bool has_form = doc.contains("quadratic_form");
    const bool has_bichar = doc.contains("bicharacter");
    if (has_form && has_bichar)
        throw InputError("give either \"quadratic_form\" or \"bicharacter\", not both");

    if (has_bichar) {
        const auto& block = doc["bicharacter"];
        if (!block.is_object() || !block.contains("matrix"))
            throw InputError("\"bicharacter\" needs a \"matrix\" grid");
        const auto& grid = block["matrix"];
        if (!grid.is_array() || grid.size() != k)
            throw InputError("bicharacter matrix must be a " + std::to_string(k) + "x" +
                             std::to_string(k) + " grid");
        std::vector<std::vector<UnityScalar>> matrix(k, std::vector<UnityScalar>(k));
        for (std::size_t i = 0; i < k; ++i) {
            if (!grid[i].is_array() || grid[i].size() != k)
                throw InputError("bicharacter matrix must be a " + std::to_string(k) + "x" +
                                 std::to_string(k) + " grid");
            for (std::size_t j = 0; j < k; ++j)
                matrix[i][j] = parse_rational(rational_at(grid[i][j], "bicharacter entry"));
        }
        Bicharacter beta(group, std::move(matrix));
        return CategorySpec{beta.quadratic_form(), std::move(beta)};
    }

    std::vector<UnityScalar> diag(k);
    std::vector<std::vector<UnityScalar>> offdiag(k, std::vector<UnityScalar>(k));
    if (has_form) {
        const auto& block = doc["quadratic_form"];
        if (!block.is_object()) throw InputError("\"quadratic_form\" must be an object");
        if (block.contains("diag")) {
            const auto& d = block["diag"];
            if (!d.is_array() || d.size() != k)
                throw InputError("\"diag\" must list " + std::to_string(k) + " rationals");
            for (std::size_t i = 0; i < k; ++i)
                diag[i] = parse_rational(rational_at(d[i], "diag entry"));
        }
        if (block.contains("offdiag")) {
            const auto& o = block["offdiag"];
            if (!o.is_object()) throw InputError("\"offdiag\" must map \"i,j\" to rationals");
            for (const auto& [key, value] : o.items()) {
                const auto comma = key.find(',');
                std::size_t i = 0, j = 0;
                try {
                    if (comma == std::string::npos) throw std::invalid_argument(key);
                    i = std::stoul(key.substr(0, comma));
                    j = std::stoul(key.substr(comma + 1));
                } catch (const std::logic_error&) {
                    throw InputError("offdiag key '" + key + "' is not of the form \"i,j\"");
                }
                if (i < 1 || j <= i || j > k)
                    throw InputError("offdiag key '" + key + "' needs 1 <= i < j <= " +
                                     std::to_string(k));
                offdiag[i - 1][j - 1] = parse_rational(rational_at(value, "offdiag entry"));
            }
        }
    }
    return CategorySpec{QuadraticForm(group, std::move(diag), std::move(offdiag)), std::nullopt};
}

CategorySpec load_category_spec(const std::string& path) {
    nlohmann::json doc;
    try {
        if (path == "-") {
            doc = nlohmann::json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw InputError("cannot open input file '" + path + "'");
            doc = nlohmann::json::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("document is not valid JSON: ") + e.what());
    }
    return parse_category_spec(doc);
}

nlohmann::json render_category_spec(const CategorySpec& spec) {
    nlohmann::json out;
    out["group"] = spec.form.group().orders();
    if (spec.bicharacter) {
        const std::size_t k = spec.form.group().rank();
        nlohmann::json grid = nlohmann::json::array();
        for (std::size_t i = 0; i < k; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < k; ++j)
                row.push_back(spec.bicharacter->matrix()[i][j].str());
            grid.push_back(std::move(row));
        }
        out["bicharacter"] = {{"matrix", std::move(grid)}};
    } else {
        nlohmann::json diag = nlohmann::json::array();
        for (const auto& r : spec.form.diag()) diag.push_back(r.str());
        nlohmann::json off = nlohmann::json::object();
        const std::size_t k = spec.form.group().rank();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                off[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
                    spec.form.offdiag()[i][j].str();
        out["quadratic_form"] = {{"diag", std::move(diag)}, {"offdiag", std::move(off)}};
    }
    return out;
}

nlohmann::json matrix_to_json(const LabeledUnityMatrix& m) {
    nlohmann::json out;
    out["row_labels"] = m.row_labels();
    out["col_labels"] = m.col_labels();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

namespace {

nlohmann::json subgroup_to_json(const Subgroup& subgroup) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : subgroup.members()) members.push_back(m.residues);
    return members;
}

nlohmann::json witness_to_json(const std::optional<PermutationWitness>& witness) {
    nlohmann::json out;
    out["equal"] = witness.has_value();
    if (witness) {
        out["row_perm"] = witness->row_map;
        out["col_perm"] = witness->col_map;
    }
    return out;
}

}  // namespace

nlohmann::json report_to_json(const TheoremReport& report) {
    nlohmann::json out;
    out["group"] = report.form.group().orders();
    out["form"] = render_category_spec(CategorySpec{report.form, std::nullopt})["quadratic_form"];
    out["radical"] = subgroup_to_json(report.radical);
    out["flavor"] = to_string(report.flavor);
    out["st_matrix"] = matrix_to_json(report.st_direct);
    out["char_table"] = matrix_to_json(report.table.table);
    out["direct_vs_char_table"] = witness_to_json(report.direct_vs_table);
    if (report.st_oracle) {
        out["oracle_matrix"] = matrix_to_json(*report.st_oracle);
        out["oracle_vs_direct"] = witness_to_json(report.oracle_vs_direct);
    }
    out["verdict"] = report.pass ? "PASS" : "FAIL";
    return out;
}

namespace {

std::string pretty_entry(const UnityScalar& v) {
    if (v.is_one()) return "1";
    if (v == UnityScalar::from_fraction(1, 2)) return "-1";
    if (v == UnityScalar::from_fraction(1, 4)) return "i";
    if (v == UnityScalar::from_fraction(3, 4)) return "-i";
    return v.str();
}

}  // namespace

std::string render_matrix_table(const LabeledUnityMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows() + 1);
    cells[0].push_back("");
    for (const auto& label : m.col_labels()) cells[0].push_back(label);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cells[i + 1].push_back(m.row_labels()[i]);
        for (std::size_t j = 0; j < m.cols(); ++j)
            cells[i + 1].push_back(pretty_entry(m.at(i, j)));
    }
    std::vector<std::size_t> widths(m.cols() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j)
            widths[j] = std::max(widths[j], row[j].size());

    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << std::string(widths[j] - row[j].size(), ' ') << row[j];
            out << (j + 1 == row.size() ? "\n" : "  ");
        }
    }
    out << "entries are exponents p/q of e^(2*pi*i*p/q); 1,-1,i,-i shown symbolically\n";
    return out.str();
}

std::string render_subgroup(const Subgroup& subgroup) {
    std::ostringstream out;
    out << "order " << subgroup.order() << ": {";
    for (std::size_t i = 0; i < subgroup.members().size(); ++i) {
        if (i) out << ", ";
        out << to_string(subgroup.members()[i]);
    }
    out << "}";
    return out.str();
}

}  // namespace fusion2s
