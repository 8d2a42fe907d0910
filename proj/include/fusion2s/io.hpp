#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fusion2s/forms.hpp"
#include "fusion2s/matrix.hpp"
#include "fusion2s/smatrix.hpp"

namespace fusion2s {

/// A parsed category description: the grading group and the braiding data,
/// either a quadratic form (general) or a bicharacter (trivial associator).
/// A document with neither block means the trivial form.
struct CategorySpec {
    QuadraticForm form;
    std::optional<Bicharacter> bicharacter;
};

/// Parses "p/q" or "p" with optional sign; the value is normalized mod 1.
UnityScalar parse_rational(const std::string& text);

CategorySpec parse_category_spec(const nlohmann::json& doc);
CategorySpec load_category_spec(const std::string& path);  // "-" reads stdin

/// Normalized echo of a spec: every coefficient present, reduced, mod 1.
nlohmann::json render_category_spec(const CategorySpec& spec);

nlohmann::json matrix_to_json(const LabeledUnityMatrix& m);
nlohmann::json report_to_json(const TheoremReport& report);

/// Plain-text table with a legend; entries are exponent fractions, with
/// fourth roots of unity shown symbolically (1, -1, i, -i).
std::string render_matrix_table(const LabeledUnityMatrix& m);

std::string render_subgroup(const Subgroup& subgroup);

}  // namespace fusion2s
