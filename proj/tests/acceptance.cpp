// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fusion2s/errors.hpp"
#include "fusion2s/scan.hpp"
#include "fusion2s/smatrix.hpp"

using namespace fusion2s;

namespace {

struct AcceptanceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw AcceptanceFailure(what);
}

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
        ++failures;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << verdict << "  criterion " << number << " (" << label << ", " << ms << " ms)";
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n"
              << std::flush;
}

UnityScalar u(long long p, long long q) { return UnityScalar::from_fraction(p, q); }

QuadraticForm diagonal_form(std::vector<long long> orders, std::vector<UnityScalar> diag) {
    FiniteAbelianGroup g(std::move(orders));
    const std::size_t k = g.rank();
    return QuadraticForm(g, std::move(diag),
                         std::vector<std::vector<UnityScalar>>(k, std::vector<UnityScalar>(k)));
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(FUSION2S_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Every (group, forms) family for the order-16 criteria; enumerated once.
const std::vector<std::pair<FiniteAbelianGroup, std::vector<QuadraticForm>>>& families_to_16() {
    static const auto cache = [] {
        std::vector<std::pair<FiniteAbelianGroup, std::vector<QuadraticForm>>> out;
        for (const auto& group : enumerate_groups(16))
            out.emplace_back(group, enumerate_quadratic_forms(group));
        return out;
    }();
    return cache;
}

std::vector<Bicharacter> build_oracle_instances();

// Every oracle instance exercised by criterion 2, reused by criteria 5 and 7.
const std::vector<Bicharacter>& oracle_instances() {
    static const auto cache = build_oracle_instances();
    return cache;
}

std::vector<Bicharacter> build_oracle_instances() {
    std::vector<Bicharacter> out;
    for (const auto& group : enumerate_groups(8))
        for (auto& beta : enumerate_bicharacters(group)) out.push_back(std::move(beta));

    const std::vector<std::vector<long long>> shapes = {
        {17},       {18},    {4, 4},  {20},       {24},    {25},    {27},       {2, 12},
        {36},       {40},    {45},    {2, 4, 4},  {48},    {49},    {50},       {7, 7},
        {54},       {3, 12}, {60},    {2, 2, 12}, {63},    {5, 10}, {6, 6},     {64},
    };
    std::mt19937 rng(424242);
    for (const auto& orders : shapes) {
        FiniteAbelianGroup group(orders);
        const std::size_t k = group.rank();
        std::vector<std::vector<UnityScalar>> matrix(k, std::vector<UnityScalar>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const long long g = std::gcd(group.orders()[i], group.orders()[j]);
                matrix[i][j] = u(static_cast<long long>(rng() % g), g);
            }
        out.emplace_back(group, std::move(matrix));
    }
    return out;
}

void criterion1_main_theorem() {
    const ScanOutcome outcome = run_scan(16, nullptr);
    check(outcome.instances > 100, "expected a large instance family");
    check(outcome.all_pass(), std::to_string(outcome.instances - outcome.passed) +
                                  " of " + std::to_string(outcome.instances) +
                                  " instances failed the direct comparison");
    check(run_cli("scan --max-size 16 --output /tmp/fusion2s_acceptance_scan.jsonl") == 0,
          "CLI scan did not exit 0");
}

void criterion2_oracle_equivalence() {
    int done = 0;
    for (const auto& beta : oracle_instances()) {
        const QuadraticForm form = beta.quadratic_form();
        const LabeledUnityMatrix via_center = st_matrix_via_center(beta);
        const LabeledUnityMatrix direct = st_matrix_direct(form);
        const auto radical = static_cast<std::size_t>(form.muger_center().order());
        check(via_center.rows() == radical && via_center.cols() == radical,
              "dedup row count differs from the Mueger center order");
        check(equal_up_to_permutation(via_center, direct).has_value(),
              "center route disagrees with the module-category route");
        check(equal_up_to_permutation(via_center, char_table(form.muger_center()).table)
                  .has_value(),
              "center route disagrees with the character table");
        ++done;
    }
    check(done > 600, "oracle family unexpectedly small");
}

void criterion3_fixtures() {
    for (long long n = 1; n <= 8; ++n) {
        const auto trivial = QuadraticForm::trivial(FiniteAbelianGroup({n}));
        const auto st = st_matrix_direct(trivial);
        check(st.rows() == static_cast<std::size_t>(n), "trivial-form S-matrix has wrong size");
        check(equal_up_to_permutation(st, char_table(FiniteAbelianGroup({n})).table).has_value(),
              "trivial form on Z_" + std::to_string(n) + " is not the character table");
    }

    const auto svec = diagonal_form({2}, {u(1, 2)});
    const auto svec_st = st_matrix_direct(svec);
    const LabeledUnityMatrix svec_expected({"r0", "r1"}, {"c0", "c1"},
                                           {u(0, 1), u(0, 1), u(0, 1), u(1, 2)});
    check(equal_up_to_permutation(svec_st, svec_expected).has_value(), "sVec S-matrix wrong");
    check(classify_muger(svec).flavor == Flavor::SuperTannakian, "sVec flavor wrong");

    for (long long num : {1, 3}) {
        const auto semion = diagonal_form({2}, {u(num, 4)});
        const auto st = st_matrix_direct(semion);
        check(st.rows() == 1 && st.at(0, 0).is_one(), "semion S-matrix is not [[1]]");
    }

    const auto z4 = diagonal_form({4}, {u(1, 4)});
    const auto z4_st = st_matrix_direct(z4);
    check(z4_st.rows() == 2, "Z_4 quarter-form S-matrix has wrong size");
    check(equal_up_to_permutation(z4_st, char_table(z4.muger_center()).table).has_value(),
          "Z_4 quarter-form S-matrix is not the Z_2 table");
    check(classify_muger(z4).flavor == Flavor::Tannakian, "Z_4 quarter-form flavor wrong");
}

void criterion4_classification() {
    for (const auto& [group, forms] : families_to_16()) {
        const auto elems = group.elements();
        for (const auto& form : forms) {
            const auto classes = schur_classes(form);
            check(classes.size() == static_cast<std::size_t>(form.muger_center().order()),
                  "class count differs from the Mueger center order");

            // the two equivalence criteria, checked on all character pairs:
            // chi_a / chi_b = chi_{a-b}, so quantifying over differences d
            // covers every pair
            std::set<std::vector<UnityScalar>> monodromy_image;
            for (const auto& k : elems) {
                std::vector<UnityScalar> row;
                row.reserve(elems.size());
                for (const auto& g : elems) row.push_back(form.double_braiding(g, k));
                monodromy_image.insert(std::move(row));
            }
            for (const auto& d : elems) {
                const Character delta(group, d);
                std::vector<UnityScalar> values;
                values.reserve(elems.size());
                for (const auto& g : elems) values.push_back(delta.eval(g));
                const bool twist = monodromy_image.count(values) > 0;
                bool trivial_on_center = true;
                for (const auto& l : form.muger_center().members())
                    if (!delta.eval(l).is_one()) {
                        trivial_on_center = false;
                        break;
                    }
                check(twist == trivial_on_center, "Schur criteria disagree at difference " +
                                                      to_string(d));
            }
        }
    }
}

void criterion5_multiplicativity() {
    for (const auto& beta : oracle_instances()) {
        const auto& group = beta.group();
        const CenterSMatrix s = center_s_matrix(group);
        const QuadraticForm form = beta.quadratic_form();
        const auto& radical = form.muger_center();

        std::map<std::string, std::size_t> col_of;
        for (std::size_t j = 0; j < s.matrix.cols(); ++j)
            col_of.emplace(s.matrix.col_labels()[j], j);
        std::vector<std::size_t> cols;
        for (const auto& l : radical.members())
            cols.push_back(col_of.at(to_string(embed_muger(l, beta))));

        const std::size_t r = cols.size();
        for (std::size_t row = 0; row < s.matrix.rows(); ++row)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    const auto sum = group.add(radical.members()[i], radical.members()[j]);
                    const std::size_t cs = cols[radical.member_index(sum)];
                    check(s.matrix.at(row, cs) ==
                              s.matrix.at(row, cols[i]) * s.matrix.at(row, cols[j]),
                          "row fails multiplicativity over radical addition");
                }
    }
}

void criterion6_constancy() {
    for (const auto& [group, forms] : families_to_16()) {
        for (const auto& form : forms) {
            for (const auto& h : enumerate_subgroups_within(form.muger_center())) {
                for (const auto& cat : enumerate_module_braidings(h, form)) {
                    for (const auto& g : form.muger_center().members()) {
                        const UnityScalar reference =
                            sigma_scalar(cat, group.identity(), g);
                        for (const auto& k : group.elements())
                            check(sigma_scalar(cat, k, g) == reference,
                                  "sigma at a Mueger-central grade depends on the simple");
                    }
                }
            }
        }
    }
}

void criterion7_numerical_certificates() {
    for (const auto& [group, forms] : families_to_16())
        for (const auto& form : forms) {
            check(orthogonality_defect(st_matrix_direct(form)) < 1e-9,
                  "S-matrix orthogonality defect too large");
            check(orthogonality_defect(char_table(form.muger_center()).table) < 1e-9,
                  "character table orthogonality defect too large");
        }

    for (const auto& beta : oracle_instances()) {
        check(orthogonality_defect(st_matrix_via_center(beta)) < 1e-9,
              "center-route S-matrix orthogonality defect too large");
    }

    // non-degeneracy of the full center S-matrix; the matrix depends only on
    // the group, and M*M^dagger is cubic in |G|^2, so spot sizes are bounded
    for (const auto& orders : std::vector<std::vector<long long>>{
             {1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}, {16}, {24}}) {
        const auto s = center_s_matrix(FiniteAbelianGroup(orders));
        check(orthogonality_defect(s.matrix) < 1e-9, "center S-matrix fails non-degeneracy");
    }
}

}  // namespace

int main() {
    criterion(1, "main-theorem certificate over all forms up to order 16",
              criterion1_main_theorem);
    criterion(2, "center-oracle equivalence, exhaustive to order 8 plus random to 64",
              criterion2_oracle_equivalence);
    criterion(3, "exact fixtures", criterion3_fixtures);
    criterion(4, "classification counts and dual Schur criteria", criterion4_classification);
    criterion(5, "row multiplicativity over embedded Mueger columns",
              criterion5_multiplicativity);
    criterion(6, "sigma constancy across simples at central grades", criterion6_constancy);
    criterion(7, "numerical certificates below 1e-9", criterion7_numerical_certificates);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
