#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "fusion2s/errors.hpp"
#include "fusion2s/scan.hpp"
#include "fusion2s/smatrix.hpp"

using namespace fusion2s;

namespace {

UnityScalar u(long long p, long long q) { return UnityScalar::from_fraction(p, q); }

QuadraticForm diagonal_form(std::vector<long long> orders, std::vector<UnityScalar> diag) {
    FiniteAbelianGroup g(std::move(orders));
    const std::size_t k = g.rank();
    return QuadraticForm(g, std::move(diag),
                         std::vector<std::vector<UnityScalar>>(k, std::vector<UnityScalar>(k)));
}

std::set<std::vector<UnityScalar>> row_set(const LabeledUnityMatrix& m) {
    std::set<std::vector<UnityScalar>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.insert(m.row(i));
    return out;
}

}  // namespace

TEST_CASE("character tables of cyclic groups") {
    const auto z2 = char_table(FiniteAbelianGroup({2}));
    CHECK(z2.table.entries() == std::vector<UnityScalar>{u(0, 1), u(0, 1), u(0, 1), u(1, 2)});

    const auto z1 = char_table(FiniteAbelianGroup({1}));
    CHECK(z1.table.entries() == std::vector<UnityScalar>{u(0, 1)});

    const auto z3 = char_table(FiniteAbelianGroup({3}));
    for (long long j = 0; j < 3; ++j)
        for (long long k = 0; k < 3; ++k) CHECK(z3.table.at(j, k) == u(j * k, 3));
    CHECK(orthogonality_defect(z3.table) < 1e-9);
}

TEST_CASE("character tables have unit first row and column") {
    for (const auto& group : enumerate_groups(12)) {
        const auto table = char_table(group);
        REQUIRE(table.table.rows() == static_cast<std::size_t>(group.order()));
        for (std::size_t j = 0; j < table.table.cols(); ++j) CHECK(table.table.at(0, j).is_one());
        for (std::size_t i = 0; i < table.table.rows(); ++i) CHECK(table.table.at(i, 0).is_one());
        CHECK(orthogonality_defect(table.table) < 1e-9);
    }
}

TEST_CASE("subgroup tables from the peeled decomposition match restriction characters") {
    for (const auto& orders :
         {std::vector<long long>{12}, {2, 4}, {2, 2, 2}, {9}, {8}, {3, 6}, {16}}) {
        FiniteAbelianGroup g(orders);
        for (const auto& h : enumerate_subgroups(g)) {
            const auto table = char_table(h);
            REQUIRE(table.table.rows() == static_cast<std::size_t>(h.order()));
            CHECK(orthogonality_defect(table.table) < 1e-9);

            std::set<std::vector<UnityScalar>> via_restriction;
            for (const auto& chi : characters_of_subgroup(h)) via_restriction.insert(chi.values());
            CHECK(row_set(table.table) == via_restriction);
        }
    }
}

TEST_CASE("direct S-matrix fixtures") {
    const auto semion = st_matrix_direct(diagonal_form({2}, {u(1, 4)}));
    REQUIRE(semion.rows() == 1);
    CHECK(semion.at(0, 0).is_one());

    const auto svec = st_matrix_direct(diagonal_form({2}, {u(1, 2)}));
    REQUIRE(svec.rows() == 2);
    CHECK(row_set(svec) == std::set<std::vector<UnityScalar>>{{u(0, 1), u(0, 1)},
                                                              {u(0, 1), u(1, 2)}});

    const auto z4 = st_matrix_direct(diagonal_form({4}, {u(1, 4)}));
    REQUIRE(z4.rows() == 2);
    REQUIRE(z4.cols() == 2);
    CHECK(row_set(z4) == std::set<std::vector<UnityScalar>>{{u(0, 1), u(0, 1)},
                                                            {u(0, 1), u(1, 2)}});
}

TEST_CASE("center-route S-matrix fixtures") {
    FiniteAbelianGroup z2({2});
    const auto svec = st_matrix_via_center(Bicharacter(z2, {{u(1, 2)}}));
    REQUIRE(svec.rows() == 2);
    CHECK(row_set(svec) == std::set<std::vector<UnityScalar>>{{u(0, 1), u(0, 1)},
                                                              {u(0, 1), u(1, 2)}});

    FiniteAbelianGroup z1({1});
    const auto one = st_matrix_via_center(Bicharacter(z1, {{u(0, 1)}}));
    REQUIRE(one.rows() == 1);
    CHECK(one.at(0, 0).is_one());

    const auto trivial = st_matrix_via_center(Bicharacter(z2, {{u(0, 1)}}));
    const auto table = char_table(z2);
    CHECK(equal_up_to_permutation(trivial, table.table).has_value());
}

TEST_CASE("S-matrix shape and entry orders") {
    for (const auto& group : enumerate_groups(8)) {
        for (const auto& q : enumerate_quadratic_forms(group)) {
            const auto st = st_matrix_direct(q);
            const auto radical_order = q.muger_center().order();
            CHECK(st.rows() == static_cast<std::size_t>(radical_order));
            CHECK(st.cols() == static_cast<std::size_t>(radical_order));
            for (std::size_t i = 0; i + 1 < st.rows(); ++i)
                CHECK(st.row(i) < st.row(i + 1));  // rows sorted by exponent sequence
            long long exponent = 1;
            for (const auto& l : q.muger_center().members())
                exponent = std::lcm(exponent, group.order_of(l));
            for (const auto& entry : st.entries()) CHECK(exponent % entry.den() == 0);
        }
    }
}

TEST_CASE("theorem certificates on the fixtures") {
    const auto svec_report = verify_theorem(diagonal_form({2}, {u(1, 2)}), /*with_oracle=*/true);
    CHECK(svec_report.pass);
    CHECK(svec_report.flavor == Flavor::SuperTannakian);
    CHECK(svec_report.st_oracle.has_value());
    CHECK(svec_report.direct_vs_table.has_value());
    CHECK(svec_report.oracle_vs_direct.has_value());

    const auto semion_report = verify_theorem(diagonal_form({2}, {u(1, 4)}), /*with_oracle=*/false);
    CHECK(semion_report.pass);
    CHECK(!semion_report.st_oracle.has_value());

    CHECK_THROWS_AS(verify_theorem(diagonal_form({2}, {u(1, 4)}), /*with_oracle=*/true),
                    OracleUnavailable);
}

TEST_CASE("witnesses really map one matrix onto the other") {
    const auto report = verify_theorem(diagonal_form({4}, {u(1, 4)}), /*with_oracle=*/true);
    REQUIRE(report.pass);
    const auto& w = *report.direct_vs_table;
    for (std::size_t i = 0; i < report.st_direct.rows(); ++i)
        for (std::size_t j = 0; j < report.st_direct.cols(); ++j)
            CHECK(report.st_direct.at(i, j) ==
                  report.table.table.at(w.row_map[i], w.col_map[j]));
}
