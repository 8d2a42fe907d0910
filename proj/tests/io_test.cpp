#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusion2s/errors.hpp"
#include "fusion2s/io.hpp"

using namespace fusion2s;
using nlohmann::json;

namespace {

UnityScalar u(long long p, long long q) { return UnityScalar::from_fraction(p, q); }

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/4") == u(1, 4));
    CHECK(parse_rational("-1/4") == u(3, 4));
    CHECK(parse_rational("7/4") == u(3, 4));
    CHECK(parse_rational("3") == u(0, 1));
    CHECK(parse_rational(" 1 / 2 ") == u(1, 2));
    CHECK(parse_rational("0") == UnityScalar());
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("a/b"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("spec parsing happy paths") {
    const auto semion = parse_category_spec(json::parse(
        R"({"group":[2],"quadratic_form":{"diag":["1/4"]}})"));
    CHECK(semion.form.eval(GroupElement{{1}}) == u(1, 4));
    CHECK(!semion.bicharacter.has_value());

    const auto with_off = parse_category_spec(json::parse(
        R"({"group":[2,2],"quadratic_form":{"diag":["0","0"],"offdiag":{"1,2":"1/2"}}})"));
    CHECK(with_off.form.offdiag()[0][1] == u(1, 2));

    const auto bichar = parse_category_spec(json::parse(
        R"({"group":[2],"bicharacter":{"matrix":[["1/2"]]}})"));
    REQUIRE(bichar.bicharacter.has_value());
    CHECK(bichar.form.eval(GroupElement{{1}}) == u(1, 2));

    // a bare group means the trivial form
    const auto trivial = parse_category_spec(json::parse(R"({"group":[1]})"));
    CHECK(trivial.form.eval(GroupElement{{0}}).is_one());
}

TEST_CASE("spec parsing error paths") {
    CHECK_THROWS_AS(parse_category_spec(json::parse(R"({"group":[]})")), InputError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(R"({"group":[2],"quadratic_form":{},"bicharacter":{}})")),
                    InputError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(
                        R"({"group":[2],"quadratic_form":{"diag":["1/3"]}})")),
                    WellDefinednessError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(
                        R"({"group":[2],"quadratic_form":{"diag":["0","0"]}})")),
                    InputError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(
                        R"({"group":[2,2],"quadratic_form":{"offdiag":{"2,1":"1/2"}}})")),
                    InputError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(
                        R"({"group":[2,2],"quadratic_form":{"offdiag":{"junk":"1/2"}}})")),
                    InputError);
    CHECK_THROWS_AS(parse_category_spec(json::parse(R"({"group":[4097]})")), SizeError);
}

TEST_CASE("spec round-trips through its normalized rendering") {
    for (const char* text : {
             R"({"group":[2],"quadratic_form":{"diag":["1/4"]}})",
             R"({"group":[2,4],"quadratic_form":{"diag":["-1/4","3/8"],"offdiag":{"1,2":"1/2"}}})",
             R"({"group":[3],"bicharacter":{"matrix":[["2/3"]]}})",
             R"({"group":[1]})",
         }) {
        const auto spec = parse_category_spec(json::parse(text));
        const json rendered = render_category_spec(spec);
        const auto reparsed = parse_category_spec(rendered);
        CHECK(render_category_spec(reparsed) == rendered);
        CHECK(reparsed.form.value_table() == spec.form.value_table());
        CHECK(reparsed.bicharacter.has_value() == spec.bicharacter.has_value());
    }
}

TEST_CASE("report documents are deterministic and self-consistent") {
    const auto spec = parse_category_spec(json::parse(
        R"({"group":[2],"quadratic_form":{"diag":["1/2"]}})"));
    const auto report = verify_theorem(spec.form, /*with_oracle=*/true);
    const json doc1 = report_to_json(report);
    const json doc2 = report_to_json(verify_theorem(spec.form, true));
    CHECK(doc1.dump(2) == doc2.dump(2));
    CHECK(json::parse(doc1.dump(2)) == doc1);
    CHECK(doc1["verdict"] == "PASS");
    CHECK(doc1["flavor"] == "superTannakian");
    CHECK(doc1["st_matrix"]["entries"].size() == 2);
    CHECK(doc1.contains("oracle_matrix"));
    CHECK(doc1["direct_vs_char_table"]["equal"] == true);
}

TEST_CASE("pretty tables carry symbolic fourth roots and the legend") {
    const auto spec = parse_category_spec(json::parse(
        R"({"group":[2],"quadratic_form":{"diag":["1/2"]}})"));
    const auto table = render_matrix_table(st_matrix_direct(spec.form));
    CHECK(table.find("-1") != std::string::npos);
    CHECK(table.find("exponents") != std::string::npos);
}
