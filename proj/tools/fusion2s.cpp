// fusion2s: exact computations for braided pointed fusion categories
// presented by quadratic forms on finite abelian groups. Exit codes:
//   0  success / theorem certificate PASS
//   1  certificate FAIL (a comparison that would falsify the theorem)
//   2  input or validation error
//   3  capability or size limit (no oracle for the form, cap exceeded)

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusion2s/errors.hpp"
#include "fusion2s/io.hpp"
#include "fusion2s/scan.hpp"
#include "fusion2s/smatrix.hpp"

namespace {

using namespace fusion2s;

struct Options {
    std::string format = "table";
    std::string output;
};

std::ostream& open_sink(const Options& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw InputError("cannot open output file '" + opt.output + "'");
    return file;
}

void emit(const Options& opt, const nlohmann::json& doc, const std::string& table) {
    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    if (opt.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << table;
}

int run_validate(const std::string& input, const Options& opt) {
    const CategorySpec spec = load_category_spec(input);
    const nlohmann::json normalized = render_category_spec(spec);
    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    out << normalized.dump(2) << "\n";
    return 0;
}

int run_muger(const std::string& input, const Options& opt) {
    const CategorySpec spec = load_category_spec(input);
    const Subgroup& radical = spec.form.muger_center();
    nlohmann::json doc;
    doc["group"] = spec.form.group().orders();
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : radical.members()) members.push_back(m.residues);
    doc["muger_center"] = std::move(members);
    doc["order"] = radical.order();
    emit(opt, doc, "Mueger center " + render_subgroup(radical) + "\n");
    return 0;
}

int run_classify(const std::string& input, const Options& opt) {
    const CategorySpec spec = load_category_spec(input);
    const MugerClassification cls = classify_muger(spec.form);
    nlohmann::json doc;
    doc["group"] = spec.form.group().orders();
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : cls.radical.members()) members.push_back(m.residues);
    doc["radical"] = std::move(members);
    doc["signs"] = cls.signs;
    doc["flavor"] = to_string(cls.flavor);

    std::string table = "Mueger center " + render_subgroup(cls.radical) + "\n";
    table += "sign character:";
    for (std::size_t i = 0; i < cls.signs.size(); ++i)
        table += " " + to_string(cls.radical.members()[i]) + "->" +
                 (cls.signs[i] == 1 ? "+1" : "-1");
    table += "\nflavor: " + to_string(cls.flavor) + "\n";
    emit(opt, doc, table);
    return 0;
}

int run_stmatrix(const std::string& input, bool via_center, const Options& opt) {
    const CategorySpec spec = load_category_spec(input);
    LabeledUnityMatrix st = [&] {
        if (!via_center) return st_matrix_direct(spec.form);
        if (spec.bicharacter) return st_matrix_via_center(*spec.bicharacter);
        const auto beta = realizing_bicharacter(spec.form);
        if (!beta)
            throw OracleUnavailable("no bicharacter realizes this form; use the direct route");
        return st_matrix_via_center(*beta);
    }();
    emit(opt, matrix_to_json(st), render_matrix_table(st));
    return 0;
}

int run_chartable(const std::vector<long long>& orders, const Options& opt) {
    const FiniteAbelianGroup group(orders);
    const CharacterTable table = char_table(group);
    emit(opt, matrix_to_json(table.table), render_matrix_table(table.table));
    return 0;
}

int run_verify(const std::string& input, bool with_oracle, const Options& opt) {
    const CategorySpec spec = load_category_spec(input);
    const TheoremReport report = spec.bicharacter && with_oracle
                                     ? verify_theorem(*spec.bicharacter, true)
                                     : verify_theorem(spec.form, with_oracle);
    std::string table = "verdict: " + std::string(report.pass ? "PASS" : "FAIL") + "\n";
    table += "flavor: " + to_string(report.flavor) + "\n";
    table += "Mueger center " + render_subgroup(report.radical) + "\n";
    table += "S-matrix (module-category route):\n" + render_matrix_table(report.st_direct);
    if (!report.pass) {
        table += "character table of the Mueger center:\n" +
                 render_matrix_table(report.table.table);
        if (report.st_oracle)
            table += "S-matrix (center route):\n" + render_matrix_table(*report.st_oracle);
    }
    emit(opt, report_to_json(report), table);
    return report.pass ? 0 : 1;
}

int run_scan_cmd(long long max_size, const Options& opt) {
    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    std::unique_ptr<QuadraticForm> offending;
    const ScanOutcome outcome =
        run_scan(max_size, &out, [&](const QuadraticForm& form, bool pass) {
            if (!pass && !offending) offending = std::make_unique<QuadraticForm>(form);
        });
    std::cerr << outcome.instances << " instances, " << outcome.passed << " passed\n";
    if (!outcome.all_pass() && offending) {
        std::cerr << "first failing form:\n"
                  << render_category_spec(CategorySpec{*offending, std::nullopt}).dump(2) << "\n";
    }
    return outcome.all_pass() ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact 2-categorical S-matrix computations for braided pointed "
                 "fusion categories"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "write the document to a file instead of stdout");

    std::string input;
    bool via_center = false;
    bool with_oracle = false;
    std::vector<long long> orders;
    long long max_size = 16;

    auto* validate = app.add_subcommand("validate", "parse and validate a category spec");
    validate->add_option("input", input, "category spec file (JSON), or - for stdin")->required();

    auto* muger = app.add_subcommand("muger", "compute the Mueger center");
    muger->add_option("input", input)->required();

    auto* classify = app.add_subcommand("classify", "Tannakian / super-Tannakian classification");
    classify->add_option("input", input)->required();

    auto* stmatrix = app.add_subcommand("stmatrix", "compute the 2-categorical S-matrix");
    stmatrix->add_option("input", input)->required();
    stmatrix->add_flag("--via-center", via_center, "use the Drinfeld-center route");

    auto* chartable = app.add_subcommand("chartable", "character table of an abelian group");
    chartable->add_option("orders", orders, "cyclic factor orders")->required();

    auto* verify = app.add_subcommand("verify", "certify S-matrix == character table");
    verify->add_option("input", input)->required();
    verify->add_flag("--with-oracle", with_oracle, "also compare against the center route");

    auto* scan = app.add_subcommand("scan", "certify every form on every group up to a bound");
    scan->add_option("--max-size", max_size, "largest group order")->capture_default_str();

    // --format/--output live on the app; let them appear after the subcommand
    for (auto* sub : {validate, muger, classify, stmatrix, chartable, verify, scan})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (validate->parsed()) return run_validate(input, opt);
    if (muger->parsed()) return run_muger(input, opt);
    if (classify->parsed()) return run_classify(input, opt);
    if (stmatrix->parsed()) return run_stmatrix(input, via_center, opt);
    if (chartable->parsed()) return run_chartable(orders, opt);
    if (verify->parsed()) return run_verify(input, with_oracle, opt);
    if (scan->parsed()) return run_scan_cmd(max_size, opt);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const OracleUnavailable& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const SizeError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const CrossCheckError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
