#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ellred/batch.hpp"
#include "ellred/expr.hpp"

namespace {

ellred::BaseFieldPtr field_from_arg(const std::string& desc) {
    return ellred::field_from_json(ellred::Json::parse(desc));
}

int do_classify(const std::string& input_path, const ellred::ClassifyOptions& opts) {
    if (input_path.empty() || input_path == "-") {
        auto r = ellred::run_classify(std::cin, std::cout, opts);
        return r.errors ? 1 : 0;
    }
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
    }
    auto r = ellred::run_classify(in, std::cout, opts);
    return r.errors ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction types and residually transcendental non-ruled extensions "
                 "for elliptic function fields over valued base fields"};
    app.require_subcommand(0, 1);

    bool pretty = false;
    int jobs = 1;
    std::string input_path;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--jobs", jobs, "parallel workers for batch classification")->check(CLI::Range(1, 256));

    auto* classify = app.add_subcommand("classify", "classify JSON-lines curve records (default)");
    classify->add_option("input", input_path, "input file (default stdin)");
    classify->add_flag("--pretty", pretty, "indent JSON output");
    classify->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 256));

    auto* gauss = app.add_subcommand("gauss", "analyze E(X)[sqrt(g)] over a Gauss extension");
    std::string gauss_field, gauss_gen = "X", gauss_rad;
    gauss->add_option("--field", gauss_field, "base field descriptor (JSON)")->required();
    gauss->add_option("--generator", gauss_gen, "affine generator expression, e.g. \"t^-1*X\"");
    gauss->add_option("--radicand", gauss_rad, "radicand g as an expression in X")->required();
    gauss->add_flag("--pretty", pretty, "indent JSON output");

    auto* conic = app.add_subcommand("conic", "decide whether Y^2 = A*X^2 + B has a rational point");
    std::string conic_field = R"({"kind":"t-adic"})";
    std::string conic_a, conic_b;
    conic->add_option("--field", conic_field, "base field descriptor (JSON); its residue field is used");
    conic->add_option("A", conic_a, "coefficient A")->required();
    conic->add_option("B", conic_b, "coefficient B")->required();
    conic->add_flag("--pretty", pretty, "indent JSON output");

    auto* selftest = app.add_subcommand("selftest", "run the built-in regression suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ellred::ClassifyOptions opts{pretty, jobs};
    try {
        if (selftest->parsed()) {
            int failures = ellred::run_selftest(std::cout);
            std::cout << (failures ? "selftest: FAILED\n" : "selftest: ok\n");
            return failures ? 1 : 0;
        }
        if (gauss->parsed()) {
            auto field = field_from_arg(gauss_field);
            ellred::GaussValuation w(ellred::parse_generator(gauss_gen, field));
            ellred::XRatFunc g = ellred::parse_x_ratfunc(gauss_rad, field);
            ellred::Json j = ellred::analysis_to_json(ellred::analyze_quadratic_gauss(g, w));
            std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
            return 0;
        }
        if (conic->parsed()) {
            auto field = field_from_arg(conic_field);
            ellred::ResidueElement a = ellred::residue(ellred::parse_element(conic_a, field));
            ellred::ResidueElement b = ellred::residue(ellred::parse_element(conic_b, field));
            ellred::ConicClass c = ellred::conic_normalize(a, b, field->semantics());
            ellred::Json j = ellred::conic_to_json(c, ellred::conic_has_point(c));
            std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
            return 0;
        }
        if (classify->parsed()) return do_classify(input_path, opts);
        return do_classify(input_path, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
