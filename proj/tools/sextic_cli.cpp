#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sextic/io.hpp"
#include "sextic/newton.hpp"

using namespace sextic;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << text;
}

int cmd_analyze(const std::string& path, const std::string& krange, const std::string& report_out,
                const std::string& format) {
    CurveSpec spec = parse_curve_document(read_file(path));
    int kmin = 1, kmax = spec.degree - 1;
    if (!krange.empty()) {
        auto colon = krange.find(':');
        if (colon == std::string::npos) throw parse_error("--k-range expects kmin:kmax");
        try {
            kmin = std::stoi(krange.substr(0, colon));
            kmax = std::stoi(krange.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("--k-range expects integers kmin:kmax");
        }
    }
    Report rep = build_report(spec, kmin, kmax);
    std::string text = format == "json" ? report_json(rep) : report_text(rep);
    if (!report_out.empty())
        write_file(report_out, text);
    else
        std::cout << text;
    return 0;
}

int cmd_germ(const std::string& poly, int k, int d) {
    Germ f = parse_germ(poly);
    SingularityType type = classify(f);
    std::cout << "germ: " << f.str() << "\n";
    std::cout << "type: " << type.str() << "\n";
    std::cout << "mu:   " << milnor_number(f) << "\n";

    if (type.is_unknown())
        throw unsupported_germ("germ is outside the sextic catalog");

    LocalData data = analyze_germ(f, std::nullopt, std::nullopt, 16, d);
    NewtonBoundary nb = boundary(data.model);
    std::cout << "Newton boundary of the model " << data.model.truncated(12).str() << ":\n";
    for (const auto& face : nb.faces)
        std::cout << "  covector (" << face.q.p << "," << face.q.q << "), m(f,Q) = " << face.m << "\n";
    if (k < 1 || k >= d) throw parse_error("k must satisfy 1 <= k < d");
    std::cout << "J(k=" << k << ", d=" << d << ") = " << data.ideals[k - 1].str() << "\n";
    std::cout << "rho(" << k << ") = " << data.rho[k - 1] << "\n";
    return 0;
}

int cmd_tables(const std::string& which, const std::string& out) {
    std::vector<ReferenceRow> rows;
    if (which == "simple")
        rows = regenerate_simple_table();
    else if (which == "nonsimple")
        rows = regenerate_nonsimple_table();
    else
        throw parse_error("--which must be simple or nonsimple");
    std::string csv = table_csv(rows);
    if (!out.empty())
        write_file(out, csv);
    else
        std::cout << csv;
    return 0;
}

int cmd_construct(const std::string& name, const std::string& out) {
    CurveSpec spec;
    if (name == "six-lines")
        spec = fixture_six_lines();
    else if (name == "torus-6-cusps")
        spec = fixture_torus_six_cusps();
    else if (name == "linear-3A5")
        spec = fixture_linear_3A5();
    else if (name == "nine-cuspidal")
        spec = fixture_nine_cuspidal();
    else
        throw parse_error("unknown construction: " + name);
    std::string text = curve_document_json(spec);
    if (!out.empty())
        write_file(out, text);
    else
        std::cout << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomials of plane sextics via local multiplier-type ideals"};
    app.require_subcommand(1);

    std::string path, krange, report_out, format = "text";
    auto* analyze = app.add_subcommand("analyze", "analyze a curve-description file");
    analyze->add_option("file", path, "curve document (JSON)")->required();
    analyze->add_option("--k-range", krange, "kmin:kmax (default full)");
    analyze->add_option("--report-out", report_out, "write the report to a file");
    analyze->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string poly;
    int k = 5, d = 6;
    auto* germ = app.add_subcommand("germ", "local data of a bivariate polynomial germ");
    germ->add_option("polynomial", poly, "e.g. \"v^3+u^2*v^2+u^9\"")->required();
    germ->add_option("--k", k, "multiplier level (default 5)");
    germ->add_option("--d", d, "curve degree (default 6)");

    std::string which = "simple", table_out;
    auto* tables = app.add_subcommand("tables", "regenerate the local-data tables");
    tables->add_option("--which", which, "simple | nonsimple")->check(CLI::IsMember({"simple", "nonsimple"}));
    tables->add_option("--out", table_out, "write CSV to a file");

    std::string name, construct_out;
    auto* construct = app.add_subcommand("construct", "emit a fixture curve document");
    construct->add_option("name", name, "six-lines | torus-6-cusps | linear-3A5 | nine-cuspidal")->required();
    construct->add_option("--out", construct_out, "write the document to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(path, krange, report_out, format);
        if (*germ) return cmd_germ(poly, k, d);
        if (*tables) return cmd_tables(which, table_out);
        if (*construct) return cmd_construct(name, construct_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 1;
}
