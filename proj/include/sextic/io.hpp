#pragma once

#include "sextic/alexander.hpp"
#include "sextic/constructions.hpp"

namespace sextic {

/* Curve-description document (JSON):
 *   field:            optional minimal-polynomial integer array, ascending, monic
 *   degree:           total degree of the form
 *   polynomial:       [{exps:[i,j,l], coeff:"p/q" | ["p/q",...]}]
 *   num_components:   declared r
 *   singular_points:  [{point:[c,c,c], type:"A2"|"auto", truncation:16,
 *                       local_coordinates:{x:[germ terms], y:[...]}?}]
 * Scalar syntax is bit-exact: "p/q" in lowest terms with q > 0, extension
 * elements as coefficient arrays over Q. */
CurveSpec parse_curve_document(const std::string& json_text);
std::string curve_document_json(const CurveSpec& spec);

struct PointReport {
    std::string point;
    std::string type;
    int mu = 0;
    int delta = 0;
    std::vector<int> rho;            // k = 2..5
    std::vector<std::string> ideals; // k = 2..5
};

struct Report {
    int degree = 6;
    long r = 1;
    int kmin = 1, kmax = 5;
    std::vector<PointReport> points;
    std::vector<int> rho_total; // k = kmin..kmax
    std::vector<int> rank;
    std::vector<long> ell;
    bool has_alexander = false;
    AlexanderPolynomial reduced, generic;
    std::vector<std::string> warnings;
};

Report build_report(const CurveSpec& spec, int kmin = 1, int kmax = -1);
std::string report_text(const Report& r);
std::string report_json(const Report& r);
Report parse_report_json(const std::string& text);

/* Engine-regenerated local-data tables, keyed like the golden
 * transcriptions; ideals are printed in the convenient model coordinates. */
std::vector<ReferenceRow> regenerate_simple_table();
std::vector<ReferenceRow> regenerate_nonsimple_table();

std::string table_csv(const std::vector<ReferenceRow>& rows);
std::vector<ReferenceRow> parse_table_csv(const std::string& text);

} // namespace sextic
