#include "sextic/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sextic {

using nlohmann::json;

/* ---------------- scalar / germ encodings ---------------- */

namespace {

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational());
    json arr = json::array();
    for (const auto& c : s.coords()) arr.push_back(to_string(c));
    return arr;
}

Scalar scalar_from_json(const json& j, const FieldPtr& field) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_array()) {
        if (!field) throw parse_error("extension scalar given but no field declared");
        std::vector<Rat> coords;
        for (const auto& e : j) {
            if (e.is_string())
                coords.push_back(parse_rational(e.get<std::string>()));
            else if (e.is_number_integer())
                coords.push_back(Rat(static_cast<long>(e.get<long long>())));
            else
                throw parse_error("extension coordinates must be strings or integers");
        }
        if (static_cast<int>(coords.size()) != field->degree())
            throw parse_error("extension scalar needs exactly deg(m) coordinates");
        return Scalar(std::move(coords), field);
    }
    throw parse_error("bad scalar encoding");
}

json germ_to_json(const Germ& g) {
    json arr = json::array();
    for (const auto& [e, c] : g.terms()) arr.push_back(json{{"exps", {e.a, e.b}}, {"coeff", scalar_to_json(c)}});
    return arr;
}

Germ germ_from_json(const json& j, const FieldPtr& field) {
    if (!j.is_array()) throw parse_error("germ must be a list of terms");
    Germ g;
    for (const auto& term : j) {
        if (!term.contains("exps") || !term.contains("coeff")) throw parse_error("germ term needs exps and coeff");
        auto exps = term["exps"];
        if (!exps.is_array() || exps.size() != 2) throw parse_error("germ exps must be [a, b]");
        int a = exps[0].get<int>(), b = exps[1].get<int>();
        if (a < 0 || b < 0) throw parse_error("germ exponents must be nonnegative");
        Scalar c = scalar_from_json(term["coeff"], field);
        g.set_coeff(a, b, g.coeff(a, b) + c);
    }
    return g;
}

} // namespace

/* ---------------- curve documents ---------------- */

CurveSpec parse_curve_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    try {
        CurveSpec spec;
        if (j.contains("field")) {
            std::vector<long> mp;
            for (const auto& e : j["field"]) mp.push_back(e.get<long>());
            spec.field = std::make_shared<const NumberField>(mp);
        }
        spec.degree = j.at("degree").get<int>();
        if (spec.degree < 1) throw parse_error("degree must be positive");
        HomogeneousForm F(spec.degree);
        for (const auto& term : j.at("polynomial")) {
            auto exps = term.at("exps");
            if (!exps.is_array() || exps.size() != 3) throw parse_error("polynomial exps must be [i, j, l]");
            int i = exps[0].get<int>(), jj = exps[1].get<int>(), l = exps[2].get<int>();
            if (i < 0 || jj < 0 || l < 0) throw parse_error("polynomial exponents must be nonnegative");
            if (i + jj + l != spec.degree) throw parse_error("polynomial exponents do not sum to the degree");
            Scalar c = scalar_from_json(term.at("coeff"), spec.field);
            F.set_coeff(i, jj, l, F.coeff(i, jj, l) + c);
        }
        spec.F = F;
        spec.num_components = j.at("num_components").get<long>();
        for (const auto& pj : j.at("singular_points")) {
            SingularPointSpec ps;
            auto pt = pj.at("point");
            if (!pt.is_array() || pt.size() != 3) throw parse_error("point must have three coordinates");
            ps.point = ProjectivePoint{scalar_from_json(pt[0], spec.field), scalar_from_json(pt[1], spec.field),
                                       scalar_from_json(pt[2], spec.field)};
            if (pj.contains("type")) {
                std::string t = pj["type"].get<std::string>();
                if (t != "auto") ps.declared = SingularityType::parse(t);
            }
            if (pj.contains("truncation")) {
                ps.truncation = pj["truncation"].get<int>();
                if (ps.truncation < 6 || ps.truncation > 64) throw parse_error("truncation must be in [6, 64]");
            }
            if (pj.contains("local_coordinates")) {
                const auto& lc = pj["local_coordinates"];
                Germ x = germ_from_json(lc.at("x"), spec.field).truncated(ps.truncation);
                Germ y = germ_from_json(lc.at("y"), spec.field).truncated(ps.truncation);
                try {
                    ps.user_jets = CoordinateJets(std::move(x), std::move(y));
                } catch (const verification_error& e) {
                    throw parse_error(std::string("bad local coordinates: ") + e.what());
                }
            }
            spec.points.push_back(std::move(ps));
        }
        return spec;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad curve document: ") + e.what());
    }
}

std::string curve_document_json(const CurveSpec& spec) {
    json j;
    if (spec.field) {
        json mp = json::array();
        for (const auto& c : spec.field->min_poly()) mp.push_back(static_cast<long long>(c.get_num().get_si()));
        j["field"] = mp;
    }
    j["degree"] = spec.degree;
    json poly = json::array();
    for (const auto& [e, c] : spec.F.terms())
        poly.push_back(json{{"exps", {e.i, e.j, e.l}}, {"coeff", scalar_to_json(c)}});
    j["polynomial"] = poly;
    j["num_components"] = spec.num_components;
    json pts = json::array();
    for (const auto& ps : spec.points) {
        json p;
        p["point"] = json::array(
            {scalar_to_json(ps.point.X), scalar_to_json(ps.point.Y), scalar_to_json(ps.point.Z)});
        p["type"] = ps.declared ? ps.declared->str() : "auto";
        p["truncation"] = ps.truncation;
        if (ps.user_jets) {
            p["local_coordinates"] =
                json{{"x", germ_to_json(ps.user_jets->x())}, {"y", germ_to_json(ps.user_jets->y())}};
        }
        pts.push_back(std::move(p));
    }
    j["singular_points"] = pts;
    return j.dump(2) + "\n";
}

/* ---------------- reports ---------------- */

namespace {

std::string point_str(const ProjectivePoint& p) {
    return "(" + p.X.str() + " : " + p.Y.str() + " : " + p.Z.str() + ")";
}

} // namespace

Report build_report(const CurveSpec& spec, int kmin, int kmax) {
    if (kmax < 0) kmax = spec.degree - 1;
    if (kmin < 1 || kmax >= spec.degree || kmin > kmax)
        throw parse_error("k range must satisfy 1 <= kmin <= kmax <= d-1");

    AnalyzedCurve curve = analyze_curve(spec);

    Report rep;
    rep.degree = spec.degree;
    rep.r = spec.num_components;
    rep.kmin = kmin;
    rep.kmax = kmax;

    for (const auto& cp : curve.points) {
        PointReport pr;
        pr.point = point_str(cp.point);
        pr.type = cp.local.type.str();
        pr.mu = cp.local.mu;
        pr.delta = delta_invariant(cp.local.type);
        for (int k = 2; k <= 5 && k < spec.degree; ++k) {
            pr.rho.push_back(cp.local.rho[k - 1]);
            pr.ideals.push_back(cp.local.ideals[k - 1].str());
        }
        rep.points.push_back(std::move(pr));
    }

    for (int k = kmin; k <= kmax; ++k) {
        SigmaMatrix m = sigma_matrix(curve, k);
        int rho = rho_total(curve, k);
        int rank = matrix_rank(m.entries);
        rep.rho_total.push_back(rho);
        rep.rank.push_back(rank);
        rep.ell.push_back(rho - rank);
    }

    rep.has_alexander = (kmin == 1 && kmax == spec.degree - 1);
    if (rep.has_alexander) {
        std::vector<long> ells(rep.ell.begin(), rep.ell.end());
        rep.reduced = alexander_reduced(ells, spec.degree);
        rep.generic = alexander_generic(rep.reduced, spec.num_components);
    }

    rep.warnings.push_back("singular points as declared; completeness of the list is not verified");
    if (rep.has_alexander && spec.degree == 6) {
        int idx5 = 5 - kmin;
        if (idx5 >= 0 && idx5 < static_cast<int>(rep.rho_total.size()) && rep.rho_total[idx5] >= 7)
            rep.warnings.push_back("rho(5) >= 7: expected to be of torus type (reported, never assumed)");
        long e2 = rep.reduced.ells[1] + rep.reduced.ells[3];
        long e3 = rep.reduced.ells[2];
        if (spec.num_components == 1 && (e2 > 0 || e3 > 0))
            rep.warnings.push_back(
                "reduced Alexander polynomial has factors associated with reducible curves, but r = 1");
        if (spec.num_components == 1) {
            std::vector<SingularityType> types;
            for (const auto& cp : curve.points) types.push_back(cp.local.type);
            try {
                if (!plucker_check(types))
                    rep.warnings.push_back("delta sum over rho(4)-essential points exceeds 10: "
                                           "inconsistent with an irreducible sextic");
            } catch (const std::exception&) {
                // types outside the table ranges: no diagnostic
            }
        }
    }
    return rep;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "degree " << r.degree << " curve, r = " << r.r << "\n";
    os << "\nsingular points:\n";
    for (const auto& p : r.points) {
        os << "  " << p.point << "  " << p.type << "  mu = " << p.mu << "  delta = " << p.delta << "\n";
        os << "    rho_{3,5} = (";
        // display in the table's order (rho(5), rho(4), rho(3))
        os << p.rho[3] << ", " << p.rho[2] << ", " << p.rho[1] << ")";
        os << ", rho(2) = " << p.rho[0] << "\n";
        for (int k = 5; k >= 2; --k)
            if (p.rho[k - 2] > 0) os << "    J(k=" << k << ") = " << p.ideals[k - 2] << "\n";
    }
    os << "\nglobal data:\n";
    for (int k = r.kmin; k <= r.kmax; ++k) {
        int i = k - r.kmin;
        os << "  k = " << k << ": rho = " << r.rho_total[i] << ", rank sigma = " << r.rank[i]
           << ", ell = " << r.ell[i] << "\n";
    }
    if (r.has_alexander) {
        os << "\nreduced Alexander polynomial: " << r.reduced.factored() << "\n";
        os << "generic Alexander polynomial: " << r.generic.factored() << "\n";
        if (r.degree == 6) {
            os << "coefficients (ascending): ";
            auto c = r.generic.coefficients();
            for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
            os << "\n";
        }
    }
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

namespace {

json alexander_to_json(const AlexanderPolynomial& a) {
    json j;
    j["d"] = a.d;
    j["ells"] = a.ells;
    j["r"] = a.r;
    j["generic"] = a.generic;
    j["factored"] = a.factored();
    if (a.d == 6) j["coefficients"] = a.coefficients();
    return j;
}

AlexanderPolynomial alexander_from_json(const json& j) {
    AlexanderPolynomial a;
    a.d = j.at("d").get<int>();
    a.ells = j.at("ells").get<std::vector<long>>();
    a.r = j.at("r").get<long>();
    a.generic = j.at("generic").get<bool>();
    return a;
}

} // namespace

std::string report_json(const Report& r) {
    json j;
    j["degree"] = r.degree;
    j["r"] = r.r;
    j["kmin"] = r.kmin;
    j["kmax"] = r.kmax;
    json pts = json::array();
    for (const auto& p : r.points) {
        pts.push_back(json{{"point", p.point},
                           {"type", p.type},
                           {"mu", p.mu},
                           {"delta", p.delta},
                           {"rho", p.rho},
                           {"ideals", p.ideals}});
    }
    j["points"] = pts;
    j["rho_total"] = r.rho_total;
    j["rank"] = r.rank;
    j["ell"] = r.ell;
    j["has_alexander"] = r.has_alexander;
    if (r.has_alexander) {
        j["reduced"] = alexander_to_json(r.reduced);
        j["generic_poly"] = alexander_to_json(r.generic);
    }
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON report: ") + e.what());
    }
    Report r;
    r.degree = j.at("degree").get<int>();
    r.r = j.at("r").get<long>();
    r.kmin = j.at("kmin").get<int>();
    r.kmax = j.at("kmax").get<int>();
    for (const auto& pj : j.at("points")) {
        PointReport p;
        p.point = pj.at("point").get<std::string>();
        p.type = pj.at("type").get<std::string>();
        p.mu = pj.at("mu").get<int>();
        p.delta = pj.at("delta").get<int>();
        p.rho = pj.at("rho").get<std::vector<int>>();
        p.ideals = pj.at("ideals").get<std::vector<std::string>>();
        r.points.push_back(std::move(p));
    }
    r.rho_total = j.at("rho_total").get<std::vector<int>>();
    r.rank = j.at("rank").get<std::vector<int>>();
    r.ell = j.at("ell").get<std::vector<long>>();
    r.has_alexander = j.at("has_alexander").get<bool>();
    if (r.has_alexander) {
        r.reduced = alexander_from_json(j.at("reduced"));
        r.generic = alexander_from_json(j.at("generic_poly"));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

/* ---------------- table regeneration ---------------- */

namespace {

ReferenceRow engine_row(const SingularityType& t, int k) {
    ReferenceRow row;
    row.type = t;
    row.k = k;
    LocalIdeal ideal = [&] {
        if (t.family == SingularityType::Family::Sp1 || t.family == SingularityType::Family::Sp2)
            return multiplier_ideal_charts(sp_resolution(t).divisors, k, 6);
        auto [h, jets] = make_convenient(catalog_normal_form(t));
        return multiplier_ideal_monomial(h, k, 6);
    }();
    row.ideal = ideal.str();
    row.rho = ideal.is_unit() ? 0 : ideal.colength();
    return row;
}

} // namespace

std::vector<ReferenceRow> regenerate_simple_table() {
    std::vector<ReferenceRow> rows;
    for (const auto& g : simple_reference_table()) rows.push_back(engine_row(g.type, g.k));
    return rows;
}

std::vector<ReferenceRow> regenerate_nonsimple_table() {
    std::vector<ReferenceRow> rows;
    for (const auto& g : nonsimple_reference_table()) rows.push_back(engine_row(g.type, g.k));
    return rows;
}

std::string table_csv(const std::vector<ReferenceRow>& rows) {
    // type and ideal are quoted: both may contain commas ("B3,6", "<u, v>")
    std::ostringstream os;
    os << "type,k,ideal,rho\n";
    for (const auto& r : rows)
        os << "\"" << r.type.str() << "\"," << r.k << ",\"" << r.ideal << "\"," << r.rho << "\n";
    return os.str();
}

std::vector<ReferenceRow> parse_table_csv(const std::string& text) {
    std::vector<ReferenceRow> rows;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        // "type",k,"ideal",rho
        auto quoted = [&](size_t from, size_t& after) {
            size_t q1 = line.find('"', from);
            size_t q2 = q1 == std::string::npos ? std::string::npos : line.find('"', q1 + 1);
            if (q2 == std::string::npos) throw parse_error("bad table row: " + line);
            after = q2 + 1;
            return line.substr(q1 + 1, q2 - q1 - 1);
        };
        size_t after = 0;
        ReferenceRow r;
        r.type = SingularityType::parse(quoted(0, after));
        size_t c1 = line.find(',', after);
        size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw parse_error("bad table row: " + line);
        r.k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
        r.ideal = quoted(c2, after);
        size_t c3 = line.find(',', after);
        if (c3 == std::string::npos) throw parse_error("bad table row: " + line);
        r.rho = std::stoi(line.substr(c3 + 1));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace sextic
