#include "sextic/catalog.hpp"

#include <numeric>
#include <sstream>

namespace sextic {

/* ---------------- SingularityType ---------------- */

std::string SingularityType::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::A: os << "A" << n; break;
        case Family::D: os << "D" << n; break;
        case Family::E: os << "E" << n; break;
        case Family::B: os << "B" << m << "," << n; break;
        case Family::C: os << "C" << m << "," << n; break;
        case Family::D47: os << "D4,7"; break;
        case Family::Sp1: os << "Sp1"; break;
        case Family::Sp2: os << "Sp2"; break;
        case Family::Unknown: os << "Unknown"; break;
    }
    return os.str();
}

SingularityType SingularityType::parse(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "Sp1") return Sp(1);
    if (s == "Sp2") return Sp(2);
    if (s == "D4,7") return D47();
    if (s == "Unknown") return Unknown();
    if (s.size() < 2) throw parse_error("bad singularity type: " + in);
    char fam = s[0];
    std::string rest = s.substr(1);
    auto comma = rest.find(',');
    try {
        if (comma == std::string::npos) {
            int n = std::stoi(rest);
            if (fam == 'A') return A(n);
            if (fam == 'D') return D(n);
            if (fam == 'E') return E(n);
        } else {
            int m = std::stoi(rest.substr(0, comma));
            int n = std::stoi(rest.substr(comma + 1));
            if (fam == 'B') return B(m, n);
            if (fam == 'C') return C(m, n);
        }
    } catch (const std::exception&) {
    }
    throw parse_error("bad singularity type: " + in);
}

int catalog_mu(const SingularityType& t) {
    using F = SingularityType::Family;
    switch (t.family) {
        case F::A:
        case F::D:
        case F::E: return t.n;
        case F::B: return (t.m - 1) * (t.n - 1);
        case F::C: return t.m + t.n + 1;
        case F::D47: return 16;
        case F::Sp1: return 18;
        case F::Sp2: return 21;
        default: throw unsupported_germ("Milnor number of an unclassified type");
    }
}

int catalog_branches(const SingularityType& t) {
    using F = SingularityType::Family;
    switch (t.family) {
        case F::A: return t.n % 2 == 0 ? 1 : 2;
        case F::D: return t.n % 2 == 0 ? 3 : 2;
        case F::E: return t.n == 7 ? 2 : 1;
        case F::B: return std::gcd(t.m, t.n);
        case F::C: return (t.m % 2 == 0 ? 2 : 1) + (t.n % 2 == 0 ? 2 : 1);
        case F::D47: return 3;
        case F::Sp1: return 1;
        case F::Sp2: return 2;
        default: throw unsupported_germ("branch count of an unclassified type");
    }
}

int delta_invariant(const SingularityType& t) {
    // 2*delta = mu + r - 1 (Milnor's formula)
    int mu = catalog_mu(t), r = catalog_branches(t);
    return (mu + r - 1) / 2;
}

Germ catalog_normal_form(const SingularityType& t) {
    using F = SingularityType::Family;
    auto mono = [](int a, int b, long c = 1) { return Germ::monomial(a, b, Scalar(c)); };
    switch (t.family) {
        case F::A: return mono(0, 2) + mono(t.n + 1, 0);
        case F::D: return mono(1, 2) + mono(t.n - 1, 0);
        case F::E:
            if (t.n == 6) return mono(0, 3) + mono(4, 0);
            if (t.n == 7) return mono(0, 3) + mono(3, 1);
            if (t.n == 8) return mono(0, 3) + mono(5, 0);
            break;
        case F::B: return mono(0, t.m) + mono(t.n, 0);
        case F::C: return mono(0, t.m) + mono(2, 2) + mono(t.n, 0);
        case F::D47: return mono(0, 4) + mono(3, 2) + mono(5, 1) + mono(7, 0);
        case F::Sp1: {
            Germ f3 = mono(0, 2) - mono(3, 0); // v^2 - u^3
            return f3 * f3 + mono(3, 3);       // + (uv)^3
        }
        case F::Sp2: {
            Germ f3 = mono(0, 2) - mono(3, 0);
            return f3 * f3 - mono(0, 6); // - v^6
        }
        default: break;
    }
    throw unsupported_germ("no normal form for type " + t.str());
}

/* ---------------- reference tables (as printed) ---------------- */

LocalIdeal parse_ideal(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '<') body = body.substr(1);
    if (!body.empty() && body.back() == '>') body.pop_back();
    std::vector<Germ> gens;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] == '(') depth++;
        if (i < body.size() && body[i] == ')') depth--;
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            std::string piece = body.substr(start, i - start);
            if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(parse_germ(piece));
            start = i + 1;
        }
    }
    return LocalIdeal(std::move(gens), /*minimalize=*/false);
}

namespace {

std::vector<ReferenceRow> build_simple_table() {
    std::vector<ReferenceRow> rows;
    auto add = [&](SingularityType t, int k, const std::string& ideal, int rho) {
        rows.push_back({t, k, ideal, rho});
    };
    auto pow_u = [](int r) { return r == 1 ? std::string("<u, v>") : "<u^" + std::to_string(r) + ", v>"; };

    // k = 4
    for (int n = 1; n <= 4; ++n) add(SingularityType::A(n), 4, "<1>", 0);
    for (int n = 5; n <= 22; ++n) add(SingularityType::A(n), 4, pow_u((n + 1) / 6), (n + 1) / 6);
    for (int n = 4; n <= 21; ++n) add(SingularityType::D(n), 4, pow_u((n - 4) / 6 + 1), (n - 4) / 6 + 1);
    for (int n = 6; n <= 8; ++n) add(SingularityType::E(n), 4, "<u, v>", 1);

    // k = 5 (the printed table stops at A19 / D20)
    add(SingularityType::A(1), 5, "<1>", 0);
    for (int n = 2; n <= 19; ++n) add(SingularityType::A(n), 5, pow_u((n + 1) / 3), (n + 1) / 3);
    for (int n = 4; n <= 20; ++n) add(SingularityType::D(n), 5, pow_u((n - 3) / 3 + 1), (n - 3) / 3 + 1);
    for (int n = 6; n <= 8; ++n) add(SingularityType::E(n), 5, "<u^2, v>", 2);
    return rows;
}

std::vector<ReferenceRow> build_nonsimple_table() {
    std::vector<ReferenceRow> rows;
    auto add = [&](const char* type, const char* j5, int r5, const char* j4, int r4, const char* j3, int r3) {
        SingularityType t = SingularityType::parse(type);
        rows.push_back({t, 5, j5, r5});
        rows.push_back({t, 4, j4, r4});
        rows.push_back({t, 3, j3, r3});
    };
    // item 1
    add("B3,6", "<u^3, u v, v^2>", 4, "<u^2, v>", 2, "<u, v>", 1);
    add("C3,7", "<u^3, u v, v^2>", 4, "<u^2, v>", 2, "<u, v>", 1);
    add("C3,8", "<u^3, u v, v^2>", 4, "<u^2, v>", 2, "<u, v>", 1);
    // item 2
    add("C3,9", "<u^4, v^2, u v>", 5, "<u^2, v>", 2, "<u, v>", 1);
    add("B3,8", "<u^4, v^2, u v>", 5, "<u^2, v>", 2, "<u, v>", 1);
    // item 3
    add("C6,6", "<u^3, v^3, u v>", 5, "<u^2, v^2, u v>", 3, "<u, v>", 1);
    // item 4
    add("B4,6", "<u^3, v^2, v u^2>", 5, "<u^2, v^2, u v>", 3, "<u, v>", 1);
    add("D4,7", "<u^3, v^2, v u^2>", 5, "<u^2, v^2, u v>", 3, "<u, v>", 1);
    // item 5 (as printed; see the regeneration suite for the engine's value)
    add("C3,12", "<u^5, v^2, u v>", 6, "<u^2, v>", 2, "<u, v>", 1);
    // item 6
    add("B3,10", "<u^5, v^2, u v>", 6, "<u^3, v>", 3, "<u, v>", 1);
    // item 7
    add("C6,9", "<u^4, v^3, u v>", 6, "<u^2, v^2, u v>", 3, "<u, v>", 1);
    // item 8
    add("Sp1", "<u^4, v^2 - u^3, v^3, u^2 v>", 6, "<u^2, u v, v^2>", 3, "<u, v>", 1);
    // item 9
    add("C3,15", "<u^6, v^2, u v>", 7, "<u^3, v>", 3, "<u, v>", 1);
    // item 10
    add("C9,9", "<u^4, v^4, u v>", 7, "<u^2, v^2, u v>", 3, "<u, v>", 1);
    // item 11
    add("C6,12", "<u^5, v^3, u v>", 7, "<u^3, v^2, u v>", 4, "<u, v>", 1);
    // item 12
    add("Sp2", "<u^4, v^2 - u^3, v^3, u v^2>", 7, "<u^3, u v, v^2>", 4, "<u, v>", 1);
    // item 13 (as printed)
    add("B3,12", "<u^6, v^2>", 8, "<u^4, v>", 4, "<u^2, v>", 2);
    // item 14
    add("B6,6", "<u^4, u^3 v, u^2 v^2, u v^3, v^4>", 10, "<u^3, u^2 v, u v^2, v^3>", 6, "<u^2, u v, v^2>", 3);
    rows.push_back({SingularityType::B(6, 6), 2, "<u, v>", 1});
    return rows;
}

} // namespace

const std::vector<ReferenceRow>& simple_reference_table() {
    static const std::vector<ReferenceRow> table = build_simple_table();
    return table;
}

const std::vector<ReferenceRow>& nonsimple_reference_table() {
    static const std::vector<ReferenceRow> table = build_nonsimple_table();
    return table;
}

ReferenceRow reference_row(const SingularityType& t, int k) {
    for (const auto& row : simple_reference_table())
        if (row.type == t && row.k == k) return row;
    for (const auto& row : nonsimple_reference_table())
        if (row.type == t && row.k == k) return row;
    if (t.is_simple() && (k == 2 || k == 3)) return {t, k, "<1>", 0};
    if (!t.is_simple() && k == 2 && !(t.family == SingularityType::Family::B && t.m == 6 && t.n == 6))
        return {t, k, "<1>", 0};
    throw unsupported_germ("no table entry for " + t.str() + " at k=" + std::to_string(k));
}

LocalIdeal reference_ideal(const SingularityType& t, int k) { return parse_ideal(reference_row(t, k).ideal); }

/* ---------------- Sp1 / Sp2 resolutions ---------------- */

namespace {

ChartSequence stage1_chart(const char* name, long p, long q, long p2, long q2) {
    ChartSequence c;
    c.divisor = name;
    c.steps.push_back(ChartStep::monomial_step(p, p2, q, q2));
    return c;
}

ChartSequence stage2_chart(const char* name, const Scalar& shift, long p, long q, long p2, long q2) {
    // first toric chart Cone(T2,T3), then the translation to the strict
    // transform point v1 = shift, then the second toric chart
    ChartSequence c;
    c.divisor = name;
    c.steps.push_back(ChartStep::monomial_step(2, 1, 3, 2));
    c.steps.push_back(ChartStep::translate_step(shift));
    c.steps.push_back(ChartStep::monomial_step(p, p2, q, q2));
    return c;
}

} // namespace

SpResolution sp_resolution_for(const SingularityType& t, const Germ& f, const Scalar& shift) {
    const bool sp1 = t.family == SingularityType::Family::Sp1;
    if (!sp1 && t.family != SingularityType::Family::Sp2)
        throw unsupported_germ("chart resolution data exists only for Sp1 and Sp2");

    std::vector<ChartSequence> charts;
    // stage one: fan (1,0), (1,1), (2,3), (1,2), (0,1); divisors T1, T2, T3
    charts.push_back(stage1_chart("E(T1)", 1, 1, 2, 3));
    charts.push_back(stage1_chart("E(T2)", 2, 3, 1, 2));
    charts.push_back(stage1_chart("E(T3)", 1, 2, 0, 1));
    if (sp1) {
        // second stage over the point on E(T2): same fan again
        charts.push_back(stage2_chart("E(S1)", shift, 1, 1, 2, 3));
        charts.push_back(stage2_chart("E(S2)", shift, 2, 3, 1, 2));
        charts.push_back(stage2_chart("E(S3)", shift, 1, 2, 0, 1));
    } else {
        // second stage fan (1,0), (1,1), (1,2), (1,3), (0,1)
        charts.push_back(stage2_chart("E(R1)", shift, 1, 1, 1, 2));
        charts.push_back(stage2_chart("E(R2)", shift, 1, 2, 1, 3));
        charts.push_back(stage2_chart("E(R3)", shift, 1, 3, 0, 1));
    }

    SpResolution res;
    for (auto& c : charts) {
        DivisorData data;
        data.k_mult = chart_two_form_order(c);
        data.f_mult = chart_valuation(c, f);
        res.u_mult.push_back(chart_valuation(c, Germ::var_u()));
        res.v_mult.push_back(chart_valuation(c, Germ::var_v()));
        res.divisors.emplace_back(std::move(c), data);
    }
    return res;
}

namespace {

SpResolution build_sp(const SingularityType& t) {
    const bool sp1 = t.family == SingularityType::Family::Sp1;
    SpResolution res = sp_resolution_for(t, catalog_normal_form(t), Scalar(1));
    if (sp1) {
        const auto& p = sp1_printed_vectors();
        for (size_t i = 0; i < res.divisors.size(); ++i) {
            if (res.divisors[i].second.k_mult != p.K[i] || res.divisors[i].second.f_mult != p.f[i] ||
                res.u_mult[i] != p.u[i] || res.v_mult[i] != p.v[i])
                throw verification_error("Sp1 divisor data disagrees with the published multiplicity vectors");
        }
    }
    return res;
}

} // namespace

const SpResolution& sp_resolution(const SingularityType& t) {
    using F = SingularityType::Family;
    if (t.family == F::Sp1) {
        static const SpResolution r = build_sp(SingularityType::Sp(1));
        return r;
    }
    if (t.family == F::Sp2) {
        static const SpResolution r = build_sp(SingularityType::Sp(2));
        return r;
    }
    throw unsupported_germ("chart resolution data exists only for Sp1 and Sp2");
}

const Sp1Printed& sp1_printed_vectors() {
    static const Sp1Printed p{
        {1, 4, 2, 5, 12, 6},    // (K)
        {4, 12, 6, 14, 30, 15}, // (pi* f)
        {1, 2, 1, 2, 4, 2},     // (pi* u)
        {1, 3, 2, 3, 6, 3},     // (pi* v)
    };
    return p;
}

std::vector<SingularityType> catalog_all_types() {
    std::vector<SingularityType> out;
    for (int n = 1; n <= 22; ++n) out.push_back(SingularityType::A(n));
    for (int n = 4; n <= 21; ++n) out.push_back(SingularityType::D(n));
    for (int n = 6; n <= 8; ++n) out.push_back(SingularityType::E(n));
    for (const char* s : {"B3,6", "C3,7", "C3,8", "C3,9", "B3,8", "C6,6", "B4,6", "D4,7", "C3,12", "B3,10",
                          "C6,9", "Sp1", "C3,15", "C9,9", "C6,12", "Sp2", "B3,12", "B6,6"})
        out.push_back(SingularityType::parse(s));
    return out;
}

} // namespace sextic
