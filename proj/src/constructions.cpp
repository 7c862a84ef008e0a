#include "sextic/constructions.hpp"

#include <algorithm>

#include "sextic/uni.hpp"

namespace sextic {

namespace {

HomogeneousForm line_Y_minus_sX(const Scalar& s) {
    return HomogeneousForm::monomial(0, 1, 0, Scalar(1)) - HomogeneousForm::monomial(1, 0, 0, s);
}

void verify_types(AnalyzedCurve& curve, const SingularityType& expected) {
    for (const auto& cp : curve.points)
        if (!(cp.local.type == expected))
            throw verification_error("constructed point classifies as " + cp.local.type.str() +
                                     ", expected " + expected.str());
}

} // namespace

CurveSpec six_lines(const std::vector<Scalar>& slopes) {
    if (slopes.size() != 6) throw parse_error("six slopes required");
    for (size_t i = 0; i < slopes.size(); ++i)
        for (size_t j = i + 1; j < slopes.size(); ++j)
            if (slopes[i] == slopes[j]) throw parse_error("slopes must be pairwise distinct");
    HomogeneousForm F = HomogeneousForm::monomial(0, 0, 0, Scalar(1));
    for (const auto& s : slopes) F = F * line_Y_minus_sX(s);

    CurveSpec spec;
    spec.degree = 6;
    spec.F = F;
    spec.num_components = 6;
    SingularPointSpec p;
    p.point = ProjectivePoint{Scalar(0), Scalar(0), Scalar(1)};
    p.declared = SingularityType::B(6, 6);
    spec.points.push_back(p);

    AnalyzedCurve a = analyze_curve(spec);
    verify_types(a, SingularityType::B(6, 6));
    return spec;
}

CurveSpec torus_from_f2_f3(const HomogeneousForm& f2, const HomogeneousForm& f3,
                           const std::vector<ProjectivePoint>& points, long num_components) {
    if (f2.degree() != 2 || f3.degree() != 3) throw parse_error("torus data needs a conic and a cubic");
    CurveSpec spec;
    spec.degree = 6;
    spec.F = f2.pow(3) + f3.pow(2);
    spec.num_components = num_components;
    for (const auto& P : points) {
        if (!f2.eval(P.X, P.Y, P.Z).is_zero() || !f3.eval(P.X, P.Y, P.Z).is_zero())
            throw verification_error("declared intersection point is not on f2 = f3 = 0");
        SingularPointSpec ps;
        ps.point = P;
        spec.points.push_back(ps);
    }
    analyze_curve(spec); // classification must succeed at each point
    return spec;
}

CurveSpec linear_torus_3A5(const HomogeneousForm& ell, const HomogeneousForm& f3) {
    if (ell.degree() != 1 || f3.degree() != 3) throw parse_error("need a line and a cubic");

    /* Intersect the line with the cubic.  Parametrize ell by two points,
     * arranged so that the base point of the parameter t does not itself lie
     * on the cubic (the restricted polynomial must keep degree 3). */
    Scalar a = ell.coeff(1, 0, 0), b = ell.coeff(0, 1, 0), c = ell.coeff(0, 0, 1);
    ProjectivePoint p0, p1;
    if (!a.is_zero()) {
        p0 = {-(b / a), Scalar(1), Scalar(0)};
        p1 = {-(c / a), Scalar(0), Scalar(1)};
    } else if (!b.is_zero()) {
        p0 = {Scalar(1), -(a / b), Scalar(0)};
        p1 = {Scalar(0), -(c / b), Scalar(1)};
    } else {
        p0 = {Scalar(1), Scalar(0), Scalar(0)};
        p1 = {Scalar(0), Scalar(1), Scalar(0)};
    }
    {
        // q1 = alpha p0 + beta p1 off the cubic; q0 independent of q1
        bool found = false;
        const std::pair<long, long> combos[] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {1, -1}};
        for (auto [alpha, beta] : combos) {
            ProjectivePoint q1{p0.X * Scalar(alpha) + p1.X * Scalar(beta),
                               p0.Y * Scalar(alpha) + p1.Y * Scalar(beta),
                               p0.Z * Scalar(alpha) + p1.Z * Scalar(beta)};
            if (f3.eval(q1.X, q1.Y, q1.Z).is_zero()) continue;
            ProjectivePoint q0 = (beta == 0) ? p1 : p0;
            p0 = q0;
            p1 = q1;
            found = true;
            break;
        }
        if (!found) throw verification_error("the line appears to be a component of the cubic");
    }
    // f3(p0 + t p1) as a cubic in t, by interpolation at t = 0..3
    uni::Poly poly(4, Scalar(0));
    {
        Scalar values[4];
        for (long t = 0; t <= 3; ++t)
            values[t] = f3.eval(p0.X + Scalar(t) * p1.X, p0.Y + Scalar(t) * p1.Y, p0.Z + Scalar(t) * p1.Z);
        for (long i = 0; i <= 3; ++i) {
            uni::Poly basis{Scalar(1)};
            Scalar denom(1);
            for (long j = 0; j <= 3; ++j) {
                if (i == j) continue;
                uni::Poly nb(basis.size() + 1, Scalar(0));
                for (size_t s = 0; s < basis.size(); ++s) {
                    nb[s + 1] = nb[s + 1] + basis[s];
                    nb[s] = nb[s] - basis[s] * Scalar(j);
                }
                basis = std::move(nb);
                denom = denom * Scalar(i - j);
            }
            Scalar w = values[i] / denom;
            for (size_t s = 0; s < basis.size(); ++s) poly[s] = poly[s] + basis[s] * w;
        }
    }
    uni::trim(poly);
    if (uni::degree(poly) != 3)
        throw verification_error("line meets the cubic at infinity of the parametrization");

    auto roots = uni::rational_roots(poly);
    if (roots.size() != 3) throw verification_error("the three intersection points must be rational and distinct");

    CurveSpec spec;
    spec.degree = 6;
    spec.F = f3.pow(2) + ell.pow(6);
    spec.num_components = 2;
    for (const auto& rt : roots) {
        Scalar t{rt};
        SingularPointSpec ps;
        ps.point = ProjectivePoint{p0.X + t * p1.X, p0.Y + t * p1.Y, p0.Z + t * p1.Z};
        ps.declared = SingularityType::A(5);
        spec.points.push_back(ps);
    }
    AnalyzedCurve a2 = analyze_curve(spec);
    verify_types(a2, SingularityType::A(5));
    return spec;
}

/* ---------------- dual curve by elimination ---------------- */

namespace {

// coefficient forms (in the dual coordinates a,b,c) of F(p0 + t p1) where
// p0 = (b, -a, 0), p1 = (c, 0, -a)
std::vector<HomogeneousForm> restrict_to_dual_line(const HomogeneousForm& F) {
    std::vector<HomogeneousForm> coeff(4); // cubic in t
    for (auto& f : coeff) f = HomogeneousForm(3);
    for (const auto& [e, cf] : F.terms()) {
        // X = b + t c, Y = -a, Z = -t a
        for (int s = 0; s <= e.i; ++s) {
            // X^i contributes binom(i,s) b^{i-s} c^s t^s
            int tdeg = s + e.l;
            Scalar num = cf * Scalar(binomial(e.i, s));
            if ((e.j + e.l) % 2 == 1) num = -num;
            // monomial a^{j+l} b^{i-s} c^{s}
            HomogeneousForm mono = HomogeneousForm::monomial(e.j + e.l, e.i - s, s, num);
            coeff[tdeg] = coeff[tdeg] + mono;
        }
    }
    return coeff;
}

HomogeneousForm divide_by_a_power(const HomogeneousForm& F, int& removed) {
    int k = 1 << 20;
    for (const auto& [e, c] : F.terms()) k = std::min(k, e.i);
    removed = k;
    HomogeneousForm out(F.degree() - k);
    for (const auto& [e, c] : F.terms()) out.set_coeff(e.i - k, e.j, e.l, c);
    return out;
}

HomogeneousForm normalize_integer_primitive(const HomogeneousForm& F) {
    // scale so that coefficients are coprime integers with positive leading term
    mpz_class lcm = 1;
    for (const auto& [e, c] : F.terms()) {
        mpz_class den = c.rational().get_den();
        lcm = lcm * den / gcd(lcm, den);
    }
    mpz_class g = 0;
    for (const auto& [e, c] : F.terms()) g = gcd(g, mpz_class(c.rational().get_num() * (lcm / c.rational().get_den())));
    if (g == 0) return F;
    Scalar scale{Rat(lcm, g)};
    HomogeneousForm out = F * scale;
    if (out.terms().begin()->second.rational() < 0) out = out * Scalar(-1);
    return out;
}

} // namespace

namespace {

/* A repeated component of the eliminated form survives in every linear
 * restriction; a reduced dual has a square-free restriction on some line of
 * the probe family. */
bool has_square_free_restriction(const HomogeneousForm& F) {
    for (long lam = 0; lam <= 3; ++lam) {
        for (long mu = 1; mu <= 3; ++mu) {
            // the probe line (a, b, c) = (t, 1, lam t + mu)
            uni::Poly p(F.degree() + 1, Scalar(0));
            for (const auto& [e, cf] : F.terms()) {
                // t^i * (lam t + mu)^l
                for (int s = 0; s <= e.l; ++s) {
                    Scalar pw(1);
                    for (int q = 0; q < s; ++q) pw = pw * Scalar(lam);
                    for (int q = 0; q < e.l - s; ++q) pw = pw * Scalar(mu);
                    p[e.i + s] = p[e.i + s] + cf * Scalar(binomial(e.l, s)) * pw;
                }
            }
            uni::trim(p);
            if (uni::degree(p) != F.degree()) continue;
            if (uni::degree(uni::gcd_monic(p, uni::derivative(p))) <= 0) return true;
        }
    }
    return false;
}

} // namespace

HomogeneousForm dual_of_cubic(const HomogeneousForm& cubic) {
    if (cubic.degree() != 3) throw parse_error("dual-curve elimination expects a cubic");
    auto p = restrict_to_dual_line(cubic);
    // discriminant of p3 t^3 + p2 t^2 + p1 t + p0
    const HomogeneousForm &p0 = p[0], &p1 = p[1], &p2 = p[2], &p3 = p[3];
    HomogeneousForm disc = p3 * p2 * p1 * p0 * Scalar(18) - p2.pow(3) * p0 * Scalar(4) + p2.pow(2) * p1.pow(2) -
                           p3 * p1.pow(3) * Scalar(4) - p3.pow(2) * p0.pow(2) * Scalar(27);
    if (disc.is_zero()) throw verification_error("elimination degenerates: the cubic is not smooth");
    int removed = 0;
    HomogeneousForm dual = divide_by_a_power(disc, removed);
    if (dual.degree() != 6)
        throw verification_error("elimination did not produce a sextic dual (degree " +
                                 std::to_string(dual.degree()) + ")");
    if (!has_square_free_restriction(dual))
        throw verification_error("elimination degenerates: the dual is not reduced (singular cubic)");
    return normalize_integer_primitive(dual);
}

namespace {

// rational cube root, when it exists
std::optional<Rat> rational_cbrt(const Rat& r) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class sn, sd;
    bool neg = num < 0;
    mpz_class an = abs(num);
    mpz_root(sn.get_mpz_t(), an.get_mpz_t(), 3);
    mpz_root(sd.get_mpz_t(), den.get_mpz_t(), 3);
    if (sn * sn * sn != an || sd * sd * sd != den) return std::nullopt;
    Rat out(neg ? -sn : sn, sd);
    out.canonicalize();
    return out;
}

} // namespace

CurveSpec nine_cuspidal(const HomogeneousForm& cubic, const FieldPtr& field) {
    if (!field || field->degree() != 2)
        throw verification_error("the nine-cuspidal construction needs the field Q(omega)");
    {
        const auto& mp = field->min_poly();
        if (!(mp.size() == 3 && mp[0] == 1 && mp[1] == 1 && mp[2] == 1))
            throw verification_error("field must be Q[t]/(t^2 + t + 1)");
    }
    // diagonal cubic alpha X^3 + beta Y^3 + gamma Z^3
    Scalar al = cubic.coeff(3, 0, 0), be = cubic.coeff(0, 3, 0), ga = cubic.coeff(0, 0, 3);
    for (const auto& [e, c] : cubic.terms())
        if (!(e == Exp3{3, 0, 0} || e == Exp3{0, 3, 0} || e == Exp3{0, 0, 3}))
            throw unsupported_germ("flex extraction is implemented for diagonal cubics only");
    if (al.is_zero() || be.is_zero() || ga.is_zero())
        throw verification_error("diagonal cubic must have all three coefficients nonzero");

    HomogeneousForm dual = dual_of_cubic(cubic);

    Scalar omega = Scalar::generator(field);
    // flexes on X=0: beta Y^3 + gamma Z^3 = 0: Y/Z = cbrt(-gamma/beta) * omega^j
    auto cusps_on = [&](const Scalar& c1, const Scalar& c2) {
        // roots of c1 t^3 + c2 = 0 as t = r omega^j
        auto rr = rational_cbrt((-(c2 / c1)).rational());
        if (!rr) throw verification_error("flex coordinates are not in Q(omega) for this cubic");
        std::vector<Scalar> roots;
        Scalar r{*rr};
        roots.push_back(r.promote(field));
        roots.push_back(r * omega);
        roots.push_back(r * omega * omega);
        return roots;
    };

    HomogeneousForm FX = cubic.partial(0), FY = cubic.partial(1), FZ = cubic.partial(2);
    auto dual_point = [&](const Scalar& X, const Scalar& Y, const Scalar& Z) {
        return ProjectivePoint{FX.eval(X, Y, Z), FY.eval(X, Y, Z), FZ.eval(X, Y, Z)};
    };

    std::vector<ProjectivePoint> cusps;
    for (const Scalar& t : cusps_on(be, ga)) // X = 0, Y = t, Z = 1
        cusps.push_back(dual_point(Scalar(0).promote(field), t, Scalar(1).promote(field)));
    for (const Scalar& t : cusps_on(al, ga)) // Y = 0, X = t, Z = 1
        cusps.push_back(dual_point(t, Scalar(0).promote(field), Scalar(1).promote(field)));
    for (const Scalar& t : cusps_on(al, be)) // Z = 0, X = t, Y = 1
        cusps.push_back(dual_point(t, Scalar(1).promote(field), Scalar(0).promote(field)));

    CurveSpec spec;
    spec.degree = 6;
    spec.field = field;
    {
        HomogeneousForm Fp(6);
        for (const auto& [e, c] : dual.terms()) Fp.set_coeff(e.i, e.j, e.l, c.promote(field));
        spec.F = Fp;
    }
    spec.num_components = 1;
    for (const auto& P : cusps) {
        SingularPointSpec ps;
        ps.point = P;
        ps.declared = SingularityType::A(2);
        spec.points.push_back(ps);
    }
    AnalyzedCurve a = analyze_curve(spec);
    verify_types(a, SingularityType::A(2));
    return spec;
}

/* ---------------- named fixtures ---------------- */

CurveSpec fixture_six_lines() {
    std::vector<Scalar> slopes{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3)};
    return six_lines(slopes);
}

CurveSpec fixture_torus_six_cusps() {
    // conic XZ - Y^2, parametrized by (1 : t : t^2)
    HomogeneousForm f2 = HomogeneousForm::monomial(1, 0, 1, Scalar(1)) - HomogeneousForm::monomial(0, 2, 0, Scalar(1));
    std::vector<Scalar> ts{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3)};
    std::vector<ProjectivePoint> pts;
    for (const auto& t : ts) pts.push_back(ProjectivePoint{Scalar(1), t, t * t});

    // cubics through the six points: a four-dimensional family
    std::vector<Exp3> monos;
    for (int i = 3; i >= 0; --i)
        for (int j = 3 - i; j >= 0; --j) monos.push_back(Exp3{i, j, 3 - i - j});
    std::vector<std::vector<Scalar>> m;
    for (const auto& P : pts) {
        std::vector<Scalar> row;
        for (const auto& e : monos) {
            Scalar v(1);
            for (int s = 0; s < e.i; ++s) v = v * P.X;
            for (int s = 0; s < e.j; ++s) v = v * P.Y;
            for (int s = 0; s < e.l; ++s) v = v * P.Z;
            row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    // kernel basis by elimination
    size_t rows = m.size(), cols = monos.size();
    std::vector<int> pivots;
    {
        size_t r = 0;
        for (size_t c = 0; c < cols && r < rows; ++c) {
            size_t sel = r;
            while (sel < rows && m[sel][c].is_zero()) ++sel;
            if (sel == rows) continue;
            std::swap(m[r], m[sel]);
            Scalar inv = m[r][c].inverse();
            for (size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                Scalar f = m[i][c];
                for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
            }
            pivots.push_back(static_cast<int>(c));
            ++r;
        }
        m.resize(r);
    }
    std::vector<std::vector<Scalar>> kernel;
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> vec(cols, Scalar(0));
        vec[f] = Scalar(1);
        for (size_t r = 0; r < m.size(); ++r)
            if (!m[r][f].is_zero()) vec[pivots[r]] = -m[r][f];
        kernel.push_back(std::move(vec));
    }

    // deterministic small combinations until the six points classify as A2
    std::vector<std::vector<long>> combos;
    for (size_t i = 0; i < kernel.size(); ++i) {
        std::vector<long> c(kernel.size(), 0);
        c[i] = 1;
        combos.push_back(c);
    }
    for (long w = 1; w <= 2; ++w)
        for (size_t i = 0; i < kernel.size(); ++i)
            for (size_t j = i + 1; j < kernel.size(); ++j) {
                std::vector<long> c(kernel.size(), 0);
                c[i] = 1;
                c[j] = w;
                combos.push_back(c);
            }

    for (const auto& combo : combos) {
        HomogeneousForm f3(3);
        for (size_t kk = 0; kk < kernel.size(); ++kk) {
            if (combo[kk] == 0) continue;
            for (size_t ci = 0; ci < cols; ++ci) {
                Scalar add = kernel[kk][ci] * Scalar(combo[kk]);
                if (!add.is_zero()) f3.set_coeff(monos[ci].i, monos[ci].j, monos[ci].l, f3.coeff(monos[ci].i, monos[ci].j, monos[ci].l) + add);
            }
        }
        if (f3.is_zero()) continue;
        // reject cubics containing the conic (they vanish identically on it)
        bool on_conic = true;
        for (long t = 4; t <= 10 && on_conic; ++t)
            if (!f3.eval(Scalar(1), Scalar(t), Scalar(t * t)).is_zero()) on_conic = false;
        if (on_conic) continue;
        try {
            CurveSpec spec = torus_from_f2_f3(f2, f3, pts, 1);
            AnalyzedCurve a = analyze_curve(spec);
            verify_types(a, SingularityType::A(2)); // transverse everywhere
            return spec;
        } catch (const std::runtime_error&) {
            continue; // tangency somewhere: try the next combination
        }
    }
    throw verification_error("no cubic in the search family meets the conic transversally");
}

CurveSpec fixture_linear_3A5() {
    HomogeneousForm ell = HomogeneousForm::monomial(0, 1, 0, Scalar(1)); // Y
    // cubic X^3 - X Z^2 + Y Z^2 through (0:0:1), (1:0:1), (-1:0:1)
    HomogeneousForm f3 = HomogeneousForm::monomial(3, 0, 0, Scalar(1)) -
                         HomogeneousForm::monomial(1, 0, 2, Scalar(1)) +
                         HomogeneousForm::monomial(0, 1, 2, Scalar(1));
    return linear_torus_3A5(ell, f3);
}

CurveSpec fixture_nine_cuspidal() {
    auto field = std::make_shared<const NumberField>(std::vector<long>{1, 1, 1});
    HomogeneousForm fermat = HomogeneousForm::monomial(3, 0, 0, Scalar(1)) +
                             HomogeneousForm::monomial(0, 3, 0, Scalar(1)) +
                             HomogeneousForm::monomial(0, 0, 3, Scalar(1));
    return nine_cuspidal(fermat, field);
}

} // namespace sextic
