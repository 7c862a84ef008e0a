#include "sextic/sigma.hpp"

namespace sextic {

AnalyzedCurve analyze_curve(const CurveSpec& spec) {
    if (spec.F.is_zero()) throw verification_error("zero defining polynomial");
    if (spec.F.degree() != spec.degree)
        throw verification_error("declared degree does not match the polynomial");
    if (spec.num_components < 1) throw verification_error("component count must be at least 1");

    HomogeneousForm FX = spec.F.partial(0), FY = spec.F.partial(1), FZ = spec.F.partial(2);

    AnalyzedCurve out;
    out.spec = spec;
    for (const auto& ps : spec.points) {
        const auto& P = ps.point;
        if (!spec.F.eval(P.X, P.Y, P.Z).is_zero())
            throw verification_error("declared point does not lie on the curve");
        if (!FX.eval(P.X, P.Y, P.Z).is_zero() || !FY.eval(P.X, P.Y, P.Z).is_zero() ||
            !FZ.eval(P.X, P.Y, P.Z).is_zero())
            throw verification_error("declared point is not a singular point of the curve");

        CurvePoint cp;
        cp.chart = select_chart(P);
        cp.point = normalize_to_chart(P, cp.chart);
        Germ g = dehomogenize_at(spec.F, cp.point, cp.chart);
        cp.local = analyze_germ(g, ps.declared, ps.user_jets, ps.truncation, spec.degree);
        out.points.push_back(std::move(cp));
    }
    return out;
}

namespace {

std::vector<Exp3> column_monomials(int k) {
    std::vector<Exp3> cols;
    int deg = k - 3;
    if (deg < 0) return cols;
    for (int i = deg; i >= 0; --i)
        for (int j = deg - i; j >= 0; --j) cols.push_back(Exp3{i, j, deg - i - j});
    return cols;
}

} // namespace

SigmaMatrix sigma_matrix(const AnalyzedCurve& curve, int k) {
    SigmaMatrix m;
    m.k = k;
    m.columns = column_monomials(k);

    FieldPtr field = curve.spec.field;
    for (const auto& cp : curve.points) {
        int ki = k - 1;
        if (ki < 0 || ki >= static_cast<int>(cp.local.rho.size()))
            throw verification_error("local data missing for k=" + std::to_string(k));
        if (cp.local.rho[ki] == 0) continue;
        const auto& q = cp.local.quotients[ki];
        size_t nbasis = q->basis().size();
        std::vector<std::vector<Scalar>> rows(nbasis, std::vector<Scalar>(m.columns.size(), Scalar(0)));
        for (size_t c = 0; c < m.columns.size(); ++c) {
            const Exp3& e = m.columns[c];
            HomogeneousForm mono = HomogeneousForm::monomial(e.i, e.j, e.l, Scalar(1));
            Germ affine = dehomogenize_at(mono, cp.point, cp.chart);
            Germ local = substitute(affine, cp.local.jets);
            Germ red = q->reduce(local);
            for (size_t r = 0; r < nbasis; ++r) {
                Scalar v = red.coeff(q->basis()[r].a, q->basis()[r].b);
                rows[r][c] = field ? v.promote(field) : v;
            }
        }
        for (auto& r : rows) m.entries.push_back(std::move(r));
    }
    return m;
}

int rho_total(const AnalyzedCurve& curve, int k) {
    int sum = 0;
    for (const auto& cp : curve.points) {
        int ki = k - 1;
        if (ki < 0 || ki >= static_cast<int>(cp.local.rho.size()))
            throw verification_error("local data missing for k=" + std::to_string(k));
        sum += cp.local.rho[ki];
    }
    return sum;
}

int ell(const AnalyzedCurve& curve, int k) {
    SigmaMatrix m = sigma_matrix(curve, k);
    return rho_total(curve, k) - matrix_rank(m.entries);
}

int matrix_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace sextic
