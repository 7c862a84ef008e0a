#include "sextic/newton.hpp"

#include <algorithm>
#include <numeric>

#include "sextic/uni.hpp"

namespace sextic {

bool NewtonBoundary::touches_u_axis() const {
    for (const auto& v : vertices)
        if (v.b == 0) return true;
    return false;
}

bool NewtonBoundary::touches_v_axis() const {
    for (const auto& v : vertices)
        if (v.a == 0) return true;
    return false;
}

long weight_value(const Germ& g, const Covector& q) {
    if (g.is_zero() && g.is_exact()) throw unsupported_germ("weight value of the zero germ");
    long best = -1;
    bool have = false;
    for (const auto& [e, c] : g.terms()) {
        long v = q.p * e.a + q.q * e.b;
        if (!have || v < best) best = v;
        have = true;
    }
    if (!g.is_exact()) {
        // unknown terms have total degree >= trunc, so q-value >= min(p,q)*trunc
        long unknown_min = std::min(q.p, q.q) * g.truncation();
        if (!have || unknown_min < best)
            throw cap_exceeded("truncation too coarse to certify the weight value");
    }
    if (!have) throw unsupported_germ("weight value of the zero germ");
    return best;
}

NewtonBoundary boundary(const Germ& f) {
    if (f.is_zero()) throw unsupported_germ("Newton boundary of the zero germ");

    // per u-exponent, keep the minimal v-exponent
    std::map<int, int> floor_b;
    for (const auto& [e, c] : f.terms()) {
        auto it = floor_b.find(e.a);
        if (it == floor_b.end() || e.b < it->second) floor_b[e.a] = e.b;
    }
    // staircase points: a increasing, b strictly decreasing
    std::vector<Exp> pts;
    for (auto [a, b] : floor_b) {
        if (!pts.empty() && b >= pts.back().b) continue;
        pts.push_back(Exp{a, b});
    }
    // lower-left convex chain; collinear interior points stay inside the face
    std::vector<Exp> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Exp& o = hull[hull.size() - 2];
            const Exp& m = hull[hull.size() - 1];
            // cross((m-o),(p-o)) <= 0: m lies on or above the chord o-p
            long cross = static_cast<long>(m.a - o.a) * (p.b - o.b) - static_cast<long>(m.b - o.b) * (p.a - o.a);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    NewtonBoundary nb;
    nb.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        const Exp& A = hull[i];
        const Exp& B = hull[i + 1];
        long da = B.a - A.a, db = A.b - B.b; // da > 0, db > 0
        long g = std::gcd(da, db);
        NewtonFace face;
        face.q = Covector{db / g, da / g};
        face.from = A;
        face.to = B;
        face.m = face.q.p * A.a + face.q.q * A.b;
        Germ fn;
        for (const auto& [e, c] : f.terms())
            if (face.q.p * e.a + face.q.q * e.b == face.m) fn.set_coeff(e.a, e.b, c);
        face.face_fn = fn;
        nb.faces.push_back(std::move(face));
    }

    // truncation guard: unknown terms must lie above every face
    if (!f.is_exact()) {
        for (const auto& face : nb.faces)
            if (std::min(face.q.p, face.q.q) * f.truncation() < face.m)
                throw cap_exceeded("truncation too coarse to certify the Newton boundary");
    }
    return nb;
}

bool is_convenient(const Germ& f) {
    bool u_axis = false, v_axis = false;
    for (const auto& [e, c] : f.terms()) {
        if (e.b == 0) u_axis = true;
        if (e.a == 0) v_axis = true;
    }
    return u_axis && v_axis;
}

namespace {

/* Face polynomial as a univariate polynomial: for covector (p,q) the face
 * monomials u^a v^b with pa+qb = m have pairwise distinct b; restricting to
 * u = 1 gives sum c_b t^b with full information. */
uni::Poly face_univariate(const NewtonFace& face) {
    int max_b = 0;
    for (const auto& [e, c] : face.face_fn.terms()) max_b = std::max(max_b, e.b);
    uni::Poly poly(max_b + 1, Scalar(0));
    for (const auto& [e, c] : face.face_fn.terms()) poly[e.b] = c;
    return poly;
}

} // namespace

bool is_nondegenerate(const Germ& f) {
    if (f.is_zero()) throw unsupported_germ("non-degeneracy of the zero germ");
    NewtonBoundary nb = boundary(f);
    for (const auto& face : nb.faces) {
        auto poly = face_univariate(face);
        // drop the t^min factor (v-power of the face), irrelevant for torus points
        size_t low = 0;
        while (low < poly.size() && poly[low].is_zero()) ++low;
        uni::Poly core(poly.begin() + low, poly.end());
        uni::trim(core);
        if (core.size() <= 1) continue; // monomial face: no torus zero at all
        // repeated root (over the closure) <=> gcd(core, core') nonconstant
        if (uni::degree(uni::gcd_monic(core, uni::derivative(core))) > 0) return false;
    }
    return true;
}

std::pair<Germ, CoordinateJets> make_convenient(const Germ& f) {
    if (f.is_zero()) throw unsupported_germ("cannot normalize the zero germ");
    if (is_convenient(f)) return {f, CoordinateJets::identity()};

    // u -> u+cv and v -> v+cu and v -> v+cu^2 for small integer c
    std::vector<CoordinateJets> candidates;
    for (long c : {1L, -1L, 2L, -2L, 3L, -3L}) {
        candidates.push_back(CoordinateJets(Germ::var_u() + Germ::monomial(0, 1, Scalar(c)), Germ::var_v()));
        candidates.push_back(CoordinateJets(Germ::var_u(), Germ::var_v() + Germ::monomial(1, 0, Scalar(c))));
        candidates.push_back(CoordinateJets(Germ::var_u(), Germ::var_v() + Germ::monomial(2, 0, Scalar(c))));
    }
    for (const auto& jets : candidates) {
        Germ g = substitute(f, jets);
        if (!is_convenient(g)) continue;
        if (!is_nondegenerate(g)) continue;
        return {g, jets};
    }
    throw unsupported_germ(
        "no substitution in the fixed family makes the germ convenient; provide local coordinates");
}

} // namespace sextic
