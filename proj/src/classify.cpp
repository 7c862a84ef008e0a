#include "sextic/classify.hpp"

#include <algorithm>

#include "sextic/uni.hpp"

namespace sextic {

namespace {

Germ degree_part(const Germ& f, int d) {
    Germ out;
    for (const auto& [e, c] : f.terms())
        if (e.deg() == d) out.set_coeff(e.a, e.b, c);
    return out;
}

// coefficients of form(1, t) for a binary form of degree d
uni::Poly binary_restrict(const Germ& form, int d) {
    uni::Poly g(d + 1, Scalar(0));
    for (const auto& [e, c] : form.terms()) g[e.b] = c;
    uni::trim(g);
    return g;
}

// linear form alpha*u + beta*v
struct Line {
    Scalar alpha, beta;
};

Line line_of_root(const Scalar& r) { return {-r, Scalar(1)}; } // v - r u
Line line_u() { return {Scalar(1), Scalar(0)}; }
Line line_v() { return {Scalar(0), Scalar(1)}; }

/* Jets sending the line `lv` to the v-axis direction and `lu` to the u-axis
 * direction: new coordinates U = lu(x,y), V = lv(x,y). */
CoordinateJets align_lines(const Line& lu, const Line& lv) {
    Scalar det = lu.alpha * lv.beta - lu.beta * lv.alpha;
    if (det.is_zero()) throw verification_error("alignment lines are not independent");
    Scalar inv = det.inverse();
    Germ x = Germ::monomial(1, 0, lv.beta * inv) + Germ::monomial(0, 1, -lu.beta * inv);
    Germ y = Germ::monomial(1, 0, -lv.alpha * inv) + Germ::monomial(0, 1, lu.alpha * inv);
    return CoordinateJets(std::move(x), std::move(y));
}

Line complement_line(const Line& l) { return l.beta.is_zero() ? line_v() : line_u(); }

/* Linear change x = u + a v, y = b u + v that moves every line of the given
 * tangent-cone form off both axes; needed before make_convenient when the
 * cone contains u or v as a factor (cone-type models: D4, B6,6). */
CoordinateJets axis_clearing_linear(const Germ& form) {
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long sa : {1L, -1L})
                for (long sb : {1L, -1L}) {
                    long aa = a * sa, bb = b * sb;
                    if (1 - aa * bb == 0) continue;
                    // u^d coefficient of the transformed form is form(1, b),
                    // v^d coefficient is form(a, 1)
                    Scalar cu(0), cv(0);
                    for (const auto& [e, c] : form.terms()) {
                        Scalar tb(1), ta(1);
                        for (int i = 0; i < e.b; ++i) tb = tb * Scalar(bb);
                        for (int i = 0; i < e.a; ++i) ta = ta * Scalar(aa);
                        cu = cu + c * tb;
                        cv = cv + c * ta;
                    }
                    if (cu.is_zero() || cv.is_zero()) continue;
                    return CoordinateJets(Germ::var_u() + Germ::monomial(0, 1, Scalar(aa)),
                                          Germ::monomial(1, 0, Scalar(bb)) + Germ::var_v());
                }
    throw unsupported_germ("no small linear change clears the tangent cone off the axes");
}

/* Iterative square completion for corank <= 1 germs: returns jets with
 * f(jets) = a v^2 (1 + ...) + C(u), all v-linear cross terms pushed beyond
 * the truncation order. */
CoordinateJets complete_square(const Germ& f_in, int trunc) {
    Germ f = f_in.truncated(trunc);
    CoordinateJets jets = CoordinateJets::identity();
    auto apply = [&](const CoordinateJets& s) {
        jets = compose(jets, s);
        f = substitute(f, s);
    };

    Scalar q20 = f.coeff(2, 0), q11 = f.coeff(1, 1), q02 = f.coeff(0, 2);
    if (q02.is_zero()) {
        if (!q20.is_zero()) {
            apply(CoordinateJets(Germ::var_v(), Germ::var_u())); // swap
        } else if (!q11.is_zero()) {
            apply(CoordinateJets(Germ::var_u() + Germ::var_v(), Germ::var_v()));
        } else {
            throw verification_error("square completion requires a nonzero quadratic part");
        }
    }
    Scalar a = f.coeff(0, 2);
    if (!f.coeff(1, 1).is_zero())
        apply(CoordinateJets(Germ::var_u(),
                             Germ::var_v() + Germ::monomial(1, 0, -(f.coeff(1, 1) / (Scalar(2) * a)))));

    // kill v * u^k cross terms bottom-up; each step raises the lowest one
    for (int guard = 0; guard < trunc + 2; ++guard) {
        int k0 = -1;
        for (const auto& [e, c] : f.terms())
            if (e.b == 1 && (k0 < 0 || e.a < k0)) k0 = e.a;
        if (k0 < 0 || k0 + 1 >= trunc) break;
        Scalar s = -(f.coeff(k0, 1) / (Scalar(2) * a));
        apply(CoordinateJets(Germ::var_u(), Germ::var_v() + Germ::monomial(k0, 0, s)));
    }
    return jets;
}

struct CubicShape {
    enum class Profile { distinct, double_simple, triple };
    Profile profile;
    Line repeated;  // double or triple line
    Line secondary; // the simple line for double_simple
};

CubicShape cubic_shape(const Germ& c3) {
    uni::Poly g = binary_restrict(c3, 3);
    int dg = uni::degree(g);
    int m_inf = 3 - dg; // multiplicity of the line u = 0
    uni::Poly g1 = uni::gcd_monic(g, uni::derivative(g));
    int d1 = uni::degree(g1);

    CubicShape s{CubicShape::Profile::distinct, line_u(), line_u()};
    if (m_inf == 0) {
        if (d1 <= 0) {
            s.profile = CubicShape::Profile::distinct;
        } else if (d1 == 1) {
            s.profile = CubicShape::Profile::double_simple;
            Scalar r = -(g1[0] / g1[1]);
            s.repeated = line_of_root(r);
            // remaining simple factor of g / (t-r)^2
            uni::Poly sq = {r * r, Scalar(-2) * r, Scalar(1)};
            uni::Poly lin = uni::divide_exact(g, sq);
            s.secondary = line_of_root(-(lin[0] / lin[1]));
        } else {
            s.profile = CubicShape::Profile::triple;
            s.repeated = line_of_root(-(g1[1] / Scalar(2))); // g1 = (t-r)^2 monic
        }
    } else if (m_inf == 1) {
        if (d1 <= 0) {
            s.profile = CubicShape::Profile::distinct;
        } else {
            // g = c (t-r)^2: double finite line, simple line u
            s.profile = CubicShape::Profile::double_simple;
            s.repeated = line_of_root(-(g1[0] / g1[1]));
            s.secondary = line_u();
        }
    } else if (m_inf == 2) {
        s.profile = CubicShape::Profile::double_simple;
        s.repeated = line_u();
        s.secondary = line_of_root(-(g[0] / g[1]));
    } else {
        s.profile = CubicShape::Profile::triple;
        s.repeated = line_u();
    }
    return s;
}

struct QuarticShape {
    enum class Profile { quadruple, two_doubles, other };
    Profile profile;
    Line first, second;
    bool rational = true;
};

QuarticShape quartic_shape(const Germ& c4) {
    uni::Poly g = binary_restrict(c4, 4);
    int dg = uni::degree(g);
    int m_inf = 4 - dg;
    uni::Poly g1 = uni::gcd_monic(g, uni::derivative(g));
    int d1 = uni::degree(g1);

    QuarticShape s{QuarticShape::Profile::other, line_u(), line_u(), true};
    if (m_inf == 4) {
        s.profile = QuarticShape::Profile::quadruple;
        s.first = line_u();
        return s;
    }
    if (m_inf == 0 && d1 == 3) {
        // g1 = (t-r)^3
        s.profile = QuarticShape::Profile::quadruple;
        s.first = line_of_root(-(g1[2] / Scalar(3)));
        return s;
    }
    if (m_inf == 0 && d1 == 2) {
        uni::Poly g2 = uni::gcd_monic(g1, uni::derivative(g1));
        if (uni::degree(g2) >= 1) return s; // profile {3,1}
        auto roots = uni::field_roots(g1);
        if (!roots) {
            s.profile = QuarticShape::Profile::two_doubles;
            s.rational = false;
            return s;
        }
        s.profile = QuarticShape::Profile::two_doubles;
        s.first = line_of_root((*roots)[0]);
        s.second = line_of_root((*roots)[1]);
        return s;
    }
    if (m_inf == 2 && d1 == 1 && dg == 2) {
        // u^2 (t-r)^2 shape: g = c(t-r)^2
        s.profile = QuarticShape::Profile::two_doubles;
        s.first = line_of_root(-(g1[0] / g1[1]));
        s.second = line_u();
        return s;
    }
    if (m_inf == 1 && d1 == 2) {
        // u (t-r)^3: triple finite root: profile {3,1}
        return s;
    }
    if (m_inf == 3) {
        // u^3 (t-r): profile {3,1}
        return s;
    }
    return s;
}

/* A repeated nonzero root of a face function on a covector (1,s) marks a
 * smooth branch v = t0 u^s of multiplicity >= 2 whose tangency is a
 * coordinate artifact; shifting v -> v + t0 u^s (or the u-symmetric move)
 * straightens it.  Iterate until every such face is clean.  Faces with
 * p, q >= 2 (the Sp square) are left alone. */
CoordinateJets reduce_tangencies(Germ& h, int trunc) {
    CoordinateJets jets = CoordinateJets::identity();
    for (int guard = 0; guard < trunc; ++guard) {
        bool changed = false;
        NewtonBoundary nb = boundary(h);
        for (const auto& face : nb.faces) {
            bool vdir = face.q.p == 1, udir = face.q.q == 1;
            if (!vdir && !udir) continue;
            // parametrize the face monomials by the exponent transverse to the axis
            uni::Poly core;
            if (vdir) {
                int max_b = 0;
                for (const auto& [e, c] : face.face_fn.terms()) max_b = std::max(max_b, e.b);
                core.assign(max_b + 1, Scalar(0));
                for (const auto& [e, c] : face.face_fn.terms()) core[e.b] = c;
            } else {
                int max_a = 0;
                for (const auto& [e, c] : face.face_fn.terms()) max_a = std::max(max_a, e.a);
                core.assign(max_a + 1, Scalar(0));
                for (const auto& [e, c] : face.face_fn.terms()) core[e.a] = c;
            }
            size_t low = 0;
            while (low < core.size() && core[low].is_zero()) ++low;
            core.erase(core.begin(), core.begin() + low);
            uni::trim(core);
            if (core.size() <= 1) continue;
            uni::Poly rep = uni::gcd_monic(core, uni::derivative(core));
            while (uni::degree(rep) > 2) {
                uni::Poly next = uni::gcd_monic(rep, uni::derivative(rep));
                if (uni::degree(next) < 1) break;
                rep = next;
            }
            if (uni::degree(rep) < 1) continue;
            auto roots = uni::field_roots(rep);
            if (!roots) continue; // conjugate tangency: user coordinates required
            Scalar t0 = (*roots)[0];
            if (t0.is_zero() && roots->size() > 1) t0 = (*roots)[1];
            if (t0.is_zero()) continue;
            CoordinateJets step =
                vdir ? CoordinateJets(Germ::var_u(),
                                      Germ::var_v() + Germ::monomial(static_cast<int>(face.q.q), 0, t0))
                     : CoordinateJets(Germ::var_u() + Germ::monomial(0, static_cast<int>(face.q.p), t0),
                                      Germ::var_v());
            h = substitute(h, step);
            jets = compose(jets, step);
            changed = true;
            break;
        }
        if (!changed) break;
    }
    return jets;
}

bool boundary_matches(const NewtonBoundary& nb, const std::vector<Exp>& verts) {
    if (nb.vertices.size() != verts.size()) return false;
    for (size_t i = 0; i < verts.size(); ++i)
        if (!(nb.vertices[i] == verts[i])) return false;
    return true;
}

std::pair<SingularityType, CoordinateJets> classify_with_jets(const Germ& f, int trunc) {
    if (!f.coeff(0, 0).is_zero()) throw verification_error("germ does not vanish at the origin");
    if (!f.coeff(1, 0).is_zero() || !f.coeff(0, 1).is_zero())
        throw verification_error("smooth point: the germ has nonzero linear part");

    int mu = milnor_number(f);

    Scalar q20 = f.coeff(2, 0), q11 = f.coeff(1, 1), q02 = f.coeff(0, 2);
    Scalar hess_det = Scalar(4) * q20 * q02 - q11 * q11;
    bool q_zero = q20.is_zero() && q11.is_zero() && q02.is_zero();

    if (!hess_det.is_zero()) return {SingularityType::A(1), complete_square(f, trunc)};
    if (!q_zero) return {SingularityType::A(mu), complete_square(f, trunc)};

    // corank 2
    Germ c3 = degree_part(f, 3);
    auto unknown = std::make_pair(SingularityType::Unknown(), CoordinateJets::identity());

    if (!c3.is_zero()) {
        auto shape = cubic_shape(c3);
        switch (shape.profile) {
            case CubicShape::Profile::distinct: {
                if (mu != 4) return unknown;
                return {SingularityType::D(4), axis_clearing_linear(c3)};
            }
            case CubicShape::Profile::double_simple: {
                if (mu < 5 || mu > 21) return unknown;
                CoordinateJets jets = align_lines(shape.secondary, shape.repeated);
                Germ h = substitute(f.truncated(trunc), jets);
                jets = compose(jets, reduce_tangencies(h, trunc));
                return {SingularityType::D(mu), jets};
            }
            case CubicShape::Profile::triple: {
                CoordinateJets jets = align_lines(complement_line(shape.repeated), shape.repeated);
                Germ h = substitute(f.truncated(trunc), jets);
                jets = compose(jets, reduce_tangencies(h, trunc));
                if (mu == 6 || mu == 7 || mu == 8) return {SingularityType::E(mu), jets};
                // B3,n / C3,n by boundary shape in the aligned coordinates
                if (!is_convenient(h)) return unknown;
                NewtonBoundary nb = boundary(h);
                if (nb.vertices.size() == 2 && nb.vertices[0] == Exp{0, 3} && nb.vertices[1].b == 0) {
                    int n = nb.vertices[1].a;
                    if (mu == 2 * (n - 1) && is_nondegenerate(h)) return {SingularityType::B(3, n), jets};
                }
                if (nb.vertices.size() == 3 && nb.vertices[0] == Exp{0, 3} && nb.vertices[1] == Exp{2, 2} &&
                    nb.vertices[2].b == 0) {
                    int n = nb.vertices[2].a;
                    if (mu == n + 4 && is_nondegenerate(h)) return {SingularityType::C(3, n), jets};
                }
                return unknown;
            }
        }
    }

    Germ c4 = degree_part(f, 4);
    if (!c4.is_zero()) {
        QuarticShape shape = quartic_shape(c4);
        if (shape.profile == QuarticShape::Profile::quadruple) {
            CoordinateJets jets = align_lines(complement_line(shape.first), shape.first);
            Germ h = substitute(f.truncated(trunc), jets);
            jets = compose(jets, reduce_tangencies(h, trunc));
            if (!is_convenient(h)) return unknown;
            NewtonBoundary nb = boundary(h);
            if (nb.vertices.size() == 2 && nb.vertices[0] == Exp{0, 4} && nb.vertices[1].b == 0) {
                int n = nb.vertices[1].a;
                if (is_nondegenerate(h)) {
                    if (mu == 3 * (n - 1)) return {SingularityType::B(4, n), jets};
                    return unknown;
                }
                // degenerate single face: the Sp types have (v^2 - c u^3)^2
                if (n != 6) return unknown;
                Scalar a0 = h.coeff(0, 4), mid = h.coeff(3, 2), last = h.coeff(6, 0);
                if (a0.is_zero()) return unknown;
                Scalar c = -(mid / (Scalar(2) * a0));
                if (c.is_zero() || !(a0 * c * c == last)) return unknown;
                if (mu == 18) return {SingularityType::Sp(1), jets};
                if (mu == 21) return {SingularityType::Sp(2), jets};
                return unknown;
            }
            if (nb.vertices.size() == 3 && nb.vertices[0] == Exp{0, 4} && nb.vertices[1] == Exp{3, 2} &&
                nb.vertices[2] == Exp{7, 0}) {
                if (mu == 16 && is_nondegenerate(h)) return {SingularityType::D47(), jets};
                return unknown;
            }
            return unknown;
        }
        if (shape.profile == QuarticShape::Profile::two_doubles) {
            if (!shape.rational) return unknown; // conjugate lines: user coordinates required
            CoordinateJets jets = align_lines(shape.second, shape.first);
            Germ h = substitute(f.truncated(trunc), jets);
            jets = compose(jets, reduce_tangencies(h, trunc));
            if (!is_convenient(h)) return unknown;
            NewtonBoundary nb = boundary(h);
            if (nb.vertices.size() == 3 && nb.vertices[0].a == 0 && nb.vertices[1] == Exp{2, 2} &&
                nb.vertices[2].b == 0 && is_nondegenerate(h)) {
                int m = nb.vertices[0].b, n = nb.vertices[2].a;
                if (m > n) {
                    // normalize to m <= n by swapping the chart roles
                    CoordinateJets swap(Germ::var_v(), Germ::var_u());
                    jets = compose(jets, swap);
                    std::swap(m, n);
                }
                if (mu == m + n + 1) return {SingularityType::C(m, n), jets};
            }
            return unknown;
        }
        return unknown;
    }

    // multiplicity >= 5
    Germ c5 = degree_part(f, 5);
    if (!c5.is_zero()) return unknown;
    Germ c6 = degree_part(f, 6);
    if (c6.is_zero()) return unknown;
    {
        // cone of six concurrent lines: B6,6 when they are distinct
        uni::Poly g = binary_restrict(c6, 6);
        uni::Poly g1 = uni::gcd_monic(g, uni::derivative(g));
        int m_inf = 6 - uni::degree(g);
        if (uni::degree(g1) > 0 || m_inf > 1) return unknown;
        if (mu != 25) return unknown;
        CoordinateJets jets = axis_clearing_linear(c6);
        Germ h = substitute(f.truncated(trunc), jets);
        jets = compose(jets, reduce_tangencies(h, trunc));
        NewtonBoundary nb = boundary(h);
        if (boundary_matches(nb, {Exp{0, 6}, Exp{6, 0}}) && is_nondegenerate(h))
            return {SingularityType::B(6, 6), jets};
        return unknown;
    }
}

} // namespace

SingularityType classify(const Germ& f, int trunc) { return classify_with_jets(f, trunc).first; }

CoordinateJets normal_coordinates(const Germ& f, const SingularityType& type, int trunc) {
    auto [t, jets] = classify_with_jets(f, trunc);
    if (!(t == type))
        throw verification_error("declared type " + type.str() + " but the germ classifies as " + t.str());
    if (t.is_unknown()) throw unsupported_germ("germ is outside the catalog; provide local coordinates");
    return jets;
}

Scalar sp_face_shift(const Germ& aligned) {
    Scalar a0 = aligned.coeff(0, 4), mid = aligned.coeff(3, 2), last = aligned.coeff(6, 0);
    if (a0.is_zero()) throw unsupported_germ("germ is not an aligned Sp model");
    Scalar c = -(mid / (Scalar(2) * a0));
    if (c.is_zero() || !(a0 * c * c == last))
        throw unsupported_germ("degenerate face is not of the (v^2 - c u^3)^2 form");
    return c;
}

bool plucker_check(const std::vector<SingularityType>& types) {
    // sum of delta over rho(4)-essential points, compared with 10
    int sum = 0;
    for (const auto& t : types) {
        ReferenceRow row = reference_row(t, 4);
        if (row.rho > 0) sum += delta_invariant(t);
    }
    return sum <= 10;
}

LocalData analyze_germ(const Germ& f, const std::optional<SingularityType>& declared,
                       const std::optional<CoordinateJets>& user_jets, int trunc, int d) {
    LocalData out;

    CoordinateJets jets = CoordinateJets::identity();
    SingularityType detected = SingularityType::Unknown();
    if (user_jets) {
        // the user's coordinates may already be final; classifying the
        // transformed germ only contributes the residual normalization
        Germ h = substitute(f.truncated(trunc), *user_jets);
        detected = classify(h, trunc);
        if (detected.is_unknown())
            throw unsupported_germ("singularity outside the catalog; the pipeline stops here");
        CoordinateJets more = normal_coordinates(h, detected, trunc);
        jets = compose(*user_jets, more);
    } else {
        detected = classify(f, trunc);
        if (detected.is_unknown())
            throw unsupported_germ("singularity outside the catalog; the pipeline stops here");
        jets = normal_coordinates(f, detected, trunc);
    }
    if (declared && !(*declared == detected))
        throw verification_error("declared type " + declared->str() + " but the germ classifies as " +
                                 detected.str());
    if (detected.is_unknown()) throw unsupported_germ("unclassified singularity");

    out.type = detected;
    out.mu = milnor_number(f);

    Germ model = substitute(f.truncated(trunc), jets);

    bool sp = detected.family == SingularityType::Family::Sp1 || detected.family == SingularityType::Family::Sp2;
    std::vector<std::pair<ChartSequence, DivisorData>> divisors;
    if (sp) {
        Scalar shift = sp_face_shift(model);
        SpResolution res = sp_resolution_for(detected, model, shift);
        const SpResolution& golden = sp_resolution(detected);
        for (size_t i = 0; i < res.divisors.size(); ++i)
            if (res.divisors[i].second.f_mult != golden.divisors[i].second.f_mult ||
                res.divisors[i].second.k_mult != golden.divisors[i].second.k_mult)
                throw verification_error("Sp germ divisor data disagrees with the catalog resolution");
        divisors = std::move(res.divisors);
    } else {
        auto [conv, conv_jets] = make_convenient(model);
        model = conv;
        jets = compose(jets, conv_jets);
    }

    out.jets = jets;
    out.model = model;

    for (int k = 1; k < d; ++k) {
        LocalIdeal ideal = sp ? multiplier_ideal_charts(divisors, k, d) : multiplier_ideal_monomial(model, k, d);
        int rho = ideal.is_unit() ? 0 : ideal.colength();
        out.rho.push_back(rho);
        if (rho > 0)
            out.quotients.push_back(ideal.quotient());
        else
            out.quotients.push_back(nullptr);
        out.ideals.push_back(std::move(ideal));
    }
    return out;
}

} // namespace sextic
