#include "sextic/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sextic {

/* ---------------- LocalIdeal ---------------- */

LocalIdeal::LocalIdeal(std::vector<Germ> gens, bool minimalize_flag) : gens_(std::move(gens)) {
    for (auto it = gens_.begin(); it != gens_.end();)
        it = (it->is_zero() && it->is_exact()) ? gens_.erase(it) : std::next(it);
    if (gens_.empty()) throw unsupported_germ("empty generator list for a local ideal");
    std::stable_sort(gens_.begin(), gens_.end(), [](const Germ& a, const Germ& b) {
        return ExpLess{}(a.terms().begin()->first, b.terms().begin()->first);
    });
    if (minimalize_flag) minimalize();
}

LocalIdeal LocalIdeal::from_exponents(const std::vector<Exp>& exps) {
    std::vector<Germ> gens;
    gens.reserve(exps.size());
    for (const auto& e : exps) gens.push_back(Germ::monomial(e.a, e.b, Scalar(1)));
    return LocalIdeal(std::move(gens));
}

LocalIdeal LocalIdeal::unit() { return LocalIdeal({Germ(Scalar(1))}, false); }

bool LocalIdeal::is_unit() const {
    for (const auto& g : gens_)
        if (!g.coeff(0, 0).is_zero()) return true;
    return false;
}

bool LocalIdeal::is_monomial() const {
    for (const auto& g : gens_)
        if (g.terms().size() != 1) return false;
    return true;
}

std::vector<Exp> LocalIdeal::monomial_exponents() const {
    std::vector<Exp> exps;
    for (const auto& g : gens_) {
        if (g.terms().size() != 1) throw unsupported_germ("ideal is not monomial");
        exps.push_back(g.terms().begin()->first);
    }
    return exps;
}

void LocalIdeal::minimalize() {
    if (is_monomial()) {
        // divisibility pruning
        std::vector<Germ> kept;
        for (size_t i = 0; i < gens_.size(); ++i) {
            Exp e = gens_[i].terms().begin()->first;
            bool redundant = false;
            for (size_t j = 0; j < gens_.size() && !redundant; ++j) {
                if (i == j) continue;
                Exp o = gens_[j].terms().begin()->first;
                if (o.a <= e.a && o.b <= e.b && !(o.a == e.a && o.b == e.b))
                    redundant = true;
                if (o.a == e.a && o.b == e.b && j < i) redundant = true; // duplicates
            }
            if (!redundant) kept.push_back(gens_[i]);
        }
        gens_ = std::move(kept);
        return;
    }
    for (size_t i = gens_.size(); i-- > 0;) {
        if (gens_.size() == 1) break;
        std::vector<Germ> others;
        for (size_t j = 0; j < gens_.size(); ++j)
            if (j != i) others.push_back(gens_[j]);
        try {
            QuotientAlgebra q(others);
            if (q.contains(gens_[i])) gens_.erase(gens_.begin() + i);
        } catch (const cap_exceeded&) {
            // cannot certify membership: keep the generator
        }
    }
}

int LocalIdeal::colength() const {
    if (colength_ >= 0) return colength_;
    if (is_monomial())
        colength_ = staircase_colength(monomial_exponents());
    else
        colength_ = quotient()->colength();
    return colength_;
}

std::shared_ptr<const QuotientAlgebra> LocalIdeal::quotient() const {
    if (!quotient_) quotient_ = std::make_shared<QuotientAlgebra>(gens_);
    return quotient_;
}

bool LocalIdeal::contains(const Germ& g) const {
    if (g.is_zero() && g.is_exact()) return true;
    if (is_monomial()) {
        auto exps = monomial_exponents();
        for (const auto& [e, c] : g.terms()) {
            bool divisible = false;
            for (const auto& o : exps)
                if (o.a <= e.a && o.b <= e.b) {
                    divisible = true;
                    break;
                }
            if (!divisible) return false;
        }
        // unknown high-order terms: fine once the pure powers are reached
        if (!g.is_exact()) {
            int amax = -1, bmax = -1;
            for (const auto& o : exps) {
                if (o.b == 0) amax = amax < 0 ? o.a : std::min(amax, o.a);
                if (o.a == 0) bmax = bmax < 0 ? o.b : std::min(bmax, o.b);
            }
            if (amax < 0 || bmax < 0 || g.truncation() < amax + bmax)
                throw cap_exceeded("jet too short for monomial membership");
        }
        return true;
    }
    return quotient()->contains(g);
}

bool LocalIdeal::equivalent(const LocalIdeal& other) const {
    if (colength() != other.colength()) return false;
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string LocalIdeal::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ">";
    return os.str();
}

/* ---------------- monomial criterion ---------------- */

std::vector<std::pair<Covector, long>> criterion_thresholds(const Germ& f, int k, int d) {
    if (k < 1 || k >= d) throw parse_error("k must satisfy 1 <= k < d");
    NewtonBoundary nb = boundary(f);
    std::vector<std::pair<Covector, long>> out;
    for (const auto& face : nb.faces) {
        long tau = (static_cast<long>(k) * face.m) / d - face.q.norm() + 1;
        out.emplace_back(face.q, tau);
    }
    return out;
}

LocalIdeal multiplier_ideal_monomial(const Germ& f, int k, int d) {
    if (!is_convenient(f))
        throw unsupported_germ("germ is not convenient; run make_convenient first");
    if (!is_nondegenerate(f))
        throw unsupported_germ("Newton boundary is degenerate; the monomial criterion does not apply");
    auto thresholds = criterion_thresholds(f, k, d);

    bool any_positive = false;
    for (const auto& [q, tau] : thresholds) any_positive |= tau > 0;
    if (!any_positive) return LocalIdeal::unit();

    auto ceil_div = [](long x, long y) { return x > 0 ? (x + y - 1) / y : 0L; };

    long amax = 0;
    for (const auto& [q, tau] : thresholds) amax = std::max(amax, ceil_div(tau, q.p));
    auto breq = [&](long a) {
        long r = 0;
        for (const auto& [q, tau] : thresholds) r = std::max(r, ceil_div(tau - q.p * a, q.q));
        return r;
    };

    std::vector<Exp> gens;
    long prev = -1;
    for (long a = 0; a <= amax; ++a) {
        long b = breq(a);
        if (a == 0 || b < prev) gens.push_back(Exp{static_cast<int>(a), static_cast<int>(b)});
        prev = b;
        if (b == 0) break;
    }
    return LocalIdeal::from_exponents(gens);
}

/* ---------------- chart valuation engine ---------------- */

ChartStep ChartStep::monomial_step(long a, long b, long c, long e) {
    ChartStep s;
    s.kind = Kind::monomial;
    s.mat[0][0] = a;
    s.mat[0][1] = b;
    s.mat[1][0] = c;
    s.mat[1][1] = e;
    if (a < 0 || b < 0 || c < 0 || e < 0 || std::abs(a * e - b * c) != 1)
        throw parse_error("monomial chart step must be unimodular with nonnegative entries");
    return s;
}

ChartStep ChartStep::translate_step(const Scalar& c) {
    ChartStep s;
    s.kind = Kind::translate;
    if (c.is_zero()) throw parse_error("translation step requires a nonzero constant");
    s.shift = c;
    return s;
}

namespace {

Germ apply_step(const ChartStep& s, const Germ& g) {
    Germ out;
    if (s.kind == ChartStep::Kind::monomial) {
        for (const auto& [e, c] : g.terms()) {
            long a = s.mat[0][0] * e.a + s.mat[1][0] * e.b;
            long b = s.mat[0][1] * e.a + s.mat[1][1] * e.b;
            out.set_coeff(static_cast<int>(a), static_cast<int>(b), out.coeff(a, b) + c);
        }
        return out;
    }
    // v <- v + shift
    for (const auto& [e, c] : g.terms()) {
        for (int j = 0; j <= e.b; ++j) {
            Scalar sc = s.shift;
            Scalar pw(1);
            for (int t = 0; t < e.b - j; ++t) pw = pw * s.shift;
            Scalar add = c * Scalar(binomial(e.b, j)) * pw;
            Scalar cur = out.coeff(e.a, j);
            out.set_coeff(e.a, j, cur + add);
        }
    }
    return out;
}

// certified lower bound for the final u-order of the pullback of unknown terms
long unknown_order_bound(const ChartSequence& chart, int trunc) {
    long bound = trunc;
    bool first_monomial = true;
    for (const auto& s : chart.steps) {
        if (s.kind != ChartStep::Kind::monomial) continue;
        if (first_monomial) {
            bound = std::min(s.mat[0][0], s.mat[1][0]) * bound;
            first_monomial = false;
        } else {
            bound = s.mat[0][0] * bound;
        }
    }
    return bound;
}

} // namespace

Germ chart_pullback(const ChartSequence& chart, const Germ& g) {
    Germ cur = g;
    for (const auto& s : chart.steps) cur = apply_step(s, cur);
    return cur;
}

long chart_valuation(const ChartSequence& chart, const Germ& g) {
    if (g.is_zero() && g.is_exact()) throw unsupported_germ("valuation of the zero germ");
    Germ pb = chart_pullback(chart, g);
    long val = -1;
    for (const auto& [e, c] : pb.terms())
        if (val < 0 || e.a < val) val = e.a;
    if (val < 0) throw unsupported_germ("valuation of the zero germ");
    if (!g.is_exact() && unknown_order_bound(chart, g.truncation()) <= val)
        throw cap_exceeded("truncation too coarse to certify the chart valuation");
    return val;
}

long chart_two_form_order(const ChartSequence& chart) {
    Germ X = Germ::var_u(), Y = Germ::var_v();
    for (const auto& s : chart.steps) {
        X = apply_step(s, X);
        Y = apply_step(s, Y);
    }
    Germ jac = X.derivative_u() * Y.derivative_v() - X.derivative_v() * Y.derivative_u();
    long val = -1;
    for (const auto& [e, c] : jac.terms())
        if (val < 0 || e.a < val) val = e.a;
    if (val < 0) throw unsupported_germ("chart has a degenerate Jacobian");
    return val;
}

/* ---------------- ideal from divisor thresholds ---------------- */

namespace {

// dense RREF over Scalar; returns pivot column per row, -1 rows removed
std::vector<int> rref(std::vector<std::vector<Scalar>>& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<Exp> candidate_monomials(int cap) {
    std::vector<Exp> cands;
    for (int d = 0; d <= cap; ++d)
        for (int a = d; a >= 0; --a) cands.push_back(Exp{a, d - a});
    return cands;
}

/* Kernel of the threshold constraints on germs of degree <= cap,
 * returned as germs. */
std::vector<Germ> constraint_kernel(const std::vector<std::pair<ChartSequence, DivisorData>>& divisors,
                                    int k, int d, int cap) {
    auto cands = candidate_monomials(cap);
    const size_t nc = cands.size();

    // rows: per divisor, per final-chart monomial with u-exponent < tau
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [chart, data] : divisors) {
        long tau = -data.k_mult + (static_cast<long>(k) * data.f_mult) / d;
        if (tau <= 0) continue;
        Germ pu = chart_pullback(chart, Germ::var_u());
        Germ pv = chart_pullback(chart, Germ::var_v());
        std::vector<Germ> pu_pow(cap + 1), pv_pow(cap + 1);
        pu_pow[0] = Germ(Scalar(1));
        pv_pow[0] = Germ(Scalar(1));
        for (int i = 1; i <= cap; ++i) {
            pu_pow[i] = pu_pow[i - 1] * pu;
            pv_pow[i] = pv_pow[i - 1] * pv;
        }
        // collect the low-order monomials that appear across all candidates
        std::map<Exp, int, ExpLess> row_of;
        std::vector<std::vector<Scalar>> local;
        for (size_t ci = 0; ci < nc; ++ci) {
            Germ pb = pu_pow[cands[ci].a] * pv_pow[cands[ci].b];
            for (const auto& [e, c] : pb.terms()) {
                if (e.a >= tau) continue;
                auto it = row_of.find(e);
                if (it == row_of.end()) {
                    it = row_of.emplace(e, static_cast<int>(local.size())).first;
                    local.emplace_back(nc, Scalar(0));
                }
                local[it->second][ci] = c;
            }
        }
        for (auto& r : local) rows.push_back(std::move(r));
    }

    if (rows.empty()) {
        // no constraints: everything of degree <= cap
        std::vector<Germ> gens;
        gens.push_back(Germ(Scalar(1)));
        return gens;
    }

    auto pivots = rref(rows);
    std::vector<bool> is_pivot(nc, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Germ> kernel;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Germ vec = Germ::monomial(cands[f].a, cands[f].b, Scalar(1));
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r][f].is_zero())
                vec = vec + Germ::monomial(cands[pivots[r]].a, cands[pivots[r]].b, -rows[r][f]);
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

} // namespace

LocalIdeal multiplier_ideal_charts(const std::vector<std::pair<ChartSequence, DivisorData>>& divisors,
                                   int k, int d, int degree_cap) {
    if (k < 1 || k >= d) throw parse_error("k must satisfy 1 <= k < d");

    bool all_trivial = true;
    for (const auto& [chart, data] : divisors)
        all_trivial &= (-data.k_mult + (static_cast<long>(k) * data.f_mult) / d) <= 0;
    if (all_trivial) return LocalIdeal::unit();

    int cap = degree_cap;
    for (int attempt = 0; attempt < 4; ++attempt, cap += 6) {
        auto kernel = constraint_kernel(divisors, k, d, cap);
        if (kernel.empty())
            continue; // colength beyond this cap, enlarge

        // echelonize the kernel by leading monomial; minimal leading monomials
        // under divisibility give the generator candidates
        auto cands = candidate_monomials(cap);
        std::map<Exp, int, ExpLess> idx;
        for (size_t i = 0; i < cands.size(); ++i) idx[cands[i]] = static_cast<int>(i);
        std::vector<std::vector<Scalar>> m;
        for (const auto& g : kernel) {
            std::vector<Scalar> row(cands.size(), Scalar(0));
            for (const auto& [e, c] : g.terms()) row[idx.at(e)] = c;
            m.push_back(std::move(row));
        }
        auto pivots = rref(m);

        std::vector<Exp> lts;
        for (int p : pivots) lts.push_back(cands[p]);
        std::vector<Germ> gens;
        for (size_t i = 0; i < pivots.size(); ++i) {
            const Exp& e = cands[pivots[i]];
            bool minimal = true;
            for (const auto& o : lts)
                if (!(o == e) && o.a <= e.a && o.b <= e.b) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            Germ g;
            for (size_t j = 0; j < cands.size(); ++j)
                if (!m[i][j].is_zero()) g.set_coeff(cands[j].a, cands[j].b, m[i][j]);
            gens.push_back(std::move(g));
        }

        LocalIdeal ideal(std::move(gens));
        std::shared_ptr<const QuotientAlgebra> q;
        try {
            q = ideal.quotient();
        } catch (const cap_exceeded&) {
            continue; // not yet finite within this view; enlarge the cap
        }
        if (q->truncation() - 1 > cap) continue; // kernel view too small to compare

        // the ideal must reproduce the kernel exactly up to the certification level
        bool ok = true;
        for (const auto& v : kernel)
            if (!ideal.contains(v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        int constrained = static_cast<int>(candidate_monomials(q->truncation() - 1).size()) -
                          static_cast<int>(constraint_kernel(divisors, k, d, q->truncation() - 1).size());
        if (constrained != q->colength()) continue;
        return ideal;
    }
    throw cap_exceeded("chart-valuation ideal has no finite colength within the degree cap");
}

} // namespace sextic
