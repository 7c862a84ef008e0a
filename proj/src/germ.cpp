#include "sextic/germ.hpp"

#include <algorithm>
#include <sstream>

namespace sextic {

Rat binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}

/* ---------------- Germ ---------------- */

Germ::Germ(const Scalar& constant) {
    if (!constant.is_zero()) terms_.emplace(Exp{0, 0}, constant);
}

Germ Germ::monomial(int a, int b, const Scalar& coeff) {
    Germ g;
    if (!coeff.is_zero()) g.terms_.emplace(Exp{a, b}, coeff);
    return g;
}

Germ Germ::var_u() { return monomial(1, 0, Scalar(1)); }
Germ Germ::var_v() { return monomial(0, 1, Scalar(1)); }

Scalar Germ::coeff(int a, int b) const {
    auto it = terms_.find(Exp{a, b});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Germ::set_coeff(int a, int b, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(Exp{a, b});
    else
        terms_[Exp{a, b}] = c;
    clip();
}

void Germ::insert(const Exp& e, const Scalar& c) {
    if (trunc_ != kExactGerm && e.deg() >= trunc_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Germ::clip() {
    if (trunc_ == kExactGerm) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.deg() >= trunc_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

int Germ::order_lower_bound() const {
    if (!terms_.empty()) return terms_.begin()->first.deg();
    return trunc_ == kExactGerm ? kGermOrderInf : trunc_;
}

int Germ::order() const {
    if (!terms_.empty()) return terms_.begin()->first.deg();
    if (trunc_ == kExactGerm) return kGermOrderInf;
    throw cap_exceeded("order of a jet with empty known support is undetermined");
}

int Germ::max_degree() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.deg());
    return m;
}

Germ with_truncation(Germ g, int n) {
    g.trunc_ = n;
    g.clip();
    return g;
}

Germ Germ::truncated(int n) const {
    int t = trunc_ == kExactGerm ? n : std::min(trunc_, n);
    return with_truncation(*this, t);
}

bool equal_mod(const Germ& a, const Germ& b, int n) {
    int ta = a.truncation() == kExactGerm ? kGermOrderInf : a.truncation();
    int tb = b.truncation() == kExactGerm ? kGermOrderInf : b.truncation();
    if (ta < n || tb < n) throw cap_exceeded("jets too short for comparison mod degree");
    Germ d = a - b;
    for (const auto& [e, c] : d.terms())
        if (e.deg() < n) return false;
    return true;
}

Germ Germ::operator-() const {
    Germ r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Germ Germ::operator+(const Germ& o) const {
    Germ r;
    if (trunc_ == kExactGerm)
        r.trunc_ = o.trunc_;
    else if (o.trunc_ == kExactGerm)
        r.trunc_ = trunc_;
    else
        r.trunc_ = std::min(trunc_, o.trunc_);
    r.terms_ = terms_;
    r.clip();
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

Germ Germ::operator-(const Germ& o) const { return *this + (-o); }

Germ Germ::operator*(const Germ& o) const {
    Germ r;
    long ta = trunc_ == kExactGerm ? kGermOrderInf : trunc_;
    long tb = o.trunc_ == kExactGerm ? kGermOrderInf : o.trunc_;
    long t = std::min(ta + std::min<long>(o.order_lower_bound(), kGermOrderInf),
                      tb + std::min<long>(order_lower_bound(), kGermOrderInf));
    r.trunc_ = t >= kGermOrderInf ? kExactGerm : static_cast<int>(t);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.insert(Exp{ea.a + eb.a, ea.b + eb.b}, ca * cb);
    return r;
}

Germ Germ::operator*(const Scalar& s) const {
    Germ r;
    r.trunc_ = trunc_;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
        Scalar p = c * s;
        if (!p.is_zero()) r.terms_.emplace(e, p);
    }
    return r;
}

Germ Germ::pow(int n) const {
    Germ r(Scalar(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

bool Germ::operator==(const Germ& o) const {
    if (trunc_ != o.trunc_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

Germ Germ::derivative_u() const {
    Germ r;
    r.trunc_ = trunc_ == kExactGerm ? kExactGerm : trunc_ - 1;
    for (const auto& [e, c] : terms_)
        if (e.a > 0) r.insert(Exp{e.a - 1, e.b}, c * Scalar(e.a));
    return r;
}

Germ Germ::derivative_v() const {
    Germ r;
    r.trunc_ = trunc_ == kExactGerm ? kExactGerm : trunc_ - 1;
    for (const auto& [e, c] : terms_)
        if (e.b > 0) r.insert(Exp{e.a, e.b - 1}, c * Scalar(e.b));
    return r;
}

Scalar Germ::eval(const Scalar& u, const Scalar& v) const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < e.a; ++i) t = t * u;
        for (int i = 0; i < e.b; ++i) t = t * v;
        acc = acc + t;
    }
    return acc;
}

FieldPtr Germ::field() const {
    for (const auto& [e, c] : terms_)
        if (c.field()) return c.field();
    return nullptr;
}

Germ Germ::promote(const FieldPtr& f) const {
    Germ r;
    r.trunc_ = trunc_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.promote(f));
    return r;
}

std::string Germ::str() const {
    if (terms_.empty()) return trunc_ == kExactGerm ? "0" : "O(" + std::to_string(trunc_) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool unit_coeff = (cs == "1") && e.deg() > 0;
        if (!unit_coeff) os << cs;
        if (e.a > 0) {
            if (!unit_coeff) os << " ";
            os << "u";
            if (e.a > 1) os << "^" << e.a;
        }
        if (e.b > 0) {
            if (!unit_coeff || e.a > 0) os << " ";
            os << "v";
            if (e.b > 1) os << "^" << e.b;
        }
    }
    if (trunc_ != kExactGerm) os << " + O(" << trunc_ << ")";
    return os.str();
}

/* ---------------- CoordinateJets ---------------- */

CoordinateJets::CoordinateJets(Germ x, Germ y) : x_(std::move(x)), y_(std::move(y)) {
    if (!x_.coeff(0, 0).is_zero() || !y_.coeff(0, 0).is_zero())
        throw verification_error("coordinate jets must fix the origin");
    if (linear_det().is_zero()) throw verification_error("coordinate jets have singular linear part");
}

CoordinateJets CoordinateJets::identity() { return CoordinateJets(Germ::var_u(), Germ::var_v()); }

CoordinateJets CoordinateJets::linear(const Scalar& xu, const Scalar& xv, const Scalar& yu, const Scalar& yv) {
    Germ x = Germ::monomial(1, 0, xu) + Germ::monomial(0, 1, xv);
    Germ y = Germ::monomial(1, 0, yu) + Germ::monomial(0, 1, yv);
    return CoordinateJets(std::move(x), std::move(y));
}

int CoordinateJets::truncation() const {
    int tx = x_.truncation() == kExactGerm ? kGermOrderInf : x_.truncation();
    int ty = y_.truncation() == kExactGerm ? kGermOrderInf : y_.truncation();
    int t = std::min(tx, ty);
    return t >= kGermOrderInf ? kExactGerm : t;
}

Scalar CoordinateJets::linear_det() const {
    return x_.coeff(1, 0) * y_.coeff(0, 1) - x_.coeff(0, 1) * y_.coeff(1, 0);
}

Germ substitute_map(const Germ& g, const Germ& x, const Germ& y) {
    if (!x.coeff(0, 0).is_zero() || !y.coeff(0, 0).is_zero())
        throw verification_error("substitution maps must fix the origin");
    auto tval = [](const Germ& h) { return h.truncation() == kExactGerm ? kGermOrderInf : h.truncation(); };
    int t = std::min({tval(x), tval(y), tval(g)});

    int max_a = 0, max_b = 0;
    for (const auto& [e, c] : g.terms()) {
        max_a = std::max(max_a, e.a);
        max_b = std::max(max_b, e.b);
    }
    auto cap = [&](Germ h) { return t >= kGermOrderInf ? h : h.truncated(t); };
    std::vector<Germ> xp(max_a + 1), yp(max_b + 1);
    xp[0] = Germ(Scalar(1));
    yp[0] = Germ(Scalar(1));
    for (int i = 1; i <= max_a; ++i) xp[i] = cap(xp[i - 1] * x);
    for (int i = 1; i <= max_b; ++i) yp[i] = cap(yp[i - 1] * y);

    Germ acc;
    for (const auto& [e, c] : g.terms()) acc = acc + cap(xp[e.a] * yp[e.b]) * c;
    if (t < kGermOrderInf) acc = acc.truncated(t);
    return acc;
}

Germ substitute(const Germ& g, const CoordinateJets& jets) { return substitute_map(g, jets.x(), jets.y()); }

CoordinateJets compose(const CoordinateJets& first, const CoordinateJets& second) {
    return CoordinateJets(substitute(first.x(), second), substitute(first.y(), second));
}

CoordinateJets invert_jets(const CoordinateJets& jets, int order) {
    int tj = jets.truncation() == kExactGerm ? kGermOrderInf : jets.truncation();
    if (tj < order)
        throw cap_exceeded("jet truncation too small to invert to the requested order");
    Scalar det = jets.linear_det();

    // L^-1 as linear germs in (u, v)
    Scalar a = jets.x().coeff(1, 0), b = jets.x().coeff(0, 1);
    Scalar c = jets.y().coeff(1, 0), d = jets.y().coeff(0, 1);
    Germ lu = Germ::monomial(1, 0, d / det) + Germ::monomial(0, 1, -b / det);
    Germ lv = Germ::monomial(1, 0, -c / det) + Germ::monomial(0, 1, a / det);

    Germ hx = (jets.x() - Germ::monomial(1, 0, a) - Germ::monomial(0, 1, b)).truncated(order);
    Germ hy = (jets.y() - Germ::monomial(1, 0, c) - Germ::monomial(0, 1, d)).truncated(order);

    Germ U = lu.truncated(order), V = lv.truncated(order);
    for (int it = 0; it < order; ++it) {
        CoordinateJets psi(U, V);
        Germ ex = substitute(hx, psi); // h(psi) gains a degree each round
        Germ ey = substitute(hy, psi);
        CoordinateJets err(Germ::var_u() - ex, Germ::var_v() - ey);
        Germ nu = substitute(lu, err).truncated(order);
        Germ nv = substitute(lv, err).truncated(order);
        if (nu == U && nv == V) break;
        U = nu;
        V = nv;
    }
    return CoordinateJets(U, V);
}

/* ---------------- HomogeneousForm ---------------- */

HomogeneousForm HomogeneousForm::monomial(int i, int j, int l, const Scalar& c) {
    HomogeneousForm f(i + j + l);
    if (!c.is_zero()) f.terms_.emplace(Exp3{i, j, l}, c);
    return f;
}

void HomogeneousForm::set_coeff(int i, int j, int l, const Scalar& c) {
    if (i + j + l != degree_) throw parse_error("exponents do not sum to the declared degree");
    if (c.is_zero())
        terms_.erase(Exp3{i, j, l});
    else
        terms_[Exp3{i, j, l}] = c;
}

Scalar HomogeneousForm::coeff(int i, int j, int l) const {
    auto it = terms_.find(Exp3{i, j, l});
    return it == terms_.end() ? Scalar(0) : it->second;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw parse_error("adding forms of different degrees");
    HomogeneousForm r = *this;
    if (r.is_zero()) r.degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            if (!c.is_zero()) r.terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const { return *this + o * Scalar(-1); }

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
    HomogeneousForm r(degree_ + o.degree_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exp3 e{ea.i + eb.i, ea.j + eb.j, ea.l + eb.l};
            auto it = r.terms_.find(e);
            Scalar p = ca * cb;
            if (it == r.terms_.end()) {
                if (!p.is_zero()) r.terms_.emplace(e, p);
            } else {
                it->second = it->second + p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

HomogeneousForm HomogeneousForm::operator*(const Scalar& s) const {
    HomogeneousForm r(degree_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
        Scalar p = c * s;
        if (!p.is_zero()) r.terms_.emplace(e, p);
    }
    return r;
}

HomogeneousForm HomogeneousForm::pow(int n) const {
    HomogeneousForm r = HomogeneousForm::monomial(0, 0, 0, Scalar(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

Scalar HomogeneousForm::eval(const Scalar& X, const Scalar& Y, const Scalar& Z) const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int k = 0; k < e.i; ++k) t = t * X;
        for (int k = 0; k < e.j; ++k) t = t * Y;
        for (int k = 0; k < e.l; ++k) t = t * Z;
        acc = acc + t;
    }
    return acc;
}

HomogeneousForm HomogeneousForm::partial(int var) const {
    HomogeneousForm r(degree_ - 1);
    for (const auto& [e, c] : terms_) {
        int exps[3] = {e.i, e.j, e.l};
        if (exps[var] == 0) continue;
        Scalar nc = c * Scalar(exps[var]);
        exps[var]--;
        Exp3 ne{exps[0], exps[1], exps[2]};
        auto it = r.terms_.find(ne);
        if (it == r.terms_.end())
            r.terms_.emplace(ne, nc);
        else {
            it->second = it->second + nc;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

FieldPtr HomogeneousForm::field() const {
    for (const auto& [e, c] : terms_)
        if (c.field()) return c.field();
    return nullptr;
}

std::string HomogeneousForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.i) os << " X^" << e.i;
        if (e.j) os << " Y^" << e.j;
        if (e.l) os << " Z^" << e.l;
    }
    return os.str();
}

/* ---------------- dehomogenization ---------------- */

/* ---------------- germ parser ---------------- */

namespace {

struct GermParser {
    const std::string& s;
    size_t pos = 0;

    explicit GermParser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Germ parse_expr() {
        Germ acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Germ parse_term() {
        Germ acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (c == 'u' || c == 'v' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Germ parse_factor() {
        Germ base = parse_atom();
        if (peek() == '^') {
            ++pos;
            long e = parse_integer();
            if (e < 0) throw parse_error("negative exponent in germ");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    long parse_integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at position " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }

    Germ parse_atom() {
        char c = peek();
        if (c == 'u') {
            ++pos;
            return Germ::var_u();
        }
        if (c == 'v') {
            ++pos;
            return Germ::var_v();
        }
        if (c == '(') {
            ++pos;
            Germ g = parse_expr();
            if (!eat(')')) throw parse_error("missing closing parenthesis");
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string num = s.substr(start, pos - start);
            if (peek() == '/') {
                ++pos;
                skip();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) throw parse_error("missing denominator");
                num += "/" + s.substr(dstart, pos - dstart);
            }
            return Germ(Scalar(parse_rational(num)));
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }
};

} // namespace

Germ parse_germ(const std::string& s) {
    GermParser p(s);
    Germ g = p.parse_expr();
    p.skip();
    if (p.pos != s.size()) throw parse_error("trailing input in polynomial: " + s.substr(p.pos));
    return g;
}

int select_chart(const ProjectivePoint& p) {
    if (!p.Z.is_zero()) return 2;
    if (!p.Y.is_zero()) return 1;
    if (!p.X.is_zero()) return 0;
    throw verification_error("projective point has all coordinates zero");
}

ProjectivePoint normalize_to_chart(const ProjectivePoint& p, int chart) {
    const Scalar& c = chart == 0 ? p.X : chart == 1 ? p.Y : p.Z;
    if (c.is_zero()) throw verification_error("chart coordinate vanishes at the point");
    Scalar inv = c.inverse();
    return ProjectivePoint{p.X * inv, p.Y * inv, p.Z * inv};
}

Germ dehomogenize_at(const HomogeneousForm& F, const ProjectivePoint& point, int chart) {
    ProjectivePoint p = normalize_to_chart(point, chart);
    // affine variables: the two non-chart coordinates in X,Y,Z order
    int vu = chart == 0 ? 1 : 0;
    int vv = chart == 2 ? 1 : 2;
    Scalar base[3] = {p.X, p.Y, p.Z};

    Germ out;
    for (const auto& [e, c] : F.terms()) {
        int exps[3] = {e.i, e.j, e.l};
        // (base_u + u)^eu (base_v + v)^ev, chart coordinate contributes 1
        Germ t(c);
        for (int which = 0; which < 2; ++which) {
            int idx = which == 0 ? vu : vv;
            int n = exps[idx];
            if (n == 0) continue;
            Germ lin = (which == 0 ? Germ::var_u() : Germ::var_v()) + Germ(base[idx]);
            t = t * lin.pow(n);
        }
        out = out + t;
    }
    return out;
}

} // namespace sextic
