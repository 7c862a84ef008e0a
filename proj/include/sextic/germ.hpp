#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

// exponent pair of u^a v^b
struct Exp {
    int a = 0, b = 0;
    int deg() const { return a + b; }
    friend bool operator==(const Exp& x, const Exp& y) { return x.a == y.a && x.b == y.b; }
};

// graded order, u-major inside a degree; used everywhere a monomial order is needed
struct ExpLess {
    bool operator()(const Exp& x, const Exp& y) const {
        if (x.deg() != y.deg()) return x.deg() < y.deg();
        return x.a > y.a;
    }
};

constexpr int kExactGerm = -1;      // truncation marker: exact polynomial
constexpr int kGermOrderInf = 1 << 28;

/* Finitely supported bivariate polynomial over Scalar, optionally a jet:
 * truncation() == N means terms of total degree >= N are unknown. */
class Germ {
public:
    Germ() = default;
    explicit Germ(const Scalar& constant);
    static Germ monomial(int a, int b, const Scalar& coeff);
    static Germ var_u();
    static Germ var_v();

    const std::map<Exp, Scalar, ExpLess>& terms() const { return terms_; }
    int truncation() const { return trunc_; } // kExactGerm if exact
    bool is_exact() const { return trunc_ == kExactGerm; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(int a, int b) const;
    void set_coeff(int a, int b, const Scalar& c);

    // certified lower bound for the order (min total degree); kGermOrderInf for exact zero
    int order_lower_bound() const;
    // exact order; throws if the support is empty but terms are unknown
    int order() const;
    int max_degree() const; // of the known support

    Germ truncated(int n) const;
    Germ operator-() const;
    Germ operator+(const Germ& o) const;
    Germ operator-(const Germ& o) const;
    Germ operator*(const Germ& o) const;
    Germ operator*(const Scalar& s) const;
    Germ pow(int n) const;
    bool operator==(const Germ& o) const;

    Germ derivative_u() const;
    Germ derivative_v() const;

    Scalar eval(const Scalar& u, const Scalar& v) const; // exact germs only

    FieldPtr field() const; // field of any coefficient, nullptr if all rational
    Germ promote(const FieldPtr& f) const;

    std::string str() const; // human-readable, graded order

private:
    std::map<Exp, Scalar, ExpLess> terms_;
    int trunc_ = kExactGerm;

    void insert(const Exp& e, const Scalar& c);
    void clip();
    friend class CoordinateJets;
    friend Germ with_truncation(Germ g, int n);
};

Germ with_truncation(Germ g, int n);

// agreement of all terms of total degree < n
bool equal_mod(const Germ& a, const Germ& b, int n);

/* Local coordinate change x = x(u,v), y = y(u,v): zero constant terms,
 * invertible linear part. */
class CoordinateJets {
public:
    CoordinateJets(Germ x, Germ y);
    static CoordinateJets identity();
    static CoordinateJets linear(const Scalar& xu, const Scalar& xv, const Scalar& yu, const Scalar& yv);

    const Germ& x() const { return x_; }
    const Germ& y() const { return y_; }
    int truncation() const; // min of the two components

    Scalar linear_det() const;

private:
    Germ x_, y_;
};

// g(x(u,v), y(u,v)), truncation propagated
Germ substitute(const Germ& g, const CoordinateJets& jets);

/* Same, for substitutions that are not coordinate changes (monomial chart
 * maps and the like); x and y must still vanish at the origin. */
Germ substitute_map(const Germ& g, const Germ& x, const Germ& y);

// first o second: (x,y) = first(second(u,v))
CoordinateJets compose(const CoordinateJets& first, const CoordinateJets& second);

// inverse jets up to the requested order: compositions are the identity mod degree `order`
CoordinateJets invert_jets(const CoordinateJets& jets, int order);

/* Homogeneous form in X, Y, Z. */
struct Exp3 {
    int i = 0, j = 0, l = 0;
    friend auto operator<=>(const Exp3&, const Exp3&) = default;
};

class HomogeneousForm {
public:
    HomogeneousForm() = default;
    explicit HomogeneousForm(int degree) : degree_(degree) {}
    static HomogeneousForm monomial(int i, int j, int l, const Scalar& c);

    int degree() const { return degree_; }
    const std::map<Exp3, Scalar>& terms() const { return terms_; }
    void set_coeff(int i, int j, int l, const Scalar& c);
    Scalar coeff(int i, int j, int l) const;
    bool is_zero() const { return terms_.empty(); }

    HomogeneousForm operator+(const HomogeneousForm& o) const;
    HomogeneousForm operator-(const HomogeneousForm& o) const;
    HomogeneousForm operator*(const HomogeneousForm& o) const;
    HomogeneousForm operator*(const Scalar& s) const;
    HomogeneousForm pow(int n) const;

    Scalar eval(const Scalar& X, const Scalar& Y, const Scalar& Z) const;
    HomogeneousForm partial(int var) const; // 0 = X, 1 = Y, 2 = Z

    FieldPtr field() const;
    std::string str() const;

private:
    int degree_ = 0;
    std::map<Exp3, Scalar> terms_;
};

struct ProjectivePoint {
    Scalar X, Y, Z;
};

/* Affine germ of F at `point` in the chart where coordinate `chart` is 1,
 * translated so that the point sits at the origin.  The two remaining
 * coordinates, in X,Y,Z order, become (u,v). */
Germ dehomogenize_at(const HomogeneousForm& F, const ProjectivePoint& point, int chart);

// chart with nonzero coordinate, preferring Z, then Y, then X
int select_chart(const ProjectivePoint& p);
ProjectivePoint normalize_to_chart(const ProjectivePoint& p, int chart);

Rat binomial(int n, int k);

/* Parse a bivariate polynomial over Q, e.g. "v^3 + u^2*v^2 + u^9" or
 * "(v - u^2)^2 - 1/4 u^5".  Multiplication may be implicit. */
Germ parse_germ(const std::string& s);

} // namespace sextic
