#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "sextic/errors.hpp"

namespace sextic {

using Rat = mpq_class;

Rat rat_of(long num, long den = 1);
Rat parse_rational(const std::string& s);
std::string to_string(const Rat& r); // "p/q", lowest terms, q > 0, "p" when q == 1

/* A simple extension Q[alpha]/(m(alpha)), m monic with integer coefficients,
 * deg m >= 2.  Towers are out of scope; one extension covers every fixture
 * (the 9-cuspidal sextic needs Q(omega), omega^2+omega+1 = 0). */
class NumberField {
public:
    // min_poly: ascending integer coefficients, monic, degree >= 2
    explicit NumberField(std::vector<long> min_poly);

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<Rat>& min_poly() const { return min_poly_; }

    // c has arbitrary length; reduced in place to length degree()
    void reduce(std::vector<Rat>& c) const;
    std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    std::vector<Rat> inv(const std::vector<Rat>& a) const;

private:
    std::vector<Rat> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/* Exact scalar: an element of Q (field() == nullptr) or of a simple
 * extension.  Canonical form: rational scalars hold one coefficient;
 * extension scalars hold exactly degree() coefficients reduced mod m. */
class Scalar {
public:
    Scalar() : c_(1, Rat(0)) {}
    Scalar(const Rat& r) : c_(1, r) {}
    Scalar(long n) : c_(1, Rat(n)) {}
    Scalar(std::vector<Rat> coords, FieldPtr field);

    static Scalar generator(FieldPtr field); // alpha itself

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const;
    bool is_one() const;
    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }
    const Rat& rational() const; // throws unless rational

    Scalar promote(const FieldPtr& field) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const; // "p/q" or "[c0, c1, ...]"

private:
    std::vector<Rat> c_;
    FieldPtr field_; // nullptr: rational

    static FieldPtr common_field(const Scalar& a, const Scalar& b);
};

} // namespace sextic
