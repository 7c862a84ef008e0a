#include "sextic/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace sextic {

Rat rat_of(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw parse_error("bad rational literal: " + s);
    try {
        Rat r(s);
        if (r.get_den() == 0) throw parse_error("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: " + s);
    }
}

std::string to_string(const Rat& r) {
    return r.get_str();
}

/* ---------------- NumberField ---------------- */

NumberField::NumberField(std::vector<long> mp) {
    if (mp.size() < 3) throw parse_error("minimal polynomial must have degree >= 2");
    if (mp.back() != 1) throw parse_error("minimal polynomial must be monic");
    // A rational root would make the modulus reducible; catch the cheap cases
    // here, zero divisors surface later as failed inversions.
    min_poly_.reserve(mp.size());
    for (long c : mp) min_poly_.push_back(Rat(c));
    long deg = static_cast<long>(mp.size()) - 1;
    long a0 = std::abs(mp[0]);
    if (a0 == 0) throw parse_error("minimal polynomial has root 0");
    // monic: any rational root is an integer divisor of the constant term
    for (long p = 1; p <= a0; ++p) {
        if (a0 % p != 0) continue;
        for (long root : {p, -p}) {
            Rat v(0);
            for (long i = deg; i >= 0; --i) v = v * root + min_poly_[i];
            if (v == 0) throw parse_error("minimal polynomial is reducible (rational root)");
        }
    }
}

void NumberField::reduce(std::vector<Rat>& c) const {
    const int n = degree();
    while (static_cast<int>(c.size()) > n) {
        Rat lead = c.back();
        int d = static_cast<int>(c.size()) - 1;
        c.pop_back();
        if (lead == 0) continue;
        // subtract lead * alpha^(d-n) * m(alpha), m monic
        for (int i = 0; i < n; ++i) c[d - n + i] -= lead * min_poly_[i];
    }
    c.resize(n, Rat(0));
}

std::vector<Rat> NumberField::mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    reduce(prod);
    return prod;
}

namespace {
// univariate helpers over Q for the extended Euclid below
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_sub_scaled(const QPoly& a, const QPoly& b, const Rat& c, int shift) {
    QPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    qp_trim(r);
    return r;
}
} // namespace

std::vector<Rat> NumberField::inv(const std::vector<Rat>& a) const {
    // extended Euclid: s*a + t*m = gcd; gcd must be a nonzero constant
    QPoly r0 = min_poly_, r1 = a;
    qp_trim(r1);
    if (r1.empty()) throw verification_error("division by zero scalar");
    QPoly s0 = {}, s1 = {Rat(1)}; // coefficients of a
    while (!r1.empty() && r1.size() > 1) {
        // divide r0 by r1
        QPoly q;
        QPoly rem = r0;
        qp_trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            int shift = static_cast<int>(rem.size() - r1.size());
            if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
            q[shift] = c;
            rem = qp_sub_scaled(rem, r1, c, shift);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        QPoly qs1(q.size() + s1.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        qp_trim(qs1);
        QPoly ns = s0;
        if (ns.size() < qs1.size()) ns.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) ns[i] -= qs1[i];
        qp_trim(ns);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = ns;
    }
    if (r1.empty() || r1[0] == 0)
        throw verification_error("modulus is reducible: zero divisor encountered");
    Rat g = r1[0];
    std::vector<Rat> res(s1);
    for (auto& c : res) c /= g;
    reduce(res);
    return res;
}

/* ---------------- Scalar ---------------- */

Scalar::Scalar(std::vector<Rat> coords, FieldPtr field) : c_(std::move(coords)), field_(std::move(field)) {
    if (field_ == nullptr) {
        if (c_.size() != 1) throw parse_error("rational scalar takes one coordinate");
    } else {
        field_->reduce(c_);
    }
}

Scalar Scalar::generator(FieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return Scalar(std::move(c), std::move(field));
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rat& Scalar::rational() const {
    if (!is_rational()) {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) throw verification_error("scalar is not rational");
    }
    return c_[0];
}

Scalar Scalar::promote(const FieldPtr& field) const {
    if (field_ == field) return *this;
    if (field_ == nullptr && field != nullptr) {
        std::vector<Rat> c(field->degree(), Rat(0));
        c[0] = c_[0];
        return Scalar(std::move(c), field);
    }
    if (field == nullptr) {
        // only legal if the value is in fact rational
        Scalar r(rational());
        return r;
    }
    throw verification_error("scalars from different fields");
}

FieldPtr Scalar::common_field(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) return a.field_;
    if (a.field_ == nullptr) return b.field_;
    if (b.field_ == nullptr) return a.field_;
    throw verification_error("scalars from different fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    FieldPtr f = common_field(*this, o);
    Scalar a = promote(f), b = o.promote(f);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    FieldPtr f = common_field(*this, o);
    if (f == nullptr) return Scalar(c_[0] * o.c_[0]);
    Scalar a = promote(f), b = o.promote(f);
    return Scalar(f->mul(a.c_, b.c_), f);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw verification_error("division by zero scalar");
    if (field_ == nullptr) return Scalar(Rat(1) / c_[0]);
    return Scalar(field_->inv(c_), field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ == o.field_) return c_ == o.c_;
    FieldPtr f;
    try {
        f = common_field(*this, o);
    } catch (const verification_error&) {
        return false;
    }
    return promote(f).c_ == o.promote(f).c_;
}

std::string Scalar::str() const {
    if (field_ == nullptr) return to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

} // namespace sextic
