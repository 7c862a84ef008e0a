#include "sextic/uni.hpp"

namespace sextic::uni {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
    trim(d);
    return d;
}

Poly mod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) return a;
    while (a.size() >= b.size() && !a.empty()) {
        Scalar c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        trim(a);
    }
    return a;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    Poly rem = a;
    trim(rem);
    if (b.empty()) throw verification_error("division by the zero polynomial");
    Poly q(rem.size() > b.size() ? rem.size() - b.size() + 1 : 1, Scalar(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Scalar c = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - c * b[i];
        trim(rem);
    }
    if (!rem.empty()) throw verification_error("polynomial division is not exact");
    trim(q);
    return q;
}

Poly gcd_monic(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) {
        Scalar inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

std::vector<Rat> rational_roots(Poly p) {
    trim(p);
    std::vector<Rat> roots;
    if (p.empty()) return roots;
    // strip roots at zero
    size_t low = 0;
    while (low < p.size() && p[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + low);
    }
    if (p.size() <= 1) return roots;
    // clear denominators
    mpz_class lcm = 1;
    for (const auto& s : p) {
        mpz_class den = s.rational().get_den();
        lcm = lcm * den / gcd(lcm, den);
    }
    std::vector<mpz_class> ip;
    for (const auto& s : p) ip.push_back(mpz_class(s.rational().get_num() * (lcm / s.rational().get_den())));
    mpz_class a0 = abs(ip.front()), an = abs(ip.back());
    for (mpz_class num = 1; num <= a0; ++num) {
        if (a0 % num != 0) continue;
        for (mpz_class den = 1; den <= an; ++den) {
            if (an % den != 0) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign > 0 ? num : mpz_class(-num), den);
                cand.canonicalize();
                Scalar r{cand};
                Scalar val(0);
                for (size_t s = p.size(); s-- > 0;) val = val * r + p[s];
                if (!val.is_zero()) continue;
                bool seen = false;
                for (const auto& x : roots) seen |= (x == cand);
                if (!seen) roots.push_back(cand);
            }
        }
    }
    return roots;
}

std::optional<std::vector<Scalar>> field_roots(const Poly& in) {
    Poly p = in;
    trim(p);
    int d = degree(p);
    if (d <= 0) return std::nullopt;
    if (d == 1) return std::vector<Scalar>{-(p[0] / p[1])};
    if (d == 2) {
        // (-b +- sqrt(b^2-4ac)) / 2a with a rational square discriminant
        Scalar disc = p[1] * p[1] - Scalar(4) * p[2] * p[0];
        Rat dr;
        try {
            dr = disc.rational();
        } catch (const verification_error&) {
            return std::nullopt;
        }
        auto s = rational_sqrt(dr);
        if (!s) return std::nullopt;
        Scalar sq(*s), two_a = Scalar(2) * p[2];
        return std::vector<Scalar>{(-p[1] + sq) / two_a, (-p[1] - sq) / two_a};
    }
    return std::nullopt;
}

} // namespace sextic::uni
