#include "sextic/alexander.hpp"

#include <sstream>

namespace sextic {

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<long long> poly_pow(const std::vector<long long>& p, long e) {
    std::vector<long long> r{1};
    for (long i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

std::string power_str(const std::string& base, long e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

} // namespace

DeltaFactor delta_factor(int k, int d) {
    if (k < 1 || k >= d) throw parse_error("delta factor requires 1 <= k < d");
    DeltaFactor f;
    f.k = k;
    f.d = d;
    if (d == 6) {
        switch (k) {
            case 1:
            case 5: f.coeffs = std::vector<long>{1, -1, 1}; break;
            case 2:
            case 4: f.coeffs = std::vector<long>{1, 1, 1}; break;
            case 3: f.coeffs = std::vector<long>{1, 2, 1}; break; // (t+1)^2
        }
    } else if (2 * k == d) {
        f.coeffs = std::vector<long>{1, 2, 1};
    }
    return f;
}

std::string DeltaFactor::str() const {
    if (d == 6) {
        if (k == 1 || k == 5) return "t^2 - t + 1";
        if (k == 2 || k == 4) return "t^2 + t + 1";
        return "(t + 1)^2";
    }
    int kk = std::min(k, d - k); // Delta_k = Delta_{d-k}
    std::ostringstream os;
    os << "Delta(" << kk << "/" << d << ")";
    return os.str();
}

AlexanderPolynomial alexander_reduced(const std::vector<long>& ells, int d) {
    if (static_cast<int>(ells.size()) != d - 1)
        throw parse_error("ell vector must have d-1 entries");
    for (long e : ells)
        if (e < 0) throw parse_error("ell_k must be nonnegative");
    AlexanderPolynomial a;
    a.d = d;
    a.ells = ells;
    a.r = 1;
    a.generic = false;
    return a;
}

AlexanderPolynomial alexander_generic(const AlexanderPolynomial& reduced, long r) {
    if (r < 1) throw parse_error("component count must be at least 1");
    AlexanderPolynomial a = reduced;
    a.r = r;
    a.generic = true;
    return a;
}

int AlexanderPolynomial::degree() const {
    long deg = 0;
    for (long e : ells) deg += 2 * e;
    if (generic) deg += r - 1;
    return static_cast<int>(deg);
}

std::vector<long long> AlexanderPolynomial::coefficients() const {
    if (d != 6)
        throw unsupported_germ("expanded coefficients are implemented for d = 6 only");
    long e1 = ells[0] + ells[4]; // t^2 - t + 1
    long e2 = ells[1] + ells[3]; // t^2 + t + 1
    long e3 = ells[2];           // (t+1)^2
    std::vector<long long> p{1};
    p = poly_mul(p, poly_pow({1, -1, 1}, e1));
    p = poly_mul(p, poly_pow({1, 1, 1}, e2));
    p = poly_mul(p, poly_pow({1, 2, 1}, e3));
    if (generic) p = poly_mul(p, poly_pow({-1, 1}, r - 1));
    return p;
}

std::string AlexanderPolynomial::factored() const {
    std::vector<std::string> parts;
    if (generic && r > 1) parts.push_back(power_str("(t - 1)", r - 1));
    if (d == 6) {
        long e1 = ells[0] + ells[4];
        long e2 = ells[1] + ells[3];
        long e3 = 2 * ells[2];
        if (e1) parts.push_back(power_str("(t^2 - t + 1)", e1));
        if (e2) parts.push_back(power_str("(t^2 + t + 1)", e2));
        if (e3) parts.push_back(power_str("(t + 1)", e3));
    } else {
        for (int k = 1; k < d; ++k)
            if (ells[k - 1]) parts.push_back(power_str(delta_factor(k, d).str(), ells[k - 1]));
    }
    if (parts.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    return out;
}

} // namespace sextic
