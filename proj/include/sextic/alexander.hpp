#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/errors.hpp"

namespace sextic {

/* The quadratic cyclotomic-pair factor Delta_k for degree d.  Exact integer
 * coefficients exist for d = 6 (the only degree with an expanded output);
 * in general only the conjugate pairing Delta_k = Delta_{d-k} is recorded. */
struct DeltaFactor {
    int k = 0, d = 6;
    std::optional<std::vector<long>> coeffs; // ascending; set when exact over Z
    std::string str() const;
};

DeltaFactor delta_factor(int k, int d);

/* Alexander data: the exponent vector (ell_1..ell_{d-1}), the component
 * count r, and, for d = 6, the expanded integer polynomial. */
struct AlexanderPolynomial {
    int d = 6;
    std::vector<long> ells;
    long r = 1;
    bool generic = false; // true once the (t-1)^(r-1) factor is included

    // product of the Delta_k^(ell_k) factors, times (t-1)^(r-1) when generic
    std::vector<long long> coefficients() const; // d = 6 only
    std::string factored() const;
    int degree() const;
};

AlexanderPolynomial alexander_reduced(const std::vector<long>& ells, int d);
AlexanderPolynomial alexander_generic(const AlexanderPolynomial& reduced, long r);

} // namespace sextic
