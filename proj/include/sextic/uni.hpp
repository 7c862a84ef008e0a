#pragma once

#include <optional>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

/* Small univariate utilities over Scalar, ascending coefficients. */
namespace uni {

using Poly = std::vector<Scalar>;

void trim(Poly& p);
int degree(const Poly& p); // -1 for zero
Poly derivative(const Poly& p);
Poly mod(Poly a, const Poly& b);
Poly divide_exact(const Poly& a, const Poly& b); // throws if not exact
Poly gcd_monic(Poly a, Poly b);                  // monic gcd; {} for gcd(0,0)

// the rational square root of a rational number, when it exists
std::optional<Rat> rational_sqrt(const Rat& r);

/* Roots in the coefficient field: exact for degree 1; degree 2 only when the
 * discriminant is a rational square (quadratic formula over extensions is
 * out of scope).  nullopt: roots exist only outside the field or are not
 * reachable by these formulas. */
std::optional<std::vector<Scalar>> field_roots(const Poly& p);

/* All rational roots of a polynomial with rational coefficients, with
 * multiplicity 1 each (divisor search after clearing denominators). */
std::vector<Rat> rational_roots(Poly p);

} // namespace uni

} // namespace sextic
