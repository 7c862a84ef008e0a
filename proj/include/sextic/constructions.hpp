#pragma once

#include "sextic/sigma.hpp"

namespace sextic {

/* Explicit fixture curves with rational (or Q(omega)) singular data.
 * Every construction verifies its singular points and classifies them
 * before the spec is returned. */

// product of six distinct lines Y = s_i X: one B6,6 point at (0:0:1), r = 6
CurveSpec six_lines(const std::vector<Scalar>& slopes);

/* f2^3 + f3^2 with the singular points supplied by the caller (they are
 * verified and classified). */
CurveSpec torus_from_f2_f3(const HomogeneousForm& f2, const HomogeneousForm& f3,
                           const std::vector<ProjectivePoint>& points, long num_components);

/* f3^2 + ell^6 for a line meeting the cubic transversally in three rational
 * points: three A5 singularities, r = 2. */
CurveSpec linear_torus_3A5(const HomogeneousForm& ell, const HomogeneousForm& f3);

/* Dual sextic of a smooth cubic, by discriminant elimination; the nine cusp
 * records are the duals of the flexes.  Flex extraction is implemented for
 * diagonal cubics whose coefficient ratios are rational cubes; the active
 * field must contain omega with omega^2 + omega + 1 = 0. */
CurveSpec nine_cuspidal(const HomogeneousForm& cubic, const FieldPtr& field);

// the four named fixtures used by the CLI and the acceptance suite
CurveSpec fixture_six_lines();
CurveSpec fixture_torus_six_cusps();
CurveSpec fixture_linear_3A5();
CurveSpec fixture_nine_cuspidal();

// dual curve of a smooth cubic (elimination oracle), over Q
HomogeneousForm dual_of_cubic(const HomogeneousForm& cubic);

} // namespace sextic
