#pragma once

#include <vector>

#include "sextic/germ.hpp"

namespace sextic {

/* Primitive inner normal of a Newton boundary face.  Face covectors have
 * p, q >= 1; the axis covectors (1,0), (0,1) appear only where explicitly
 * constructed. */
struct Covector {
    long p = 0, q = 0;
    long norm() const { return p + q; } // |Q| = p + q
    friend bool operator==(const Covector&, const Covector&) = default;
};

struct NewtonFace {
    Covector q;
    Exp from, to;   // endpoints, from.a < to.a
    long m = 0;     // value of q on the face = weight_value(f, q)
    Germ face_fn;   // sub-germ supported on the face
};

struct NewtonBoundary {
    std::vector<Exp> vertices; // extreme points, increasing a
    std::vector<NewtonFace> faces; // ordered by increasing slope q/p

    bool touches_u_axis() const; // some vertex (a, 0)
    bool touches_v_axis() const;
};

// minimum of p*a + q*b over the support; errors on the zero germ or when the
// truncation cannot certify the minimum
long weight_value(const Germ& g, const Covector& q);

// compact faces of the lower-left hull with primitive inner normals
NewtonBoundary boundary(const Germ& f);

// convenient: the support meets both coordinate axes
bool is_convenient(const Germ& f);

/* Non-degeneracy: every face function has no critical point with both
 * coordinates nonzero; decided by square-freeness of the face polynomial
 * restricted to u = 1 (u, v factors excluded). */
bool is_nondegenerate(const Germ& f);

/* Search the fixed substitution family u -> u+cv, v -> v+cu, v -> v+cu^2,
 * c in {1,-1,2,-2,3,-3}, for a convenient and non-degenerate model.
 * Returns the transformed germ and the jets used (identity when the input
 * is already convenient). */
std::pair<Germ, CoordinateJets> make_convenient(const Germ& f);

} // namespace sextic
