#pragma once

#include <optional>

#include "sextic/catalog.hpp"

namespace sextic {

/* Classify an isolated plane curve germ into the sextic catalog.
 * A-series by corank <= 1 and the Milnor number; D/E by the cubic tangent
 * cone; the non-simple families by Newton boundary shape in aligned
 * coordinates plus the Milnor number.  Unknown when outside the catalog
 * or when a required line is not defined over the active field. */
SingularityType classify(const Germ& f, int trunc = 16);

/* Jets (x(u,v), y(u,v)) such that f(x(u,v), y(u,v)) is a normal-form model:
 * automatic square completion for the A-series, tangent-cone alignment for
 * D, E, B, C, D4,7 and the Sp types.  Throws when the automatic family does
 * not reach the normal form. */
CoordinateJets normal_coordinates(const Germ& f, const SingularityType& type, int trunc = 16);

/* The translation constant c of the degenerate face (v^2 - c u^3)^2 of an
 * aligned Sp germ. */
Scalar sp_face_shift(const Germ& aligned);

/* Plucker diagnostic for irreducible sextics: the delta sum over
 * rho(4)-essential points must not exceed 10. */
bool plucker_check(const std::vector<SingularityType>& types);

/* Complete local data of one singular point: classified type, coordinates,
 * per-k ideals, colengths and reduction maps (k = 1..d-1). */
struct LocalData {
    SingularityType type;
    int mu = 0;
    CoordinateJets jets = CoordinateJets::identity(); // germ coords -> final local coords
    Germ model;                                       // germ in final coordinates (convenient)
    std::vector<LocalIdeal> ideals;                   // index k-1
    std::vector<int> rho;                             // index k-1
    std::vector<std::shared_ptr<const QuotientAlgebra>> quotients; // null when rho = 0
};

LocalData analyze_germ(const Germ& f, const std::optional<SingularityType>& declared,
                       const std::optional<CoordinateJets>& user_jets, int trunc = 16, int d = 6);

} // namespace sextic
