#pragma once

#include "sextic/classify.hpp"

namespace sextic {

struct SingularPointSpec {
    ProjectivePoint point;
    std::optional<SingularityType> declared; // nullopt: classify automatically
    std::optional<CoordinateJets> user_jets; // germ coords at the point, optional
    int truncation = 16;
};

/* A reduced plane curve with its declared singular locus.  The declared
 * component count r is the caller's responsibility; every listed point is
 * verified to be a singular point of F. */
struct CurveSpec {
    int degree = 6;
    HomogeneousForm F;
    long num_components = 1;
    std::vector<SingularPointSpec> points;
    FieldPtr field; // nullptr: rational curve
};

struct CurvePoint {
    ProjectivePoint point;
    int chart = 2;
    LocalData local;
};

struct AnalyzedCurve {
    CurveSpec spec;
    std::vector<CurvePoint> points;
};

/* Verifies degree and that every declared point is singular on F, then
 * computes the per-point local data.  Throws verification_error on a
 * non-singular declared point, unsupported_germ outside the catalog. */
AnalyzedCurve analyze_curve(const CurveSpec& spec);

/* Exact matrix of sigma_k: rows are the concatenated local quotient bases,
 * columns the monomials of degree k-3 (zero columns for k < 3); the entry is
 * the basis coefficient of the reduced, substituted column monomial. */
struct SigmaMatrix {
    int k = 0;
    std::vector<Exp3> columns;
    std::vector<std::vector<Scalar>> entries; // rows x columns
    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return static_cast<int>(columns.size()); }
};

SigmaMatrix sigma_matrix(const AnalyzedCurve& curve, int k);

int rho_total(const AnalyzedCurve& curve, int k);

// ell_k = rho(k) - rank sigma_k
int ell(const AnalyzedCurve& curve, int k);

// exact rank over the active field
int matrix_rank(std::vector<std::vector<Scalar>> m);

} // namespace sextic
