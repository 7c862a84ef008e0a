#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/ideal.hpp"

namespace sextic {

/* The singularity catalog for sextics: ADE plus the non-simple types that
 * occur on sextics of torus type. */
struct SingularityType {
    enum class Family { A, D, E, B, C, D47, Sp1, Sp2, Unknown };
    Family family = Family::Unknown;
    int m = 0, n = 0; // A_n, D_n, E_n use n; B_{m,n}, C_{m,n} use both

    static SingularityType A(int n) { return {Family::A, 0, n}; }
    static SingularityType D(int n) { return {Family::D, 0, n}; }
    static SingularityType E(int n) { return {Family::E, 0, n}; }
    static SingularityType B(int m, int n) { return {Family::B, m, n}; }
    static SingularityType C(int m, int n) { return {Family::C, m, n}; }
    static SingularityType D47() { return {Family::D47, 0, 0}; }
    static SingularityType Sp(int i) { return {i == 1 ? Family::Sp1 : Family::Sp2, 0, 0}; }
    static SingularityType Unknown() { return {Family::Unknown, 0, 0}; }

    bool is_unknown() const { return family == Family::Unknown; }
    bool is_simple() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }

    std::string str() const;                      // "A2", "B3,6", "D4,7", "Sp1", ...
    static SingularityType parse(const std::string& s);

    friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

// Milnor number the catalog predicts for the type
int catalog_mu(const SingularityType& t);

// local branch count r_P
int catalog_branches(const SingularityType& t);

// delta invariant (mu + r - 1)/2; integer for every catalog type
int delta_invariant(const SingularityType& t);

// the catalog's defining polynomial germ (exact, small integer coefficients)
Germ catalog_normal_form(const SingularityType& t);

/* One row of the published local-data tables: the ideal generators exactly
 * as printed and the printed colength. */
struct ReferenceRow {
    SingularityType type;
    int k = 0;
    std::string ideal; // "<u^2, v>"; "<1>" for rho = 0 rows
    int rho = 0;
};

// simple table: A1..A22, D4..D21, E6..E8 at k = 4; k = 5 up to A19 / D20
const std::vector<ReferenceRow>& simple_reference_table();
// the 14 non-simple items at k = 3, 4, 5 (B6,6 also at k = 2)
const std::vector<ReferenceRow>& nonsimple_reference_table();

// tabulated ideal and rho for (type, k); errors outside the tables
ReferenceRow reference_row(const SingularityType& t, int k);
LocalIdeal reference_ideal(const SingularityType& t, int k);

// parse a generator list like "<u^4, v^2 - u^3, v^3>"
LocalIdeal parse_ideal(const std::string& s);

/* Two-stage toric resolution data for Sp1 / Sp2: six divisors each, with
 * DivisorData recomputed from the chart sequences and cross-checked against
 * the printed multiplicity vectors. */
struct SpResolution {
    std::vector<std::pair<ChartSequence, DivisorData>> divisors;
    std::vector<long> u_mult, v_mult; // orders of pi*u, pi*v per divisor
};

const SpResolution& sp_resolution(const SingularityType& t); // Sp1 or Sp2

/* Same chart layout for a germ whose degenerate face function is
 * a (v^2 - c u^3)^2: the stage-two translation moves to v1 = c.
 * Divisor data is computed on `f` itself. */
SpResolution sp_resolution_for(const SingularityType& t, const Germ& f, const Scalar& shift);

// printed Sp1 vectors on (T1,T2,T3,S1,S2,S3): K, pi*f, pi*u, pi*v
struct Sp1Printed {
    std::vector<long> K, f, u, v;
};
const Sp1Printed& sp1_printed_vectors();

// every type of the two tables, in table order
std::vector<SingularityType> catalog_all_types();

} // namespace sextic
