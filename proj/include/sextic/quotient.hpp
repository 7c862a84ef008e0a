#pragma once

#include <memory>
#include <vector>

#include "sextic/germ.hpp"

namespace sextic {

/* Finite-dimensional quotient O/(g_1,...,g_r) by exact Gaussian elimination
 * on the jet space of degree < N.  The certification m^N <= ideal reduces
 * every degree-N monomial and requires zero; on failure N doubles, up to
 * `cap`.  Pivoting is by the global graded-lexicographic monomial order
 * (ExpLess) with first-match tie-breaking, so bases are reproducible. */
class QuotientAlgebra {
public:
    // throws cap_exceeded when no N <= cap certifies (infinite colength included)
    QuotientAlgebra(std::vector<Germ> gens, int start_n = 12, int cap = 48);

    int colength() const { return static_cast<int>(basis_.size()); }
    int truncation() const { return n_; } // certified: m^N in the ideal
    const std::vector<Exp>& basis() const { return basis_; }
    const std::vector<Germ>& generators() const { return gens_; }

    /* Canonical representative over the monomial complement basis.
     * Exact for inputs of truncation order >= N; reduce(g).is_zero()
     * decides ideal membership. */
    Germ reduce(const Germ& g) const;
    bool contains(const Germ& g) const { return reduce(g).is_zero(); }

private:
    std::vector<Germ> gens_;
    int n_ = 0;
    int level_ = 0; // columns enumerate monomials of degree < level_
    std::vector<Exp> basis_;

    using SparseRow = std::vector<std::pair<int, Scalar>>; // sorted by column
    std::map<int, SparseRow> echelon_; // pivot column -> normalized row
    std::vector<Exp> columns_;
    std::map<Exp, int, ExpLess> col_index_;

    bool build(int n); // returns certification success
    SparseRow reduce_row(SparseRow row) const;
};

// lattice points under the staircase of a monomial ideal; errors when an axis
// is not blocked (infinite colength)
int staircase_colength(const std::vector<Exp>& generator_exponents);

// colength of (g_1,...,g_r) + m^N: a lower bound for the true colength
int colength_lower_bound(const std::vector<Germ>& gens, int level);

// colength of the Jacobian ideal (f_u, f_v)
int milnor_number(const Germ& f, int cap = 48);

// local intersection number I(f,g;0) = colength of (f,g)
int intersection_multiplicity(const Germ& f, const Germ& g, int cap = 48);

// I(f,g;0) >= bound, decided without full certification
bool intersection_at_least(const Germ& f, const Germ& g, int bound);

} // namespace sextic
