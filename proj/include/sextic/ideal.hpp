#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sextic/newton.hpp"
#include "sextic/quotient.hpp"

namespace sextic {

/* Finite-colength local ideal held by a generator list.  Generator lists are
 * kept minimal (no generator lies in the ideal of the others). */
class LocalIdeal {
public:
    explicit LocalIdeal(std::vector<Germ> gens, bool minimalize = true);
    static LocalIdeal from_exponents(const std::vector<Exp>& exps);
    static LocalIdeal unit();

    const std::vector<Germ>& generators() const { return gens_; }
    bool is_unit() const;
    bool is_monomial() const;
    std::vector<Exp> monomial_exponents() const; // throws unless monomial

    int colength() const;                                // staircase fast path when monomial
    std::shared_ptr<const QuotientAlgebra> quotient() const; // cached
    bool contains(const Germ& g) const;

    // ideal equality: mutual generator membership plus equal colength
    bool equivalent(const LocalIdeal& other) const;

    std::string str() const; // "<u^4, v^2 - u^3, ...>" in graded order

private:
    std::vector<Germ> gens_;
    mutable std::shared_ptr<const QuotientAlgebra> quotient_;
    mutable int colength_ = -1;

    void minimalize();
};

// floor(k*m/d) - |Q| + 1 for each face covector of the boundary of f
std::vector<std::pair<Covector, long>> criterion_thresholds(const Germ& f, int k, int d);

/* Monomial multiplier-type ideal of a convenient non-degenerate germ:
 * all u^a v^b with  p a + q b >= floor(k m(f,Q)/d) - |Q| + 1  on every face
 * covector Q = (p,q), presented by its minimal generators.  1 <= k < d. */
LocalIdeal multiplier_ideal_monomial(const Germ& f, int k, int d);

/* Composed toric chart: each step is a unimodular monomial substitution
 * (u,v) <- (u^a v^b, u^c v^e) or a translation v <- v + const; the final
 * chart's u-axis is the exceptional divisor. */
struct ChartStep {
    enum class Kind { monomial, translate };
    Kind kind = Kind::monomial;
    long mat[2][2] = {{1, 0}, {0, 1}}; // rows: images of u and of v
    Scalar shift;                      // translation constant, nonzero

    static ChartStep monomial_step(long a, long b, long c, long e);
    static ChartStep translate_step(const Scalar& c);
};

struct ChartSequence {
    std::string divisor; // display name, e.g. "E(S2)"
    std::vector<ChartStep> steps;
};

// total transform of g in the final chart coordinates (exact)
Germ chart_pullback(const ChartSequence& chart, const Germ& g);

// order of vanishing of the pull-back of g along the chart's divisor
long chart_valuation(const ChartSequence& chart, const Germ& g);

// order of the pulled-back two-form du^dv along the divisor (the paper's k_i)
long chart_two_form_order(const ChartSequence& chart);

struct DivisorData {
    long k_mult = 0; // order of pi*(du^dv)
    long f_mult = 0; // order of pi*f
};

/* Ideal of all germs phi with chart_valuation(phi) >= -k_i + floor(k m_i/d)
 * on every listed divisor, computed by jet linear algebra on candidate
 * monomials of total degree <= degree_cap.  Includes non-monomial
 * generators (e.g. v^2 - u^3). */
LocalIdeal multiplier_ideal_charts(const std::vector<std::pair<ChartSequence, DivisorData>>& divisors,
                                   int k, int d, int degree_cap = 10);

} // namespace sextic
