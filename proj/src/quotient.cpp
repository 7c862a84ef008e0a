#include "sextic/quotient.hpp"

#include <algorithm>

namespace sextic {

namespace {

std::vector<Exp> monomials_below(int level) {
    std::vector<Exp> cols;
    for (int d = 0; d < level; ++d)
        for (int a = d; a >= 0; --a) cols.push_back(Exp{a, d - a});
    // already in ExpLess order: degree ascending, a descending inside a degree
    return cols;
}

} // namespace

QuotientAlgebra::QuotientAlgebra(std::vector<Germ> gens, int start_n, int cap) : gens_(std::move(gens)) {
    int max_n = kGermOrderInf;
    for (const auto& g : gens_) {
        if (g.is_zero() && g.is_exact()) throw unsupported_germ("zero generator in quotient");
        if (!g.is_exact()) max_n = std::min(max_n, g.truncation() - 1);
    }
    if (max_n < 2) throw cap_exceeded("generators too truncated for any certification level");
    for (int n = std::min(start_n, max_n); n <= cap; n *= 2) {
        if (n > max_n)
            throw cap_exceeded("certification would need jets beyond their truncation order");
        if (build(n)) return;
    }
    throw cap_exceeded("certification m^N <= ideal failed up to the cap (colength may be infinite)");
}

bool QuotientAlgebra::build(int n) {
    n_ = n;
    level_ = n + 1;
    echelon_.clear();
    basis_.clear();
    columns_ = monomials_below(level_);
    col_index_.clear();
    for (size_t i = 0; i < columns_.size(); ++i) col_index_[columns_[i]] = static_cast<int>(i);

    // span of { x^a y^b * g  mod m^level } in insertion order
    for (const auto& g : gens_) {
        int og = g.order_lower_bound();
        if (og >= level_) continue;
        for (const auto& mult : columns_) {
            if (mult.deg() + og >= level_) continue;
            SparseRow row;
            for (const auto& [e, c] : g.terms()) {
                Exp p{e.a + mult.a, e.b + mult.b};
                if (p.deg() >= level_) continue;
                row.emplace_back(col_index_.at(p), c);
            }
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            row = reduce_row(std::move(row));
            if (row.empty()) continue;
            Scalar lead = row.front().second;
            if (!lead.is_one()) {
                Scalar inv = lead.inverse();
                for (auto& [c, v] : row) v = v * inv;
            }
            echelon_.emplace(row.front().first, std::move(row));
        }
    }

    // certify every degree-n monomial
    for (const auto& e : columns_) {
        if (e.deg() != n) continue;
        SparseRow unit{{col_index_.at(e), Scalar(1)}};
        if (!reduce_row(std::move(unit)).empty()) return false;
    }
    for (const auto& e : columns_)
        if (e.deg() < n && !echelon_.count(col_index_.at(e))) basis_.push_back(e);
    return true;
}

QuotientAlgebra::SparseRow QuotientAlgebra::reduce_row(SparseRow row) const {
    // eliminate every entry sitting on a pivot column, front to back
    size_t i = 0;
    while (i < row.size()) {
        auto it = echelon_.find(row[i].first);
        if (it == echelon_.end()) {
            ++i;
            continue;
        }
        Scalar c = row[i].second;
        // row -= c * pivot_row (pivot_row normalized, leading coefficient 1)
        SparseRow merged;
        merged.reserve(row.size() + it->second.size());
        size_t a = 0, b = 0;
        while (a < row.size() || b < it->second.size()) {
            if (b == it->second.size() || (a < row.size() && row[a].first < it->second[b].first)) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || it->second[b].first < row[a].first) {
                merged.emplace_back(it->second[b].first, -(c * it->second[b].second));
                ++b;
            } else {
                Scalar v = row[a].second - c * it->second[b].second;
                if (!v.is_zero()) merged.emplace_back(row[a].first, v);
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
        // the eliminated column was at position i; entries before i are untouched
    }
    return row;
}

Germ QuotientAlgebra::reduce(const Germ& g) const {
    if (!g.is_exact() && g.truncation() < n_)
        throw cap_exceeded("jet truncation below the quotient certification level");
    SparseRow row;
    for (const auto& [e, c] : g.terms()) {
        if (e.deg() >= level_) continue; // degree >= N lies in the ideal
        row.emplace_back(col_index_.at(e), c);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    row = reduce_row(std::move(row));
    Germ out;
    for (const auto& [col, c] : row) out.set_coeff(columns_[col].a, columns_[col].b, c);
    return out;
}

int staircase_colength(const std::vector<Exp>& gens) {
    if (gens.empty()) throw unsupported_germ("empty monomial generator list");
    int amax = -1, bmax = -1;
    for (const auto& e : gens) {
        if (e.a == 0 && e.b == 0) return 0; // unit ideal
        if (e.b == 0) amax = amax < 0 ? e.a : std::min(amax, e.a);
        if (e.a == 0) bmax = bmax < 0 ? e.b : std::min(bmax, e.b);
    }
    if (amax < 0 || bmax < 0) throw unsupported_germ("monomial ideal has infinite colength (axis not blocked)");
    int count = 0;
    for (int a = 0; a < amax; ++a) {
        int breq = bmax;
        for (const auto& e : gens)
            if (e.a <= a) breq = std::min(breq, e.b);
        count += breq;
    }
    return count;
}

int colength_lower_bound(const std::vector<Germ>& gens, int level) {
    // same elimination as QuotientAlgebra::build, without certification
    auto columns = monomials_below(level);
    std::map<Exp, int, ExpLess> idx;
    for (size_t i = 0; i < columns.size(); ++i) idx[columns[i]] = static_cast<int>(i);
    std::map<int, std::vector<std::pair<int, Scalar>>> ech;

    auto reduce_row = [&](std::vector<std::pair<int, Scalar>> row) {
        size_t i = 0;
        while (i < row.size()) {
            auto it = ech.find(row[i].first);
            if (it == ech.end()) {
                ++i;
                continue;
            }
            Scalar c = row[i].second;
            std::vector<std::pair<int, Scalar>> merged;
            size_t a = 0, b = 0;
            while (a < row.size() || b < it->second.size()) {
                if (b == it->second.size() || (a < row.size() && row[a].first < it->second[b].first))
                    merged.push_back(row[a++]);
                else if (a == row.size() || it->second[b].first < row[a].first) {
                    merged.emplace_back(it->second[b].first, -(c * it->second[b].second));
                    ++b;
                } else {
                    Scalar v = row[a].second - c * it->second[b].second;
                    if (!v.is_zero()) merged.emplace_back(row[a].first, v);
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
        return row;
    };

    for (const auto& g : gens) {
        int og = g.order_lower_bound();
        for (const auto& mult : columns) {
            if (mult.deg() + og >= level) continue;
            std::vector<std::pair<int, Scalar>> row;
            for (const auto& [e, c] : g.terms()) {
                Exp p{e.a + mult.a, e.b + mult.b};
                if (p.deg() >= level) continue;
                row.emplace_back(idx.at(p), c);
            }
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            row = reduce_row(std::move(row));
            if (row.empty()) continue;
            Scalar inv = row.front().second.inverse();
            for (auto& [c, v] : row) v = v * inv;
            ech.emplace(row.front().first, std::move(row));
        }
    }
    return static_cast<int>(columns.size() - ech.size());
}

int milnor_number(const Germ& f, int cap) {
    Germ fu = f.derivative_u(), fv = f.derivative_v();
    if (fu.is_zero() && fv.is_zero()) throw unsupported_germ("zero gradient: not an isolated singularity");
    try {
        QuotientAlgebra q({fu, fv}, 12, cap);
        return q.colength();
    } catch (const cap_exceeded&) {
        throw unsupported_germ("Milnor number not finite within the certification cap");
    }
}

int intersection_multiplicity(const Germ& f, const Germ& g, int cap) {
    try {
        QuotientAlgebra q({f, g}, 12, cap);
        return q.colength();
    } catch (const cap_exceeded&) {
        throw unsupported_germ("intersection multiplicity not finite within the cap (common component?)");
    }
}

bool intersection_at_least(const Germ& f, const Germ& g, int bound) {
    int level = bound + 1;
    return colength_lower_bound({f, g}, level) >= bound;
}

} // namespace sextic
