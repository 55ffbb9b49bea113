#pragma once

#include <vector>

#include "gpi/eigen_support.hpp"

namespace gpi {

// Row space in reduced row echelon form over Q, with first-nonzero pivoting
// on the fixed column order. Insertions keep the stored rows reduced against
// each other, so bases and ranks are deterministic.
class RowSpace {
public:
    explicit RowSpace(Eigen::Index cols) : cols_(cols) {}

    Eigen::Index cols() const { return cols_; }
    Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
    const std::vector<RatRow>& rows() const { return rows_; }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }

    // Residual of r after reduction against the stored rows.
    RatRow reduce(RatRow r) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational c = r[pivots_[i]]; // copy: r aliases the expression below
            if (!c.is_zero()) r -= c * rows_[i];
        }
        return r;
    }

    static bool row_is_zero(const RatRow& r) {
        for (Eigen::Index j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) return false;
        return true;
    }

    bool contains(const RatRow& r) const { return row_is_zero(reduce(r)); }

    // Returns true when the row enlarged the space.
    bool insert(RatRow r) {
        r = reduce(std::move(r));
        Eigen::Index p = -1;
        for (Eigen::Index j = 0; j < cols_; ++j)
            if (!r[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        Rational piv = r[p];
        r /= piv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational c = rows_[i][p];
            if (!c.is_zero()) rows_[i] -= c * r;
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(r));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

private:
    Eigen::Index cols_;
    std::vector<RatRow> rows_;
    std::vector<Eigen::Index> pivots_;
};

// Basis of { x : A x = 0 } where the equations are the rows of A over n
// unknowns. One basis vector per free column, in ascending column order.
inline std::vector<RatRow> nullspace_basis(const std::vector<RatRow>& equations,
                                           Eigen::Index n) {
    RowSpace rs(n);
    for (const auto& e : equations) rs.insert(e);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : rs.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RatRow> basis;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        RatRow v = RatRow::Zero(n);
        v[j] = Rational(1);
        for (std::size_t i = 0; i < rs.rows().size(); ++i)
            v[rs.pivots()[i]] = -rs.rows()[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gpi
