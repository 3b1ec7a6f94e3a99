#include "polesurf/ratmat.hpp"

#include <stdexcept>

namespace polesurf {

bool RowReducer::insert(RatVec v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RowReducer: bad width");
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < cols_; ++j) {
        if (sgn(v[j]) != 0) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return false;
    Rational lead = v[piv];
    for (auto& x : v) x /= lead;
    // Clear the new pivot column from existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][piv];
        if (sgn(f) == 0) continue;
        for (int j = 0; j < cols_; ++j) rows_[r][j] -= f * v[j];
    }
    // Keep rows ordered by pivot column.
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, piv);
    return true;
}

RatVec RowReducer::reduce(RatVec v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RowReducer: bad width");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = v[pivots_[r]];
        if (sgn(f) == 0) continue;
        for (int j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool RowReducer::contains(const RatVec& v) const { return is_zero_vec(reduce(v)); }

int rat_rank(std::vector<RatVec> rows) {
    if (rows.empty()) return 0;
    RowReducer red(static_cast<int>(rows[0].size()));
    int r = 0;
    for (auto& row : rows)
        if (red.insert(std::move(row))) ++r;
    return r;
}

}  // namespace polesurf
