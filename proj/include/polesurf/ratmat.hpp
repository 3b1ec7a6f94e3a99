#pragma once

#include <vector>

#include "polesurf/field.hpp"

namespace polesurf {

using RatVec = std::vector<Rational>;

/// Incremental row-space reducer over Q (reduced row echelon form).
/// Insertion keeps rows normalized with leading 1 at the pivot column;
/// reduce() maps a vector to its canonical residue modulo the row space.
class RowReducer {
  public:
    explicit RowReducer(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true when the vector enlarged the row space.
    bool insert(RatVec v);

    /// Canonical residue of v modulo the row space (zero iff v lies in it).
    RatVec reduce(RatVec v) const;

    bool contains(const RatVec& v) const;

  private:
    int cols_;
    std::vector<RatVec> rows_;
    std::vector<int> pivots_;
};

int rat_rank(std::vector<RatVec> rows);

inline bool is_zero_vec(const RatVec& v) {
    for (auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace polesurf
