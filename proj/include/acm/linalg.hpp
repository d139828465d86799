#pragma once

// Dense exact row reduction over a field scalar K. This is all the linear
// algebra the library needs: rank of evaluation matrices and incremental
// span membership for minimal-generator counting.

#include <cstddef>
#include <vector>

namespace acm {

// Maintains a row-echelon spanning set; rows can be fed one at a time.
template <class K>
class RowSpace {
public:
    // Reduces `row` against the stored rows (in place) and returns it.
    std::vector<K> residue(std::vector<K> row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = row[pivots_[r]];
            if (c.is_zero()) continue;
            K f = c;  // stored rows are monic at their pivot
            for (std::size_t j = pivots_[r]; j < row.size(); ++j)
                row[j] -= f * rows_[r][j];
        }
        return row;
    }

    // Adds `row` to the span. Returns true iff it enlarged the space.
    bool add(std::vector<K> row) {
        row = residue(std::move(row));
        std::size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == row.size()) return false;
        K inv = row[p].inv();
        for (std::size_t j = p; j < row.size(); ++j) row[j] *= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<K> row) const {
        row = residue(std::move(row));
        for (const K& c : row)
            if (!c.is_zero()) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class K>
std::size_t matrix_rank(const std::vector<std::vector<K>>& m) {
    RowSpace<K> rs;
    for (const auto& row : m) rs.add(row);
    return rs.rank();
}

}  // namespace acm
