#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "deligne/partitions.hpp"

namespace deligne {

/// Sparse integer matrix with rows and columns indexed by bipartitions of
/// total size <= bound(). Zero entries are never stored.
///
/// Rows are read as row vectors: row lambda lists the coefficients of the
/// image of basis vector lambda. Under this convention the product A * B
/// means "apply A, then B".
class BipartitionMatrix {
public:
    using Row = std::map<Bipartition, std::int64_t>;

    explicit BipartitionMatrix(int bound = 0) : bound_(bound) {}

    static BipartitionMatrix identity(int bound);
    /// Entry (row, col) = f(row, col) for all indices of size <= bound.
    static BipartitionMatrix tabulate(int bound, const std::function<std::int64_t(const Bipartition&, const Bipartition&)>& f);

    int bound() const noexcept { return bound_; }

    std::int64_t at(const Bipartition& row, const Bipartition& col) const;
    /// Silently drops entries whose indices exceed the bound; storing 0 erases.
    void set(const Bipartition& row, const Bipartition& col, std::int64_t value);
    void add(const Bipartition& row, const Bipartition& col, std::int64_t value);

    const std::map<Bipartition, Row>& rows() const noexcept { return rows_; }
    const Row& row(const Bipartition& r) const;

    std::size_t nonzeros() const;

    BipartitionMatrix transposed() const;
    /// Drop every entry whose row or column has size > bound.
    BipartitionMatrix restricted(int bound) const;

    friend BipartitionMatrix operator*(const BipartitionMatrix& a, const BipartitionMatrix& b);
    friend BipartitionMatrix operator+(const BipartitionMatrix& a, const BipartitionMatrix& b);
    friend BipartitionMatrix operator-(const BipartitionMatrix& a, const BipartitionMatrix& b);
    friend bool operator==(const BipartitionMatrix& a, const BipartitionMatrix& b) { return a.rows_ == b.rows_; }

    /// Inverse of a matrix that is unitriangular with respect to total size
    /// (entry nonzero only if |row| >= |col|, diagonal all 1). Throws
    /// std::invalid_argument otherwise.
    BipartitionMatrix unitriangular_inverse() const;

    bool is_size_lower_unitriangular() const;

private:
    int bound_;
    std::map<Bipartition, Row> rows_;
};

}  // namespace deligne
