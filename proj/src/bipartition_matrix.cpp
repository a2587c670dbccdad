#include "deligne/bipartition_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

BipartitionMatrix BipartitionMatrix::identity(int bound) {
    BipartitionMatrix m(bound);
    for (const auto& b : bipartitions_up_to(bound)) m.set(b, b, 1);
    return m;
}

BipartitionMatrix BipartitionMatrix::tabulate(
    int bound, const std::function<std::int64_t(const Bipartition&, const Bipartition&)>& f) {
    BipartitionMatrix m(bound);
    const auto basis = bipartitions_up_to(bound);
    for (const auto& r : basis)
        for (const auto& c : basis) m.set(r, c, f(r, c));
    return m;
}

std::int64_t BipartitionMatrix::at(const Bipartition& row, const Bipartition& col) const {
    auto it = rows_.find(row);
    if (it == rows_.end()) return 0;
    auto jt = it->second.find(col);
    return jt == it->second.end() ? 0 : jt->second;
}

void BipartitionMatrix::set(const Bipartition& row, const Bipartition& col, std::int64_t value) {
    if (row.size() > bound_ || col.size() > bound_) return;
    if (value == 0) {
        auto it = rows_.find(row);
        if (it == rows_.end()) return;
        it->second.erase(col);
        if (it->second.empty()) rows_.erase(it);
        return;
    }
    rows_[row][col] = value;
}

void BipartitionMatrix::add(const Bipartition& row, const Bipartition& col, std::int64_t value) {
    set(row, col, at(row, col) + value);
}

const BipartitionMatrix::Row& BipartitionMatrix::row(const Bipartition& r) const {
    static const Row empty;
    auto it = rows_.find(r);
    return it == rows_.end() ? empty : it->second;
}

std::size_t BipartitionMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& [_, row] : rows_) n += row.size();
    return n;
}

BipartitionMatrix BipartitionMatrix::transposed() const {
    BipartitionMatrix t(bound_);
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row) t.rows_[c][r] = v;
    return t;
}

BipartitionMatrix BipartitionMatrix::restricted(int bound) const {
    BipartitionMatrix out(bound);
    for (const auto& [r, row] : rows_) {
        if (r.size() > bound) continue;
        for (const auto& [c, v] : row)
            if (c.size() <= bound) out.rows_[r][c] = v;
    }
    return out;
}

BipartitionMatrix operator*(const BipartitionMatrix& a, const BipartitionMatrix& b) {
    BipartitionMatrix out(std::min(a.bound_, b.bound_));
    for (const auto& [r, arow] : a.rows_) {
        BipartitionMatrix::Row acc;
        for (const auto& [k, x] : arow) {
            auto it = b.rows_.find(k);
            if (it == b.rows_.end()) continue;
            for (const auto& [c, y] : it->second) acc[c] += x * y;
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        if (!acc.empty()) out.rows_[r] = std::move(acc);
    }
    return out;
}

namespace {

BipartitionMatrix combine(const BipartitionMatrix& a, const BipartitionMatrix& b, std::int64_t sign) {
    BipartitionMatrix out = a;
    for (const auto& [r, row] : b.rows())
        for (const auto& [c, v] : row) out.add(r, c, sign * v);
    return out;
}

}  // namespace

BipartitionMatrix operator+(const BipartitionMatrix& a, const BipartitionMatrix& b) { return combine(a, b, 1); }
BipartitionMatrix operator-(const BipartitionMatrix& a, const BipartitionMatrix& b) { return combine(a, b, -1); }

bool BipartitionMatrix::is_size_lower_unitriangular() const {
    for (const auto& b : bipartitions_up_to(bound_))
        if (at(b, b) != 1) return false;
    for (const auto& [r, row] : rows_)
        for (const auto& [c, v] : row)
            if (r != c && r.size() <= c.size()) return false;
    return true;
}

BipartitionMatrix BipartitionMatrix::unitriangular_inverse() const {
    if (!is_size_lower_unitriangular())
        throw std::invalid_argument("unitriangular_inverse: matrix is not unitriangular in the size order");
    BipartitionMatrix inv(bound_);
    // Rows in increasing size order: row lambda of the inverse only needs
    // rows of strictly smaller bipartitions.
    for (const auto& lambda : bipartitions_up_to(bound_)) {
        BipartitionMatrix::Row acc;
        acc[lambda] = 1;
        for (const auto& [mu, m] : row(lambda)) {
            if (mu == lambda) continue;
            for (const auto& [nu, x] : inv.row(mu)) acc[nu] -= m * x;
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        inv.rows_[lambda] = std::move(acc);
    }
    return inv;
}

}  // namespace deligne
