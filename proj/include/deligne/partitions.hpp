#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deligne {

/// Thrown when a textual partition or bipartition cannot be parsed.
/// `token()` is the offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string message, std::string token)
        : std::invalid_argument(std::move(message)), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// A Young diagram stored as its nonzero rows in weakly decreasing order.
///
/// Rows are 1-based in the mathematical sense; `row(i)` returns 0 for any
/// i past the last stored row, so callers can treat the partition as an
/// infinite sequence with trailing zeros.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and strips them. Throws std::invalid_argument
    /// on negative entries or rows that increase.
    explicit Partition(std::vector<int> rows);
    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    const std::vector<int>& rows() const noexcept { return rows_; }

    /// Row i for i >= 1 (0 past the end).
    int row(int i) const noexcept {
        return (i >= 1 && i <= static_cast<int>(rows_.size())) ? rows_[i - 1] : 0;
    }

    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }

    Partition transpose() const;

    /// Whether every cell of `other` is a cell of this diagram.
    bool contains(const Partition& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

/// Contents of the cells that can be added to `nu`, in row order.
/// Content of the cell in row r, column c is c - r.
std::vector<int> addable_contents(const Partition& nu);
/// Contents of the removable cells of `nu`, in row order.
std::vector<int> removable_contents(const Partition& nu);

/// The unique partition in nu + box_a, if there is one.
std::optional<Partition> add_box(const Partition& nu, int content);
/// The unique partition in nu - box_a, if there is one.
std::optional<Partition> remove_box(const Partition& nu, int content);

/// +1 if a content-a box is addable, -1 if one is removable, 0 otherwise.
int n_weight(const Partition& nu, int content);

/// All partitions of n in lexicographically increasing order of rows.
std::vector<Partition> partitions_of(int n);

struct Bipartition {
    Partition black;
    Partition white;

    int size() const noexcept { return black.size() + white.size(); }

    /// (black, transpose(white)); an involution.
    Bipartition conjugate() const { return {black, white.transpose()}; }

    std::string to_string() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    /// Total order used everywhere output is sorted: total size first, then
    /// black rows, then white rows, both lexicographically.
    friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        if (auto c = a.black <=> b.black; c != 0) return c;
        return a.white <=> b.white;
    }
};

enum class BoxMove { BlackAdd, BlackRemove, WhiteAdd, WhiteRemove };

/// lambda +/- (black or white) box of the given content. A content of
/// std::nullopt stands for a non-integer content and always yields {}.
std::vector<Bipartition> bipartition_neighbors(const Bipartition& lambda, std::optional<int> content,
                                               BoxMove kind);

/// All bipartitions with |black| + |white| <= max_size, sorted by the
/// Bipartition ordering.
std::vector<Bipartition> bipartitions_up_to(int max_size);

Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

}  // namespace deligne
